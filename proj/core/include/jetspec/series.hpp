#pragma once

// Truncated power series in monomial form: c[j] is the coefficient of h^j.
// Every routine truncates at the order implied by its output length.

#include <algorithm>
#include <cmath>
#include <vector>

#include "jetspec/errors.hpp"
#include "jetspec/scalar.hpp"

namespace jetspec::series {

template <Field T>
using Coeffs = std::vector<T>;

template <Field T>
T factorial(int j) {
  if constexpr (is_exact_v<T>) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(j));
    return GaussRational(mpq_class(f), mpq_class(0));
  } else {
    return Complex(std::tgamma(static_cast<double>(j) + 1.0), 0.0);
  }
}

template <Field T>
Coeffs<T> truncate(Coeffs<T> a, int n) {
  a.resize(static_cast<std::size_t>(n) + 1, T(0));
  return a;
}

template <Field T>
Coeffs<T> add(const Coeffs<T>& a, const Coeffs<T>& b) {
  Coeffs<T> c(std::max(a.size(), b.size()), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return c;
}

template <Field T>
Coeffs<T> mul(const Coeffs<T>& a, const Coeffs<T>& b) {
  const std::size_t len = std::min(a.size(), b.size());
  Coeffs<T> c(len, T(0));
  for (std::size_t i = 0; i < len; ++i) {
    if constexpr (is_exact_v<T>) {
      if (a[i].is_zero()) continue;
    }
    for (std::size_t j = 0; i + j < len; ++j) c[i + j] += a[i] * b[j];
  }
  return c;
}

// 1/a; the caller guarantees a[0] != 0.
template <Field T>
Coeffs<T> reciprocal(const Coeffs<T>& a) {
  Coeffs<T> r(a.size(), T(0));
  const T inv0 = T(1) / a[0];
  r[0] = inv0;
  for (std::size_t k = 1; k < a.size(); ++k) {
    T s(0);
    for (std::size_t j = 1; j <= k; ++j) s += a[j] * r[k - j];
    r[k] = -(s * inv0);
  }
  return r;
}

// outer(inner(h)) where inner[0] is ignored (treated as the expansion point
// of outer).
template <Field T>
Coeffs<T> compose(const Coeffs<T>& outer, const Coeffs<T>& inner) {
  const std::size_t len = std::min(outer.size(), inner.size());
  Coeffs<T> h(inner.begin(), inner.begin() + static_cast<std::ptrdiff_t>(len));
  h[0] = T(0);
  Coeffs<T> acc(len, T(0));
  for (std::size_t j = len; j-- > 0;) {
    acc = mul(acc, h);
    acc[0] += outer[j];
  }
  return acc;
}

// Taylor coefficients of the polynomial p (lowest degree first) at z.
template <Field T>
Coeffs<T> polynomial_at(const Coeffs<T>& p, const T& z, int n) {
  Coeffs<T> acc(static_cast<std::size_t>(n) + 1, T(0));
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    // acc = acc * (z + h) + c
    Coeffs<T> next(acc.size(), T(0));
    for (std::size_t i = 0; i < acc.size(); ++i) {
      next[i] += acc[i] * z;
      if (i + 1 < acc.size()) next[i + 1] += acc[i];
    }
    next[0] += *it;
    acc = std::move(next);
  }
  return acc;
}

inline Coeffs<Complex> exp(const Coeffs<Complex>& a) {
  Coeffs<Complex> b(a.size(), 0.0);
  b[0] = std::exp(a[0]);
  for (std::size_t k = 1; k < a.size(); ++k) {
    Complex s(0.0);
    for (std::size_t j = 1; j <= k; ++j) s += static_cast<double>(j) * a[j] * b[k - j];
    b[k] = s / static_cast<double>(k);
  }
  return b;
}

// Principal branch; the caller guarantees a[0] != 0.
inline Coeffs<Complex> log(const Coeffs<Complex>& a) {
  Coeffs<Complex> b(a.size(), 0.0);
  b[0] = std::log(a[0]);
  for (std::size_t k = 1; k < a.size(); ++k) {
    Complex s(0.0);
    for (std::size_t j = 1; j < k; ++j) s += static_cast<double>(j) * b[j] * a[k - j];
    b[k] = (a[k] - s / static_cast<double>(k)) / a[0];
  }
  return b;
}

}  // namespace jetspec::series
