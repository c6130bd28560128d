#pragma once

// Scalar field backends.
//
// Two backends share one generic interface:
//   GaussRational  exact p/q + (r/s)i with GMP rationals; equality is decidable
//   Complex        std::complex<double>; equality is an epsilon comparison
//
// Generic code uses the free functions below (conj, is_zero, approx_equal,
// to_complex, magnitude) and never compares floats bitwise.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <concepts>
#include <string>
#include <string_view>

namespace jetspec {

using Complex = std::complex<double>;

class GaussRational {
public:
  GaussRational() = default;
  GaussRational(long value) : re_(value), im_(0) {}  // NOLINT(google-explicit-constructor)
  GaussRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  // Exact: every finite double is a dyadic rational.
  static GaussRational from_complex(Complex z);

  // Accepts "p/q", integers and decimal strings ("0.25", "-1.5e-3").
  static mpq_class parse_rational(std::string_view text);

  const mpq_class& re() const noexcept { return re_; }
  const mpq_class& im() const noexcept { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  // |z|^2, exact
  mpq_class norm() const { return mpq_class(re_ * re_ + im_ * im_); }

  Complex to_complex() const { return {re_.get_d(), im_.get_d()}; }
  std::string to_string() const;

  GaussRational& operator+=(const GaussRational& o);
  GaussRational& operator-=(const GaussRational& o);
  GaussRational& operator*=(const GaussRational& o);
  GaussRational& operator/=(const GaussRational& o);

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend GaussRational operator-(const GaussRational& a) { return {mpq_class(-a.re_), mpq_class(-a.im_)}; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

inline GaussRational conj(const GaussRational& z) { return {z.re(), mpq_class(-z.im())}; }

template <class T>
concept Field = std::same_as<T, GaussRational> || std::same_as<T, Complex>;

template <class T>
inline constexpr bool is_exact_v = std::same_as<T, GaussRational>;

// Tolerances of the float backend. The exact backend ignores them.
struct Tolerances {
  double rank = 1e-9;    // numerical rank, relative to the largest singular value
  double eigen = 1e-7;   // eigenvalue clustering radius
  double degree = 1e-9;  // zero test for jet coefficients
  double equal = 1e-12;  // scalar equality
};

inline Complex to_complex(const Complex& z) { return z; }
inline Complex to_complex(const GaussRational& z) { return z.to_complex(); }

inline double magnitude(const Complex& z) { return std::abs(z); }
inline double magnitude(const GaussRational& z) { return std::sqrt(z.norm().get_d()); }

inline bool is_zero(const Complex& z, double tol) { return std::abs(z) <= tol; }
inline bool is_zero(const GaussRational& z, double /*tol*/) { return z.is_zero(); }

inline bool approx_equal(const Complex& a, const Complex& b, double tol) {
  return std::abs(a - b) <= tol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}
inline bool approx_equal(const GaussRational& a, const GaussRational& b, double /*tol*/) {
  return a == b;
}

// Strict |z| < 1, exact for GaussRational.
inline bool inside_unit_disk(const Complex& z) { return std::norm(z) < 1.0; }
inline bool inside_unit_disk(const GaussRational& z) { return z.norm() < 1; }

template <Field T>
T from_complex(Complex z) {
  if constexpr (is_exact_v<T>) {
    return GaussRational::from_complex(z);
  } else {
    return z;
  }
}

std::string format_complex(Complex z, int significant_digits = 12);

}  // namespace jetspec
