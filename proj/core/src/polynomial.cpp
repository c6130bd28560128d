#include "jetspec/polynomial.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>

namespace jetspec {

template <Field T>
std::vector<T> characteristic_polynomial(const Matrix<T>& a) {
  if (!a.is_square()) throw DimensionMismatch("characteristic_polynomial: matrix is not square");
  const std::size_t n = a.dim();

  // p holds det(zI - A_r) for the leading r x r block, highest degree first.
  std::vector<T> p{T(1)};
  for (std::size_t r = 0; r < n; ++r) {
    // First column of the Toeplitz update: 1, -a_rr, -R C, -R M C, ...
    std::vector<T> col(r + 2, T(0));
    col[0] = T(1);
    col[1] = -a(r, r);
    std::vector<T> v(r);  // M^j C, starting with C
    for (std::size_t i = 0; i < r; ++i) v[i] = a(i, r);
    for (std::size_t j = 0; j < r; ++j) {
      T rv(0);
      for (std::size_t i = 0; i < r; ++i) rv += a(r, i) * v[i];
      col[j + 2] = -rv;
      if (j + 1 < r) {
        std::vector<T> next(r, T(0));
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t k = 0; k < r; ++k) next[i] += a(i, k) * v[k];
        v = std::move(next);
      }
    }
    std::vector<T> q(r + 2, T(0));
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) q[i] += col[i - j] * p[j];
    p = std::move(q);
  }
  return {p.rbegin(), p.rend()};
}

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

// Value, derivative, and the running-error scale sum |c_k| |z|^k.
struct HornerResult {
  Complex p;
  Complex dp;
  double scale;
};

HornerResult horner(std::span<const Complex> c, Complex z) {
  Complex p(0.0), dp(0.0);
  double scale = 0.0;
  const double az = std::abs(z);
  for (auto it = c.rbegin(); it != c.rend(); ++it) {
    dp = dp * z + p;
    p = p * z + *it;
    scale = scale * az + std::abs(*it);
  }
  return {p, dp, scale};
}

std::vector<Complex> derivative(std::span<const Complex> c) {
  std::vector<Complex> d;
  for (std::size_t k = 1; k < c.size(); ++k) d.push_back(static_cast<double>(k) * c[k]);
  return d;
}

// An m-fold root of p is a simple root of p^(m-1). The mean of a perturbed
// cluster is only accurate to about eps^(1/m); Newton on p^(m-1) from the
// mean recovers it to rounding level.
Complex refine_multiple_root(std::span<const Complex> c, Complex start, int m) {
  std::vector<Complex> d(c.begin(), c.end());
  for (int i = 0; i + 1 < m; ++i) d = derivative(d);
  if (d.size() < 2) return start;
  Complex z = start;
  double last_step = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < 50; ++iter) {
    const auto h = horner(d, z);
    if (h.dp == Complex(0.0)) break;
    const Complex step = h.p / h.dp;
    const double size = std::abs(step);
    // Stop once the iteration stalls at rounding level or starts to wander.
    if (!std::isfinite(size) || size >= last_step) break;
    z -= step;
    last_step = size;
    if (size <= 4.0 * kEps * std::max(1.0, std::abs(z))) break;
  }
  return std::abs(z - start) <= 1e-2 * std::max(1.0, std::abs(start)) ? z : start;
}

}  // namespace

std::vector<Complex> aberth_roots(std::span<const Complex> coeffs, const AberthOptions& opts) {
  std::size_t degree = coeffs.size();
  while (degree > 0 && coeffs[degree - 1] == Complex(0.0)) --degree;
  if (degree == 0) throw PreconditionViolation("aberth_roots: zero polynomial");
  const std::size_t n = degree - 1;
  const auto c = coeffs.first(degree);
  if (n == 0) return {};
  if (n == 1) return {-c[0] / c[1]};

  const Complex lead = c[n];
  const Complex center = -c[n - 1] / (static_cast<double>(n) * lead);
  // Fujiwara-type bound on the root modulus about the origin.
  double radius = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    radius = std::max(radius, std::pow(std::abs(c[n - k] / lead), 1.0 / static_cast<double>(k)));
  }
  radius = std::max(2.0 * radius, 1e-3);

  std::vector<Complex> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n) + 0.4;
    z[k] = center + 0.5 * radius * std::polar(1.0, theta);
  }

  std::vector<bool> done(n, false);
  const double gamma = 4.0 * static_cast<double>(n) * kEps;
  for (int iter = 0; iter < opts.max_iter; ++iter) {
    bool all_done = true;
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i]) continue;
      const auto h = horner(c, z[i]);
      if (std::abs(h.p) <= gamma * h.scale) {
        done[i] = true;
        continue;
      }
      all_done = false;
      const Complex ratio = h.p / h.dp;
      Complex s(0.0);
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) s += 1.0 / (z[i] - z[j]);
      }
      const Complex w = ratio / (1.0 - ratio * s);
      if (!std::isfinite(w.real()) || !std::isfinite(w.imag())) {
        throw ConvergenceFailure("aberth_roots: non-finite correction");
      }
      z[i] -= w;
      if (std::abs(w) <= 2.0 * kEps * std::abs(z[i])) done[i] = true;
    }
    if (all_done) return z;
  }
  throw ConvergenceFailure("aberth_roots: no convergence after " + std::to_string(opts.max_iter) +
                           " iterations");
}

std::vector<RootCluster> cluster_roots(std::span<const Complex> coeffs, std::span<const Complex> roots,
                                       double radius) {
  const std::size_t n = roots.size();
  std::size_t degree = coeffs.size();
  while (degree > 0 && coeffs[degree - 1] == Complex(0.0)) --degree;
  const auto c = coeffs.first(degree);
  const double lead = degree > 0 ? std::abs(c[degree - 1]) : 1.0;

  std::vector<double> disc(n, 0.0);
  const double gamma = 4.0 * static_cast<double>(n) * kEps;
  for (std::size_t i = 0; i < n; ++i) {
    const auto h = horner(c, roots[i]);
    double denom = lead;
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) denom *= std::abs(roots[i] - roots[j]);
    }
    const double num = static_cast<double>(n) * (std::abs(h.p) + gamma * h.scale);
    disc[i] = denom > 0.0 ? num / denom : std::numeric_limits<double>::infinity();
  }

  // Union-find over the "close or overlapping" relation.
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double d = std::abs(roots[i] - roots[j]);
      if (d <= radius || d <= disc[i] + disc[j]) parent[find(i)] = find(j);
    }
  }

  std::vector<RootCluster> out;
  std::vector<std::size_t> slot(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find(i);
    if (slot[r] == n) {
      slot[r] = out.size();
      out.push_back({Complex(0.0), 0});
    }
    auto& cl = out[slot[r]];
    cl.value += roots[i];
    ++cl.multiplicity;
  }
  for (auto& cl : out) {
    cl.value /= static_cast<double>(cl.multiplicity);
    if (cl.multiplicity > 1) cl.value = refine_multiple_root(c, cl.value, cl.multiplicity);
  }
  return out;
}

template std::vector<GaussRational> characteristic_polynomial(const Matrix<GaussRational>&);
template std::vector<Complex> characteristic_polynomial(const Matrix<Complex>&);

}  // namespace jetspec
