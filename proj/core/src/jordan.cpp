#include "jetspec/jordan.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace jetspec {

template <Field T>
Matrix<T> jordan_block(const T& lambda, int length) {
  if (length < 1) throw PreconditionViolation("Jordan block length must be positive");
  const auto n = static_cast<std::size_t>(length);
  Matrix<T> j(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, i) = lambda;
    if (i + 1 < n) j(i, i + 1) = T(1);
  }
  return j;
}

namespace {

template <Field T>
void check_transform(const JordanSpec<T>& spec) {
  if (!spec.transform) return;
  const auto& p = *spec.transform;
  if (!p.is_square() || p.dim() != spec.dimension()) {
    throw PreconditionViolation("similarity transform must be " + std::to_string(spec.dimension()) + "x" +
                                std::to_string(spec.dimension()));
  }
}

template <Field T>
Matrix<T> conjugate(const Matrix<T>& p, const Matrix<T>& j, const Tolerances& tol) {
  return mat_mul(mat_mul(p, j), mat_inverse(p, tol));
}

}  // namespace

template <Field T>
Matrix<T> build_matrix(const JordanSpec<T>& spec, const Tolerances& tol) {
  check_transform(spec);
  std::vector<Matrix<T>> blocks;
  blocks.reserve(spec.blocks.size());
  for (const auto& b : spec.blocks) blocks.push_back(jordan_block(b.value, b.length));
  Matrix<T> j = direct_sum<T>(blocks);
  if (spec.transform) return conjugate(*spec.transform, j, tol);
  return j;
}

template <Field T>
std::vector<std::size_t> weyr_sequence(const Matrix<T>& a, const T& lambda, const Tolerances& tol) {
  if (!a.is_square()) throw DimensionMismatch("weyr_sequence: matrix is not square");
  const std::size_t n = a.dim();
  Matrix<T> shifted = a;
  for (std::size_t i = 0; i < n; ++i) shifted(i, i) -= lambda;

  std::vector<std::size_t> w;
  std::size_t prev = 0;
  Matrix<T> power = Matrix<T>::identity(n);
  for (std::size_t j = 1; j <= n; ++j) {
    power = mat_mul(power, shifted);
    const std::size_t dim = kernel_dim(power, tol);
    if (dim <= prev) break;
    const std::size_t step = dim - prev;
    if (!w.empty() && step > w.back()) {
      throw NumericError("weyr_sequence: kernel growth is not monotone (numerical rank is unreliable)");
    }
    w.push_back(step);
    prev = dim;
  }
  return w;
}

std::vector<int> segre_from_weyr(const std::vector<std::size_t>& weyr) {
  std::vector<int> segre(weyr.empty() ? 0 : weyr.front(), 0);
  for (std::size_t count : weyr) {
    for (std::size_t i = 0; i < count && i < segre.size(); ++i) ++segre[i];
  }
  return segre;
}

std::vector<std::size_t> weyr_from_segre(const std::vector<int>& segre) {
  int longest = 0;
  for (int k : segre) longest = std::max(longest, k);
  std::vector<std::size_t> weyr(static_cast<std::size_t>(longest), 0);
  for (int k : segre)
    for (int j = 0; j < k; ++j) ++weyr[static_cast<std::size_t>(j)];
  return weyr;
}

std::vector<RootCluster> find_eigenvalues(const FloatMatrix& a, const Tolerances& tol) {
  if (!a.is_square()) throw DimensionMismatch("find_eigenvalues: matrix is not square");
  if (a.dim() == 0) return {};
  const auto coeffs = characteristic_polynomial(a);
  const auto roots = aberth_roots(coeffs);
  return cluster_roots(coeffs, roots, tol.eigen);
}

double spectral_radius(const FloatMatrix& a, const Tolerances& tol) {
  double r = 0.0;
  for (const auto& c : find_eigenvalues(a, tol)) r = std::max(r, std::abs(c.value));
  return r;
}

template <Field T>
Spectrum<T> spectrum(const Matrix<T>& a, const std::optional<std::vector<T>>& eigenvalues,
                     const Tolerances& tol) {
  if (!a.is_square()) throw DimensionMismatch("spectrum: matrix is not square");
  const std::size_t n = a.dim();

  std::vector<T> candidates;
  std::vector<int> expected;  // algebraic multiplicities when known
  if (eigenvalues) {
    for (const auto& v : *eigenvalues) {
      const bool seen = std::any_of(candidates.begin(), candidates.end(),
                                    [&](const T& c) { return approx_equal(c, v, tol.equal); });
      if (!seen) candidates.push_back(v);
    }
  } else if constexpr (is_exact_v<T>) {
    throw PreconditionViolation("spectrum: the exact backend needs the eigenvalue list");
  } else {
    for (const auto& c : find_eigenvalues(a, tol)) {
      candidates.push_back(c.value);
      expected.push_back(c.multiplicity);
    }
  }

  Spectrum<T> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto segre = segre_from_weyr(weyr_sequence(a, candidates[i], tol));
    int total = 0;
    for (int k : segre) {
      out.points.push_back({candidates[i], k, {}});
      total += k;
    }
    if (!expected.empty() && total != expected[i]) {
      throw NumericError("spectrum: Jordan analysis at " + format_complex(to_complex(candidates[i])) +
                         " found total order " + std::to_string(total) + " for algebraic multiplicity " +
                         std::to_string(expected[i]));
    }
  }
  if (out.total_order() != n) {
    throw NumericError("spectrum: eigenvalues account for " + std::to_string(out.total_order()) + " of " +
                       std::to_string(n) + " dimensions");
  }
  canonical_order(out);
  return out;
}

template <Field T>
Spectrum<T> structural_spectrum(const JordanSpec<T>& spec, const Tolerances& tol) {
  check_transform(spec);
  for (const auto& b : spec.blocks) {
    if (b.length < 1) throw PreconditionViolation("Jordan block length must be positive");
  }

  // Distinct eigenvalues in order of first appearance.
  std::vector<std::size_t> group(spec.blocks.size());
  std::vector<std::size_t> representative;
  for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
    std::size_t g = 0;
    while (g < representative.size() &&
           !approx_equal(spec.blocks[representative[g]].value, spec.blocks[i].value, tol.equal)) {
      ++g;
    }
    if (g == representative.size()) representative.push_back(i);
    group[i] = g;
  }

  std::optional<ExactMatrix> p, p_inv;
  if (spec.transform) {
    if constexpr (is_exact_v<T>) {
      p = *spec.transform;
    } else {
      p = to_exact(*spec.transform);
    }
    p_inv = mat_inverse(*p);
  }

  Spectrum<T> out;
  for (std::size_t g = 0; g < representative.size(); ++g) {
    std::vector<ExactMatrix> blocks;
    for (std::size_t i = 0; i < spec.blocks.size(); ++i) {
      const GaussRational shift = group[i] == g ? GaussRational(0) : GaussRational(1);
      blocks.push_back(jordan_block(shift, spec.blocks[i].length));
    }
    ExactMatrix shifted = direct_sum<GaussRational>(blocks);
    if (p) shifted = mat_mul(mat_mul(*p, shifted), *p_inv);
    const auto& rep = spec.blocks[representative[g]];
    for (int k : segre_from_weyr(weyr_sequence(shifted, GaussRational(0)))) {
      out.points.push_back({rep.value, k, rep.label});
    }
  }
  canonical_order(out);
  return out;
}

namespace {

// -1, 0, 1 comparison of |a| against |b|.
int compare_abs(const GaussRational& a, const GaussRational& b, double) {
  const int c = cmp(a.norm(), b.norm());
  return (c > 0) - (c < 0);
}
int compare_abs(const Complex& a, const Complex& b, double tol) {
  const double x = std::abs(a), y = std::abs(b);
  if (std::abs(x - y) <= tol * std::max(1.0, std::max(x, y))) return 0;
  return x < y ? -1 : 1;
}

// Position class along arg in (-pi, pi]: lower half, arg 0 (and the origin),
// upper half, arg pi.
int arg_class(int re_sign, int im_sign) {
  if (im_sign < 0) return 0;
  if (im_sign == 0 && re_sign >= 0) return 1;
  if (im_sign > 0) return 2;
  return 3;
}

int compare_arg(const GaussRational& a, const GaussRational& b, double) {
  const int ca = arg_class(sgn(a.re()), sgn(a.im()));
  const int cb = arg_class(sgn(b.re()), sgn(b.im()));
  if (ca != cb) return ca < cb ? -1 : 1;
  if (ca == 1 || ca == 3) return 0;
  const int cross = sgn(mpq_class(a.re() * b.im() - a.im() * b.re()));
  return -cross;  // cross > 0 means arg a < arg b
}
int compare_arg(const Complex& a, const Complex& b, double tol) {
  const double x = std::arg(a), y = std::arg(b);
  if (std::abs(x - y) <= tol) return 0;
  return x < y ? -1 : 1;
}

}  // namespace

template <Field T>
void canonical_order(Spectrum<T>& s) {
  constexpr double tol = 1e-12;
  std::stable_sort(s.points.begin(), s.points.end(), [](const SpectrumPoint<T>& a, const SpectrumPoint<T>& b) {
    if (int c = compare_abs(a.lambda, b.lambda, tol); c != 0) return c > 0;
    if (int c = compare_arg(a.lambda, b.lambda, tol); c != 0) return c < 0;
    return a.k > b.k;
  });
}

template <Field T>
bool same_multiset(const Spectrum<T>& a, const Spectrum<T>& b, const Tolerances& tol) {
  if (a.points.size() != b.points.size()) return false;
  std::vector<bool> used(b.points.size(), false);
  for (const auto& p : a.points) {
    bool matched = false;
    for (std::size_t j = 0; j < b.points.size() && !matched; ++j) {
      if (!used[j] && b.points[j].k == p.k && approx_equal(b.points[j].lambda, p.lambda, tol.eigen)) {
        used[j] = true;
        matched = true;
      }
    }
    if (!matched) return false;
  }
  return true;
}

#define JETSPEC_INSTANTIATE(T)                                                                     \
  template Matrix<T> jordan_block(const T&, int);                                                  \
  template Matrix<T> build_matrix(const JordanSpec<T>&, const Tolerances&);                       \
  template std::vector<std::size_t> weyr_sequence(const Matrix<T>&, const T&, const Tolerances&); \
  template Spectrum<T> spectrum(const Matrix<T>&, const std::optional<std::vector<T>>&,            \
                                const Tolerances&);                                                \
  template Spectrum<T> structural_spectrum(const JordanSpec<T>&, const Tolerances&);              \
  template void canonical_order(Spectrum<T>&);                                                     \
  template bool same_multiset(const Spectrum<T>&, const Spectrum<T>&, const Tolerances&);

JETSPEC_INSTANTIATE(GaussRational)
JETSPEC_INSTANTIATE(Complex)

#undef JETSPEC_INSTANTIATE

}  // namespace jetspec
