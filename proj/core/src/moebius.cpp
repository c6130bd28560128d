#include "jetspec/moebius.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace jetspec {

namespace {

double squared_magnitude(const Complex& z) { return std::norm(z); }
double squared_magnitude(const GaussRational& z) { return z.norm().get_d(); }

template <Field T>
bool on_hyperboloid(const T& alpha, const T& beta) {
  if constexpr (is_exact_v<T>) {
    return alpha.norm() - beta.norm() == 1;
  } else {
    const double a2 = std::norm(alpha);
    return std::abs(a2 - std::norm(beta) - 1.0) <= 1e-12 * std::max(1.0, a2);
  }
}

}  // namespace

template <Field T>
GroupElement<T>::GroupElement(T alpha, T beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (!on_hyperboloid(alpha_, beta_)) {
    throw PreconditionViolation("not an SU(1,1) element: |alpha|^2 - |beta|^2 = " +
                                std::to_string(squared_magnitude(alpha_) - squared_magnitude(beta_)));
  }
}

template <Field T>
double GroupElement<T>::determinant_defect() const {
  if constexpr (is_exact_v<T>) {
    return std::abs(mpq_class(alpha_.norm() - beta_.norm() - 1).get_d());
  } else {
    return std::abs(std::norm(alpha_) - std::norm(beta_) - 1.0);
  }
}

template <Field T>
GroupElement<T> compose(const GroupElement<T>& g1, const GroupElement<T>& g2) {
  // [a1 b1'; b1 a1'] [a2 b2'; b2 a2'] with ' = conjugate; read off column one.
  T alpha = g1.alpha() * g2.alpha() + conj(g1.beta()) * g2.beta();
  T beta = g1.beta() * g2.alpha() + conj(g1.alpha()) * g2.beta();
  return GroupElement<T>::unchecked(std::move(alpha), std::move(beta));
}

template <Field T>
DiskPoint<T>::DiskPoint(T z) : z_(std::move(z)) {
  if (!inside_unit_disk(z_)) {
    throw PreconditionViolation("point " + format_complex(to_complex(z_)) + " is not inside the unit disk");
  }
}

template <Field T>
KDDecomposition<T> decompose(const GroupElement<T>& g) {
  return {std::arg(to_complex(g.alpha())), conj(g.beta()) / g.alpha()};
}

GroupElement<Complex> reassemble(double omega, Complex u) {
  if (std::norm(u) >= 1.0) throw PreconditionViolation("decomposition parameter u must satisfy |u| < 1");
  const Complex alpha = std::polar(1.0 / std::sqrt(1.0 - std::norm(u)), omega);
  return GroupElement<Complex>::unchecked(alpha, std::conj(alpha * u));
}

template <Field T>
DiskPoint<T> mobius_disk(const GroupElement<T>& g, const DiskPoint<T>& z) {
  const T& w = z.value();
  return DiskPoint<T>((conj(g.alpha()) * w - conj(g.beta())) / (g.alpha() - g.beta() * w));
}

void require_inside_disk(const FloatMatrix& a, const Tolerances& tol, double margin) {
  const double r = spectral_radius(a, tol);
  if (!(r < 1.0 - margin)) {
    throw PreconditionViolation("spectral radius " + std::to_string(r) + " is not inside the unit disk");
  }
}

template <Field T>
Matrix<T> resolvent(const GroupElement<T>& g, const Matrix<T>& a, const Tolerances& tol) {
  if (!a.is_square()) throw DimensionMismatch("resolvent: matrix is not square");
  require_inside_disk(to_float(a), tol);
  Matrix<T> m = Matrix<T>::identity(a.dim()) * g.alpha();
  m -= a * g.beta();
  return mat_inverse(m, tol);
}

template <Field T>
Matrix<T> mobius_algebra(const GroupElement<T>& g, const Matrix<T>& a, const Tolerances& tol) {
  Matrix<T> num = a * conj(g.alpha());
  num -= Matrix<T>::identity(a.dim()) * conj(g.beta());
  return mat_mul(num, resolvent(g, a, tol));
}

template <Field T>
Matrix<T> rho_a_apply(const GroupElement<T>& g, const AlgebraFunction<T>& f, const Matrix<T>& b,
                      const Tolerances& tol) {
  return mat_mul(resolvent(g, b, tol), f(mobius_algebra(g, b, tol)));
}

template <Field T>
Matrix<T> coherent_state(const DiskPoint<T>& u, const Matrix<T>& a, const Matrix<T>& m, const Tolerances& tol) {
  if (!a.is_square()) throw DimensionMismatch("coherent_state: matrix is not square");
  Matrix<T> shifted = Matrix<T>::identity(a.dim()) * u.value();
  shifted -= a;
  return mat_mul(mat_inverse(shifted, tol), m);
}

GroupElement<Complex> random_group_element(std::mt19937_64& rng, double max_u) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = max_u * std::sqrt(unit(rng));
  const double phi = 2.0 * std::numbers::pi * unit(rng);
  const double omega = 2.0 * std::numbers::pi * unit(rng);
  return reassemble(omega, std::polar(r, phi));
}

#define JETSPEC_INSTANTIATE(T)                                                                          \
  template class GroupElement<T>;                                                                       \
  template class DiskPoint<T>;                                                                          \
  template GroupElement<T> compose(const GroupElement<T>&, const GroupElement<T>&);                    \
  template KDDecomposition<T> decompose(const GroupElement<T>&);                                        \
  template DiskPoint<T> mobius_disk(const GroupElement<T>&, const DiskPoint<T>&);                      \
  template Matrix<T> mobius_algebra(const GroupElement<T>&, const Matrix<T>&, const Tolerances&);      \
  template Matrix<T> resolvent(const GroupElement<T>&, const Matrix<T>&, const Tolerances&);           \
  template Matrix<T> rho_a_apply(const GroupElement<T>&, const AlgebraFunction<T>&, const Matrix<T>&, \
                                 const Tolerances&);                                                    \
  template Matrix<T> coherent_state(const DiskPoint<T>&, const Matrix<T>&, const Matrix<T>&,           \
                                    const Tolerances&);

JETSPEC_INSTANTIATE(GaussRational)
JETSPEC_INSTANTIATE(Complex)

#undef JETSPEC_INSTANTIATE

}  // namespace jetspec
