#pragma once

// SU(1,1) acting on the unit disk and on matrices with spectrum in the disk.
//
// Convention. A group element (alpha, beta) with |alpha|^2 - |beta|^2 = 1 is
// the matrix
//
//     g = [ alpha  conj(beta) ]      g^-1 = [ conj(alpha)  -conj(beta) ]
//         [ beta   conj(alpha)]             [ -beta         alpha      ]
//
// Every "apply" operation below takes g and evaluates the linear-fractional
// map of g^-1:
//
//     mobius_disk(g, z)    = (conj(alpha) z - conj(beta)) / (alpha - beta z)
//     mobius_algebra(g, a) = (conj(alpha) a - conj(beta) e)(alpha e - beta a)^-1
//     resolvent(g, a)      = (alpha e - beta a)^-1
//
// so mobius_disk(g1 g2, z) == mobius_disk(g2, mobius_disk(g1, z)). The left
// action g.a := mobius_algebra(inverse(g), a) satisfies g1.(g2.a) = (g1 g2).a.
// With this convention the resolvent is a cocycle:
//
//     R(g1, a) R(g2, mobius_algebra(g1, a)) == R(g1 g2, a).
//
// The same 2x2 matrix also appears with -beta in the lower-left corner in some
// texts; that variant is not closed under multiplication together with the
// inverse above, so it is not used.

#include <functional>
#include <random>

#include "jetspec/jordan.hpp"
#include "jetspec/matrix.hpp"

namespace jetspec {

template <Field T>
class GroupElement {
public:
  // Throws PreconditionViolation unless |alpha|^2 - |beta|^2 = 1 (exactly, or
  // within 1e-12 relative to |alpha|^2 for the float backend).
  GroupElement(T alpha, T beta);

  static GroupElement identity() { return unchecked(T(1), T(0)); }
  // Skips validation; products of valid elements drift only by rounding.
  static GroupElement unchecked(T alpha, T beta) {
    GroupElement g;
    g.alpha_ = std::move(alpha);
    g.beta_ = std::move(beta);
    return g;
  }

  const T& alpha() const noexcept { return alpha_; }
  const T& beta() const noexcept { return beta_; }

  GroupElement inverse() const { return unchecked(conj(alpha_), -beta_); }

  // | |alpha|^2 - |beta|^2 - 1 |
  double determinant_defect() const;

private:
  GroupElement() = default;
  T alpha_{1};
  T beta_{0};
};

template <Field T>
GroupElement<T> compose(const GroupElement<T>& g1, const GroupElement<T>& g2);

template <Field T>
class DiskPoint {
public:
  explicit DiskPoint(T z);  // throws PreconditionViolation unless |z| < 1
  const T& value() const noexcept { return z_; }

private:
  T z_;
};

// g = (1/sqrt(1-|u|^2)) diag(e^{i omega}, e^{-i omega}) [1 u; conj(u) 1]
template <Field T>
struct KDDecomposition {
  double omega = 0.0;  // arg alpha
  T u;                 // conj(beta) / alpha
};

template <Field T>
KDDecomposition<T> decompose(const GroupElement<T>& g);

GroupElement<Complex> reassemble(double omega, Complex u);
inline GroupElement<Complex> reassemble(const KDDecomposition<Complex>& kd) { return reassemble(kd.omega, kd.u); }

template <Field T>
DiskPoint<T> mobius_disk(const GroupElement<T>& g, const DiskPoint<T>& z);

// Requires spectral radius of a below 1 - margin; throws PreconditionViolation
// otherwise and SingularMatrix if alpha e - beta a still fails to invert.
template <Field T>
Matrix<T> mobius_algebra(const GroupElement<T>& g, const Matrix<T>& a, const Tolerances& tol = {});

// Left action: g.a = mobius_algebra(g^-1, a).
template <Field T>
Matrix<T> act(const GroupElement<T>& g, const Matrix<T>& a, const Tolerances& tol = {}) {
  return mobius_algebra(g.inverse(), a, tol);
}

template <Field T>
Matrix<T> resolvent(const GroupElement<T>& g, const Matrix<T>& a, const Tolerances& tol = {});

template <Field T>
using AlgebraFunction = std::function<Matrix<T>(const Matrix<T>&)>;

// [rho_a(g) F](b) = R(g, b) F(mobius_algebra(g, b))
template <Field T>
Matrix<T> rho_a_apply(const GroupElement<T>& g, const AlgebraFunction<T>& f, const Matrix<T>& b,
                      const Tolerances& tol = {});

template <Field T>
AlgebraFunction<T> rho_a(const GroupElement<T>& g, AlgebraFunction<T> f, const Tolerances& tol = {}) {
  return [g, f = std::move(f), tol](const Matrix<T>& b) { return rho_a_apply(g, f, b, tol); };
}

// v_m(u, a) = (u e - a)^-1 m. m may be a square module element or a column.
// Throws SingularMatrix when u lies in the spectrum of a.
template <Field T>
Matrix<T> coherent_state(const DiskPoint<T>& u, const Matrix<T>& a, const Matrix<T>& m,
                         const Tolerances& tol = {});

// u uniform on |u| <= max_u, omega uniform on [0, 2 pi), reassembled.
GroupElement<Complex> random_group_element(std::mt19937_64& rng, double max_u = 0.9);

// Throws PreconditionViolation unless spectral radius < 1 - margin.
void require_inside_disk(const FloatMatrix& a, const Tolerances& tol = {}, double margin = 1e-9);

}  // namespace jetspec
