#pragma once

// n-jets: (z, u, u_1, ..., u_n) with u_j the j-th derivative at the base
// point z (not divided by j!). Products and compositions convert to monomial
// Taylor coefficients u_j / j! internally.

#include <vector>

#include "jetspec/holo_function.hpp"
#include "jetspec/moebius.hpp"

namespace jetspec {

template <Field T>
class Jet {
public:
  Jet(T base, std::vector<T> derivatives);

  static Jet from_taylor(T base, const series::Coeffs<T>& taylor);

  const T& base() const noexcept { return base_; }
  int order() const noexcept { return static_cast<int>(derivatives_.size()) - 1; }
  const std::vector<T>& derivatives() const noexcept { return derivatives_; }
  const T& value() const { return derivatives_.front(); }

  series::Coeffs<T> taylor() const;

private:
  T base_;
  std::vector<T> derivatives_;
};

template <Field T>
bool approx_equal(const Jet<T>& a, const Jet<T>& b, double tol);

// j_n f(z) = (f(z), f'(z), ..., f^(n)(z)). Throws PoleError.
template <Field T>
Jet<T> jet_of(const HoloFunction<T>& f, const T& z, int n);

// Same base and order required (PreconditionViolation otherwise).
template <Field T>
Jet<T> jet_add(const Jet<T>& p, const Jet<T>& q, const Tolerances& tol = {});

template <Field T>
Jet<T> jet_mul(const Jet<T>& p, const Jet<T>& q, const Tolerances& tol = {});

// outer is a jet at w0, inner a jet at z with value w0; result is at z.
template <Field T>
Jet<T> jet_compose(const Jet<T>& outer, const Jet<T>& inner, const Tolerances& tol = {});

// z -> (conj(alpha) z - conj(beta)) / (alpha - beta z)
template <Field T>
HoloFunction<T> mobius_function(const GroupElement<T>& g);

// rho_1(g) f : z -> (alpha - beta z)^-1 f(mobius_disk(g, z)), as an expression tree.
template <Field T>
HoloFunction<T> rho1(const GroupElement<T>& g, const HoloFunction<T>& f);

// Prolongation of rho_1 to n-jets. For a jet of f at w it returns the jet of
// rho_1(g) f at the point z0 with mobius_disk(g, z0) = w, built from the
// multiplier jet and the Mobius-map jet, so that
//   rho1_prolonged(g, jet_of(f, w, n)) == jet_of(rho1(g, f), z0, n).
template <Field T>
Jet<T> rho1_prolonged(const GroupElement<T>& g, const Jet<T>& jf);

// Order of the zero of phi(z) - phi(lambda) at lambda: the smallest m >= 1
// with a nonzero m-th jet coefficient (float: |c_m| > tol.degree on the
// Taylor coefficient). Throws DegreeExceedsOrder when orders 1..n_max vanish.
template <Field T>
int degree_of_zero(const HoloFunction<T>& phi, const T& lambda, int n_max, const Tolerances& tol = {});

}  // namespace jetspec
