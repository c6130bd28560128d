#pragma once

// The functional calculus f -> f(a), computed two independent ways:
//
//  * apply_function_jet: on a Jordan specification, each block J_k(lambda)
//    maps to sum_{j<k} f^(j)(lambda)/j! N^j, the upper-triangular Toeplitz
//    matrix of the (k-1)-jet of f at lambda.
//  * apply_function_contour: trapezoidal quadrature of
//    (1/2 pi i) \oint_{|z|=r} f(z) (z e - a)^-1 dz on equispaced nodes.
//
// Kernel orientation: the Cauchy kernel is taken as 1/(z - u) (and the
// resolvent as (z e - a)^-1), which is the sign that reproduces f(u) and
// f(a). The opposite sign convention 1/(u - z) yields -f(u).

#include <optional>

#include "jetspec/jets.hpp"
#include "jetspec/jordan.hpp"
#include "jetspec/moebius.hpp"

namespace jetspec {

// Throws PoleError if f is singular at an eigenvalue of the specification.
template <Field T>
Matrix<T> apply_function_jet(const HoloFunction<T>& f, const JordanSpec<T>& spec, const Tolerances& tol = {});

// Contour radius defaults to (rho(a) + 1) / 2, pulled inward to halfway
// between rho(a) and the nearest known singularity of f if that lies closer.
// Throws ContourError when no circle separates the spectrum from the known
// singularities of f (or rho(a) >= 1 and no radius is given).
FloatMatrix apply_function_contour(const HoloFunction<Complex>& f, const FloatMatrix& a, int nodes,
                                   std::optional<double> radius = std::nullopt, const Tolerances& tol = {});

double contour_radius(const HoloFunction<Complex>& f, const FloatMatrix& a,
                      std::optional<double> radius = std::nullopt, const Tolerances& tol = {});

// Cauchy integral over the unit circle; equals f(u) for f holomorphic on the
// closed disk.
Complex wavelet_transform(const HoloFunction<Complex>& f, const DiskPoint<Complex>& u, int nodes);

// W_m f(g): contour pairing of f with the transformed coherent state
// [rho_a(g) v_m](a) = R(g, a) (z e - mobius_algebra(g, a))^-1 m.
// At g = e, m = e this is apply_function_contour(f, a). m may be a column.
FloatMatrix wavelet_transform_matrix(const HoloFunction<Complex>& f, const GroupElement<Complex>& g,
                                     const FloatMatrix& a, const FloatMatrix& m, int nodes,
                                     const Tolerances& tol = {});

struct IntertwineSides {
  FloatMatrix lhs;  // calculus applied to rho_1(g) f
  FloatMatrix rhs;  // R(g, a) f(mobius_algebra(g, a))
  double defect = 0.0;
};

IntertwineSides intertwine_sides(const HoloFunction<Complex>& f, const GroupElement<Complex>& g,
                                 const FloatMatrix& a, int nodes = 1024, const Tolerances& tol = {});

// Frobenius norm of lhs - rhs.
inline double intertwine_check(const HoloFunction<Complex>& f, const GroupElement<Complex>& g,
                               const FloatMatrix& a, int nodes = 1024, const Tolerances& tol = {}) {
  return intertwine_sides(f, g, a, nodes, tol).defect;
}

}  // namespace jetspec
