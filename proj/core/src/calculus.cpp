#include "jetspec/calculus.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace jetspec {

template <Field T>
Matrix<T> apply_function_jet(const HoloFunction<T>& f, const JordanSpec<T>& spec, const Tolerances& tol) {
  std::vector<Matrix<T>> blocks;
  blocks.reserve(spec.blocks.size());
  for (const auto& b : spec.blocks) {
    if (b.length < 1) throw PreconditionViolation("Jordan block length must be positive");
    const auto k = static_cast<std::size_t>(b.length);
    const auto c = f.taylor(b.value, b.length - 1);
    Matrix<T> block(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; i + j < k; ++j) block(i, i + j) = c[j];
    blocks.push_back(std::move(block));
  }
  Matrix<T> out = direct_sum<T>(blocks);
  if (spec.transform) {
    const auto& p = *spec.transform;
    if (!p.is_square() || p.dim() != out.dim()) {
      throw PreconditionViolation("similarity transform has the wrong size");
    }
    out = mat_mul(mat_mul(p, out), mat_inverse(p, tol));
  }
  return out;
}

double contour_radius(const HoloFunction<Complex>& f, const FloatMatrix& a, std::optional<double> radius,
                      const Tolerances& tol) {
  const double rho = spectral_radius(a, tol);
  double nearest = std::numeric_limits<double>::infinity();
  for (Complex s : f.known_singularities()) nearest = std::min(nearest, std::abs(s));
  if (nearest <= rho) {
    throw ContourError("f has a singularity at modulus " + std::to_string(nearest) +
                       ", not outside the spectral radius " + std::to_string(rho));
  }

  double r;
  if (radius) {
    r = *radius;
  } else {
    if (rho >= 1.0) {
      throw ContourError("spectral radius " + std::to_string(rho) + " is not inside the unit disk; give a radius");
    }
    r = 0.5 * (rho + 1.0);
    if (nearest <= r) r = 0.5 * (rho + nearest);
  }
  // The quadrature error decays like (rho / r)^N; a circle grazing the
  // spectrum gives no usable accuracy.
  const double gap = 1e-6 * std::max(1.0, r);
  if (!(r > rho + gap)) {
    throw ContourError("contour radius " + std::to_string(r) + " does not enclose the spectral radius " +
                       std::to_string(rho));
  }
  if (!(r < nearest - gap)) {
    throw ContourError("contour radius " + std::to_string(r) + " crosses a singularity of f at modulus " +
                       std::to_string(nearest));
  }
  return r;
}

namespace {

Complex node(double r, int j, int nodes) {
  return std::polar(r, 2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(nodes));
}

void require_nodes(int nodes) {
  if (nodes < 1) throw PreconditionViolation("quadrature needs at least one node");
}

// (1/N) sum_j f(z_j) z_j (z_j e - a)^-1 m, in fixed node order.
FloatMatrix resolvent_quadrature(const HoloFunction<Complex>& f, const FloatMatrix& a, const FloatMatrix& m,
                                 double r, int nodes) {
  const std::size_t n = a.dim();
  FloatMatrix acc(n, m.cols());
  for (int j = 0; j < nodes; ++j) {
    const Complex z = node(r, j, nodes);
    FloatMatrix shifted = FloatMatrix::identity(n) * z;
    shifted -= a;
    FloatMatrix term = solve(shifted, m);
    term *= f(z) * z;
    acc += term;
  }
  acc *= Complex(1.0 / static_cast<double>(nodes));
  return acc;
}

}  // namespace

FloatMatrix apply_function_contour(const HoloFunction<Complex>& f, const FloatMatrix& a, int nodes,
                                   std::optional<double> radius, const Tolerances& tol) {
  if (!a.is_square()) throw DimensionMismatch("apply_function_contour: matrix is not square");
  require_nodes(nodes);
  const double r = contour_radius(f, a, radius, tol);
  return resolvent_quadrature(f, a, FloatMatrix::identity(a.dim()), r, nodes);
}

Complex wavelet_transform(const HoloFunction<Complex>& f, const DiskPoint<Complex>& u, int nodes) {
  require_nodes(nodes);
  Complex acc(0.0);
  for (int j = 0; j < nodes; ++j) {
    const Complex z = node(1.0, j, nodes);
    acc += f(z) * z / (z - u.value());
  }
  return acc / static_cast<double>(nodes);
}

FloatMatrix wavelet_transform_matrix(const HoloFunction<Complex>& f, const GroupElement<Complex>& g,
                                     const FloatMatrix& a, const FloatMatrix& m, int nodes, const Tolerances& tol) {
  if (!a.is_square()) throw DimensionMismatch("wavelet_transform_matrix: matrix is not square");
  if (m.rows() != a.dim()) throw DimensionMismatch("wavelet_transform_matrix: module element has wrong size");
  require_nodes(nodes);
  const FloatMatrix moved = mobius_algebra(g, a, tol);
  const FloatMatrix r_ga = resolvent(g, a, tol);
  const double r = contour_radius(f, moved, std::nullopt, tol);
  return mat_mul(r_ga, resolvent_quadrature(f, moved, m, r, nodes));
}

IntertwineSides intertwine_sides(const HoloFunction<Complex>& f, const GroupElement<Complex>& g,
                                 const FloatMatrix& a, int nodes, const Tolerances& tol) {
  IntertwineSides s;
  s.lhs = apply_function_contour(rho1(g, f), a, nodes, std::nullopt, tol);
  s.rhs = mat_mul(resolvent(g, a, tol), apply_function_contour(f, mobius_algebra(g, a, tol), nodes, std::nullopt, tol));
  s.defect = frobenius_distance(s.lhs, s.rhs);
  return s;
}

template Matrix<GaussRational> apply_function_jet(const HoloFunction<GaussRational>&,
                                                  const JordanSpec<GaussRational>&, const Tolerances&);
template Matrix<Complex> apply_function_jet(const HoloFunction<Complex>&, const JordanSpec<Complex>&,
                                            const Tolerances&);

}  // namespace jetspec
