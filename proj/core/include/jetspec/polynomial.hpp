#pragma once

#include <span>
#include <vector>

#include "jetspec/matrix.hpp"

namespace jetspec {

// Coefficients of det(zI - a), lowest degree first, monic. Division-free
// (Samuelson-Berkowitz), so the exact backend stays exact.
template <Field T>
std::vector<T> characteristic_polynomial(const Matrix<T>& a);

template <Field T>
T evaluate_polynomial(std::span<const T> coeffs, const T& z) {
  T acc(0);
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * z + *it;
  return acc;
}

struct AberthOptions {
  int max_iter = 1000;
};

// All roots of a polynomial (lowest degree first, nonzero leading coefficient)
// by Aberth-Ehrlich simultaneous iteration. Throws ConvergenceFailure.
std::vector<Complex> aberth_roots(std::span<const Complex> coeffs, const AberthOptions& opts = {});

struct RootCluster {
  Complex value;
  int multiplicity = 0;
};

// Groups approximate roots into clusters. Two roots join when they lie within
// `radius` of each other or their Weierstrass inclusion discs overlap; a
// connected component of m overlapping discs holds exactly m roots, so
// perturbed multiple roots (spread ~ eps^(1/m)) merge without a fixed radius.
// Each cluster is reported at the mean of its members.
std::vector<RootCluster> cluster_roots(std::span<const Complex> coeffs, std::span<const Complex> roots,
                                       double radius);

}  // namespace jetspec
