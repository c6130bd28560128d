#pragma once

// Jordan structure as a spectrum of (eigenvalue, jet order) pairs.
//
// Block lengths at an eigenvalue are recovered from kernel growth:
//   w_j = dim ker (a - lambda e)^j - dim ker (a - lambda e)^(j-1)
// is the Weyr characteristic, and its conjugate partition is the list of
// Jordan block lengths (the Segre characteristic).

#include <optional>
#include <string>
#include <vector>

#include "jetspec/matrix.hpp"
#include "jetspec/polynomial.hpp"

namespace jetspec {

template <Field T>
struct SpectrumPoint {
  T lambda;
  int k = 1;  // jet order, i.e. Jordan block length
  std::string label;  // display only; ignored by comparisons
};

template <Field T>
struct Spectrum {
  std::vector<SpectrumPoint<T>> points;

  std::size_t total_order() const {
    std::size_t s = 0;
    for (const auto& p : points) s += static_cast<std::size_t>(p.k);
    return s;
  }
};

template <Field T>
struct JordanBlock {
  std::string label;
  T value;
  int length = 1;
};

template <Field T>
struct JordanSpec {
  std::vector<JordanBlock<T>> blocks;
  std::optional<Matrix<T>> transform;  // P; the matrix is P J P^-1

  std::size_t dimension() const {
    std::size_t n = 0;
    for (const auto& b : blocks) n += static_cast<std::size_t>(b.length);
    return n;
  }
};

template <Field T>
Matrix<T> jordan_block(const T& lambda, int length);

// Throws PreconditionViolation for non-positive lengths or a wrongly sized P,
// SingularMatrix for singular P.
template <Field T>
Matrix<T> build_matrix(const JordanSpec<T>& spec, const Tolerances& tol = {});

template <Field T>
std::vector<std::size_t> weyr_sequence(const Matrix<T>& a, const T& lambda, const Tolerances& tol = {});

// Conjugate partitions; both directions return non-increasing sequences.
std::vector<int> segre_from_weyr(const std::vector<std::size_t>& weyr);
std::vector<std::size_t> weyr_from_segre(const std::vector<int>& segre);

// Float backend: eigenvalue clusters of the characteristic polynomial.
std::vector<RootCluster> find_eigenvalues(const FloatMatrix& a, const Tolerances& tol = {});

double spectral_radius(const FloatMatrix& a, const Tolerances& tol = {});
inline double spectral_radius(const ExactMatrix& a, const Tolerances& tol = {}) {
  return spectral_radius(to_float(a), tol);
}

// Exact backend requires the eigenvalue list; the float backend finds it when
// omitted. Throws NumericError if the analysis does not account for every
// dimension.
template <Field T>
Spectrum<T> spectrum(const Matrix<T>& a, const std::optional<std::vector<T>>& eigenvalues = std::nullopt,
                     const Tolerances& tol = {});

// Spectrum of build_matrix(spec) with eigenvalue identity taken from the Jordan specification.
// Ranks are computed exactly on P (J - lambda e) P^-1 with every nonzero
// diagonal shift replaced by 1, which keeps all kernel dimensions intact, so
// irrational eigenvalues never enter the arithmetic.
template <Field T>
Spectrum<T> structural_spectrum(const JordanSpec<T>& spec, const Tolerances& tol = {});

// Deterministic display order: |lambda| descending, arg ascending, k descending.
template <Field T>
void canonical_order(Spectrum<T>& s);

template <Field T>
bool same_multiset(const Spectrum<T>& a, const Spectrum<T>& b, const Tolerances& tol = {});

}  // namespace jetspec
