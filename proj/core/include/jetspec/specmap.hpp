#pragma once

// Prolonged spectral mapping on (eigenvalue, jet order) pairs.
//
// For a block of length k at lambda and m = deg_lambda phi (the order of the
// zero of phi(z) - phi(lambda) at lambda):
//
//   literal: (phi(lambda), floor(k / m)), raised to 1 when k < m
//   split:   phi(J_k(lambda)) - phi(lambda) e = c N^m (unit) and so splits into
//            (k mod m) blocks of length ceil(k/m) and m - (k mod m) blocks of
//            length floor(k/m); when m > k it is k blocks of length 1.
//
// verify_mapping recomputes the Jordan structure of phi(a) from the matrix
// and reports where either rule disagrees with it.

#include <string>
#include <vector>

#include "jetspec/calculus.hpp"
#include "jetspec/jets.hpp"
#include "jetspec/jordan.hpp"

namespace jetspec {

enum class MapMode { literal, split };

// deg_lambda phi when it is at most k; k + 1 stands for "larger than k",
// which is all the block structure can see.
template <Field T>
int block_degree(const HoloFunction<T>& phi, const T& lambda, int k, const Tolerances& tol = {});

template <Field T>
SpectrumPoint<T> map_point_literal(const HoloFunction<T>& phi, const SpectrumPoint<T>& p, const Tolerances& tol = {});

template <Field T>
Spectrum<T> map_point_split(const HoloFunction<T>& phi, const SpectrumPoint<T>& p, const Tolerances& tol = {});

// Block lengths of the split rule for a block of length k and zero order m.
std::vector<int> split_profile(int k, int m);

template <Field T>
Spectrum<T> map_spectrum(const HoloFunction<T>& phi, const Spectrum<T>& s, MapMode mode, const Tolerances& tol = {});

template <Field T>
struct LiteralDiscrepancy {
  SpectrumPoint<T> source;
  int degree = 1;  // > source.k means "larger than k"
  SpectrumPoint<T> literal;
  std::vector<int> split;  // block lengths the matrix actually has
};

template <Field T>
struct MappingReport {
  Spectrum<T> source;
  Spectrum<T> predicted;   // split rule
  Spectrum<T> recomputed;  // Jordan analysis of apply_function_jet(phi, spec)
  bool match = false;
  std::vector<LiteralDiscrepancy<T>> literal_discrepancies;
};

// Float backend: eigenvalue images within tol.equal are treated as the same
// eigenvalue; images closer than tol.eigen but farther apart than that raise
// EigenvalueCollision instead of being merged.
template <Field T>
MappingReport<T> verify_mapping(const HoloFunction<T>& phi, const JordanSpec<T>& spec, const Tolerances& tol = {});

}  // namespace jetspec
