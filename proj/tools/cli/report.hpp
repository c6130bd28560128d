#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "jetspec/jetspec.hpp"

namespace jetspec::cli {

// One spectrum point ready for output.
struct SpectrumRow {
  Complex value;
  int k = 1;
  std::string label;
  nlohmann::json repr;  // lambda as written, or its exact/float rendering
};

template <Field T>
std::vector<SpectrumRow> rows_of(const Spectrum<T>& s);

// "0.75∠45°"; the angle is dropped on the positive real axis.
std::string polar_text(Complex z);

// Exact values print as rationals, floats with 17 significant digits so that
// they read back bit-identically.
nlohmann::json scalar_json(const GaussRational& z);
nlohmann::json scalar_json(const Complex& z);

std::string spectrum_text(const std::vector<SpectrumRow>& rows);
// {"jordan": [{"lambda": ..., "k": ..., "label": ...}]}: a valid matrix input.
nlohmann::json spectrum_json(const std::vector<SpectrumRow>& rows);
std::string spectrum_csv(const std::vector<SpectrumRow>& rows);

std::string matrix_text(const ExactMatrix& a);
std::string matrix_text(const FloatMatrix& a);
nlohmann::json matrix_json(const ExactMatrix& a);
nlohmann::json matrix_json(const FloatMatrix& a);

// Disk outline in oblique projection with one stem per point, k markers per
// stem. Byte-deterministic for identical rows.
std::string figure_svg(const std::vector<SpectrumRow>& rows);

}  // namespace jetspec::cli
