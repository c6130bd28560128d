#pragma once

// JSON input formats of the command-line tool.
//
// Scalars:   "3/4", "-0.25", 2            real
//            ["1/2", "-1/3"]              re, im
//            {"re": "1/2", "im": "1"}
//            {"abs": "3/4", "arg_pi": "1/4"}   abs * exp(i pi arg_pi)
// Strings are read exactly. JSON numbers with a fractional part are read as
// doubles (with a warning). Polar values are exact only when arg_pi is a
// multiple of 1/2.
//
// Matrices:  {"dense": [[s, s], [s, s]]}
//            {"jordan": [{"lambda": s, "k": 3, "label": "l1"}, ...], "transform": [[s, ...], ...]}
//
// Functions: "z" | {"const": s} | {"poly": [c0, c1, ...]}
//            {"rational": {"num": [...], "den": [...]}}
//            {"blaschke": {"zeros": [{"zero": s, "multiplicity": 2}], "factor": s}}
//            {"sum": [f, ...]} | {"product": [f, ...]} | {"compose": {"outer": f, "inner": f}}
//            {"exp": f} | {"log": f}

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "jetspec/jetspec.hpp"

namespace jetspec::cli {

// Malformed input; the message names the offending field.
class InputError : public Error {
public:
  using Error::Error;
};

struct ScalarInput {
  Complex value;
  std::optional<GaussRational> exact;
  nlohmann::json repr;  // as written
};

ScalarInput parse_scalar(const nlohmann::json& j, const std::string& where, std::vector<std::string>& warnings);

// "x" or "x,y" with rational or decimal parts; used for command-line options.
ScalarInput parse_scalar_option(const std::string& text, const std::string& option);

struct MatrixInput {
  bool is_jordan = false;
  bool exact = false;

  // Jordan input. exact_spec is filled only when exact.
  JordanSpec<GaussRational> exact_spec;
  JordanSpec<Complex> float_spec;
  std::vector<nlohmann::json> lambda_repr;  // per block

  // Dense input. exact_dense is filled only when exact.
  ExactMatrix exact_dense;
  FloatMatrix float_dense;

  std::vector<std::string> warnings;

  std::size_t dim() const;
  FloatMatrix float_matrix() const;
  ExactMatrix exact_matrix() const;  // requires exact
  // The written lambda of the block carrying this label, if any.
  std::optional<nlohmann::json> repr_for_label(const std::string& label) const;
};

MatrixInput parse_matrix_input(const nlohmann::json& j);

struct FunctionInput {
  nlohmann::json tree;
  bool exact = false;
  std::vector<std::string> warnings;

  template <Field T>
  HoloFunction<T> build() const;
};

FunctionInput parse_function_input(const nlohmann::json& j);

// Reads and parses a JSON file; InputError carries line and column on
// syntax errors.
nlohmann::json read_json_file(const std::string& path);

}  // namespace jetspec::cli
