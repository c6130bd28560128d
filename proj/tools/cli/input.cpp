#include "input.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace jetspec::cli {

using nlohmann::json;

namespace {

mpq_class rational_field(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return GaussRational::parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return mpq_class(j.dump());
  } catch (const std::invalid_argument& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected a rational number as a string");
}

// Component of a Cartesian scalar: exact for strings and integers, double
// otherwise.
struct Part {
  double value = 0.0;
  std::optional<mpq_class> exact;
};

Part part(const json& j, const std::string& where, std::vector<std::string>& warnings) {
  if (j.is_number_float()) {
    warnings.push_back("JSON numbers with a fraction or exponent are read as floating point; quote them for "
                       "exact input");
    return {j.get<double>(), std::nullopt};
  }
  if (j.is_string() || j.is_number_integer()) {
    const mpq_class q = rational_field(j, where);
    return {q.get_d(), q};
  }
  throw InputError(where + ": expected a number or a numeric string");
}

ScalarInput cartesian(const json& re, const json& im, const json& repr, const std::string& re_where,
                      const std::string& im_where, std::vector<std::string>& warnings) {
  const Part r = part(re, re_where, warnings);
  const Part i = part(im, im_where, warnings);
  ScalarInput s{{r.value, i.value}, std::nullopt, repr};
  if (r.exact && i.exact) {
    s.exact = GaussRational(*r.exact, *i.exact);
    s.value = s.exact->to_complex();
  }
  return s;
}

ScalarInput polar(const json& j, const std::string& where) {
  if (!j.contains("abs") || !j.contains("arg_pi")) throw InputError(where + ": polar form needs abs and arg_pi");
  const mpq_class modulus = rational_field(j.at("abs"), where + ".abs");
  const mpq_class turn = rational_field(j.at("arg_pi"), where + ".arg_pi");
  if (sgn(modulus) < 0) throw InputError(where + ".abs: modulus must be non-negative");

  ScalarInput s{std::polar(modulus.get_d(), std::numbers::pi * turn.get_d()), std::nullopt, j};
  // Quarter turns keep the value Gaussian rational.
  const mpq_class half_turns = turn * 2;
  if (half_turns.get_den() == 1) {
    mpz_class q = half_turns.get_num() % 4;
    if (q < 0) q += 4;
    static const GaussRational units[] = {GaussRational(1), GaussRational(0, 1), GaussRational(-1),
                                          GaussRational(0, -1)};
    s.exact = GaussRational(modulus, 0) * units[q.get_si()];
    s.value = s.exact->to_complex();
  }
  return s;
}

std::string field(const std::string& where, const std::string& key) { return where + "." + key; }
std::string item(const std::string& where, std::size_t i) { return where + "[" + std::to_string(i) + "]"; }

const json& require(const json& j, const std::string& key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing field '" + key + "'");
  return j.at(key);
}

const json& require_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + ": expected an array");
  return j;
}

int positive_int(const json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 1) throw InputError(where + ": expected a positive integer");
  return j.get<int>();
}

struct DenseParse {
  bool exact = true;
  ExactMatrix exact_matrix;
  FloatMatrix float_matrix;
};

DenseParse parse_dense(const json& rows, const std::string& where, std::vector<std::string>& warnings) {
  require_array(rows, where);
  const std::size_t n = rows.size();
  if (n == 0) throw InputError(where + ": empty matrix");
  DenseParse out{true, ExactMatrix(n, n), FloatMatrix(n, n)};
  for (std::size_t i = 0; i < n; ++i) {
    const auto& row = require_array(rows[i], item(where, i));
    if (row.size() != n) throw InputError(item(where, i) + ": expected " + std::to_string(n) + " entries (square matrix)");
    for (std::size_t j = 0; j < n; ++j) {
      const auto s = parse_scalar(row[j], item(item(where, i), j), warnings);
      out.float_matrix(i, j) = s.value;
      if (s.exact) {
        out.exact_matrix(i, j) = *s.exact;
      } else {
        out.exact = false;
      }
    }
  }
  return out;
}

std::vector<std::string> dedupe(std::vector<std::string> v) {
  std::vector<std::string> out;
  for (auto& s : v) {
    if (std::find(out.begin(), out.end(), s) == out.end()) out.push_back(std::move(s));
  }
  return out;
}

// Walks a function tree for one backend. In the float walk `exact` records
// whether the exact backend could represent the tree.
template <Field T>
struct FunctionBuilder {
  std::vector<std::string>& warnings;
  bool exact = true;

  T scalar(const json& j, const std::string& where) {
    const auto s = parse_scalar(j, where, warnings);
    if (!s.exact) exact = false;
    if constexpr (is_exact_v<T>) {
      if (!s.exact) throw InputError(where + ": value is not a Gaussian rational");
      return *s.exact;
    } else {
      return s.value;
    }
  }

  std::vector<T> coeffs(const json& j, const std::string& where) {
    require_array(j, where);
    if (j.empty()) throw InputError(where + ": empty coefficient list");
    std::vector<T> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(scalar(j[i], item(where, i)));
    return out;
  }

  std::vector<HoloFunction<T>> list(const json& j, const std::string& where) {
    require_array(j, where);
    if (j.empty()) throw InputError(where + ": empty list");
    std::vector<HoloFunction<T>> out;
    for (std::size_t i = 0; i < j.size(); ++i) out.push_back(node(j[i], item(where, i)));
    return out;
  }

  HoloFunction<T> node(const json& j, const std::string& where) {
    if (j.is_string() && j.get<std::string>() == "z") return HoloFunction<T>::identity();
    if (!j.is_object() || j.size() != 1) {
      throw InputError(where + ": expected \"z\" or an object with exactly one of const, poly, rational, "
                               "blaschke, sum, product, compose, exp, log");
    }
    const auto& [key, body] = *j.items().begin();
    const std::string at = field(where, key);
    if (key == "const") return HoloFunction<T>::constant(scalar(body, at));
    if (key == "poly") return HoloFunction<T>::polynomial(coeffs(body, at));
    if (key == "rational") {
      return HoloFunction<T>::rational(coeffs(require(body, "num", at), field(at, "num")),
                                       coeffs(require(body, "den", at), field(at, "den")));
    }
    if (key == "blaschke") {
      const auto& zeros = require_array(require(body, "zeros", at), field(at, "zeros"));
      std::vector<typename HoloFunction<T>::BlaschkeZero> out;
      for (std::size_t i = 0; i < zeros.size(); ++i) {
        const std::string zi = item(field(at, "zeros"), i);
        const int mult = zeros[i].contains("multiplicity")
                             ? positive_int(zeros[i].at("multiplicity"), field(zi, "multiplicity"))
                             : 1;
        out.push_back({scalar(require(zeros[i], "zero", zi), field(zi, "zero")), mult});
      }
      const T factor = body.contains("factor") ? scalar(body.at("factor"), field(at, "factor")) : T(1);
      return HoloFunction<T>::blaschke(std::move(out), factor);
    }
    if (key == "sum") return HoloFunction<T>::sum(list(body, at));
    if (key == "product") return HoloFunction<T>::product(list(body, at));
    if (key == "compose") {
      return HoloFunction<T>::compose(node(require(body, "outer", at), field(at, "outer")),
                                      node(require(body, "inner", at), field(at, "inner")));
    }
    if (key == "exp" || key == "log") {
      exact = false;
      if constexpr (is_exact_v<T>) {
        throw InputError(at + ": exp and log need the floating-point backend");
      } else {
        auto arg = node(body, at);
        return key == "exp" ? HoloFunction<T>::exp(std::move(arg)) : HoloFunction<T>::log(std::move(arg));
      }
    }
    throw InputError(where + ": unknown function node '" + key + "'");
  }
};

}  // namespace

ScalarInput parse_scalar(const json& j, const std::string& where, std::vector<std::string>& warnings) {
  if (j.is_string() || j.is_number()) return cartesian(j, json("0"), j, where, where, warnings);
  if (j.is_array()) {
    if (j.size() != 2) throw InputError(where + ": complex pair must have two entries [re, im]");
    return cartesian(j[0], j[1], j, where + "[0]", where + "[1]", warnings);
  }
  if (j.is_object()) {
    if (j.contains("abs") || j.contains("arg_pi")) return polar(j, where);
    if (j.contains("re") || j.contains("im")) {
      return cartesian(j.value("re", json("0")), j.value("im", json("0")), j, where + ".re", where + ".im", warnings);
    }
  }
  throw InputError(where + ": expected a scalar (string, [re, im], {re, im} or {abs, arg_pi})");
}

ScalarInput parse_scalar_option(const std::string& text, const std::string& option) {
  std::vector<std::string> ignored;
  const auto comma = text.find(',');
  if (comma == std::string::npos) return cartesian(json(text), json("0"), json(text), option, option, ignored);
  return cartesian(json(text.substr(0, comma)), json(text.substr(comma + 1)), json(text), option, option, ignored);
}

std::size_t MatrixInput::dim() const { return is_jordan ? float_spec.dimension() : float_dense.dim(); }

FloatMatrix MatrixInput::float_matrix() const {
  return is_jordan ? build_matrix(float_spec) : float_dense;
}

ExactMatrix MatrixInput::exact_matrix() const {
  if (!exact) throw PreconditionViolation("matrix input is not exact");
  return is_jordan ? build_matrix(exact_spec) : exact_dense;
}

std::optional<json> MatrixInput::repr_for_label(const std::string& label) const {
  for (std::size_t i = 0; i < float_spec.blocks.size(); ++i) {
    if (float_spec.blocks[i].label == label) return lambda_repr[i];
  }
  return std::nullopt;
}

MatrixInput parse_matrix_input(const json& j) {
  MatrixInput in;
  if (!j.is_object()) throw InputError("matrix input: expected a JSON object with 'dense' or 'jordan'");
  if (j.contains("dense") == j.contains("jordan")) {
    throw InputError("matrix input: give exactly one of 'dense' and 'jordan'");
  }

  if (j.contains("dense")) {
    auto d = parse_dense(j.at("dense"), "dense", in.warnings);
    in.exact = d.exact;
    in.float_dense = std::move(d.float_matrix);
    if (d.exact) in.exact_dense = std::move(d.exact_matrix);
  } else {
    in.is_jordan = true;
    in.exact = true;
    const auto& blocks = require_array(j.at("jordan"), "jordan");
    if (blocks.empty()) throw InputError("jordan: no blocks");
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      const std::string where = item("jordan", i);
      const auto lambda = parse_scalar(require(blocks[i], "lambda", where), field(where, "lambda"), in.warnings);
      const int k = positive_int(require(blocks[i], "k", where), field(where, "k"));
      std::string label = "l" + std::to_string(i + 1);
      if (blocks[i].contains("label")) {
        if (!blocks[i].at("label").is_string()) throw InputError(field(where, "label") + ": expected a string");
        label = blocks[i].at("label").get<std::string>();
      }
      in.float_spec.blocks.push_back({label, lambda.value, k});
      if (lambda.exact) {
        in.exact_spec.blocks.push_back({label, *lambda.exact, k});
      } else {
        in.exact = false;
      }
      in.lambda_repr.push_back(lambda.repr);
    }
    if (j.contains("transform")) {
      auto d = parse_dense(j.at("transform"), "transform", in.warnings);
      if (d.float_matrix.dim() != in.float_spec.dimension()) {
        throw InputError("transform: size " + std::to_string(d.float_matrix.dim()) + " does not match the " +
                         std::to_string(in.float_spec.dimension()) + " Jordan dimensions");
      }
      in.float_spec.transform = d.float_matrix;
      if (d.exact) {
        in.exact_spec.transform = d.exact_matrix;
      } else {
        in.exact = false;
      }
    }
    if (!in.exact) {
      in.warnings.push_back("some values are not Gaussian rationals; eigenvalues are carried as floating-point "
                            "labels and block structure is computed exactly");
    }
  }
  in.warnings = dedupe(std::move(in.warnings));
  return in;
}

template <Field T>
HoloFunction<T> FunctionInput::build() const {
  std::vector<std::string> ignored;
  FunctionBuilder<T> b{ignored};
  return b.node(tree, "function");
}

template HoloFunction<GaussRational> FunctionInput::build() const;
template HoloFunction<Complex> FunctionInput::build() const;

FunctionInput parse_function_input(const json& j) {
  FunctionInput in;
  in.tree = j;
  FunctionBuilder<Complex> b{in.warnings};
  b.node(j, "function");
  in.exact = b.exact;
  in.warnings = dedupe(std::move(in.warnings));
  return in;
}

json read_json_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) throw InputError("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << file.rdbuf();
  const std::string text = buffer.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    // Translate the byte offset into line and column.
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw InputError(path + ":" + std::to_string(line) + ":" + std::to_string(column) + ": invalid JSON (" +
                     e.what() + ")");
  }
}

}  // namespace jetspec::cli
