#include "app.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "input.hpp"
#include "report.hpp"

namespace jetspec::cli {

using nlohmann::json;

namespace {

struct Context {
  std::ostream& out;
  std::ostream& err;
  Tolerances tol;
  std::vector<std::string> warnings;

  void warn(std::string w) {
    if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) warnings.push_back(std::move(w));
  }
  void absorb(const std::vector<std::string>& ws) {
    for (const auto& w : ws) warn(w);
  }
  void flush_warnings() {
    for (const auto& w : warnings) err << "warning: " << w << '\n';
    warnings.clear();
  }
};

// Continued-fraction approximation with a bounded denominator.
mpq_class nearby_rational(double x, long max_den) {
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int i = 0; i < 64; ++i) {
    const double a = std::floor(r);
    if (std::abs(a) > 1e15) break;
    const long ai = static_cast<long>(a);
    const long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
    const double frac = r - a;
    if (std::abs(x - static_cast<double>(p1) / static_cast<double>(q1)) <= 1e-12 * std::max(1.0, std::abs(x)) ||
        frac == 0.0) {
      break;
    }
    r = 1.0 / frac;
  }
  return q1 == 0 ? mpq_class(0) : mpq_class(p1, q1);
}

// Exact Jordan analysis of a dense rational matrix whose eigenvalues are all
// Gaussian rationals with small denominators. Float clusters propose the
// candidates; each is confirmed as an exact root of the characteristic
// polynomial before it is used.
std::optional<Spectrum<GaussRational>> exact_dense_spectrum(const ExactMatrix& a, const Tolerances& tol) {
  const auto charpoly = characteristic_polynomial(a);
  std::vector<GaussRational> candidates;
  for (const auto& c : find_eigenvalues(to_float(a), tol)) {
    GaussRational z(nearby_rational(c.value.real(), 1'000'000), nearby_rational(c.value.imag(), 1'000'000));
    if (!evaluate_polynomial<GaussRational>(charpoly, z).is_zero()) return std::nullopt;
    candidates.push_back(std::move(z));
  }
  try {
    return spectrum(a, std::optional(candidates), tol);
  } catch (const NumericError&) {
    return std::nullopt;
  }
}

const char* kFloatFallback =
    "eigenvalues are not all Gaussian rationals; Jordan structure computed in floating point";

template <Field T>
void warn_outside_disk(Context& ctx, const Spectrum<T>& s) {
  for (const auto& p : s.points) {
    if (!inside_unit_disk(p.lambda)) {
      ctx.warn("eigenvalue " + polar_text(to_complex(p.lambda)) + " is not inside the open unit disk");
    }
  }
}

template <Field T>
Spectrum<T> spectrum_of_blocks(const JordanSpec<T>& spec) {
  Spectrum<T> s;
  for (const auto& b : spec.blocks) s.points.push_back({b.value, b.length, b.label});
  canonical_order(s);
  return s;
}

template <Field T>
JordanSpec<T> spec_of_spectrum(const Spectrum<T>& s) {
  JordanSpec<T> spec;
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const auto& p = s.points[i];
    spec.blocks.push_back({p.label.empty() ? "l" + std::to_string(i + 1) : p.label, p.lambda, p.k});
  }
  return spec;
}

// Keeps the lambda of jordan inputs exactly as it was written.
std::vector<SpectrumRow> with_input_repr(std::vector<SpectrumRow> rows, const MatrixInput& in) {
  if (!in.is_jordan) return rows;
  for (auto& r : rows) {
    if (auto repr = in.repr_for_label(r.label)) r.repr = *repr;
  }
  return rows;
}

std::vector<SpectrumRow> compute_spectrum(Context& ctx, const MatrixInput& in) {
  if (in.is_jordan) {
    if (in.exact) {
      const auto s = structural_spectrum(in.exact_spec, ctx.tol);
      warn_outside_disk(ctx, s);
      return with_input_repr(rows_of(s), in);
    }
    const auto s = structural_spectrum(in.float_spec, ctx.tol);
    warn_outside_disk(ctx, s);
    return with_input_repr(rows_of(s), in);
  }
  if (in.exact) {
    if (auto s = exact_dense_spectrum(in.exact_dense, ctx.tol)) {
      warn_outside_disk(ctx, *s);
      return rows_of(*s);
    }
    ctx.warn(kFloatFallback);
  }
  const auto s = spectrum<Complex>(in.float_dense, std::nullopt, ctx.tol);
  warn_outside_disk(ctx, s);
  return rows_of(s);
}

MatrixInput load_matrix(Context& ctx, const std::string& path) {
  auto in = parse_matrix_input(read_json_file(path));
  ctx.absorb(in.warnings);
  return in;
}

FunctionInput load_function(Context& ctx, const std::string& path) {
  auto fn = parse_function_input(read_json_file(path));
  ctx.absorb(fn.warnings);
  return fn;
}

// ---- spectrum ------------------------------------------------------------

struct SpectrumArgs {
  std::string matrix;
  std::string format = "text";
};

int cmd_spectrum(Context& ctx, const SpectrumArgs& args) {
  const auto in = load_matrix(ctx, args.matrix);
  const auto rows = compute_spectrum(ctx, in);
  ctx.flush_warnings();
  if (args.format == "json") {
    ctx.out << spectrum_json(rows).dump(2) << '\n';
  } else if (args.format == "csv") {
    ctx.out << spectrum_csv(rows);
  } else {
    ctx.out << spectrum_text(rows);
  }
  return kOk;
}

// ---- apply ---------------------------------------------------------------

struct ApplyArgs {
  std::string matrix;
  std::string function;
  std::string method = "jet";
  int nodes = 1024;
  std::optional<double> radius;
  std::string format = "text";
};

int cmd_apply(Context& ctx, const ApplyArgs& args) {
  const auto in = load_matrix(ctx, args.matrix);
  const auto fn = load_function(ctx, args.function);
  const bool want_jet = args.method != "contour";
  const bool want_contour = args.method != "jet";
  if (want_jet && !in.is_jordan) {
    throw PreconditionViolation("the jet method needs a jordan matrix input; use --method contour for dense input");
  }

  json doc = json::object();
  std::string text;
  std::optional<FloatMatrix> jet_float;
  if (want_jet) {
    if (in.exact && fn.exact) {
      const auto b = apply_function_jet(fn.build<GaussRational>(), in.exact_spec, ctx.tol);
      doc["jet"] = matrix_json(b);
      text += (want_contour ? "jet:\n" : "") + matrix_text(b);
      jet_float = to_float(b);
    } else {
      const auto b = apply_function_jet(fn.build<Complex>(), in.float_spec, ctx.tol);
      doc["jet"] = matrix_json(b);
      text += (want_contour ? "jet:\n" : "") + matrix_text(b);
      jet_float = b;
    }
  }
  if (want_contour) {
    const auto f = fn.build<Complex>();
    const FloatMatrix a = in.float_matrix();
    const double r = contour_radius(f, a, args.radius, ctx.tol);
    const auto b = apply_function_contour(f, a, args.nodes, r, ctx.tol);
    doc["contour"] = matrix_json(b);
    doc["radius"] = r;
    doc["nodes"] = args.nodes;
    text += (want_jet ? "contour (radius " + format_complex(r) + ", " + std::to_string(args.nodes) + " nodes):\n"
                      : "") +
            matrix_text(b);
    if (jet_float) {
      const double d = frobenius_distance(*jet_float, b);
      doc["discrepancy"] = d;
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.3e", d);
      text += std::string("discrepancy (Frobenius): ") + buf + "\n";
    }
  }
  ctx.flush_warnings();
  if (args.format == "json") {
    ctx.out << doc.dump(2) << '\n';
  } else {
    ctx.out << text;
  }
  return kOk;
}

// ---- map -----------------------------------------------------------------

struct MapArgs {
  std::string matrix;
  std::string function;
  std::string mode = "split";
  std::string format = "text";
};

std::string profile_text(const std::vector<int>& split) {
  std::string s = "{";
  for (std::size_t i = 0; i < split.size(); ++i) s += (i ? ", " : "") + std::to_string(split[i]);
  return s + "}";
}

std::string labelled_text(const std::vector<SpectrumRow>& rows) {
  std::string out;
  for (const auto& r : rows) {
    out += "  (" + polar_text(r.value) + ", " + std::to_string(r.k) + ")";
    if (!r.label.empty()) out += "  " + r.label;
    out += '\n';
  }
  return out;
}

template <Field T>
int run_map(Context& ctx, const MapArgs& args, const MatrixInput& in, const HoloFunction<T>& phi,
            const Spectrum<T>& source, const JordanSpec<T>& spec) {
  json doc{{"mode", args.mode}};
  std::string text;
  if (args.mode == "verify") {
    const auto report = verify_mapping(phi, spec, ctx.tol);
    const auto src = with_input_repr(rows_of(report.source), in);
    const auto predicted = rows_of(report.predicted);
    const auto recomputed = rows_of(report.recomputed);
    doc["source"] = spectrum_json(src)["jordan"];
    doc["predicted"] = spectrum_json(predicted)["jordan"];
    doc["recomputed"] = spectrum_json(recomputed)["jordan"];
    doc["match"] = report.match;
    json rows = json::array();
    text += "source:\n" + labelled_text(src);
    text += "predicted (split rule):\n" + labelled_text(predicted);
    text += "recomputed from phi(a):\n" + labelled_text(recomputed);
    text += std::string("verdict: ") + (report.match ? "MATCH" : "MISMATCH") + "\n";
    text += "literal rule discrepancies:";
    if (report.literal_discrepancies.empty()) text += " none";
    text += '\n';
    for (const auto& d : report.literal_discrepancies) {
      const std::string degree = d.degree > d.source.k ? "> " + std::to_string(d.source.k) : std::to_string(d.degree);
      text += "  " + (d.source.label.empty() ? std::string() : d.source.label + " ") + "(" +
              polar_text(to_complex(d.source.lambda)) + ", " + std::to_string(d.source.k) + "): deg " + degree +
              ", literal (" + polar_text(to_complex(d.literal.lambda)) + ", " + std::to_string(d.literal.k) +
              ") vs recomputed blocks " + profile_text(d.split) + "\n";
      rows.push_back({{"label", d.source.label},
                      {"lambda", scalar_json(d.source.lambda)},
                      {"k", d.source.k},
                      {"degree", d.degree},
                      {"literal_k", d.literal.k},
                      {"split", d.split}});
    }
    doc["literal_discrepancies"] = std::move(rows);
  } else {
    const auto mode = args.mode == "literal" ? MapMode::literal : MapMode::split;
    const auto mapped = rows_of(map_spectrum(phi, source, mode, ctx.tol));
    doc["spectrum"] = spectrum_json(mapped)["jordan"];
    text += labelled_text(mapped);
  }
  ctx.flush_warnings();
  if (args.format == "json") {
    ctx.out << doc.dump(2) << '\n';
  } else {
    ctx.out << text;
  }
  return kOk;
}

int cmd_map(Context& ctx, const MapArgs& args) {
  const auto in = load_matrix(ctx, args.matrix);
  const auto fn = load_function(ctx, args.function);

  if (in.is_jordan) {
    if (in.exact && fn.exact) {
      return run_map(ctx, args, in, fn.build<GaussRational>(), spectrum_of_blocks(in.exact_spec), in.exact_spec);
    }
    return run_map(ctx, args, in, fn.build<Complex>(), spectrum_of_blocks(in.float_spec), in.float_spec);
  }
  // Dense input: the Jordan form carries everything the mapping depends on.
  if (in.exact && fn.exact) {
    if (auto s = exact_dense_spectrum(in.exact_dense, ctx.tol)) {
      return run_map(ctx, args, in, fn.build<GaussRational>(), *s, spec_of_spectrum(*s));
    }
    ctx.warn(kFloatFallback);
  }
  const auto s = spectrum<Complex>(in.float_dense, std::nullopt, ctx.tol);
  return run_map(ctx, args, in, fn.build<Complex>(), s, spec_of_spectrum(s));
}

// ---- figure --------------------------------------------------------------

struct FigureArgs {
  std::string matrix;
  std::string out;
};

int cmd_figure(Context& ctx, const FigureArgs& args) {
  const auto ext = std::filesystem::path(args.out).extension().string();
  if (ext != ".svg" && ext != ".csv") throw InputError("--out: expected a .svg or .csv path");
  const auto in = load_matrix(ctx, args.matrix);
  const auto rows = compute_spectrum(ctx, in);
  ctx.flush_warnings();
  std::ofstream file(args.out, std::ios::binary);
  file << (ext == ".svg" ? figure_svg(rows) : spectrum_csv(rows));
  if (!file) {
    ctx.err << "error: cannot write '" << args.out << "'\n";
    return kFailure;
  }
  ctx.out << "wrote " << args.out << " (" << rows.size() << " points)\n";
  return kOk;
}

// ---- mobius --------------------------------------------------------------

struct MobiusArgs {
  std::string matrix;
  std::optional<std::string> alpha, beta, u;
  std::optional<double> omega;
  std::string format = "text";
};

template <Field T>
int print_mobius(Context& ctx, const MobiusArgs& args, const GroupElement<T>& g, const Matrix<T>& moved,
                 const std::vector<SpectrumRow>& rows) {
  ctx.flush_warnings();
  if (args.format == "json") {
    json doc{{"alpha", scalar_json(g.alpha())},
             {"beta", scalar_json(g.beta())},
             {"matrix", matrix_json(moved)},
             {"spectrum", spectrum_json(rows)["jordan"]}};
    ctx.out << doc.dump(2) << '\n';
  } else {
    ctx.out << "g = (alpha " << format_complex(to_complex(g.alpha())) << ", beta "
            << format_complex(to_complex(g.beta())) << ")\n"
            << "g.a =\n"
            << matrix_text(moved) << "spectrum:\n"
            << labelled_text(rows);
  }
  return kOk;
}

template <Field T>
int run_mobius(Context& ctx, const MobiusArgs& args, const MatrixInput& in, const GroupElement<T>& g,
               const Matrix<T>& a) {
  const Matrix<T> moved = mobius_algebra(g, a, ctx.tol);

  Spectrum<T> s;
  if (in.is_jordan) {
    // Eigenvalues move by the scalar Mobius map; block labels follow them.
    const auto& blocks = [&]() -> const auto& {
      if constexpr (is_exact_v<T>) {
        return in.exact_spec.blocks;
      } else {
        return in.float_spec.blocks;
      }
    }();
    std::vector<T> images;
    for (const auto& b : blocks) images.push_back(mobius_disk(g, DiskPoint<T>(b.value)).value());
    s = spectrum(moved, std::optional(images), ctx.tol);
    for (auto& p : s.points) {
      for (std::size_t i = 0; i < images.size(); ++i) {
        if (approx_equal(images[i], p.lambda, ctx.tol.equal)) {
          p.label = blocks[i].label;
          break;
        }
      }
    }
  } else if constexpr (is_exact_v<T>) {
    if (auto exact = exact_dense_spectrum(moved, ctx.tol)) {
      s = *exact;
    } else {
      ctx.warn(kFloatFallback);
      const auto fs = spectrum<Complex>(to_float(moved), std::nullopt, ctx.tol);
      return print_mobius(ctx, args, g, moved, rows_of(fs));
    }
  } else {
    s = spectrum<Complex>(moved, std::nullopt, ctx.tol);
  }
  return print_mobius(ctx, args, g, moved, rows_of(s));
}

int cmd_mobius(Context& ctx, const MobiusArgs& args) {
  const auto in = load_matrix(ctx, args.matrix);
  if (args.alpha || args.beta) {
    if (!args.alpha || !args.beta) throw InputError("--alpha and --beta must be given together");
    const auto alpha = parse_scalar_option(*args.alpha, "--alpha");
    const auto beta = parse_scalar_option(*args.beta, "--beta");
    if (in.exact && alpha.exact && beta.exact) {
      const mpq_class defect = alpha.exact->norm() - beta.exact->norm() - 1;
      if (sgn(defect) == 0) {
        return run_mobius(ctx, args, in, GroupElement<GaussRational>(*alpha.exact, *beta.exact), in.exact_matrix());
      }
      ctx.warn("|alpha|^2 - |beta|^2 is not exactly 1; using the floating-point backend");
    }
    return run_mobius(ctx, args, in, GroupElement<Complex>(alpha.value, beta.value), in.float_matrix());
  }
  const Complex u = args.u ? parse_scalar_option(*args.u, "--u").value : Complex(0.0);
  const DiskPoint<Complex> checked(u);
  return run_mobius(ctx, args, in, reassemble(args.omega.value_or(0.0), checked.value()), in.float_matrix());
}

int exit_code(std::ostream& err, const std::exception& e, int code) {
  err << "error: " << e.what() << '\n';
  return code;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{out, err, {}, {}};
  CLI::App app{"Jordan-structure spectra, matrix functions and Mobius covariance", "jetspec"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "jetspec 0.1.0");
  app.add_option("--rank-tol", ctx.tol.rank, "relative numerical-rank threshold")->capture_default_str();
  app.add_option("--eig-tol", ctx.tol.eigen, "eigenvalue clustering radius")->capture_default_str();
  app.add_option("--deg-tol", ctx.tol.degree, "zero test for jet coefficients")->capture_default_str();

  const auto formats = CLI::IsMember({"text", "json"});

  SpectrumArgs spectrum_args;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "print the (eigenvalue, jet order) multiset");
  spectrum_cmd->add_option("matrix", spectrum_args.matrix, "matrix input (JSON)")->required();
  spectrum_cmd->add_option("--format", spectrum_args.format)->check(CLI::IsMember({"text", "json", "csv"}));

  ApplyArgs apply_args;
  auto* apply_cmd = app.add_subcommand("apply", "evaluate f(a)");
  apply_cmd->add_option("matrix", apply_args.matrix, "matrix input (JSON)")->required();
  apply_cmd->add_option("function", apply_args.function, "function input (JSON)")->required();
  apply_cmd->add_option("--method", apply_args.method)->check(CLI::IsMember({"jet", "contour", "both"}));
  apply_cmd->add_option("--nodes", apply_args.nodes, "quadrature nodes")->check(CLI::PositiveNumber);
  apply_cmd->add_option("--radius", apply_args.radius, "contour radius");
  apply_cmd->add_option("--format", apply_args.format)->check(formats);

  MapArgs map_args;
  auto* map_cmd = app.add_subcommand("map", "prolonged spectral mapping");
  map_cmd->add_option("matrix", map_args.matrix, "matrix input (JSON)")->required();
  map_cmd->add_option("function", map_args.function, "function input (JSON)")->required();
  map_cmd->add_option("--mode", map_args.mode)->check(CLI::IsMember({"literal", "split", "verify"}));
  map_cmd->add_option("--format", map_args.format)->check(formats);

  FigureArgs figure_args;
  auto* figure_cmd = app.add_subcommand("figure", "stem plot of the spectrum (SVG) or its rows (CSV)");
  figure_cmd->add_option("matrix", figure_args.matrix, "matrix input (JSON)")->required();
  figure_cmd->add_option("--out", figure_args.out, "output path, .svg or .csv")->required();

  MobiusArgs mobius_args;
  auto* mobius_cmd = app.add_subcommand("mobius", "apply a group element to the matrix");
  mobius_cmd->add_option("matrix", mobius_args.matrix, "matrix input (JSON)")->required();
  auto* alpha = mobius_cmd->add_option("--alpha", mobius_args.alpha, "alpha as re or re,im");
  auto* beta = mobius_cmd->add_option("--beta", mobius_args.beta, "beta as re or re,im");
  auto* omega = mobius_cmd->add_option("--omega", mobius_args.omega, "rotation angle in radians");
  auto* u = mobius_cmd->add_option("--u", mobius_args.u, "disk point as re or re,im");
  alpha->excludes(omega)->excludes(u);
  beta->excludes(omega)->excludes(u);
  mobius_cmd->add_option("--format", mobius_args.format)->check(formats);

  std::vector<const char*> argv{"jetspec"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParseError;
  }

  try {
    if (*spectrum_cmd) return cmd_spectrum(ctx, spectrum_args);
    if (*apply_cmd) return cmd_apply(ctx, apply_args);
    if (*map_cmd) return cmd_map(ctx, map_args);
    if (*figure_cmd) return cmd_figure(ctx, figure_args);
    if (*mobius_cmd) return cmd_mobius(ctx, mobius_args);
  } catch (const InputError& e) {
    ctx.flush_warnings();
    return exit_code(err, e, kParseError);
  } catch (const PreconditionViolation& e) {
    ctx.flush_warnings();
    return exit_code(err, e, kPreconditionError);
  } catch (const DimensionMismatch& e) {
    ctx.flush_warnings();
    return exit_code(err, e, kPreconditionError);
  } catch (const Error& e) {
    ctx.flush_warnings();
    return exit_code(err, e, kNumericError);
  } catch (const std::domain_error& e) {
    ctx.flush_warnings();
    return exit_code(err, e, kNumericError);
  } catch (const std::exception& e) {
    ctx.flush_warnings();
    return exit_code(err, e, kFailure);
  }
  return kFailure;
}

}  // namespace jetspec::cli
