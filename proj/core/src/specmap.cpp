#include "jetspec/specmap.hpp"

#include <string>

namespace jetspec {

template <Field T>
int block_degree(const HoloFunction<T>& phi, const T& lambda, int k, const Tolerances& tol) {
  if (k < 1) throw PreconditionViolation("jet order k must be positive");
  try {
    return degree_of_zero(phi, lambda, k, tol);
  } catch (const DegreeExceedsOrder&) {
    return k + 1;
  }
}

std::vector<int> split_profile(int k, int m) {
  if (k < 1 || m < 1) throw PreconditionViolation("split_profile: k and m must be positive");
  if (m > k) return std::vector<int>(static_cast<std::size_t>(k), 1);
  const int q = k / m;
  const int r = k % m;
  std::vector<int> out(static_cast<std::size_t>(r), q + 1);
  out.insert(out.end(), static_cast<std::size_t>(m - r), q);
  return out;
}

template <Field T>
SpectrumPoint<T> map_point_literal(const HoloFunction<T>& phi, const SpectrumPoint<T>& p, const Tolerances& tol) {
  const int m = block_degree(phi, p.lambda, p.k, tol);
  return {phi(p.lambda), std::max(1, p.k / m), p.label};
}

template <Field T>
Spectrum<T> map_point_split(const HoloFunction<T>& phi, const SpectrumPoint<T>& p, const Tolerances& tol) {
  const int m = block_degree(phi, p.lambda, p.k, tol);
  const T image = phi(p.lambda);
  Spectrum<T> out;
  for (int len : split_profile(p.k, m)) out.points.push_back({image, len, p.label});
  return out;
}

template <Field T>
Spectrum<T> map_spectrum(const HoloFunction<T>& phi, const Spectrum<T>& s, MapMode mode, const Tolerances& tol) {
  Spectrum<T> out;
  for (const auto& p : s.points) {
    if (mode == MapMode::literal) {
      out.points.push_back(map_point_literal(phi, p, tol));
    } else {
      for (auto& q : map_point_split(phi, p, tol).points) out.points.push_back(std::move(q));
    }
  }
  canonical_order(out);
  return out;
}

namespace {

template <Field T>
std::vector<T> distinct_images(const std::vector<T>& images, const Tolerances& tol) {
  std::vector<T> out;
  for (const auto& mu : images) {
    bool merged = false;
    for (const auto& seen : out) {
      if (approx_equal(seen, mu, tol.equal)) {
        merged = true;
        break;
      }
      if constexpr (!is_exact_v<T>) {
        if (std::abs(seen - mu) <= tol.eigen) {
          throw EigenvalueCollision("eigenvalue images " + format_complex(seen) + " and " + format_complex(mu) +
                                    " are closer than the clustering radius but not equal");
        }
      }
    }
    if (!merged) out.push_back(mu);
  }
  return out;
}

}  // namespace

template <Field T>
MappingReport<T> verify_mapping(const HoloFunction<T>& phi, const JordanSpec<T>& spec, const Tolerances& tol) {
  MappingReport<T> report;
  for (const auto& b : spec.blocks) report.source.points.push_back({b.value, b.length, b.label});
  canonical_order(report.source);

  report.predicted = map_spectrum(phi, report.source, MapMode::split, tol);

  std::vector<T> images;
  for (const auto& p : report.source.points) images.push_back(phi(p.lambda));
  const Matrix<T> b = apply_function_jet(phi, spec, tol);
  report.recomputed = spectrum(b, std::optional<std::vector<T>>(distinct_images(images, tol)), tol);
  report.match = same_multiset(report.predicted, report.recomputed, tol);

  for (const auto& p : report.source.points) {
    const int m = block_degree(phi, p.lambda, p.k, tol);
    const auto literal = map_point_literal(phi, p, tol);
    auto split = split_profile(p.k, m);
    if (split.size() != 1 || split.front() != literal.k) {
      report.literal_discrepancies.push_back({p, m, literal, std::move(split)});
    }
  }
  return report;
}

#define JETSPEC_INSTANTIATE(T)                                                                          \
  template int block_degree(const HoloFunction<T>&, const T&, int, const Tolerances&);                 \
  template SpectrumPoint<T> map_point_literal(const HoloFunction<T>&, const SpectrumPoint<T>&,         \
                                              const Tolerances&);                                       \
  template Spectrum<T> map_point_split(const HoloFunction<T>&, const SpectrumPoint<T>&, const Tolerances&); \
  template Spectrum<T> map_spectrum(const HoloFunction<T>&, const Spectrum<T>&, MapMode, const Tolerances&); \
  template MappingReport<T> verify_mapping(const HoloFunction<T>&, const JordanSpec<T>&, const Tolerances&);

JETSPEC_INSTANTIATE(GaussRational)
JETSPEC_INSTANTIATE(Complex)

#undef JETSPEC_INSTANTIATE

}  // namespace jetspec
