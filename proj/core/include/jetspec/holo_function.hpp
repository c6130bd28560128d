#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "jetspec/series.hpp"

namespace jetspec {

// A holomorphic function given as a closed expression tree. Jets are taken
// by truncated-series arithmetic over the tree, never by symbolic or
// numerical differentiation, so the exact backend stays exact.
//
// exp and log are available for the float backend only.
template <Field T>
class HoloFunction {
public:
  struct BlaschkeZero {
    T zero;
    int multiplicity = 1;
  };

  // Coefficients lowest degree first.
  static HoloFunction polynomial(std::vector<T> coeffs);
  static HoloFunction constant(T c) { return polynomial({std::move(c)}); }
  static HoloFunction identity() { return polynomial({T(0), T(1)}); }
  static HoloFunction rational(std::vector<T> num, std::vector<T> den);
  // factor * prod ((z - zero) / (1 - conj(zero) z))^multiplicity. Zeros must
  // lie strictly inside the disk and |factor| = 1.
  static HoloFunction blaschke(std::vector<BlaschkeZero> zeros, T factor = T(1));
  static HoloFunction sum(std::vector<HoloFunction> terms);
  static HoloFunction product(std::vector<HoloFunction> factors);
  static HoloFunction compose(HoloFunction outer, HoloFunction inner);
  static HoloFunction exp(HoloFunction arg)
    requires(!is_exact_v<T>);
  static HoloFunction log(HoloFunction arg)
    requires(!is_exact_v<T>);

  friend HoloFunction operator+(HoloFunction a, HoloFunction b) { return sum({std::move(a), std::move(b)}); }
  friend HoloFunction operator*(HoloFunction a, HoloFunction b) { return product({std::move(a), std::move(b)}); }
  friend HoloFunction operator-(HoloFunction a, HoloFunction b) {
    return sum({std::move(a), product({constant(T(-1)), std::move(b)})});
  }

  // Throws PoleError at a pole or log branch point.
  T operator()(const T& z) const;

  // Monomial Taylor coefficients c_0..c_n of f(z + h). Throws PoleError.
  series::Coeffs<T> taylor(const T& z, int n) const;

  // Numerator/denominator when the tree is polynomial, rational or Blaschke.
  std::optional<std::pair<std::vector<T>, std::vector<T>>> as_rational() const;

  // Singularities that can be located in closed form (poles of rational and
  // Blaschke nodes, pulled back through rational inner functions; zeros of
  // log arguments). Used to validate quadrature contours.
  std::vector<Complex> known_singularities() const;

  std::string describe() const;

  struct Node;

private:
  explicit HoloFunction(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

}  // namespace jetspec
