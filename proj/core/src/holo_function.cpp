#include "jetspec/holo_function.hpp"

#include <limits>
#include <sstream>
#include <variant>

#include "jetspec/polynomial.hpp"

namespace jetspec {

template <Field T>
struct HoloFunction<T>::Node {
  struct Poly {
    std::vector<T> c;
  };
  struct Rat {
    std::vector<T> num, den;
  };
  struct Blaschke {
    std::vector<BlaschkeZero> zeros;
    T factor;
  };
  struct Sum {
    std::vector<HoloFunction> terms;
  };
  struct Product {
    std::vector<HoloFunction> factors;
  };
  struct Compose {
    HoloFunction outer, inner;
  };
  struct Exp {
    HoloFunction arg;
  };
  struct Log {
    HoloFunction arg;
  };
  std::variant<Poly, Rat, Blaschke, Sum, Product, Compose, Exp, Log> v;
};

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Exact: den == 0. Float: |den| is at rounding level of its terms.
template <Field T>
bool vanishes(const T& value, double scale) {
  if constexpr (is_exact_v<T>) {
    return value.is_zero();
  } else {
    return std::abs(value) <= 64.0 * std::numeric_limits<double>::epsilon() * scale;
  }
}

template <Field T>
double term_scale(const std::vector<T>& p, const T& z) {
  double s = 0.0;
  const double az = magnitude(z);
  for (auto it = p.rbegin(); it != p.rend(); ++it) s = s * az + magnitude(*it);
  return s;
}

template <Field T>
std::vector<T> poly_mul(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<T> c(a.size() + b.size() - 1, T(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

template <Field T>
std::vector<T> poly_add(const std::vector<T>& a, const std::vector<T>& b) {
  std::vector<T> c(std::max(a.size(), b.size()), T(0));
  for (std::size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return c;
}

template <Field T>
bool all_zero(const std::vector<T>& p) {
  for (const auto& c : p)
    if (!is_zero(c, 0.0)) return false;
  return true;
}

template <Field T>
std::vector<Complex> poly_roots(const std::vector<T>& p) {
  std::vector<Complex> c;
  c.reserve(p.size());
  for (const auto& x : p) c.push_back(to_complex(x));
  while (!c.empty() && c.back() == Complex(0.0)) c.pop_back();
  if (c.size() < 2) return {};
  return aberth_roots(c);
}

template <Field T>
std::string fmt(const T& x) {
  if constexpr (is_exact_v<T>) {
    return x.to_string();
  } else {
    return format_complex(x, 6);
  }
}

template <Field T>
std::string fmt_list(const std::vector<T>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + fmt(v[i]);
  return s + "]";
}

}  // namespace

template <Field T>
HoloFunction<T> HoloFunction<T>::polynomial(std::vector<T> coeffs) {
  if (coeffs.empty()) coeffs.push_back(T(0));
  return HoloFunction(std::make_shared<const Node>(Node{typename Node::Poly{std::move(coeffs)}}));
}

template <Field T>
HoloFunction<T> HoloFunction<T>::rational(std::vector<T> num, std::vector<T> den) {
  if (all_zero(den)) throw PreconditionViolation("rational function with zero denominator");
  if (num.empty()) num.push_back(T(0));
  return HoloFunction(std::make_shared<const Node>(Node{typename Node::Rat{std::move(num), std::move(den)}}));
}

template <Field T>
HoloFunction<T> HoloFunction<T>::blaschke(std::vector<BlaschkeZero> zeros, T factor) {
  for (const auto& z : zeros) {
    if (z.multiplicity < 1) throw PreconditionViolation("Blaschke zero multiplicity must be positive");
    if (!inside_unit_disk(z.zero)) {
      throw PreconditionViolation("Blaschke zero " + fmt(z.zero) + " is not strictly inside the unit disk");
    }
  }
  bool unimodular;
  if constexpr (is_exact_v<T>) {
    unimodular = factor.norm() == 1;
  } else {
    unimodular = std::abs(std::abs(factor) - 1.0) <= 1e-12;
  }
  if (!unimodular) throw PreconditionViolation("Blaschke factor must have modulus 1");
  return HoloFunction(
      std::make_shared<const Node>(Node{typename Node::Blaschke{std::move(zeros), std::move(factor)}}));
}

template <Field T>
HoloFunction<T> HoloFunction<T>::sum(std::vector<HoloFunction> terms) {
  if (terms.empty()) return constant(T(0));
  return HoloFunction(std::make_shared<const Node>(Node{typename Node::Sum{std::move(terms)}}));
}

template <Field T>
HoloFunction<T> HoloFunction<T>::product(std::vector<HoloFunction> factors) {
  if (factors.empty()) return constant(T(1));
  return HoloFunction(std::make_shared<const Node>(Node{typename Node::Product{std::move(factors)}}));
}

template <Field T>
HoloFunction<T> HoloFunction<T>::compose(HoloFunction outer, HoloFunction inner) {
  return HoloFunction(
      std::make_shared<const Node>(Node{typename Node::Compose{std::move(outer), std::move(inner)}}));
}

template <Field T>
HoloFunction<T> HoloFunction<T>::exp(HoloFunction arg)
  requires(!is_exact_v<T>)
{
  return HoloFunction(std::make_shared<const Node>(Node{typename Node::Exp{std::move(arg)}}));
}

template <Field T>
HoloFunction<T> HoloFunction<T>::log(HoloFunction arg)
  requires(!is_exact_v<T>)
{
  return HoloFunction(std::make_shared<const Node>(Node{typename Node::Log{std::move(arg)}}));
}

template <Field T>
T HoloFunction<T>::operator()(const T& z) const {
  return taylor(z, 0)[0];
}

template <Field T>
series::Coeffs<T> HoloFunction<T>::taylor(const T& z, int n) const {
  using series::Coeffs;
  if (n < 0) throw PreconditionViolation("jet order must be non-negative");
  const auto len = static_cast<std::size_t>(n) + 1;

  auto quotient = [&](const std::vector<T>& num, const std::vector<T>& den) {
    Coeffs<T> d = series::polynomial_at(den, z, n);
    if (vanishes(d[0], term_scale(den, z))) {
      throw PoleError("pole at z = " + fmt(z) + " (denominator vanishes)");
    }
    return series::mul(series::polynomial_at(num, z, n), series::reciprocal(d));
  };

  return std::visit(
      overloaded{
          [&](const typename Node::Poly& p) { return series::polynomial_at(p.c, z, n); },
          [&](const typename Node::Rat& r) { return quotient(r.num, r.den); },
          [&](const typename Node::Blaschke& b) {
            Coeffs<T> acc(len, T(0));
            acc[0] = b.factor;
            for (const auto& zero : b.zeros) {
              const Coeffs<T> f = quotient({-zero.zero, T(1)}, {T(1), -conj(zero.zero)});
              for (int m = 0; m < zero.multiplicity; ++m) acc = series::mul(acc, f);
            }
            return acc;
          },
          [&](const typename Node::Sum& s) {
            Coeffs<T> acc(len, T(0));
            for (const auto& t : s.terms) acc = series::add(acc, t.taylor(z, n));
            return acc;
          },
          [&](const typename Node::Product& p) {
            Coeffs<T> acc(len, T(0));
            acc[0] = T(1);
            for (const auto& f : p.factors) acc = series::mul(acc, f.taylor(z, n));
            return acc;
          },
          [&](const typename Node::Compose& c) {
            const Coeffs<T> in = c.inner.taylor(z, n);
            return series::compose(c.outer.taylor(in[0], n), in);
          },
          [&](const typename Node::Exp& e) -> Coeffs<T> {
            if constexpr (is_exact_v<T>) {
              throw PreconditionViolation("exp is not available in the exact backend");
            } else {
              return series::exp(e.arg.taylor(z, n));
            }
          },
          [&](const typename Node::Log& l) -> Coeffs<T> {
            if constexpr (is_exact_v<T>) {
              throw PreconditionViolation("log is not available in the exact backend");
            } else {
              const Coeffs<T> a = l.arg.taylor(z, n);
              if (a[0] == Complex(0.0)) throw PoleError("log argument vanishes at z = " + fmt(z));
              return series::log(a);
            }
          },
      },
      node_->v);
}

template <Field T>
std::optional<std::pair<std::vector<T>, std::vector<T>>> HoloFunction<T>::as_rational() const {
  using Pair = std::pair<std::vector<T>, std::vector<T>>;
  return std::visit(
      overloaded{
          [&](const typename Node::Poly& p) -> std::optional<Pair> { return Pair{p.c, {T(1)}}; },
          [&](const typename Node::Rat& r) -> std::optional<Pair> { return Pair{r.num, r.den}; },
          [&](const typename Node::Blaschke& b) -> std::optional<Pair> {
            std::vector<T> num{b.factor}, den{T(1)};
            for (const auto& zero : b.zeros) {
              for (int m = 0; m < zero.multiplicity; ++m) {
                num = poly_mul(num, {-zero.zero, T(1)});
                den = poly_mul(den, {T(1), -conj(zero.zero)});
              }
            }
            return Pair{num, den};
          },
          [&](const typename Node::Sum& s) -> std::optional<Pair> {
            Pair acc{{T(0)}, {T(1)}};
            for (const auto& t : s.terms) {
              auto r = t.as_rational();
              if (!r) return std::nullopt;
              acc = {poly_add(poly_mul(acc.first, r->second), poly_mul(r->first, acc.second)),
                     poly_mul(acc.second, r->second)};
            }
            return acc;
          },
          [&](const typename Node::Product& p) -> std::optional<Pair> {
            Pair acc{{T(1)}, {T(1)}};
            for (const auto& f : p.factors) {
              auto r = f.as_rational();
              if (!r) return std::nullopt;
              acc = {poly_mul(acc.first, r->first), poly_mul(acc.second, r->second)};
            }
            return acc;
          },
          [&](const auto&) -> std::optional<Pair> { return std::nullopt; },
      },
      node_->v);
}

template <Field T>
std::vector<Complex> HoloFunction<T>::known_singularities() const {
  auto join = [](std::vector<Complex> a, const std::vector<Complex>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  // Points where the rational function r equals w.
  auto preimages = [](const std::pair<std::vector<T>, std::vector<T>>& r, Complex w) {
    std::vector<Complex> num, den;
    for (const auto& x : r.first) num.push_back(to_complex(x));
    for (const auto& x : r.second) den.push_back(to_complex(x));
    std::vector<Complex> p(std::max(num.size(), den.size()), 0.0);
    for (std::size_t i = 0; i < num.size(); ++i) p[i] += num[i];
    for (std::size_t i = 0; i < den.size(); ++i) p[i] -= w * den[i];
    return poly_roots(p);
  };

  return std::visit(
      overloaded{
          [&](const typename Node::Poly&) { return std::vector<Complex>{}; },
          [&](const typename Node::Rat& r) { return poly_roots(r.den); },
          [&](const typename Node::Blaschke& b) {
            std::vector<Complex> out;
            for (const auto& z : b.zeros) {
              const Complex c = to_complex(z.zero);
              if (c != Complex(0.0)) out.push_back(1.0 / std::conj(c));
            }
            return out;
          },
          [&](const typename Node::Sum& s) {
            std::vector<Complex> out;
            for (const auto& t : s.terms) out = join(std::move(out), t.known_singularities());
            return out;
          },
          [&](const typename Node::Product& p) {
            std::vector<Complex> out;
            for (const auto& f : p.factors) out = join(std::move(out), f.known_singularities());
            return out;
          },
          [&](const typename Node::Compose& c) {
            std::vector<Complex> out = c.inner.known_singularities();
            const auto outer_sing = c.outer.known_singularities();
            if (!outer_sing.empty()) {
              if (auto r = c.inner.as_rational()) {
                for (Complex w : outer_sing) out = join(std::move(out), preimages(*r, w));
              }
            }
            return out;
          },
          [&](const typename Node::Exp& e) { return e.arg.known_singularities(); },
          [&](const typename Node::Log& l) {
            std::vector<Complex> out = l.arg.known_singularities();
            if (auto r = l.arg.as_rational()) out = join(std::move(out), preimages(*r, Complex(0.0)));
            return out;
          },
      },
      node_->v);
}

template <Field T>
std::string HoloFunction<T>::describe() const {
  auto list = [](const auto& items, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < items.size(); ++i) s += (i ? sep : "") + items[i].describe();
    return s;
  };
  return std::visit(
      overloaded{
          [&](const typename Node::Poly& p) { return "poly" + fmt_list(p.c); },
          [&](const typename Node::Rat& r) { return "rational(" + fmt_list(r.num) + " / " + fmt_list(r.den) + ")"; },
          [&](const typename Node::Blaschke& b) {
            std::string s = "blaschke(";
            if (!(b.factor == T(1))) s += fmt(b.factor) + "; ";
            for (std::size_t i = 0; i < b.zeros.size(); ++i) {
              s += (i ? ", " : "") + fmt(b.zeros[i].zero) + "^" + std::to_string(b.zeros[i].multiplicity);
            }
            return s + ")";
          },
          [&](const typename Node::Sum& s) { return "(" + list(s.terms, " + ") + ")"; },
          [&](const typename Node::Product& p) { return "(" + list(p.factors, " * ") + ")"; },
          [&](const typename Node::Compose& c) { return c.outer.describe() + " o " + c.inner.describe(); },
          [&](const typename Node::Exp& e) { return "exp(" + e.arg.describe() + ")"; },
          [&](const typename Node::Log& l) { return "log(" + l.arg.describe() + ")"; },
      },
      node_->v);
}

template class HoloFunction<GaussRational>;
template class HoloFunction<Complex>;

}  // namespace jetspec
