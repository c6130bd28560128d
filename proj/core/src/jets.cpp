#include "jetspec/jets.hpp"

#include <string>

namespace jetspec {

template <Field T>
Jet<T>::Jet(T base, std::vector<T> derivatives) : base_(std::move(base)), derivatives_(std::move(derivatives)) {
  if (derivatives_.empty()) throw PreconditionViolation("a jet needs at least the value coefficient");
}

template <Field T>
Jet<T> Jet<T>::from_taylor(T base, const series::Coeffs<T>& taylor) {
  std::vector<T> d(taylor.size());
  for (std::size_t j = 0; j < taylor.size(); ++j) d[j] = taylor[j] * series::factorial<T>(static_cast<int>(j));
  return Jet(std::move(base), std::move(d));
}

template <Field T>
series::Coeffs<T> Jet<T>::taylor() const {
  series::Coeffs<T> c(derivatives_.size());
  for (std::size_t j = 0; j < c.size(); ++j) c[j] = derivatives_[j] / series::factorial<T>(static_cast<int>(j));
  return c;
}

template <Field T>
bool approx_equal(const Jet<T>& a, const Jet<T>& b, double tol) {
  if (a.order() != b.order() || !approx_equal(a.base(), b.base(), tol)) return false;
  for (std::size_t j = 0; j < a.derivatives().size(); ++j) {
    if (!approx_equal(a.derivatives()[j], b.derivatives()[j], tol)) return false;
  }
  return true;
}

template <Field T>
Jet<T> jet_of(const HoloFunction<T>& f, const T& z, int n) {
  return Jet<T>::from_taylor(z, f.taylor(z, n));
}

namespace {

template <Field T>
void require_compatible(const Jet<T>& p, const Jet<T>& q, const Tolerances& tol, const char* op) {
  if (p.order() != q.order()) {
    throw PreconditionViolation(std::string(op) + ": jet orders differ (" + std::to_string(p.order()) + " vs " +
                                std::to_string(q.order()) + ")");
  }
  if (!approx_equal(p.base(), q.base(), tol.equal)) {
    throw PreconditionViolation(std::string(op) + ": jet base points differ");
  }
}

}  // namespace

template <Field T>
Jet<T> jet_add(const Jet<T>& p, const Jet<T>& q, const Tolerances& tol) {
  require_compatible(p, q, tol, "jet_add");
  std::vector<T> d(p.derivatives());
  for (std::size_t j = 0; j < d.size(); ++j) d[j] += q.derivatives()[j];
  return Jet<T>(p.base(), std::move(d));
}

template <Field T>
Jet<T> jet_mul(const Jet<T>& p, const Jet<T>& q, const Tolerances& tol) {
  require_compatible(p, q, tol, "jet_mul");
  return Jet<T>::from_taylor(p.base(), series::mul(p.taylor(), q.taylor()));
}

template <Field T>
Jet<T> jet_compose(const Jet<T>& outer, const Jet<T>& inner, const Tolerances& tol) {
  if (outer.order() != inner.order()) throw PreconditionViolation("jet_compose: jet orders differ");
  if (!approx_equal(inner.value(), outer.base(), tol.equal)) {
    throw PreconditionViolation("jet_compose: inner value does not match the outer base point");
  }
  return Jet<T>::from_taylor(inner.base(), series::compose(outer.taylor(), inner.taylor()));
}

template <Field T>
HoloFunction<T> mobius_function(const GroupElement<T>& g) {
  return HoloFunction<T>::rational({-conj(g.beta()), conj(g.alpha())}, {g.alpha(), -g.beta()});
}

template <Field T>
HoloFunction<T> rho1(const GroupElement<T>& g, const HoloFunction<T>& f) {
  auto multiplier = HoloFunction<T>::rational({T(1)}, {g.alpha(), -g.beta()});
  return HoloFunction<T>::product({multiplier, HoloFunction<T>::compose(f, mobius_function(g))});
}

template <Field T>
Jet<T> rho1_prolonged(const GroupElement<T>& g, const Jet<T>& jf) {
  const int n = jf.order();
  const T& w = jf.base();
  // mobius_disk(g, .) is the map of g^-1, so its inverse is the map of g.
  const T z0 = (g.alpha() * w + conj(g.beta())) / (g.beta() * w + conj(g.alpha()));

  const auto map = mobius_function(g).taylor(z0, n);
  const auto multiplier = HoloFunction<T>::rational({T(1)}, {g.alpha(), -g.beta()}).taylor(z0, n);
  return Jet<T>::from_taylor(z0, series::mul(multiplier, series::compose(jf.taylor(), map)));
}

template <Field T>
int degree_of_zero(const HoloFunction<T>& phi, const T& lambda, int n_max, const Tolerances& tol) {
  if (n_max < 1) throw PreconditionViolation("degree_of_zero: n_max must be at least 1");
  const auto c = phi.taylor(lambda, n_max);
  for (int m = 1; m <= n_max; ++m) {
    if (!is_zero(c[static_cast<std::size_t>(m)], tol.degree)) return m;
  }
  throw DegreeExceedsOrder("degree_of_zero: jet coefficients 1.." + std::to_string(n_max) + " all vanish", n_max);
}

#define JETSPEC_INSTANTIATE(T)                                                               \
  template class Jet<T>;                                                                     \
  template bool approx_equal(const Jet<T>&, const Jet<T>&, double);                         \
  template Jet<T> jet_of(const HoloFunction<T>&, const T&, int);                            \
  template Jet<T> jet_add(const Jet<T>&, const Jet<T>&, const Tolerances&);                 \
  template Jet<T> jet_mul(const Jet<T>&, const Jet<T>&, const Tolerances&);                 \
  template Jet<T> jet_compose(const Jet<T>&, const Jet<T>&, const Tolerances&);             \
  template HoloFunction<T> mobius_function(const GroupElement<T>&);                         \
  template HoloFunction<T> rho1(const GroupElement<T>&, const HoloFunction<T>&);            \
  template Jet<T> rho1_prolonged(const GroupElement<T>&, const Jet<T>&);                    \
  template int degree_of_zero(const HoloFunction<T>&, const T&, int, const Tolerances&);

JETSPEC_INSTANTIATE(GaussRational)
JETSPEC_INSTANTIATE(Complex)

#undef JETSPEC_INSTANTIATE

}  // namespace jetspec
