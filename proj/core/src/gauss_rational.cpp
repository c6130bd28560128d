#include "jetspec/scalar.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace jetspec {

namespace {

mpq_class exact_from_double(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("non-finite value has no rational representation");
  }
  mpq_class q;
  mpq_set_d(q.get_mpq_t(), x);
  return q;
}

mpq_class pow10(long e) {
  mpz_class p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(e < 0 ? -e : e));
  return e < 0 ? mpq_class(mpz_class(1), p) : mpq_class(p);
}

}  // namespace

GaussRational GaussRational::from_complex(Complex z) {
  return {exact_from_double(z.real()), exact_from_double(z.imag())};
}

mpq_class GaussRational::parse_rational(std::string_view text) {
  auto bad = [&] { return std::invalid_argument("not a rational number: '" + std::string(text) + "'"); };
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw bad();

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    mpq_class num = parse_rational(text.substr(0, slash));
    mpq_class den = parse_rational(text.substr(slash + 1));
    if (sgn(den) == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }

  std::size_t i = 0;
  bool negative = false;
  if (text[i] == '+' || text[i] == '-') {
    negative = text[i] == '-';
    ++i;
  }
  std::string digits;
  long scale = 0;
  bool seen_digit = false;
  bool seen_point = false;
  for (; i < text.size(); ++i) {
    char c = text[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      seen_digit = true;
      if (seen_point) --scale;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (!seen_digit) throw bad();
  if (i < text.size()) {
    if (text[i] != 'e' && text[i] != 'E') throw bad();
    ++i;
    std::string exponent(text.substr(i));
    if (exponent.empty()) throw bad();
    std::size_t used = 0;
    long e = 0;
    try {
      e = std::stol(exponent, &used);
    } catch (const std::exception&) {
      throw bad();
    }
    if (used != exponent.size()) throw bad();
    scale += e;
  }
  mpq_class value(mpz_class(digits, 10));
  value *= pow10(scale);
  value.canonicalize();
  return negative ? mpq_class(-value) : value;
}

std::string GaussRational::to_string() const {
  if (sgn(im_) == 0) return re_.get_str();
  if (sgn(re_) == 0) return im_.get_str() + "i";
  std::string out = re_.get_str();
  out += sgn(im_) < 0 ? " - " : " + ";
  out += mpq_class(abs(im_)).get_str();
  out += "i";
  return out;
}

GaussRational& GaussRational::operator+=(const GaussRational& o) {
  re_ += o.re_;
  im_ += o.im_;
  return *this;
}

GaussRational& GaussRational::operator-=(const GaussRational& o) {
  re_ -= o.re_;
  im_ -= o.im_;
  return *this;
}

GaussRational& GaussRational::operator*=(const GaussRational& o) {
  mpq_class re = re_ * o.re_ - im_ * o.im_;
  mpq_class im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

GaussRational& GaussRational::operator/=(const GaussRational& o) {
  mpq_class d = o.norm();
  if (sgn(d) == 0) throw std::domain_error("division by exact zero");
  mpq_class re = (re_ * o.re_ + im_ * o.im_) / d;
  mpq_class im = (im_ * o.re_ - re_ * o.im_) / d;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

std::string format_complex(Complex z, int significant_digits) {
  auto fmt = [&](double x) {
    if (x == 0.0) x = 0.0;  // drop negative zero
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", significant_digits, x);
    return std::string(buf);
  };
  if (z.imag() == 0.0) return fmt(z.real());
  std::string out = fmt(z.real());
  out += z.imag() < 0 ? "-" : "+";
  out += fmt(std::abs(z.imag()));
  out += "i";
  return out;
}

}  // namespace jetspec
