#include "recgame/rational.hpp"

#include <cctype>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace recgame {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(long num, long den) : v_(num, den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.v_ == 0) throw std::invalid_argument("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  auto fail = [&] {
    throw std::invalid_argument("expected an integer, decimal, or p/q fraction, got \"" + std::string(text) + "\"");
  };

  mpq_class value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    std::string_view num = s.substr(0, slash);
    std::string_view den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) fail();
    value = mpq_class(mpz_class(std::string(num), 10), mpz_class(std::string(den), 10));
    if (value.get_den() == 0) throw std::invalid_argument("fraction with zero denominator: \"" + std::string(text) + "\"");
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) fail();
    if (!whole.empty() && !all_digits(whole)) fail();
    if (!frac.empty() && !all_digits(frac)) fail();
    mpz_class scaled(std::string(whole) + std::string(frac), 10);
    mpz_class denom;
    mpz_ui_pow_ui(denom.get_mpz_t(), 10, frac.size());
    value = mpq_class(scaled, denom);
  } else {
    if (!all_digits(s)) fail();
    value = mpq_class(mpz_class(std::string(s), 10));
  }
  value.canonicalize();
  if (negative) value = -value;
  return Rational(std::move(value));
}

std::string Rational::fraction_str() const {
  if (v_.get_den() == 1) return v_.get_num().get_str();
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::string Rational::decimal_str() const { return decimal12(to_double()); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.fraction_str(); }

std::string decimal12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

}  // namespace recgame
