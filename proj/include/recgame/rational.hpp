#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace recgame {

// Arbitrary-precision rational. All arithmetic is exact; values stay
// canonical (reduced fraction, positive denominator).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long num) : v_(num) {}
  Rational(long num, long den);
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  // Accepts an integer ("3"), a decimal ("0.35"), or a fraction ("7/10").
  // Throws std::invalid_argument on anything else.
  static Rational parse(std::string_view text);

  double to_double() const { return v_.get_d(); }
  std::string fraction_str() const;  // "7/10", or "3" when the denominator is 1
  std::string decimal_str() const;   // 12 significant digits

  const mpq_class& raw() const { return v_; }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_.get_mpq_t(), b.v_.get_mpq_t()) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_.get_mpq_t(), b.v_.get_mpq_t()) < 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;
};

inline Rational abs(const Rational& r) { return r < Rational(0) ? -r : r; }

// Formats a double with 12 significant digits (the report precision used
// throughout the CLI).
std::string decimal12(double x);

// Uniform glue so the game algorithms can run both on exact rationals and
// on doubles. `close` is the distribution-comparison tolerance; `improves`
// is the strict-improvement threshold used by better-response dynamics.
template <typename T>
struct numeric_traits;

template <>
struct numeric_traits<Rational> {
  static constexpr bool exact = true;
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_ratio(long num, long den) { return Rational(num, den); }
  static bool close(const Rational& a, const Rational& b) { return a == b; }
  static bool improves(const Rational& gain) { return gain > Rational(0); }
  static double to_double(const Rational& v) { return v.to_double(); }
  static std::string fraction_str(const Rational& v) { return v.fraction_str(); }
  static std::string decimal_str(const Rational& v) { return v.decimal_str(); }
};

template <>
struct numeric_traits<double> {
  static constexpr bool exact = false;
  static constexpr double close_tol = 1e-12;
  static constexpr double improve_tol = 1e-9;
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_ratio(long num, long den) { return static_cast<double>(num) / static_cast<double>(den); }
  static bool close(double a, double b) { return std::fabs(a - b) <= close_tol; }
  static bool improves(double gain) { return gain > improve_tol; }
  static double to_double(double v) { return v; }
  static std::string fraction_str(double v) { return decimal12(v); }
  static std::string decimal_str(double v) { return decimal12(v); }
};

}  // namespace recgame
