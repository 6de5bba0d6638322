#pragma once
// Exact rational arithmetic on 64-bit numerator/denominator with overflow
// checks. Big enough for depth-limited IFS endpoint lattices; throws rather
// than silently wrapping.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace rieszpack {

struct Rational {
  std::int64_t num = 0;
  std::int64_t den = 1;

  Rational() = default;
  Rational(std::int64_t n) : num(n), den(1) {}
  Rational(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

  void normalize() {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) { num = -num; den = -den; }
    const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) { num /= g; den /= g; }
  }

  double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }

  std::string str() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }

  // "a/b" or plain integer "a"
  static Rational parse(const std::string& s) {
    const auto slash = s.find('/');
    try {
      if (slash == std::string::npos) return Rational(std::stoll(s));
      return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    } catch (const std::exception&) {
      throw std::invalid_argument("Rational: cannot parse '" + s + "'");
    }
  }
};

namespace detail {
inline std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("Rational: multiply overflow");
  return r;
}
inline std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("Rational: add overflow");
  return r;
}
}  // namespace detail

inline Rational operator+(const Rational& a, const Rational& b) {
  using namespace detail;
  return Rational(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
                  checked_mul(a.den, b.den));
}
inline Rational operator-(const Rational& a, const Rational& b) {
  using namespace detail;
  return Rational(checked_add(checked_mul(a.num, b.den), -checked_mul(b.num, a.den)),
                  checked_mul(a.den, b.den));
}
inline Rational operator*(const Rational& a, const Rational& b) {
  using namespace detail;
  return Rational(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
}
inline Rational operator/(const Rational& a, const Rational& b) {
  using namespace detail;
  if (b.num == 0) throw std::invalid_argument("Rational: division by zero");
  return Rational(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
}
inline Rational operator-(const Rational& a) { return Rational(-a.num, a.den); }

inline bool operator==(const Rational& a, const Rational& b) {
  return a.num == b.num && a.den == b.den;
}
inline bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
inline bool operator<(const Rational& a, const Rational& b) {
  // denominators stay small in practice; checked multiply guards the rest
  return detail::checked_mul(a.num, b.den) < detail::checked_mul(b.num, a.den);
}
inline bool operator<=(const Rational& a, const Rational& b) { return a == b || a < b; }
inline bool operator>(const Rational& a, const Rational& b) { return b < a; }
inline bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

inline Rational pow(Rational base, int exp) {
  if (exp < 0) return pow(Rational(base.den, base.num), -exp);
  Rational r(1);
  while (exp > 0) {
    if (exp & 1) r = r * base;
    base = base * base;
    exp >>= 1;
  }
  return r;
}

}  // namespace rieszpack
