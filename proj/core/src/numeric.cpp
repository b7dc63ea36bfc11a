#include "ramex/numeric.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace ramex {

std::string format_sig12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

std::string to_display(double x) { return format_sig12(x); }

std::string to_display(const Rational& q) { return q.str(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  bool neg = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  Integer v{std::string(s)};
  return neg ? Integer(-v) : v;
}

Integer pow10(long k) {
  Integer v = 1;
  for (long i = 0; i < k; ++i) v *= 10;
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Integer num = parse_integer(text.substr(0, slash));
    Integer den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in rational");
    return make_ratio(std::move(num), std::move(den));
  }

  // Decimal form: [sign] digits [. digits] [e[sign]digits]
  std::string_view s = text;
  bool neg = false;
  if (s.front() == '+' || s.front() == '-') {
    neg = s.front() == '-';
    s.remove_prefix(1);
  }
  long exp10 = 0;
  if (auto epos = s.find_first_of("eE"); epos != std::string_view::npos) {
    Integer e = parse_integer(s.substr(epos + 1));
    if (e > 4096 || e < -4096) {
      throw std::invalid_argument("exponent out of range: '" +
                                  std::string(text) + "'");
    }
    exp10 = e.convert_to<long>();
    s = s.substr(0, epos);
  }
  std::string digits;
  long frac_digits = 0;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view ip = s.substr(0, dot), fp = s.substr(dot + 1);
    if (ip.empty() && fp.empty()) {
      throw std::invalid_argument("malformed number: '" + std::string(text) +
                                  "'");
    }
    if (!ip.empty() && !all_digits(ip)) {
      throw std::invalid_argument("malformed number: '" + std::string(text) +
                                  "'");
    }
    if (!fp.empty() && !all_digits(fp)) {
      throw std::invalid_argument("malformed number: '" + std::string(text) +
                                  "'");
    }
    digits = std::string(ip) + std::string(fp);
    frac_digits = static_cast<long>(fp.size());
  } else {
    if (!all_digits(s)) {
      throw std::invalid_argument("malformed number: '" + std::string(text) +
                                  "'");
    }
    digits = std::string(s);
  }
  if (digits.empty()) {
    throw std::invalid_argument("malformed number: '" + std::string(text) +
                                "'");
  }

  Integer mantissa(digits);
  if (neg) mantissa = -mantissa;
  const long net = exp10 - frac_digits;
  if (net >= 0) return Rational(mantissa * pow10(net));
  return make_ratio(std::move(mantissa), pow10(-net));
}

double parse_double(std::string_view text) {
  std::string buf(text);
  if (buf.empty()) throw std::invalid_argument("empty numeric literal");
  char* end = nullptr;
  const double v = std::strtod(buf.c_str(), &end);
  if (end != buf.c_str() + buf.size()) {
    throw std::invalid_argument("malformed number: '" + buf + "'");
  }
  return v;
}

}  // namespace ramex
