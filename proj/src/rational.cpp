#include "c0t/rational.hpp"

#include "c0t/errors.hpp"

#include <cctype>
#include <charconv>
#include <cmath>

namespace c0t {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw InvalidInput("not a rational number: \"" + std::string(text) + "\"");
}

mpz_class pow10(unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
  return r;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) bad(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }

  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    mpz_class n(std::string(num), 10);
    mpz_class d(std::string(den), 10);
    if (d == 0) throw InvalidInput("zero denominator in \"" + std::string(text) + "\"");
    Rational r(n, d);
    r.canonicalize();
    return negative ? Rational(-r) : r;
  }

  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    auto exp_text = s.substr(e + 1);
    s = s.substr(0, e);
    bool exp_negative = false;
    if (!exp_text.empty() && (exp_text.front() == '+' || exp_text.front() == '-')) {
      exp_negative = exp_text.front() == '-';
      exp_text.remove_prefix(1);
    }
    if (!all_digits(exp_text) || exp_text.size() > 6) bad(text);
    std::from_chars(exp_text.data(), exp_text.data() + exp_text.size(), exponent);
    if (exp_negative) exponent = -exponent;
  }

  std::string_view int_part = s;
  std::string_view frac_part;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    int_part = s.substr(0, dot);
    frac_part = s.substr(dot + 1);
  }
  if (int_part.empty() && frac_part.empty()) bad(text);
  if (!int_part.empty() && !all_digits(int_part)) bad(text);
  if (!frac_part.empty() && !all_digits(frac_part)) bad(text);

  std::string digits = std::string(int_part) + std::string(frac_part);
  mpz_class mantissa(digits.empty() ? std::string("0") : digits, 10);
  exponent -= static_cast<long>(frac_part.size());

  Rational r;
  if (exponent >= 0) {
    r = Rational(mantissa * pow10(static_cast<unsigned long>(exponent)));
  } else {
    r = Rational(mantissa, pow10(static_cast<unsigned long>(-exponent)));
    r.canonicalize();
  }
  return negative ? Rational(-r) : r;
}

std::string to_string(const Rational& value) { return value.get_str(10); }

double to_double(const Rational& value) {
  // get_d truncates toward zero; step to the neighbour when it is nearer.
  const double t = value.get_d();
  if (!std::isfinite(t) || Rational(t) == value) return t;
  const double away = std::nextafter(t, value > t ? HUGE_VAL : -HUGE_VAL);
  if (!std::isfinite(away)) return t;
  const Rational gap_t = abs(Rational(value - Rational(t)));
  const Rational gap_away = abs(Rational(Rational(away) - value));
  return gap_away < gap_t ? away : t;
}

Rational from_double(double value) {
  if (!std::isfinite(value)) throw InvalidInput("non-finite floating point value");
  return Rational(value);
}

}  // namespace c0t
