#include "dyngame/rational.hpp"

#include <cctype>

#include "dyngame/errors.hpp"

namespace dyngame {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

// [sign] digits. Writes the digit block and the sign separately.
bool scan_integer(std::string_view s, std::string& digits, bool& negative) {
  negative = false;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    negative = s[0] == '-';
    s.remove_prefix(1);
  }
  if (!all_digits(s)) return false;
  digits.assign(s);
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const std::string original(text);
  auto fail = [&original]() -> Rational {
    throw ParseError("not a rational: '" + original + "'");
  };

  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string num_digits, den_digits;
    bool num_neg = false, den_neg = false;
    if (!scan_integer(text.substr(0, slash), num_digits, num_neg)) return fail();
    if (!scan_integer(text.substr(slash + 1), den_digits, den_neg) || den_neg) return fail();
    mpz_class num(num_digits, 10), den(den_digits, 10);  // base pinned: no octal surprises
    if (den == 0) throw ParseError("zero denominator in '" + original + "'");
    if (num_neg) num = -num;
    Rational r(num, den);
    r.canonicalize();
    return r;
  }

  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body[0] == '+' || body[0] == '-')) {
    negative = body[0] == '-';
    body.remove_prefix(1);
  }

  std::string digits;
  mpz_class den(1);
  if (auto dot = body.find('.'); dot != std::string_view::npos) {
    std::string_view whole = body.substr(0, dot);
    std::string_view frac = body.substr(dot + 1);
    if (!all_digits(whole) || !all_digits(frac)) return fail();
    digits.assign(whole);
    digits.append(frac);
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
  } else {
    if (!all_digits(body)) return fail();
    digits.assign(body);
  }

  mpz_class num(digits, 10);
  if (negative) num = -num;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& r) { return r.get_str(); }

}  // namespace dyngame
