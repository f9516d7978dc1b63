#include "gwf/rational.hpp"

#include <charconv>

#include "gwf/error.hpp"

namespace gwf {

std::string to_string(const Rational& r) {
  std::string s = std::to_string(r.numerator());
  if (r.denominator() != 1) s += "/" + std::to_string(r.denominator());
  return s;
}

namespace {

std::int64_t parse_int(std::string_view t, std::string_view whole) {
  std::int64_t v = 0;
  if (!t.empty() && t.front() == '+') t.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw ParseError("bad rational '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text, text));
  std::int64_t p = parse_int(text.substr(0, slash), text);
  std::int64_t q = parse_int(text.substr(slash + 1), text);
  if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  return Rational(p, q);
}

Rational fractional_part(const Rational& r) {
  std::int64_t fl = r.numerator() / r.denominator();
  if (r.numerator() < 0 && r.numerator() % r.denominator() != 0) --fl;
  return r - Rational(fl);
}

}  // namespace gwf
