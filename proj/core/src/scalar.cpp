#include "twosig/scalar.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace twosig {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_decimal(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

Integer parse_decimal(std::string_view s, std::string_view original) {
  if (!is_decimal(s)) throw ParseError("not an integer: '" + std::string(original) + "'");
  bool negative = s.front() == '-';
  if (s.front() == '+' || s.front() == '-') s.remove_prefix(1);
  Integer value{std::string(s)};
  return negative ? Integer(-value) : value;
}

}  // namespace

Integer ScalarTraits<Integer>::parse(std::string_view text) {
  return parse_decimal(trim(text), text);
}

Rational ScalarTraits<Rational>::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(parse_decimal(s, text));
  Integer num = parse_decimal(trim(s.substr(0, slash)), text);
  std::string_view den_text = trim(s.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '+' || den_text.front() == '-')) {
    throw ParseError("rational denominator must be unsigned: '" + std::string(text) + "'");
  }
  Integer den = parse_decimal(den_text, text);
  if (den == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string ScalarTraits<Rational>::format(const Rational& x) {
  return boost::multiprecision::numerator(x).str() + "/" + boost::multiprecision::denominator(x).str();
}

Boolean ScalarTraits<Boolean>::parse(std::string_view text) {
  std::string_view s = trim(text);
  if (s == "0" || s == "false") return Boolean(false);
  if (s == "1" || s == "true") return Boolean(true);
  throw ParseError("not a boolean: '" + std::string(text) + "'");
}

double ScalarTraits<double>::parse(std::string_view text) {
  std::string_view s = trim(text);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError("not a number: '" + std::string(text) + "'");
  }
  return value;
}

std::string ScalarTraits<double>::format(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

}  // namespace twosig
