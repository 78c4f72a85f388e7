#include "twosig/monoid.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace twosig {
namespace {

void check_d(std::size_t d) {
  if (d == 0 || d > kMaxLetters) {
    throw DimensionMismatch("number of letters must lie in 1.." + std::to_string(kMaxLetters));
  }
}

std::uint16_t narrow_exponent(unsigned long long e) {
  if (e > std::numeric_limits<std::uint16_t>::max()) throw DimensionMismatch("monoid exponent too large");
  return static_cast<std::uint16_t>(e);
}

unsigned parse_unsigned(std::string_view s, std::string_view original) {
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
    throw ParseError("bad monoid element '" + std::string(original) + "'");
  }
  return value;
}

}  // namespace

MonoidElement::MonoidElement(std::size_t d) {
  check_d(d);
  d_ = static_cast<std::uint8_t>(d);
}

MonoidElement::MonoidElement(std::span<const unsigned> exponents) : MonoidElement(exponents.size()) {
  for (std::size_t j = 0; j < exponents.size(); ++j) exponents_[j] = narrow_exponent(exponents[j]);
}

MonoidElement::MonoidElement(std::initializer_list<unsigned> exponents)
    : MonoidElement(std::span<const unsigned>(exponents.begin(), exponents.size())) {}

MonoidElement MonoidElement::letter(std::size_t d, std::size_t j) {
  MonoidElement m(d);
  if (j == 0 || j > d) throw DimensionMismatch("letter index out of range");
  m.exponents_[j - 1] = 1;
  return m;
}

std::vector<unsigned> MonoidElement::exponents() const {
  return std::vector<unsigned>(exponents_.begin(), exponents_.begin() + d_);
}

bool MonoidElement::is_epsilon() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](std::uint16_t e) { return e == 0; });
}

unsigned MonoidElement::weight() const {
  unsigned w = 0;
  for (std::uint16_t e : exponents_) w += e;
  return w;
}

std::string MonoidElement::to_string() const {
  if (d_ == 1) return std::to_string(exponents_[0]);
  if (is_epsilon()) return "e";
  std::string out;
  for (std::size_t j = 0; j < d_; ++j) {
    for (unsigned k = 0; k < exponents_[j]; ++k) {
      if (!out.empty()) out += '*';
      out += std::to_string(j + 1);
    }
  }
  return out;
}

std::strong_ordering operator<=>(const MonoidElement& a, const MonoidElement& b) {
  if (auto c = a.d_ <=> b.d_; c != 0) return c;
  return a.exponents_ <=> b.exponents_;
}

MonoidElement star(const MonoidElement& a, const MonoidElement& b) {
  if (a.d() != b.d()) throw DimensionMismatch("star: operands over different numbers of letters");
  std::vector<unsigned> e(a.d());
  for (std::size_t j = 0; j < a.d(); ++j) e[j] = a[j] + b[j];
  return MonoidElement(std::span<const unsigned>(e));
}

MonoidElement parse_monoid(std::string_view text, std::size_t d) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s == "e" || s == "ε") return MonoidElement(d);
  if (d == 1) {
    std::vector<unsigned> e{parse_unsigned(s, text)};
    return MonoidElement(std::span<const unsigned>(e));
  }
  std::vector<unsigned> e(d, 0);
  while (!s.empty()) {
    auto pos = s.find('*');
    std::string_view factor = s.substr(0, pos);
    unsigned power = 1;
    if (auto caret = factor.find('^'); caret != std::string_view::npos) {
      power = parse_unsigned(factor.substr(caret + 1), text);
      factor = factor.substr(0, caret);
    }
    unsigned j = parse_unsigned(factor, text);
    if (j == 0 || j > d) throw ParseError("letter out of range in '" + std::string(text) + "'");
    e[j - 1] += power;
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return MonoidElement(std::span<const unsigned>(e));
}

}  // namespace twosig
