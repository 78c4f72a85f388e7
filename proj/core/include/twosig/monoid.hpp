#ifndef TWOSIG_MONOID_HPP
#define TWOSIG_MONOID_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "twosig/errors.hpp"
#include "twosig/scalar.hpp"

namespace twosig {

/// Largest supported number of letters (data channels).
inline constexpr std::size_t kMaxLetters = 8;

/// Element of the free commutative monoid on letters 1..d, stored as its
/// exponent vector. The all-zero vector is the neutral element epsilon.
class MonoidElement {
 public:
  MonoidElement() = default;

  /// Epsilon over d letters.
  explicit MonoidElement(std::size_t d);

  /// Exponent vector; its length is d.
  explicit MonoidElement(std::span<const unsigned> exponents);
  MonoidElement(std::initializer_list<unsigned> exponents);

  static MonoidElement epsilon(std::size_t d) { return MonoidElement(d); }

  /// The generator j (1-based) over d letters.
  static MonoidElement letter(std::size_t d, std::size_t j);

  std::size_t d() const { return d_; }
  unsigned operator[](std::size_t j) const { return exponents_[j]; }
  std::vector<unsigned> exponents() const;

  bool is_epsilon() const;
  unsigned weight() const;

  /// Paper-style text: "e" for epsilon; for d = 1 the exponent itself;
  /// otherwise letters joined by '*', e.g. "1*2*2".
  std::string to_string() const;

  friend bool operator==(const MonoidElement&, const MonoidElement&) = default;
  /// Lexicographic on (d, exponents).
  friend std::strong_ordering operator<=>(const MonoidElement& a, const MonoidElement& b);

 private:
  std::array<std::uint16_t, kMaxLetters> exponents_{};
  std::uint8_t d_ = 0;
};

/// Componentwise sum of exponent vectors.
MonoidElement star(const MonoidElement& a, const MonoidElement& b);

/// Parses the text form produced by MonoidElement::to_string for the given d.
MonoidElement parse_monoid(std::string_view text, std::size_t d);

/// The evaluation homomorphism: product of z_j^{e_j}.
template <Semiring T>
T evaluate(std::span<const T> z, const MonoidElement& m) {
  if (z.size() != m.d()) throw DimensionMismatch("evaluate: vector length differs from number of letters");
  T result = one<T>();
  for (std::size_t j = 0; j < m.d(); ++j) {
    if (m[j] != 0) result *= twosig::pow(z[j], m[j]);
  }
  return result;
}

}  // namespace twosig

#endif  // TWOSIG_MONOID_HPP
