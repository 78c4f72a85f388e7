#ifndef TWOSIG_SCALAR_HPP
#define TWOSIG_SCALAR_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <type_traits>

#include "twosig/errors.hpp"

namespace twosig {

/// Arbitrary-precision signed integer; the default exact scalar.
using Integer = boost::multiprecision::cpp_int;

/// Exact rational with canonical (gcd-reduced, positive denominator) form.
using Rational = boost::multiprecision::cpp_rational;

/// The Boolean semiring: addition is OR, multiplication is AND.
/// It has no additive inverses, so it only satisfies the Semiring tier.
struct Boolean {
  bool value = false;

  constexpr Boolean() = default;
  constexpr explicit Boolean(bool v) : value(v) {}

  friend constexpr Boolean operator+(Boolean a, Boolean b) { return Boolean(a.value || b.value); }
  friend constexpr Boolean operator*(Boolean a, Boolean b) { return Boolean(a.value && b.value); }
  constexpr Boolean& operator+=(Boolean b) { value = value || b.value; return *this; }
  constexpr Boolean& operator*=(Boolean b) { value = value && b.value; return *this; }
  friend constexpr bool operator==(Boolean, Boolean) = default;
  friend constexpr auto operator<=>(Boolean, Boolean) = default;
};

inline std::ostream& operator<<(std::ostream& os, Boolean b) { return os << (b.value ? '1' : '0'); }

/// Per-type scalar facts. Specialized below for every supported scalar.
///   zero(), one()       additive / multiplicative identities
///   is_ring             subtraction is available
///   is_domain           no zero divisors (cancellation)
///   is_exact            equality is decidable and meaningful
///   name                short identifier used by the CLI and reports
///   from_int()          image of a machine integer
///   parse(), format()   text forms
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<Integer> {
  static constexpr bool is_ring = true;
  static constexpr bool is_domain = true;
  static constexpr bool is_exact = true;
  static constexpr std::string_view name = "int";
  static Integer zero() { return Integer(0); }
  static Integer one() { return Integer(1); }
  static Integer from_int(long long v) { return Integer(v); }
  static Integer parse(std::string_view text);
  static std::string format(const Integer& x) { return x.str(); }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr bool is_ring = true;
  static constexpr bool is_domain = true;
  static constexpr bool is_exact = true;
  static constexpr std::string_view name = "rational";
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_int(long long v) { return Rational(v); }
  /// Accepts "p" or "p/q" with q != 0; the result is canonical.
  static Rational parse(std::string_view text);
  /// Always "p/q" with q > 0 and gcd(p, q) = 1.
  static std::string format(const Rational& x);
};

template <>
struct ScalarTraits<Boolean> {
  static constexpr bool is_ring = false;
  static constexpr bool is_domain = false;
  static constexpr bool is_exact = true;
  static constexpr std::string_view name = "bool";
  static constexpr Boolean zero() { return Boolean(false); }
  static constexpr Boolean one() { return Boolean(true); }
  static constexpr Boolean from_int(long long v) { return Boolean(v != 0); }
  static Boolean parse(std::string_view text);
  static std::string format(Boolean x) { return x.value ? "1" : "0"; }
};

/// Machine floats exist for benchmarking only; never use them in equality tests.
template <>
struct ScalarTraits<double> {
  static constexpr bool is_ring = true;
  static constexpr bool is_domain = true;
  static constexpr bool is_exact = false;
  static constexpr std::string_view name = "double";
  static constexpr double zero() { return 0.0; }
  static constexpr double one() { return 1.0; }
  static constexpr double from_int(long long v) { return static_cast<double>(v); }
  static double parse(std::string_view text);
  static std::string format(double x);
};

/// Commutative semiring with decidable equality.
template <class T>
concept Semiring = std::regular<T> && requires(const T a, const T b, T c) {
  { a + b } -> std::convertible_to<T>;
  { a * b } -> std::convertible_to<T>;
  { c += a };
  { c *= a };
  { ScalarTraits<T>::zero() } -> std::convertible_to<T>;
  { ScalarTraits<T>::one() } -> std::convertible_to<T>;
};

/// Commutative ring: a semiring with subtraction.
template <class T>
concept Ring = Semiring<T> && ScalarTraits<T>::is_ring && requires(const T a, const T b) {
  { a - b } -> std::convertible_to<T>;
  { -a } -> std::convertible_to<T>;
};

/// Integral domain: a ring without zero divisors.
template <class T>
concept Domain = Ring<T> && ScalarTraits<T>::is_domain;

template <Semiring T>
T zero() {
  return ScalarTraits<T>::zero();
}

template <Semiring T>
T one() {
  return ScalarTraits<T>::one();
}

template <Semiring T>
T from_int(long long v) {
  return ScalarTraits<T>::from_int(v);
}

template <Semiring T>
bool is_zero(const T& x) {
  return x == ScalarTraits<T>::zero();
}

/// x multiplied with itself e times; pow(x, 0) is one for every x, zero included.
template <Semiring T, std::integral E>
T pow(const T& x, E e) {
  if constexpr (std::is_signed_v<E>) {
    if (e < 0) throw DimensionMismatch("pow needs a nonnegative exponent");
  }
  auto n = static_cast<std::uint64_t>(e);
  T result = one<T>();
  if (n == 0) return result;
  T base = x;
  while (true) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n == 0) break;
    base *= base;
  }
  return result;
}

template <Semiring T>
T parse_scalar(std::string_view text) {
  return ScalarTraits<T>::parse(text);
}

template <Semiring T>
std::string format_scalar(const T& x) {
  return ScalarTraits<T>::format(x);
}

}  // namespace twosig

#endif  // TWOSIG_SCALAR_HPP
