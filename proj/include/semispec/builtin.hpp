#pragma once

#include <concepts>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace semispec {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Values of one of the built-in infinite semirings.
template <class T>
concept SemiringValue = requires(const T& a, const T& b) {
  { T::zero() } -> std::same_as<T>;
  { T::one() } -> std::same_as<T>;
  { a + b } -> std::same_as<T>;
  { a * b } -> std::same_as<T>;
  { a == b } -> std::convertible_to<bool>;
};

enum class BuiltinTag { Nat, NonNegRat, Bool, TropicalRat, MinMaxPair };

std::string to_string(BuiltinTag tag);
bool builtin_is_idempotent(BuiltinTag tag);
bool builtin_is_hard(BuiltinTag tag);

struct Nat {
  BigInt v;
  static Nat zero() { return {0}; }
  static Nat one() { return {1}; }
  friend Nat operator+(const Nat& a, const Nat& b) { return {a.v + b.v}; }
  friend Nat operator*(const Nat& a, const Nat& b) { return {a.v * b.v}; }
  friend bool operator==(const Nat&, const Nat&) = default;
  bool is_unit() const { return v == 1; }
  std::string to_string() const { return v.str(); }
};

struct NonNegRat {
  BigRat v;
  static NonNegRat zero() { return {0}; }
  static NonNegRat one() { return {1}; }
  friend NonNegRat operator+(const NonNegRat& a, const NonNegRat& b) { return {a.v + b.v}; }
  friend NonNegRat operator*(const NonNegRat& a, const NonNegRat& b) { return {a.v * b.v}; }
  friend bool operator==(const NonNegRat&, const NonNegRat&) = default;
  bool is_unit() const { return v != 0; }
  std::string to_string() const { return v.str(); }
};

struct Bool {
  bool v = false;
  static Bool zero() { return {false}; }
  static Bool one() { return {true}; }
  friend Bool operator+(Bool a, Bool b) { return {a.v || b.v}; }
  friend Bool operator*(Bool a, Bool b) { return {a.v && b.v}; }
  friend bool operator==(Bool, Bool) = default;
  bool is_unit() const { return v; }
  std::string to_string() const { return v ? "1" : "0"; }
};

/// Min-plus semiring over ℚ ∪ {+∞}; nullopt is +∞.
struct TropicalRat {
  std::optional<BigRat> v;
  static TropicalRat zero() { return {std::nullopt}; }
  static TropicalRat one() { return {BigRat(0)}; }
  bool is_infinite() const { return !v.has_value(); }
  friend TropicalRat operator+(const TropicalRat& a, const TropicalRat& b);
  friend TropicalRat operator*(const TropicalRat& a, const TropicalRat& b);
  friend bool operator==(const TropicalRat&, const TropicalRat&) = default;
  bool is_unit() const { return v.has_value(); }
  std::string to_string() const { return v ? v->str() : "inf"; }
};

/// (ℕ_min × ℤ_max) ∪ {(+∞,−∞)}: sum is (min, max), product is coordinatewise
/// addition, and the extra point is the zero.
struct MinMaxPair {
  bool infinite = false;
  BigInt n;
  BigInt d;
  static MinMaxPair zero() { return {true, 0, 0}; }
  static MinMaxPair one() { return {false, 0, 0}; }
  static MinMaxPair of(BigInt n, BigInt d) { return {false, std::move(n), std::move(d)}; }
  friend MinMaxPair operator+(const MinMaxPair& a, const MinMaxPair& b);
  friend MinMaxPair operator*(const MinMaxPair& a, const MinMaxPair& b);
  friend bool operator==(const MinMaxPair& a, const MinMaxPair& b) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return a.n == b.n && a.d == b.d;
  }
  /// Units are exactly the pairs (0, d).
  bool is_unit() const { return !infinite && n == 0; }
  std::string to_string() const;
};

static_assert(SemiringValue<Nat>);
static_assert(SemiringValue<NonNegRat>);
static_assert(SemiringValue<Bool>);
static_assert(SemiringValue<TropicalRat>);
static_assert(SemiringValue<MinMaxPair>);

}  // namespace semispec
