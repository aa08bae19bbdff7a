#include "semispec/builtin.hpp"

namespace semispec {

std::string to_string(BuiltinTag tag) {
  switch (tag) {
    case BuiltinTag::Nat: return "N";
    case BuiltinTag::NonNegRat: return "Q>=0";
    case BuiltinTag::Bool: return "B";
    case BuiltinTag::TropicalRat: return "tropical";
    case BuiltinTag::MinMaxPair: return "minmax-pair";
  }
  return "?";
}

bool builtin_is_idempotent(BuiltinTag tag) {
  return tag == BuiltinTag::Bool || tag == BuiltinTag::TropicalRat ||
         tag == BuiltinTag::MinMaxPair;
}

// ℕ: the only semi-invertible is 1. Semifields are hard. MinMaxPair: (n,d) is
// semi-invertible iff 1 ⪯ (n,d)(m,e) for some (m,e), i.e. n+m ≤ 0, so n = 0.
bool builtin_is_hard(BuiltinTag) { return true; }

TropicalRat operator+(const TropicalRat& a, const TropicalRat& b) {
  if (!a.v) return b;
  if (!b.v) return a;
  return {*a.v < *b.v ? *a.v : *b.v};
}

TropicalRat operator*(const TropicalRat& a, const TropicalRat& b) {
  if (!a.v || !b.v) return TropicalRat::zero();
  return {*a.v + *b.v};
}

MinMaxPair operator+(const MinMaxPair& a, const MinMaxPair& b) {
  if (a.infinite) return b;
  if (b.infinite) return a;
  return MinMaxPair::of(a.n < b.n ? a.n : b.n, a.d > b.d ? a.d : b.d);
}

MinMaxPair operator*(const MinMaxPair& a, const MinMaxPair& b) {
  if (a.infinite || b.infinite) return MinMaxPair::zero();
  return MinMaxPair::of(a.n + b.n, a.d + b.d);
}

std::string MinMaxPair::to_string() const {
  if (infinite) return "(inf,-inf)";
  return "(" + n.str() + "," + d.str() + ")";
}

}  // namespace semispec
