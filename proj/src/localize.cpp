#include "semispec/localize.hpp"

#include <algorithm>

#include "semispec/errors.hpp"

namespace semispec {

bool is_mult_submonoid(const FiniteSemiring& r, const ElementSet& s) {
  if (!s.contains(r.one())) return false;
  const auto m = s.members();
  for (auto a : m)
    for (auto b : m)
      if (!s.contains(r.mul(static_cast<Elem>(a), static_cast<Elem>(b)))) return false;
  return true;
}

ElementSet generated_submonoid(const FiniteSemiring& r, const std::vector<Elem>& gens) {
  ElementSet out(r.size(), {r.one()});
  std::vector<Elem> work{r.one()};
  while (!work.empty()) {
    const Elem x = work.back();
    work.pop_back();
    for (auto g : gens) {
      const Elem y = r.mul(x, g);
      if (!out.contains(y)) {
        out.insert(y);
        work.push_back(y);
      }
    }
  }
  return out;
}

ElementSet saturate(const FiniteSemiring& r, const ElementSet& s) {
  ElementSet out = r.empty_set();
  for (Elem b = 0; b < r.size(); ++b)
    for (Elem c = 0; c < r.size(); ++c)
      if (s.contains(r.mul(b, c))) {
        out.insert(b);
        break;
      }
  return out;
}

MultSubmonoid saturate(const MultSubmonoid& s) {
  return {s.ambient, saturate(*s.ambient, s.members)};
}

bool fractions_equal(const FiniteSemiring& r, const ElementSet& s, Elem a1, Elem s1,
                     Elem a2, Elem s2) {
  const Elem l = r.mul(a1, s2), rr = r.mul(a2, s1);
  bool found = false;
  s.for_each([&](std::size_t u) {
    if (!found && r.mul(l, static_cast<Elem>(u)) == r.mul(rr, static_cast<Elem>(u))) found = true;
  });
  return found;
}

LocalizedSemiring::LocalizedSemiring(SemiringRef base, ElementSet monoid)
    : base_(std::move(base)), monoid_(std::move(monoid)) {
  const FiniteSemiring& r = *base_;
  if (monoid_.universe() != r.size() || !is_mult_submonoid(r, monoid_))
    throw PreconditionError("localization needs a multiplicative submonoid");
  const auto dens = monoid_.members();
  const std::size_t k = dens.size();
  slot_.assign(r.size(), static_cast<std::size_t>(-1));
  for (std::size_t i = 0; i < k; ++i) slot_[dens[i]] = i;
  cls_.assign(r.size() * k, 0);
  for (Elem a = 0; a < r.size(); ++a)
    for (std::size_t i = 0; i < k; ++i) {
      const auto s = static_cast<Elem>(dens[i]);
      Elem c = 0;
      for (; c < reps_.size(); ++c)
        if (fractions_equal(r, monoid_, a, s, reps_[c].first, reps_[c].second)) break;
      if (c == reps_.size()) reps_.emplace_back(a, s);
      cls_[a * k + i] = c;
    }
  const auto n = static_cast<Elem>(reps_.size());
  std::vector<Elem> add(n * n), mul(n * n);
  std::vector<std::string> names;
  for (Elem x = 0; x < n; ++x) {
    const auto [a1, s1] = reps_[x];
    names.push_back(s1 == r.one() ? r.name(a1) : r.name(a1) + "/" + r.name(s1));
    for (Elem y = 0; y < n; ++y) {
      const auto [a2, s2] = reps_[y];
      const Elem den = r.mul(s1, s2);
      add[x * n + y] = class_of(r.add(r.mul(a1, s2), r.mul(a2, s1)), den);
      mul[x * n + y] = class_of(r.mul(a1, a2), den);
    }
  }
  phi_.resize(r.size());
  for (Elem a = 0; a < r.size(); ++a) phi_[a] = class_of(a, r.one());
  semiring_ = std::make_shared<const FiniteSemiring>(
      n, std::move(add), std::move(mul), class_of(r.zero(), r.one()),
      class_of(r.one(), r.one()), "S^-1 " + r.label(), std::move(names));
}

Elem LocalizedSemiring::class_of(Elem a, Elem s) const {
  if (!monoid_.contains(s)) throw PreconditionError("denominator outside the monoid");
  return cls_[a * monoid_.count() + slot_[s]];
}

bool semi_invertible(const FiniteSemiring& r, Elem x) {
  for (Elem b = 0; b < r.size(); ++b) {
    const Elem lhs = r.add(r.one(), r.mul(x, b));
    for (Elem c = 0; c < r.size(); ++c)
      if (lhs == r.mul(x, c)) return true;
  }
  return false;
}

bool semi_invertible_idempotent(const FiniteSemiring& r, Elem x) {
  for (Elem b = 0; b < r.size(); ++b)
    if (leq(r, r.one(), r.mul(x, b))) return true;
  return false;
}

ElementSet semi_invertibles(const FiniteSemiring& r) {
  ElementSet out = r.empty_set();
  const bool idem = is_idempotent(r);
  for (Elem a = 0; a < r.size(); ++a)
    if (idem ? semi_invertible_idempotent(r, a) : semi_invertible(r, a)) out.insert(a);
  return out;
}

bool is_hard(const FiniteSemiring& r) { return units(r) == semi_invertibles(r); }

LocalizedSemiring harden(const SemiringRef& r) {
  return LocalizedSemiring(r, semi_invertibles(*r));
}

bool nat_semi_invertible(const BigInt& n) { return n == 1; }

std::optional<std::pair<std::uint64_t, std::uint64_t>> nat_semi_invertible_witness(
    std::uint64_t n, std::uint64_t bound) {
  for (std::uint64_t b = 0; b <= bound; ++b)
    for (std::uint64_t c = 0; c <= bound; ++c)
      if (1 + n * b == n * c) return std::pair{b, c};
  return std::nullopt;
}

std::vector<std::uint64_t> nat_saturate_powers(std::uint64_t base, std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t b = 1; b <= bound; ++b) {
    // b·c = baseᵏ for some c iff b divides a large enough power of base.
    BigInt p = 1;
    for (std::uint64_t k = 0; k < 64 && p % b != 0; ++k) p *= base;
    if (p % b == 0) out.push_back(b);
  }
  return out;
}

BoolFraction operator+(const BoolFraction& a, const BoolFraction& b) {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

BoolFraction operator*(const BoolFraction& a, const BoolFraction& b) {
  return {a.num * b.num, a.den * b.den};
}

MinMaxPair bx_hardening_iso(const BoolFraction& f) {
  if (!poly_semi_invertible(f.den))
    throw PreconditionError("denominator " + f.den.to_string() + " is not semi-invertible");
  const OrdDeg n = bool_poly_ord_deg(f.num);
  if (n.zero) return MinMaxPair::zero();
  const OrdDeg d = bool_poly_ord_deg(f.den);
  return MinMaxPair::of(n.ord, BigInt(n.deg) - BigInt(d.deg));
}

BoolFraction bx_hardening_preimage(const MinMaxPair& p) {
  if (p.infinite) return {BoolPoly(1), BoolPoly::one(1)};
  if (p.n < 0) throw PreconditionError("order must be non-negative");
  const auto n = p.n.convert_to<std::uint32_t>();
  const auto d = p.d.convert_to<std::int64_t>();
  const std::int64_t g = std::max<std::int64_t>(0, static_cast<std::int64_t>(n) - d);
  const auto top = static_cast<std::uint32_t>(g + d);
  return {BoolPoly::univariate({n, top}),
          BoolPoly::univariate({0u, static_cast<std::uint32_t>(g)})};
}

bool bool_fraction_witness_equal(const BoolFraction& a, const BoolFraction& b,
                                 unsigned degree_bound) {
  const BoolPoly l = a.num * b.den, r = b.num * a.den;
  const std::uint64_t count = std::uint64_t{1} << degree_bound;
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    std::vector<std::uint32_t> exps{0};
    for (unsigned i = 0; i < degree_bound; ++i)
      if (mask >> i & 1) exps.push_back(i + 1);
    const BoolPoly u = BoolPoly::univariate(exps);
    if (l * u == r * u) return true;
  }
  return false;
}

}  // namespace semispec
