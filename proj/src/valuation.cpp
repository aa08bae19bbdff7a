#include "semispec/valuation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "semispec/corpus.hpp"
#include "semispec/errors.hpp"
#include "semispec/ideals.hpp"
#include "semispec/sheaf.hpp"

namespace semispec {

bool is_g_valuation(const FiniteSemiring& source, const FiniteSemiring& target,
                    std::span<const Elem> v) {
  if (!is_idempotent(target))
    throw PreconditionError("valuation target " + target.label() + " is not idempotent");
  if (v.size() != source.size()) return false;
  if (v[source.zero()] != target.zero() || v[source.one()] != target.one()) return false;
  for (Elem a = 0; a < source.size(); ++a) {
    for (Elem b = 0; b < source.size(); ++b) {
      if (v[source.mul(a, b)] != target.mul(v[a], v[b])) return false;
      if (!leq(target, v[source.add(a, b)], target.add(v[a], v[b]))) return false;
    }
  }
  return true;
}

std::vector<std::vector<Elem>> enumerate_bool_valuations(const FiniteSemiring& a) {
  if (a.size() > 20) throw ResourceError("too many maps to enumerate valuations of " + a.label());
  const auto b = corpus_get("bool");
  std::vector<std::vector<Elem>> out;
  const std::size_t n = a.size();
  std::vector<Elem> v(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    // bit i set means v(i) = 1; iterate so that tables come out lexicographic
    for (std::size_t i = 0; i < n; ++i)
      v[i] = ((mask >> (n - 1 - i)) & 1) ? b->one() : b->zero();
    if (is_g_valuation(a, *b, v)) out.push_back(v);
  }
  return out;
}

ValSpecBijection val_spec_bijection(const SemiringRef& a) {
  ValSpecBijection r;
  const auto b = corpus_get("bool");
  r.valuations = enumerate_bool_valuations(*a);
  for (const auto& v : r.valuations) {
    ElementSet k(a->size());
    for (Elem x = 0; x < a->size(); ++x)
      if (v[x] == b->zero()) k.insert(x);
    r.kernels.push_back(k);
  }
  const auto spec = spec_enumerate(a, std::max<std::size_t>(16, a->size()));
  std::vector<ElementSet> sorted = r.kernels;
  std::sort(sorted.begin(), sorted.end());
  const bool distinct = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  bool chi_ok = true;
  for (const auto& p : spec.points()) {
    std::vector<Elem> chi(a->size());
    for (Elem x = 0; x < a->size(); ++x) chi[x] = p.contains(x) ? b->zero() : b->one();
    if (std::find(r.valuations.begin(), r.valuations.end(), chi) == r.valuations.end())
      chi_ok = false;
  }
  r.bijective = distinct && sorted == spec.points() && chi_ok;
  return r;
}

ElementSet integral_part(const FiniteSemiring& source, const FiniteSemiring& target,
                         std::span<const Elem> v) {
  ElementSet out(source.size());
  for (Elem a = 0; a < source.size(); ++a)
    if (leq(target, v[a], target.one())) out.insert(a);
  return out;
}

bool is_subsemiring(const FiniteSemiring& a, const ElementSet& s) {
  if (!s.contains(a.zero()) || !s.contains(a.one())) return false;
  for (auto x : s.members())
    for (auto y : s.members()) {
      if (!s.contains(a.add(static_cast<Elem>(x), static_cast<Elem>(y)))) return false;
      if (!s.contains(a.mul(static_cast<Elem>(x), static_cast<Elem>(y)))) return false;
    }
  return true;
}

bool nat_kernel_max_valuation_check(std::uint64_t bound) {
  auto v = [](std::uint64_t n) { return n == 1 ? 1 : 0; };
  if (v(0) != 0 || v(1) != 1) return false;
  for (std::uint64_t a = 0; a <= bound; ++a)
    for (std::uint64_t b = 0; b <= bound; ++b) {
      if (v(a * b) != (v(a) & v(b))) return false;
      if (v(a + b) > (v(a) | v(b))) return false;
    }
  return true;
}

ScalarAlgebra prime_subsemiring(const FiniteSemiring& a) {
  std::vector<Elem> iota;
  std::vector<int> pos(a.size(), -1);
  Elem x = a.zero();
  while (pos[x] < 0) {
    pos[x] = static_cast<int>(iota.size());
    iota.push_back(x);
    x = a.add(x, a.one());
  }
  const std::size_t n = iota.size();
  std::vector<Elem> add(n * n), mul(n * n);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back(a.name(iota[i]));
    for (std::size_t j = 0; j < n; ++j) {
      add[i * n + j] = static_cast<Elem>(pos[a.add(iota[i], iota[j])]);
      mul[i * n + j] = static_cast<Elem>(pos[a.mul(iota[i], iota[j])]);
    }
  }
  // 1 is always reached, at position 1 unless the ring is trivial
  const Elem one = static_cast<Elem>(pos[a.one()]);
  auto r = std::make_shared<FiniteSemiring>(n, add, mul, 0, one,
                                            "prime subsemiring of " + a.label(), names);
  return {r, iota};
}

ScalarAlgebra bool_scalars(const FiniteSemiring& a) {
  if (!is_idempotent(a))
    throw PreconditionError(a.label() + " is not idempotent, so it is not a B-algebra");
  auto b = corpus_get("bool");
  std::vector<Elem> iota(2);
  iota[b->zero()] = a.zero();
  iota[b->one()] = a.one();
  return {b, iota};
}

std::optional<Elem> SubmoduleLattice::index_of(const ElementSet& m) const {
  auto it = std::lower_bound(modules.begin(), modules.end(), m);
  if (it == modules.end() || !(*it == m)) return std::nullopt;
  return static_cast<Elem>(it - modules.begin());
}

ElementSet SubmoduleLattice::generated(const ElementSet& gens) const {
  const auto& r = *base;
  ElementSet set(r.size());
  std::vector<Elem> work;
  auto push = [&](Elem x) {
    if (!set.contains(x)) {
      set.insert(x);
      work.push_back(x);
    }
  };
  push(r.zero());
  for (auto g : gens.members()) push(static_cast<Elem>(g));
  while (!work.empty()) {
    const Elem x = work.back();
    work.pop_back();
    for (Elem s : scalars.iota) push(r.mul(s, x));
    for (auto y : set.members()) push(r.add(x, static_cast<Elem>(y)));
  }
  return set;
}

SubmoduleLattice build_mra(const SemiringRef& a, const ScalarAlgebra& scalars,
                           std::size_t max_modules) {
  if (!is_homomorphism(*scalars.scalars, *a, scalars.iota))
    throw PreconditionError("scalar map into " + a->label() + " is not a homomorphism");
  SubmoduleLattice l;
  l.base = a;
  l.scalars = scalars;
  std::set<ElementSet> seen;
  std::vector<ElementSet> frontier{l.generated(a->empty_set())};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    ElementSet m = frontier.back();
    frontier.pop_back();
    for (Elem x = 0; x < a->size(); ++x) {
      if (m.contains(x)) continue;
      ElementSet g = m;
      g.insert(x);
      ElementSet n = l.generated(g);
      if (seen.insert(n).second) {
        if (seen.size() > max_modules)
          throw ResourceError("M_R(" + a->label() + ") has more than " +
                              std::to_string(max_modules) + " submodules");
        frontier.push_back(std::move(n));
      }
    }
  }
  l.modules.assign(seen.begin(), seen.end());
  const std::size_t n = l.modules.size();
  std::vector<Elem> add(n * n), mul(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      ElementSet sum(a->size()), prod(a->size());
      for (auto x : l.modules[i].members())
        for (auto y : l.modules[j].members()) {
          sum.insert(a->add(static_cast<Elem>(x), static_cast<Elem>(y)));
          prod.insert(a->mul(static_cast<Elem>(x), static_cast<Elem>(y)));
        }
      add[i * n + j] = *l.index_of(sum);
      mul[i * n + j] = *l.index_of(l.generated(prod));
    }
  ElementSet unit(a->size());
  for (Elem s : scalars.iota) unit.insert(s);
  std::vector<std::string> names;
  for (const auto& m : l.modules) {
    std::string s = "{";
    bool first = true;
    for (auto x : m.members()) {
      if (!first) s += ",";
      first = false;
      s += a->name(static_cast<Elem>(x));
    }
    names.push_back(s + "}");
  }
  l.semiring = std::make_shared<FiniteSemiring>(
      n, add, mul, *l.index_of(l.generated(a->empty_set())), *l.index_of(l.generated(unit)),
      "M(" + a->label() + ")", names);
  for (Elem x = 0; x < a->size(); ++x) {
    ElementSet g(a->size());
    g.insert(x);
    l.universal.push_back(*l.index_of(l.generated(g)));
  }
  return l;
}

Factorization factor_through_universal(const SubmoduleLattice& l, const FiniteSemiring& target,
                                       std::span<const Elem> v) {
  for (Elem s : l.scalars.iota)
    if (!leq(target, v[s], target.one()))
      throw PreconditionError("scalars are not integral for the valuation");
  Factorization f;
  for (const auto& m : l.modules) {
    Elem acc = target.zero();
    for (auto x : m.members()) acc = target.add(acc, v[x]);
    f.map.push_back(acc);
  }
  const auto& lat = *l.semiring;
  f.homomorphism = is_homomorphism(lat, target, f.map);
  f.factors = compose(l.universal, f.map) == std::vector<Elem>(v.begin(), v.end());
  for (const auto& h : enumerate_hom_maps(lat, target))
    if (compose(l.universal, h) == std::vector<Elem>(v.begin(), v.end())) ++f.matching_homs;
  return f;
}

VStarReport vstar_homeo_check(const SubmoduleLattice& l, std::size_t limit) {
  VStarReport r;
  const auto sp = sp_enumerate(l.semiring, limit);
  const auto spec = spec_enumerate(l.base, std::max(limit, l.base->size()));
  r.points = sp.size();
  std::vector<std::size_t> vstar;
  r.lands_in_spec = true;
  for (const auto& p : sp.points()) {
    auto idx = spec.index_of(preimage(l.universal, p));
    if (!idx) {
      r.lands_in_spec = false;
      return r;
    }
    vstar.push_back(*idx);
  }
  std::vector<std::size_t> sorted = vstar;
  std::sort(sorted.begin(), sorted.end());
  r.bijective = sp.size() == spec.size() &&
                std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  r.inverse_formula = true;
  for (std::size_t p = 0; p < sp.size(); ++p) {
    const auto& q = spec.points()[vstar[p]];
    ElementSet back(l.modules.size());
    for (Elem m = 0; m < l.modules.size(); ++m)
      if (l.modules[m].is_subset_of(q)) back.insert(m);
    if (!(back == sp.points()[p])) r.inverse_formula = false;
  }
  r.open = true;
  for (Elem a = 0; a < l.base->size(); ++a) {
    ElementSet img(spec.size());
    for (auto p : sp.D(l.universal[a]).members()) img.insert(vstar[p]);
    if (!(img == spec.D(a))) r.open = false;
  }
  r.basis = true;
  for (Elem m = 0; m < l.modules.size(); ++m) {
    ElementSet u(sp.size());
    for (auto x : l.modules[m].members()) u |= sp.D(l.universal[x]);
    if (!(u == sp.D(m))) r.basis = false;
  }
  return r;
}

MraLocalizationReport mra_localization_iso_check(const SubmoduleLattice& l, Elem a) {
  const auto& base = *l.base;
  const LocalizedSemiring loc(l.base, generated_submonoid(base, {a}));
  ScalarAlgebra lhs_scalars{l.scalars.scalars, compose(l.scalars.iota, loc.phi())};
  const auto lhs = build_mra(loc.semiring(), lhs_scalars, 1u << 12);
  const auto& lat = *l.semiring;
  const LocalizedSemiring rhs(l.semiring, generated_submonoid(lat, {l.universal[a]}));
  const auto& rl = *rhs.semiring();

  MraLocalizationReport r;
  r.size = lhs.modules.size();
  // ⟨bᵢ/sᵢ⟩ ↦ Σ v_R(bᵢ)/v_R(sᵢ); sᵢ = aⁿ gives v_R(sᵢ) = v_R(a)ⁿ
  std::vector<Elem> forward;
  for (const auto& m : lhs.modules) {
    Elem acc = rl.zero();
    for (auto c : m.members()) {
      const auto [b, s] = loc.representative(static_cast<Elem>(c));
      acc = rl.add(acc, rhs.class_of(l.universal[b], l.universal[s]));
    }
    forward.push_back(acc);
  }
  // M/T ↦ ⟨m/s | m ∈ M⟩ for any power s of a with v_R(s) = T
  std::vector<Elem> backward;
  for (Elem c = 0; c < rl.size(); ++c) {
    const auto [mod, t] = rhs.representative(c);
    std::optional<Elem> s;
    for (auto x : loc.monoid().members())
      if (l.universal[x] == t) {
        s = static_cast<Elem>(x);
        break;
      }
    if (!s) return r;
    ElementSet gens(loc.semiring()->size());
    for (auto m : l.modules[mod].members()) gens.insert(loc.class_of(static_cast<Elem>(m), *s));
    backward.push_back(*lhs.index_of(lhs.generated(gens)));
  }
  r.maps_are_homs = is_homomorphism(*lhs.semiring, rl, forward) &&
                    is_homomorphism(rl, *lhs.semiring, backward);
  bool inv = true;
  for (Elem i = 0; i < forward.size(); ++i)
    if (backward[forward[i]] != i) inv = false;
  for (Elem j = 0; j < backward.size(); ++j)
    if (forward[backward[j]] != j) inv = false;
  r.mutually_inverse = inv;
  return r;
}

bool mra_presheaf_agrees(const SubmoduleLattice& l, Elem a, std::size_t limit) {
  const auto& lat = *l.semiring;
  const Elem va = l.universal[a];
  const LocalizedSemiring powers(l.semiring, generated_submonoid(lat, {va}));
  const auto sp = sp_enumerate(l.semiring, limit);
  const LocalizedSemiring sat(l.semiring, s_of_principal(sp, va));
  std::vector<Elem> canon;
  for (Elem c = 0; c < powers.semiring()->size(); ++c) {
    const auto [m, t] = powers.representative(c);
    canon.push_back(sat.class_of(m, t));
  }
  return is_bijective_hom(*powers.semiring(), *sat.semiring(), canon);
}

}  // namespace semispec
