#include "semispec/sheaf.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "semispec/errors.hpp"
#include "semispec/ideals.hpp"
#include "semispec/poly.hpp"

namespace semispec {

ElementSet s_of_open(const SpectrumSpace& space, const ElementSet& open) {
  const auto& r = *space.ring();
  ElementSet out = r.empty_set();
  for (Elem b = 0; b < r.size(); ++b)
    if (open.is_subset_of(space.D(b))) out.insert(b);
  return out;
}

ElementSet s_of_principal(const SpectrumSpace& space, Elem a) {
  return s_of_open(space, space.D(a));
}

LocalizationPresheaf::LocalizationPresheaf(SpectrumSpace space) : space_(std::move(space)) {}

const LocalizedSemiring& LocalizationPresheaf::value(const ElementSet& open) const {
  ElementSet s = s_of_open(space_, open);
  auto it = cache_.find(s);
  if (it == cache_.end())
    it = cache_.emplace(s, std::make_shared<LocalizedSemiring>(ring(), s)).first;
  return *it->second;
}

std::vector<Elem> LocalizationPresheaf::restriction(const ElementSet& from,
                                                    const ElementSet& to) const {
  if (!to.is_subset_of(from)) throw PreconditionError("restriction needs V ⊆ U");
  const auto& lu = value(from);
  const auto& lv = value(to);
  std::vector<Elem> out(lu.semiring()->size());
  for (Elem c = 0; c < out.size(); ++c) {
    const auto [a, s] = lu.representative(c);
    out[c] = lv.class_of(a, s);
  }
  return out;
}

bool LocalizationPresheaf::restriction_well_defined(const ElementSet& from,
                                                    const ElementSet& to) const {
  const auto& lu = value(from);
  const auto& lv = value(to);
  const auto table = restriction(from, to);
  bool ok = true;
  for (Elem a = 0; a < ring()->size(); ++a)
    lu.monoid().for_each([&](std::size_t s) {
      const auto se = static_cast<Elem>(s);
      if (table[lu.class_of(a, se)] != lv.class_of(a, se)) ok = false;
    });
  return ok;
}

namespace {

// Subsemiring of ∏ comps given by the listed families, which must be closed
// under the componentwise operations.
SemiringRef family_semiring(std::vector<std::vector<Elem>>& families,
                            const std::vector<const FiniteSemiring*>& comps,
                            const std::string& label) {
  std::sort(families.begin(), families.end());
  std::map<std::vector<Elem>, Elem> index;
  for (std::size_t i = 0; i < families.size(); ++i) index[families[i]] = static_cast<Elem>(i);
  const auto n = families.size();
  const std::size_t k = comps.size();
  auto lookup = [&](const std::vector<Elem>& f) {
    auto it = index.find(f);
    if (it == index.end()) throw StructuralError("section families are not closed");
    return it->second;
  };
  std::vector<Elem> add(n * n), mul(n * n);
  std::vector<Elem> tmp(k);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t i = 0; i < k; ++i) tmp[i] = comps[i]->add(families[x][i], families[y][i]);
      add[x * n + y] = lookup(tmp);
      for (std::size_t i = 0; i < k; ++i) tmp[i] = comps[i]->mul(families[x][i], families[y][i]);
      mul[x * n + y] = lookup(tmp);
    }
  for (std::size_t i = 0; i < k; ++i) tmp[i] = comps[i]->zero();
  const Elem zero = lookup(tmp);
  for (std::size_t i = 0; i < k; ++i) tmp[i] = comps[i]->one();
  const Elem one = lookup(tmp);
  std::vector<std::string> names;
  for (const auto& f : families) {
    std::string s = "(";
    for (std::size_t i = 0; i < k; ++i) s += (i ? "," : "") + comps[i]->name(f[i]);
    names.push_back(s + ")");
  }
  return std::make_shared<const FiniteSemiring>(n, std::move(add), std::move(mul), zero, one,
                                                label, std::move(names));
}

Elem find_family(const std::vector<std::vector<Elem>>& sorted, const std::vector<Elem>& f) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), f);
  if (it == sorted.end() || *it != f) throw StructuralError("family outside the sections");
  return static_cast<Elem>(it - sorted.begin());
}

}  // namespace

SectionSemiring equalizer_sections(const LocalizationPresheaf& f,
                                   const std::vector<Elem>& cover, Elem a) {
  const auto& space = f.space();
  if (!covers_open(cover, a, space))
    throw PreconditionError("elements do not cover the principal open");
  const std::size_t k = cover.size();
  std::vector<const LocalizedSemiring*> locals;
  std::vector<const FiniteSemiring*> comps;
  for (auto c : cover) {
    locals.push_back(&f.principal(c));
    comps.push_back(locals.back()->semiring().get());
  }
  // res[i][j]: L(D(aᵢ)) → L(D(aᵢ) ∩ D(aⱼ)).
  std::vector<std::vector<std::vector<Elem>>> res(k, std::vector<std::vector<Elem>>(k));
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (i != j)
        res[i][j] = f.restriction(space.D(cover[i]), space.D(cover[i]) & space.D(cover[j]));

  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < k; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t x, std::size_t y) { return comps[x]->size() < comps[y]->size(); });

  SectionSemiring out;
  std::vector<Elem> cur(k, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t t) {
    if (t == k) {
      out.families.push_back(cur);
      return;
    }
    const std::size_t i = order[t];
    for (Elem x = 0; x < comps[i]->size(); ++x) {
      bool ok = true;
      for (std::size_t u = 0; u < t && ok; ++u) {
        const std::size_t j = order[u];
        if (res[i][j][x] != res[j][i][cur[j]]) ok = false;
      }
      if (!ok) continue;
      cur[i] = x;
      rec(t + 1);
    }
  };
  rec(0);
  out.semiring = family_semiring(out.families, comps, "Eq");

  const auto& base = f.principal(a);
  std::vector<std::vector<Elem>> to(k);
  for (std::size_t i = 0; i < k; ++i) to[i] = f.restriction(space.D(a), space.D(cover[i]));
  out.canonical.resize(base.semiring()->size());
  for (Elem c = 0; c < out.canonical.size(); ++c) {
    std::vector<Elem> fam(k);
    for (std::size_t i = 0; i < k; ++i) fam[i] = to[i][c];
    out.canonical[c] = find_family(out.families, fam);
  }
  out.canonical_iso = is_bijective_hom(*base.semiring(), *out.semiring, out.canonical);
  return out;
}

std::vector<std::vector<Elem>> principal_covers(const SpectrumSpace& space, Elem a,
                                                std::size_t max_opens) {
  std::vector<std::pair<ElementSet, Elem>> opens;
  for (Elem b = 0; b < space.ring()->size(); ++b) {
    const auto& d = space.D(b);
    if (!d.is_subset_of(space.D(a))) continue;
    bool seen = false;
    for (const auto& [o, e] : opens)
      if (o == d) seen = true;
    if (!seen) opens.emplace_back(d, b);
  }
  if (opens.size() > max_opens) throw ResourceError("too many principal opens for cover enumeration");
  std::vector<std::vector<Elem>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << opens.size()); ++mask) {
    ElementSet u(space.size());
    std::vector<Elem> cover;
    for (std::size_t i = 0; i < opens.size(); ++i)
      if (mask >> i & 1) {
        u |= opens[i].first;
        cover.push_back(opens[i].second);
      }
    if (u == space.D(a)) out.push_back(std::move(cover));
  }
  return out;
}

SectionSemiring alexandrov_sections(const LocalizationPresheaf& f, const ElementSet& open) {
  const auto& space = f.space();
  if (!space.topology().is_open(open)) throw PreconditionError("set is not open");
  const auto pts = open.members();
  const std::size_t k = pts.size();
  std::vector<ElementSet> mins;
  std::vector<const FiniteSemiring*> comps;
  for (auto p : pts) {
    mins.push_back(space.minimal_open(p));
    comps.push_back(f.value(mins.back()).semiring().get());
  }
  std::vector<std::size_t> maximal;
  for (std::size_t i = 0; i < k; ++i) {
    bool top = true;
    for (std::size_t j = 0; j < k; ++j)
      if (j != i && space.specializes(pts[i], pts[j])) top = false;
    if (top) maximal.push_back(i);
  }
  // res[i][j] for pts[j] ⊆ pts[i]: stalk at pts[i] → stalk at pts[j].
  std::vector<std::vector<std::vector<Elem>>> res(k, std::vector<std::vector<Elem>>(k));
  for (auto i : maximal)
    for (std::size_t j = 0; j < k; ++j)
      if (space.specializes(pts[j], pts[i])) res[i][j] = f.restriction(mins[i], mins[j]);

  SectionSemiring out;
  std::vector<Elem> chosen(k, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t t) {
    if (t == maximal.size()) {
      std::vector<Elem> fam(k);
      for (std::size_t j = 0; j < k; ++j)
        for (auto i : maximal)
          if (!res[i][j].empty()) {
            fam[j] = res[i][j][chosen[i]];
            break;
          }
      out.families.push_back(std::move(fam));
      return;
    }
    const std::size_t i = maximal[t];
    for (Elem x = 0; x < comps[i]->size(); ++x) {
      bool ok = true;
      for (std::size_t u = 0; u < t && ok; ++u) {
        const std::size_t i2 = maximal[u];
        for (std::size_t j = 0; j < k && ok; ++j)
          if (!res[i][j].empty() && !res[i2][j].empty() &&
              res[i][j][x] != res[i2][j][chosen[i2]])
            ok = false;
      }
      if (!ok) continue;
      chosen[i] = x;
      rec(t + 1);
    }
  };
  rec(0);
  out.semiring = family_semiring(out.families, comps, "Sections");

  const auto& base = f.value(open);
  std::vector<std::vector<Elem>> to(k);
  for (std::size_t j = 0; j < k; ++j) to[j] = f.restriction(open, mins[j]);
  out.canonical.resize(base.semiring()->size());
  for (Elem c = 0; c < out.canonical.size(); ++c) {
    std::vector<Elem> fam(k);
    for (std::size_t j = 0; j < k; ++j) fam[j] = to[j][c];
    out.canonical[c] = find_family(out.families, fam);
  }
  out.canonical_iso = is_bijective_hom(*base.semiring(), *out.semiring, out.canonical);
  return out;
}

bool stalk_check(const LocalizationPresheaf& f, std::size_t p) {
  const auto& space = f.space();
  const ElementSet complement = space.points()[p].complement();
  if (!(s_of_open(space, space.minimal_open(p)) == complement)) return false;
  LocalizedSemiring local(f.ring(), complement);
  return find_isomorphism(*f.stalk(p).semiring(), *local.semiring()).has_value();
}

namespace {

// (v, n) with s·v = aⁿ, n as small as possible.
std::optional<std::pair<Elem, unsigned>> power_cofactor(const FiniteSemiring& r, Elem s, Elem a) {
  Elem p = r.one();
  for (unsigned n = 0; n <= r.size() + 1; ++n) {
    for (Elem v = 0; v < r.size(); ++v)
      if (r.mul(s, v) == p) return std::pair{v, n};
    p = r.mul(p, a);
  }
  return std::nullopt;
}

}  // namespace

CommonDenominator common_denominator_form(const LocalizationPresheaf& f,
                                          const std::vector<Elem>& cover,
                                          const std::vector<Elem>& locals) {
  const auto& space = f.space();
  const auto& r = *f.ring();
  if (space.kind() != SpectrumKind::Spec)
    throw PreconditionError("common denominators need the Spec presheaf");
  if (locals.size() != cover.size()) throw PreconditionError("one section per cover element");
  const std::size_t k = cover.size();
  std::vector<Elem> x(k), s(k), v(k);
  std::vector<unsigned> n(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::tie(x[i], s[i]) = f.principal(cover[i]).representative(locals[i]);
    auto vc = power_cofactor(r, s[i], cover[i]);
    if (!vc) throw StructuralError("denominator outside the saturated powers");
    std::tie(v[i], n[i]) = *vc;
  }
  unsigned big_n = 0;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const auto& l = f.value(space.D(cover[i]) & space.D(cover[j]));
      std::optional<Elem> u;
      l.monoid().for_each([&](std::size_t cand) {
        const auto ce = static_cast<Elem>(cand);
        if (!u && r.mul(r.mul(x[i], s[j]), ce) == r.mul(r.mul(x[j], s[i]), ce)) u = ce;
      });
      if (!u) throw PreconditionError("sections disagree on an overlap");
      auto vc = power_cofactor(r, *u, r.mul(cover[i], cover[j]));
      if (!vc) throw StructuralError("overlap witness outside the saturated powers");
      big_n = std::max(big_n, vc->second);
    }
  CommonDenominator out;
  out.n = big_n;
  for (std::size_t i = 0; i < k; ++i) {
    out.x.push_back(r.mul(r.mul(x[i], v[i]), r.pow(cover[i], big_n)));
    out.s.push_back(r.pow(cover[i], big_n + n[i]));
  }
  return out;
}

std::optional<Elem> glue(const LocalizationPresheaf& f, const std::vector<Elem>& cover,
                         const std::vector<Elem>& locals) {
  const auto& r = *f.ring();
  const auto cd = common_denominator_form(f, cover, locals);
  // reach[sum] = (b-sum-weighted x) for some choice of b_0..b_j.
  std::map<Elem, Elem> reach{{r.zero(), r.zero()}};
  for (std::size_t j = 0; j < cover.size(); ++j) {
    std::map<Elem, Elem> next;
    for (const auto& [sum, acc] : reach)
      for (Elem b = 0; b < r.size(); ++b)
        next.emplace(r.add(sum, r.mul(b, cd.s[j])), r.add(acc, r.mul(b, cd.x[j])));
    reach = std::move(next);
  }
  auto it = reach.find(r.one());
  if (it == reach.end()) return std::nullopt;
  return it->second;
}

GammaResult gamma(const SemiringRef& a, std::size_t limit) {
  LocalizationPresheaf f(sp_enumerate(a, limit));
  const auto& space = f.space();
  auto sec = alexandrov_sections(f, space.whole());
  GammaResult out{sec.semiring, {}};
  for (Elem x = 0; x < a->size(); ++x) {
    std::vector<Elem> fam;
    for (std::size_t p = 0; p < space.size(); ++p)
      fam.push_back(f.stalk(p).phi()[x]);
    out.natural.push_back(find_family(sec.families, fam));
  }
  return out;
}

bool is_global(const SemiringRef& a, std::size_t limit) {
  auto g = gamma(a, limit);
  return is_bijective_hom(*a, *g.semiring, g.natural);
}

Globalization globalize(const SemiringRef& a, std::size_t max_iter, std::size_t limit) {
  SemiringRef cur = a;
  for (std::size_t it = 0; it <= max_iter; ++it) {
    auto g = gamma(cur, limit);
    if (is_bijective_hom(*cur, *g.semiring, g.natural)) return {cur, it};
    cur = g.semiring;
  }
  throw BoundedResultError("globalization did not stabilize within " +
                           std::to_string(max_iter) + " rounds");
}

NatFraction NatFraction::make(BigInt num, std::uint64_t base, unsigned k) {
  if (base == 0) throw PreconditionError("localization at 0");
  if (num < 0) throw PreconditionError("negative numerator");
  if (base == 1) k = 0;
  while (k > 0 && num % base == 0) {
    num /= base;
    --k;
  }
  if (num == 0) k = 0;
  return {std::move(num), base, k};
}

BigRat NatFraction::value() const {
  BigInt den = 1;
  for (unsigned i = 0; i < k; ++i) den *= base;
  return BigRat(num, den);
}

NatFraction operator+(const NatFraction& a, const NatFraction& b) {
  if (a.base != b.base) throw PreconditionError("fractions over different bases");
  const unsigned k = std::max(a.k, b.k);
  BigInt sa = a.num, sb = b.num;
  for (unsigned i = a.k; i < k; ++i) sa *= a.base;
  for (unsigned i = b.k; i < k; ++i) sb *= b.base;
  return NatFraction::make(sa + sb, a.base, k);
}

NatFraction operator*(const NatFraction& a, const NatFraction& b) {
  if (a.base != b.base) throw PreconditionError("fractions over different bases");
  return NatFraction::make(a.num * b.num, a.base, a.k + b.k);
}

std::string spec_nat_sections(const NatOpen& open) {
  if (open.shape == NatOpen::Shape::ComplementOfMax) return "N";
  if (open.n == 0) return "0";
  if (open.n == 1) return "N";
  return "N[1/" + std::to_string(open.n) + "]";
}

std::optional<BigInt> glue_nat_pair(const NatFraction& over2, const NatFraction& over3) {
  if (over2.base != 2 || over3.base != 3) throw PreconditionError("expected x/2^a and y/3^b");
  BigInt l = over2.num, r = over3.num;
  for (unsigned i = 0; i < over3.k; ++i) l *= 3;
  for (unsigned i = 0; i < over2.k; ++i) r *= 2;
  if (l != r) return std::nullopt;
  // x·3ᵇ = y·2ᵃ with coprime 2ᵃ, 3ᵇ, so 2ᵃ divides x.
  BigInt d = 1;
  for (unsigned i = 0; i < over2.k; ++i) d *= 2;
  if (over2.num % d != 0) return std::nullopt;
  return over2.num / d;
}

nlohmann::json Report::to_json() const {
  return {{"claim", claim}, {"status", pass ? "pass" : "fail"}, {"witnesses", witnesses}};
}

Report ktt_counterexample_verify() {
  Report rep;
  rep.claim = "the localization presheaf of K[t^2,t^3] is not a sheaf on Spec";
  const RatPoly f1 = parse_rat_poly("t^3+t^2"), g1 = parse_rat_poly("t^2-1");
  const RatPoly f2 = parse_rat_poly("t^4+t^3+t^2"), g2 = parse_rat_poly("t^3-1");
  bool ok = true;
  for (const auto* p : {&f1, &g1, &f2, &g2}) {
    const bool m = ktt_member(*p);
    ok = ok && m;
    rep.witnesses.push_back(p->to_string() + (m ? " in" : " not in") + " K[t^2,t^3]");
  }
  const bool cross = f1 * g2 == f2 * g1;
  ok = ok && cross;
  rep.witnesses.push_back("(" + f1.to_string() + ")(" + g2.to_string() + ") = " +
                          (f1 * g2).to_string() + (cross ? " = " : " != ") + "(" +
                          f2.to_string() + ")(" + g1.to_string() + ")");
  // Both fractions reduce to t^2/(t-1); a polynomial preimage f would need
  // f·(t^2-1) = t^3+t^2 exactly.
  const auto qr = divmod(f1, g1);
  const bool not_poly = !qr.remainder.is_zero();
  ok = ok && not_poly;
  rep.witnesses.push_back("(" + f1.to_string() + ") mod (" + g1.to_string() + ") = " +
                          qr.remainder.to_string());
  const RatPoly t2 = parse_rat_poly("t^2"), tm1 = parse_rat_poly("t-1");
  const bool reduced = f1 * tm1 == t2 * g1 && f2 * tm1 == t2 * g2;
  ok = ok && reduced;
  rep.witnesses.push_back(std::string("both fractions equal t^2/(t-1): ") + (reduced ? "yes" : "no"));
  const RatPoly sq = parse_rat_poly("t^2-2*t+1");
  const bool sq_out = !ktt_member(sq);
  ok = ok && sq_out;
  rep.witnesses.push_back(sq.to_string() + (sq_out ? " not in" : " in") + " K[t^2,t^3]");
  rep.pass = ok;
  return rep;
}

Report sp_injectivity_counterexample(CongruenceBound bound) {
  Report rep;
  rep.claim = "A -> A[x^-1] x A[y^-1] is not injective for N[x,y]/(x^2~x, y^2~y, 1+x~x+y)";
  const Presentation p = xy_counterexample_presentation();
  CongruenceIndex index(p, bound);
  const Term s = p.parse("1+x*y"), t = p.parse("x+y");
  const auto ex = localized_images_equal(index, s, t, 0);
  const auto ey = localized_images_equal(index, s, t, 1);
  const auto base = index.congruent(s, t);
  const auto cover = index.congruent(p.parse("1+x"), p.parse("x+y"));
  const auto imx = localized_images_equal(index, s, p.parse("1+y"), 0);
  const auto imy = localized_images_equal(index, s, p.parse("1+x"), 1);
  rep.pass = ex.equal && ex.k == 1u && ey.equal && ey.k == 1u &&
             base == Congruence::NoAtBound && cover == Congruence::Yes && imx.equal && imy.equal;
  auto kstr = [](const LocalizedEquality& e) {
    return e.equal ? "k=" + std::to_string(*e.k) : std::string("not found");
  };
  const std::string b = " (degree " + std::to_string(bound.max_degree) + ", coefficient " +
                        std::to_string(bound.max_coefficient) + ")";
  rep.witnesses = {
      "x^k(1+x*y) ~ x^k(x+y): " + kstr(ex),
      "y^k(1+x*y) ~ y^k(x+y): " + kstr(ey),
      "image in A[x^-1] is (1+y)/1: " + kstr(imx),
      "image in A[y^-1] is (1+x)/1: " + kstr(imy),
      std::string("1+x*y ~ x+y: ") + (base == Congruence::Yes ? "yes" : "no at bound") + b,
      std::string("1+x ~ x+y, so 1 lies in the subtractive closure of (x,y): ") +
          (cover == Congruence::Yes ? "yes" : "no"),
  };
  return rep;
}

}  // namespace semispec
