#include "semispec/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "semispec/corpus.hpp"
#include "semispec/errors.hpp"
#include "semispec/ideals.hpp"
#include "semispec/localize.hpp"
#include "semispec/poly.hpp"
#include "semispec/presented.hpp"
#include "semispec/sheaf.hpp"
#include "semispec/spectra.hpp"
#include "semispec/valuation.hpp"

namespace semispec {

nlohmann::json CriterionResult::to_json() const {
  return {{"id", id}, {"name", name}, {"status", pass ? "pass" : "fail"}, {"details", details}};
}

namespace {

struct Tally {
  std::size_t checked = 0;
  std::size_t failed = 0;
  std::vector<std::string> first_failures;

  void check(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    ++failed;
    if (first_failures.size() < 8) first_failures.push_back(what);
  }
  void report(CriterionResult& r, const std::string& label) const {
    r.details.push_back(label + ": " + std::to_string(checked - failed) + "/" +
                        std::to_string(checked) + " ok");
    for (const auto& f : first_failures) r.details.push_back("  failed: " + f);
  }
};

std::string set_str(const FiniteSemiring& a, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto x : s.members()) {
    if (!first) out += ",";
    first = false;
    out += a.name(static_cast<Elem>(x));
  }
  return out + "}";
}

// ---- Boolean polynomial evaluation at a 0/1 point ----

bool eval_bool(const BoolPoly& f, const std::vector<bool>& point) {
  for (const auto& e : f.support()) {
    bool term = true;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0 && !point[i]) term = false;
    if (term) return true;
  }
  return false;
}

bool in_monomial_ideal(const BoolPoly& f, const std::vector<bool>& generators) {
  for (const auto& e : f.support()) {
    bool hit = false;
    for (std::size_t i = 0; i < e.size(); ++i)
      if (e[i] > 0 && generators[i]) hit = true;
    if (!hit) return false;
  }
  return true;
}

BoolPoly random_poly(std::mt19937_64& rng, std::size_t nvars, unsigned max_exp,
                     std::size_t terms) {
  std::uniform_int_distribution<unsigned> ex(0, max_exp);
  std::set<Exponent> s;
  for (std::size_t t = 0; t < terms; ++t) {
    Exponent e(nvars);
    for (auto& x : e) x = ex(rng);
    s.insert(e);
  }
  return BoolPoly(nvars, s);
}

BoolPoly random_univariate(std::mt19937_64& rng, unsigned max_deg, bool constant) {
  std::vector<std::uint32_t> exps;
  std::bernoulli_distribution coin(0.5);
  if (constant) exps.push_back(0);
  for (std::uint32_t k = constant ? 1 : 0; k <= max_deg; ++k)
    if (coin(rng)) exps.push_back(k);
  return BoolPoly::univariate(exps);
}

BoolFraction random_fraction(std::mt19937_64& rng) {
  BoolPoly num = random_univariate(rng, 4, false);
  return {num, random_univariate(rng, 4, true)};
}

unsigned max_degree(std::initializer_list<const BoolPoly*> ps) {
  unsigned d = 0;
  for (const auto* p : ps)
    for (const auto& e : p->support()) d = std::max<unsigned>(d, e[0]);
  return d;
}

}  // namespace

CriterionResult verify_spec_nat(const VerifyConfig& c) {
  CriterionResult r{1, "spec-nat", false, {}};
  const auto rep = nat_model_verify(c.nat_bound);
  r.details.push_back("bound " + std::to_string(rep.bound) + ", " +
                      std::to_string(rep.pairs_checked) + " prime pairs");
  r.details.push_back(std::string("<p,q> contains [(p-1)q, inf): ") +
                      (rep.pair_tails ? "yes" : "no"));
  r.details.push_back(std::string("pN prime and subtractive: ") +
                      (rep.primes_are_kernels ? "yes" : "no"));
  r.details.push_back(std::string("N\\{1} prime, not subtractive (1+2=3): ") +
                      (rep.max_not_subtractive ? "yes" : "no"));
  const NatSpectrumModel spec(c.nat_bound, SpectrumKind::Spec);
  const NatSpectrumModel sp(c.nat_bound, SpectrumKind::Sp);
  const auto dspec = spec.topology().dimension();
  const auto dsp = sp.topology().dimension();
  r.details.push_back("dim Spec N = " + std::to_string(dspec.value) + " over " +
                      std::to_string(spec.size()) + " points" +
                      (dspec.exhaustive ? " (all closed sets)" : " (point closures)"));
  r.details.push_back("dim Sp N = " + std::to_string(dsp.value) + " over " +
                      std::to_string(sp.size()) + " points" +
                      (dsp.exhaustive ? " (all closed sets)" : " (point closures)"));
  // small model, every closed set scanned
  const NatSpectrumModel small(50, SpectrumKind::Spec), small_sp(50, SpectrumKind::Sp);
  const auto d50 = small.topology().dimension();
  const auto d50sp = small_sp.topology().dimension();
  r.details.push_back("bound 50: dim Spec = " + std::to_string(d50.value) +
                      ", dim Sp = " + std::to_string(d50sp.value) +
                      (d50.exhaustive && d50sp.exhaustive ? " (all closed sets)" : ""));
  r.pass = rep.ok() && dspec.value == 2 && dsp.value == 1 &&
           dspec.specialization_chain == 2 && dsp.specialization_chain == 1 &&
           d50.value == 2 && d50sp.value == 1 && d50.exhaustive && d50sp.exhaustive;
  return r;
}

CriterionResult verify_poly_ksp(const VerifyConfig& c) {
  CriterionResult r{2, "poly-ksp", true, {}};
  std::mt19937_64 rng(c.seed);
  for (std::size_t n = 1; n <= 4; ++n) {
    // monomials with exponents ≤ 2 decide kernel membership, since both
    // predicates hold for a polynomial iff they hold for each monomial
    std::vector<BoolPoly> monomials;
    const std::size_t total = static_cast<std::size_t>(std::pow(3, n));
    for (std::size_t code = 0; code < total; ++code) {
      Exponent e(n);
      std::size_t k = code;
      for (std::size_t i = 0; i < n; ++i, k /= 3) e[i] = static_cast<std::uint32_t>(k % 3);
      monomials.push_back(BoolPoly(n, {e}));
    }
    std::set<std::vector<bool>> kernels;
    bool homs_ok = true, monomial_ok = true;
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<bool> point(n), gens(n);
      for (std::size_t i = 0; i < n; ++i) {
        point[i] = (mask >> i) & 1;
        gens[i] = !point[i];
      }
      for (int t = 0; t < 50; ++t) {
        const BoolPoly f = random_poly(rng, n, 3, 4), g = random_poly(rng, n, 3, 4);
        if (eval_bool(f + g, point) != (eval_bool(f, point) || eval_bool(g, point)) ||
            eval_bool(f * g, point) != (eval_bool(f, point) && eval_bool(g, point)))
          homs_ok = false;
        if (!eval_bool(f, point) != in_monomial_ideal(f, gens)) monomial_ok = false;
      }
      if (!eval_bool(BoolPoly::one(n), point)) homs_ok = false;
      std::vector<bool> kernel;
      for (const auto& m : monomials) {
        const bool in_kernel = !eval_bool(m, point);
        if (in_kernel != in_monomial_ideal(m, gens)) monomial_ok = false;
        kernel.push_back(in_kernel);
      }
      kernels.insert(kernel);
    }
    const bool count_ok = kernels.size() == (std::size_t{1} << n);
    r.details.push_back("n=" + std::to_string(n) + ": " + std::to_string(kernels.size()) +
                        " kernels, monomial-generated: " + (monomial_ok ? "yes" : "no"));
    r.pass = r.pass && homs_ok && monomial_ok && count_ok;
    if (n <= 3) {
      const auto cube = make_boolean_cube(n);
      const auto ks = hom_kernels_to_bool(*cube);
      std::vector<ElementSet> expected;
      for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        std::vector<Elem> gens;
        for (std::size_t j = 0; j < n; ++j)
          if (mask >> j & 1) gens.push_back(Elem{1} << (std::size_t{1} << j));
        expected.push_back(ideal_closure(*cube, gens));
      }
      std::sort(expected.begin(), expected.end());
      const bool agree = ks == expected;
      r.details.push_back("  finite quotient " + cube->label() + " (" +
                          std::to_string(cube->size()) + " elements): " +
                          std::to_string(ks.size()) + " hom kernels" +
                          (agree ? ", equal to <x_j>_{j in J}" : ", MISMATCH"));
      r.pass = r.pass && agree;
    }
  }
  return r;
}

CriterionResult verify_bx_hardening(const VerifyConfig& c) {
  CriterionResult r{3, "bx-hardening", false, {}};
  std::mt19937_64 rng(c.seed);
  Tally hom, inj, surj;
  for (std::size_t i = 0; i < c.hardening_samples; ++i) {
    const auto a = random_fraction(rng), b = random_fraction(rng);
    const auto ia = bx_hardening_iso(a), ib = bx_hardening_iso(b);
    hom.check(bx_hardening_iso(a + b) == ia + ib, "sum " + a.num.to_string());
    hom.check(bx_hardening_iso(a * b) == ia * ib, "product " + a.num.to_string());
  }
  hom.check(bx_hardening_iso({BoolPoly::one(1), BoolPoly::one(1)}) == MinMaxPair::one(), "one");
  hom.check(bx_hardening_iso({BoolPoly(1), BoolPoly::one(1)}) == MinMaxPair::zero(), "zero");

  // pairs with distinct images must not be equal fractions, pairs with equal
  // images must be; witnesses are searched up to twice the largest degree
  std::size_t distinct = 0, equal = 0;
  std::bernoulli_distribution scaled(0.3);
  while (distinct < c.hardening_samples) {
    const auto a = random_fraction(rng);
    BoolFraction b = random_fraction(rng);
    if (scaled(rng)) {
      const BoolPoly u = random_univariate(rng, 2, true);
      b = {a.num * u, a.den * u};
    }
    const bool same_image = bx_hardening_iso(a) == bx_hardening_iso(b);
    const unsigned bound = 2 * max_degree({&a.num, &a.den, &b.num, &b.den});
    const bool witnessed = bool_fraction_witness_equal(a, b, bound);
    inj.check(same_image == witnessed,
              a.num.to_string() + "/" + a.den.to_string() + " vs " + b.num.to_string() + "/" +
                  b.den.to_string());
    if (same_image) ++equal; else ++distinct;
  }

  std::uniform_int_distribution<int> nd(0, 40), dd(-40, 40);
  for (std::size_t i = 0; i < c.surjectivity_samples; ++i) {
    const auto t = MinMaxPair::of(nd(rng), dd(rng));
    const auto pre = bx_hardening_preimage(t);
    surj.check(poly_semi_invertible(pre.den) && bx_hardening_iso(pre) == t, t.to_string());
  }
  const auto inf = bx_hardening_preimage(MinMaxPair::zero());
  surj.check(bx_hardening_iso(inf) == MinMaxPair::zero(), "(inf,-inf)");

  hom.report(r, "homomorphism on random pairs");
  inj.report(r, "injectivity (" + std::to_string(distinct) + " distinct, " +
                    std::to_string(equal) + " equal-image pairs)");
  surj.report(r, "surjectivity");
  r.pass = hom.failed == 0 && inj.failed == 0 && surj.failed == 0;
  return r;
}

CriterionResult verify_sheaf_lemma(const VerifyConfig& c) {
  CriterionResult r{4, "sheaf-lemma", false, {}};
  Tally equalizers, globals, stalks;
  std::size_t rings = 0;
  for (const auto& a : finite_corpus()) {
    ++rings;
    const LocalizationPresheaf f(spec_enumerate(a, c.spectrum_limit));
    std::size_t covers = 0;
    for (Elem x = 0; x < a->size(); ++x) {
      for (const auto& cover : principal_covers(f.space(), x)) {
        ++covers;
        const auto eq = equalizer_sections(f, cover, x);
        std::string cs;
        for (Elem y : cover) cs += a->name(y) + " ";
        equalizers.check(eq.canonical_iso, a->label() + " D(" + a->name(x) + ") by " + cs);
      }
    }
    const auto whole = alexandrov_sections(f, f.space().whole());
    const auto& lx = f.value(f.space().whole());
    globals.check(whole.canonical_iso && is_bijective_hom(*a, *lx.semiring(), lx.phi()),
                  a->label());
    for (std::size_t p = 0; p < f.space().size(); ++p)
      stalks.check(stalk_check(f, p), a->label() + " at " + set_str(*a, f.space().points()[p]));
    r.details.push_back(a->label() + " (" + std::to_string(a->size()) + " elements, " +
                        std::to_string(f.space().size()) + " primes): " +
                        std::to_string(covers) + " principal covers");
  }
  equalizers.report(r, "S_a^-1 A -> equalizer isomorphic");
  globals.report(r, "global sections = A");
  stalks.report(r, "stalks = A_p");
  r.pass = rings >= 6 && equalizers.failed == 0 && globals.failed == 0 && stalks.failed == 0;
  return r;
}

CriterionResult verify_ktt(const VerifyConfig&) {
  const auto rep = ktt_counterexample_verify();
  CriterionResult r{5, "ktt", rep.pass, {rep.claim}};
  for (const auto& w : rep.witnesses) r.details.push_back(w);
  return r;
}

CriterionResult verify_sp_injectivity(const VerifyConfig& c) {
  CriterionResult r{6, "sp-injectivity", true, {}};
  for (unsigned b : {c.congruence_bound, c.congruence_bound_raised}) {
    CongruenceBound bound;
    bound.max_degree = b;
    bound.max_coefficient = b;
    try {
      const auto rep = sp_injectivity_counterexample(bound);
      r.details.push_back("bound " + std::to_string(b) + ": " + (rep.pass ? "pass" : "fail"));
      for (const auto& w : rep.witnesses) r.details.push_back("  " + w);
      r.pass = r.pass && rep.pass;
    } catch (const Error& e) {
      r.details.push_back("bound " + std::to_string(b) + ": " + e.what());
      r.pass = false;
    }
  }
  return r;
}

CriterionResult verify_radical(const VerifyConfig&) {
  CriterionResult r{7, "radical", false, {}};
  Tally t;
  for (const auto& a : finite_corpus()) {
    if (a->size() > 8) continue;
    const auto ideals = enumerate_ideals(*a);
    for (const auto& i : ideals)
      t.check(radical_equals_prime_intersection(*a, i), a->label() + " " + set_str(*a, i));
    r.details.push_back(a->label() + ": " + std::to_string(ideals.size()) + " ideals");
  }
  t.report(r, "rad(I) = intersection of primes over I");
  r.pass = t.checked > 0 && t.failed == 0;
  return r;
}

CriterionResult verify_universal_valuation(const VerifyConfig& c) {
  CriterionResult r{8, "universal-valuation", false, {}};
  Tally homeo, factor, loc;
  std::size_t pairs = 0;
  for (const auto& a : finite_corpus()) {
    if (!is_idempotent(*a)) continue;
    SubmoduleLattice l;
    try {
      l = build_mra(a, bool_scalars(*a), 64);
    } catch (const ResourceError&) {
      r.details.push_back(a->label() + ": more than 64 submodules, skipped");
      continue;
    }
    ++pairs;
    const auto h = vstar_homeo_check(l, c.spectrum_limit);
    homeo.check(h.ok(), a->label());
    const auto b = corpus_get("bool");
    const auto vals = enumerate_bool_valuations(*a);
    for (const auto& v : vals) {
      const auto f = factor_through_universal(l, *b, v);
      factor.check(f.homomorphism && f.factors && f.unique(), a->label());
    }
    for (Elem x = 0; x < a->size(); ++x)
      loc.check(mra_localization_iso_check(l, x).ok(), a->label() + " a=" + a->name(x));
    r.details.push_back(a->label() + ": |M_B(A)| = " + std::to_string(l.modules.size()) +
                        ", |Sp M_B(A)| = " + std::to_string(h.points) + ", " +
                        std::to_string(vals.size()) + " valuations to B");
  }
  homeo.report(r, "v* homeomorphism");
  factor.report(r, "unique factorization");
  loc.report(r, "M(A[1/a]) = M(A)[1/v(a)]");
  r.pass = pairs > 0 && homeo.failed == 0 && factor.failed == 0 && loc.failed == 0;
  return r;
}

CriterionResult verify_hardness(const VerifyConfig& c) {
  CriterionResult r{9, "hardness", false, {}};
  Tally values, sections, homeo, matching;
  for (const auto& a : finite_corpus()) {
    const LocalizationPresheaf f(sp_enumerate(a, c.spectrum_limit));
    for (Elem x = 0; x < a->size(); ++x) {
      values.check(is_hard(*f.principal(x).semiring()), a->label() + " at " + a->name(x));
      for (const auto& cover : principal_covers(f.space(), x)) {
        const auto eq = equalizer_sections(f, cover, x);
        sections.check(is_hard(*eq.semiring), a->label() + " D~(" + a->name(x) + ")");
      }
    }
    const auto whole = alexandrov_sections(f, f.space().whole());
    sections.check(is_hard(*whole.semiring), a->label() + " global");

    homeo.check(hardening_homeo_check(a, c.spectrum_limit), a->label());
    // S~_a^-1 A -> S~_{χ(a)}^-1 A◇, a'/s ↦ χ(a')/χ(s)
    const auto hard = harden(a);
    const LocalizationPresheaf g(sp_enumerate(hard.semiring(), c.spectrum_limit));
    for (Elem x = 0; x < a->size(); ++x) {
      const auto& la = f.principal(x);
      const auto& lh = g.principal(hard.phi()[x]);
      std::vector<Elem> map;
      for (Elem k = 0; k < la.semiring()->size(); ++k) {
        const auto [num, den] = la.representative(k);
        map.push_back(lh.class_of(hard.phi()[num], hard.phi()[den]));
      }
      matching.check(is_bijective_hom(*la.semiring(), *lh.semiring(), map),
                     a->label() + " at " + a->name(x));
    }
  }
  values.report(r, "S~_a^-1 A hard");
  sections.report(r, "Sp equalizer sections hard");
  homeo.report(r, "Sp A<> = Sp A");
  matching.report(r, "section semirings match");
  r.pass = values.failed == 0 && sections.failed == 0 && homeo.failed == 0 &&
           matching.failed == 0;
  return r;
}

CriterionResult verify_properties(const VerifyConfig& c) {
  CriterionResult r{10, "properties", false, {}};
  Tally closed, basis, covers, pullback, transitivity;
  const auto corpus = finite_corpus();
  for (const auto& a : corpus) {
    const auto ideals = enumerate_ideals(*a);
    for (auto kind : {SpectrumKind::Spec, SpectrumKind::Sp}) {
      const auto space = enumerate_spectrum(a, kind, c.spectrum_limit);
      const std::string tag = a->label() + " " + to_string(kind);
      closed.check(space.V(a->empty_set()) == space.whole(), tag + " V(empty)");
      closed.check(space.V(a->full_set()).empty(), tag + " V(A)");
      for (const auto& s1 : ideals)
        for (const auto& s2 : ideals) {
          ElementSet prod(a->size());
          for (auto x : s1.members())
            for (auto y : s2.members())
              prod.insert(a->mul(static_cast<Elem>(x), static_cast<Elem>(y)));
          closed.check((space.V(s1) | space.V(s2)) == space.V(prod), tag + " V union");
          closed.check((space.V(s1) & space.V(s2)) == space.V(s1 | s2), tag + " V meet");
        }
      const bool idem = is_idempotent(*a);
      const auto sinv = semi_invertibles(*a);
      const auto unit = units(*a);
      for (Elem x = 0; x < a->size(); ++x) {
        const bool whole = space.D(x) == space.whole();
        if (kind == SpectrumKind::Spec)
          basis.check(whole == unit.contains(x), tag + " D(a) whole iff unit");
        else
          basis.check(whole == sinv.contains(x), tag + " D~(a) whole iff semi-invertible");
        for (Elem y = 0; y < a->size(); ++y) {
          basis.check(space.D(a->mul(x, y)) == (space.D(x) & space.D(y)), tag + " D(ab)");
          const auto sum = space.D(a->add(x, y));
          basis.check(sum.is_subset_of(space.D(x) | space.D(y)), tag + " D(a+b)");
          if (idem && kind == SpectrumKind::Sp)
            basis.check(sum == (space.D(x) | space.D(y)), tag + " D~(a+b) equality");
        }
      }
      if (a->size() <= 8) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << a->size()); ++mask) {
          std::vector<Elem> s;
          for (Elem x = 0; x < a->size(); ++x)
            if (mask >> x & 1) s.push_back(x);
          covers.check(cover_check(s, space).agree(), tag + " cover");
        }
      }
    }

    // witness equality is an equivalence for every cyclic submonoid
    for (Elem g = 0; g < a->size(); ++g) {
      const auto s = generated_submonoid(*a, {g});
      const auto sm = s.members();
      std::vector<std::pair<Elem, Elem>> fr;
      for (Elem x = 0; x < a->size(); ++x)
        for (auto t : sm) fr.emplace_back(x, static_cast<Elem>(t));
      const std::size_t n = fr.size();
      std::vector<char> eq(n * n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          eq[i * n + j] = fractions_equal(*a, s, fr[i].first, fr[i].second, fr[j].first,
                                          fr[j].second);
      bool ok = true;
      for (std::size_t i = 0; i < n && ok; ++i)
        for (std::size_t j = 0; j < n && ok; ++j) {
          if (!eq[i * n + j]) continue;
          for (std::size_t k = 0; k < n; ++k)
            if (eq[j * n + k] && !eq[i * n + k]) {
              ok = false;
              break;
            }
        }
      transitivity.check(ok, a->label() + " S=<" + a->name(g) + ">");
    }
  }

  // pullbacks along every homomorphism between corpus members
  for (const auto& a : corpus)
    for (const auto& b : corpus) {
      if (a->size() * b->size() > 128) continue;
      const auto homs = enumerate_hom_maps(*a, *b);
      if (homs.empty()) continue;
      const auto ideals = enumerate_ideals(*b);
      for (const auto& h : homs)
        for (const auto& j : ideals) {
          const auto pre = preimage(h, j);
          const std::string tag = a->label() + " -> " + b->label();
          pullback.check(is_ideal(*a, pre), tag + " ideal");
          if (j.count() < b->size() && is_prime(*b, j))
            pullback.check(is_prime(*a, pre), tag + " prime");
          if (is_subtractive(*b, j)) pullback.check(is_subtractive(*a, pre), tag + " kernel");
        }
    }
  closed.report(r, "closed-set algebra");
  basis.report(r, "D/D~ identities");
  covers.report(r, "cover criteria");
  pullback.report(r, "pullback stability");
  transitivity.report(r, "witness-equality transitivity");
  r.pass = closed.failed == 0 && basis.failed == 0 && covers.failed == 0 &&
           pullback.failed == 0 && transitivity.failed == 0;
  return r;
}

const std::vector<VerifyEntry>& verify_registry() {
  static const std::vector<VerifyEntry> entries = {
      {1, "spec-nat", verify_spec_nat},
      {2, "poly-ksp", verify_poly_ksp},
      {3, "bx-hardening", verify_bx_hardening},
      {4, "sheaf-lemma", verify_sheaf_lemma},
      {5, "ktt", verify_ktt},
      {6, "sp-injectivity", verify_sp_injectivity},
      {7, "radical", verify_radical},
      {8, "universal-valuation", verify_universal_valuation},
      {9, "hardness", verify_hardness},
      {10, "properties", verify_properties},
  };
  return entries;
}

}  // namespace semispec
