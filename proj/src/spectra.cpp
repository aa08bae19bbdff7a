#include "semispec/spectra.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>
#include <sstream>

#include "semispec/corpus.hpp"
#include "semispec/errors.hpp"
#include "semispec/ideals.hpp"

namespace semispec {

std::string to_string(SpectrumKind kind) { return kind == SpectrumKind::Spec ? "Spec" : "Sp"; }

std::size_t spectrum_limit_from_env(std::size_t fallback) {
  const char* v = std::getenv("SEMISPEC_SPECTRUM_LIMIT");
  if (!v || !*v) return fallback;
  try {
    return std::stoul(v);
  } catch (const std::exception&) {
    throw ParseError("SEMISPEC_SPECTRUM_LIMIT must be a number");
  }
}

FiniteTopology::FiniteTopology(std::vector<ElementSet> minimal_opens)
    : minimal_(std::move(minimal_opens)) {
  for (std::size_t p = 0; p < minimal_.size(); ++p)
    if (!minimal_[p].contains(p)) throw StructuralError("minimal open misses its point");
}

bool FiniteTopology::is_open(const ElementSet& s) const {
  bool ok = true;
  s.for_each([&](std::size_t p) {
    if (ok && !minimal_[p].is_subset_of(s)) ok = false;
  });
  return ok;
}

ElementSet FiniteTopology::closure_of_point(std::size_t p) const {
  ElementSet out(size());
  for (std::size_t q = 0; q < size(); ++q)
    if (minimal_[q].contains(p)) out.insert(q);
  return out;
}

bool FiniteTopology::is_irreducible(const ElementSet& z) const {
  if (z.empty()) return false;
  const auto m = z.members();
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j)
      if (!(minimal_[m[i]] & minimal_[m[j]]).intersects(z)) return false;
  return true;
}

std::vector<ElementSet> FiniteTopology::opens() const {
  if (size() > 20) throw ResourceError("open-set enumeration limited to 20 points");
  std::vector<ElementSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << size()); ++mask) {
    ElementSet s(size());
    for (std::size_t i = 0; i < size(); ++i)
      if (mask >> i & 1) s.insert(i);
    if (is_open(s)) out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::size_t longest_chain(std::vector<ElementSet> sets) {
  std::sort(sets.begin(), sets.end(),
            [](const ElementSet& a, const ElementSet& b) { return a.count() < b.count(); });
  std::vector<std::size_t> len(sets.size(), 0);
  std::size_t best = 0;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j)
      if (sets[j].count() < sets[i].count() && sets[j].is_subset_of(sets[i]))
        len[i] = std::max(len[i], len[j] + 1);
    best = std::max(best, len[i]);
  }
  return best;
}

}  // namespace

FiniteTopology::Dimension FiniteTopology::dimension(std::size_t exhaustive_limit) const {
  Dimension d;
  std::vector<ElementSet> closures;
  for (std::size_t p = 0; p < size(); ++p) {
    ElementSet c = closure_of_point(p);
    if (std::find(closures.begin(), closures.end(), c) == closures.end())
      closures.push_back(std::move(c));
  }
  d.specialization_chain = longest_chain(closures);
  if (size() == 0) return d;

  std::vector<ElementSet> irreducible;
  if (size() <= exhaustive_limit && size() <= 24) {
    d.exhaustive = true;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << size()); ++mask) {
      ElementSet s(size());
      for (std::size_t i = 0; i < size(); ++i)
        if (mask >> i & 1) s.insert(i);
      if (is_closed(s) && is_irreducible(s)) irreducible.push_back(std::move(s));
    }
  } else {
    for (const auto& c : closures)
      if (is_irreducible(c)) irreducible.push_back(c);
  }
  d.irreducible_closed_sets = irreducible.size();
  d.value = longest_chain(std::move(irreducible));
  return d;
}

SpectrumSpace::SpectrumSpace(SemiringRef ring, SpectrumKind kind, std::vector<ElementSet> points)
    : ring_(std::move(ring)), kind_(kind), points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  basis_.reserve(ring_->size());
  for (Elem a = 0; a < ring_->size(); ++a) {
    ElementSet d(points_.size());
    for (std::size_t p = 0; p < points_.size(); ++p)
      if (!points_[p].contains(a)) d.insert(p);
    basis_.push_back(std::move(d));
  }
}

std::optional<std::size_t> SpectrumSpace::index_of(const ElementSet& ideal) const {
  auto it = std::lower_bound(points_.begin(), points_.end(), ideal);
  if (it == points_.end() || !(*it == ideal)) return std::nullopt;
  return static_cast<std::size_t>(it - points_.begin());
}

ElementSet SpectrumSpace::V(const ElementSet& elements) const {
  ElementSet out(points_.size());
  for (std::size_t p = 0; p < points_.size(); ++p)
    if (elements.is_subset_of(points_[p])) out.insert(p);
  return out;
}

ElementSet SpectrumSpace::minimal_open(std::size_t p) const {
  ElementSet out = whole();
  for (Elem a = 0; a < ring_->size(); ++a)
    if (!points_[p].contains(a)) out &= basis_[a];
  return out;
}

FiniteTopology SpectrumSpace::topology() const {
  std::vector<ElementSet> mins;
  for (std::size_t p = 0; p < size(); ++p) mins.push_back(minimal_open(p));
  return FiniteTopology(std::move(mins));
}

SpectrumSpace spec_enumerate(const SemiringRef& a, std::size_t limit) {
  if (a->size() > limit)
    throw ResourceError("Spec enumeration limited to " + std::to_string(limit) + " elements");
  return SpectrumSpace(a, SpectrumKind::Spec, enumerate_primes(*a));
}

std::vector<ElementSet> hom_kernels_to_bool(const FiniteSemiring& a) {
  const auto b = make_chain(2);
  std::set<ElementSet> kernels;
  for (const auto& m : enumerate_hom_maps(a, *b)) kernels.insert(kernel_of(*b, m));
  return {kernels.begin(), kernels.end()};
}

SpectrumSpace sp_enumerate(const SemiringRef& a, std::size_t limit) {
  const bool idem = is_idempotent(*a);
  if (a->size() > limit) {
    if (!idem)
      throw ResourceError("Sp enumeration limited to " + std::to_string(limit) + " elements");
    return SpectrumSpace(a, SpectrumKind::Sp, hom_kernels_to_bool(*a));
  }
  std::vector<ElementSet> pts;
  for (auto& p : enumerate_primes(*a))
    if (is_subtractive(*a, p)) pts.push_back(std::move(p));
  SpectrumSpace space(a, SpectrumKind::Sp, pts);
  if (idem) space.hom_agreement = space.points() == hom_kernels_to_bool(*a);
  return space;
}

SpectrumSpace enumerate_spectrum(const SemiringRef& a, SpectrumKind kind, std::size_t limit) {
  return kind == SpectrumKind::Spec ? spec_enumerate(a, limit) : sp_enumerate(a, limit);
}

CoverCheck cover_check(const std::vector<Elem>& s, const SpectrumSpace& space) {
  const FiniteSemiring& r = *space.ring();
  CoverCheck c;
  ElementSet u(space.size());
  for (auto a : s) u |= space.D(a);
  c.topological = u.is_full();
  ElementSet ideal = ideal_closure(r, s);
  if (space.kind() == SpectrumKind::Sp) ideal = subtractive_closure(r, ideal);
  c.algebraic = ideal.contains(r.one());
  return c;
}

bool covers_open(const std::vector<Elem>& s, Elem a, const SpectrumSpace& space) {
  ElementSet u(space.size());
  for (auto x : s) u |= space.D(x);
  return u == space.D(a);
}

InducedMap induced_map(std::span<const Elem> f, const SpectrumSpace& dom,
                       const SpectrumSpace& cod) {
  InducedMap out;
  for (const auto& q : cod.points()) {
    auto idx = dom.index_of(preimage(f, q));
    if (!idx) {
      out.well_defined = false;
      out.continuous = false;
      out.map.push_back(static_cast<std::size_t>(-1));
    } else {
      out.map.push_back(*idx);
    }
  }
  if (!out.well_defined) return out;
  for (Elem a = 0; a < dom.ring()->size(); ++a) {
    ElementSet pre(cod.size());
    for (std::size_t q = 0; q < cod.size(); ++q)
      if (dom.D(a).contains(out.map[q])) pre.insert(q);
    if (!(pre == cod.D(f[a]))) out.continuous = false;
  }
  return out;
}

LocalizationHomeo localization_homeo_check(const SemiringRef& a, const ElementSet& s,
                                           SpectrumKind kind, std::size_t limit) {
  LocalizedSemiring loc(a, s);
  const SpectrumSpace x = enumerate_spectrum(a, kind, limit);
  const SpectrumSpace y = enumerate_spectrum(loc.semiring(), kind, limit);
  InducedMap m = induced_map(loc.phi(), x, y);
  LocalizationHomeo out;
  if (!m.well_defined || !m.continuous) return out;
  ElementSet img(x.size());
  for (auto p : m.map) img.insert(p);
  out.injective = img.count() == y.size();
  ElementSet expected(x.size());
  for (std::size_t p = 0; p < x.size(); ++p)
    if (!x.points()[p].intersects(s)) expected.insert(p);
  out.image_matches = img == expected;
  out.surjective = img.is_full();
  out.open_embedding = true;
  const auto& l = *loc.semiring();
  for (Elem c = 0; c < l.size(); ++c) {
    const Elem num = loc.representative(c).first;
    ElementSet pushed(x.size());
    y.D(c).for_each([&](std::size_t q) { pushed.insert(m.map[q]); });
    if (!(pushed == (x.D(num) & img))) out.open_embedding = false;
  }
  return out;
}

bool hardening_homeo_check(const SemiringRef& a, std::size_t limit) {
  auto h = localization_homeo_check(a, semi_invertibles(*a), SpectrumKind::Sp, limit);
  return h.ok() && h.surjective;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<char> composite(bound + 1, 0);
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = 1;
  }
  return out;
}

NatSpectrumModel::NatSpectrumModel(std::uint64_t prime_bound, SpectrumKind kind)
    : kind_(kind), primes_(primes_up_to(prime_bound)) {
  labels_.push_back("{0}");
  for (auto p : primes_) labels_.push_back(std::to_string(p) + "N");
  if (kind_ == SpectrumKind::Spec) labels_.push_back("N\\{1}");
}

std::optional<std::size_t> NatSpectrumModel::max_point() const {
  if (kind_ == SpectrumKind::Sp) return std::nullopt;
  return labels_.size() - 1;
}

bool NatSpectrumModel::point_contains(std::size_t point, std::uint64_t n) const {
  if (point == 0) return n == 0;
  if (point <= primes_.size()) return n % primes_[point - 1] == 0;
  return n != 1;
}

ElementSet NatSpectrumModel::D(std::uint64_t n) const {
  ElementSet out(size());
  for (std::size_t p = 0; p < size(); ++p)
    if (!point_contains(p, n)) out.insert(p);
  return out;
}

FiniteTopology NatSpectrumModel::topology() const {
  // Subbasis D(0), D(1), D(p); every D(n) is an intersection of these.
  std::vector<ElementSet> sub{D(0), D(1)};
  for (auto p : primes_) sub.push_back(D(p));
  std::vector<ElementSet> mins;
  for (std::size_t x = 0; x < size(); ++x) {
    ElementSet m = ElementSet::full(size());
    for (const auto& s : sub)
      if (s.contains(x)) m &= s;
    mins.push_back(std::move(m));
  }
  return FiniteTopology(std::move(mins));
}

NatModelReport nat_model_verify(std::uint64_t bound) {
  if (bound < 7) throw PreconditionError("nat model check needs bound >= 7");
  NatModelReport r;
  r.bound = bound;
  const auto ps = primes_up_to(bound);
  r.pair_tails = true;
  for (std::size_t i = 0; i < ps.size(); ++i)
    for (std::size_t j = i + 1; j < ps.size(); ++j) {
      const std::uint64_t p = ps[i], q = ps[j], from = (p - 1) * q;
      // p consecutive members from the threshold give every larger integer.
      for (std::uint64_t n = from; n < from + p; ++n)
        if (!nat_ideal_member({p, q}, n)) r.pair_tails = false;
      ++r.pairs_checked;
    }
  r.primes_are_kernels = true;
  for (auto p : ps) {
    const std::vector<std::uint64_t> g{p};
    if (!is_prime_nat(g, bound) || !is_subtractive_nat(g) ||
        !is_subtractive_nat_bounded(g, bound))
      r.primes_are_kernels = false;
  }
  const std::vector<std::uint64_t> max_gens{2, 3};
  const bool witness = nat_ideal_member(max_gens, 2) && nat_ideal_member(max_gens, 3) &&
                       !nat_ideal_member(max_gens, 1) && 1 + 2 == 3;
  bool shape = true;
  for (std::uint64_t n = 0; n <= bound; ++n)
    if (nat_ideal_member(max_gens, n) != (n != 1)) shape = false;
  r.max_not_subtractive = shape && witness && is_prime_nat(max_gens, bound) &&
                          !is_subtractive_nat(max_gens) &&
                          !is_subtractive_nat_bounded(max_gens, bound) &&
                          nat_subtractive_closure_member(max_gens, 1);
  return r;
}

std::string to_dot(const SpectrumSpace& space) {
  std::ostringstream os;
  const auto& r = *space.ring();
  auto label = [&](const ElementSet& p) {
    std::string s = "{";
    bool first = true;
    p.for_each([&](std::size_t a) {
      s += (first ? "" : ",") + r.name(static_cast<Elem>(a));
      first = false;
    });
    return s + "}";
  };
  os << "digraph \"" << to_string(space.kind()) << " " << r.label() << "\" {\n";
  for (std::size_t p = 0; p < space.size(); ++p)
    os << "  p" << p << " [label=\"" << label(space.points()[p]) << "\"];\n";
  for (std::size_t p = 0; p < space.size(); ++p)
    for (std::size_t q = 0; q < space.size(); ++q) {
      if (p == q || !space.specializes(p, q)) continue;
      bool covering = true;
      for (std::size_t m = 0; m < space.size(); ++m)
        if (m != p && m != q && space.specializes(p, m) && space.specializes(m, q))
          covering = false;
      if (covering) os << "  p" << p << " -> p" << q << ";\n";
    }
  os << "}\n";
  return os.str();
}

nlohmann::json to_json(const SpectrumSpace& space) {
  const auto& r = *space.ring();
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : space.points())
    pts.push_back({{"subset", p.members()}, {"subtractive", is_subtractive(r, p)}});
  nlohmann::json basis = nlohmann::json::object();
  for (Elem a = 0; a < r.size(); ++a) basis[std::to_string(a)] = space.D(a).members();
  return {{"kind", to_string(space.kind())}, {"semiring", r.label()},
          {"points", pts}, {"basis", basis}};
}

}  // namespace semispec
