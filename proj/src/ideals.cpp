#include "semispec/ideals.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <queue>
#include <set>

#include "semispec/corpus.hpp"
#include "semispec/errors.hpp"

namespace semispec {

namespace {

// Closes `set` (already an ideal, or empty) after inserting the elements on
// the work list.
void close_ideal(const FiniteSemiring& r, ElementSet& set, std::vector<Elem> work) {
  auto push = [&](Elem x) {
    if (!set.contains(x)) {
      set.insert(x);
      work.push_back(x);
    }
  };
  {
    std::vector<Elem> seed;
    seed.swap(work);
    push(r.zero());
    for (Elem x : seed) {
      if (!set.contains(x)) set.insert(x);
      work.push_back(x);
    }
  }
  while (!work.empty()) {
    const Elem x = work.back();
    work.pop_back();
    for (Elem a = 0; a < r.size(); ++a) push(r.mul(a, x));
    for (auto y : set.members()) push(r.add(x, static_cast<Elem>(y)));
  }
}

}  // namespace

ElementSet ideal_closure(const FiniteSemiring& r, const ElementSet& gens) {
  ElementSet out = r.empty_set();
  std::vector<Elem> work;
  gens.for_each([&](std::size_t g) { work.push_back(static_cast<Elem>(g)); });
  close_ideal(r, out, std::move(work));
  return out;
}

ElementSet ideal_closure(const FiniteSemiring& r, const std::vector<Elem>& gens) {
  ElementSet out = r.empty_set();
  close_ideal(r, out, gens);
  return out;
}

bool is_ideal(const FiniteSemiring& r, const ElementSet& s) {
  if (!s.contains(r.zero())) return false;
  const auto m = s.members();
  for (auto x : m) {
    for (auto y : m)
      if (!s.contains(r.add(static_cast<Elem>(x), static_cast<Elem>(y)))) return false;
    for (Elem a = 0; a < r.size(); ++a)
      if (!s.contains(r.mul(a, static_cast<Elem>(x)))) return false;
  }
  return true;
}

bool is_prime(const FiniteSemiring& r, const ElementSet& ideal) {
  if (!is_ideal(r, ideal) || ideal.contains(r.one())) return false;
  const auto out = ideal.complement().members();
  for (auto a : out)
    for (auto b : out)
      if (ideal.contains(r.mul(static_cast<Elem>(a), static_cast<Elem>(b)))) return false;
  return true;
}

bool is_subtractive(const FiniteSemiring& r, const ElementSet& ideal) {
  const auto m = ideal.members();
  for (Elem a = 0; a < r.size(); ++a) {
    if (ideal.contains(a)) continue;
    for (auto b : m)
      if (ideal.contains(r.add(a, static_cast<Elem>(b)))) return false;
  }
  return true;
}

bool is_down_closed(const FiniteSemiring& r, const ElementSet& s) {
  for (Elem a = 0; a < r.size(); ++a)
    for (Elem b = 0; b < r.size(); ++b)
      if (s.contains(b) && !s.contains(a) && leq(r, a, b)) return false;
  return true;
}

ElementSet subtractive_closure(const FiniteSemiring& r, const ElementSet& ideal) {
  ElementSet out = r.empty_set();
  const auto m = ideal.members();
  for (Elem a = 0; a < r.size(); ++a)
    for (auto b : m)
      if (ideal.contains(r.add(a, static_cast<Elem>(b)))) {
        out.insert(a);
        break;
      }
  return out;
}

bool radical_member(const FiniteSemiring& r, const ElementSet& ideal, Elem x) {
  std::vector<char> seen(r.size(), 0);
  for (Elem p = r.one(); !seen[p]; p = r.mul(p, x)) {
    if (ideal.contains(p)) return true;
    seen[p] = 1;
  }
  return false;
}

ElementSet radical(const FiniteSemiring& r, const ElementSet& ideal) {
  ElementSet out = r.empty_set();
  for (Elem a = 0; a < r.size(); ++a)
    if (radical_member(r, ideal, a)) out.insert(a);
  return out;
}

std::vector<ElementSet> enumerate_ideals(const FiniteSemiring& r) {
  std::set<ElementSet> seen;
  std::vector<ElementSet> work{ideal_closure(r, std::vector<Elem>{})};
  seen.insert(work.front());
  while (!work.empty()) {
    const ElementSet j = work.back();
    work.pop_back();
    for (Elem a = 0; a < r.size(); ++a) {
      if (j.contains(a)) continue;
      ElementSet k = j;
      close_ideal(r, k, {a});
      if (seen.insert(k).second) work.push_back(std::move(k));
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<ElementSet> enumerate_primes(const FiniteSemiring& r) {
  std::vector<ElementSet> out;
  for (auto& i : enumerate_ideals(r))
    if (is_prime(r, i)) out.push_back(std::move(i));
  return out;
}

ElementSet prime_intersection(const FiniteSemiring& r, const ElementSet& ideal,
                              const std::vector<ElementSet>& primes) {
  ElementSet out = r.full_set();
  for (const auto& p : primes)
    if (ideal.is_subset_of(p)) out &= p;
  return out;
}

bool radical_equals_prime_intersection(const FiniteSemiring& r, const ElementSet& ideal) {
  return radical(r, ideal) == prime_intersection(r, ideal, enumerate_primes(r));
}

Quotient quotient_by_ideal(const FiniteSemiring& r, const ElementSet& ideal) {
  const auto n = static_cast<Elem>(r.size());
  const auto m = ideal.members();
  // b ∼ a iff a+i = b+j; the relation is already an equivalence.
  std::vector<std::int64_t> cls(n, -1);
  Elem next = 0;
  for (Elem a = 0; a < n; ++a) {
    if (cls[a] != -1) continue;
    ElementSet reach = r.empty_set();
    for (auto i : m) reach.insert(r.add(a, static_cast<Elem>(i)));
    for (Elem b = a; b < n; ++b) {
      if (cls[b] != -1) continue;
      for (auto j : m)
        if (reach.contains(r.add(b, static_cast<Elem>(j)))) {
          cls[b] = next;
          break;
        }
    }
    ++next;
  }
  std::vector<Elem> proj(cls.begin(), cls.end());
  std::vector<Elem> rep(next);
  for (Elem a = n; a-- > 0;) rep[proj[a]] = a;
  std::vector<Elem> add(next * next), mul(next * next);
  std::vector<std::string> names;
  for (Elem x = 0; x < next; ++x) {
    names.push_back("[" + r.name(rep[x]) + "]");
    for (Elem y = 0; y < next; ++y) {
      add[x * next + y] = proj[r.add(rep[x], rep[y])];
      mul[x * next + y] = proj[r.mul(rep[x], rep[y])];
    }
  }
  auto q = std::make_shared<const FiniteSemiring>(next, std::move(add), std::move(mul),
                                                  proj[r.zero()], proj[r.one()],
                                                  r.label() + "/I", std::move(names));
  return {std::move(q), std::move(proj)};
}

ElementSet kernel_of(const FiniteSemiring& to, std::span<const Elem> map) {
  return preimage(map, ElementSet(to.size(), {to.zero()}));
}

namespace {

struct Apery {
  std::uint64_t modulus = 0;
  std::vector<std::uint64_t> least;  // least ideal element in each residue class
};

constexpr auto kInf = std::numeric_limits<std::uint64_t>::max();

Apery apery(const std::vector<std::uint64_t>& gens) {
  std::uint64_t g = 0;
  for (auto x : gens)
    if (x != 0 && (g == 0 || x < g)) g = x;
  Apery ap;
  ap.modulus = g;
  if (g == 0) return ap;
  ap.least.assign(g, kInf);
  ap.least[0] = 0;
  using Node = std::pair<std::uint64_t, std::uint64_t>;
  std::priority_queue<Node, std::vector<Node>, std::greater<>> pq;
  pq.push({0, 0});
  while (!pq.empty()) {
    auto [d, res] = pq.top();
    pq.pop();
    if (d != ap.least[res]) continue;
    for (auto h : gens) {
      if (h == 0) continue;
      const std::uint64_t nd = d + h, nr = (res + h) % g;
      if (nd < ap.least[nr]) {
        ap.least[nr] = nd;
        pq.push({nd, nr});
      }
    }
  }
  return ap;
}

bool apery_member(const Apery& ap, std::uint64_t a) {
  if (ap.modulus == 0) return a == 0;
  const auto l = ap.least[a % ap.modulus];
  return l != kInf && l <= a;
}

std::uint64_t gcd_of(const std::vector<std::uint64_t>& gens) {
  std::uint64_t d = 0;
  for (auto x : gens) d = std::gcd(d, x);
  return d;
}

bool is_prime_number(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  return true;
}

}  // namespace

bool nat_ideal_member(const std::vector<std::uint64_t>& gens, std::uint64_t a) {
  if (gens.empty()) throw PreconditionError("an ideal of N needs at least one generator");
  return apery_member(apery(gens), a);
}

bool is_prime_nat(const std::vector<std::uint64_t>& gens, std::uint64_t bound) {
  if (gens.empty()) throw PreconditionError("an ideal of N needs at least one generator");
  const Apery ap = apery(gens);
  if (apery_member(ap, 1)) return false;
  // 0 always lies in I, so both factors start at 1.
  for (std::uint64_t a = 1; a * a <= bound; ++a) {
    if (apery_member(ap, a)) continue;
    for (std::uint64_t b = a; a * b <= bound; ++b)
      if (!apery_member(ap, b) && apery_member(ap, a * b)) return false;
  }
  return true;
}

std::optional<std::string> nat_prime_classification(const std::vector<std::uint64_t>& gens) {
  if (gens.empty()) throw PreconditionError("an ideal of N needs at least one generator");
  const Apery ap = apery(gens);
  if (ap.modulus == 0) return "{0}";
  if (apery_member(ap, 1)) return std::nullopt;
  if (apery_member(ap, 2) && apery_member(ap, 3)) return "N\\{1}";
  const std::uint64_t d = gcd_of(gens);
  if (is_prime_number(d) && apery_member(ap, d)) return std::to_string(d) + "N";
  return std::nullopt;
}

bool is_subtractive_nat(const std::vector<std::uint64_t>& gens) {
  if (gens.empty()) throw PreconditionError("an ideal of N needs at least one generator");
  const std::uint64_t d = gcd_of(gens);
  return d == 0 || nat_ideal_member(gens, d);
}

bool is_subtractive_nat_bounded(const std::vector<std::uint64_t>& gens, std::uint64_t bound) {
  const Apery ap = apery(gens);
  std::vector<std::uint64_t> members;
  for (std::uint64_t c = 0; c <= bound; ++c)
    if (apery_member(ap, c)) members.push_back(c);
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (!apery_member(ap, members[i] - members[j])) return false;
  return true;
}

bool nat_subtractive_closure_member(const std::vector<std::uint64_t>& gens, std::uint64_t a) {
  if (gens.empty()) throw PreconditionError("an ideal of N needs at least one generator");
  const std::uint64_t d = gcd_of(gens);
  return d == 0 ? a == 0 : a % d == 0;
}

IdealHandle IdealHandle::finite_subset(SemiringRef ring, ElementSet subset) {
  if (subset.universe() != ring->size()) throw StructuralError("subset universe mismatch");
  if (!is_ideal(*ring, subset)) throw PreconditionError(subset.to_string() + " is not an ideal");
  IdealHandle h;
  h.ring_ = std::move(ring);
  h.gens_.clear();
  subset.for_each([&](std::size_t a) { h.gens_.push_back(static_cast<Elem>(a)); });
  h.subset_ = std::move(subset);
  return h;
}

IdealHandle IdealHandle::finite_generated(SemiringRef ring, std::vector<Elem> gens) {
  for (auto g : gens)
    if (g >= ring->size()) throw StructuralError("generator index out of range");
  IdealHandle h;
  h.subset_ = ideal_closure(*ring, gens);
  h.ring_ = std::move(ring);
  h.gens_ = std::move(gens);
  return h;
}

IdealHandle IdealHandle::nat(std::vector<std::uint64_t> gens) {
  if (gens.empty()) throw PreconditionError("an ideal of N needs at least one generator");
  IdealHandle h;
  h.nat_gens_ = std::move(gens);
  return h;
}

const ElementSet& IdealHandle::subset() const {
  if (!subset_) throw UnsupportedError("ideal of N has no explicit member set");
  return *subset_;
}

bool IdealHandle::contains(std::uint64_t a) const {
  if (is_nat()) return nat_ideal_member(nat_gens_, a);
  return a < ring_->size() && subset_->contains(a);
}

bool is_prime(const IdealHandle& i) {
  return i.is_nat() ? is_prime_nat(i.nat_generators()) : is_prime(*i.ring(), i.subset());
}

bool is_subtractive(const IdealHandle& i) {
  if (i.is_nat()) return is_subtractive_nat(i.nat_generators());
  if (is_idempotent(*i.ring())) return is_down_closed(*i.ring(), i.subset());
  return is_subtractive(*i.ring(), i.subset());
}

IdealHandle subtractive_closure(const IdealHandle& i) {
  if (i.is_nat()) return IdealHandle::nat({gcd_of(i.nat_generators())});
  return IdealHandle::finite_subset(i.ring(), subtractive_closure(*i.ring(), i.subset()));
}

IdealHandle ideal_from_json(const nlohmann::json& doc) {
  try {
    const auto ambient = doc.at("ambient").get<std::string>();
    if (ambient == "N") {
      if (doc.contains("subset")) throw UnsupportedError("ideals of N are given by generators");
      return IdealHandle::nat(doc.at("gens").get<std::vector<std::uint64_t>>());
    }
    auto ring = corpus_get(ambient);
    if (doc.contains("subset")) {
      ElementSet s(ring->size());
      for (auto a : doc["subset"].get<std::vector<std::size_t>>()) {
        if (a >= ring->size()) throw StructuralError("subset index out of range");
        s.insert(a);
      }
      return IdealHandle::finite_subset(ring, std::move(s));
    }
    return IdealHandle::finite_generated(ring, doc.at("gens").get<std::vector<Elem>>());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("ideal: ") + e.what());
  }
}

nlohmann::json ideal_to_json(const IdealHandle& i) {
  if (i.is_nat()) return {{"ambient", "N"}, {"gens", i.nat_generators()}};
  return {{"ambient", i.ring()->label()}, {"subset", i.subset().members()}};
}

}  // namespace semispec
