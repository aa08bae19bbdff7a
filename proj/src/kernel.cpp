#include "semispec/kernel.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "semispec/errors.hpp"

namespace semispec {

FiniteSemiring::FiniteSemiring(std::size_t size, std::vector<Elem> add,
                               std::vector<Elem> mul, Elem zero, Elem one,
                               std::string label,
                               std::vector<std::string> names)
    : size_(size),
      add_(std::move(add)),
      mul_(std::move(mul)),
      zero_(zero),
      one_(one),
      label_(std::move(label)),
      names_(std::move(names)) {
  if (size_ == 0) throw StructuralError("semiring carrier must be nonempty");
  if (add_.size() != size_ * size_ || mul_.size() != size_ * size_)
    throw StructuralError("operation tables must be size x size");
  if (zero_ >= size_ || one_ >= size_)
    throw StructuralError("zero/one index out of range");
  for (auto v : add_)
    if (v >= size_) throw StructuralError("add table entry out of range");
  for (auto v : mul_)
    if (v >= size_) throw StructuralError("mul table entry out of range");
  if (!names_.empty() && names_.size() != size_)
    throw StructuralError("names must list one entry per element");
}

Elem FiniteSemiring::pow(Elem a, std::size_t n) const {
  Elem r = one_;
  for (std::size_t i = 0; i < n; ++i) r = mul(r, a);
  return r;
}

std::string FiniteSemiring::name(Elem a) const {
  if (!names_.empty()) return names_[a];
  return std::to_string(a);
}

std::vector<AxiomViolation> verify_axioms(const FiniteSemiring& r) {
  std::vector<AxiomViolation> out;
  const auto n = static_cast<Elem>(r.size());
  auto report = [&](const char* law, Elem a, Elem b, Elem c) {
    out.push_back({law, {a, b, c}});
  };
  // One witness per law keeps reports readable on badly broken tables.
  bool seen[9] = {};
  auto once = [&](int k, const char* law, Elem a, Elem b, Elem c) {
    if (!seen[k]) {
      seen[k] = true;
      report(law, a, b, c);
    }
  };
  for (Elem a = 0; a < n; ++a) {
    if (r.add(a, r.zero()) != a) once(0, "additive identity", a, r.zero(), 0);
    if (r.mul(a, r.one()) != a) once(1, "multiplicative identity", a, r.one(), 0);
    if (r.mul(a, r.zero()) != r.zero()) once(2, "absorbing zero", a, r.zero(), 0);
    for (Elem b = 0; b < n; ++b) {
      if (r.add(a, b) != r.add(b, a)) once(3, "additive commutativity", a, b, 0);
      if (r.mul(a, b) != r.mul(b, a)) once(4, "multiplicative commutativity", a, b, 0);
      for (Elem c = 0; c < n; ++c) {
        if (r.add(r.add(a, b), c) != r.add(a, r.add(b, c)))
          once(5, "additive associativity", a, b, c);
        if (r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c)))
          once(6, "multiplicative associativity", a, b, c);
        if (r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c)))
          once(7, "distributivity", a, b, c);
      }
    }
  }
  return out;
}

bool is_idempotent(const FiniteSemiring& r) {
  return r.add(r.one(), r.one()) == r.one();
}

bool leq(const FiniteSemiring& r, Elem a, Elem b) {
  if (!is_idempotent(r))
    throw PreconditionError("order requires an idempotent semiring");
  return r.add(a, b) == b;
}

bool is_homomorphism(const FiniteSemiring& from, const FiniteSemiring& to,
                     std::span<const Elem> map) {
  if (map.size() != from.size()) return false;
  for (auto v : map)
    if (v >= to.size()) return false;
  if (map[from.zero()] != to.zero() || map[from.one()] != to.one()) return false;
  const auto n = static_cast<Elem>(from.size());
  for (Elem a = 0; a < n; ++a)
    for (Elem b = a; b < n; ++b) {
      if (map[from.add(a, b)] != to.add(map[a], map[b])) return false;
      if (map[from.mul(a, b)] != to.mul(map[a], map[b])) return false;
    }
  return true;
}

namespace {

constexpr std::int64_t kUnset = -1;

// Backtracking over image tables. Assigning an image propagates every sum and
// product of assigned elements, so a generating set fixes the rest.
class HomSearch {
 public:
  HomSearch(const FiniteSemiring& from, const FiniteSemiring& to, bool injective)
      : from_(from), to_(to), injective_(injective),
        map_(from.size(), kUnset), owner_(to.size(), kUnset) {}

  template <class Visit>
  void run(Visit&& visit) {
    if (injective_ && from_.size() != to_.size()) return;
    if (!assign(from_.zero(), to_.zero()) || !assign(from_.one(), to_.one()) ||
        !propagate())
      return;
    descend(visit);
  }

 private:
  template <class Visit>
  bool descend(Visit& visit) {
    std::size_t next = 0;
    while (next < map_.size() && map_[next] != kUnset) ++next;
    if (next == map_.size()) {
      std::vector<Elem> out(map_.begin(), map_.end());
      return visit(std::move(out));
    }
    for (Elem v = 0; v < to_.size(); ++v) {
      const std::size_t mark = trail_.size();
      if (assign(static_cast<Elem>(next), v) && propagate())
        if (!descend(visit)) return false;
      undo(mark);
    }
    return true;
  }

  bool assign(Elem a, Elem v) {
    if (map_[a] != kUnset) return map_[a] == v;
    if (injective_ && owner_[v] != kUnset) return false;
    map_[a] = v;
    if (injective_) owner_[v] = a;
    trail_.push_back(a);
    queue_.push_back(a);
    return true;
  }

  bool propagate() {
    while (!queue_.empty()) {
      const Elem a = queue_.back();
      queue_.pop_back();
      for (Elem b = 0; b < from_.size(); ++b) {
        if (map_[b] == kUnset) continue;
        const auto va = static_cast<Elem>(map_[a]);
        const auto vb = static_cast<Elem>(map_[b]);
        if (!assign(from_.add(a, b), to_.add(va, vb)) ||
            !assign(from_.mul(a, b), to_.mul(va, vb))) {
          queue_.clear();
          return false;
        }
      }
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const Elem a = trail_.back();
      trail_.pop_back();
      if (injective_) owner_[static_cast<std::size_t>(map_[a])] = kUnset;
      map_[a] = kUnset;
    }
    queue_.clear();
  }

  const FiniteSemiring& from_;
  const FiniteSemiring& to_;
  bool injective_;
  std::vector<std::int64_t> map_;
  std::vector<std::int64_t> owner_;
  std::vector<Elem> trail_;
  std::vector<Elem> queue_;
};

}  // namespace

std::vector<std::vector<Elem>> enumerate_hom_maps(const FiniteSemiring& from,
                                                  const FiniteSemiring& to) {
  std::vector<std::vector<Elem>> out;
  HomSearch(from, to, false).run([&](std::vector<Elem> m) {
    out.push_back(std::move(m));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Homomorphism> enumerate_homs(const SemiringRef& from,
                                         const SemiringRef& to) {
  std::vector<Homomorphism> out;
  for (auto& m : enumerate_hom_maps(*from, *to)) out.push_back({from, to, std::move(m)});
  return out;
}

std::vector<Elem> compose(std::span<const Elem> f, std::span<const Elem> g) {
  std::vector<Elem> out(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out[i] = g[f[i]];
  return out;
}

std::optional<Elem> inverse(const FiniteSemiring& r, Elem a) {
  for (Elem b = 0; b < r.size(); ++b)
    if (r.mul(a, b) == r.one()) return b;
  return std::nullopt;
}

ElementSet units(const FiniteSemiring& r) {
  ElementSet out = r.empty_set();
  for (Elem a = 0; a < r.size(); ++a)
    if (inverse(r, a)) out.insert(a);
  return out;
}

std::optional<std::vector<Elem>> find_isomorphism(const FiniteSemiring& from,
                                                  const FiniteSemiring& to) {
  std::optional<std::vector<Elem>> found;
  HomSearch(from, to, true).run([&](std::vector<Elem> m) {
    found = std::move(m);
    return false;
  });
  return found;
}

bool is_bijective_hom(const FiniteSemiring& from, const FiniteSemiring& to,
                      std::span<const Elem> map) {
  if (from.size() != to.size() || !is_homomorphism(from, to, map)) return false;
  std::vector<char> hit(to.size(), 0);
  for (auto v : map) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

ElementSet image(std::span<const Elem> map, const ElementSet& s,
                 std::size_t codomain_size) {
  ElementSet out(codomain_size);
  s.for_each([&](std::size_t a) { out.insert(map[a]); });
  return out;
}

ElementSet preimage(std::span<const Elem> map, const ElementSet& s) {
  ElementSet out(map.size());
  for (std::size_t a = 0; a < map.size(); ++a)
    if (s.contains(map[a])) out.insert(a);
  return out;
}

namespace {

std::vector<Elem> read_table(const nlohmann::json& t, std::size_t n,
                             const char* key) {
  if (!t.is_array() || t.size() != n)
    throw StructuralError(std::string(key) + " table must have " +
                          std::to_string(n) + " rows");
  std::vector<Elem> out;
  out.reserve(n * n);
  for (const auto& row : t) {
    if (!row.is_array() || row.size() != n)
      throw StructuralError(std::string(key) + " table rows must have " +
                            std::to_string(n) + " entries");
    for (const auto& v : row) {
      if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
        throw StructuralError(std::string(key) + " entries must be indices");
      out.push_back(v.get<Elem>());
    }
  }
  return out;
}

}  // namespace

FiniteSemiring semiring_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw ParseError("semiring document must be an object");
  for (const char* k : {"size", "zero", "one", "add", "mul"})
    if (!doc.contains(k)) throw ParseError(std::string("missing key '") + k + "'");
  if (!doc["size"].is_number_integer() || doc["size"].get<long long>() <= 0)
    throw StructuralError("size must be a positive integer");
  const auto n = doc["size"].get<std::size_t>();
  auto add = read_table(doc["add"], n, "add");
  auto mul = read_table(doc["mul"], n, "mul");
  std::vector<std::string> names;
  if (doc.contains("names")) names = doc["names"].get<std::vector<std::string>>();
  return FiniteSemiring(n, std::move(add), std::move(mul), doc["zero"].get<Elem>(),
                        doc["one"].get<Elem>(), doc.value("label", std::string{}),
                        std::move(names));
}

nlohmann::json semiring_to_json(const FiniteSemiring& r) {
  nlohmann::json add = nlohmann::json::array(), mul = nlohmann::json::array();
  for (Elem a = 0; a < r.size(); ++a) {
    nlohmann::json ra = nlohmann::json::array(), rm = nlohmann::json::array();
    for (Elem b = 0; b < r.size(); ++b) {
      ra.push_back(r.add(a, b));
      rm.push_back(r.mul(a, b));
    }
    add.push_back(std::move(ra));
    mul.push_back(std::move(rm));
  }
  nlohmann::json doc = {{"size", r.size()}, {"zero", r.zero()}, {"one", r.one()},
                        {"add", add},       {"mul", mul},       {"label", r.label()}};
  if (!r.names().empty()) doc["names"] = r.names();
  return doc;
}

FiniteSemiring load_semiring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  try {
    return semiring_from_json(doc);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
}

}  // namespace semispec
