#include "semispec/corpus.hpp"

#include <functional>
#include <map>

#include "semispec/errors.hpp"

namespace semispec {

namespace {

SemiringRef tabulate(std::size_t n, const std::function<Elem(Elem, Elem)>& add,
                     const std::function<Elem(Elem, Elem)>& mul, Elem zero, Elem one,
                     std::string label, std::vector<std::string> names = {}) {
  std::vector<Elem> at(n * n), mt(n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      at[a * n + b] = add(a, b);
      mt[a * n + b] = mul(a, b);
    }
  return std::make_shared<const FiniteSemiring>(n, std::move(at), std::move(mt), zero,
                                                one, std::move(label), std::move(names));
}

}  // namespace

SemiringRef make_chain(std::size_t n) {
  std::vector<std::string> names;
  if (n == 3) names = {"0", "1/2", "1"};
  return tabulate(
      n, [](Elem a, Elem b) { return std::max(a, b); },
      [](Elem a, Elem b) { return std::min(a, b); }, 0, static_cast<Elem>(n - 1),
      "chain" + std::to_string(n), std::move(names));
}

SemiringRef make_zmod(std::size_t n) {
  const auto m = static_cast<Elem>(n);
  return tabulate(
      n, [m](Elem a, Elem b) { return (a + b) % m; },
      [m](Elem a, Elem b) { return (a * b) % m; }, 0, 1 % m, "zmod" + std::to_string(n));
}

SemiringRef make_nat_trunc(std::size_t n) {
  const auto m = static_cast<Elem>(n);
  return tabulate(
      n + 1, [m](Elem a, Elem b) { return std::min(a + b, m); },
      [m](Elem a, Elem b) { return std::min(a * b, m); }, 0, 1,
      "nat-trunc" + std::to_string(n));
}

SemiringRef make_trivial() {
  return tabulate(
      1, [](Elem, Elem) { return 0u; }, [](Elem, Elem) { return 0u; }, 0, 0, "trivial");
}

SemiringRef make_product(const FiniteSemiring& a, const FiniteSemiring& b) {
  const auto nb = static_cast<Elem>(b.size());
  std::vector<std::string> names;
  for (Elem i = 0; i < a.size(); ++i)
    for (Elem j = 0; j < nb; ++j) names.push_back("(" + a.name(i) + "," + b.name(j) + ")");
  return tabulate(
      a.size() * b.size(),
      [&](Elem x, Elem y) { return a.add(x / nb, y / nb) * nb + b.add(x % nb, y % nb); },
      [&](Elem x, Elem y) { return a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb); },
      a.zero() * nb + b.zero(), a.one() * nb + b.one(), a.label() + "x" + b.label(),
      std::move(names));
}

SemiringRef make_bool_monoid_semiring(const std::vector<std::string>& monoid_names,
                                      const std::vector<std::size_t>& monoid_mul,
                                      std::string label) {
  const std::size_t m = monoid_names.size();
  if (m > 16) throw ResourceError("monoid too large for a Boolean monoid semiring");
  if (monoid_mul.size() != m * m) throw StructuralError("monoid table must be m x m");
  const std::size_t n = std::size_t{1} << m;
  std::vector<std::string> names(n);
  for (std::size_t s = 0; s < n; ++s) {
    std::string nm;
    for (std::size_t i = 0; i < m; ++i)
      if (s >> i & 1) nm += (nm.empty() ? "" : "+") + monoid_names[i];
    names[s] = nm.empty() ? "0" : nm;
  }
  return tabulate(
      n, [](Elem a, Elem b) { return a | b; },
      [&](Elem a, Elem b) {
        Elem r = 0;
        for (std::size_t i = 0; i < m; ++i)
          if (a >> i & 1)
            for (std::size_t j = 0; j < m; ++j)
              if (b >> j & 1) r |= Elem{1} << monoid_mul[i * m + j];
        return r;
      },
      0, 1, std::move(label), std::move(names));
}

SemiringRef make_boolean_cube(std::size_t n) {
  if (n > 4) throw ResourceError("boolean cube limited to 4 variables");
  const std::size_t m = std::size_t{1} << n;
  std::vector<std::string> names(m);
  std::vector<std::size_t> mul(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    std::string nm;
    for (std::size_t v = 0; v < n; ++v)
      if (i >> v & 1) nm += "x" + std::to_string(v + 1);
    names[i] = nm.empty() ? "1" : nm;
    for (std::size_t j = 0; j < m; ++j) mul[i * m + j] = i | j;
  }
  if (n == 1) names[1] = "x";
  return make_bool_monoid_semiring(names, mul, "cube" + std::to_string(n));
}

SemiringRef make_bool_truncated_poly(std::size_t k) {
  const std::size_t m = k + 1;
  std::vector<std::string> names(m);
  std::vector<std::size_t> mul(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    names[i] = i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i);
    for (std::size_t j = 0; j < m; ++j) mul[i * m + j] = std::min(i + j, k);
  }
  return make_bool_monoid_semiring(names, mul, "bx-trunc" + std::to_string(k));
}

namespace {

const std::map<std::string, std::function<SemiringRef()>>& registry() {
  static const std::map<std::string, std::function<SemiringRef()>> r = {
      {"bool", [] { return make_chain(2); }},
      {"chain3", [] { return make_chain(3); }},
      {"chain4", [] { return make_chain(4); }},
      {"bx-idem", [] { return make_bool_truncated_poly(1); }},
      {"bx-cube", [] { return make_bool_truncated_poly(2); }},
      {"bool2", [] { return make_product(*make_chain(2), *make_chain(2)); }},
      {"bool-chain3", [] { return make_product(*make_chain(2), *make_chain(3)); }},
      {"zmod3", [] { return make_zmod(3); }},
      {"zmod4", [] { return make_zmod(4); }},
      {"zmod6", [] { return make_zmod(6); }},
      {"nat-trunc3", [] { return make_nat_trunc(3); }},
      {"cube2", [] { return make_boolean_cube(2); }},
      {"trivial", [] { return make_trivial(); }},
  };
  return r;
}

SemiringRef relabel(SemiringRef r, const std::string& label) {
  return std::make_shared<const FiniteSemiring>(r->size(), r->add_table(), r->mul_table(),
                                                r->zero(), r->one(), label, r->names());
}

}  // namespace

SemiringRef corpus_get(const std::string& name) {
  auto it = registry().find(name);
  if (it == registry().end()) throw ParseError("unknown semiring '" + name + "'");
  return relabel(it->second(), name);
}

std::vector<std::string> corpus_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : registry()) out.push_back(k);
  return out;
}

std::vector<SemiringRef> finite_corpus() {
  std::vector<SemiringRef> out;
  for (const char* n : {"bool", "chain3", "zmod3", "bx-idem", "bool2", "chain4", "zmod4",
                        "nat-trunc3", "bool-chain3", "zmod6", "bx-cube"})
    out.push_back(corpus_get(n));
  return out;
}

}  // namespace semispec
