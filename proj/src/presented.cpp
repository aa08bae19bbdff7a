#include "semispec/presented.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <fstream>

#include "semispec/errors.hpp"

namespace semispec {

Term Term::constant(std::size_t nvars, std::uint64_t c) {
  Term t(nvars);
  t.add_term(Exponent(nvars, 0), c);
  return t;
}

Term Term::monomial(const Exponent& e, std::uint64_t c) {
  Term t(e.size());
  t.add_term(e, c);
  return t;
}

int Term::degree() const {
  int d = -1;
  for (const auto& [e, c] : coeffs_) {
    int s = 0;
    for (auto k : e) s += static_cast<int>(k);
    d = std::max(d, s);
  }
  return d;
}

std::uint64_t Term::max_coefficient() const {
  std::uint64_t m = 0;
  for (const auto& [e, c] : coeffs_) m = std::max(m, c);
  return m;
}

void Term::add_term(const Exponent& e, std::uint64_t c) {
  if (e.size() != nvars_) throw PreconditionError("exponent length mismatch");
  if (c != 0) coeffs_[e] += c;
}

Term operator+(const Term& a, const Term& b) {
  Term r = a;
  for (const auto& [e, c] : b.coeffs_) r.add_term(e, c);
  return r;
}

Term operator*(const Term& a, const Term& b) {
  Term r(a.nvars_);
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) r.add_term(exponent_sum(ea, eb), ca * cb);
  return r;
}

std::string Term::to_string(const std::vector<std::string>& vars) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : coeffs_) {
    if (!out.empty()) out += '+';
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += vars.at(i);
      if (e[i] > 1) mono += '^' + std::to_string(e[i]);
    }
    if (mono.empty())
      out += std::to_string(c);
    else
      out += (c == 1 ? "" : std::to_string(c) + "*") + mono;
  }
  return out;
}

Term parse_term(const std::string& text, const std::vector<std::string>& vars) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) throw ParseError("empty term");
  Term out(vars.size());
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find('+', start);
    if (end == std::string::npos) end = s.size();
    const std::string mono = s.substr(start, end - start);
    if (mono.empty()) throw ParseError("empty summand in '" + text + "'");
    std::uint64_t c = 1;
    Exponent e(vars.size(), 0);
    std::size_t fs = 0;
    while (fs <= mono.size()) {
      std::size_t fe = mono.find('*', fs);
      if (fe == std::string::npos) fe = mono.size();
      const std::string f = mono.substr(fs, fe - fs);
      if (f.empty()) throw ParseError("empty factor in '" + text + "'");
      if (std::all_of(f.begin(), f.end(), ::isdigit)) {
        c *= std::stoull(f);
      } else {
        const auto caret = f.find('^');
        const std::string name = f.substr(0, caret);
        auto it = std::find(vars.begin(), vars.end(), name);
        if (it == vars.end()) throw ParseError("unknown generator '" + name + "'");
        std::uint32_t k = 1;
        if (caret != std::string::npos) {
          const std::string ks = f.substr(caret + 1);
          if (ks.empty() || !std::all_of(ks.begin(), ks.end(), ::isdigit))
            throw ParseError("bad exponent in '" + f + "'");
          k = static_cast<std::uint32_t>(std::stoul(ks));
        }
        e[static_cast<std::size_t>(it - vars.begin())] += k;
      }
      fs = fe + 1;
    }
    out.add_term(e, c);
    start = end + 1;
  }
  return out;
}

Presentation presentation_from_json(const nlohmann::json& doc) {
  try {
    Presentation p;
    p.generators = doc.at("gens").get<std::vector<std::string>>();
    for (const auto& rel : doc.at("rels")) {
      if (!rel.is_array() || rel.size() != 2)
        throw ParseError("each relation must be a pair of terms");
      p.relations.emplace_back(p.parse(rel[0].get<std::string>()),
                               p.parse(rel[1].get<std::string>()));
    }
    p.idempotent = doc.value("idempotent", false);
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("presentation: ") + e.what());
  }
}

nlohmann::json presentation_to_json(const Presentation& p) {
  nlohmann::json rels = nlohmann::json::array();
  for (const auto& [l, r] : p.relations) rels.push_back({p.show(l), p.show(r)});
  return {{"gens", p.generators}, {"rels", rels}, {"idempotent", p.idempotent}};
}

Presentation load_presentation(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  return presentation_from_json(doc);
}

Presentation xy_counterexample_presentation() {
  Presentation p;
  p.generators = {"x", "y"};
  for (auto [l, r] : {std::pair{"x^2", "x"}, {"y^2", "y"}, {"1+x", "x+y"}})
    p.relations.emplace_back(p.parse(l), p.parse(r));
  return p;
}

CongruenceBound congruence_bound_from_env(CongruenceBound fallback) {
  const char* v = std::getenv("SEMISPEC_CONGRUENCE_BOUND");
  if (!v || !*v) return fallback;
  std::string s(v);
  try {
    auto comma = s.find(',');
    if (comma == std::string::npos) {
      fallback.max_degree = fallback.max_coefficient = static_cast<unsigned>(std::stoul(s));
    } else {
      fallback.max_degree = static_cast<unsigned>(std::stoul(s.substr(0, comma)));
      fallback.max_coefficient = static_cast<unsigned>(std::stoul(s.substr(comma + 1)));
    }
  } catch (const std::exception&) {
    throw ParseError("SEMISPEC_CONGRUENCE_BOUND must be N or DEGREE,COEFFICIENT");
  }
  return fallback;
}

namespace {

using Key = std::string;

struct Rule {
  std::size_t relation;
  bool reversed;
  std::size_t multiplier;
  std::vector<std::pair<std::size_t, unsigned>> lhs;
  std::vector<std::pair<std::size_t, unsigned>> rhs;
};

std::vector<Exponent> monomials_up_to(std::size_t nvars, unsigned degree) {
  std::vector<Exponent> out;
  Exponent e(nvars, 0);
  std::function<void(std::size_t, unsigned)> rec = [&](std::size_t i, unsigned left) {
    if (i == nvars) {
      out.push_back(e);
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, degree);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

struct CongruenceIndex::Impl {
  std::vector<Exponent> monos;
  std::map<Exponent, std::size_t> mono_index;
  std::vector<Rule> rules;
  unsigned cap = 0;
  std::size_t nvars = 0;

  mutable std::mutex mu;
  mutable std::unordered_map<Key, std::uint32_t> comp_of;
  mutable std::vector<Term> comp_rep;

  Key key_of(const Term& t) const {
    Key k(monos.size(), '\0');
    for (const auto& [e, c] : t.coeffs()) k[mono_index.at(e)] = static_cast<char>(c);
    return k;
  }

  Term term_of(const Key& k) const {
    Term t(nvars);
    for (std::size_t i = 0; i < k.size(); ++i)
      if (k[i]) t.add_term(monos[i], static_cast<unsigned char>(k[i]));
    return t;
  }

  template <class F>
  void neighbours(const Key& k, F&& f) const {
    Key next;
    for (std::size_t r = 0; r < rules.size(); ++r) {
      const Rule& rule = rules[r];
      bool ok = true;
      for (auto [i, c] : rule.lhs)
        if (static_cast<unsigned char>(k[i]) < c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      next = k;
      for (auto [i, c] : rule.lhs) next[i] = static_cast<char>(static_cast<unsigned char>(next[i]) - c);
      for (auto [i, c] : rule.rhs) {
        const unsigned v = static_cast<unsigned char>(next[i]) + c;
        if (v > cap) {
          ok = false;
          break;
        }
        next[i] = static_cast<char>(v);
      }
      if (ok && next != k) f(r, next);
    }
  }

  // Caller holds mu.
  std::uint32_t explore(const Key& start, std::size_t budget) const {
    auto it = comp_of.find(start);
    if (it != comp_of.end()) return it->second;
    const auto id = static_cast<std::uint32_t>(comp_rep.size());
    std::vector<Key> members{start};
    comp_of.emplace(start, id);
    for (std::size_t head = 0; head < members.size(); ++head) {
      const Key cur = members[head];
      neighbours(cur, [&](std::size_t, const Key& n) {
        if (comp_of.emplace(n, id).second) members.push_back(n);
      });
      if (members.size() > budget) {
        for (const auto& m : members) comp_of.erase(m);
        throw ResourceError("congruence class exceeds " + std::to_string(budget) +
                            " terms at the configured bound");
      }
    }
    Term rep = term_of(members.front());
    for (const auto& m : members) {
      Term t = term_of(m);
      if (t < rep) rep = std::move(t);
    }
    comp_rep.push_back(std::move(rep));
    return id;
  }
};

CongruenceIndex::CongruenceIndex(Presentation p, CongruenceBound bound)
    : pres_(std::move(p)), bound_(bound), impl_(std::make_unique<Impl>()) {
  if (bound_.max_coefficient > 255) throw UnsupportedError("coefficient bound above 255");
  const std::size_t n = pres_.generators.size();
  if (pres_.idempotent)
    pres_.relations.emplace_back(Term::constant(n, 2), Term::constant(n, 1));
  impl_->nvars = n;
  impl_->cap = bound_.max_coefficient;
  impl_->monos = monomials_up_to(n, bound_.max_degree);
  for (std::size_t i = 0; i < impl_->monos.size(); ++i) impl_->mono_index[impl_->monos[i]] = i;
  for (std::size_t r = 0; r < pres_.relations.size(); ++r) {
    const auto& [l, rr] = pres_.relations[r];
    if (l.nvars() != n || rr.nvars() != n || !in_universe(l) || !in_universe(rr))
      throw PreconditionError("relation " + pres_.show(l) + " ~ " + pres_.show(rr) +
                              " does not fit the congruence bound");
    for (int o = 0; o < 2; ++o) {
      const Term& from = o == 0 ? l : rr;
      const Term& to = o == 0 ? rr : l;
      for (std::size_t m = 0; m < impl_->monos.size(); ++m) {
        const Term mono = Term::monomial(impl_->monos[m]);
        const Term ml = mono * from, mr = mono * to;
        if (!in_universe(ml) || !in_universe(mr)) continue;
        Rule rule{r, o == 1, m, {}, {}};
        for (const auto& [e, c] : ml.coeffs())
          rule.lhs.emplace_back(impl_->mono_index.at(e), static_cast<unsigned>(c));
        for (const auto& [e, c] : mr.coeffs())
          rule.rhs.emplace_back(impl_->mono_index.at(e), static_cast<unsigned>(c));
        impl_->rules.push_back(std::move(rule));
      }
    }
  }
  // Materialize small universes whole.
  long double total = 1;
  for (std::size_t i = 0; i < impl_->monos.size(); ++i) total *= bound_.max_coefficient + 1;
  if (total <= static_cast<long double>(bound_.max_terms)) {
    std::lock_guard lock(impl_->mu);
    Key k(impl_->monos.size(), '\0');
    while (true) {
      impl_->explore(k, bound_.max_terms);
      std::size_t i = 0;
      while (i < k.size() && static_cast<unsigned char>(k[i]) == bound_.max_coefficient) k[i++] = 0;
      if (i == k.size()) break;
      k[i] = static_cast<char>(k[i] + 1);
    }
    materialized_ = true;
  }
}

CongruenceIndex::~CongruenceIndex() = default;

bool CongruenceIndex::in_universe(const Term& t) const {
  return t.nvars() == pres_.generators.size() &&
         t.degree() <= static_cast<int>(bound_.max_degree) &&
         t.max_coefficient() <= bound_.max_coefficient;
}

Congruence CongruenceIndex::congruent(const Term& s, const Term& t) const {
  if (!in_universe(s) || !in_universe(t))
    throw PreconditionError("term outside the congruence bound");
  std::lock_guard lock(impl_->mu);
  const auto a = impl_->explore(impl_->key_of(s), bound_.max_terms);
  const auto b = impl_->explore(impl_->key_of(t), bound_.max_terms);
  return a == b ? Congruence::Yes : Congruence::NoAtBound;
}

Term CongruenceIndex::representative(const Term& t) const {
  if (!in_universe(t)) throw PreconditionError("term outside the congruence bound");
  std::lock_guard lock(impl_->mu);
  return impl_->comp_rep[impl_->explore(impl_->key_of(t), bound_.max_terms)];
}

std::vector<Term> CongruenceIndex::class_members(const Term& t) const {
  if (!in_universe(t)) throw PreconditionError("term outside the congruence bound");
  std::lock_guard lock(impl_->mu);
  const auto id = impl_->explore(impl_->key_of(t), bound_.max_terms);
  std::vector<Term> out;
  for (const auto& [k, c] : impl_->comp_of)
    if (c == id) out.push_back(impl_->term_of(k));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Term> CongruenceIndex::representatives() const {
  if (!materialized_) throw PreconditionError("universe is not materialized");
  std::lock_guard lock(impl_->mu);
  std::vector<Term> out = impl_->comp_rep;
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<RewriteChain> CongruenceIndex::certificate(const Term& s, const Term& t) const {
  if (congruent(s, t) != Congruence::Yes) return std::nullopt;
  const Key ks = impl_->key_of(s), kt = impl_->key_of(t);
  std::unordered_map<Key, std::pair<Key, std::size_t>> parent;
  std::deque<Key> queue{ks};
  parent.emplace(ks, std::pair{ks, std::size_t(-1)});
  while (!queue.empty() && !parent.count(kt)) {
    const Key cur = queue.front();
    queue.pop_front();
    impl_->neighbours(cur, [&](std::size_t rule, const Key& n) {
      if (parent.emplace(n, std::pair{cur, rule}).second) queue.push_back(n);
    });
  }
  std::vector<RewriteStep> steps;
  for (Key cur = kt; cur != ks;) {
    const auto& [prev, rule] = parent.at(cur);
    const Rule& r = impl_->rules[rule];
    steps.push_back({r.relation, r.reversed, impl_->monos[r.multiplier], impl_->term_of(cur)});
    cur = prev;
  }
  std::reverse(steps.begin(), steps.end());
  return RewriteChain{s, std::move(steps)};
}

std::size_t CongruenceIndex::terms_explored() const {
  std::lock_guard lock(impl_->mu);
  return impl_->comp_of.size();
}

bool replay(const Presentation& p, const RewriteChain& chain, const Term& target) {
  std::vector<std::pair<Term, Term>> rels = p.relations;
  const std::size_t n = p.generators.size();
  if (p.idempotent && (rels.empty() || rels.back() != std::pair{Term::constant(n, 2), Term::constant(n, 1)}))
    rels.emplace_back(Term::constant(n, 2), Term::constant(n, 1));
  Term cur = chain.start;
  for (const auto& step : chain.steps) {
    if (step.relation >= rels.size() || step.multiplier.size() != n) return false;
    const auto& [l, r] = rels[step.relation];
    const Term mono = Term::monomial(step.multiplier);
    const Term from = mono * (step.reversed ? r : l);
    const Term to = mono * (step.reversed ? l : r);
    // cur = from + w for some w; the step result must be to + w.
    Term w(n);
    for (const auto& [e, c] : cur.coeffs()) {
      auto it = from.coeffs().find(e);
      const std::uint64_t sub = it == from.coeffs().end() ? 0 : it->second;
      if (c < sub) return false;
      w.add_term(e, c - sub);
    }
    for (const auto& [e, c] : from.coeffs())
      if (!cur.coeffs().count(e)) return false;
    if (to + w != step.result) return false;
    cur = step.result;
  }
  return cur == target;
}

LocalizedEquality localized_images_equal(const CongruenceIndex& index, const Term& s,
                                         const Term& t, std::size_t generator) {
  const std::size_t n = index.presentation().generators.size();
  if (generator >= n) throw PreconditionError("generator index out of range");
  Exponent e(n, 0);
  Term a = Term::constant(n, 1);
  const Term g = [&] {
    e[generator] = 1;
    return Term::monomial(e);
  }();
  for (unsigned k = 0;; ++k) {
    const Term as = a * s, at = a * t;
    if (!index.in_universe(as) || !index.in_universe(at)) return {false, std::nullopt};
    if (index.congruent(as, at) == Congruence::Yes) return {true, k};
    a = a * g;
  }
}

LocalizedEquality localized_images_equal(const Presentation& p, const Term& s,
                                         const Term& t, std::size_t generator,
                                         CongruenceBound bound) {
  CongruenceIndex index(p, bound);
  return localized_images_equal(index, s, t, generator);
}

FiniteSemiring reconstruct_finite_quotient(const CongruenceIndex& index,
                                           std::size_t max_classes) {
  const auto reps = index.representatives();
  if (reps.size() > max_classes)
    throw BoundedResultError(std::to_string(reps.size()) + " classes at the bound");
  const auto n = reps.size();
  auto lookup = [&](const Term& t) -> Elem {
    if (!index.in_universe(t))
      throw BoundedResultError("operation on representatives leaves the bound: " +
                               index.presentation().show(t));
    auto r = index.representative(t);
    return static_cast<Elem>(std::lower_bound(reps.begin(), reps.end(), r) - reps.begin());
  };
  std::vector<Elem> add(n * n), mul(n * n);
  std::vector<std::string> names;
  for (std::size_t a = 0; a < n; ++a) {
    names.push_back(index.presentation().show(reps[a]));
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = lookup(reps[a] + reps[b]);
      mul[a * n + b] = lookup(reps[a] * reps[b]);
    }
  }
  const std::size_t nv = index.presentation().generators.size();
  return FiniteSemiring(n, std::move(add), std::move(mul), lookup(Term(nv)),
                        lookup(Term::constant(nv, 1)), "quotient", std::move(names));
}

}  // namespace semispec
