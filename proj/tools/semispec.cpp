// semispec: command-line front-end for finite semiring spectra, sheaves and
// valuations.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "semispec/corpus.hpp"
#include "semispec/errors.hpp"
#include "semispec/kernel.hpp"
#include "semispec/localize.hpp"
#include "semispec/presented.hpp"
#include "semispec/sheaf.hpp"
#include "semispec/spectra.hpp"
#include "semispec/valuation.hpp"
#include "semispec/verify.hpp"

using namespace semispec;
using nlohmann::json;

namespace {

enum Exit : int {
  kPass = 0,
  kFail = 1,
  kParse = 2,
  kResource = 3,
  kPrecondition = 4,
  kUnsupported = 5,
  kStructural = 6,
  kUsage = 64,
};

SemiringRef resolve(const std::string& name) {
  if (std::filesystem::exists(name))
    return std::make_shared<const FiniteSemiring>(load_semiring(name));
  return corpus_get(name);
}

Elem parse_element(const FiniteSemiring& a, const std::string& token) {
  for (Elem x = 0; x < a.size(); ++x)
    if (a.name(x) == token) return x;
  try {
    std::size_t used = 0;
    const unsigned long v = std::stoul(token, &used);
    if (used == token.size() && v < a.size()) return static_cast<Elem>(v);
  } catch (const std::exception&) {
  }
  throw ParseError("no element '" + token + "' in " + a.label());
}

std::string show_set(const FiniteSemiring& a, const ElementSet& s) {
  std::string out = "{";
  bool first = true;
  for (auto x : s.members()) {
    if (!first) out += ",";
    first = false;
    out += a.name(static_cast<Elem>(x));
  }
  return out + "}";
}

SpectrumKind parse_kind(const std::string& k) {
  if (k == "spec") return SpectrumKind::Spec;
  if (k == "sp") return SpectrumKind::Sp;
  throw ParseError("kind must be spec or sp, got '" + k + "'");
}

ScalarAlgebra parse_scalars(const FiniteSemiring& a, const std::string& r) {
  if (r == "bool") return bool_scalars(a);
  if (r == "nat") return prime_subsemiring(a);
  throw ParseError("scalars must be bool or nat, got '" + r + "'");
}

int cmd_load(const std::string& path, bool quotient) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::exception& e) {
    throw ParseError(path + ": " + e.what());
  }
  if (doc.contains("gens")) {
    const auto p = presentation_from_json(doc);
    std::cout << "presentation: " << p.generators.size() << " generators, "
              << p.relations.size() << " relations" << (p.idempotent ? ", idempotent" : "")
              << "\n";
    for (const auto& [l, r] : p.relations) std::cout << "  " << p.show(l) << " ~ " << p.show(r) << "\n";
    if (!quotient) return kPass;
    const CongruenceIndex index(p, congruence_bound_from_env());
    const auto q = reconstruct_finite_quotient(index);
    std::cout << "finite quotient: " << q.size() << " classes\n";
    std::cout << semiring_to_json(q).dump(2) << "\n";
    return kPass;
  }
  const auto a = semiring_from_json(doc);
  const auto bad = verify_axioms(a);
  std::cout << "semiring " << a.label() << ": " << a.size() << " elements, "
            << (is_idempotent(a) ? "idempotent" : "not idempotent") << ", "
            << (bad.empty() ? "axioms hold" : std::to_string(bad.size()) + " axiom violations")
            << "\n";
  return bad.empty() ? kPass : kFail;
}

int cmd_axioms(const std::string& name) {
  const auto a = resolve(name);
  const auto bad = verify_axioms(*a);
  for (const auto& v : bad)
    std::cout << v.law << ": " << a->name(v.witness[0]) << " " << a->name(v.witness[1]) << " "
              << a->name(v.witness[2]) << "\n";
  std::cout << a->label() << ": " << (bad.empty() ? "all axioms hold" : "violations found") << "\n";
  return bad.empty() ? kPass : kFail;
}

int cmd_points(const std::string& name, SpectrumKind kind, std::size_t limit) {
  const auto a = resolve(name);
  const auto space = enumerate_spectrum(a, kind, limit);
  for (const auto& p : space.points()) std::cout << show_set(*a, p) << "\n";
  return kPass;
}

int cmd_topology(const std::string& name, SpectrumKind kind, bool dot, std::size_t limit) {
  const auto a = resolve(name);
  const auto space = enumerate_spectrum(a, kind, limit);
  if (dot)
    std::cout << to_dot(space);
  else
    std::cout << to_json(space).dump(2) << "\n";
  return kPass;
}

int cmd_sheaf(const std::string& name, const std::string& cover_text, SpectrumKind kind,
              std::size_t limit) {
  const auto a = resolve(name);
  std::vector<Elem> cover;
  std::stringstream ss(cover_text);
  for (std::string tok; std::getline(ss, tok, ',');)
    if (!tok.empty()) cover.push_back(parse_element(*a, tok));
  const LocalizationPresheaf f(enumerate_spectrum(a, kind, limit));
  const auto eq = equalizer_sections(f, cover, a->one());
  json doc = {{"semiring", a->label()},
              {"kind", to_string(kind)},
              {"sections", eq.semiring->size()},
              {"canonical_iso", eq.canonical_iso},
              {"hard", is_hard(*eq.semiring)}};
  std::cout << doc.dump(2) << "\n";
  return eq.canonical_iso ? kPass : kFail;
}

int cmd_harden(const std::string& name) {
  const auto a = resolve(name);
  const auto h = harden(a);
  json doc = semiring_to_json(*h.semiring());
  doc["chi"] = h.phi();
  doc["hard"] = is_hard(*h.semiring());
  std::cout << doc.dump(2) << "\n";
  return kPass;
}

int cmd_mra(const std::string& name, const std::string& scalars, std::size_t limit) {
  const auto a = resolve(name);
  const auto l = build_mra(a, parse_scalars(*a, scalars));
  std::cout << l.semiring->label() << ": " << l.modules.size() << " submodules\n";
  for (Elem m = 0; m < l.modules.size(); ++m) std::cout << "  " << l.semiring->name(m) << "\n";
  std::cout << "universal valuation:";
  for (Elem x = 0; x < a->size(); ++x)
    std::cout << " " << a->name(x) << "->" << l.semiring->name(l.universal[x]);
  std::cout << "\n";
  const auto h = vstar_homeo_check(l, limit);
  std::cout << "Sp M_R(A) -> Spec A: " << h.points << " points, "
            << (h.ok() ? "homeomorphism" : "NOT a homeomorphism") << "\n";
  return h.ok() ? kPass : kFail;
}

int cmd_verify(const std::string& id, bool as_json) {
  VerifyConfig config;
  config.spectrum_limit = spectrum_limit_from_env(config.spectrum_limit);
  bool all_pass = true, found = false;
  json out = json::array();
  for (const auto& e : verify_registry()) {
    if (id != "all" && id != e.key) continue;
    found = true;
    const auto r = e.run(config);
    all_pass = all_pass && r.pass;
    if (as_json) {
      out.push_back(r.to_json());
    } else {
      std::cout << e.key << ": " << (r.pass ? "pass" : "FAIL") << "\n";
      for (const auto& d : r.details) std::cout << "  " << d << "\n";
    }
  }
  if (!found) throw ParseError("unknown verify id '" + id + "'");
  if (as_json) std::cout << out.dump(2) << "\n";
  return all_pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Spectra, sheaves and valuations of finite semirings.\n"
      "NAME is a built-in instance (see `semispec list`) or a JSON table file.\n"
      "Environment: SEMISPEC_SPECTRUM_LIMIT (largest carrier enumerated\n"
      "subset-wise, default 16), SEMISPEC_CONGRUENCE_BOUND (\"N\" or \"D,C\",\n"
      "degree and coefficient bound of presented congruences, default 6).\n"
      "Exit codes: 0 pass, 1 fail, 2 parse, 3 resource, 4 precondition,\n"
      "5 unsupported, 6 structural, 64 usage."};
  app.require_subcommand(1);
  std::size_t limit = spectrum_limit_from_env();

  std::string name, path, kind = "spec", cover, scalars = "bool", id;
  bool dot = false, as_json = false;

  app.add_subcommand("list", "list built-in instances");
  auto* load = app.add_subcommand("load", "load and check a JSON semiring or presentation");
  load->add_option("path", path)->required();
  bool quotient = false;
  load->add_flag("--quotient", quotient,
                 "tabulate a presentation's quotient within SEMISPEC_CONGRUENCE_BOUND");
  auto* axioms = app.add_subcommand("axioms", "check the semiring laws");
  axioms->add_option("name", name)->required();
  auto* spec = app.add_subcommand("spec", "list the prime ideals");
  spec->add_option("name", name)->required();
  auto* sp = app.add_subcommand("sp", "list the prime kernels");
  sp->add_option("name", name)->required();
  auto* topo = app.add_subcommand("topology", "export the spectrum as DOT or JSON");
  topo->add_option("name", name)->required();
  topo->add_option("--kind", kind, "spec or sp")->capture_default_str();
  auto* fmt = topo->add_option_group("format");
  fmt->add_flag("--dot", dot);
  fmt->add_flag("--json", as_json);
  fmt->require_option(1);
  auto* sheaf = app.add_subcommand("sheaf", "sections over a cover of the whole spectrum");
  sheaf->add_option("name", name)->required();
  sheaf->add_option("--cover", cover, "comma-separated elements")->required();
  sheaf->add_option("--kind", kind, "spec or sp")->capture_default_str();
  auto* hard = app.add_subcommand("harden", "the hardening as a JSON table");
  hard->add_option("name", name)->required();
  auto* mra = app.add_subcommand("mra", "lattice of subsemimodules and its spectrum");
  mra->add_option("name", name)->required();
  mra->add_option("--scalars", scalars, "bool or nat")->capture_default_str();
  auto* verify = app.add_subcommand("verify", "run a named check, or all");
  verify->add_option("id", id, "spec-nat, poly-ksp, bx-hardening, sheaf-lemma, ktt, "
                                "sp-injectivity, radical, universal-valuation, hardness, "
                                "properties, all")
      ->required();
  verify->add_flag("--json", as_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (app.got_subcommand("list")) {
      for (const auto& n : corpus_names()) std::cout << n << "\n";
      return kPass;
    }
    if (app.got_subcommand(load)) return cmd_load(path, quotient);
    if (app.got_subcommand(axioms)) return cmd_axioms(name);
    if (app.got_subcommand(spec)) return cmd_points(name, SpectrumKind::Spec, limit);
    if (app.got_subcommand(sp)) return cmd_points(name, SpectrumKind::Sp, limit);
    if (app.got_subcommand(topo)) return cmd_topology(name, parse_kind(kind), dot, limit);
    if (app.got_subcommand(sheaf)) return cmd_sheaf(name, cover, parse_kind(kind), limit);
    if (app.got_subcommand(hard)) return cmd_harden(name);
    if (app.got_subcommand(mra)) return cmd_mra(name, scalars, limit);
    if (app.got_subcommand(verify)) return cmd_verify(id, as_json);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kResource;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const UnsupportedError& e) {
    std::cerr << "unsupported: " << e.what() << "\n";
    return kUnsupported;
  } catch (const BoundedResultError& e) {
    std::cerr << "bounded result: " << e.what() << "\n";
    return kStructural;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kStructural;
  }
  return kUsage;
}
