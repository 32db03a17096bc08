#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "thetagr/coordalg.hpp"
#include "thetagr/coords.hpp"
#include "thetagr/hom.hpp"
#include "thetagr/mutation.hpp"
#include "thetagr/tensor.hpp"

using json = nlohmann::ordered_json;
using namespace thetagr;

namespace {

constexpr int kPass = 0, kFail = 1, kInputError = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Entry {
  std::string name;
  bool pass = true;
  bool counted = true;  // reported-only entries do not affect the exit code
  std::string witness;
  json detail = json::object();

  Entry(std::string n, bool p = true, bool c = true, std::string w = {}, json d = json::object())
      : name(std::move(n)), pass(p), counted(c), witness(std::move(w)), detail(std::move(d)) {}
};

struct Report {
  std::string command;
  int n = 0;
  std::optional<std::uint64_t> seed;
  std::vector<Entry> entries;
  double seconds = 0;

  bool pass() const {
    for (const auto& e : entries)
      if (e.counted && !e.pass) return false;
    return true;
  }

  json to_json(bool timing) const {
    json j;
    j["command"] = command;
    j["n"] = n;
    if (seed) j["seed"] = *seed;
    json arr = json::array();
    for (const auto& e : entries) {
      json x;
      x["name"] = e.name;
      x["pass"] = e.pass;
      if (!e.counted) x["reported_only"] = true;
      if (!e.witness.empty()) x["witness"] = e.witness;
      for (auto it = e.detail.begin(); it != e.detail.end(); ++it) x[it.key()] = it.value();
      arr.push_back(std::move(x));
    }
    j["checks"] = std::move(arr);
    j["pass"] = pass();
    if (timing) j["seconds"] = seconds;
    return j;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << command << "\n";
    for (const auto& e : entries) {
      os << (!e.counted ? "note " : (e.pass ? "PASS " : "FAIL ")) << e.name;
      if (!e.witness.empty()) os << "  (" << e.witness << ")";
      os << "\n";
    }
    std::size_t failed = 0;
    for (const auto& e : entries) failed += e.counted && !e.pass;
    os << (failed ? "FAIL" : "PASS") << ": " << entries.size() - failed << "/" << entries.size() << " checks";
    if (seed) os << ", seed " << *seed;
    os << ", " << seconds << " s\n";
    return os.str();
  }
};

struct Common {
  int n = 0;
  std::string format = "text";
  std::string out;
  std::string golden;
  bool timing = false;
};

void require_n(int n) {
  if (n != 3 && n != 4) throw InputError("n must be 3 or 4");
}

json read_json(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot read " + path);
  try {
    return json::parse(f);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

// Every check of a stored report must reappear unchanged, and nothing may be added.
void compare_golden(Report& r, const std::string& path) {
  const json g = read_json(path);
  if (!g.is_object() || !g.contains("checks") || !g["checks"].is_array()) throw InputError("golden file has no checks array");
  const json cur = r.to_json(false)["checks"];
  std::map<std::string, json> now;
  for (const auto& c : cur) now[c["name"].get<std::string>()] = c;
  std::set<std::string> seen;
  std::vector<Entry> extra;
  for (const auto& c : g["checks"]) {
    const std::string name = c.value("name", std::string{});
    seen.insert(name);
    auto it = now.find(name);
    if (it == now.end())
      extra.push_back({"golden/" + name, false, true, "missing from this run"});
    else if (it->second != c)
      extra.push_back({"golden/" + name, false, true, "differs from " + path});
  }
  for (const auto& [name, c] : now)
    if (!seen.count(name)) extra.push_back({"golden/" + name, false, true, "not in " + path});
  if (extra.empty()) extra.push_back({"golden", true, true, "", json{{"file", path}, {"checks", seen.size()}}});
  for (auto& e : extra) r.entries.push_back(std::move(e));
}

int emit(const Report& r, const Common& c) {
  const std::string text = c.format == "json" ? r.to_json(c.timing).dump(2) + "\n" : r.to_text();
  if (c.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(c.out);
    if (!f) throw InputError("cannot write " + c.out);
    f << text;
  }
  return r.pass() ? kPass : kFail;
}

std::string join(const std::vector<std::string>& v, const char* sep = ",") {
  std::string s;
  for (const auto& x : v) s += (s.empty() ? "" : sep) + x;
  return s;
}

// --- tables / homs ------------------------------------------------------------

void run_tables(Report& r) {
  for (const auto& c : verify_tables(r.n).cells) {
    Entry e{std::string(label_name(c.row)) + " x " + std::string(label_name(c.col)), c.pass};
    e.detail["expected"] = c.expected.to_string(r.n);
    e.detail["computed"] = c.computed.to_string(r.n);
    if (!c.pass) e.witness = "computed " + c.computed.to_string(r.n);
    r.entries.push_back(std::move(e));
  }
}

void run_homs(Report& r) {
  for (const auto& c : verify_paper_homs(r.n).checks) {
    Entry e{hom_name(*c.entry), c.pass()};
    e.detail["formulas"] = c.entry->formulas.size();
    e.detail["dim"] = c.dim_computed;
    if (!c.entry->note.empty()) e.detail["note"] = c.entry->note;
    std::vector<std::string> bad;
    if (!c.equivariant) bad.push_back("not equivariant");
    if (!c.nonzero) bad.push_back("zero");
    if (!c.in_span) bad.push_back("outside the Hom space");
    if (!c.independent) bad.push_back("dependent");
    if (c.dim_expected != c.dim_computed)
      bad.push_back("dim " + std::to_string(c.dim_computed) + " != " + std::to_string(c.dim_expected));
    e.witness = join(bad, "; ");
    r.entries.push_back(std::move(e));
  }
}

// --- example --------------------------------------------------------------------

const std::vector<std::string> kChecks{"grading", "jacobi", "condition", "coords", "roundtrip", "section4", "mutation"};

struct ExampleArgs {
  std::string name = "sl2n+1";
  int k = 1;
  std::string checks = "all";
  std::string mode = "full";
  std::size_t samples = 5000;
  std::uint64_t seed = kDefaultSeed;
  std::size_t mutations = 10;
};

std::vector<std::string> parse_checks(const std::string& s) {
  if (s == "all") return kChecks;
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string t; std::getline(ss, t, ',');) {
    if (std::find(kChecks.begin(), kChecks.end(), t) == kChecks.end()) throw InputError("unknown check '" + t + "'");
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  }
  if (out.empty()) throw InputError("no checks requested");
  return out;
}

EmbeddedAlgebra make_example(const std::string& name, int n, int k) {
  require_n(n);
  if (name == "sl2n+1") return example_sl_2n1(n);
  if (name == "slnk") {
    if (k < 1) throw InputError("k must be positive");
    return example_sl_nk(n, k);
  }
  throw InputError("unknown example '" + name + "' (expected slnk or sl2n+1)");
}

std::string pair_name(const GradedLieAlgebra& l, std::size_t i, std::size_t j) {
  return l.basis_name(i) + ", " + l.basis_name(j);
}

void run_example(Report& r, const ExampleArgs& a) {
  const auto checks = parse_checks(a.checks);
  if (a.mode != "full" && a.mode != "sampled") throw InputError("mode must be full or sampled");
  const EmbeddedAlgebra ex = make_example(a.name, r.n, a.k);

  std::optional<Extraction> x;
  std::optional<GradedLieAlgebra> l;
  auto extraction = [&]() -> const Extraction& {
    if (!x) x = extract(ex);
    return *x;
  };
  auto algebra = [&]() -> const GradedLieAlgebra& {
    if (!l) l = assemble(extraction().data);
    return *l;
  };

  for (const auto& c : checks) {
    if (c == "coords") {
      Entry e{"coords"};
      try {
        json dims = json::object();
        for (auto s : spaces_for(r.n)) dims[std::string(space_name(s))] = extraction().data.dim(s);
        e.detail["dims"] = std::move(dims);
      } catch (const ExtractionError& err) {
        e.pass = false;
        e.witness = err.what();
      }
      r.entries.push_back(std::move(e));
    } else if (c == "roundtrip") {
      const auto rt = round_trip(extraction());
      Entry e{"roundtrip", rt.pass()};
      e.detail["pairs"] = rt.pairs;
      e.detail["mismatches"] = rt.mismatches;
      if (rt.witness) e.witness = "[" + std::to_string(rt.witness->first) + ", " + std::to_string(rt.witness->second) + "]";
      r.entries.push_back(std::move(e));
    } else if (c == "grading") {
      const auto g = check_grading(algebra());
      r.entries.push_back({"grading/gamma1", g.gamma1, true, g.gamma1 ? "" : g.detail});
      Entry e2{"grading/gamma2", g.gamma2};
      e2.detail["weights"] = g.weights.size();
      std::vector<std::string> outside;
      for (const auto& w : g.outside_theta) outside.push_back(w.to_string());
      e2.witness = join(outside);
      r.entries.push_back(std::move(e2));
      Entry e3{"grading/gamma3", g.gamma3};
      e3.detail["zero_dim"] = g.zero_dim;
      e3.detail["generated_zero_dim"] = g.generated_zero_dim;
      r.entries.push_back(std::move(e3));
    } else if (c == "jacobi") {
      const JacobiMode mode = a.mode == "full" ? JacobiMode::Full : JacobiMode::Sampled;
      if (mode == JacobiMode::Sampled) r.seed = a.seed;
      const auto j = check_jacobi(algebra().sc, mode, a.samples, a.seed);
      Entry e{"jacobi", j.pass()};
      e.detail["mode"] = a.mode;
      e.detail["triples"] = j.triples;
      e.detail["violations"] = j.violations;
      if (!j.antisymmetric) e.witness = "not antisymmetric";
      if (j.witness) {
        const auto& w = *j.witness;
        e.witness = algebra().basis_name(w[0]) + ", " + pair_name(algebra(), w[1], w[2]);
      }
      r.entries.push_back(std::move(e));
    } else if (c == "condition") {
      if (r.n != 3) {
        // The S-condition concerns n = 3 only.
        r.entries.push_back({"condition", true, false, "", json{{"skipped", true}}});
        continue;
      }
      const auto cr = check_condition_S(algebra());
      Entry e{"condition", cr.holds};
      if (cr.witness) e.witness = pair_name(algebra(), cr.witness->first, cr.witness->second);
      r.entries.push_back(std::move(e));
    } else if (c == "section4") {
      Section4Report s4;
      try {
        s4 = verify_section4(extraction().data, &algebra());
      } catch (const ConditionViolated& err) {
        r.entries.push_back({"section4", false, true, err.what()});
        continue;
      }
      for (const auto& ch : s4.checks) {
        Entry e{"section4/" + ch.name, ch.pass, ch.asserted, ch.witness};
        e.detail["checked"] = ch.checked;
        e.detail["failures"] = ch.failures;
        r.entries.push_back(std::move(e));
      }
      for (const auto& d : s4.table_deviations) r.entries.push_back({"section4/table-deviation " + d, true, false});
    } else if (c == "mutation") {
      MutationOptions o;
      o.count = a.mutations;
      o.seed = a.seed;
      o.jacobi = a.mode == "full" ? JacobiMode::Full : JacobiMode::Sampled;
      o.samples = a.samples;
      r.seed = a.seed;
      for (const auto& m : run_mutations(extraction().data, o)) {
        Entry e{"mutation/" + m.key.to_string(), m.detected()};
        e.detail["jacobi_violations"] = m.jacobi_violations;
        e.detail["section4_failures"] = m.new_failures;
        if (!m.detected()) e.witness = "sign flip not detected";
        r.entries.push_back(std::move(e));
      }
    }
  }
}

// --- modules as JSON ----------------------------------------------------------------

Rational parse_entry(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw InputError("matrix entries must be integers or rational strings");
}

GModule read_module(const std::string& path) {
  const json j = read_json(path);
  if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer() || !j.contains("actions") || !j["actions"].is_array())
    throw InputError("expected an object with integer \"n\" and array \"actions\"");
  const int n = j["n"].get<int>();
  require_n(n);
  const auto& acts = j["actions"];
  if (acts.size() != static_cast<std::size_t>(n * n - 1))
    throw InputError("expected " + std::to_string(n * n - 1) + " action matrices");
  const std::size_t dim = acts.at(0).size();
  std::vector<Matrix> ms;
  try {
    for (const auto& a : acts) {
      if (!a.is_array() || a.size() != dim) throw InputError("action matrices must be square of equal size");
      Matrix m(dim, dim);
      for (std::size_t r = 0; r < dim; ++r) {
        if (!a[r].is_array() || a[r].size() != dim) throw InputError("action matrices must be square of equal size");
        for (std::size_t c = 0; c < dim; ++c) m(r, c) = parse_entry(a[r][c]);
      }
      ms.push_back(std::move(m));
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  GModule m = make_module(n, std::move(ms), j.value("label", std::string{}));
  if (!m.is_representation()) throw InputError("the action matrices do not define a representation");
  return m;
}

json module_json(const GModule& m) {
  json j;
  j["n"] = m.n;
  if (!m.label.empty()) j["label"] = m.label;
  json acts = json::array();
  for (const auto& a : m.actions) {
    json rows = json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
      json row = json::array();
      for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(to_string(a(r, c)));
      rows.push_back(std::move(row));
    }
    acts.push_back(std::move(rows));
  }
  j["actions"] = std::move(acts);
  return j;
}

void run_decompose(Report& r, const GModule& m) {
  const auto d = isotypic_decompose(m);
  for (const auto& [w, p] : d.parts) {
    Entry e{std::string(label_name(p.label))};
    e.detail["multiplicity"] = p.multiplicity;
    e.detail["highest_weight"] = w.to_string();
    e.detail["component_dim"] = p.component.dim();
    r.entries.push_back(std::move(e));
  }
  Entry rem{"remainder", d.remainder.dim() == 0};
  rem.detail["dim"] = d.remainder.dim();
  r.entries.push_back(std::move(rem));
}

std::string echo(int argc, char** argv) {
  std::vector<std::string> v;
  for (int i = 1; i < argc; ++i) v.emplace_back(argv[i]);
  return join(v, " ");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites for Theta_n-graded Lie algebras"};
  app.require_subcommand(1);
  Common common;
  auto add_common = [&](CLI::App* s, bool with_n = true) {
    if (with_n) s->add_option("--n", common.n, "rank parameter (3 or 4)")->required();
    s->add_option("--format", common.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    s->add_option("--out", common.out, "write the report to FILE");
    s->add_flag("--timing", common.timing, "include wall time in JSON output");
    s->add_option("--golden", common.golden, "compare the checks with a stored JSON report");
  };

  auto* tables = app.add_subcommand("tables", "tensor product tables");
  add_common(tables);
  auto* homs = app.add_subcommand("homs", "listed equivariant maps");
  add_common(homs);

  ExampleArgs ex;
  auto* example = app.add_subcommand("example", "build an example and run checks on it");
  add_common(example);
  example->add_option("--name", ex.name, "slnk or sl2n+1");
  example->add_option("--k", ex.k, "k for slnk");
  example->add_option("--check", ex.checks, "comma list of grading,jacobi,condition,coords,roundtrip,section4,mutation or all");
  example->add_option("--mode", ex.mode, "Jacobi mode: full or sampled");
  example->add_option("--samples", ex.samples, "triples for sampled Jacobi");
  example->add_option("--seed", ex.seed, "seed for sampling and mutations");
  example->add_option("--mutations", ex.mutations, "number of sign mutations (0 = every nonzero product)");

  std::string input;
  auto* decompose = app.add_subcommand("decompose", "isotypic decomposition of a module given as JSON");
  decompose->add_option("file", input, "module JSON")->required();
  add_common(decompose, false);

  std::string mod_catalog;
  auto* module = app.add_subcommand("module", "write a catalog module or an example restriction as JSON");
  module->add_option("--n", common.n, "rank parameter (3 or 4)")->required();
  module->add_option("--catalog", mod_catalog, "catalog label, e.g. V or S'");
  module->add_option("--name", ex.name, "example whose restriction to write");
  module->add_option("--k", ex.k, "k for slnk");
  module->add_option("--out", common.out, "write to FILE");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }

  Report r;
  r.command = echo(argc, argv);
  r.n = common.n;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (*module) {
      require_n(common.n);
      GModule m = mod_catalog.empty() ? make_example(ex.name, common.n, ex.k).restriction() : catalog(common.n, mod_catalog);
      const std::string text = module_json(m).dump() + "\n";
      if (common.out.empty()) {
        std::cout << text;
      } else {
        std::ofstream f(common.out);
        if (!f) throw InputError("cannot write " + common.out);
        f << text;
      }
      return kPass;
    }
    if (*decompose) {
      const GModule m = read_module(input);
      r.n = m.n;
      try {
        run_decompose(r, m);
      } catch (const NonThetaConstituent& e) {
        r.entries.push_back({"decompose", false, true, e.what()});
      }
    } else {
      require_n(common.n);
      if (*tables) run_tables(r);
      if (*homs) run_homs(r);
      if (*example) run_example(r, ex);
    }
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  try {
    if (!common.golden.empty()) compare_golden(r, common.golden);
    return emit(r, common);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
