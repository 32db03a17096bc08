// Acceptance run: one PASS/FAIL line per criterion, with timings.
// Exit status is nonzero when a criterion fails in a way not analysed in the README.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "thetagr/coordalg.hpp"
#include "thetagr/coords.hpp"
#include "thetagr/hom.hpp"
#include "thetagr/mutation.hpp"
#include "thetagr/tensor.hpp"

using namespace thetagr;

namespace {

struct Outcome {
  bool pass = true;
  bool expected_red = false;  // fails only in the analysed, structural way
  std::string detail;
  double limit = 0;  // seconds, 0 for none
};

struct Examples {
  std::vector<std::pair<std::string, EmbeddedAlgebra>> all;
  Examples() {
    for (int n : {3, 4})
      for (int k : {1, 2}) all.emplace_back("sl" + std::to_string(n + k) + "(n=" + std::to_string(n) + ")", example_sl_nk(n, k));
    all.emplace_back("sl7", example_sl_2n1(3));
    all.emplace_back("sl9", example_sl_2n1(4));
  }
};

Outcome tables() {
  Outcome o{true, false, "", 30};
  std::ostringstream os;
  for (auto [n, want] : {std::pair{3, 25u}, std::pair{4, 36u}}) {
    const auto r = verify_tables(n);
    std::size_t ok = 0;
    for (const auto& c : r.cells) ok += c.pass;
    o.pass = o.pass && r.cells.size() == want && ok == want;
    os << "n=" << n << " " << ok << "/" << r.cells.size() << " cells; ";
  }
  o.detail = os.str();
  return o;
}

Outcome homs() {
  Outcome o{true, false, "", 60};
  std::ostringstream os;
  for (int n : {3, 4}) {
    const auto r = verify_paper_homs(n);
    std::size_t ok = 0;
    for (const auto& c : r.checks) ok += c.pass();
    const std::size_t gg = hom_space(ThetaLabel::Adj, ThetaLabel::Adj, ThetaLabel::Adj, n).dim();
    o.pass = o.pass && ok == r.checks.size() && gg == 2;
    os << "n=" << n << " " << ok << "/" << r.checks.size() << " entries, dim Hom(g*g,g)=" << gg << "; ";
  }
  o.detail = os.str();
  return o;
}

Outcome schur() {
  Outcome o;
  std::size_t triples = 0, bad = 0;
  for (int n : {3, 4})
    for (auto x : kAllLabels)
      for (auto y : kAllLabels) {
        const auto tc = theta_component(x, y, n);
        for (auto z : theta_plus_labels(n)) {
          ++triples;
          bad += hom_space(x, y, z, n).dim() != tc.count(z);
        }
      }
  o.pass = bad == 0;
  o.detail = std::to_string(triples) + " (X,Y,Z) triples, " + std::to_string(bad) + " discrepancies";
  return o;
}

Outcome round_trips(const Examples& ex) {
  Outcome o{true, false, "", 300};
  std::ostringstream os;
  for (const auto& [name, e] : ex.all) {
    const auto x = extract(e);
    const auto rt = round_trip(x);
    o.pass = o.pass && rt.pass() && rt.pairs == e.dim() * e.dim();
    os << name << " " << rt.pairs - rt.mismatches << "/" << rt.pairs << " pairs; ";
    if (name == "sl7" || name == "sl9") {
      const bool full = name == "sl7";
      const auto l = assemble(x.data);
      const auto j = check_jacobi(l.sc, full ? JacobiMode::Full : JacobiMode::Sampled, 5000, kDefaultSeed);
      o.pass = o.pass && j.pass() && (full ? j.triples == 17296 : j.triples >= 5000);
      os << (full ? "full" : "sampled") << " Jacobi " << j.triples << " triples, " << j.violations << " violations";
      if (!full) os << " (seed " << j.seed << ")";
      os << "; ";
    }
  }
  o.detail = os.str();
  return o;
}

Outcome grading(const Examples& ex) {
  Outcome o;
  std::ostringstream os;
  for (const auto& [name, e] : ex.all) {
    const auto l = assemble(extract_coordinates(e));
    const auto g = check_grading(l);
    o.pass = o.pass && g.pass();
    os << name << (g.pass() ? " ok" : " FAIL") << "; ";
    if (name == "sl7") {
      const auto c = check_condition_S(l);
      o.pass = o.pass && c.holds;
      os << "S-condition on sl7 " << (c.holds ? "holds" : "fails") << "; ";
    }
  }
  o.detail = os.str();
  return o;
}

// Failures whose cause is analysed in the README: they come from the bracket of sl9 itself.
const std::map<std::string, std::size_t> kKnownSl9{
    {"gamma-antiautomorphism", 2}, {"eta-antiautomorphism", 2}, {"bimodule-B+B'", 112}};

Outcome structure(const Examples& ex) {
  Outcome o;
  bool unexpected = false;
  std::ostringstream os;
  for (const auto& [name, e] : ex.all) {
    const auto x = extract_coordinates(e);
    const auto l = assemble(x);
    const auto r = verify_section4(x, &l);
    std::size_t asserted = 0, failed = 0;
    for (const auto& c : r.checks) {
      if (!c.asserted) continue;
      ++asserted;
      if (c.pass) continue;
      ++failed;
      os << name << " " << c.name << " " << c.failures << "/" << c.checked << " [" << c.witness << "]; ";
      auto it = kKnownSl9.find(c.name);
      if (name != "sl9" || it == kKnownSl9.end() || it->second != c.failures) unexpected = true;
    }
    os << name << " " << asserted - failed << "/" << asserted << " checks; ";
    o.pass = o.pass && failed == 0;
  }
  o.expected_red = !o.pass && !unexpected;
  o.detail = os.str();
  return o;
}

Outcome mutations(const Examples& ex) {
  Outcome o;
  std::ostringstream os;
  for (const auto& [name, e] : ex.all) {
    if (name != "sl7" && name != "sl9") continue;
    const auto data = extract_coordinates(e);
    for (std::size_t count : {std::size_t{10}, std::size_t{0}}) {
      MutationOptions opt;
      opt.count = count;
      opt.jacobi = name == "sl7" ? JacobiMode::Full : JacobiMode::Sampled;
      const auto r = run_mutations(data, opt);
      std::size_t caught = 0;
      for (const auto& m : r) {
        caught += m.detected();
        if (!m.detected()) os << "undetected " << m.key.to_string() << "; ";
      }
      o.pass = o.pass && caught == r.size() && r.size() >= 10;
      os << name << (count ? " seeded" : " all nonzero") << " " << caught << "/" << r.size() << " detected; ";
    }
  }
  o.detail = os.str();
  return o;
}

}  // namespace

int main() {
  const Examples ex;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"tables", tables},
      {"hom lists", homs},
      {"Schur consistency", schur},
      {"round trip and Jacobi", [&] { return round_trips(ex); }},
      {"grading axioms", [&] { return grading(ex); }},
      {"coordinate algebra structure", [&] { return structure(ex); }},
      {"mutation sensitivity", [&] { return mutations(ex); }},
  };
  int red = 0, unexplained = 0, index = 0;
  for (const auto& [name, run] : criteria) {
    ++index;
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o = run();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string timing = std::to_string(s).substr(0, std::to_string(s).find('.') + 3) + " s";
    if (o.limit > 0) {
      timing += " (limit " + std::to_string(static_cast<int>(o.limit)) + " s)";
      if (s >= o.limit) {
        o.pass = false;
        o.expected_red = false;
      }
    }
    while (!o.detail.empty() && (o.detail.back() == ' ' || o.detail.back() == ';')) o.detail.pop_back();
    std::printf("%s criterion %d (%s): %s; %s\n", o.pass ? "PASS" : "FAIL", index, name, o.detail.c_str(), timing.c_str());
    if (!o.pass) {
      ++red;
      if (o.expected_red)
        std::printf("     criterion %d fails only in the structural cases analysed in the README\n", index);
      else
        ++unexplained;
    }
  }
  std::printf("%d/%zu criteria pass", static_cast<int>(criteria.size()) - red, criteria.size());
  if (red) std::printf(", %d red (%d unexplained)", red, unexplained);
  std::printf("\n");
  return unexplained == 0 ? 0 : 1;
}
