// Acceptance run: one PASS/FAIL line per criterion. Exit status is the number
// of failing criteria.
#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "eep/atlas.hpp"
#include "eep/canonical.hpp"
#include "eep/specializations.hpp"
#include "eep/verify.hpp"

#ifndef EEP_CLI_PATH
#error "EEP_CLI_PATH must name the command-line binary"
#endif

using namespace eep;

namespace {

struct Verdict {
  bool pass = false;
  std::string note;
};

int failures = 0;

void criterion(int id, const std::string& title, double budget_seconds, const std::function<Verdict()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    v = body();
  } catch (const std::exception& ex) {
    v = {false, std::string("exception: ") + ex.what()};
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > budget_seconds) {
    v.pass = false;
    v.note += "; over budget";
  }
  if (!v.pass) ++failures;
  std::ostringstream time;
  time << std::fixed << std::setprecision(2) << elapsed << "s/" << budget_seconds << "s";
  std::cout << (v.pass ? "PASS" : "FAIL") << "  " << id << ". " << title << "  [" << time.str() << "]  " << v.note
            << std::endl;
}

Verdict suite_verdict(const std::string& suite, const SuiteOptions& options = {}) {
  const VerifyReport report = run_suite(suite, options);
  Verdict v{report.passed(), std::to_string(report.outcomes.size() - report.failures()) + "/" +
                                 std::to_string(report.outcomes.size()) + " checks"};
  if (!report.passed()) v.note += "\n" + report.to_text();
  return v;
}

struct Run {
  int status;
  std::string out;
};

Run shell(const std::string& command) {
  Run r{-1, {}};
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  r.status = pclose(pipe);
  return r;
}

}  // namespace

int main() {

  criterion(1, "dual-definition equivalence (xi, xi_lab vs expansions, full corpus)", 30,
            [] { return suite_verdict("expansion"); });

  criterion(2, "confluence: 50 random un-memoised orders per corpus graph", 60,
            [] { return suite_verdict("confluence"); });

  criterion(3, "non-confluence on the witness path; z=0 identity at 5 points", 1, [] {
    const VerifyReport report = nonconfluence_witness();
    const auto& p = report.outcomes.front().detail["params"];
    Verdict v{report.passed() && report.outcomes.size() == 8,
              "w=2,z=1: " + p["e1_first"].get<std::string>() + " vs " + p["e2_first"].get<std::string>()};
    if (!v.pass) v.note += "\n" + report.to_text();
    return v;
  });

  criterion(4, "specialisation identities against independent oracles", 120,
            [] { return suite_verdict("specializations"); });

  criterion(5, "derived vertex-cover / independence substitutions vs brute force", 30, [] {
    const VerifyReport report = run_suite("derived");
    std::size_t loop_free = 0, loop_free_pass = 0;
    const auto entries = corpus();
    std::set<std::string> looped;
    for (const auto& e : entries)
      if (e.graph.loop_count() > 0) looped.insert(e.name);
    for (const auto& o : report.outcomes) {
      if (looped.count(o.graph)) continue;
      ++loop_free;
      loop_free_pass += o.pass;
    }
    Verdict v{loop_free > 0 && loop_free == loop_free_pass,
              std::to_string(loop_free_pass) + "/" + std::to_string(loop_free) + " loop-free checks; " +
                  std::to_string(report.outcomes.size() - report.failures()) + "/" +
                  std::to_string(report.outcomes.size()) + " incl. looped graphs"};
    if (!v.pass) v.note += "\n" + report.to_text();
    return v;
  });

  criterion(6, "labeled sufficient conditions and mixed two-component construction", 60,
            [] { return suite_verdict("labeled"); });

  criterion(7, "xi-equivalent non-isomorphic trees, n <= 12", 600, [] {
    const CollisionReport report = find_xi_collisions(tree_family(12), 1);
    if (report.groups.empty()) {
      return Verdict{true, "frontier: no collisions among all " + std::to_string(report.examined) +
                               " free trees with n <= 12"};
    }
    bool ok = true;
    std::size_t smallest = 99, pairs = 0;
    for (const CollisionGroup& g : report.groups) {
      smallest = std::min(smallest, g.members.front().vertex_count());
      std::set<std::string> keys;
      for (std::size_t a = 0; a < g.members.size(); ++a) {
        keys.insert(canonical_key(g.members[a]));
        for (std::size_t b = a + 1; b < g.members.size(); ++b) {
          ++pairs;
          const Multigraph& ga = g.members[a];
          const Multigraph& gb = g.members[b];
          const MPoly xa = xi(ga), xb = xi(gb);
          ok = ok && xa == xb;
          ok = ok && tutte(ga) == tutte(gb) && dpt(ga) == dpt(gb);
          ok = ok && noble_welsh_u(ga) != noble_welsh_u(gb);
        }
      }
      ok = ok && keys.size() == g.members.size();
    }
    ok = ok && report.consistent();
    return Verdict{ok, std::to_string(report.groups.size()) + " groups (" + std::to_string(pairs) +
                           " pairs) among " + std::to_string(report.examined) + " trees; smallest n = " +
                           std::to_string(smallest) + "; U separates all, T and P agree"};
  });

  criterion(8, "boundary laws on the corpus", 30, [] { return suite_verdict("boundary"); });

  criterion(9, "CLI output byte-identical across parallelism degrees", 300, [] {
    const std::string cli = EEP_CLI_PATH;
    const std::vector<std::string> commands = {
        "compute -g '5 7;0 1;1 2;2 3;3 4;4 0;0 2;1 3'",
        "compute -g '5 7;0 1;1 2;2 3;3 4;4 0;0 2;1 3' --method expansion --format structured",
        "compute -i labeled-edge-list -g '4 4;0 1 a;1 2 b;2 3 a;3 0 b' --method expansion",
        "specialize --poly tutte -i graph6 -g 'D~{'",
        "specialize --poly zaslavsky -g '3 3;0 1;1 2;0 2'",
        "eval -g '4 5;0 1;1 2;2 3;3 0;0 2' -x 1/2 -y -3 -z 7",
        "verify --suite expansion --max-vertices 4 --format structured",
        "verify --suite confluence --max-vertices 4 --trials 10",
        "atlas --family trees --max-n 11",
        "atlas --family trees --max-n 10 --search oq2 --format structured",
        "atlas --family graphs --n 5 --m-max 6 --search oq2"};
    std::size_t same = 0;
    std::string note;
    for (const auto& c : commands) {
      const Run a = shell("'" + cli + "' " + c + " --threads 1 2>&1");
      const Run b = shell("EEP_THREADS=4 '" + cli + "' " + c + " 2>&1");
      if (a.status == 0 && b.status == 0 && a.out == b.out && !a.out.empty()) {
        ++same;
      } else {
        note += "\n  differs: " + c;
      }
    }
    return Verdict{same == commands.size(), std::to_string(same) + "/" + std::to_string(commands.size()) +
                                                " commands identical at 1 vs 4 threads" + note};
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << std::endl;
  return failures;
}
