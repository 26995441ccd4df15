// One line per acceptance criterion. Exit status is 0 when every criterion
// passes, or fails only through the known discrepancies listed below.
#include <chrono>
#include <cstdio>
#include <set>

#include "veritool/veritool.hpp"

using namespace vt;

namespace {

// Printed rows that the computation contradicts; each is analysed in the notes.
const std::set<std::string> kKnownDiscrepancies = {
    "formulas.products.S^11 V_i", "formulas.products.S^12 V_i", "formulas.products.S^13 V_i",
    "formulas.products.S^14 V_i", "formulas.nrows.H0(Omega^3(6))",
};

struct Outcome {
  int pass = 0, fail = 0, flagged = 0;
  bool unexpected = false;
};

void line(Outcome& o, int n, Status s, const std::string& what, double secs, double limit) {
  if (s == Status::Pass && limit > 0 && secs > limit) {
    s = Status::Fail;
    o.unexpected = true;
  }
  std::string st = s == Status::Pass ? "PASS" : s == Status::Fail ? "FAIL" : "FLAGGED";
  (s == Status::Pass ? o.pass : s == Status::Fail ? o.fail : o.flagged)++;
  std::printf("criterion %2d: %-7s %s [%.1f s", n, st.c_str(), what.c_str(), secs);
  if (limit > 0) std::printf(", limit %.0f s", limit);
  std::printf("]\n");
  std::fflush(stdout);
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void criterion(Outcome& o, int n, Group g, const Config& cfg, double limit, const std::string& label) {
  auto t0 = std::chrono::steady_clock::now();
  auto checks = run_group(g, cfg);
  double secs = since(t0);
  size_t pass = 0;
  std::vector<const CheckResult*> failed, flagged;
  for (auto& c : checks) {
    if (c.status == Status::Pass) ++pass;
    if (c.status == Status::Fail) failed.push_back(&c);
    if (c.status == Status::Flagged) flagged.push_back(&c);
  }
  std::string what = label + ": " + std::to_string(pass) + "/" + std::to_string(checks.size()) + " checks pass";
  Status s = Status::Pass;
  if (!failed.empty()) {
    s = Status::Fail;
    what += "; failing:";
    for (auto* c : failed) {
      what += " " + c->id;
      if (!kKnownDiscrepancies.count(c->id)) o.unexpected = true;
    }
    bool all_known = true;
    for (auto* c : failed) all_known = all_known && kKnownDiscrepancies.count(c->id);
    if (all_known) what += " (printed values contradicted by the computation)";
  } else if (!flagged.empty()) {
    s = Status::Flagged;
    what += "; flagged: " + flagged.front()->details;
  } else if (checks.size() == 1) {
    what += "; " + checks.front().details;
  }
  line(o, n, s, what, secs, limit);
  for (auto* c : failed) std::printf("    %s: %s\n", c->id.c_str(), c->details.c_str());
}

}  // namespace

int main() {
  Config cfg;
  cfg.betti_budget_s = 900;
  Outcome o;
  criterion(o, 1, Group::Group, cfg, 10, "group law and normalizer");
  criterion(o, 2, Group::Characters, cfg, 10, "character tables");
  criterion(o, 3, Group::Formulas, cfg, 60, "appendix formulas");
  criterion(o, 4, Group::BMatrices, cfg, 10, "B-matrices and rank-6 probe");
  criterion(o, 5, Group::Equivalence, cfg, 0, "composition vs Delta criterion");
  criterion(o, 6, Group::JIdeal, cfg, 30, "the ideal J");
  criterion(o, 7, Group::Surfaces, cfg, 300, "surface pipeline at 20 seeded t");
  criterion(o, 8, Group::Betti, cfg, 0, "surface Betti table over F31");
  criterion(o, 9, Group::Klein, cfg, 30, "Klein quartic suite");

  auto t0 = std::chrono::steady_clock::now();
  std::string a = run_suite("all", cfg).json();
  std::string b = run_suite("all", cfg).json();
  bool same = a == b;
  if (!same) o.unexpected = true;
  line(o, 10, same ? Status::Pass : Status::Fail,
       "determinism: two runs of verify all --seed 42 give " + std::string(same ? "identical" : "different") +
           " JSON (" + std::to_string(a.size()) + " bytes)",
       since(t0), 0);

  std::printf("summary: %d pass, %d fail, %d flagged\n", o.pass, o.fail, o.flagged);
  return o.unexpected ? 1 : 0;
}
