#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "veritool/veritool.hpp"

namespace {

struct Common {
  uint64_t seed = 42;
  std::string coeff;
  int budget_degree = 8;
  std::string json;
  bool quiet = false;
  bool timings = false;
  std::string t;

  void attach(CLI::App* a) {
    a->add_option("--seed", seed, "PRNG seed")->capture_default_str();
    a->add_option("--coeff", coeff, "q or fp:<p>");
    a->add_option("--budget-degree", budget_degree, "degree cap for Groebner bases")->capture_default_str();
    a->add_option("--json", json, "write the JSON report here");
    a->add_flag("--quiet", quiet, "no text output");
    a->add_flag("--timings", timings, "include per-check milliseconds in the report");
  }
  vt::Config config() const {
    vt::Config c;
    c.seed = seed;
    if (!coeff.empty()) c.coeff = vt::parse_coeff(coeff);
    if (budget_degree < 3) throw vt::UsageError("--budget-degree must be at least 3");
    c.budget_degree = budget_degree;
    c.timings = timings;
    return c;
  }
};

int emit(const vt::Report& r, const Common& o) {
  if (!o.json.empty()) {
    std::ofstream f(o.json);
    if (!f) throw vt::UsageError("cannot write " + o.json);
    f << r.json() << "\n";
  }
  if (!o.quiet) std::cout << r.text();
  return r.exit_code();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification of the (1,7) moduli computations"};
  app.require_subcommand(1);
  Common o;

  std::string suite;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "appendix | syzygy | moduli | all")
      ->required()
      ->check(CLI::IsMember({"appendix", "syzygy", "moduli", "all"}));
  verify->add_option("--t", o.t, "single parameter point a,b,c,d instead of the seeded samples");
  o.attach(verify);

  vt::SurfaceOptions so;
  auto* surface = app.add_subcommand("surface", "build the 21 cubics at t");
  surface->add_option("--t", o.t, "parameter point a,b,c,d")->required();
  surface->add_flag("--betti", so.betti, "compute the Betti table");
  surface->add_option("--out", so.out, "write cubics and Hilbert data as JSON");
  o.attach(surface);

  std::string raw;
  vt::GrassOptions go;
  auto* grass = app.add_subcommand("grassmann", "membership of a 3-space in G(3,L,eta)");
  auto* gt = grass->add_option("--t", o.t, "the point psi(t)");
  auto* gr = grass->add_option("--raw", raw, "21 comma-separated rationals, a 3x7 matrix by rows");
  auto* ge = grass->add_flag("--equational", go.equational, "the equational point");
  gt->excludes(gr)->excludes(ge);
  gr->excludes(ge);
  o.attach(grass);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    vt::Config cfg = o.config();
    if (*verify) {
      if (!o.t.empty()) cfg.t = vt::parse_point(o.t);
      return emit(vt::run_suite(suite, cfg), o);
    }
    if (*surface) {
      so.t = vt::parse_point(o.t);
      return emit(vt::run_surface(so, cfg), o);
    }
    if (!o.t.empty()) go.t = vt::parse_point(o.t);
    if (!raw.empty()) go.raw = vt::parse_rationals(raw, 21);
    return emit(vt::run_grassmann(go, cfg), o);
  } catch (const vt::UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const km::DegenerateParameter& e) {
    std::cerr << "degenerate parameter: " << e.what() << "\n";
    return 1;
  }
}
