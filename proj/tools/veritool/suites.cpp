#include <chrono>
#include <fstream>
#include <sstream>

#include "heisrep/heisrep.hpp"
#include "json.hpp"
#include "veritool/veritool.hpp"

namespace vt {

using km::Point;
using km::QPoly;
using km::Rat;

namespace {

using Clock = std::chrono::steady_clock;

// Collects checks; each carries the time of the block that produced its evidence.
struct Sink {
  std::vector<CheckResult> out;
  Clock::time_point start = Clock::now();

  void restart() { start = Clock::now(); }
  double elapsed() const { return std::chrono::duration<double, std::milli>(Clock::now() - start).count(); }
  void add(std::string id, Status s, std::string details) {
    out.push_back({std::move(id), s, std::move(details), elapsed()});
  }
  void add(std::string id, bool ok, std::string details) {
    add(std::move(id), ok ? Status::Pass : Status::Fail, std::move(details));
  }
};

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string join(const std::vector<long long>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::string point_str(const Point& t) {
  std::string s;
  for (int i = 0; i < 4; ++i) s += (i ? "," : "") + t[i].get_str();
  return s;
}

std::string alpha_str(const km::AlphaMatrix& al) {
  std::string s = "[";
  for (int i = 0; i < 3; ++i) {
    s += i ? "; " : "";
    for (int j = 0; j < 2; ++j) s += (j ? ", " : "") + pl::to_string(al.entry(i, j));
  }
  return s + "]";
}

// ---- criterion groups ---------------------------------------------------

void group_law(Sink& k) {
  hr::HeisReport h = hr::build_heisenberg();
  int holding = 0;
  for (auto& c : h.candidates) holding += c.holds;
  bool ok = holding == 1 && h.h_pairs == 343u * 343u && h.h_order == 343 && h.g_order == 686 && h.g_law_holds &&
            h.commutator_central && h.commutator_order == 7 && h.sigma_tau_zeta_tau_sigma;
  k.add("group.law", ok,
        "reading " + h.law.describe() + "; readings agreeing: " + std::to_string(holding) + "; products checked " +
            std::to_string(h.h_pairs) + "; |H7| = " + std::to_string(h.h_order) +
            ", |G7| = " + std::to_string(h.g_order));
  k.restart();
  hr::NormalizerReport n = hr::verify_normalizer_relations();
  std::string failed;
  for (auto& r : n.relations)
    if (!r.literal && !r.dual) failed += " " + r.name;
  k.add("group.normalizer", n.ok() && n.relations.size() == 8,
        std::to_string(n.relations.size()) + " relations, model: " + (n.reading.empty() ? "none" : n.reading) +
            (failed.empty() ? "" : "; failing:" + failed));
  k.add("group.delta_squared", n.delta_squared_is_iota, "delta^2 = iota: " + yn(n.delta_squared_is_iota));
  bool dets = true;
  std::string bad;
  for (auto& [name, ok] : n.det_one)
    if (!ok) {
      dets = false;
      bad += " " + name;
    }
  k.add("group.determinants", dets, dets ? "every generator has determinant 1" : "determinant != 1:" + bad);
}

void group_characters(Sink& k) {
  const auto& cd = hr::g7().cd;
  long total = 0;
  bool sizes = true;
  for (auto& c : cd.classes) {
    total += c.size;
    if (c.size != 1 && c.size != 14 && c.size != 49) sizes = false;
  }
  k.add("characters.g7.classes", cd.size() == 38 && sizes && total == 686,
        std::to_string(cd.size()) + " classes, sizes in {1,14,49}: " + yn(sizes) + ", total " + std::to_string(total));
  for (auto [name, T, order] : {std::tuple{"g7", &hr::g7_table(), 686L}, std::tuple{"sl2", &hr::sl2_table(), 336L}}) {
    k.restart();
    auto o = hr::orthogonality(*T);
    bool ok = o.rows && o.columns && o.sum_dim_squares == Rat(order);
    k.add(std::string("characters.") + name + ".orthogonality", ok,
          "rows " + yn(o.rows) + ", columns " + yn(o.columns) + ", sum of dim^2 " + o.sum_dim_squares.get_str());
  }
  const auto& sd = hr::sl2().cd;
  k.add("characters.sl2.classes", sd.size() == 11 && sd.order == 336,
        std::to_string(sd.size()) + " classes, order " + std::to_string(sd.order));
  k.restart();
  std::string got;
  bool ok = true;
  for (int i = 0; i < 6; ++i) {
    auto d = hr::decompose(hr::g7_table(), hr::char_of_rep(hr::schroedinger_images(i))).str();
    got += (i ? " " : "") + d;
    ok = ok && d == "V" + std::to_string(i);
  }
  k.add("characters.schroedinger", ok, "twists decompose as " + got);
}

void group_formulas(Sink& k) {
  using Fn = std::vector<hr::FormulaCheck> (*)();
  std::vector<std::pair<std::string, Fn>> parts = {
      {"products", hr::check_useful_formulae}, {"omega3", hr::check_omega3_rows},
      {"oa", hr::check_oa_rows},               {"sl2", hr::check_sl2_products},
      {"nrows", hr::check_normalizer_rows},    {"restrictions", hr::check_concrete_decompositions},
  };
  for (auto& [part, fn] : parts) {
    k.restart();
    for (auto& c : fn()) {
      std::string d = "expected " + c.expected + ", computed " + c.computed;
      if (!c.note.empty()) d += "; " + c.note;
      k.add("formulas." + part + "." + c.id, c.ok, d);
    }
  }
}

void group_bmatrices(Sink& k, const Config& cfg) {
  auto c = km::composition_table();
  std::string table;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) table += (i || j ? " " : "") + ("u" + std::to_string(i) + "u" + std::to_string(j) + "=" + c.label[i][j]);
  k.add("bmatrices.compositions", c.matches_printed && c.commutative,
        "commutative " + yn(c.commutative) + "; " + table);
  k.add("bmatrices.sign_relations", c.sign_relations, "u0u1 = -u2u2, u0u2 = -u3u3, u0u3 = -u1u1: " + yn(c.sign_relations));
  k.restart();
  std::mt19937_64 rng(cfg.seed + 2);
  std::vector<std::array<Rat, 4>> ls;
  for (int i = 0; i < 4; ++i) {
    std::array<Rat, 4> l{};
    l[i] = 1;
    ls.push_back(l);
  }
  for (int i = 0; i < 6; ++i) {
    std::array<Rat, 4> l;
    for (auto& x : l) x = km::random_rat(rng, true);
    ls.push_back(l);
  }
  size_t blocks = 0;
  std::string bad;
  for (auto& l : ls) {
    auto B = km::rank_blocks(l);
    for (int b = 0; b < 4; ++b) {
      if (B[b].is_zero()) continue;
      ++blocks;
      size_t r = km::rank(pl::evaluate(B[b], km::probe_point(), Rat(0)));
      if (r != 6 && bad.empty())
        bad = "block " + std::to_string(b) + " at l = (" + point_str(l) + ") has rank " + std::to_string(r);
    }
  }
  k.add("bmatrices.rank_probe", bad.empty(),
        bad.empty() ? std::to_string(blocks) + " nonzero blocks of rank 6 at x = (1,...,7)" : bad);
  k.restart();
  size_t indep = 0, n = 20;
  for (size_t i = 0; i < n; ++i) indep += km::minors_and_independence(km::random_alpha(rng)).independent;
  k.add("bmatrices.minors_independent", indep == n,
        std::to_string(indep) + "/" + std::to_string(n) + " random alphas have independent minors");
}

void group_equivalence(Sink& k, const Config& cfg) {
  std::mt19937_64 rng(cfg.seed + 1);
  auto alphas = km::equivalence_samples(rng);
  size_t seeded = alphas.size();
  for (auto& t : sample_points(cfg)) alphas.push_back(km::alpha_min(t));
  auto r = km::check_equivalence(alphas);
  std::string d = std::to_string(seeded) + " seeded + " + std::to_string(alphas.size() - seeded) +
                  " pipeline alphas; composing to zero " + std::to_string(r.composing_to_zero) + ", annihilated " +
                  std::to_string(r.annihilated) + ", disagreements " + std::to_string(r.disagreements.size());
  if (!r.ok()) d += "; first: " + alpha_str(alphas[r.disagreements.front()]);
  k.add("equivalence.delta_criterion", r.ok(), d);
}

void group_jideal(Sink& k) {
  auto r = km::j_ideal();
  k.add("jideal.kernel", r.kernel_dim == 7 && r.equals_printed,
        "kernel dimension " + std::to_string(r.kernel_dim) + ", equals the listed generators: " + yn(r.equals_printed));
  k.add("jideal.splitting", r.splits, "S^2 U' = span(f) + span(v), 7 + 3: " + yn(r.splits));
  k.add("jideal.betti", r.betti.shorthand() == "(1; 7 8; 3 8 3)", "Betti table " + r.betti.shorthand());
  auto hf = r.hilbert;
  hf.resize(4);
  k.add("jideal.hilbert", hf == std::vector<long long>{1, 4, 3, 0}, "HF " + join(r.hilbert));
}

void group_surfaces(Sink& k, const Config& cfg) {
  auto D = km::d_vector();
  k.add("surfaces.d_vector", D[3].degree() == 3 && D[3].is_homogeneous(),
        "fourth entry " + pl::to_string(D[3]) + "; the variant x4*x5^5 is not a cubic");
  auto pts = sample_points(cfg);
  const std::vector<long long> want = {1, 7, 28, 63, 112};
  for (size_t i = 0; i < pts.size(); ++i) {
    k.restart();
    const Point& t = pts[i];
    std::vector<std::string> bad;
    auto S = km::surface_ideal(t);
    if (S.span_dim != 21) bad.push_back("span " + std::to_string(S.span_dim));
    auto r = km::surface_checks(S, true);
    if (!r.tau_invariant_g) bad.push_back("g not tau-invariant");
    if (!r.sigma_stable || !r.tau_stable || !r.iota_stable) bad.push_back("span not stable");
    if (r.hilbert != want) bad.push_back("HF " + join(r.hilbert));
    if (r.character != "3V4") bad.push_back("character " + r.character);
    auto c = km::curve_checks(t);
    if (!c.minors_match_psi) bad.push_back("minors differ from Psi");
    if (!c.delta_ok || !c.in_j) bad.push_back("quadrics outside J");
    if (!c.cm_shape || c.degree != 3) bad.push_back("curve Betti " + c.betti.shorthand());
    if (!c.hilbert_burch_round_trip) bad.push_back("Hilbert-Burch round trip");
    if (!km::grass_membership(km::psi(t)).member) bad.push_back("psi(t) not in G(3,L,eta)");
    std::string d = "t = (" + point_str(t) + ")";
    if (bad.empty())
      d += ": 21 cubics, HF 1,7,28,63,112, character 3V4, curve (1; 3 2) of degree 3, psi(t) in G(3,L,eta)";
    for (auto& b : bad) d += "; " + b;
    char id[32];
    std::snprintf(id, sizeof id, "surfaces.t%02zu", i + 1);
    k.add(id, bad.empty(), d);
  }
}

km::SurfaceBetti betti_check(Sink& k, const std::string& id, const km::SurfaceIdeal& S, const Config& cfg) {
  uint32_t p = cfg.resolution_prime();
  auto b = km::surface_betti(S, p, cfg.seed, cfg.budget_degree);
  double secs = k.elapsed() / 1000;
  std::string d = "t = (" + point_str(S.t) + ") over F" + std::to_string(p) + ": ";
  Status s;
  if (!b.within_budget || secs > cfg.betti_budget_s) {
    s = Status::Flagged;
    d += "budget exceeded" + (b.note.empty() ? "" : " (" + b.note + ")");
  } else if (!b.series_consistent) {
    s = Status::Fail;
    d += "alternating sum differs from the Hilbert numerator; " + b.note;
  } else {
    bool match = b.table == km::expected_surface_betti();
    s = match ? Status::Pass : Status::Fail;
    d += b.table.shorthand() + (match ? ", as expected" : ", expected " + km::expected_surface_betti().shorthand());
  }
  if (cfg.coeff && cfg.coeff->rational) d += "; resolutions are computed over F31 when Q is requested";
  k.add(id, s, d);
  return b;
}

void group_betti(Sink& k, const Config& cfg) {
  betti_check(k, "betti.surface", km::surface_ideal(sample_points(cfg).front()), cfg);
}

void group_klein(Sink& k) {
  auto r = km::klein_invariance();
  k.add("klein.invariance", r.mu && r.nu && r.delta,
        "fixed by mu+ " + yn(r.mu) + ", nu+ " + yn(r.nu) + ", delta+ " + yn(r.delta) + "; " + r.basis_note);
  k.add("klein.unique_line", r.invariant_multiplicity == 1,
        "multiplicity of I in S^4 W' is " + std::to_string(r.invariant_multiplicity));
  k.restart();
  auto p = km::pfaffian_apolarity();
  k.add("klein.pfaffians", p.annihilate && p.catalecticant_kernel == 7 && p.span_kernel,
        "annihilate " + yn(p.annihilate) + ", catalecticant kernel " + std::to_string(p.catalecticant_kernel) +
            ", spanned by the Pfaffians " + yn(p.span_kernel));
  k.add("klein.apolar_algebra", p.gorenstein_symmetric, "HF " + join(p.quotient_hf) + ", symmetric " + yn(p.gorenstein_symmetric));
  k.restart();
  auto n = km::net_discriminant();
  k.add("klein.net", n.proportional, "det = " + n.factor.get_str() + " * f_klein: " + yn(n.proportional));
  k.restart();
  auto e = km::epsilon_identity();
  k.add("klein.epsilon", e.identity && e.constant_part_zero && e.single_summand,
        "sum of (v_i + e v_{i+1})^4 - v_i^4 = 4 e f_klein: " + yn(e.identity));
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    default: return "flagged";
  }
}

std::string Coeff::str() const { return rational ? "q" : "fp:" + std::to_string(p); }

Coeff parse_coeff(const std::string& s) {
  if (s == "q") return {};
  if (s.rfind("fp:", 0) == 0) {
    try {
      size_t pos = 0;
      unsigned long p = std::stoul(s.substr(3), &pos);
      if (pos == s.size() - 3 && p < (1ul << 31) && ef::is_prime(uint32_t(p))) return {false, uint32_t(p)};
    } catch (const std::exception&) {
    }
  }
  throw UsageError("--coeff expects q or fp:<prime>, got '" + s + "'");
}

std::vector<Rat> parse_rationals(const std::string& s, size_t n) {
  std::vector<Rat> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      if (item.empty() || item.find_first_not_of("0123456789-/ ") != std::string::npos) throw 0;
      Rat q(item);
      if (q.get_den() == 0) throw 0;
      q.canonicalize();
      out.push_back(q);
    } catch (...) {
      throw UsageError("not a rational number: '" + item + "'");
    }
  }
  if (out.size() != n) throw UsageError("expected " + std::to_string(n) + " comma-separated rationals");
  return out;
}

Point parse_point(const std::string& s) {
  auto v = parse_rationals(s, 4);
  Point t{v[0], v[1], v[2], v[3]};
  bool all_zero = true;
  for (auto& x : t) all_zero = all_zero && ef::is_zero(x);
  if (all_zero) throw UsageError("t = 0 is not a point");
  return t;
}

std::vector<Point> sample_points(const Config& cfg) {
  if (cfg.t) return {*cfg.t};
  std::mt19937_64 rng(cfg.seed);
  std::vector<Point> pts;
  for (size_t i = 0; i < cfg.samples; ++i) pts.push_back(km::random_point(rng));
  return pts;
}

std::string group_name(Group g) {
  static const char* names[] = {"group", "characters", "formulas", "bmatrices", "equivalence",
                                "jideal", "surfaces",   "betti",    "klein"};
  return names[int(g)];
}

std::vector<Group> suite_groups(const std::string& suite) {
  using G = Group;
  if (suite == "appendix") return {G::Group, G::Characters, G::Formulas};
  if (suite == "syzygy") return {G::JIdeal, G::Betti};
  if (suite == "moduli") return {G::BMatrices, G::Equivalence, G::Surfaces, G::Klein};
  if (suite == "all")
    return {G::Group, G::Characters, G::Formulas, G::BMatrices, G::Equivalence, G::JIdeal, G::Surfaces, G::Betti, G::Klein};
  throw UsageError("unknown suite '" + suite + "' (appendix, syzygy, moduli, all)");
}

std::vector<CheckResult> run_group(Group g, const Config& cfg) {
  Sink k;
  switch (g) {
    case Group::Group: group_law(k); break;
    case Group::Characters: group_characters(k); break;
    case Group::Formulas: group_formulas(k); break;
    case Group::BMatrices: group_bmatrices(k, cfg); break;
    case Group::Equivalence: group_equivalence(k, cfg); break;
    case Group::JIdeal: group_jideal(k); break;
    case Group::Surfaces: group_surfaces(k, cfg); break;
    case Group::Betti: group_betti(k, cfg); break;
    case Group::Klein: group_klein(k); break;
  }
  return k.out;
}

namespace {

Report base_report(const std::string& command, const Config& cfg) {
  Report r;
  r.command = command;
  r.seed = cfg.seed;
  r.timings = cfg.timings;
  r.config.push_back({"coeff", cfg.coeff ? cfg.coeff->str() : "default"});
  r.config.push_back({"budget_degree", std::to_string(cfg.budget_degree)});
  return r;
}

}  // namespace

Report run_suite(const std::string& suite, const Config& cfg) {
  auto groups = suite_groups(suite);
  Report r = base_report("verify " + suite, cfg);
  r.config.push_back({"samples", cfg.t ? "t = (" + point_str(*cfg.t) + ")" : std::to_string(cfg.samples)});
  for (Group g : groups) {
    auto v = run_group(g, cfg);
    r.checks.insert(r.checks.end(), v.begin(), v.end());
  }
  return r;
}

Report run_surface(const SurfaceOptions& opt, const Config& cfg) {
  const Point& t = opt.t;
  if (ef::is_zero(t[1]) && ef::is_zero(t[2]) && ef::is_zero(t[3]))
    throw km::DegenerateParameter("t = (" + point_str(t) + ") lies on the indeterminacy locus t1 = t2 = t3 = 0");
  Report r = base_report("surface", cfg);
  r.config.push_back({"t", point_str(t)});
  Sink k;
  auto S = km::surface_ideal(t);
  bool generic = !ef::is_zero(t[1] * t[2] * t[3]);
  k.add("surface.cubics", S.degenerate ? Status::Flagged : Status::Pass,
        std::to_string(S.span_dim) + " independent cubics" + (generic ? "" : "; t1 t2 t3 = 0, outside the verified range"));
  k.restart();
  auto c = km::surface_checks(S, true);
  k.add("surface.symmetry", c.tau_invariant_g && c.sigma_stable && c.tau_stable && c.iota_stable,
        "g tau-invariant " + yn(c.tau_invariant_g) + "; span stable under sigma " + yn(c.sigma_stable) + ", tau " +
            yn(c.tau_stable) + ", iota " + yn(c.iota_stable));
  k.add("surface.hilbert", c.hilbert == std::vector<long long>{1, 7, 28, 63, 112}, "HF " + join(c.hilbert));
  k.add("surface.character", c.character == "3V4", "cubic span " + c.character);
  km::SurfaceBetti b;
  if (opt.betti) {
    k.restart();
    b = betti_check(k, "surface.betti", S, cfg);
  }
  if (!opt.out.empty()) {
    nlohmann::ordered_json j;
    j["t"] = point_str(t);
    Coeff cf = cfg.coeff ? *cfg.coeff : Coeff{};
    j["coeff"] = cf.str();
    nlohmann::json cubics = nlohmann::json::array();
    for (auto& q : S.cubics) cubics.push_back(cf.rational ? pl::to_string(q) : pl::to_string(pl::to_fp(q, cf.p)));
    j["cubics"] = cubics;
    j["hilbert_function"] = c.hilbert;
    if (opt.betti) j["betti"] = nlohmann::json::parse(gb::betti_json(b.table));
    std::ofstream f(opt.out);
    if (!f) throw UsageError("cannot write " + opt.out);
    f << j.dump(2) << "\n";
  }
  r.checks = k.out;
  return r;
}

Report run_grassmann(const GrassOptions& opt, const Config& cfg) {
  Report r = base_report("grassmann", cfg);
  km::QMat E(3, 7, Rat(0));
  std::string what;
  if (opt.equational) {
    E = km::equational_point();
    what = "equational point";
  } else if (!opt.raw.empty()) {
    if (opt.raw.size() != 21) throw UsageError("--raw expects 21 entries");
    E.a = opt.raw;
    what = "raw 3x7 matrix";
  } else if (opt.t) {
    E = km::psi(*opt.t);
    what = "psi(" + point_str(*opt.t) + ")";
  } else {
    throw UsageError("grassmann needs --t, --raw or --equational");
  }
  r.config.push_back({"point", what});
  Sink k;
  auto m = km::grass_membership(E);
  std::string vals;
  for (size_t i = 0; i < m.values.size(); ++i) vals += (i ? "," : "") + m.values[i].get_str();
  k.add("grassmann.membership", m.member, what + (m.member ? " lies in" : " is not in") + " G(3,L,eta); contractions " + vals);
  r.checks = k.out;
  return r;
}

}  // namespace vt
