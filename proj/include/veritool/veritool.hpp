// Verification suites and their JSON reports.
#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "kleinmoduli/kleinmoduli.hpp"

namespace vt {

inline constexpr const char* kVersion = "1.0.0";

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Status { Pass, Fail, Flagged };
std::string to_string(Status s);

struct CheckResult {
  std::string id;
  Status status = Status::Pass;
  std::string details;
  double ms = 0;
};

// "q" or "fp:<p>"
struct Coeff {
  bool rational = true;
  uint32_t p = 0;
  std::string str() const;
};
Coeff parse_coeff(const std::string& s);        // throws UsageError
km::Point parse_point(const std::string& s);     // "a,b,c,d" with rationals; throws UsageError
std::vector<ef::Rat> parse_rationals(const std::string& s, size_t n);

struct Config {
  uint64_t seed = 42;
  std::optional<Coeff> coeff;  // unset: F31 for resolutions, Q elsewhere
  int budget_degree = 8;
  size_t samples = 20;
  std::optional<km::Point> t;  // replaces the seeded sample points
  double betti_budget_s = 900;
  bool timings = false;
  uint32_t resolution_prime() const { return coeff && !coeff->rational ? coeff->p : 31; }
};

struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> config;  // extra entries, in order
  uint64_t seed = 42;
  bool timings = false;
  std::vector<CheckResult> checks;

  size_t count(Status s) const;
  int exit_code() const { return count(Status::Fail) ? 1 : 0; }
  std::string json() const;
  std::string text() const;  // rendered from json()
};

// Check groups, in report order.
enum class Group { Group, Characters, Formulas, BMatrices, Equivalence, JIdeal, Surfaces, Betti, Klein };
std::string group_name(Group g);
std::vector<Group> suite_groups(const std::string& suite);  // throws UsageError
std::vector<CheckResult> run_group(Group g, const Config& cfg);
Report run_suite(const std::string& suite, const Config& cfg);

std::vector<km::Point> sample_points(const Config& cfg);

// Subcommands; throw km::DegenerateParameter on bad parameters.
struct SurfaceOptions {
  km::Point t;
  bool betti = false;
  std::string out;  // file for cubics and Hilbert data
};
Report run_surface(const SurfaceOptions& opt, const Config& cfg);

struct GrassOptions {
  std::optional<km::Point> t;
  std::vector<ef::Rat> raw;  // 21 entries, row-major 3x7
  bool equational = false;
};
Report run_grassmann(const GrassOptions& opt, const Config& cfg);

}  // namespace vt
