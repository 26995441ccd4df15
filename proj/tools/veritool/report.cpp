#include <cstdio>
#include <sstream>

#include "json.hpp"
#include "veritool/veritool.hpp"

namespace vt {

size_t Report::count(Status s) const {
  size_t n = 0;
  for (auto& c : checks) n += c.status == s;
  return n;
}

std::string Report::json() const {
  nlohmann::ordered_json j;
  j["version"] = kVersion;
  j["seed"] = seed;
  nlohmann::ordered_json cfg;
  cfg["command"] = command;
  for (auto& [k, v] : config) cfg[k] = v;
  j["config"] = cfg;
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (auto& c : checks) {
    nlohmann::ordered_json e;
    e["id"] = c.id;
    e["status"] = to_string(c.status);
    e["details"] = c.details;
    if (timings) e["ms"] = std::llround(c.ms);
    arr.push_back(e);
  }
  j["checks"] = arr;
  j["summary"] = {{"total", checks.size()},
                  {"pass", count(Status::Pass)},
                  {"fail", count(Status::Fail)},
                  {"flagged", count(Status::Flagged)}};
  return j.dump(2);
}

std::string Report::text() const {
  auto j = nlohmann::ordered_json::parse(json());
  std::ostringstream os;
  os << "veritool " << j["version"].get<std::string>() << "  " << j["config"]["command"].get<std::string>()
     << "  seed " << j["seed"].get<uint64_t>() << "\n";
  for (auto& c : j["checks"]) {
    std::string st = c["status"].get<std::string>();
    for (auto& ch : st) ch = char(std::toupper(static_cast<unsigned char>(ch)));
    os << "[" << st << "] " << c["id"].get<std::string>() << ": " << c["details"].get<std::string>();
    if (c.contains("ms")) os << " (" << c["ms"].get<long long>() << " ms)";
    os << "\n";
  }
  auto& s = j["summary"];
  os << s["total"] << " checks: " << s["pass"] << " pass, " << s["fail"] << " fail, " << s["flagged"]
     << " flagged\n";
  return os.str();
}

}  // namespace vt
