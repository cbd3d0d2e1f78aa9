#include "legweb/report.hpp"

#include <cstdio>

namespace legweb {

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string exact(const Integer& n) { return n.get_str(); }
std::string exact(long long n) { return std::to_string(n); }

RunReport::RunReport(std::vector<std::string> command, std::string input)
    : command_(std::move(command)),
      digest_(fnv1a_hex(input)),
      start_(std::chrono::steady_clock::now()) {}

bool RunReport::pass() const {
  for (const auto& c : checks_)
    if (!c.pass) return false;
  return true;
}

Json RunReport::to_json() {
  if (wall_ < 0)
    wall_ = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  Json checks = Json::array();
  for (const auto& c : checks_)
    checks.push_back({{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
  Json out = {{"command", command_}, {"input_digest", "fnv1a64:" + digest_}};
  for (const auto& [k, v] : extra_.items()) out[k] = v;
  out["checks"] = checks;
  out["pass"] = pass();
  out["wall_seconds"] = wall_;
  return out;
}

}  // namespace legweb
