#pragma once

#include <chrono>
#include <cstdint>
#include <string>
#include <vector>

#include "legweb/json_io.hpp"

namespace legweb {

struct CheckResult {
  std::string name;
  bool pass = false;
  Json details = Json::object();  // exact integers are stored as strings
};

// One run of a subcommand. pass() is true iff every check passes.
class RunReport {
 public:
  RunReport(std::vector<std::string> command, std::string input);

  void add(CheckResult c) { checks_.push_back(std::move(c)); }
  void set(const std::string& key, Json value) { extra_[key] = std::move(value); }
  const std::vector<CheckResult>& checks() const { return checks_; }
  bool pass() const;
  // Stops the clock on the first call.
  Json to_json();

 private:
  std::vector<std::string> command_;
  std::string digest_;
  std::vector<CheckResult> checks_;
  Json extra_ = Json::object();
  std::chrono::steady_clock::time_point start_;
  double wall_ = -1;
};

// 64-bit FNV-1a, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

// Exact integer as a decimal string.
std::string exact(const Integer& n);
std::string exact(long long n);

}  // namespace legweb
