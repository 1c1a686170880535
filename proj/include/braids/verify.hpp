#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "braids/rewriting.hpp"

namespace braids {

// One checked identity: a computed quantity against its reference value.
// Every claim is exact -- integers or booleans, never approximate.
struct Claim {
  std::string id;         // stable sort key; the prefix groups related claims
  std::string statement;  // the identity in plain text
  nlohmann::json computed;
  nlohmann::json expected;
  bool pass = false;
};

struct VerificationReport {
  std::vector<Claim> claims;  // ordered by id

  std::size_t passed() const;
  std::size_t failed() const;
  bool all_pass() const { return failed() == 0; }
};

struct VerifyOptions {
  int max_n_braids = 6;  // cap on anything enumerating braids
  int max_n_perms = 5;   // cap on the full symmetric-group graphs
  std::size_t class_cap = kDefaultClassCap;
  // Test hook: replaces the Fibonacci reference used for expected values, so
  // a deliberately wrong sequence must flip the count claims to failing.
  std::function<std::uint64_t(unsigned)> fib_override;
};

// Runs the whole claim suite: counts, worked examples, centralizer theorems,
// randomized lemma checks (fixed seeds), graph structure, witnesses, and
// planarity milestones. Deterministic: identical options give an identical
// report.
VerificationReport verify_all(const VerifyOptions& opts = {});

nlohmann::json report_to_json(const VerificationReport& report);
std::string report_to_text(const VerificationReport& report);

}  // namespace braids
