#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "katalan/json_io.hpp"
#include "katalan/katalan.hpp"
#include "katalan/kkschur.hpp"

namespace katalan {

// Parameters shared by the verification suites. Unset fields fall back to
// each suite's default range.
struct VerifyOptions {
  std::optional<int> k;        // a single k instead of the default range
  std::optional<int> max_deg;  // bound on |lambda|
  std::optional<int> max_ell;  // bound on the length
  int instances = 500;         // generated instances per lemma family
  std::uint64_t seed = 1;
  int jobs = 1;
  FamilyCache* cache = nullptr;  // default_cache() when null
};

struct FamilyTally {
  std::string name;
  std::size_t checked = 0;
  std::size_t failed = 0;
};

struct SuiteResult {
  std::string suite;
  std::string identity;  // the statement being checked, in words
  std::vector<FamilyTally> families;
  std::vector<json> failures;  // first few failing instances
  json parameters = json::object();

  std::size_t checked() const;
  std::size_t failed() const;
  bool ok() const { return failed() == 0 && checked() > 0; }
  json to_json() const;
};

// Names accepted by run_suite, in a stable order.
std::vector<std::string> suite_names();

// Throws ParseError for an unknown suite name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opts);

// Individual suites.
SuiteResult verify_specializations(const VerifyOptions& opts);
SuiteResult verify_determinant(const VerifyOptions& opts);
SuiteResult verify_identities(const VerifyOptions& opts);
SuiteResult verify_mirror(const VerifyOptions& opts);
SuiteResult verify_pieri(const VerifyOptions& opts);
SuiteResult verify_pieri_straightening(const VerifyOptions& opts);
SuiteResult verify_shift(const VerifyOptions& opts);
SuiteResult verify_branch(const VerifyOptions& opts);
SuiteResult verify_rectangle(const VerifyOptions& opts);
SuiteResult verify_longest_word(const VerifyOptions& opts);
SuiteResult verify_theta(const VerifyOptions& opts);
SuiteResult verify_dictionary(const VerifyOptions& opts);
SuiteResult verify_factorization(const VerifyOptions& opts);
SuiteResult verify_tilde_g(const VerifyOptions& opts);
SuiteResult verify_omega(const VerifyOptions& opts);
SuiteResult verify_unitriangular(const VerifyOptions& opts);

}  // namespace katalan
