#pragma once

#include <string>
#include <vector>

#include "katalan/json_io.hpp"
#include "katalan/kkschur.hpp"

namespace katalan {

struct SweepRanges {
  std::vector<int> ks{2, 3};
  int max_ell = 4;  // length bound on mu (and the root ideal size for kpos)
  int max_deg = 7;  // bound on |mu|
};

// A counterexample never stops a sweep; it is stored as a witness.
struct SweepReport {
  std::string conjecture;
  std::string statement;
  json parameters = json::object();
  std::size_t instances = 0;
  std::vector<json> witnesses;

  bool clean() const { return witnesses.empty() && instances > 0; }
  json to_json() const;
};

// tilde-g, dual-pieri, k-branching, kk-alternating, rectangle, kpos.
std::vector<std::string> sweep_names();
// Maps the aliases a, c, d, e, f to their sweep names. Throws ParseError.
std::string canonical_sweep(const std::string& name);

SweepReport sweep(const std::string& which, const SweepRanges& ranges,
                  FamilyCache& cache = default_cache(), int jobs = 1);

}  // namespace katalan
