#pragma once

#include <json.hpp>

#include <string>

#include "katalan/affine.hpp"
#include "katalan/katalan.hpp"
#include "katalan/partition.hpp"
#include "katalan/rootideal.hpp"
#include "katalan/symfunc.hpp"

namespace katalan {

using json = nlohmann::ordered_json;

// {"basis":"h","terms":[{"partition":[2,1],"coeff":"-3"}]}
json to_json(const SymFunc& f);
json to_json(const Partition& p);
json to_json(const RootIdeal& psi);
json to_json(const Multiset& m);
json to_json(const KatalanIndex& idx);
json to_json(const AffinePerm& w);
json to_json(const Core& c);

// All parsers throw ParseError on malformed input; nested validation errors
// (InvalidIdeal, InvalidWeight, ...) propagate unchanged.
SymFunc symfunc_from_json(const json& j);
Partition partition_from_json(const json& j);
Weight weight_from_json(const json& j);
RootIdeal ideal_from_json(const json& j);
Multiset multiset_from_json(const json& j);
KatalanIndex index_from_json(const json& j);
AffinePerm perm_from_json(const json& j);
Core core_from_json(const json& j);

// Compact single-line dump; identical values give identical bytes.
std::string dump(const json& j);

// 64-bit FNV-1a of a byte string, as 16 hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace katalan
