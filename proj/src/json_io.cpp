#include "katalan/json_io.hpp"

#include <cstdint>
#include <cstdio>

#include "katalan/errors.hpp"

namespace katalan {

namespace {

const json& field(const json& j, const char* name) {
  if (!j.is_object() || !j.contains(name))
    throw ParseError(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::vector<int> int_array(const json& j, const char* what) {
  if (!j.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw ParseError(std::string(what) + " entries must be integers");
    out.push_back(x.get<int>());
  }
  return out;
}

int int_field(const json& j, const char* name) {
  const json& x = field(j, name);
  if (!x.is_number_integer()) throw ParseError(std::string("\"") + name + "\" must be an integer");
  return x.get<int>();
}

}  // namespace

json to_json(const SymFunc& f) {
  json terms = json::array();
  for (const auto& t : f.terms())
    terms.push_back({{"partition", t.mono.parts()}, {"coeff", to_decimal(t.coeff)}});
  return {{"basis", "h"}, {"terms", std::move(terms)}};
}

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const RootIdeal& psi) { return {{"ell", psi.ell()}, {"rows", psi.rows()}}; }

json to_json(const Multiset& m) { return {{"ell", m.ell()}, {"mult", m.mult()}}; }

json to_json(const KatalanIndex& idx) {
  return {{"psi", to_json(idx.psi)}, {"mult", to_json(idx.mult)}, {"gamma", idx.gamma}};
}

json to_json(const AffinePerm& w) { return {{"k", w.k()}, {"window", w.window()}}; }

json to_json(const Core& c) { return {{"kplus1", c.kplus1()}, {"partition", c.shape().parts()}}; }

SymFunc symfunc_from_json(const json& j) {
  const json& basis = field(j, "basis");
  if (!basis.is_string() || basis.get<std::string>() != "h")
    throw ParseError("only the h basis is supported");
  const json& terms = field(j, "terms");
  if (!terms.is_array()) throw ParseError("\"terms\" must be an array");
  std::vector<SymFunc::Term> out;
  for (const auto& t : terms) {
    Partition mono = partition_from_json(field(t, "partition"));
    const json& c = field(t, "coeff");
    if (!c.is_string()) throw ParseError("coefficients must be decimal strings");
    out.push_back({std::move(mono), parse_integer(c.get<std::string>())});
  }
  return SymFunc::from_terms(std::move(out));
}

Partition partition_from_json(const json& j) { return Partition(int_array(j, "partition")); }

Weight weight_from_json(const json& j) { return int_array(j, "weight"); }

RootIdeal ideal_from_json(const json& j) {
  return RootIdeal(int_field(j, "ell"), int_array(field(j, "rows"), "rows"));
}

Multiset multiset_from_json(const json& j) {
  return Multiset(int_field(j, "ell"), int_array(field(j, "mult"), "mult"));
}

KatalanIndex index_from_json(const json& j) {
  return KatalanIndex(ideal_from_json(field(j, "psi")), multiset_from_json(field(j, "mult")),
                      weight_from_json(field(j, "gamma")));
}

AffinePerm perm_from_json(const json& j) {
  const int k = int_field(j, "k");
  const json& win = field(j, "window");
  if (!win.is_array()) throw ParseError("\"window\" must be an array");
  std::vector<long> w;
  for (const auto& x : win) {
    if (!x.is_number_integer()) throw ParseError("window entries must be integers");
    w.push_back(x.get<long>());
  }
  return AffinePerm(k + 1, std::move(w));
}

Core core_from_json(const json& j) {
  return Core(int_field(j, "kplus1"), partition_from_json(field(j, "partition")));
}

std::string dump(const json& j) { return j.dump(); }

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace katalan
