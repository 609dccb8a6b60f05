#include "katalan/symfunc.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "katalan/errors.hpp"

namespace katalan {

namespace {

bool term_less(const SymFunc::Term& a, const SymFunc::Term& b) {
  return graded_revlex_less(a.mono, b.mono);
}

}  // namespace

// ---------------------------------------------------------------------------
// SymFunc

SymFunc SymFunc::one() { return monomial(Partition(), 1); }

SymFunc SymFunc::constant(const Integer& c) { return monomial(Partition(), c); }

SymFunc SymFunc::h(int d) {
  if (d < 0) return SymFunc();
  if (d == 0) return one();
  return monomial(Partition{d}, 1);
}

SymFunc SymFunc::monomial(const Partition& mono, const Integer& c) {
  SymFunc f;
  if (c != 0) f.terms_.push_back(Term{mono, c});
  return f;
}

SymFunc SymFunc::from_terms(std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(), term_less);
  SymFunc f;
  for (auto& t : terms) {
    if (!f.terms_.empty() && f.terms_.back().mono == t.mono) {
      f.terms_.back().coeff += t.coeff;
    } else {
      if (!f.terms_.empty() && f.terms_.back().coeff == 0) f.terms_.pop_back();
      f.terms_.push_back(std::move(t));
    }
  }
  if (!f.terms_.empty() && f.terms_.back().coeff == 0) f.terms_.pop_back();
  return f;
}

int SymFunc::degree() const noexcept {
  return terms_.empty() ? kMinusInfinity : terms_.back().mono.size();
}

Integer SymFunc::coeff(const Partition& mono) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), mono,
      [](const Term& t, const Partition& p) { return graded_revlex_less(t.mono, p); });
  if (it != terms_.end() && it->mono == mono) return it->coeff;
  return 0;
}

SymFunc SymFunc::homogeneous_component(int d) const {
  SymFunc f;
  for (const auto& t : terms_) {
    if (t.mono.size() == d) f.terms_.push_back(t);
  }
  return f;
}

int SymFunc::max_part() const noexcept {
  int m = 0;
  for (const auto& t : terms_) m = std::max(m, t.mono.largest());
  return m;
}

SymFunc SymFunc::operator-() const {
  SymFunc f = *this;
  for (auto& t : f.terms_) t.coeff = -t.coeff;
  return f;
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
  if (other.terms_.empty()) return *this;
  if (terms_.empty()) {
    terms_ = other.terms_;
    return *this;
  }
  std::vector<Term> merged;
  merged.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end() || (a != terms_.end() && term_less(*a, *b))) {
      merged.push_back(std::move(*a++));
    } else if (a == terms_.end() || term_less(*b, *a)) {
      merged.push_back(*b++);
    } else {
      Integer c = a->coeff + b->coeff;
      if (c != 0) merged.push_back(Term{std::move(a->mono), std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) { return *this += -other; }

SymFunc& SymFunc::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coeff *= c;
  }
  return *this;
}

SymFunc operator*(const SymFunc& a, const SymFunc& b) { return multiply(a, b); }

bool operator==(const SymFunc& a, const SymFunc& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

std::string SymFunc::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    Integer c = it->coeff;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    Integer a = c < 0 ? Integer(-c) : c;
    if (it->mono.empty()) {
      os << a;
    } else {
      if (a != 1) os << a << "*";
      os << "h" << it->mono.str();
    }
    first = false;
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// SymFuncBuilder

void SymFuncBuilder::add(const Partition& mono, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = acc_.try_emplace(mono, c);
  if (!inserted) it->second += c;
}

void SymFuncBuilder::add(Partition&& mono, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = acc_.try_emplace(std::move(mono), c);
  if (!inserted) it->second += c;
}

void SymFuncBuilder::add(const SymFunc& f, const Integer& scale) {
  for (const auto& t : f.terms()) add(t.mono, t.coeff * scale);
}

void SymFuncBuilder::add_product(const SymFunc& f, const Partition& mono,
                                 const Integer& scale) {
  for (const auto& t : f.terms()) add(t.mono.union_with(mono), t.coeff * scale);
}

SymFunc SymFuncBuilder::build() && {
  std::vector<SymFunc::Term> terms;
  terms.reserve(acc_.size());
  for (auto& [mono, c] : acc_) {
    if (c != 0) terms.push_back(SymFunc::Term{mono, std::move(c)});
  }
  acc_.clear();
  return SymFunc::from_terms(std::move(terms));
}

// ---------------------------------------------------------------------------
// Products and generators

SymFunc multiply(const SymFunc& f, const SymFunc& g) {
  if (f.is_zero() || g.is_zero()) return SymFunc();
  if (f.num_terms() == 1 && f.terms()[0].mono.empty()) return g * f.terms()[0].coeff;
  if (g.num_terms() == 1 && g.terms()[0].mono.empty()) return f * g.terms()[0].coeff;
  SymFuncBuilder b;
  for (const auto& s : f.terms()) {
    for (const auto& t : g.terms()) b.add(s.mono.union_with(t.mono), s.coeff * t.coeff);
  }
  return std::move(b).build();
}

SymFunc k_hom(int m, int r) {
  if (m < 0) return SymFunc();
  std::vector<SymFunc::Term> terms;
  for (int i = 0; i <= m; ++i) {
    Integer c = binom(static_cast<std::int64_t>(r) + i - 1, i);
    if (c == 0) continue;
    terms.push_back(SymFunc::Term{m - i > 0 ? Partition{m - i} : Partition(), c});
  }
  return SymFunc::from_terms(std::move(terms));
}

const SymFunc& cached_k_hom(int m, int r) {
  thread_local std::map<std::pair<int, int>, SymFunc> cache;
  auto key = std::make_pair(m, r);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, k_hom(m, r)).first;
  return it->second;
}

SymFunc kappa_shifted(const Weight& gamma, const std::vector<int>& shifts) {
  SymFunc out = SymFunc::one();
  for (std::size_t j = 0; j < gamma.size(); ++j) {
    if (gamma[j] < 0) return SymFunc();
  }
  for (std::size_t j = 0; j < gamma.size(); ++j) {
    if (gamma[j] == 0) continue;
    out = multiply(out, cached_k_hom(gamma[j], shifts[j]));
  }
  return out;
}

SymFunc kappa(const Weight& gamma) {
  std::vector<int> shifts(gamma.size());
  for (std::size_t j = 0; j < gamma.size(); ++j) shifts[j] = static_cast<int>(j);
  return kappa_shifted(gamma, shifts);
}

// ---------------------------------------------------------------------------
// Determinants

SymFunc determinant(const std::vector<std::vector<SymFunc>>& matrix) {
  const std::size_t n = matrix.size();
  if (n == 0) return SymFunc::one();
  if (n > 20) throw LimitExceeded("determinant of size " + std::to_string(n));
  // minors[S] = det of the first |S| rows restricted to the columns in S.
  std::vector<SymFunc> minors(std::size_t(1) << n);
  minors[0] = SymFunc::one();
  for (std::size_t s = 1; s < minors.size(); ++s) {
    const int t = __builtin_popcountll(s);
    const auto& row = matrix[t - 1];
    SymFunc acc;
    int pos = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(s & (std::size_t(1) << c))) continue;
      const SymFunc& rest = minors[s & ~(std::size_t(1) << c)];
      if (!row[c].is_zero() && !rest.is_zero()) {
        SymFunc term = multiply(row[c], rest);
        if ((t - 1 + pos) % 2) {
          acc -= term;
        } else {
          acc += term;
        }
      }
      ++pos;
    }
    minors[s] = std::move(acc);
  }
  return minors.back();
}

SymFunc schur(const Weight& gamma) {
  const int l = static_cast<int>(gamma.size());
  std::vector<std::vector<SymFunc>> m(l, std::vector<SymFunc>(l));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) m[i][j] = SymFunc::h(gamma[i] + j - i);
  }
  return determinant(m);
}

SymFunc elementary(int d) {
  if (d < 0) return SymFunc();
  return schur(Weight(d, 1));
}

SymFunc dual_groth_det(const Weight& gamma) {
  const int l = static_cast<int>(gamma.size());
  std::vector<std::vector<SymFunc>> m(l, std::vector<SymFunc>(l));
  for (int i = 0; i < l; ++i) {
    for (int j = 0; j < l; ++j) m[i][j] = cached_k_hom(gamma[i] + j - i, i);
  }
  return determinant(m);
}

// ---------------------------------------------------------------------------
// Weight maps

void apply_raising(WeightMap& map, int i, int j) {
  WeightMap shifted;
  shifted.reserve(map.size());
  for (const auto& [w, c] : map) {
    Weight v = w;
    v[i - 1] += 1;
    v[j - 1] -= 1;
    shifted.emplace(std::move(v), c);
  }
  for (auto& [w, c] : shifted) {
    auto [it, inserted] = map.try_emplace(w, Integer(-c));
    if (!inserted) {
      it->second -= c;
      if (it->second == 0) map.erase(it);
    }
  }
}

void apply_lowering(WeightMap& map, int j, int times) {
  for (int t = 0; t < times; ++t) {
    WeightMap shifted;
    shifted.reserve(map.size());
    for (const auto& [w, c] : map) {
      Weight v = w;
      v[j - 1] -= 1;
      shifted.emplace(std::move(v), c);
    }
    for (auto& [w, c] : shifted) {
      auto [it, inserted] = map.try_emplace(w, Integer(-c));
      if (!inserted) {
        it->second -= c;
        if (it->second == 0) map.erase(it);
      }
    }
  }
}

SymFunc kappa_sum(const WeightMap& map) {
  SymFuncBuilder b;
  for (const auto& [w, c] : map) {
    if (std::any_of(w.begin(), w.end(), [](int x) { return x < 0; })) continue;
    b.add(kappa(w), c);
  }
  return std::move(b).build();
}

SymFunc dual_groth_raise(const Weight& gamma) {
  WeightMap map;
  map.emplace(gamma, 1);
  const int l = static_cast<int>(gamma.size());
  for (int j = 2; j <= l; ++j) {
    for (int i = 1; i < j; ++i) apply_raising(map, i, j);
  }
  return kappa_sum(map);
}

// ---------------------------------------------------------------------------
// Perp operators and algebra maps

namespace {

// e_s^perp h_mono: lower s of the factors by one each, summed over choices.
void e_perp_monomial(int s, const Partition& mono, const Integer& coeff,
                     SymFuncBuilder& out) {
  // Distinct part values with multiplicities.
  std::vector<std::pair<int, int>> groups;
  for (int p : mono.parts()) {
    if (!groups.empty() && groups.back().first == p) {
      ++groups.back().second;
    } else {
      groups.emplace_back(p, 1);
    }
  }
  std::vector<int> parts;
  parts.reserve(mono.length());
  auto rec = [&](auto&& self, std::size_t g, int left, Integer c) -> void {
    if (g == groups.size()) {
      if (left == 0) out.add(Partition::from_unsorted(parts), c);
      return;
    }
    const auto [v, mult] = groups[g];
    for (int t = 0; t <= std::min(left, mult); ++t) {
      const std::size_t mark = parts.size();
      for (int u = 0; u < mult - t; ++u) parts.push_back(v);
      if (v - 1 > 0) {
        for (int u = 0; u < t; ++u) parts.push_back(v - 1);
      }
      self(self, g + 1, left - t, c * binom(mult, t));
      parts.resize(mark);
    }
  };
  rec(rec, 0, s, coeff);
}

}  // namespace

SymFunc e_perp(int s, const SymFunc& f) {
  if (s < 0) return SymFunc();
  if (s == 0) return f;
  SymFuncBuilder out;
  for (const auto& t : f.terms()) {
    if (static_cast<int>(t.mono.length()) < s) continue;
    e_perp_monomial(s, t.mono, t.coeff, out);
  }
  return std::move(out).build();
}

SymFunc g_column_perp(int m, const SymFunc& f) {
  if (m < 1) throw InvalidWeight("g_column_perp needs m >= 1");
  SymFunc out;
  const int deg = f.degree();
  for (int i = 0; m + i <= deg; ++i) {
    SymFunc term = e_perp(m + i, f);
    if (term.is_zero()) continue;
    Integer c = binom(m - 1 + i, m - 1);
    if (i % 2) c = -c;
    out += term * c;
  }
  return out;
}

SymFunc one_minus_G1_perp(const SymFunc& f) { return f - g_column_perp(1, f); }

namespace {

template <class ImageOf>
SymFunc algebra_map(const SymFunc& f, ImageOf image_of) {
  SymFuncBuilder out;
  for (const auto& t : f.terms()) {
    SymFunc img = SymFunc::one();
    for (int p : t.mono.parts()) img = multiply(img, image_of(p));
    out.add(img, t.coeff);
  }
  return std::move(out).build();
}

}  // namespace

SymFunc omega(const SymFunc& f) {
  std::map<int, SymFunc> images;
  return algebra_map(f, [&](int r) -> const SymFunc& {
    auto it = images.find(r);
    if (it == images.end()) it = images.emplace(r, dual_groth_det(Weight(r, 1))).first;
    return it->second;
  });
}

SymFunc F_auto(const SymFunc& f) {
  std::map<int, SymFunc> images;
  return algebra_map(f, [&](int r) -> const SymFunc& {
    auto it = images.find(r);
    if (it == images.end()) {
      SymFunc s;
      for (int j = 0; j <= r; ++j) s += SymFunc::h(j);
      it = images.emplace(r, s).first;
    }
    return it->second;
  });
}

}  // namespace katalan
