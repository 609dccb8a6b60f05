#include <algorithm>

#include "katalan/errors.hpp"
#include "katalan/symfunc.hpp"

namespace katalan {

BasisExpander::BasisExpander(std::vector<LabeledSymFunc> family)
    : family_(std::move(family)) {
  // Candidate rows in canonical monomial order for reproducible pivots.
  std::vector<Partition> monos;
  for (const auto& [label, f] : family_) {
    for (const auto& t : f.terms()) monos.push_back(t.mono);
  }
  std::sort(monos.begin(), monos.end(), graded_revlex_less);
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  for (std::size_t r = 0; r < monos.size(); ++r) row_of_.emplace(monos[r], r);

  const std::size_t nr = monos.size();
  const std::size_t nc = family_.size();
  // Augmented [A | I]; Gauss-Jordan on the A block tracks the left transform.
  std::vector<std::vector<Rational>> a(nr, std::vector<Rational>(nc));
  std::vector<std::vector<Rational>> t(nr, std::vector<Rational>(nr));
  for (std::size_t c = 0; c < nc; ++c) {
    for (const auto& term : family_[c].second.terms()) {
      a[row_of_.at(term.mono)][c] = Rational(term.coeff);
    }
  }
  for (std::size_t r = 0; r < nr; ++r) t[r][r] = 1;

  std::size_t rank = 0;
  for (std::size_t c = 0; c < nc && rank < nr; ++c) {
    std::size_t p = rank;
    while (p < nr && a[p][c] == 0) ++p;
    if (p == nr) continue;
    std::swap(a[p], a[rank]);
    std::swap(t[p], t[rank]);
    const Rational inv = 1 / a[rank][c];
    for (auto& x : a[rank]) {
      if (x != 0) x *= inv;
    }
    for (auto& x : t[rank]) {
      if (x != 0) x *= inv;
    }
    for (std::size_t r = 0; r < nr; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rational factor = a[r][c];
      for (std::size_t cc = c; cc < nc; ++cc) {
        if (a[rank][cc] != 0) a[r][cc] -= factor * a[rank][cc];
      }
      for (std::size_t cc = 0; cc < nr; ++cc) {
        if (t[rank][cc] != 0) t[r][cc] -= factor * t[rank][cc];
      }
    }
    pivot_col_.push_back(c);
    ++rank;
  }
  rank_ = rank;
  solve_.assign(t.begin(), t.begin() + static_cast<std::ptrdiff_t>(rank));
  null_.assign(t.begin() + static_cast<std::ptrdiff_t>(rank), t.end());
}

Expansion BasisExpander::expand(const SymFunc& f) const {
  if (f.is_zero()) {
    Expansion zero;
    for (const auto& [label, g] : family_) zero.emplace_back(label, Integer(0));
    return zero;
  }
  std::vector<std::pair<std::size_t, Integer>> b;
  for (const auto& term : f.terms()) {
    auto it = row_of_.find(term.mono);
    if (it == row_of_.end()) {
      throw NotInSpan("monomial h" + term.mono.str() + " outside the family support");
    }
    b.emplace_back(it->second, term.coeff);
  }
  for (const auto& row : null_) {
    Rational acc = 0;
    for (const auto& [r, c] : b) {
      if (row[r] != 0) acc += row[r] * c;
    }
    if (acc != 0) throw NotInSpan("nonzero residual");
  }
  if (rank_ < family_.size()) {
    throw NonUnique("family of " + std::to_string(family_.size()) + " members has rank " +
                    std::to_string(rank_));
  }
  Expansion out;
  out.reserve(family_.size());
  for (const auto& [label, g] : family_) out.emplace_back(label, Integer(0));
  for (std::size_t i = 0; i < rank_; ++i) {
    Rational acc = 0;
    for (const auto& [r, c] : b) {
      if (solve_[i][r] != 0) acc += solve_[i][r] * c;
    }
    if (boost::multiprecision::denominator(acc) != 1) {
      throw NonIntegral("coefficient of " + family_[pivot_col_[i]].first.str() + " is " +
                        acc.str());
    }
    out[pivot_col_[i]].second = boost::multiprecision::numerator(acc);
  }
  return out;
}

Expansion expand_in_basis(const SymFunc& f, const std::vector<LabeledSymFunc>& family) {
  return BasisExpander(family).expand(f);
}

}  // namespace katalan
