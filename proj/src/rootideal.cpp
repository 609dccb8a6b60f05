#include "katalan/rootideal.hpp"

#include <algorithm>
#include <climits>
#include <numeric>
#include <sstream>

#include "katalan/errors.hpp"

namespace katalan {

RootIdeal::RootIdeal(int ell, std::vector<int> rows) : ell_(ell), rows_(std::move(rows)) {
  if (ell_ < 0) throw InvalidIdeal("negative length");
  if (static_cast<int>(rows_.size()) != ell_)
    throw InvalidIdeal("expected " + std::to_string(ell_) + " row counts, got " +
                       std::to_string(rows_.size()));
  for (int i = 1; i <= ell_; ++i) {
    const int r = rows_[i - 1];
    if (r < 0 || r > ell_ - i)
      throw InvalidIdeal("row " + std::to_string(i) + " count " + std::to_string(r) +
                         " out of range");
    if (i < ell_ && rows_[i] > r)
      throw InvalidIdeal("row counts must be weakly decreasing");
  }
}

RootIdeal RootIdeal::empty(int ell) { return RootIdeal(ell, std::vector<int>(ell, 0)); }

RootIdeal RootIdeal::full(int ell) {
  std::vector<int> rows(ell);
  for (int i = 1; i <= ell; ++i) rows[i - 1] = ell - i;
  return RootIdeal(ell, rows);
}

RootIdeal RootIdeal::from_roots(int ell, const RootSet& roots) {
  std::vector<int> rows(ell, 0);
  for (const Root& a : roots) {
    if (a.i < 1 || a.j > ell || a.i >= a.j) throw InvalidIdeal("root outside Delta^+");
    ++rows[a.i - 1];
  }
  RootIdeal out(ell, rows);
  for (const Root& a : roots)
    if (!out.contains(a)) throw InvalidIdeal("root set is not an upper order ideal");
  return out;
}

int RootIdeal::col_count(int j) const noexcept {
  int c = 0;
  for (int i = 1; i < j && i <= ell_; ++i)
    if (contains(i, j)) ++c;
  return c;
}

int RootIdeal::size() const noexcept { return std::accumulate(rows_.begin(), rows_.end(), 0); }

bool RootIdeal::contains(int i, int j) const noexcept {
  if (i < 1 || i >= j || j > ell_) return false;
  return j > ell_ - rows_[i - 1];
}

RootSet RootIdeal::roots() const {
  RootSet out;
  for (int i = 1; i <= ell_; ++i)
    for (int j = ell_ - rows_[i - 1] + 1; j <= ell_; ++j) out.push_back({i, j});
  return out;
}

bool RootIdeal::is_removable(const Root& a) const {
  if (!contains(a)) return false;
  return a.j == ell_ - row_count(a.i) + 1 && row_count(a.i + 1) < row_count(a.i);
}

bool RootIdeal::is_addable(const Root& a) const {
  if (a.i < 1 || a.i >= a.j || a.j > ell_ || contains(a)) return false;
  if (a.j != ell_ - row_count(a.i)) return false;
  return a.i == 1 || row_count(a.i - 1) > row_count(a.i);
}

RootSet RootIdeal::removable_roots() const {
  RootSet out;
  for (int i = 1; i <= ell_; ++i) {
    Root a{i, ell_ - rows_[i - 1] + 1};
    if (rows_[i - 1] > 0 && is_removable(a)) out.push_back(a);
  }
  return out;
}

RootSet RootIdeal::addable_roots() const {
  RootSet out;
  for (int i = 1; i <= ell_; ++i) {
    Root a{i, ell_ - rows_[i - 1]};
    if (is_addable(a)) out.push_back(a);
  }
  return out;
}

RootIdeal RootIdeal::without(const Root& a) const {
  if (!is_removable(a))
    throw InvalidIdeal("(" + std::to_string(a.i) + "," + std::to_string(a.j) + ") is not removable");
  RootIdeal out = *this;
  --out.rows_[a.i - 1];
  return out;
}

RootIdeal RootIdeal::with(const Root& a) const {
  if (!is_addable(a))
    throw InvalidIdeal("(" + std::to_string(a.i) + "," + std::to_string(a.j) + ") is not addable");
  RootIdeal out = *this;
  ++out.rows_[a.i - 1];
  return out;
}

RootIdeal RootIdeal::without(const RootSet& roots) const {
  RootSet keep;
  for (const Root& a : this->roots())
    if (std::find(roots.begin(), roots.end(), a) == roots.end()) keep.push_back(a);
  return from_roots(ell_, keep);
}

std::optional<int> RootIdeal::down(int x) const {
  if (x < 1 || x > ell_ || row_count(x) == 0) return std::nullopt;
  if (row_count(x + 1) >= row_count(x)) return std::nullopt;
  return ell_ - row_count(x) + 1;
}

std::optional<int> RootIdeal::up(int x) const {
  if (x < 1 || x > ell_) return std::nullopt;
  const int c = col_count(x);
  if (c == 0 || col_count(x - 1) >= c) return std::nullopt;
  return c;
}

int RootIdeal::top(int x) const {
  for (auto u = up(x); u; u = up(x)) x = *u;
  return x;
}

std::vector<int> RootIdeal::uppath(int x) const {
  std::vector<int> out{x};
  for (auto u = up(x); u; u = up(x)) {
    x = *u;
    out.push_back(x);
  }
  std::reverse(out.begin(), out.end());
  return out;
}

std::vector<int> RootIdeal::bpath(int a, int b) const {
  if (a > b) return {};
  std::vector<int> out{a};
  int x = a;
  while (x < b) {
    auto d = down(x);
    if (!d || *d > b)
      throw NotSamePath(std::to_string(a) + " and " + std::to_string(b) +
                        " are not on one bounce path");
    x = *d;
    out.push_back(x);
  }
  return out;
}

std::vector<std::vector<int>> RootIdeal::bounce_paths() const {
  std::vector<std::vector<int>> out;
  for (int x = 1; x <= ell_; ++x) {
    if (up(x)) continue;
    std::vector<int> path{x};
    for (auto d = down(x); d; d = down(path.back())) path.push_back(*d);
    out.push_back(std::move(path));
  }
  return out;
}

bool RootIdeal::has_wall(int r, int d) const {
  if (r < 1 || r + d > ell_) return false;
  for (int t = 1; t <= d; ++t)
    if (row_count(r + t) != row_count(r)) return false;
  return true;
}

bool RootIdeal::has_ceiling(int c, int d) const {
  if (c < 1 || c + d > ell_) return false;
  const int base = col_count(c);
  for (int t = 1; t <= d; ++t)
    if (col_count(c + t) != base) return false;
  return true;
}

bool RootIdeal::has_mirror(int r) const {
  if (r < 1 || r + 1 > ell_) return false;
  const int c = ell_ - row_count(r) + 1;
  return row_count(r) > 0 && c > r + 1 && is_removable({r, c}) &&
         is_removable({r + 1, c + 1});
}

std::vector<int> RootIdeal::nonroot_counts() const {
  std::vector<int> out(ell_);
  for (int i = 1; i <= ell_; ++i) out[i - 1] = ell_ - i - rows_[i - 1];
  return out;
}

RootIdeal RootIdeal::prefix(int ell) const {
  if (ell < 0 || ell > ell_) throw MismatchedLength("prefix length out of range");
  std::vector<int> rows(ell);
  for (int i = 1; i <= ell; ++i) rows[i - 1] = std::max(0, rows_[i - 1] - (ell_ - ell));
  return RootIdeal(ell, rows);
}

RootIdeal RootIdeal::truncated() const { return prefix(ell_ - 1); }

std::string RootIdeal::str() const {
  std::ostringstream os;
  os << "ell=" << ell_ << " rows=" << weight_str(rows_);
  return os.str();
}

Multiset::Multiset(int ell, std::vector<int> mult) : ell_(ell), mult_(std::move(mult)) {
  if (static_cast<int>(mult_.size()) != ell_)
    throw InvalidWeight("multiset needs " + std::to_string(ell_) + " multiplicities");
  for (int m : mult_)
    if (m < 0) throw InvalidWeight("negative multiplicity");
}

Multiset Multiset::of_elements(int ell, const std::vector<int>& elements) {
  Multiset out(ell);
  for (int j : elements) {
    if (j < 1 || j > ell) throw InvalidWeight("multiset element out of range");
    ++out.mult_[j - 1];
  }
  return out;
}

int Multiset::size() const noexcept { return std::accumulate(mult_.begin(), mult_.end(), 0); }

Multiset Multiset::plus(int j, int times) const {
  if (j < 1 || j > ell_) throw InvalidWeight("multiset element out of range");
  Multiset out = *this;
  out.mult_[j - 1] += times;
  if (out.mult_[j - 1] < 0) throw InvalidWeight("negative multiplicity");
  return out;
}

Multiset Multiset::minus(int j, int times) const {
  if ((*this)(j) < times)
    throw InvalidWeight(std::to_string(j) + " is not in the multiset often enough");
  return plus(j, -times);
}

Multiset Multiset::disjoint_union(const Multiset& other) const {
  if (other.ell_ != ell_) throw MismatchedLength("multisets of different length");
  Multiset out = *this;
  for (int j = 0; j < ell_; ++j) out.mult_[j] += other.mult_[j];
  return out;
}

Multiset Multiset::extended(int ell) const {
  if (ell < ell_) throw MismatchedLength("cannot extend to a shorter length");
  Multiset out = *this;
  out.ell_ = ell;
  out.mult_.resize(ell, 0);
  return out;
}

Multiset Multiset::prefix(int ell) const {
  if (ell < 0 || ell > ell_) throw MismatchedLength("prefix length out of range");
  return Multiset(ell, std::vector<int>(mult_.begin(), mult_.begin() + ell));
}

bool Multiset::contains(const Multiset& other) const {
  for (int j = 1; j <= std::max(ell_, other.ell_); ++j)
    if (other(j) > (*this)(j)) return false;
  return true;
}

Multiset Multiset::difference(const Multiset& other) const {
  if (!contains(other)) throw InvalidWeight("multiset difference is not contained");
  Multiset out = *this;
  for (int j = 1; j <= ell_; ++j) out.mult_[j - 1] -= other(j);
  return out;
}

std::string Multiset::str() const { return weight_str(mult_); }

RootIdeal delta_k(int k, int ell, const Weight& mu) {
  if (static_cast<int>(mu.size()) != ell) throw MismatchedLength("weight length differs from ell");
  std::vector<int> rows(ell);
  for (int i = 1; i <= ell; ++i) {
    if (mu[i - 1] > k) throw InvalidWeight("entry exceeds k in " + weight_str(mu));
    if (i < ell && mu[i - 1] < mu[i] - 1)
      throw InvalidWeight("entries may increase by at most one: " + weight_str(mu));
    rows[i - 1] = std::max(0, ell - k + mu[i - 1] - i);
  }
  return RootIdeal(ell, rows);
}

Multiset multiset_of(const RootIdeal& ideal) {
  Multiset out(ideal.ell());
  std::vector<int> mult(ideal.ell());
  for (int j = 1; j <= ideal.ell(); ++j) mult[j - 1] = ideal.col_count(j);
  return Multiset(ideal.ell(), mult);
}

Multiset full_multiset(int ell) { return multiset_of(RootIdeal::full(ell)); }

Multiset multiset_of(int ell, const RootSet& roots) {
  std::vector<int> cols;
  for (const Root& a : roots) cols.push_back(a.j);
  return Multiset::of_elements(ell, cols);
}

RootIdeal rc(const RootIdeal& ideal) {
  std::vector<int> rows = ideal.rows();
  for (const Root& a : ideal.removable_roots()) --rows[a.i - 1];
  return RootIdeal(ideal.ell(), rows);
}

RootIdeal rc_power(const RootIdeal& ideal, int a) {
  if (a < 0) throw InvalidIdeal("negative RC power");
  RootIdeal out = ideal;
  for (int t = 0; t < a && out.size() > 0; ++t) out = rc(out);
  return out;
}

int maxband(const RootIdeal& ideal, const Weight& gamma) {
  if (static_cast<int>(gamma.size()) != ideal.ell())
    throw MismatchedLength("weight length differs from ideal length");
  const std::vector<int> nr = ideal.nonroot_counts();
  int best = INT_MIN;
  for (std::size_t i = 0; i < gamma.size(); ++i) best = std::max(best, gamma[i] + nr[i]);
  return best;
}

RootIdeal concat(const RootIdeal& a, const RootIdeal& b) {
  std::vector<int> rows;
  rows.reserve(a.ell() + b.ell());
  for (int r : a.rows()) rows.push_back(r + b.ell());
  for (int r : b.rows()) rows.push_back(r);
  return RootIdeal(a.ell() + b.ell(), rows);
}

RootSet diagonal(int x, int y, int z) {
  RootSet out;
  for (int j = y; j <= z; ++j) out.push_back({j - (y - x), j});
  return out;
}

RootSet staircase(int x, int y, int z, int h) {
  RootSet out;
  for (int t = 0; t < h; ++t) {
    RootSet d = diagonal(x + t, y, z);
    out.insert(out.end(), d.begin(), d.end());
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void enumerate_rows(int ell, int i, std::vector<int>& rows, std::vector<RootIdeal>& out) {
  if (i > ell) {
    out.emplace_back(ell, rows);
    return;
  }
  const int cap = std::min(ell - i, i == 1 ? ell - 1 : rows[i - 2]);
  for (int r = 0; r <= cap; ++r) {
    rows[i - 1] = r;
    enumerate_rows(ell, i + 1, rows, out);
  }
}

int reflect(int i, int a) {
  if (a == i) return i + 1;
  if (a == i + 1) return i;
  return a;
}

}  // namespace

std::vector<RootIdeal> enumerate_ideals(int ell) {
  std::vector<RootIdeal> out;
  if (ell < 0) return out;
  std::vector<int> rows(ell, 0);
  enumerate_rows(ell, 1, rows, out);
  return out;
}

SiImage si_action(int i, const RootIdeal& ideal) {
  SiImage img;
  for (const Root& a : ideal.roots()) {
    Root b{reflect(i, a.i), reflect(i, a.j)};
    if (b.i >= b.j) img.in_positive_roots = false;
    img.roots.push_back(b);
  }
  std::sort(img.roots.begin(), img.roots.end());
  if (img.in_positive_roots) {
    try {
      img.ideal = RootIdeal::from_roots(ideal.ell(), img.roots);
      img.is_ideal = true;
    } catch (const InvalidIdeal&) {
      img.is_ideal = false;
    }
  }
  return img;
}

Multiset si_action(int i, const Multiset& m) {
  std::vector<int> mult(m.ell());
  for (int a = 1; a <= m.ell(); ++a) mult[a - 1] = m(reflect(i, a));
  return Multiset(m.ell(), mult);
}

Weight si_action(int i, const Weight& w) {
  Weight out = w;
  if (i >= 1 && i < static_cast<int>(w.size())) std::swap(out[i - 1], out[i]);
  return out;
}

std::string render_grid(const RootIdeal& ideal, const Multiset& m, const Weight& gamma) {
  const int ell = ideal.ell();
  if (m.ell() != ell || static_cast<int>(gamma.size()) != ell)
    throw MismatchedLength("grid inputs have different lengths");
  int width = 1;
  for (int g : gamma) width = std::max<int>(width, std::to_string(g).size());
  bool overflow = false;
  for (int j = 1; j <= ell; ++j) overflow = overflow || m(j) >= j;

  std::ostringstream os;
  for (int i = 1; i <= ell; ++i) {
    for (int j = 1; j <= ell; ++j) {
      std::string cell;
      if (j < i) {
        cell = "";
      } else if (j == i) {
        cell = std::to_string(gamma[i - 1]);
      } else {
        const bool root = ideal.contains(i, j);
        const bool lowered = !overflow && i <= m(j);
        cell = root ? (lowered ? "#*" : "#") : (lowered ? "*" : ".");
      }
      os << std::string(std::max<int>(0, width + 2 - static_cast<int>(cell.size())), ' ')
         << cell;
    }
    os << '\n';
  }
  if (overflow) os << "lowering multiplicities " << m.str() << '\n';
  return os.str();
}

}  // namespace katalan
