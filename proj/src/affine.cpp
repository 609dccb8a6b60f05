#include "katalan/affine.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "katalan/errors.hpp"

namespace katalan {

int mod(long x, int n) {
  long r = x % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

namespace {

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

AffinePerm::AffinePerm(int n, std::vector<long> window) : n_(n), window_(std::move(window)) {
  if (n_ < 1 || static_cast<int>(window_.size()) != n_)
    throw MismatchedRank("window must have n = " + std::to_string(n_) + " entries");
  std::vector<bool> seen(n_, false);
  long sum = 0;
  for (long v : window_) {
    int r = mod(v, n_);
    if (seen[r]) throw MismatchedRank("window entries must be distinct mod n");
    seen[r] = true;
    sum += v;
  }
  if (sum != static_cast<long>(n_) * (n_ + 1) / 2)
    throw MismatchedRank("window entries must sum to n(n+1)/2");
}

AffinePerm AffinePerm::identity(int n) {
  std::vector<long> w(n);
  std::iota(w.begin(), w.end(), 1);
  return AffinePerm(n, w);
}

AffinePerm AffinePerm::simple(int n, int i) { return identity(n).times_simple(i); }

long AffinePerm::operator()(long x) const {
  long r = mod(x - 1, n_);  // position index 0..n-1
  long q = floor_div(x - 1, n_);
  return window_[r] + q * n_;
}

int AffinePerm::length() const {
  long total = 0;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j) {
      long q = floor_div(window_[j] - window_[i], n_);
      total += q < 0 ? -q : q;
    }
  return static_cast<int>(total);
}

AffinePerm AffinePerm::times_simple(int i) const {
  i = mod(i, n_);
  AffinePerm out = *this;
  if (n_ == 1) return out;
  if (i == 0) {
    out.window_[0] = window_[n_ - 1] - n_;
    out.window_[n_ - 1] = window_[0] + n_;
  } else {
    std::swap(out.window_[i - 1], out.window_[i]);
  }
  return out;
}

AffinePerm AffinePerm::simple_times(int i) const {
  i = mod(i, n_);
  AffinePerm out = *this;
  if (n_ == 1) return out;
  for (long& v : out.window_) {
    int r = mod(v, n_);
    if (r == i)
      ++v;
    else if (r == mod(i + 1, n_))
      --v;
  }
  return out;
}

AffinePerm AffinePerm::inverse() const {
  std::vector<long> inv(n_);
  for (int p = 1; p <= n_; ++p) {
    long v = window_[p - 1];
    int r = mod(v - 1, n_);
    long q = floor_div(v - 1, n_);
    inv[r] = p - q * n_;
  }
  return AffinePerm(n_, inv);
}

bool AffinePerm::has_right_descent(int i) const {
  i = mod(i, n_);
  if (n_ == 1) return false;
  return (*this)(i) > (*this)(i + 1);
}

bool AffinePerm::has_left_descent(int i) const { return inverse().has_right_descent(i); }

bool AffinePerm::is_grassmannian() const {
  for (int i = 1; i < n_; ++i)
    if (window_[i - 1] > window_[i]) return false;
  return true;
}

Word AffinePerm::reduced_word() const {
  Word out;
  AffinePerm w = *this;
  while (true) {
    AffinePerm inv = w.inverse();
    int found = -1;
    for (int i = 0; i < n_ && found < 0; ++i)
      if (inv.has_right_descent(i)) found = i;
    if (found < 0) break;
    out.push_back(found);
    w = w.simple_times(found);
  }
  return out;
}

std::string AffinePerm::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < n_; ++i) os << (i ? "," : "") << window_[i];
  os << "]";
  return os.str();
}

AffinePerm operator*(const AffinePerm& u, const AffinePerm& v) {
  if (u.n_ != v.n_) throw MismatchedRank("product of affine permutations of different rank");
  std::vector<long> w(u.n_);
  for (int i = 1; i <= u.n_; ++i) w[i - 1] = u(v(i));
  return AffinePerm(u.n_, w);
}

AffinePerm perm_of_word(int k, const Word& word) {
  AffinePerm w = AffinePerm::identity(k + 1);
  for (int i : word) w = w.times_simple(i);
  return w;
}

Word word_of_partition(int k, const Partition& lambda) {
  if (lambda.largest() > k) throw NotKBounded(lambda.str() + " has a part larger than " + std::to_string(k));
  Word out;
  const int ell = static_cast<int>(lambda.length());
  for (int r = ell; r >= 1; --r)
    for (int x = lambda[r] - r; x >= 1 - r; --x) out.push_back(mod(x, k + 1));
  return out;
}

AffinePerm perm_of_partition(int k, const Partition& lambda) {
  return perm_of_word(k, word_of_partition(k, lambda));
}

namespace {

bool bruhat_rec(const AffinePerm& u, const AffinePerm& w, int lu, int lw,
                std::map<std::pair<AffinePerm, AffinePerm>, bool>* memo) {
  if (lu > lw) return false;
  if (lw == 0) return u == w;
  if (lu == lw) return u == w;
  if (memo) {
    auto it = memo->find({u, w});
    if (it != memo->end()) return it->second;
  }
  const AffinePerm winv = w.inverse();
  int i = 0;
  while (!winv.has_right_descent(i)) ++i;
  AffinePerm sw = w.simple_times(i);
  bool result;
  if (u.inverse().has_right_descent(i))
    result = bruhat_rec(u.simple_times(i), sw, lu - 1, lw - 1, memo);
  else
    result = bruhat_rec(u, sw, lu, lw - 1, memo);
  if (memo) memo->emplace(std::make_pair(u, w), result);
  return result;
}

}  // namespace

bool bruhat_leq(const AffinePerm& u, const AffinePerm& w) {
  if (u.n() != w.n()) throw MismatchedRank("Bruhat comparison across ranks");
  return bruhat_rec(u, w, u.length(), w.length(), nullptr);
}

bool BruhatOracle::leq(const AffinePerm& u, const AffinePerm& w) {
  if (u.n() != w.n()) throw MismatchedRank("Bruhat comparison across ranks");
  std::lock_guard<std::mutex> lock(mu_);
  return bruhat_rec(u, w, u.length(), w.length(), &memo_);
}

SignedHecke hecke_times(int i, const SignedHecke& x) {
  if (x.is_zero()) return x;
  AffinePerm s = x.perm.simple_times(i);
  if (s.length() > x.perm.length()) return SignedHecke::basis(s, x.sign);
  return SignedHecke::basis(x.perm, -x.sign);
}

SignedHecke hecke_product(const Word& word, const SignedHecke& start) {
  SignedHecke x = start;
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = hecke_times(*it, x);
  return x;
}

SignedHecke hecke_act_grassmannian(int i, const SignedHecke& x) {
  if (x.is_zero()) return x;
  AffinePerm s = x.perm.simple_times(i);
  if (s.length() < x.perm.length()) return SignedHecke::basis(x.perm, -x.sign);
  if (!s.is_grassmannian()) return SignedHecke::zero();
  return SignedHecke::basis(s, x.sign);
}

std::vector<int> hook_lengths_row(const Partition& shape, int r) {
  std::vector<int> out;
  const Partition conj = shape.conjugate();
  for (int c = 1; c <= shape[r]; ++c) out.push_back(shape[r] - c + conj[c] - r + 1);
  return out;
}

bool is_core(int kplus1, const Partition& shape) {
  for (int r = 1; r <= static_cast<int>(shape.length()); ++r)
    for (int h : hook_lengths_row(shape, r))
      if (h == kplus1) return false;
  return true;
}

Core::Core(int kplus1, Partition shape) : n_(kplus1), shape_(std::move(shape)) {
  if (n_ < 1) throw NotACore("kplus1 must be positive");
  if (!is_core(n_, shape_)) throw NotACore(shape_.str() + " has a hook of length " + std::to_string(n_));
}

std::vector<int> Core::addable_rows(int i) const {
  std::vector<int> out;
  const int len = static_cast<int>(shape_.length());
  for (int r = 1; r <= len + 1; ++r)
    if ((r == 1 || shape_[r - 1] > shape_[r]) && residue_of_cell(r, shape_[r] + 1) == mod(i, n_))
      out.push_back(r);
  return out;
}

std::vector<int> Core::removable_rows(int i) const {
  std::vector<int> out;
  const int len = static_cast<int>(shape_.length());
  for (int r = 1; r <= len; ++r)
    if (shape_[r + 1] < shape_[r] && residue_of_cell(r, shape_[r]) == mod(i, n_)) out.push_back(r);
  return out;
}

Core Core::add_corners(int i) const {
  std::vector<int> parts = shape_.parts();
  for (int r : addable_rows(i)) {
    if (r > static_cast<int>(parts.size())) parts.push_back(0);
    ++parts[r - 1];
  }
  return Core(n_, Partition(parts));
}

Core Core::remove_corners(int i) const {
  std::vector<int> parts = shape_.parts();
  for (int r : removable_rows(i)) --parts[r - 1];
  return Core(n_, Partition(parts));
}

Core core_of_word(int k, const Word& word) {
  Core c(k + 1, Partition());
  for (auto it = word.rbegin(); it != word.rend(); ++it) c = c.add_corners(*it);
  return c;
}

Core core_of(int k, const Partition& lambda) {
  return core_of_word(k, word_of_partition(k, lambda));
}

Partition partition_of(const Core& core) {
  const int k = core.kplus1() - 1;
  std::vector<int> parts;
  for (int r = 1; r <= static_cast<int>(core.shape().length()); ++r) {
    int count = 0;
    for (int h : hook_lengths_row(core.shape(), r))
      if (h <= k) ++count;
    parts.push_back(count);
  }
  return Partition::from_unsorted(parts);
}

Core core_of_perm(const AffinePerm& w) {
  if (!w.is_grassmannian()) throw InvalidWeight(w.str() + " is not Grassmannian");
  return core_of_word(w.k(), w.reduced_word());
}

Partition partition_of_perm(const AffinePerm& w) { return partition_of(core_of_perm(w)); }

Word cyclic_word(int k, std::vector<int> letters, Cyclic direction) {
  const int n = k + 1;
  std::set<int> a;
  for (int x : letters) a.insert(mod(x, n));
  if (static_cast<int>(a.size()) == n) throw FullSupport("cyclic word needs a missing letter");
  int gap = 0;
  while (a.count(gap)) ++gap;
  Word out;
  for (int t = 1; t < n; ++t)
    if (a.count(mod(gap + t, n))) out.push_back(mod(gap + t, n));
  if (direction == Cyclic::Decreasing) std::reverse(out.begin(), out.end());
  return out;
}

std::vector<Word> enumerate_cyclic(int k, int r, Cyclic direction) {
  std::vector<Word> out;
  const int n = k + 1;
  if (r < 0 || r > k) return out;
  std::vector<int> pick(n, 0);
  std::fill(pick.begin(), pick.begin() + r, 1);
  do {
    std::vector<int> letters;
    for (int i = 0; i < n; ++i)
      if (pick[i]) letters.push_back(i);
    out.push_back(cyclic_word(k, letters, direction));
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return out;
}

std::vector<int> rm(int k, const std::vector<int>& set) {
  std::vector<int> out;
  for (int s : set) out.push_back(mod(-s, k + 1));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> rm_inverse(int ell, int k, const std::vector<int>& residues) {
  const int n = k + 1;
  std::set<int> r;
  for (int x : residues) r.insert(mod(x, n));
  int b = 0;
  while (b < n && r.count(mod(-(ell + b + 1), n))) ++b;
  std::vector<int> out;
  for (int i = 1; i <= b; ++i) out.push_back(ell + i);
  for (int j = 1; j <= n - b; ++j)
    if (r.count(mod(-(ell + b + j), n))) out.push_back(ell + b + j - n);
  std::sort(out.begin(), out.end());
  return out;
}

Word tau(int k, const Word& word) {
  Word out;
  for (int i : word) out.push_back(mod(k + 1 - i, k + 1));
  return out;
}

Partition k_conjugate(int k, const Partition& mu) {
  return partition_of(core_of_word(k, tau(k, word_of_partition(k, mu))));
}

Partition zeta(int k, const FinitePerm& w) {
  const int n = k + 1;
  if (static_cast<int>(w.size()) != n) throw MismatchedRank("permutation must have k+1 entries");
  std::vector<int> v(n);
  for (int x = 0; x < n; ++x) v[x] = k + 2 - w[x];
  std::vector<int> cols;
  for (int i = 1; i <= k; ++i) {
    int inv = 0;
    for (int j = i + 1; j <= n; ++j)
      if (v[i - 1] > v[j - 1]) ++inv;
    const int m = k + 1 - i;
    cols.push_back(m * (m - 1) / 2 + inv);
  }
  return Partition::from_unsorted(cols).conjugate();
}

Partition irreducible_reduce(int k, const Partition& mu) {
  std::vector<int> parts;
  for (int i = k; i >= 1; --i) {
    int m = 0;
    for (int p : mu.parts())
      if (p == i) ++m;
    m %= (k + 1 - i);
    for (int t = 0; t < m; ++t) parts.push_back(i);
  }
  for (int p : mu.parts())
    if (p > k) throw NotKBounded(mu.str() + " is not k-bounded");
  return Partition(parts);
}

Partition theta(int k, const FinitePerm& w) { return irreducible_reduce(k, zeta(k, w)); }

std::vector<FinitePerm> all_finite_perms(int n) {
  std::vector<FinitePerm> out;
  FinitePerm p(n);
  std::iota(p.begin(), p.end(), 1);
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::vector<int> finite_descents(const FinitePerm& w) {
  std::vector<int> out;
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i - 1] > w[i]) out.push_back(static_cast<int>(i));
  return out;
}

}  // namespace katalan
