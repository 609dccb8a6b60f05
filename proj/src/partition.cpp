#include "katalan/partition.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <boost/container_hash/hash.hpp>

#include "katalan/errors.hpp"

namespace katalan {

namespace {

int checked_size(const std::vector<int>& parts) {
  return std::accumulate(parts.begin(), parts.end(), 0);
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] < 0 || (i + 1 < parts.size() && parts[i] < parts[i + 1])) {
      throw InvalidWeight("not a partition: " + weight_str(parts));
    }
  }
  while (!parts.empty() && parts.back() == 0) parts.pop_back();
  parts_ = std::move(parts);
  size_ = checked_size(parts_);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::sort(parts.begin(), parts.end(), std::greater<int>());
  return Partition(std::move(parts));
}

Partition Partition::rectangle(int rows, int cols) {
  if (rows <= 0 || cols <= 0) return Partition();
  return Partition(std::vector<int>(rows, cols));
}

Partition Partition::conjugate() const {
  std::vector<int> c(largest(), 0);
  for (int p : parts_) {
    for (int j = 0; j < p; ++j) ++c[j];
  }
  return Partition(std::move(c));
}

bool Partition::contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (std::size_t i = 0; i < mu.length(); ++i) {
    if (mu.parts_[i] > parts_[i]) return false;
  }
  return true;
}

Partition Partition::union_with(const Partition& other) const {
  std::vector<int> merged(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             merged.begin(), std::greater<int>());
  Partition out;
  out.parts_ = std::move(merged);
  out.size_ = size_ + other.size_;
  return out;
}

Weight Partition::as_weight(std::size_t ell) const {
  if (length() > ell) {
    throw MismatchedLength("partition " + str() + " longer than " + std::to_string(ell));
  }
  Weight w(ell, 0);
  std::copy(parts_.begin(), parts_.end(), w.begin());
  return w;
}

std::string Partition::str() const { return weight_str(parts_); }

bool graded_revlex_less(const Partition& a, const Partition& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return b.parts() < a.parts();
}

std::size_t PartitionHash::operator()(const Partition& p) const noexcept {
  return boost::hash_range(p.parts().begin(), p.parts().end());
}

std::size_t WeightHash::operator()(const Weight& w) const noexcept {
  std::size_t seed = w.size();
  boost::hash_range(seed, w.begin(), w.end());
  return seed;
}

bool is_partition_weight(const Weight& w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0) return false;
    if (i + 1 < w.size() && w[i] < w[i + 1]) return false;
  }
  return true;
}

Partition partition_of_weight(const Weight& w) { return Partition(w); }

namespace {

void partitions_rec(int remaining, int max_part, int max_len, std::vector<int>& cur,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  if (max_len == 0) return;
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(remaining - p, p, max_len - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n, int max_part, int max_len) {
  std::vector<Partition> out;
  if (n < 0) return out;
  if (max_part < 0) max_part = n;
  if (max_len < 0) max_len = n;
  std::vector<int> cur;
  partitions_rec(n, max_part, max_len, cur, out);
  return out;
}

std::vector<Partition> partitions_up_to(int max_size, int max_part, int max_len) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_size; ++n) {
    auto ps = partitions_of(n, max_part, max_len);
    out.insert(out.end(), ps.begin(), ps.end());
  }
  return out;
}

std::string weight_str(const Weight& w) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ',';
    os << w[i];
  }
  os << ')';
  return os.str();
}

}  // namespace katalan
