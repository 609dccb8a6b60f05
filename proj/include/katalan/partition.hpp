#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <string>
#include <vector>

namespace katalan {

// An integer vector whose length is part of its identity. Entries may be negative.
using Weight = std::vector<int>;

// Weakly decreasing positive parts. Zero parts are dropped on construction.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  // Throws InvalidWeight unless parts are weakly decreasing and nonnegative.
  explicit Partition(std::vector<int> parts);

  // Sorts arbitrary nonnegative parts (used for unions and h-monomial products).
  static Partition from_unsorted(std::vector<int> parts);
  static Partition rectangle(int rows, int cols);

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int size() const noexcept { return size_; }
  // Zero beyond the length; index is 1-based.
  int operator[](std::size_t i) const noexcept {
    return (i >= 1 && i <= parts_.size()) ? parts_[i - 1] : 0;
  }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }

  Partition conjugate() const;
  bool contains(const Partition& mu) const;  // mu ⊆ this
  Partition union_with(const Partition& other) const;
  // Padded with zeros to `ell` entries; throws if length() > ell.
  Weight as_weight(std::size_t ell) const;
  Weight as_weight() const { return parts_; }

  std::string str() const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.parts_ == b.parts_;
  }
  friend bool operator!=(const Partition& a, const Partition& b) { return !(a == b); }
  // Lexicographic on parts (map key order).
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.parts_ < b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

// Canonical term order: increasing size, then reverse lexicographic.
bool graded_revlex_less(const Partition& a, const Partition& b);

struct PartitionHash {
  std::size_t operator()(const Partition& p) const noexcept;
};

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept;
};

// Strips trailing zeros; throws InvalidWeight if the weight is not a partition.
Partition partition_of_weight(const Weight& w);
bool is_partition_weight(const Weight& w);

// All partitions with parts <= max_part, at most max_len parts, size <= max_size,
// in (size, reverse-lex) order. Negative bounds mean "unbounded" for part / length.
std::vector<Partition> partitions_up_to(int max_size, int max_part = -1, int max_len = -1);
std::vector<Partition> partitions_of(int n, int max_part = -1, int max_len = -1);

std::string weight_str(const Weight& w);

}  // namespace katalan
