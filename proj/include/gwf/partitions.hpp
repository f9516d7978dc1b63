#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace gwf {

/*
  A partition is a weakly decreasing sequence of positive integers, stored
  without trailing zeros. The empty partition (n = 0) is allowed.
*/
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }  // |λ|
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// Part i (0-based), zero past the end.
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

  /// Number of occurrences of the part value v.
  int multiplicity(int v) const;

  std::string to_string() const;  // "(3,2,1)"

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

/// A tuple of positive integers in any order.
class Composition {
 public:
  Composition() = default;
  Composition(std::initializer_list<int> parts);
  explicit Composition(std::vector<int> parts);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return n_; }
  std::size_t length() const { return parts_.size(); }

  friend bool operator==(const Composition&, const Composition&) = default;

 private:
  std::vector<int> parts_;
  int n_ = 0;
};

Partition transpose(const Partition& lambda);

/// Dominance order; throws DomainError when |lambda| != |mu|.
bool dominance_leq(const Partition& lambda, const Partition& mu);

Partition sort_to_partition(const Composition& alpha);

/// Every part repeated m times.
Partition expand_multiplicity(const Partition& lambda, int m);

/// Multiset union of parts.
Partition concatenate(const Partition& a, const Partition& b);

/// Partitions of n in decreasing lexicographic order.
std::vector<Partition> partitions_of(int n);

/// Compositions of n (all 2^(n-1) of them for n >= 1).
std::vector<Composition> compositions_of(int n);

}  // namespace gwf
