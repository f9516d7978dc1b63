#pragma once

#include <string>
#include <vector>

#include "gwf/partitions.hpp"

namespace gwf {

enum class LieType { A, D };

/// Distinguishes the two SO(2k)-orbits sharing a very even partition.
enum class Numeral { None, I, II };

Numeral opposite(Numeral x);

/*
  Nilpotent orbit of gl_k (type A(k)) or so_2k (type D(k)). Type D labels
  carry a numeral exactly when the partition is very even. The numerals are
  opaque tags: nothing ties I to a particular orbit representative.
*/
class SimpleOrbitLabel {
 public:
  SimpleOrbitLabel(LieType type, int rank, Partition partition, Numeral numeral = Numeral::None);

  static SimpleOrbitLabel type_a(Partition p);
  static SimpleOrbitLabel type_d(int k, Partition p, Numeral numeral = Numeral::None);

  LieType lie_type() const { return type_; }
  int rank() const { return rank_; }  // k in A(k) / D(k)
  const Partition& partition() const { return partition_; }
  Numeral numeral() const { return numeral_; }

  std::string to_string() const;  // "(2,2) I"

  friend bool operator==(const SimpleOrbitLabel&, const SimpleOrbitLabel&) = default;

 private:
  LieType type_;
  int rank_;
  Partition partition_;
  Numeral numeral_;
};

struct ProductOrbitLabel {
  std::vector<SimpleOrbitLabel> factors;
  friend bool operator==(const ProductOrbitLabel&, const ProductOrbitLabel&) = default;
};

/*
  An outer automorphism of a product of simple factors: factor i of the
  result is flip[i] applied to factor permutation[i] of the input.
*/
struct OuterAutomorphism {
  std::vector<int> permutation;
  std::vector<bool> flip;

  static OuterAutomorphism diagram_flip(std::size_t factors = 1);
  static OuterAutomorphism swap_pair(bool flip_first = false, bool flip_second = false);
};

bool is_very_even(const Partition& p);
bool is_valid_D(const Partition& p, int k);

/// Largest D-valid partition below lambda in dominance order.
Partition collapse_D(const Partition& lambda);

Partition spaltenstein_A(const Partition& lambda);
SimpleOrbitLabel spaltenstein_D(const SimpleOrbitLabel& o);

/// Duality on a single factor of either type.
SimpleOrbitLabel spaltenstein(const SimpleOrbitLabel& o);
ProductOrbitLabel spaltenstein(const ProductOrbitLabel& o);

/// All labels of A(k) or D(k), partitions in decreasing lexicographic order.
std::vector<SimpleOrbitLabel> all_labels(LieType type, int k);

/// Membership in the image of the duality map, found by enumerating its domain.
bool is_special(const SimpleOrbitLabel& o);

SimpleOrbitLabel outer_action(bool flip, const SimpleOrbitLabel& o);
ProductOrbitLabel outer_action(const OuterAutomorphism& tau, const ProductOrbitLabel& o);

/// Closure order; labels of different types are an error.
bool closure_leq(const SimpleOrbitLabel& a, const SimpleOrbitLabel& b);

}  // namespace gwf
