#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gwf/character_expansion.hpp"
#include "gwf/langlands.hpp"
#include "gwf/multisegments.hpp"

namespace gwf {

/*
  A pure refined minimal K-type, recorded by the data that the reduction to
  GL_{n/m}(E) needs. e and f (ramification and residue degree of E/F),
  depth and the semisimple tag are carried as metadata only.
*/
struct PureTypeDescriptor {
  int n = 1;
  int m = 1;
  int e = 1;
  int f = 1;
  Rational depth{0};
  std::string s_label = "s";

  PureTypeDescriptor() = default;
  PureTypeDescriptor(int n_, int m_, int e_, int f_, Rational depth_ = Rational(0), std::string s = "s");

  /// e = 1, f = m.
  static PureTypeDescriptor unramified(int n, int m, std::string s = "s");

  int reduced_rank() const { return n / m; }
};

struct GammaOrbitLabel {
  std::string s_label;
  Partition partition;  // of n/m

  friend bool operator==(const GammaOrbitLabel&, const GammaOrbitLabel&) = default;
  friend auto operator<=>(const GammaOrbitLabel& a, const GammaOrbitLabel& b) {
    if (auto c = a.s_label <=> b.s_label; c != 0) return c;
    return b.partition <=> a.partition;  // decreasing partitions first
  }
};

/// rational · vol(J')/vol(J) · dim ϱ, the last two kept symbolic.
struct FormalScalar {
  Rational rational{0};

  std::string to_string() const;  // "-1·vol(J')/vol(J)·dim(ϱ)"
  friend bool operator==(const FormalScalar&, const FormalScalar&) = default;
};

using GammaExpansion = std::map<GammaOrbitLabel, FormalScalar>;

bool is_pure(const Multisegment& m);

/// Relabels the pure multisegment as a unipotent multisegment over E.
Multisegment reduce(const Multisegment& m, const PureTypeDescriptor& desc);

/// Γ-asymptotic wavefront of the Langlands label m: transpose of the nilpotent of AZ(π′).
GammaOrbitLabel gamma_wavefront(const Multisegment& m, const PureTypeDescriptor& desc);

GammaExpansion transfer_expansion(const ExpansionVector& reduced, const PureTypeDescriptor& desc);

bool az_reduce_commutes(const Multisegment& m, const PureTypeDescriptor& desc);

/// (HCH wavefront of π over F, Γ-wavefront over E).
std::pair<Partition, GammaOrbitLabel> hch_vs_gamma(const Multisegment& m, const PureTypeDescriptor& desc);

/// One tag per cuspidal line; invariant under unramified twists.
std::vector<std::string> gamma_of_inertia(const Multisegment& m);

}  // namespace gwf
