#pragma once

#include <string>
#include <vector>

#include "gwf/multisegments.hpp"
#include "gwf/partitions.hpp"

namespace gwf {

/*
  zelevinsky: m labels the unique irreducible submodule ⟨m⟩ of the
  Zelevinsky standard module. langlands: m labels the Langlands quotient,
  each segment standing for a twisted generalized Steinberg. The two
  readings of one multisegment differ by the Aubert–Zelevinsky involution.
*/
enum class Convention { zelevinsky, langlands };

std::string to_string(Convention c);
Convention parse_convention(const std::string& s);

struct RepLabel {
  Multisegment m;
  Convention convention = Convention::langlands;

  friend bool operator==(const RepLabel&, const RepLabel&) = default;
};

struct WDSummand {
  CuspidalLine cuspidal;
  Rational start;
  int length = 1;

  friend bool operator==(const WDSummand&, const WDSummand&) = default;
  friend auto operator<=>(const WDSummand& a, const WDSummand& b) {
    if (auto c = a.cuspidal <=> b.cuspidal; c != 0) return c;
    if (a.start != b.start) return a.start < b.start ? std::strong_ordering::less : std::strong_ordering::greater;
    return a.length <=> b.length;
  }
};

/// Multiset of summands σ ⊗ Sp(k) twisted by ν^a; kept sorted.
struct WeilDeligneParameter {
  std::vector<WDSummand> summands;
  int dimension() const;
  friend bool operator==(const WeilDeligneParameter&, const WeilDeligneParameter&) = default;
};

struct InertiaEntry {
  CuspidalLine line;
  int count = 0;
  friend bool operator==(const InertiaEntry&, const InertiaEntry&) = default;
};

/// Bernstein inertia class: how many copies of each cuspidal (up to twist).
struct InertiaClass {
  std::vector<InertiaEntry> entries;
  friend bool operator==(const InertiaClass&, const InertiaClass&) = default;
};

RepLabel az(const RepLabel& label);
RepLabel convert(const RepLabel& label);

/// The same representation written in the given convention.
RepLabel in_convention(const RepLabel& label, Convention c);

WeilDeligneParameter parameter_of(const RepLabel& label);

/// Jordan type of N: a summand of dimension m and length k gives m blocks of size k.
Partition nilpotent_partition(const WeilDeligneParameter& p);

Partition o_dual(const RepLabel& label);

/// Wavefront orbit of the representation: transpose of o_dual of its AZ dual.
Partition wavefront(const RepLabel& label);

InertiaClass inertia_class(const Multisegment& m);

}  // namespace gwf
