#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gwf/partitions.hpp"
#include "gwf/rational.hpp"

namespace gwf {

/*
  A cuspidal line {ν^a ρ}: an opaque id for ρ up to unramified twist, plus
  dim ρ. Points on a line are rational exponents a. Two points interact only
  when they differ by an integer.
*/
struct CuspidalLine {
  std::string id = "1";
  int dim = 1;

  static CuspidalLine trivial() { return {}; }

  friend bool operator==(const CuspidalLine&, const CuspidalLine&) = default;
  friend auto operator<=>(const CuspidalLine&, const CuspidalLine&) = default;
};

/// The segment [start, start + length - 1] on a line.
struct Segment {
  CuspidalLine line;
  Rational start;
  int length = 1;

  Segment() = default;
  Segment(CuspidalLine l, Rational s, int len);
  Segment(Rational s, Rational e);  // trivial line, endpoints inclusive

  Rational end() const { return start + Rational(length - 1); }
  bool contains(const Rational& p) const;

  friend bool operator==(const Segment& a, const Segment& b) {
    return a.line == b.line && a.start == b.start && a.length == b.length;
  }
  friend std::strong_ordering operator<=>(const Segment& a, const Segment& b);
};

/// A multiset of segments, kept sorted so that equality is multiset equality.
class Multisegment {
 public:
  Multisegment() = default;
  Multisegment(std::initializer_list<Segment> segs);
  explicit Multisegment(std::vector<Segment> segs);

  const std::vector<Segment>& segments() const { return segs_; }
  bool empty() const { return segs_.empty(); }
  std::size_t count() const { return segs_.size(); }

  /// Σ dim·length, the n of GL_n.
  int degree() const;

  /// Σ length, ignoring cuspidal dimensions.
  int total_length() const;

  std::vector<CuspidalLine> lines() const;
  Multisegment restricted_to(const CuspidalLine& line) const;

  friend bool operator==(const Multisegment&, const Multisegment&) = default;
  friend auto operator<=>(const Multisegment& a, const Multisegment& b) { return a.segs_ <=> b.segs_; }

 private:
  std::vector<Segment> segs_;
};

using Point = std::pair<CuspidalLine, Rational>;

struct PointLess {
  bool operator()(const Point& a, const Point& b) const {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  }
};

/// Point multiplicities; every stored multiplicity is at least 1.
using SupportMultiset = std::map<Point, int, PointLess>;

SupportMultiset support(const Multisegment& m);

/// Support on the trivial line from "point:multiplicity" pairs.
SupportMultiset make_support(std::initializer_list<std::pair<Rational, int>> pts);

/// d1 precedes d2: same line, d2 starts and ends later, and the union is a segment.
bool precedes(const Segment& d1, const Segment& d2);
bool linked(const Segment& a, const Segment& b);

/// Ordering in which no segment precedes a later one.
std::vector<Segment> standard_order(const Multisegment& m);

/// The Zelevinsky (Aubert) dual by the Mœglin–Waldspurger algorithm; m on one line.
Multisegment mw_dual(const Multisegment& m);

/// Same as mw_dual, one line at a time.
Multisegment mw_dual_all_lines(const Multisegment& m);

Partition lengths_partition(const Multisegment& m);

/// Number of segments containing [i, j].
int rank_function(const Multisegment& m, const CuspidalLine& line, const Rational& i, const Rational& j);
int rank_function(const Multisegment& m, const Rational& i, const Rational& j);

/// Graded orbit closure order via rank conditions; supports must agree.
bool closure_leq_graded(const Multisegment& a, const Multisegment& b);

/// Every multisegment with exactly this support, on one line.
std::vector<Multisegment> enumerate_multisegments(const SupportMultiset& s);

/// No two segments linked.
bool is_generic(const Multisegment& m);

/// Splits m into pieces that cannot interact: one per (line, starts mod 1).
std::vector<Multisegment> interaction_blocks(const Multisegment& m);

}  // namespace gwf
