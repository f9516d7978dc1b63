#include "gwf/multisegments.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "gwf/error.hpp"

namespace gwf {

Segment::Segment(CuspidalLine l, Rational s, int len) : line(std::move(l)), start(s), length(len) {
  if (length < 1) throw DomainError("segment length must be positive");
  if (line.dim < 1) throw DomainError("cuspidal dimension must be positive");
}

Segment::Segment(Rational s, Rational e) : start(s) {
  Rational len = e - s + Rational(1);
  if (!is_integer(len) || len.numerator() < 1)
    throw DomainError("segment endpoints " + to_string(s) + ", " + to_string(e) +
                      " must differ by a nonnegative integer");
  length = static_cast<int>(len.numerator());
}

bool Segment::contains(const Rational& p) const {
  return p >= start && p <= end() && is_integer(p - start);
}

std::strong_ordering operator<=>(const Segment& a, const Segment& b) {
  if (auto c = a.line <=> b.line; c != 0) return c;
  if (a.start != b.start) return a.start < b.start ? std::strong_ordering::less : std::strong_ordering::greater;
  return a.length <=> b.length;
}

Multisegment::Multisegment(std::initializer_list<Segment> segs) : Multisegment(std::vector<Segment>(segs)) {}

Multisegment::Multisegment(std::vector<Segment> segs) : segs_(std::move(segs)) {
  std::sort(segs_.begin(), segs_.end());
}

int Multisegment::degree() const {
  int n = 0;
  for (const auto& s : segs_) n += s.line.dim * s.length;
  return n;
}

int Multisegment::total_length() const {
  int n = 0;
  for (const auto& s : segs_) n += s.length;
  return n;
}

std::vector<CuspidalLine> Multisegment::lines() const {
  std::vector<CuspidalLine> out;
  for (const auto& s : segs_)
    if (out.empty() || out.back() != s.line) out.push_back(s.line);
  return out;
}

Multisegment Multisegment::restricted_to(const CuspidalLine& line) const {
  std::vector<Segment> out;
  for (const auto& s : segs_)
    if (s.line == line) out.push_back(s);
  return Multisegment(std::move(out));
}

SupportMultiset support(const Multisegment& m) {
  SupportMultiset s;
  for (const auto& seg : m.segments())
    for (int k = 0; k < seg.length; ++k) ++s[{seg.line, seg.start + Rational(k)}];
  return s;
}

SupportMultiset make_support(std::initializer_list<std::pair<Rational, int>> pts) {
  SupportMultiset s;
  for (const auto& [p, c] : pts) {
    if (c < 1) throw DomainError("support multiplicities must be positive");
    s[{CuspidalLine::trivial(), p}] += c;
  }
  return s;
}

bool precedes(const Segment& d1, const Segment& d2) {
  if (d1.line != d2.line || !is_integer(d2.start - d1.start)) return false;
  return d2.start > d1.start && d2.end() > d1.end() && d2.start <= d1.end() + Rational(1);
}

bool linked(const Segment& a, const Segment& b) { return precedes(a, b) || precedes(b, a); }

std::vector<Segment> standard_order(const Multisegment& m) {
  std::vector<Segment> out = m.segments();
  std::stable_sort(out.begin(), out.end(), [](const Segment& a, const Segment& b) {
    if (a.start != b.start) return a.start > b.start;
    return a.end() > b.end();
  });
  return out;
}

/*
  Each round builds a chain Δ_1, Δ_2, ... : Δ_1 ends at the largest end b
  (shortest such), and Δ_{k+1} ends one step before Δ_k and precedes it
  (shortest such). The round emits [end(Δ_last), b] and shortens each chain
  member by its last point.
*/
Multisegment mw_dual(const Multisegment& m) {
  if (m.lines().size() > 1) throw DomainError("mw_dual needs a multisegment on a single cuspidal line");
  std::vector<Segment> work = m.segments();
  std::vector<Segment> dual;
  while (!work.empty()) {
    std::size_t first = 0;
    for (std::size_t i = 1; i < work.size(); ++i) {
      const auto& c = work[i];
      const auto& f = work[first];
      if (c.end() > f.end() || (c.end() == f.end() && c.start > f.start)) first = i;
    }
    const Rational top = work[first].end();
    std::vector<std::size_t> chain{first};
    for (;;) {
      const Segment& last = work[chain.back()];
      const Rational want = last.end() - Rational(1);
      std::size_t best = work.size();
      for (std::size_t i = 0; i < work.size(); ++i) {
        const auto& c = work[i];
        if (c.end() != want || c.start >= last.start) continue;
        if (best == work.size() || c.start > work[best].start) best = i;
      }
      if (best == work.size()) break;
      chain.push_back(best);
    }
    const Rational bottom = work[chain.back()].end();
    dual.emplace_back(work[first].line, bottom, static_cast<int>((top - bottom).numerator()) + 1);
    for (std::size_t i : chain) work[i].length -= 1;
    work.erase(std::remove_if(work.begin(), work.end(), [](const Segment& s) { return s.length == 0; }),
               work.end());
  }
  return Multisegment(std::move(dual));
}

Multisegment mw_dual_all_lines(const Multisegment& m) {
  std::vector<Segment> out;
  for (const auto& line : m.lines()) {
    auto d = mw_dual(m.restricted_to(line));
    out.insert(out.end(), d.segments().begin(), d.segments().end());
  }
  return Multisegment(std::move(out));
}

Partition lengths_partition(const Multisegment& m) {
  std::vector<int> lens;
  for (const auto& s : m.segments()) lens.push_back(s.length);
  std::sort(lens.begin(), lens.end(), std::greater<>());
  return Partition(std::move(lens));
}

int rank_function(const Multisegment& m, const CuspidalLine& line, const Rational& i, const Rational& j) {
  int c = 0;
  for (const auto& s : m.segments())
    if (s.line == line && s.contains(i) && s.contains(j)) ++c;
  return c;
}

int rank_function(const Multisegment& m, const Rational& i, const Rational& j) {
  return rank_function(m, CuspidalLine::trivial(), i, j);
}

bool closure_leq_graded(const Multisegment& a, const Multisegment& b) {
  SupportMultiset sa = support(a);
  if (sa != support(b)) throw DomainError("closure order compares multisegments with equal supports");
  std::vector<Point> pts;
  for (const auto& [p, c] : sa) pts.push_back(p);
  for (std::size_t x = 0; x < pts.size(); ++x)
    for (std::size_t y = x + 1; y < pts.size(); ++y) {
      const auto& [li, i] = pts[x];
      const auto& [lj, j] = pts[y];
      if (li != lj || !is_integer(j - i)) continue;
      if (rank_function(a, li, i, j) > rank_function(b, li, i, j)) return false;
    }
  return true;
}

std::vector<Multisegment> enumerate_multisegments(const SupportMultiset& s) {
  {
    std::set<CuspidalLine> lines;
    for (const auto& [p, c] : s) {
      if (c < 1) throw DomainError("support multiplicities must be positive");
      lines.insert(p.first);
    }
    if (lines.size() > 1) throw DomainError("enumeration needs a support on a single line");
  }
  std::vector<Multisegment> out;
  std::vector<Segment> chosen;
  SupportMultiset rest = s;

  // Peel segments off the smallest remaining point; lengths chosen at one
  // starting point are non-increasing so each multiset appears once.
  std::function<void(int)> rec = [&](int max_len) {
    auto it = rest.begin();
    if (it == rest.end()) {
      out.emplace_back(chosen);
      return;
    }
    const Point start = it->first;
    int reach = 0;
    while (reach < max_len) {
      auto q = rest.find({start.first, start.second + Rational(reach)});
      if (q == rest.end()) break;
      ++reach;
    }
    for (int len = reach; len >= 1; --len) {
      for (int k = 0; k < len; ++k) {
        auto q = rest.find({start.first, start.second + Rational(k)});
        if (--q->second == 0) rest.erase(q);
      }
      chosen.emplace_back(start.first, start.second, len);
      bool same_start = rest.count(start) > 0;
      rec(same_start ? len : 1 << 30);
      chosen.pop_back();
      for (int k = 0; k < len; ++k) ++rest[{start.first, start.second + Rational(k)}];
    }
  };
  rec(1 << 30);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_generic(const Multisegment& m) {
  const auto& s = m.segments();
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (linked(s[i], s[j])) return false;
  return true;
}

std::vector<Multisegment> interaction_blocks(const Multisegment& m) {
  std::map<std::pair<CuspidalLine, Rational>, std::vector<Segment>> groups;
  for (const auto& s : m.segments()) groups[{s.line, fractional_part(s.start)}].push_back(s);
  std::vector<Multisegment> out;
  for (auto& [key, segs] : groups) out.emplace_back(std::move(segs));
  return out;
}

}  // namespace gwf
