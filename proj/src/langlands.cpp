#include "gwf/langlands.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "gwf/error.hpp"

namespace gwf {

std::string to_string(Convention c) { return c == Convention::zelevinsky ? "zelevinsky" : "langlands"; }

Convention parse_convention(const std::string& s) {
  if (s == "zelevinsky" || s == "z") return Convention::zelevinsky;
  if (s == "langlands" || s == "l") return Convention::langlands;
  throw ParseError("unknown convention '" + s + "'");
}

int WeilDeligneParameter::dimension() const {
  int n = 0;
  for (const auto& s : summands) n += s.cuspidal.dim * s.length;
  return n;
}

RepLabel az(const RepLabel& label) { return {mw_dual_all_lines(label.m), label.convention}; }

RepLabel convert(const RepLabel& label) {
  Convention flipped = label.convention == Convention::zelevinsky ? Convention::langlands : Convention::zelevinsky;
  return {mw_dual_all_lines(label.m), flipped};
}

RepLabel in_convention(const RepLabel& label, Convention c) {
  return label.convention == c ? label : convert(label);
}

WeilDeligneParameter parameter_of(const RepLabel& label) {
  const RepLabel l = in_convention(label, Convention::langlands);
  WeilDeligneParameter p;
  for (const auto& s : l.m.segments()) p.summands.push_back({s.line, s.start, s.length});
  std::sort(p.summands.begin(), p.summands.end());
  return p;
}

Partition nilpotent_partition(const WeilDeligneParameter& p) {
  std::vector<int> parts;
  for (const auto& s : p.summands)
    for (int i = 0; i < s.cuspidal.dim; ++i) parts.push_back(s.length);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition o_dual(const RepLabel& label) { return nilpotent_partition(parameter_of(label)); }

Partition wavefront(const RepLabel& label) { return transpose(o_dual(az(label))); }

InertiaClass inertia_class(const Multisegment& m) {
  std::map<CuspidalLine, int> counts;
  for (const auto& s : m.segments()) counts[s.line] += s.length;
  InertiaClass c;
  for (const auto& [line, k] : counts) c.entries.push_back({line, k});
  return c;
}

}  // namespace gwf
