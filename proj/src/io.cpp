#include "gwf/io.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

#include "gwf/error.hpp"

namespace gwf::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    auto next = s.find(sep, pos);
    out.push_back(trim(s.substr(pos, next - pos)));
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  return out;
}

std::string_view strip_brackets(std::string_view s) {
  s = trim(s);
  if (s.size() >= 2 && ((s.front() == '(' && s.back() == ')') || (s.front() == '[' && s.back() == ']')))
    s = trim(s.substr(1, s.size() - 2));
  return s;
}

int parse_int(std::string_view t) {
  Rational r = parse_rational(trim(t));
  if (!is_integer(r)) throw ParseError("expected an integer, got '" + std::string(t) + "'");
  return static_cast<int>(r.numerator());
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  text = strip_brackets(text);
  std::vector<int> out;
  if (text.empty()) return out;
  char sep = text.find('+') != std::string_view::npos ? '+' : ',';
  for (auto item : split(text, sep)) out.push_back(parse_int(item));
  return out;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  text = strip_brackets(text);
  std::vector<Rational> out;
  if (text.empty()) return out;
  for (auto item : split(text, ',')) out.push_back(parse_rational(item));
  return out;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts = parse_int_list(text);
  for (int p : parts)
    if (p < 1) throw ParseError("partition parts must be positive");
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

namespace {

CuspidalLine parse_line_prefix(std::string_view p) {
  p = trim(p);
  if (p.substr(0, 3) != "rho") throw ParseError("line prefix must look like rho<id>[<dim>]");
  p.remove_prefix(3);
  auto lb = p.find('['), rb = p.find(']');
  if (lb == std::string_view::npos || rb == std::string_view::npos || rb < lb || rb + 1 != p.size())
    throw ParseError("line prefix must look like rho<id>[<dim>]");
  CuspidalLine line;
  line.id = std::string(trim(p.substr(0, lb)));
  if (line.id.empty()) throw ParseError("empty cuspidal id");
  line.dim = parse_int(p.substr(lb + 1, rb - lb - 1));
  if (line.dim < 1) throw ParseError("cuspidal dimension must be positive");
  return line;
}

}  // namespace

Multisegment parse_multisegment(std::string_view text, const CuspidalLine& default_line) {
  std::vector<Segment> segs;
  text = trim(text);
  if (text.empty() || text == "{}" || text == "0") return Multisegment();
  for (auto group : split(text, ';')) {
    if (group.empty()) continue;
    CuspidalLine line = default_line;
    if (auto colon = group.find(':'); colon != std::string_view::npos) {
      line = parse_line_prefix(group.substr(0, colon));
      group = trim(group.substr(colon + 1));
    }
    for (auto item : split(group, '+')) {
      if (item.size() < 2 || item.front() != '(' || item.back() != ')')
        throw ParseError("segment must be written (a,b) or (a), got '" + std::string(item) + "'");
      auto ends = split(item.substr(1, item.size() - 2), ',');
      if (ends.size() > 2) throw ParseError("segment has too many endpoints: '" + std::string(item) + "'");
      Rational a = parse_rational(ends[0]);
      Rational b = ends.size() == 2 ? parse_rational(ends[1]) : a;
      Rational len = b - a + Rational(1);
      if (!is_integer(len) || len.numerator() < 1)
        throw ParseError("segment (" + to_string(a) + "," + to_string(b) + ") is empty or off-lattice");
      segs.emplace_back(line, a, static_cast<int>(len.numerator()));
    }
  }
  return Multisegment(std::move(segs));
}

std::string format_line(const CuspidalLine& line) {
  return "rho" + line.id + "[" + std::to_string(line.dim) + "]";
}

std::string format_multisegment(const Multisegment& m) {
  if (m.empty()) return "{}";
  const auto lines = m.lines();
  const bool bare = lines.size() == 1 && lines.front() == CuspidalLine::trivial();
  std::string out;
  for (const auto& line : lines) {
    if (!out.empty()) out += ";";
    if (!bare) out += format_line(line) + ":";
    bool first = true;
    for (const auto& s : m.restricted_to(line).segments()) {
      if (!first) out += "+";
      first = false;
      out += "(" + to_string(s.start) + "," + to_string(s.end()) + ")";
    }
  }
  return out;
}

SupportMultiset parse_support(std::string_view text, const CuspidalLine& line) {
  SupportMultiset s;
  text = strip_brackets(text);
  if (text.empty()) return s;
  for (auto item : split(text, ',')) {
    auto colon = item.find(':');
    Rational p = parse_rational(item.substr(0, colon));
    int c = colon == std::string_view::npos ? 1 : parse_int(item.substr(colon + 1));
    if (c < 1) throw ParseError("support multiplicities must be positive");
    s[{line, p}] += c;
  }
  return s;
}

std::string format_partition(const Partition& p) { return p.to_string(); }

std::string format_expansion(const ExpansionVector& v) {
  std::string out;
  for (const auto& [p, c] : v) out += p.to_string() + ":" + std::to_string(c) + "\n";
  return out;
}

std::string format_parameter(const WeilDeligneParameter& p) {
  std::string out;
  for (const auto& s : p.summands) {
    if (!out.empty()) out += "+";
    out += "(" + std::to_string(s.cuspidal.dim) + "," + to_string(s.start) + "," + std::to_string(s.length) + ")";
  }
  return out.empty() ? "{}" : out;
}

std::string format_inertia(const InertiaClass& c) {
  std::string out;
  for (const auto& e : c.entries) {
    if (!out.empty()) out += "+";
    out += format_line(e.line) + "^" + std::to_string(e.count);
  }
  return out.empty() ? "{}" : out;
}

json to_json(const Partition& p) { return json(p.parts()); }

json to_json(const Rational& r) { return to_string(r); }

json to_json(const Multisegment& m) {
  json segs = json::array();
  for (const auto& s : m.segments())
    segs.push_back({{"line", s.line.id}, {"dim", s.line.dim}, {"start", to_json(s.start)}, {"end", to_json(s.end())}});
  return {{"segments", segs}};
}

json to_json(const RepLabel& l) { return {{"multisegment", to_json(l.m)}, {"convention", to_string(l.convention)}}; }

json to_json(const SimpleOrbitLabel& o) {
  json numeral = nullptr;
  if (o.numeral() == Numeral::I) numeral = "I";
  if (o.numeral() == Numeral::II) numeral = "II";
  return {{"type", o.lie_type() == LieType::A ? "A" : "D"},
          {"k", o.rank()},
          {"partition", to_json(o.partition())},
          {"numeral", numeral}};
}

json to_json(const WeilDeligneParameter& p) {
  json out = json::array();
  for (const auto& s : p.summands)
    out.push_back({{"line", s.cuspidal.id}, {"dim", s.cuspidal.dim}, {"start", to_json(s.start)}, {"length", s.length}});
  return {{"summands", out}, {"dimension", p.dimension()}};
}

json to_json(const InertiaClass& c) {
  json out = json::array();
  for (const auto& e : c.entries) out.push_back({{"line", e.line.id}, {"dim", e.line.dim}, {"count", e.count}});
  return out;
}

json to_json(const ExpansionVector& v) {
  json out = json::array();
  for (const auto& [p, c] : v) out.push_back({{"orbit", to_json(p)}, {"coefficient", c}});
  return out;
}

json to_json(const PureTypeDescriptor& d) {
  return {{"n", d.n}, {"m", d.m}, {"e", d.e}, {"f", d.f}, {"depth", to_json(d.depth)}, {"s", d.s_label}};
}

json to_json(const GammaOrbitLabel& g) { return {{"s", g.s_label}, {"partition", to_json(g.partition)}}; }

json to_json(const GammaExpansion& g) {
  json out = json::array();
  for (const auto& [label, scalar] : g)
    out.push_back({{"orbit", to_json(label)},
                   {"coefficient", {{"rational", to_json(scalar.rational)}, {"symbols", {"vol(J')/vol(J)", "dim(rho)"}}}}});
  return out;
}

Partition partition_from_json(const json& j) {
  try {
    std::vector<int> parts = j.get<std::vector<int>>();
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad partition JSON: ") + e.what());
  }
}

Rational rational_from_json(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw ParseError("rational must be an integer or a \"p/q\" string");
}

Multisegment multisegment_from_json(const json& j) {
  try {
    std::vector<Segment> segs;
    for (const auto& s : j.at("segments")) {
      CuspidalLine line{s.value("line", std::string("1")), s.value("dim", 1)};
      Rational a = rational_from_json(s.at("start"));
      Rational b = rational_from_json(s.at("end"));
      Rational len = b - a + Rational(1);
      if (!is_integer(len) || len.numerator() < 1) throw ParseError("empty or off-lattice segment in JSON");
      segs.emplace_back(line, a, static_cast<int>(len.numerator()));
    }
    return Multisegment(std::move(segs));
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad multisegment JSON: ") + e.what());
  }
}

RepLabel rep_label_from_json(const json& j) {
  try {
    return {multisegment_from_json(j.at("multisegment")), parse_convention(j.at("convention").get<std::string>())};
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad label JSON: ") + e.what());
  }
}

SimpleOrbitLabel orbit_from_json(const json& j) {
  try {
    std::string type = j.at("type").get<std::string>();
    int k = j.at("k").get<int>();
    Partition p = partition_from_json(j.at("partition"));
    Numeral x = Numeral::None;
    if (j.contains("numeral") && !j.at("numeral").is_null()) {
      std::string n = j.at("numeral").get<std::string>();
      if (n == "I")
        x = Numeral::I;
      else if (n == "II")
        x = Numeral::II;
      else
        throw ParseError("numeral must be I, II or null");
    }
    if (type == "A") return SimpleOrbitLabel(LieType::A, k, p, x);
    if (type == "D") return SimpleOrbitLabel(LieType::D, k, p, x);
    throw ParseError("orbit type must be A or D");
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad orbit JSON: ") + e.what());
  }
}

ExpansionVector expansion_from_json(const json& j) {
  try {
    ExpansionVector v;
    for (const auto& e : j) v[partition_from_json(e.at("orbit"))] = e.at("coefficient").get<long long>();
    return v;
  } catch (const json::exception& e) {
    throw ParseError(std::string("bad expansion JSON: ") + e.what());
  }
}

}  // namespace gwf::io
