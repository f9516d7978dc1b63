#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "gwf/character_expansion.hpp"
#include "gwf/gamma_reduction.hpp"
#include "gwf/langlands.hpp"
#include "gwf/multisegments.hpp"
#include "gwf/nilpotent_orbits.hpp"
#include "gwf/partitions.hpp"

// Text and JSON forms used by the command-line tool.
namespace gwf::io {

using json = nlohmann::json;

/// "3+2+1", "3,2,1", "(3,2,1)" or "[3,2,1]"; parts in any order.
Partition parse_partition(std::string_view text);
std::vector<int> parse_int_list(std::string_view text);
std::vector<Rational> parse_rational_list(std::string_view text);

/*
  Multisegment grammar, one group per line separated by ';':
    rho<id>[<dim>]:(a,b)+(c,d)+...
  The prefix may be omitted for the trivial line rho1[1] (or for
  default_line when given). "(a)" abbreviates "(a,a)".
*/
Multisegment parse_multisegment(std::string_view text, const CuspidalLine& default_line = CuspidalLine::trivial());
std::string format_multisegment(const Multisegment& m);

/// "0:2,1:2" on the given line.
SupportMultiset parse_support(std::string_view text, const CuspidalLine& line = CuspidalLine::trivial());

std::string format_line(const CuspidalLine& line);  // "rho1[1]"
std::string format_partition(const Partition& p);    // "(3,2,1)"
std::string format_expansion(const ExpansionVector& v);
std::string format_parameter(const WeilDeligneParameter& p);
std::string format_inertia(const InertiaClass& c);

json to_json(const Partition& p);
json to_json(const Rational& r);
json to_json(const Multisegment& m);
json to_json(const RepLabel& l);
json to_json(const SimpleOrbitLabel& o);
json to_json(const WeilDeligneParameter& p);
json to_json(const InertiaClass& c);
json to_json(const ExpansionVector& v);
json to_json(const PureTypeDescriptor& d);
json to_json(const GammaOrbitLabel& g);
json to_json(const GammaExpansion& g);

Partition partition_from_json(const json& j);
Rational rational_from_json(const json& j);
Multisegment multisegment_from_json(const json& j);
RepLabel rep_label_from_json(const json& j);
SimpleOrbitLabel orbit_from_json(const json& j);
ExpansionVector expansion_from_json(const json& j);

}  // namespace gwf::io
