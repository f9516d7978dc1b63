#include "gwf/nilpotent_orbits.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "gwf/error.hpp"

namespace gwf {

Numeral opposite(Numeral x) {
  switch (x) {
    case Numeral::I: return Numeral::II;
    case Numeral::II: return Numeral::I;
    default: return Numeral::None;
  }
}

bool is_very_even(const Partition& p) {
  if (p.empty()) return false;
  for (int v : p.parts())
    if (v % 2 != 0) return false;
  // all parts even and D-valid
  for (int v : p.parts())
    if (p.multiplicity(v) % 2 != 0) return false;
  return true;
}

bool is_valid_D(const Partition& p, int k) {
  if (p.size() != 2 * k) return false;
  for (int v : p.parts())
    if (v % 2 == 0 && p.multiplicity(v) % 2 != 0) return false;
  return true;
}

SimpleOrbitLabel::SimpleOrbitLabel(LieType type, int rank, Partition partition, Numeral numeral)
    : type_(type), rank_(rank), partition_(std::move(partition)), numeral_(numeral) {
  if (rank_ < 1) throw DomainError("rank must be positive");
  if (type_ == LieType::A) {
    if (partition_.size() != rank_)
      throw DomainError("type A(" + std::to_string(rank_) + ") needs a partition of " +
                        std::to_string(rank_) + ", got " + partition_.to_string());
    if (numeral_ != Numeral::None) throw DomainError("type A labels carry no numeral");
    return;
  }
  if (!is_valid_D(partition_, rank_))
    throw DomainError(partition_.to_string() + " is not a D(" + std::to_string(rank_) + ") partition");
  if (is_very_even(partition_) != (numeral_ != Numeral::None))
    throw DomainError("type D labels carry a numeral exactly when the partition is very even: " +
                      partition_.to_string());
}

SimpleOrbitLabel SimpleOrbitLabel::type_a(Partition p) {
  int n = p.size();
  return SimpleOrbitLabel(LieType::A, n, std::move(p));
}

SimpleOrbitLabel SimpleOrbitLabel::type_d(int k, Partition p, Numeral numeral) {
  return SimpleOrbitLabel(LieType::D, k, std::move(p), numeral);
}

std::string SimpleOrbitLabel::to_string() const {
  std::string s = partition_.to_string();
  if (numeral_ == Numeral::I) s += " I";
  if (numeral_ == Numeral::II) s += " II";
  return s;
}

OuterAutomorphism OuterAutomorphism::diagram_flip(std::size_t factors) {
  OuterAutomorphism t;
  for (std::size_t i = 0; i < factors; ++i) {
    t.permutation.push_back(static_cast<int>(i));
    t.flip.push_back(true);
  }
  return t;
}

OuterAutomorphism OuterAutomorphism::swap_pair(bool flip_first, bool flip_second) {
  return OuterAutomorphism{{1, 0}, {flip_first, flip_second}};
}

/*
  Repeatedly take the largest even part q of odd multiplicity, lower its last
  occurrence to q-1 and raise the first later part smaller than q-1 by one
  (a new part 1 if there is none).
*/
Partition collapse_D(const Partition& lambda) {
  if (lambda.size() % 2 != 0)
    throw DomainError("collapse_D needs a partition of an even number, got " + lambda.to_string());
  std::vector<int> parts = lambda.parts();
  for (;;) {
    Partition cur(parts);
    int bad = 0;
    for (int v : parts)
      if (v % 2 == 0 && cur.multiplicity(v) % 2 != 0) {
        bad = v;
        break;
      }
    if (bad == 0) return cur;
    auto last = std::find_if(parts.rbegin(), parts.rend(), [&](int v) { return v == bad; });
    std::size_t i = static_cast<std::size_t>(std::distance(last, parts.rend())) - 1;
    parts[i] -= 1;
    std::size_t j = i + 1;
    while (j < parts.size() && parts[j] >= bad - 1) ++j;
    if (j < parts.size())
      parts[j] += 1;
    else
      parts.push_back(1);
    parts.erase(std::remove(parts.begin(), parts.end(), 0), parts.end());
    std::sort(parts.begin(), parts.end(), std::greater<>());
  }
}

Partition spaltenstein_A(const Partition& lambda) { return transpose(lambda); }

SimpleOrbitLabel spaltenstein_D(const SimpleOrbitLabel& o) {
  if (o.lie_type() != LieType::D) throw DomainError("spaltenstein_D needs a type D label");
  const int k = o.rank();
  Partition image = collapse_D(transpose(o.partition()));
  bool source_ve = o.numeral() != Numeral::None;
  bool image_ve = is_very_even(image);
  if (image_ve && !source_ve)
    throw DomainError("ambiguous numeral: " + o.to_string() + " maps to very even " + image.to_string());
  if (!image_ve) return SimpleOrbitLabel::type_d(k, image);
  Numeral x = (k % 2 == 0) ? o.numeral() : opposite(o.numeral());
  return SimpleOrbitLabel::type_d(k, image, x);
}

SimpleOrbitLabel spaltenstein(const SimpleOrbitLabel& o) {
  if (o.lie_type() == LieType::A) return SimpleOrbitLabel::type_a(spaltenstein_A(o.partition()));
  return spaltenstein_D(o);
}

ProductOrbitLabel spaltenstein(const ProductOrbitLabel& o) {
  ProductOrbitLabel out;
  for (const auto& f : o.factors) out.factors.push_back(spaltenstein(f));
  return out;
}

std::vector<SimpleOrbitLabel> all_labels(LieType type, int k) {
  std::vector<SimpleOrbitLabel> out;
  if (type == LieType::A) {
    for (auto& p : partitions_of(k)) out.push_back(SimpleOrbitLabel::type_a(p));
    return out;
  }
  for (auto& p : partitions_of(2 * k)) {
    if (!is_valid_D(p, k)) continue;
    if (is_very_even(p)) {
      out.push_back(SimpleOrbitLabel::type_d(k, p, Numeral::I));
      out.push_back(SimpleOrbitLabel::type_d(k, p, Numeral::II));
    } else {
      out.push_back(SimpleOrbitLabel::type_d(k, p));
    }
  }
  return out;
}

bool is_special(const SimpleOrbitLabel& o) {
  for (const auto& x : all_labels(o.lie_type(), o.rank()))
    if (spaltenstein(x) == o) return true;
  return false;
}

SimpleOrbitLabel outer_action(bool flip, const SimpleOrbitLabel& o) {
  if (!flip || o.lie_type() == LieType::A) return o;
  return SimpleOrbitLabel::type_d(o.rank(), o.partition(), opposite(o.numeral()));
}

ProductOrbitLabel outer_action(const OuterAutomorphism& tau, const ProductOrbitLabel& o) {
  const std::size_t n = o.factors.size();
  if (tau.permutation.size() != n || tau.flip.size() != n)
    throw DomainError("outer automorphism has the wrong number of factors");
  std::vector<bool> seen(n, false);
  ProductOrbitLabel out;
  for (std::size_t i = 0; i < n; ++i) {
    int src = tau.permutation[i];
    if (src < 0 || static_cast<std::size_t>(src) >= n || seen[src])
      throw DomainError("outer automorphism factor map is not a permutation");
    seen[src] = true;
    const auto& f = o.factors[src];
    if (f.lie_type() != o.factors[i].lie_type() || f.rank() != o.factors[i].rank())
      throw DomainError("outer automorphism permutes factors of different types");
    out.factors.push_back(outer_action(tau.flip[i], f));
  }
  return out;
}

bool closure_leq(const SimpleOrbitLabel& a, const SimpleOrbitLabel& b) {
  if (a.lie_type() != b.lie_type() || a.rank() != b.rank())
    throw DomainError("closure order compares labels of one type");
  if (a.partition() == b.partition()) return a.numeral() == b.numeral();
  return dominance_leq(a.partition(), b.partition());
}

}  // namespace gwf
