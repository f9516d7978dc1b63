#include "gwf/gamma_reduction.hpp"

#include "gwf/error.hpp"

namespace gwf {

PureTypeDescriptor::PureTypeDescriptor(int n_, int m_, int e_, int f_, Rational depth_, std::string s)
    : n(n_), m(m_), e(e_), f(f_), depth(depth_), s_label(std::move(s)) {
  if (n < 1 || m < 1 || e < 1 || f < 1) throw DomainError("descriptor degrees must be positive");
  if (n % m != 0) throw DomainError("cuspidal dimension m must divide n");
  if (e * f != m) throw DomainError("e·f must equal m");
  if (depth < Rational(0)) throw DomainError("depth must be nonnegative");
}

PureTypeDescriptor PureTypeDescriptor::unramified(int n, int m, std::string s) {
  return PureTypeDescriptor(n, m, 1, m, Rational(0), std::move(s));
}

std::string FormalScalar::to_string() const { return gwf::to_string(rational) + "·vol(J')/vol(J)·dim(ϱ)"; }

bool is_pure(const Multisegment& m) { return m.lines().size() <= 1; }

Multisegment reduce(const Multisegment& m, const PureTypeDescriptor& desc) {
  if (!is_pure(m)) throw DomainError("reduction needs a pure multisegment (one cuspidal line)");
  if (!m.empty() && m.segments().front().line.dim != desc.m)
    throw DomainError("cuspidal dimension " + std::to_string(m.segments().front().line.dim) +
                      " does not match descriptor m = " + std::to_string(desc.m));
  if (m.degree() != desc.n)
    throw DomainError("multisegment has degree " + std::to_string(m.degree()) + ", descriptor n = " +
                      std::to_string(desc.n));
  std::vector<Segment> out;
  for (const auto& s : m.segments()) out.emplace_back(CuspidalLine::trivial(), s.start, s.length);
  return Multisegment(std::move(out));
}

GammaOrbitLabel gamma_wavefront(const Multisegment& m, const PureTypeDescriptor& desc) {
  const Multisegment reduced = reduce(m, desc);
  return {desc.s_label, wavefront(RepLabel{reduced, Convention::langlands})};
}

GammaExpansion transfer_expansion(const ExpansionVector& reduced, const PureTypeDescriptor& desc) {
  GammaExpansion out;
  for (const auto& [lambda, c] : reduced) {
    if (c == 0) continue;
    if (lambda.size() != desc.reduced_rank())
      throw DomainError("expansion over E must be indexed by partitions of n/m");
    out[{desc.s_label, lambda}] = FormalScalar{Rational(c)};
  }
  return out;
}

bool az_reduce_commutes(const Multisegment& m, const PureTypeDescriptor& desc) {
  return reduce(mw_dual_all_lines(m), desc) == mw_dual(reduce(m, desc));
}

std::pair<Partition, GammaOrbitLabel> hch_vs_gamma(const Multisegment& m, const PureTypeDescriptor& desc) {
  return {wavefront(RepLabel{m, Convention::langlands}), gamma_wavefront(m, desc)};
}

std::vector<std::string> gamma_of_inertia(const Multisegment& m) {
  std::vector<std::string> tags;
  for (const auto& line : m.lines()) tags.push_back("gamma(rho" + line.id + "[" + std::to_string(line.dim) + "])");
  return tags;
}

}  // namespace gwf
