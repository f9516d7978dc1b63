#pragma once

#include <functional>
#include <map>
#include <memory>
#include <vector>

#include "gwf/kl_engine.hpp"
#include "gwf/langlands.hpp"
#include "gwf/multisegments.hpp"
#include "gwf/partitions.hpp"

namespace gwf {

enum class MultiplicityBackend {
  closure01,     // [I(m):L(m')] = 1 iff m <= m' in the graded closure order
  kl_zelevinsky  // IC stalks via KL polynomials of Zelevinsky permutations
};

std::string to_string(MultiplicityBackend b);
MultiplicityBackend parse_backend(const std::string& s);

/// Coefficients indexed by orbits O_λ; listed in decreasing lexicographic order.
using ExpansionVector = std::map<Partition, long long, std::greater<>>;

std::vector<Rational> s_vee(const Composition& alpha, const std::vector<Rational>& nu);

/// One segment [ν_i - (α_i-1)/2, ν_i + (α_i-1)/2] per entry, on the trivial line.
Multisegment multisegment_of(const Composition& alpha, const std::vector<Rational>& nu);

/*
  Zelevinsky permutation of a multisegment on one integral lattice of one
  line. Points x_0 < ... < x_t run over the hull of the support with
  multiplicities d_i. Block rows have sizes d_0..d_t top to bottom, block
  columns d_t..d_0 left to right. Block (i, j) holds #{segments [x_i, x_j]}
  ones for i <= j and #{segments ∋ x_{i-1}, x_i} ones for j = i-1; ones run
  north-west to south-east inside every block row and block column.
*/
Permutation zelevinsky_permutation(const Multisegment& m);

/// Rows/columns indexed by `index`, a linear extension of the closure order.
struct MultiplicityMatrices {
  std::vector<Multisegment> index;
  std::vector<std::vector<long long>> standard_in_irreducible;  // M[m][m'] = [I(m):L(m')]
  std::vector<std::vector<long long>> inverse;                  // N = M^{-1}

  std::size_t position(const Multisegment& m) const;
};

/*
  Session object caching KL tables and multiplicity matrices. Not
  thread-safe; use one per thread.
*/
class MultiplicityEngine {
 public:
  const MultiplicityMatrices& matrices(const SupportMultiset& support, MultiplicityBackend backend);

  /// [I(m):L(m')] for one pair with equal supports.
  long long multiplicity(const Multisegment& m, const Multisegment& mp, MultiplicityBackend backend);

  /// Σ over m' of N[m][m'], grouped by the lengths partition of m'.
  std::map<Partition, long long> inverse_row_by_shape(const Multisegment& m, MultiplicityBackend backend);

 private:
  KLTable& table(int n);
  long long kl_block_value(const Multisegment& m, const Multisegment& mp);

  std::map<int, std::unique_ptr<KLTable>> tables_;
  std::map<std::pair<SupportMultiset, MultiplicityBackend>, MultiplicityMatrices> cache_;
};

MultiplicityMatrices std_in_irr_matrix(const SupportMultiset& support, MultiplicityBackend backend);

long long m_tilde(const Composition& alpha, const Partition& lambda, const std::vector<Rational>& nu,
                  MultiplicityBackend backend, MultiplicityEngine& engine);
long long m_tilde(const Composition& alpha, const Partition& lambda, const std::vector<Rational>& nu,
                  MultiplicityBackend backend = MultiplicityBackend::kl_zelevinsky);

/// λ ↦ c_{O_λ}(AZ(π)) for π the Langlands quotient labelled by m; zero entries omitted.
ExpansionVector expansion_of_az(const Multisegment& langlands_m, MultiplicityBackend backend,
                                MultiplicityEngine& engine);

ExpansionVector hch_expansion_of_az(const Composition& alpha, const std::vector<Rational>& nu,
                                    MultiplicityBackend backend, MultiplicityEngine& engine);
ExpansionVector hch_expansion_of_az(const Composition& alpha, const std::vector<Rational>& nu,
                                    MultiplicityBackend backend = MultiplicityBackend::kl_zelevinsky);

/// Expansion of the representation itself.
ExpansionVector hch_expansion(const RepLabel& label, MultiplicityBackend backend, MultiplicityEngine& engine);

/// Dominance-maximal orbits with nonzero coefficient.
std::vector<Partition> wavefront_from_expansion(const ExpansionVector& v);

/// Levi of the flag fixed by a λ-nilpotent: the parts of λ^t.
Composition flag_levi(const Partition& lambda);

/// r_i = multiplicity of part i, for each part present, by increasing i.
std::vector<int> centralizer_reductive(const Partition& lambda);

}  // namespace gwf
