#include "gwf/character_expansion.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "gwf/error.hpp"

namespace gwf {

std::string to_string(MultiplicityBackend b) {
  return b == MultiplicityBackend::closure01 ? "closure01" : "kl_zelevinsky";
}

MultiplicityBackend parse_backend(const std::string& s) {
  if (s == "closure01" || s == "closure") return MultiplicityBackend::closure01;
  if (s == "kl_zelevinsky" || s == "kl") return MultiplicityBackend::kl_zelevinsky;
  throw ParseError("unknown backend '" + s + "'");
}

std::vector<Rational> s_vee(const Composition& alpha, const std::vector<Rational>& nu) {
  if (alpha.length() != nu.size()) throw DomainError("alpha and nu must have the same length");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    const int a = alpha.parts()[i];
    for (int j = 0; j < a; ++j) out.push_back(nu[i] - Rational(a - 1, 2) + Rational(j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Multisegment multisegment_of(const Composition& alpha, const std::vector<Rational>& nu) {
  if (alpha.length() != nu.size()) throw DomainError("alpha and nu must have the same length");
  std::vector<Segment> segs;
  for (std::size_t i = 0; i < nu.size(); ++i) {
    const int a = alpha.parts()[i];
    segs.emplace_back(CuspidalLine::trivial(), nu[i] - Rational(a - 1, 2), a);
  }
  return Multisegment(std::move(segs));
}

Permutation zelevinsky_permutation(const Multisegment& m) {
  if (m.empty()) return Permutation(std::vector<int>{});
  if (interaction_blocks(m).size() != 1)
    throw DomainError("Zelevinsky permutation needs one line and one integral lattice");
  Rational lo = m.segments().front().start, hi = m.segments().front().end();
  for (const auto& s : m.segments()) {
    lo = std::min(lo, s.start);
    hi = std::max(hi, s.end());
  }
  const int t = static_cast<int>((hi - lo).numerator()) + 1;
  auto idx = [&](const Rational& p) { return static_cast<int>((p - lo).numerator()); };

  std::vector<int> d(t, 0);
  std::vector<std::vector<int>> cnt(t, std::vector<int>(t, 0));  // cnt[i][j]: ones in block (i, j)
  for (const auto& s : m.segments()) {
    const int a = idx(s.start), b = idx(s.end());
    cnt[a][b] += 1;
    for (int k = a; k <= b; ++k) d[k] += 1;
    for (int k = a + 1; k <= b; ++k) cnt[k][k - 1] += 1;
  }
  std::vector<int> row_start(t, 0), col_start(t, 0);
  // block rows top to bottom: 0..t-1; block columns left to right: t-1..0
  for (int i = 1; i < t; ++i) row_start[i] = row_start[i - 1] + d[i - 1];
  for (int j = t - 2; j >= 0; --j) col_start[j] = col_start[j + 1] + d[j + 1];

  const int n = std::accumulate(d.begin(), d.end(), 0);
  std::vector<int> w(n, 0);
  std::vector<int> row_used(t, 0), col_used(t, 0);
  for (int i = 0; i < t; ++i)
    for (int j = t - 1; j >= 0; --j)
      for (int k = 0; k < cnt[i][j]; ++k) {
        int r = row_start[i] + row_used[i]++;
        int c = col_start[j] + col_used[j]++;
        w[r] = c + 1;
      }
  return Permutation(std::move(w));
}

std::size_t MultiplicityMatrices::position(const Multisegment& m) const {
  auto it = std::find(index.begin(), index.end(), m);
  if (it == index.end()) throw DomainError("multisegment not indexed by these matrices");
  return static_cast<std::size_t>(it - index.begin());
}

KLTable& MultiplicityEngine::table(int n) {
  auto& slot = tables_[n];
  if (!slot) slot = std::make_unique<KLTable>(n);
  return *slot;
}

namespace {

long long to_ll(const BigInt& b) {
  if (b > BigInt(std::numeric_limits<long long>::max()) || b < BigInt(std::numeric_limits<long long>::min()))
    throw DomainError("multiplicity exceeds 64-bit range");
  return b.convert_to<long long>();
}

long long shape_weight(const Multisegment& m) {
  long long s = 0;
  for (const auto& seg : m.segments()) s += static_cast<long long>(seg.length) * (seg.length + 1) / 2;
  return s;
}

std::map<Rational, std::vector<Segment>> split_by_lattice(const Multisegment& m) {
  std::map<Rational, std::vector<Segment>> out;
  for (const auto& s : m.segments()) out[fractional_part(s.start)].push_back(s);
  return out;
}

}  // namespace

/*
  IC stalk of the orbit closure of mp at the orbit of m, as P_{w0 v(m), w0 v(mp)}(1):
  larger orbits have shorter Zelevinsky permutations, so w0 turns the
  opposite Schubert cells into ordinary ones.
*/
long long MultiplicityEngine::kl_block_value(const Multisegment& m, const Multisegment& mp) {
  if (m.empty() && mp.empty()) return 1;
  Permutation v = zelevinsky_permutation(m);
  Permutation vp = zelevinsky_permutation(mp);
  if (v.size() != vp.size()) throw DomainError("Zelevinsky permutations of different sizes");
  Permutation w0 = Permutation::longest(v.size());
  return to_ll(table(v.size()).polynomial(w0 * v, w0 * vp).at_one());
}

long long MultiplicityEngine::multiplicity(const Multisegment& m, const Multisegment& mp, MultiplicityBackend backend) {
  if (m.lines().size() > 1 || mp.lines().size() > 1)
    throw DomainError("multiplicities are computed one cuspidal line at a time");
  if (backend == MultiplicityBackend::closure01) return closure_leq_graded(m, mp) ? 1 : 0;
  if (support(m) != support(mp)) throw DomainError("multiplicity of multisegments with different supports");
  auto a = split_by_lattice(m);
  auto b = split_by_lattice(mp);
  long long value = 1;
  for (auto& [frac, segs] : a) {
    value *= kl_block_value(Multisegment(segs), Multisegment(b.at(frac)));
    if (value == 0) break;
  }
  return value;
}

const MultiplicityMatrices& MultiplicityEngine::matrices(const SupportMultiset& sup, MultiplicityBackend backend) {
  auto key = std::make_pair(sup, backend);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  MultiplicityMatrices mm;
  mm.index = enumerate_multisegments(sup);
  std::stable_sort(mm.index.begin(), mm.index.end(), [](const Multisegment& a, const Multisegment& b) {
    return shape_weight(a) < shape_weight(b);
  });
  const std::size_t n = mm.index.size();
  auto& M = mm.standard_in_irreducible;
  M.assign(n, std::vector<long long>(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const bool below = closure_leq_graded(mm.index[i], mm.index[j]);
      if (backend == MultiplicityBackend::closure01) {
        M[i][j] = below ? 1 : 0;
        continue;
      }
      M[i][j] = multiplicity(mm.index[i], mm.index[j], backend);
      // the KL route must reproduce the closure support and the unit diagonal
      if ((M[i][j] != 0) != below || (i == j && M[i][j] != 1) || M[i][j] < 0)
        throw DomainError("kl_zelevinsky backend failed validation on support of " +
                          std::to_string(mm.index[i].total_length()) + " points");
    }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (M[i][j] != 0) throw DomainError("multiplicity matrix is not unitriangular");

  // back substitution: N upper unitriangular with M N = 1
  auto& N = mm.inverse;
  N.assign(n, std::vector<long long>(n, 0));
  for (std::size_t j = 0; j < n; ++j) {
    N[j][j] = 1;
    for (std::size_t ii = j; ii-- > 0;) {
      long long s = 0;
      for (std::size_t k = ii + 1; k <= j; ++k) s += M[ii][k] * N[k][j];
      N[ii][j] = -s;
    }
  }
  return cache_.emplace(key, std::move(mm)).first->second;
}

std::map<Partition, long long> MultiplicityEngine::inverse_row_by_shape(const Multisegment& m,
                                                                         MultiplicityBackend backend) {
  std::map<Partition, long long> acc{{Partition{}, 1}};
  for (const auto& line : m.lines()) {
    if (line.dim != 1) throw DomainError("character expansions need cuspidal lines of dimension 1");
    const Multisegment on_line = m.restricted_to(line);
    const MultiplicityMatrices& mm = matrices(support(on_line), backend);
    const auto& row = mm.inverse[mm.position(on_line)];
    std::map<Partition, long long> part;
    for (std::size_t j = 0; j < row.size(); ++j)
      if (row[j] != 0) part[lengths_partition(mm.index[j])] += row[j];
    std::map<Partition, long long> next;
    for (const auto& [p, c] : acc)
      for (const auto& [q, e] : part)
        if (c * e != 0) next[concatenate(p, q)] += c * e;
    acc = std::move(next);
  }
  for (auto it = acc.begin(); it != acc.end();) it = it->second == 0 ? acc.erase(it) : std::next(it);
  return acc;
}

MultiplicityMatrices std_in_irr_matrix(const SupportMultiset& support, MultiplicityBackend backend) {
  MultiplicityEngine engine;
  return engine.matrices(support, backend);
}

long long m_tilde(const Composition& alpha, const Partition& lambda, const std::vector<Rational>& nu,
                  MultiplicityBackend backend, MultiplicityEngine& engine) {
  const Multisegment m = multisegment_of(alpha, nu);
  if (lambda.size() != alpha.size()) throw DomainError("lambda and alpha have different sizes");
  auto row = engine.inverse_row_by_shape(m, backend);
  auto it = row.find(lambda);
  return it == row.end() ? 0 : it->second;
}

long long m_tilde(const Composition& alpha, const Partition& lambda, const std::vector<Rational>& nu,
                  MultiplicityBackend backend) {
  MultiplicityEngine engine;
  return m_tilde(alpha, lambda, nu, backend, engine);
}

ExpansionVector expansion_of_az(const Multisegment& langlands_m, MultiplicityBackend backend,
                                MultiplicityEngine& engine) {
  ExpansionVector v;
  for (const auto& [shape, c] : engine.inverse_row_by_shape(langlands_m, backend)) v[transpose(shape)] = c;
  return v;
}

ExpansionVector hch_expansion_of_az(const Composition& alpha, const std::vector<Rational>& nu,
                                    MultiplicityBackend backend, MultiplicityEngine& engine) {
  return expansion_of_az(multisegment_of(alpha, nu), backend, engine);
}

ExpansionVector hch_expansion_of_az(const Composition& alpha, const std::vector<Rational>& nu,
                                    MultiplicityBackend backend) {
  MultiplicityEngine engine;
  return hch_expansion_of_az(alpha, nu, backend, engine);
}

ExpansionVector hch_expansion(const RepLabel& label, MultiplicityBackend backend, MultiplicityEngine& engine) {
  // π = AZ(AZ(π)); the Langlands multisegment of AZ(π) feeds the formula
  const RepLabel dual = in_convention(az(label), Convention::langlands);
  return expansion_of_az(dual.m, backend, engine);
}

std::vector<Partition> wavefront_from_expansion(const ExpansionVector& v) {
  std::vector<Partition> nz;
  for (const auto& [p, c] : v)
    if (c != 0) nz.push_back(p);
  if (nz.empty()) throw DomainError("wavefront of an empty expansion");
  std::vector<Partition> out;
  for (const auto& p : nz) {
    bool maximal = true;
    for (const auto& q : nz)
      if (q != p && q.size() == p.size() && dominance_leq(p, q)) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(p);
  }
  return out;
}

Composition flag_levi(const Partition& lambda) { return Composition(transpose(lambda).parts()); }

std::vector<int> centralizer_reductive(const Partition& lambda) {
  std::vector<int> r;
  std::vector<int> parts = lambda.parts();
  std::sort(parts.begin(), parts.end());
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    r.push_back(static_cast<int>(j - i));
    i = j;
  }
  return r;
}

}  // namespace gwf
