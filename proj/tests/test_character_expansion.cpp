#include <doctest.h>

#include "gwf/character_expansion.hpp"
#include "gwf/error.hpp"
#include "oracles.hpp"

using namespace gwf;

namespace {

Segment seg(int a, int b) { return Segment(Rational(a), Rational(b)); }
Rational R(int a) { return Rational(a); }

const auto KL = MultiplicityBackend::kl_zelevinsky;
const auto C01 = MultiplicityBackend::closure01;

// ν with segment starts s_i, i.e. ν_i = s_i + (α_i - 1)/2
std::vector<Rational> nu_from_starts(const Composition& alpha, const std::vector<int>& starts) {
  std::vector<Rational> nu;
  for (std::size_t i = 0; i < starts.size(); ++i) nu.push_back(Rational(starts[i]) + Rational(alpha.parts()[i] - 1, 2));
  return nu;
}

template <class F>
void for_each_start_vector(std::size_t len, int range, F&& f) {
  std::vector<int> s(len, 0);
  while (true) {
    f(s);
    std::size_t i = 0;
    while (i < len && ++s[i] == range) s[i++] = 0;
    if (i == len) return;
  }
}

}  // namespace

TEST_CASE("s_vee and multisegment_of") {
  CHECK(multisegment_of(Composition({3}), {R(0)}) == Multisegment{seg(-1, 1)});
  CHECK(multisegment_of(Composition({1, 1, 1}), {R(1), R(0), R(-1)}) == Multisegment{seg(-1, -1), seg(0, 0), seg(1, 1)});
  auto m = multisegment_of(Composition({2, 1}), {Rational(1, 2), R(0)});
  CHECK(m == Multisegment{seg(0, 1), seg(0, 0)});
  auto split = multisegment_of(Composition({2, 1}), {R(0), R(0)});
  CHECK(split == Multisegment{Segment(Rational(-1, 2), Rational(1, 2)), seg(0, 0)});
  CHECK(s_vee(Composition({2}), {R(0)}) == std::vector<Rational>{Rational(-1, 2), Rational(1, 2)});
  CHECK_THROWS_AS(multisegment_of(Composition({2, 1}), {R(0)}), DomainError);
}

TEST_CASE("GL_2 multiplicity matrix") {
  auto mm = std_in_irr_matrix(make_support({{R(0), 1}, {R(1), 1}}), KL);
  REQUIRE(mm.index.size() == 2);
  CHECK(mm.index[0] == Multisegment{seg(0, 0), seg(1, 1)});
  CHECK(mm.index[1] == Multisegment{seg(0, 1)});
  CHECK(mm.standard_in_irreducible == std::vector<std::vector<long long>>{{1, 1}, {0, 1}});
  CHECK(mm.inverse == std::vector<std::vector<long long>>{{1, -1}, {0, 1}});
  CHECK(std_in_irr_matrix(make_support({{R(0), 1}, {R(1), 1}}), C01).standard_in_irreducible ==
        mm.standard_in_irreducible);
}

TEST_CASE("determinantal cone on support {0:2,1:2}") {
  auto kl = std_in_irr_matrix(make_support({{R(0), 2}, {R(1), 2}}), KL);
  auto c01 = std_in_irr_matrix(make_support({{R(0), 2}, {R(1), 2}}), C01);
  Multisegment singles{seg(0, 0), seg(0, 0), seg(1, 1), seg(1, 1)};
  Multisegment cone{seg(0, 1), seg(0, 0), seg(1, 1)};
  Multisegment chains{seg(0, 1), seg(0, 1)};
  auto at = [](const MultiplicityMatrices& mm, const Multisegment& a, const Multisegment& b) {
    return mm.standard_in_irreducible[mm.position(a)][mm.position(b)];
  };
  CHECK(at(kl, singles, cone) == 2);  // 1 + q at q = 1
  CHECK(at(kl, singles, chains) == 1);
  CHECK(at(kl, cone, chains) == 1);
  CHECK(at(c01, singles, cone) == 1);
  CHECK(at(c01, singles, chains) == 1);
}

TEST_CASE("Zelevinsky permutations") {
  CHECK(zelevinsky_permutation(Multisegment{seg(0, 0), seg(0, 0), seg(1, 1), seg(1, 1)}) == Permutation::parse("3412"));
  CHECK(zelevinsky_permutation(Multisegment{seg(0, 1), seg(0, 0), seg(1, 1)}) == Permutation::parse("1324"));
  CHECK(zelevinsky_permutation(Multisegment{seg(0, 1), seg(0, 1)}) == Permutation::parse("1234"));
  CHECK(zelevinsky_permutation(Multisegment{seg(0, 0)}) == Permutation::parse("1"));
}

TEST_CASE("unitriangularity and M N = 1 on every support of size <= 6, both backends") {
  MultiplicityEngine engine;
  for (const auto& s : oracle::anchored_supports(6, 6))
    for (auto b : {KL, C01}) {
      const auto& mm = engine.matrices(s, b);
      const auto& M = mm.standard_in_irreducible;
      const auto& N = mm.inverse;
      const std::size_t n = mm.index.size();
      for (std::size_t i = 0; i < n; ++i) {
        REQUIRE(M[i][i] == 1);
        for (std::size_t j = 0; j < n; ++j) {
          REQUIRE((M[i][j] == 0 || closure_leq_graded(mm.index[i], mm.index[j])));
          REQUIRE((N[i][j] == 0 || closure_leq_graded(mm.index[i], mm.index[j])));
          long long prod = 0;
          for (std::size_t k = 0; k < n; ++k) prod += M[i][k] * N[k][j];
          REQUIRE(prod == (i == j ? 1 : 0));
        }
      }
    }
}

TEST_CASE("backends agree on multiplicity-free supports with up to 6 points") {
  MultiplicityEngine engine;
  int checked = 0;
  for (const auto& s : oracle::anchored_supports(6, 6)) {
    bool free = true;
    for (const auto& [p, c] : s) free = free && c == 1;
    if (!free) continue;
    REQUIRE(engine.matrices(s, KL).standard_in_irreducible == engine.matrices(s, C01).standard_in_irreducible);
    ++checked;
  }
  CHECK(checked == 32);
}

TEST_CASE("Bruhat order on Zelevinsky permutations reverses the closure order") {
  for (const auto& s : oracle::anchored_supports(5, 6)) {
    auto all = enumerate_multisegments(s);
    for (const auto& a : all)
      for (const auto& b : all)
        REQUIRE(closure_leq_graded(a, b) == bruhat_leq(zelevinsky_permutation(b), zelevinsky_permutation(a)));
  }
}

TEST_CASE("m_tilde examples") {
  CHECK(m_tilde(Composition({1, 1}), {2}, {Rational(1, 2), Rational(-1, 2)}) == -1);
  CHECK(m_tilde(Composition({1, 1}), {1, 1}, {Rational(1, 2), Rational(-1, 2)}) == 1);
  CHECK(m_tilde(Composition({2, 1}), {2, 1}, {Rational(1, 2), R(0)}) == 1);
  // λ not above ᾱ
  CHECK(m_tilde(Composition({2, 1}), {1, 1, 1}, {Rational(1, 2), R(0)}) == 0);
  CHECK_THROWS_AS(m_tilde(Composition({2}), {1}, {R(0)}), DomainError);
}

TEST_CASE("expansion examples") {
  auto v = hch_expansion_of_az(Composition({1, 1}), {Rational(1, 2), Rational(-1, 2)});
  CHECK(v == ExpansionVector{{Partition{2}, 1}, {Partition{1, 1}, -1}});
  CHECK(wavefront_from_expansion(v) == std::vector<Partition>{{2}});
  for (int n = 1; n <= 6; ++n) {
    std::vector<Rational> nu;
    for (int i = 0; i < n; ++i) nu.push_back(Rational(2 * i));  // pairwise unlinked
    CHECK(hch_expansion_of_az(Composition(std::vector<int>(n, 1)), nu) == ExpansionVector{{Partition{n}, 1}});
  }
  CHECK(wavefront_from_expansion(ExpansionVector{{Partition{2, 2}, 1}, {Partition{3, 1}, 0}}) ==
        std::vector<Partition>{{2, 2}});
  CHECK(wavefront_from_expansion(ExpansionVector{{Partition{3, 1, 1, 1}, 1}, {Partition{2, 2, 2}, 1}}).size() == 2);
  CHECK_THROWS_AS(wavefront_from_expansion(ExpansionVector{}), DomainError);
}

TEST_CASE("representation expansions: Steinberg and trivial of GL_2") {
  MultiplicityEngine engine;
  RepLabel st{Multisegment{seg(0, 1)}, Convention::langlands};
  RepLabel triv{Multisegment{seg(0, 0), seg(1, 1)}, Convention::langlands};
  CHECK(hch_expansion(st, KL, engine) == ExpansionVector{{Partition{2}, 1}, {Partition{1, 1}, -1}});
  CHECK(hch_expansion(triv, KL, engine) == ExpansionVector{{Partition{1, 1}, 1}});
}

TEST_CASE("leading term over compositions of n <= 6, both backends") {
  MultiplicityEngine engine;
  long cases = 0;
  for (int n = 1; n <= 6; ++n)
    for (const auto& alpha : compositions_of(n)) {
      const Partition top = transpose(sort_to_partition(alpha));
      for_each_start_vector(alpha.length(), 3, [&](const std::vector<int>& st) {
        auto nu = nu_from_starts(alpha, st);
        RepLabel label{multisegment_of(alpha, nu), Convention::langlands};
        for (auto b : {KL, C01}) {
          auto v = hch_expansion_of_az(alpha, nu, b, engine);
          REQUIRE(v.at(top) == 1);
          for (const auto& [lam, c] : v) REQUIRE(dominance_leq(lam, top));
          REQUIRE(wavefront_from_expansion(v) == std::vector<Partition>{top});
        }
        REQUIRE(wavefront(az(label)) == top);
        ++cases;
      });
    }
  CHECK(cases > 1000);
}

TEST_CASE("spherical unipotent representations") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& lam : partitions_of(n)) {
      std::vector<Rational> nu(lam.length(), R(0));
      CHECK(hch_expansion_of_az(Composition(lam.parts()), nu) == ExpansionVector{{transpose(lam), 1}});
    }
}

TEST_CASE("flag Levi and centralizer") {
  CHECK(flag_levi({3}) == Composition({1, 1, 1}));
  CHECK(flag_levi({2, 1}) == Composition({2, 1}));
  CHECK(flag_levi({2, 2}) == Composition({2, 2}));
  CHECK(centralizer_reductive({1, 1, 1}) == std::vector<int>{3});
  CHECK(centralizer_reductive({4}) == std::vector<int>{1});
  CHECK(centralizer_reductive({2, 2, 1}) == std::vector<int>{1, 2});
  for (int n = 1; n <= 10; ++n)
    for (const auto& lam : partitions_of(n)) {
      auto r = centralizer_reductive(lam);
      std::vector<int> parts = lam.parts();
      std::sort(parts.begin(), parts.end());
      parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
      int total = 0;
      for (std::size_t i = 0; i < r.size(); ++i) total += parts[i] * r[i];
      REQUIRE(total == n);
    }
}

TEST_CASE("backend parsing") {
  CHECK(parse_backend("kl") == KL);
  CHECK(parse_backend("closure") == C01);
  CHECK_THROWS_AS(parse_backend("magic"), ParseError);
}
