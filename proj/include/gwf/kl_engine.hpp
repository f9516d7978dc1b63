#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace gwf {

using BigInt = boost::multiprecision::cpp_int;

/// A permutation of 1..N in one-line notation.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  static Permutation longest(int n);
  /// "1324" (N <= 9) or "1,3,2,4".
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }  // 1-based
  const std::vector<int>& one_line() const { return w_; }

  Permutation inverse() const;
  /// (*this ∘ other)(i) = (*this)(other(i))
  Permutation operator*(const Permutation& other) const;

  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> w_;
};

int length(const Permutation& w);

/// Bruhat order by the rank-matrix (tableau) criterion.
bool bruhat_leq(const Permutation& x, const Permutation& w);

std::vector<Permutation> all_permutations(int n);

/// Polynomial in q with arbitrary-precision integer coefficients.
class KLPolynomial {
 public:
  KLPolynomial() = default;
  explicit KLPolynomial(std::vector<BigInt> coeffs);
  static KLPolynomial one() { return KLPolynomial({BigInt(1)}); }

  const std::vector<BigInt>& coefficients() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  BigInt coefficient(int i) const;
  BigInt at_one() const;

  std::string to_string() const;  // "1+q+2q^2", "0"

  friend bool operator==(const KLPolynomial&, const KLPolynomial&) = default;

 private:
  void trim();
  std::vector<BigInt> c_;
};

/*
  Kazhdan–Lusztig polynomials of S_N by the classical recursion
    P_{x,w} = q^{1-c} P_{sx,v} + q^c P_{x,v} - Σ_z μ(z,v) q^{(ℓ(w)-ℓ(z))/2} P_{x,z}
  with w = sv > v and c = [sx < x]. Whole columns {P_{x,w}}_x are memoized.

  Not thread-safe: each thread (or evaluation session) owns its table.
*/
class KLTable {
 public:
  explicit KLTable(int n);

  int rank() const { return n_; }
  KLPolynomial polynomial(const Permutation& x, const Permutation& w);
  std::size_t cached_columns() const { return columns_.size(); }

 private:
  using Poly = std::vector<BigInt>;
  const std::vector<Poly>& column(int w);

  int n_;
  std::vector<Permutation> perms_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> length_;
  std::vector<std::vector<int>> left_mul_;  // left_mul_[i][x] = s_{i+1} x
  std::unordered_map<int, std::vector<Poly>> columns_;

  int index_of(const Permutation& p) const;
};

/*
  Independent route: canonical basis elements C_w of the Hecke algebra,
  built as C_v C_s minus μ-corrections in the standard basis {H_x} with
  H_s^2 = 1 + (v^{-1} - v) H_s and C_s = H_s + v. Coefficients of C_w are
  h_{x,w} = v^{ℓ(w)-ℓ(x)} P_{x,w}(v^{-2}).
*/
class HeckeCanonicalBasis {
 public:
  explicit HeckeCanonicalBasis(int n);

  KLPolynomial polynomial(const Permutation& x, const Permutation& w);

 private:
  using Laurent = std::map<int, BigInt>;  // exponent of v -> coefficient
  using Element = std::vector<Laurent>;   // indexed by permutation

  const Element& canonical(int w);

  int n_;
  std::vector<Permutation> perms_;
  std::unordered_map<std::uint64_t, int> index_;
  std::vector<int> length_;
  std::vector<std::vector<int>> right_mul_;  // right_mul_[i][x] = x s_{i+1}
  std::unordered_map<int, Element> basis_;

  int index_of(const Permutation& p) const;
};

KLPolynomial kl_polynomial(const Permutation& x, const Permutation& w);
KLPolynomial kl_polynomial_via_products(const Permutation& x, const Permutation& w);

}  // namespace gwf
