#include "gwf/kl_engine.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "gwf/error.hpp"

namespace gwf {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<bool> seen(w_.size() + 1, false);
  for (int v : w_) {
    if (v < 1 || v > static_cast<int>(w_.size()) || seen[v])
      throw DomainError("not a permutation in one-line notation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
  std::vector<int> w(n);
  for (int i = 0; i < n; ++i) w[i] = n - i;
  return Permutation(std::move(w));
}

Permutation Permutation::parse(const std::string& text) {
  std::vector<int> w;
  if (text.find(',') != std::string::npos) {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        w.push_back(std::stoi(item));
      } catch (const std::exception&) {
        throw ParseError("bad permutation '" + text + "'");
      }
    }
  } else {
    for (char ch : text) {
      if (ch < '1' || ch > '9') throw ParseError("bad permutation '" + text + "'");
      w.push_back(ch - '0');
    }
  }
  return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) inv[w_[i] - 1] = static_cast<int>(i) + 1;
  return Permutation(std::move(inv));
}

Permutation Permutation::operator*(const Permutation& other) const {
  if (size() != other.size()) throw DomainError("composing permutations of different sizes");
  std::vector<int> r(w_.size());
  for (std::size_t i = 0; i < w_.size(); ++i) r[i] = w_[other.w_[i] - 1];
  return Permutation(std::move(r));
}

std::string Permutation::to_string() const {
  std::string s;
  bool small = w_.size() <= 9;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (!small && i) s += ',';
    s += std::to_string(w_[i]);
  }
  return s;
}

int length(const Permutation& w) {
  int inv = 0;
  const auto& a = w.one_line();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (a[i] > a[j]) ++inv;
  return inv;
}

bool bruhat_leq(const Permutation& x, const Permutation& w) {
  if (x.size() != w.size()) throw DomainError("Bruhat order compares permutations of one size");
  const int n = x.size();
  // r[k] = #{j <= i : perm(j) >= k}, compared for every prefix i
  std::vector<int> rx(n + 2, 0), rw(n + 2, 0);
  for (int i = 1; i <= n; ++i) {
    for (int k = 1; k <= x(i); ++k) ++rx[k];
    for (int k = 1; k <= w(i); ++k) ++rw[k];
    for (int k = 1; k <= n; ++k)
      if (rx[k] > rw[k]) return false;
  }
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

KLPolynomial::KLPolynomial(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { trim(); }

void KLPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

BigInt KLPolynomial::coefficient(int i) const {
  return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : BigInt(0);
}

BigInt KLPolynomial::at_one() const {
  BigInt s = 0;
  for (const auto& c : c_) s += c;
  return s;
}

std::string KLPolynomial::to_string() const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    BigInt c = c_[i];
    if (c == 0) continue;
    bool neg = c < 0;
    if (neg) c = -c;
    if (!out.empty() || neg) out += neg ? "-" : "+";
    std::string mono = i == 0 ? "" : (i == 1 ? "q" : "q^" + std::to_string(i));
    if (i == 0 || c != 1) out += c.str();
    out += mono;
  }
  return out;
}

namespace {

std::uint64_t key_of(const Permutation& p) {
  std::uint64_t k = 0;
  for (int v : p.one_line()) k = (k << 4) | static_cast<std::uint64_t>(v);
  return k;
}

void check_rank(int n) {
  if (n < 1 || n > 10) throw DomainError("KL tables support 1 <= N <= 10");
}

using Poly = std::vector<BigInt>;

void add_shifted(Poly& acc, const Poly& p, int shift, const BigInt& scale) {
  if (p.empty()) return;
  if (acc.size() < p.size() + shift) acc.resize(p.size() + shift);
  for (std::size_t i = 0; i < p.size(); ++i) acc[i + shift] += scale * p[i];
}

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

}  // namespace

KLTable::KLTable(int n) : n_(n) {
  check_rank(n);
  perms_ = all_permutations(n);
  for (std::size_t i = 0; i < perms_.size(); ++i) {
    index_[key_of(perms_[i])] = static_cast<int>(i);
    length_.push_back(length(perms_[i]));
  }
  left_mul_.assign(n - 1, std::vector<int>(perms_.size()));
  for (int s = 0; s + 1 < n; ++s)
    for (std::size_t x = 0; x < perms_.size(); ++x) {
      std::vector<int> w = perms_[x].one_line();
      for (int& v : w) {
        if (v == s + 1)
          v = s + 2;
        else if (v == s + 2)
          v = s + 1;
      }
      left_mul_[s][x] = index_.at(key_of(Permutation(std::move(w))));
    }
}

int KLTable::index_of(const Permutation& p) const {
  if (p.size() != n_) throw DomainError("permutation size does not match the KL table");
  return index_.at(key_of(p));
}

KLPolynomial KLTable::polynomial(const Permutation& x, const Permutation& w) {
  int xi = index_of(x), wi = index_of(w);
  return KLPolynomial(column(wi)[xi]);
}

const std::vector<KLTable::Poly>& KLTable::column(int w) {
  if (auto it = columns_.find(w); it != columns_.end()) return it->second;
  const std::size_t count = perms_.size();
  std::vector<Poly> col(count);
  if (length_[w] == 0) {
    col[w] = Poly{BigInt(1)};
    return columns_.emplace(w, std::move(col)).first->second;
  }
  int s = 0;
  while (length_[left_mul_[s][w]] > length_[w]) ++s;
  const int v = left_mul_[s][w];
  const std::vector<Poly> col_v = column(v);  // copy: the map may rehash below

  // z < v with sz < z and nonzero μ(z, v)
  struct Correction {
    int z;
    BigInt mu;
    int shift;
  };
  std::vector<Correction> corrections;
  for (std::size_t z = 0; z < count; ++z) {
    if (col_v[z].empty() || static_cast<int>(z) == v) continue;
    int diff = length_[v] - length_[z];
    if (diff % 2 == 0) continue;
    if (length_[left_mul_[s][z]] > length_[z]) continue;
    int top = (diff - 1) / 2;
    if (static_cast<int>(col_v[z].size()) <= top || col_v[z][top] == 0) continue;
    corrections.push_back({static_cast<int>(z), col_v[z][top], (length_[w] - length_[z]) / 2});
  }
  std::vector<std::vector<Poly>> corr_cols;
  for (const auto& c : corrections) corr_cols.push_back(column(c.z));

  for (std::size_t x = 0; x < count; ++x) {
    const int sx = left_mul_[s][x];
    const int c = length_[sx] < length_[x] ? 1 : 0;
    Poly p;
    add_shifted(p, col_v[sx], 1 - c, BigInt(1));
    add_shifted(p, col_v[x], c, BigInt(1));
    for (std::size_t k = 0; k < corrections.size(); ++k)
      add_shifted(p, corr_cols[k][x], corrections[k].shift, -corrections[k].mu);
    trim(p);
    col[x] = std::move(p);
  }
  return columns_.emplace(w, std::move(col)).first->second;
}

HeckeCanonicalBasis::HeckeCanonicalBasis(int n) : n_(n) {
  check_rank(n);
  perms_ = all_permutations(n);
  for (std::size_t i = 0; i < perms_.size(); ++i) {
    index_[key_of(perms_[i])] = static_cast<int>(i);
    length_.push_back(length(perms_[i]));
  }
  right_mul_.assign(n - 1, std::vector<int>(perms_.size()));
  for (int s = 0; s + 1 < n; ++s)
    for (std::size_t x = 0; x < perms_.size(); ++x) {
      std::vector<int> w = perms_[x].one_line();
      std::swap(w[s], w[s + 1]);
      right_mul_[s][x] = index_.at(key_of(Permutation(std::move(w))));
    }
}

int HeckeCanonicalBasis::index_of(const Permutation& p) const {
  if (p.size() != n_) throw DomainError("permutation size does not match the Hecke algebra");
  return index_.at(key_of(p));
}

const HeckeCanonicalBasis::Element& HeckeCanonicalBasis::canonical(int w) {
  if (auto it = basis_.find(w); it != basis_.end()) return it->second;
  Element e(perms_.size());
  if (length_[w] == 0) {
    e[w][0] = 1;
    return basis_.emplace(w, std::move(e)).first->second;
  }
  int s = 0;
  while (length_[right_mul_[s][w]] > length_[w]) ++s;
  const int v = right_mul_[s][w];
  const Element cv = canonical(v);

  // C_v · C_s, using H_x C_s = H_{xs} + v^{±1} H_x
  for (std::size_t x = 0; x < cv.size(); ++x) {
    if (cv[x].empty()) continue;
    const int xs = right_mul_[s][x];
    const int sign = length_[xs] > length_[x] ? 1 : -1;
    for (const auto& [exp, c] : cv[x]) {
      e[xs][exp] += c;
      e[x][exp + sign] += c;
    }
  }
  // subtract μ(z, v) C_z for z < v with zs < z
  for (std::size_t z = 0; z < cv.size(); ++z) {
    if (static_cast<int>(z) == v || cv[z].empty()) continue;
    if (length_[right_mul_[s][z]] > length_[z]) continue;
    auto it = cv[z].find(1);
    if (it == cv[z].end() || it->second == 0) continue;
    const BigInt mu = it->second;
    const Element cz = canonical(static_cast<int>(z));
    for (std::size_t x = 0; x < cz.size(); ++x)
      for (const auto& [exp, c] : cz[x]) e[x][exp] -= mu * c;
  }
  for (auto& lp : e)
    for (auto it = lp.begin(); it != lp.end();) it = it->second == 0 ? lp.erase(it) : std::next(it);
  return basis_.emplace(w, std::move(e)).first->second;
}

KLPolynomial HeckeCanonicalBasis::polynomial(const Permutation& x, const Permutation& w) {
  const int xi = index_of(x), wi = index_of(w);
  const Laurent& h = canonical(wi)[xi];
  const int d = length_[wi] - length_[xi];
  std::vector<BigInt> coeffs;
  for (const auto& [exp, c] : h) {
    // v^exp with exp = d - 2i
    if ((d - exp) % 2 != 0 || d - exp < 0) throw DomainError("non-canonical Hecke coefficient");
    std::size_t i = static_cast<std::size_t>((d - exp) / 2);
    if (coeffs.size() <= i) coeffs.resize(i + 1);
    coeffs[i] += c;
  }
  return KLPolynomial(std::move(coeffs));
}

KLPolynomial kl_polynomial(const Permutation& x, const Permutation& w) {
  if (x.size() != w.size()) throw DomainError("KL polynomial of permutations of different sizes");
  KLTable t(x.size());
  return t.polynomial(x, w);
}

KLPolynomial kl_polynomial_via_products(const Permutation& x, const Permutation& w) {
  if (x.size() != w.size()) throw DomainError("KL polynomial of permutations of different sizes");
  HeckeCanonicalBasis h(x.size());
  return h.polynomial(x, w);
}

}  // namespace gwf
