#include "gwf/partitions.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "gwf/error.hpp"

namespace gwf {

namespace {

int checked_sum(const std::vector<int>& parts, const char* what) {
  int n = 0;
  for (int p : parts) {
    if (p < 1) throw DomainError(std::string(what) + " parts must be positive");
    n += p;
  }
  return n;
}

}  // namespace

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  n_ = checked_sum(parts_, "partition");
  if (!std::is_sorted(parts_.begin(), parts_.end(), std::greater<>()))
    throw DomainError("partition parts must be weakly decreasing");
}

int Partition::multiplicity(int v) const {
  return static_cast<int>(std::count(parts_.begin(), parts_.end(), v));
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

Composition::Composition(std::initializer_list<int> parts) : Composition(std::vector<int>(parts)) {}

Composition::Composition(std::vector<int> parts) : parts_(std::move(parts)) {
  n_ = checked_sum(parts_, "composition");
}

Partition transpose(const Partition& lambda) {
  std::vector<int> cols;
  int width = lambda.empty() ? 0 : lambda.parts().front();
  cols.reserve(width);
  for (int j = 1; j <= width; ++j) {
    int c = 0;
    for (int p : lambda.parts()) {
      if (p < j) break;
      ++c;
    }
    cols.push_back(c);
  }
  return Partition(std::move(cols));
}

bool dominance_leq(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw DomainError("dominance order needs partitions of the same size: " + lambda.to_string() +
                      " vs " + mu.to_string());
  std::size_t len = std::max(lambda.length(), mu.length());
  int a = 0, b = 0;
  for (std::size_t t = 0; t < len; ++t) {
    a += lambda[t];
    b += mu[t];
    if (a > b) return false;
  }
  return true;
}

Partition sort_to_partition(const Composition& alpha) {
  std::vector<int> parts = alpha.parts();
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

Partition expand_multiplicity(const Partition& lambda, int m) {
  if (m < 1) throw DomainError("multiplicity must be at least 1");
  std::vector<int> parts;
  parts.reserve(lambda.length() * m);
  for (int p : lambda.parts())
    for (int i = 0; i < m; ++i) parts.push_back(p);
  return Partition(std::move(parts));
}

Partition concatenate(const Partition& a, const Partition& b) {
  std::vector<int> parts = a.parts();
  parts.insert(parts.end(), b.parts().begin(), b.parts().end());
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      rec(remaining - p, p);
      cur.pop_back();
    }
  };
  if (n >= 0) rec(n, n);
  return out;
}

std::vector<Composition> compositions_of(int n) {
  std::vector<Composition> out;
  if (n < 1) return out;
  // bit i set means a cut after position i
  for (unsigned mask = 0; mask < (1u << (n - 1)); ++mask) {
    std::vector<int> parts;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask & (1u << i)) {
        parts.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    parts.push_back(run);
    out.emplace_back(std::move(parts));
  }
  return out;
}

}  // namespace gwf
