#include "qvol/poset.hpp"

#include <algorithm>

namespace qvol {

Poset::Poset(int n, const std::vector<std::pair<int, int>>& relations)
    : n_(n), above_(n, 0), below_(n, 0) {
  if (n < 0 || n > 64) throw arithmetic_error("Poset: need 0 <= n <= 64");
  for (auto [i, j] : relations) {
    if (i < 0 || i >= n || j < 0 || j >= n || i == j) {
      throw arithmetic_error("Poset: bad relation");
    }
    above_[i] |= uint64_t(1) << j;
  }
  // Floyd-Warshall style transitive closure.
  for (int k = 0; k < n; ++k) {
    for (int i = 0; i < n; ++i) {
      if ((above_[i] >> k) & 1) above_[i] |= above_[k];
    }
  }
  for (int i = 0; i < n; ++i) {
    if ((above_[i] >> i) & 1) throw arithmetic_error("Poset: relations contain a cycle");
    for (int j = 0; j < n; ++j) {
      if ((above_[i] >> j) & 1) below_[j] |= uint64_t(1) << i;
    }
  }
}

Poset Poset::chain(int n) {
  std::vector<std::pair<int, int>> rel;
  for (int i = 0; i + 1 < n; ++i) rel.emplace_back(i, i + 1);
  return Poset(n, rel);
}

std::vector<std::pair<int, int>> Poset::cover_relations() const {
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) {
      if (!less(i, j)) continue;
      // cover iff nothing strictly between i and j
      if ((above_[i] & below_[j]) == 0) covers.emplace_back(i, j);
    }
  }
  return covers;
}

Poset Poset::dual() const {
  Poset d(n_);
  d.above_ = below_;
  d.below_ = above_;
  return d;
}

Poset Poset::with_minimum_prepended() const {
  std::vector<std::pair<int, int>> rel;
  for (int j = 1; j <= n_; ++j) rel.emplace_back(0, j);
  for (auto [i, j] : cover_relations()) rel.emplace_back(i + 1, j + 1);
  return Poset(n_ + 1, rel);
}

long for_each_linear_extension(
    const Poset& P, const std::function<void(const std::vector<int>&)>& visit,
    long max_count) {
  int n = P.size();
  std::vector<int> seq;
  seq.reserve(n);
  uint64_t placed = 0;
  long count = 0;
  // Backtracking over currently minimal unplaced elements.
  std::function<void()> rec = [&]() {
    if (static_cast<int>(seq.size()) == n) {
      if (++count > max_count) {
        throw cap_exceeded("linear extension cap exceeded");
      }
      visit(seq);
      return;
    }
    for (int i = 0; i < n; ++i) {
      if ((placed >> i) & 1) continue;
      if ((P.below_mask(i) & ~placed) != 0) continue;
      placed |= uint64_t(1) << i;
      seq.push_back(i);
      rec();
      seq.pop_back();
      placed &= ~(uint64_t(1) << i);
    }
  };
  rec();
  return count;
}

long count_linear_extensions(const Poset& P, long max_count) {
  return for_each_linear_extension(P, [](const std::vector<int>&) {}, max_count);
}

WordStats word_stats(const std::vector<int>& w) {
  WordStats s;
  int n = static_cast<int>(w.size());
  for (int i = 0; i + 1 < n; ++i) {
    if (w[i] > w[i + 1]) {
      s.descent_positions.push_back(i + 1);
      ++s.des;
      s.maj += i + 1;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (w[i] > w[j]) ++s.inv;
  return s;
}

std::vector<int> natural_labeling(int n) {
  std::vector<int> omega(n);
  for (int i = 0; i < n; ++i) omega[i] = i + 1;
  return omega;
}

QPoly maj_gf(const Poset& P, const std::vector<int>& omega, long max_count) {
  std::vector<Int> coeffs;
  std::vector<int> word(P.size());
  for_each_linear_extension(
      P,
      [&](const std::vector<int>& seq) {
        for (size_t i = 0; i < seq.size(); ++i) word[i] = omega[seq[i]];
        long m = word_stats(word).maj;
        if (static_cast<long>(coeffs.size()) <= m) coeffs.resize(m + 1);
        coeffs[m] += 1;
      },
      max_count);
  if (coeffs.empty()) coeffs.push_back(Int(1));  // empty poset: one extension
  return QPoly(coeffs);
}

QPoly ppartition_gf_bounded(const Poset& P, const std::vector<int>& omega,
                            const std::vector<int>& lo,
                            const std::vector<int>& hi, int budget) {
  int n = P.size();
  if (static_cast<int>(omega.size()) != n || static_cast<int>(lo.size()) != n ||
      static_cast<int>(hi.size()) != n) {
    throw arithmetic_error("ppartition_gf_bounded: vector length mismatch");
  }
  // Process elements in one fixed linear extension order so that all
  // P-predecessors of an element are assigned before it.
  std::vector<int> order;
  {
    uint64_t placed = 0;
    while (static_cast<int>(order.size()) < n) {
      for (int i = 0; i < n; ++i) {
        if (!((placed >> i) & 1) && (P.below_mask(i) & ~placed) == 0) {
          order.push_back(i);
          placed |= uint64_t(1) << i;
        }
      }
    }
  }
  // Minimal possible contribution of each remaining suffix, for pruning.
  std::vector<long> suffix_min(n + 1, 0);
  for (int k = n - 1; k >= 0; --k) {
    suffix_min[k] = suffix_min[k + 1] + lo[order[k]];
  }
  std::vector<Int> coeffs(budget + 1, 0);
  std::vector<int> value(n, 0);
  std::function<void(int, long)> rec = [&](int k, long total) {
    if (k == n) {
      coeffs[total] += 1;
      return;
    }
    int e = order[k];
    long ub_budget = budget - total - suffix_min[k + 1];
    long ub = ub_budget;  // value cannot push the total past the budget
    if (hi[e] >= 0) ub = std::min(ub, static_cast<long>(hi[e]) - 1);
    for (int k2 = 0; k2 < k; ++k2) {
      int p = order[k2];
      if (!P.less(p, e)) continue;
      long cap = value[p] - (omega[p] > omega[e] ? 1 : 0);
      ub = std::min(ub, cap);
    }
    for (long v = lo[e]; v <= ub; ++v) {
      value[e] = static_cast<int>(v);
      rec(k + 1, total + v);
    }
  };
  rec(0, 0);
  // Trim only when the configured bounds keep the total within the budget;
  // otherwise keep the full length so the caller sees the degree cutoff.
  return QPoly(coeffs);
}

QPoly ppartition_gf(const Poset& P, const std::vector<int>& omega, int budget) {
  std::vector<int> lo(P.size(), 0), hi(P.size(), -1);
  return ppartition_gf_bounded(P, omega, lo, hi, budget);
}

}  // namespace qvol
