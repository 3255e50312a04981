#pragma once

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "qvol/qpoly.hpp"

namespace qvol {

/// Thrown when an enumeration exceeds its configured cap.
struct cap_exceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Finite poset on elements 0..n-1 (at most 64 elements), stored as
/// transitively closed strict-order bitmasks.
class Poset {
 public:
  /// Build from a list of (i, j) pairs meaning element i < element j;
  /// the transitive closure is taken. Throws on a cycle.
  Poset(int n, const std::vector<std::pair<int, int>>& relations);

  static Poset antichain(int n) { return Poset(n, {}); }
  /// Chain e_0 < e_1 < ... < e_{n-1}.
  static Poset chain(int n);

  int size() const { return n_; }
  bool less(int i, int j) const { return (above_[i] >> j) & 1; }
  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }
  uint64_t above_mask(int i) const { return above_[i]; }
  uint64_t below_mask(int i) const { return below_[i]; }

  /// Cover relations (i, j): i < j with nothing strictly between.
  std::vector<std::pair<int, int>> cover_relations() const;

  Poset dual() const;

  /// Same poset plus a new minimum element; the new element has index 0
  /// and the original element k becomes k+1.
  Poset with_minimum_prepended() const;

  bool operator==(const Poset& o) const {
    return n_ == o.n_ && above_ == o.above_;
  }

 private:
  Poset(int n) : n_(n), above_(n, 0), below_(n, 0) {}
  int n_;
  std::vector<uint64_t> above_, below_;
};

/// Enumerate linear extensions (t_1,...,t_n) of P as element sequences,
/// invoking visit for each. Stops and throws cap_exceeded after max_count
/// extensions. Returns the number of extensions.
long for_each_linear_extension(
    const Poset& P, const std::function<void(const std::vector<int>&)>& visit,
    long max_count = 10000000L);

long count_linear_extensions(const Poset& P, long max_count = 10000000L);

/// Word statistics: descents of w at positions i (1-based) with
/// w_i > w_{i+1}; maj is the sum of descent positions.
struct WordStats {
  std::vector<int> descent_positions;
  int des = 0;
  long maj = 0;
  long inv = 0;
};
WordStats word_stats(const std::vector<int>& w);

/// The identity labeling omega(e_i) = i+1.
std::vector<int> natural_labeling(int n);

/// sum over linear extensions (t_1..t_n) of q^{maj(omega(t_1)...omega(t_n))}.
QPoly maj_gf(const Poset& P, const std::vector<int>& omega,
             long max_count = 10000000L);

/// Generating function sum q^{|sigma|} over (P, omega)-partitions sigma
/// (order-reversing maps to nonnegative integers, strict along relations
/// x < y with omega(x) > omega(y)) subject to lo_i <= sigma(e_i) < hi_i.
/// hi_i < 0 means unbounded above. Coefficients are reported through degree
/// `budget`; they are exact in that range (and the polynomial is exact when
/// every hi_i is finite and the total maximum is at most `budget`).
QPoly ppartition_gf_bounded(const Poset& P, const std::vector<int>& omega,
                            const std::vector<int>& lo,
                            const std::vector<int>& hi, int budget);

/// Unbounded (P, omega)-partition generating function through degree budget.
QPoly ppartition_gf(const Poset& P, const std::vector<int>& omega, int budget);

/// JSON serialization: {"n": int, "covers": [[i,j],...], "omega": [...]}.
/// omega is optional on input and defaults to the identity labeling.
Poset poset_from_json(const std::string& text, std::vector<int>* omega_out);
std::string poset_to_json(const Poset& P, const std::vector<int>& omega);

}  // namespace qvol
