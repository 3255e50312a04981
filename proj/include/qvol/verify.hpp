#pragma once

#include <string>
#include <vector>

#include "qvol/qrat.hpp"

namespace qvol {

/// Outcome of one verified identity: a parameter sweep checked exactly
/// (rational-function equality) or coefficientwise to a stated series
/// degree. `params` describes the sweep; `lhs`/`rhs` show one sample
/// instance (the first failing instance if any, otherwise the first).
struct VerificationReport {
  std::string name;
  std::string params;
  std::string lhs, rhs;
  bool equal = true;
  std::string mode;  // "exact", "series(N)", or "exact+series(N)"
  long cases = 0;
  double elapsed = 0.0;  // seconds; printed only when timings are requested
};

struct VerifyOptions {
  long max_extensions = 10000000L;
  int series_degree = 20;
  int max_size = 8;  // size cap for the inserted-chain poset sweep
};

/// The identities checked by criterion group k (1..12), in a fixed order.
std::vector<VerificationReport> verify_criterion(int k,
                                                 const VerifyOptions& opt);

/// All criterion groups concatenated; every identity appears exactly once.
/// Independent identities run concurrently, limited by QVOL_THREADS (or
/// the hardware concurrency); the report order is fixed regardless.
std::vector<VerificationReport> verify_all(const VerifyOptions& opt);

bool all_equal(const std::vector<VerificationReport>& reports);

/// Deterministic renderings; `timings` adds the elapsed field.
std::string render_text(const std::vector<VerificationReport>& reports,
                        bool timings);
std::string render_json(const std::vector<VerificationReport>& reports,
                        bool timings);

}  // namespace qvol
