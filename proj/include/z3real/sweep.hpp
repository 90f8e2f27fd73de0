#pragma once

// Exhaustive check of the constructions: every graphic sequence on n
// vertices with entries in [3, n-1] that classifies as Covered.

#include <string>
#include <vector>

#include "z3real/builder.hpp"

namespace z3real {

struct SweepRow {
  int n = 0;
  long long graphic = 0;
  long long covered = 0;
  long long exceptions = 0;
  long long out_of_coverage = 0;
  long long verified = 0;
  long long failures = 0;
};

struct SweepFailure {
  DegreeSequence sequence;
  std::string reason;
};

struct SweepReport {
  std::vector<SweepRow> rows;
  std::vector<SweepFailure> failures;

  bool ok() const { return failures.empty(); }
};

/// Nonincreasing sequences of length n with entries in [3, n-1], in
/// reverse lexicographic order.
inline std::vector<DegreeSequence> min3_sequences(int n) {
  std::vector<DegreeSequence> out;
  if (n < 4) return out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int hi) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.emplace_back(cur);
      return;
    }
    for (int v = hi; v >= 3; --v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, n - 1);
  return out;
}

/// Result is valid when it is simple, degree-exact and passes the oracle
/// (or, above the oracle cap, carries a replaying certificate).
inline std::string check_realization(const DegreeSequence& seq, const RealizationResult& r, int oracle_cap) {
  if (!r.realized()) return std::string(to_string(r.kind)) + (r.reason.empty() ? "" : ": " + r.reason);
  if (!r.graph.is_simple()) return "not simple";
  if (degree_sequence_of(r.graph) != seq || r.graph.vertex_count() != seq.size()) return "wrong degree sequence";
  if (seq.size() <= oracle_cap) return is_z3_connected(r.graph, oracle_cap) ? "" : "oracle says not Z3-connected";
  auto cert = certify(r.graph, r.lifts);
  if (cert && replay(r.graph, *cert)) return "";
  return "no proof above the oracle cap";
}

inline SweepReport sweep(int n_min, int n_max, RealizeOptions opt = {}) {
  opt.prove = false;
  SweepReport report;
  for (int n = n_min; n <= n_max; ++n) {
    SweepRow row;
    row.n = n;
    for (const auto& seq : min3_sequences(n)) {
      const auto c = classify(seq);
      if (c.tag == ClassTag::NotGraphic) continue;
      ++row.graphic;
      if (c.is_exception()) ++row.exceptions;
      if (c.tag == ClassTag::OutOfCoverage) ++row.out_of_coverage;
      if (c.tag != ClassTag::Covered) continue;
      ++row.covered;
      std::string reason;
      try {
        reason = check_realization(seq, realize(seq, opt), opt.oracle_cap);
      } catch (const std::exception& e) {
        reason = e.what();
      }
      if (reason.empty()) {
        ++row.verified;
      } else {
        ++row.failures;
        report.failures.push_back({seq, reason});
      }
    }
    report.rows.push_back(row);
  }
  return report;
}

}  // namespace z3real
