#pragma once

#include <optional>
#include <span>
#include <unordered_set>
#include <vector>

#include "kdec/complex.hpp"
#include "kdec/decomp.hpp"

namespace kdec {

struct TraceStep {
  Face facet;
  /// A shedding face of the complex right after this step, contained in the
  /// added facet. Informational; verify() checks it when present.
  std::optional<Face> shedding;

  bool operator==(const TraceStep&) const = default;
};

/// A start complex plus facets added one at a time.
///
/// Added facets are pairwise distinct, absent from the start, and all of
/// cardinality dim(start)+1; add() enforces this.
class ExtensionTrace {
 public:
  ExtensionTrace() = default;
  explicit ExtensionTrace(Complex start);

  /// Throws overlap for a repeated or already present facet and
  /// dimension-mismatch for a wrong cardinality.
  void add(Face facet, std::optional<Face> shedding = std::nullopt);

  const Complex& start() const { return start_; }
  std::span<const TraceStep> steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  std::vector<Face> added_facets() const;

  /// start + first `count` steps.
  Complex prefix(std::size_t count) const;
  Complex final_complex() const { return prefix(steps_.size()); }

  bool operator==(const ExtensionTrace& other) const {
    return start_ == other.start_ && steps_ == other.steps_;
  }

 private:
  Complex start_;
  std::vector<TraceStep> steps_;
  std::unordered_set<Face> added_;
  int facet_size_ = 0;
};

struct PrefixCertificate {
  std::size_t length = 0;  // number of steps applied
  Verdict verdict = Verdict::no;
  /// Set when the step carries a shedding annotation.
  std::optional<bool> shedding_ok;
};

struct CertificationReport {
  int k = 0;
  std::vector<PrefixCertificate> prefixes;  // lengths 0..size()
  bool passed = false;
  /// First prefix length that failed (not decomposable, inconclusive, or a
  /// bad annotation).
  std::optional<std::size_t> first_failure;
  bool inconclusive = false;
};

/// Re-decides k-decomposability of every prefix start + F1..Fi with an
/// independent exhaustive search. Passes iff every prefix is decomposable and
/// every shedding annotation holds.
CertificationReport certify_trace(const ExtensionTrace& trace, int k,
                                  const SearchOptions& options = {});

}  // namespace kdec
