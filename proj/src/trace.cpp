#include "kdec/trace.hpp"

#include <string>

#include "kdec/error.hpp"

namespace kdec {

ExtensionTrace::ExtensionTrace(Complex start) : start_(std::move(start)) {
  if (start_.is_proper()) facet_size_ = start_.facets().front().size();
}

void ExtensionTrace::add(Face facet, std::optional<Face> shedding) {
  if (facet.empty() || (facet_size_ != 0 && facet.size() != facet_size_)) {
    throw Error(Errc::dimension_mismatch,
                "step " + std::to_string(steps_.size() + 1) + " has the wrong cardinality");
  }
  if (start_.has_facet(facet) || added_.contains(facet)) {
    throw Error(Errc::overlap, "step " + std::to_string(steps_.size() + 1) + " repeats a facet");
  }
  facet_size_ = facet.size();
  added_.insert(facet);
  steps_.push_back({facet, shedding});
}

std::vector<Face> ExtensionTrace::added_facets() const {
  std::vector<Face> out;
  out.reserve(steps_.size());
  for (const TraceStep& s : steps_) out.push_back(s.facet);
  return out;
}

Complex ExtensionTrace::prefix(std::size_t count) const {
  if (count == 0) return start_;
  std::vector<Face> facets(start_.facets().begin(), start_.facets().end());
  Face ground = start_.ground_set();
  for (std::size_t i = 0; i < count && i < steps_.size(); ++i) {
    facets.push_back(steps_[i].facet);
    ground |= steps_[i].facet;
  }
  return Complex::generated_by(std::move(facets), ground);
}

CertificationReport certify_trace(const ExtensionTrace& trace, int k,
                                  const SearchOptions& options) {
  CertificationReport report;
  report.k = k;
  Decomposer oracle(k, options);
  for (std::size_t i = 0; i <= trace.size(); ++i) {
    const Complex current = trace.prefix(i);
    PrefixCertificate cert;
    cert.length = i;
    cert.verdict = oracle.verdict(current);
    if (i > 0) {
      const TraceStep& step = trace.steps()[i - 1];
      if (step.shedding) {
        const Face f = *step.shedding;
        cert.shedding_ok = !f.empty() && step.facet.contains(f) && is_pure(current) &&
                           is_shedding_face(current, f);
      }
    }
    const bool ok = cert.verdict == Verdict::yes && cert.shedding_ok.value_or(true);
    if (cert.verdict == Verdict::inconclusive) report.inconclusive = true;
    if (!ok && !report.first_failure) report.first_failure = i;
    report.prefixes.push_back(cert);
  }
  report.passed = !report.first_failure.has_value();
  return report;
}

}  // namespace kdec
