#include "kdec/error.hpp"

namespace kdec {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::not_a_face: return "not-a-face";
    case Errc::dimension_too_low: return "dimension-too-low";
    case Errc::size_mismatch: return "size-mismatch";
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::overlap: return "overlap";
    case Errc::not_disjoint: return "not-disjoint";
    case Errc::not_pure: return "not-pure";
    case Errc::not_an_antichain: return "not-an-antichain";
    case Errc::bad_witness: return "bad-witness";
    case Errc::empty_graph: return "empty-graph";
    case Errc::not_applicable: return "not-applicable";
    case Errc::not_decomposable: return "not-decomposable";
    case Errc::disconnected_base: return "disconnected-base";
    case Errc::universe_too_large: return "universe-too-large";
    case Errc::parse_error: return "parse-error";
    case Errc::budget_exhausted: return "budget-exhausted";
  }
  return "unknown";
}

namespace {
std::string compose(Errc code, const std::string& detail) {
  std::string msg(to_string(code));
  if (!detail.empty()) {
    msg += ": ";
    msg += detail;
  }
  return msg;
}
}  // namespace

Error::Error(Errc code, const std::string& detail)
    : std::runtime_error(compose(code, detail)), code_(code) {}

}  // namespace kdec
