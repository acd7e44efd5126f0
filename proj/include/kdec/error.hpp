#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace kdec {

/// Failure categories raised by the library. Each maps to a stable
/// kebab-case name (see to_string) that the CLI prints.
enum class Errc {
  not_a_face,
  dimension_too_low,
  size_mismatch,
  dimension_mismatch,
  overlap,
  not_disjoint,
  not_pure,
  not_an_antichain,
  bad_witness,
  empty_graph,
  not_applicable,
  not_decomposable,
  disconnected_base,
  universe_too_large,
  parse_error,
  budget_exhausted,
};

std::string_view to_string(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail);

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace kdec
