#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kdec/complex.hpp"
#include "kdec/decomp.hpp"
#include "kdec/trace.hpp"

namespace kdec {

/// Maps external vertex labels to dense internal ids and back.
///
/// If every label is an integer in 0..63 the table is the identity, so files
/// written with numeric labels keep their numbers. Otherwise labels get ids
/// 0..m-1 in sorted order (numbers first, by value).
class LabelTable {
 public:
  static LabelTable identity();
  static LabelTable for_tokens(const std::vector<std::string>& tokens);

  bool is_identity() const { return identity_; }
  /// Throws parse-error for an unknown label.
  Vertex id(std::string_view label) const;
  std::optional<Vertex> find(std::string_view label) const;
  /// Unnamed ids print as their number in identity mode and as "c<id>"
  /// otherwise.
  std::string name(Vertex v) const;
  /// Names a previously unnamed id. Throws overlap if the label is taken.
  void assign(Vertex v, std::string label);

  /// Parses "1,5", "1 5" or "{1,5}".
  Face parse_face(std::string_view text) const;
  /// "{1,5}"; "{}" for the empty face.
  std::string format_face(Face f) const;
  /// "1 5" (space separated, no braces).
  std::string format_facet_line(Face f) const;

 private:
  bool identity_ = true;
  std::vector<std::string> names_;  // indexed by id; empty = unnamed
};

struct ParsedComplex {
  Complex complex;
  LabelTable labels;
};

/// One facet per line, whitespace-separated labels; '#' starts a comment;
/// an optional "ground: <labels>" line; "{}" stands for the empty face.
/// No facet lines means the void complex. Throws parse-error (with line
/// number) and not-an-antichain.
ParsedComplex parse_complex(std::string_view text);
/// Inverse of parse_complex; the ground line is written only when there are
/// loops.
std::string serialize_complex(const Complex& c, const LabelTable& labels);

struct ParsedTrace {
  int k = 1;
  ExtensionTrace trace;
  LabelTable labels;
};

/// "k: <int>", then "START" followed by the start complex, then one
/// "ADD <labels> [SHED <labels>]" line per step.
ParsedTrace parse_trace(std::string_view text);
std::string serialize_trace(const ExtensionTrace& trace, int k, const LabelTable& labels);

/// `(shed {1,5} (del ...) (lk ...))` with leaves `simplex` and `trivial`.
std::string format_tree(const DecompositionTree& tree, const LabelTable& labels);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace kdec
