#include "kdec/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

#include "kdec/error.hpp"

namespace kdec {

namespace {

std::optional<int> as_int(std::string_view s) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

std::vector<std::string> split_tokens(std::string_view line) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.emplace_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

// Non-blank lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    auto tokens = split_tokens(line);
    if (!tokens.empty()) out.push_back({number, std::move(tokens)});
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

[[noreturn]] void fail_at(std::size_t line, const std::string& what) {
  throw Error(Errc::parse_error, "line " + std::to_string(line) + ": " + what);
}

Face face_at(const LabelTable& labels, const Line& line, std::size_t from, std::size_t to) {
  if (to - from == 1 && line.tokens[from] == "{}") return Face{};
  Face f;
  for (std::size_t i = from; i < to; ++i) {
    if (line.tokens[i] == "{}") fail_at(line.number, "'{}' must stand alone");
    const Vertex v = labels.id(line.tokens[i]);
    if (f.contains(v)) fail_at(line.number, "label '" + line.tokens[i] + "' repeated");
    f = f.with(v);
  }
  return f;
}

bool is_ground_line(const Line& line) { return line.tokens.front() == "ground:"; }

// Facet lines (and an optional ground line) into a complex.
Complex build_complex(const std::vector<Line>& lines, const LabelTable& labels) {
  Face ground;
  bool saw_ground = false;
  std::vector<Face> facets;
  bool saw_empty = false;
  for (const Line& line : lines) {
    if (is_ground_line(line)) {
      if (saw_ground) fail_at(line.number, "second ground line");
      saw_ground = true;
      ground = face_at(labels, line, 1, line.tokens.size());
      continue;
    }
    const Face f = face_at(labels, line, 0, line.tokens.size());
    if (f.empty()) {
      saw_empty = true;
    } else {
      facets.push_back(f);
    }
  }
  Face vertices;
  for (Face f : facets) vertices |= f;
  if (saw_ground && !ground.contains(vertices)) {
    throw Error(Errc::not_a_face, "ground line misses " + labels.format_face(vertices - ground));
  }
  ground |= vertices;
  if (saw_empty && !facets.empty()) {
    throw Error(Errc::not_an_antichain, "the empty face lies in every facet");
  }
  if (saw_empty) return Complex::empty_complex(ground);
  return Complex::from_facets(std::move(facets), ground);
}

std::vector<std::string> label_tokens(const std::vector<Line>& lines) {
  std::vector<std::string> out;
  for (const Line& line : lines) {
    for (const std::string& t : line.tokens) {
      if (t != "{}" && t != "ground:" && t != "ADD" && t != "SHED") out.push_back(t);
    }
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------

LabelTable LabelTable::identity() { return LabelTable(); }

LabelTable LabelTable::for_tokens(const std::vector<std::string>& tokens) {
  const bool numeric = std::all_of(tokens.begin(), tokens.end(), [](const std::string& t) {
    const auto v = as_int(t);
    return v && *v >= 0 && *v < kMaxVertices && std::to_string(*v) == t;
  });
  if (numeric) return identity();

  std::vector<std::string> names = tokens;
  std::sort(names.begin(), names.end(), [](const std::string& a, const std::string& b) {
    const auto x = as_int(a);
    const auto y = as_int(b);
    if (x && y) return *x != *y ? *x < *y : a < b;
    if (x || y) return x.has_value();
    return a < b;
  });
  names.erase(std::unique(names.begin(), names.end()), names.end());
  if (names.size() > static_cast<std::size_t>(kMaxVertices)) {
    throw Error(Errc::universe_too_large,
                std::to_string(names.size()) + " distinct labels, at most 64 supported");
  }
  LabelTable table;
  table.identity_ = false;
  table.names_ = std::move(names);
  return table;
}

std::optional<Vertex> LabelTable::find(std::string_view label) const {
  const auto it = std::find(names_.begin(), names_.end(), label);
  if (it != names_.end()) return static_cast<Vertex>(it - names_.begin());
  if (identity_) {
    const auto v = as_int(label);
    if (v && *v >= 0 && *v < kMaxVertices && std::to_string(*v) == label) return *v;
  }
  return std::nullopt;
}

Vertex LabelTable::id(std::string_view label) const {
  if (auto v = find(label)) return *v;
  throw Error(Errc::parse_error, "unknown vertex label '" + std::string(label) + "'");
}

std::string LabelTable::name(Vertex v) const {
  const auto i = static_cast<std::size_t>(v);
  if (i < names_.size() && !names_[i].empty()) return names_[i];
  return identity_ ? std::to_string(v) : "c" + std::to_string(v);
}

void LabelTable::assign(Vertex v, std::string label) {
  if (auto existing = find(label); existing && *existing != v) {
    throw Error(Errc::overlap, "label '" + label + "' already names another vertex");
  }
  const auto i = static_cast<std::size_t>(v);
  if (names_.size() <= i) names_.resize(i + 1);
  names_[i] = std::move(label);
}

Face LabelTable::parse_face(std::string_view text) const {
  std::string cleaned(text);
  for (char& ch : cleaned) {
    if (ch == ',' || ch == '{' || ch == '}') ch = ' ';
  }
  Face f;
  for (const std::string& t : split_tokens(cleaned)) f = f.with(id(t));
  return f;
}

std::string LabelTable::format_face(Face f) const {
  std::string out = "{";
  bool first = true;
  for (Vertex v : f) {
    if (!first) out += ',';
    out += name(v);
    first = false;
  }
  return out + "}";
}

std::string LabelTable::format_facet_line(Face f) const {
  if (f.empty()) return "{}";
  std::string out;
  for (Vertex v : f) {
    if (!out.empty()) out += ' ';
    out += name(v);
  }
  return out;
}

// ---------------------------------------------------------------------------

ParsedComplex parse_complex(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  LabelTable labels = LabelTable::for_tokens(label_tokens(lines));
  Complex c = build_complex(lines, labels);
  return {std::move(c), std::move(labels)};
}

std::string serialize_complex(const Complex& c, const LabelTable& labels) {
  std::string out;
  if (c.ground_set() != c.vertex_set()) {
    out += "ground:";
    for (Vertex v : c.ground_set()) out += " " + labels.name(v);
    out += '\n';
  }
  if (c.is_empty()) out += "{}\n";
  for (Face f : c.facets()) out += labels.format_facet_line(f) + '\n';
  return out;
}

ParsedTrace parse_trace(std::string_view text) {
  const std::vector<Line> lines = content_lines(text);
  if (lines.empty() || lines[0].tokens.size() != 2 || lines[0].tokens[0] != "k:") {
    throw Error(Errc::parse_error, "trace must begin with 'k: <int>'");
  }
  ParsedTrace out;
  const auto k = as_int(lines[0].tokens[1]);
  if (!k || *k < 0) fail_at(lines[0].number, "k must be a non-negative integer");
  out.k = *k;
  if (lines.size() < 2 || lines[1].tokens != std::vector<std::string>{"START"}) {
    fail_at(lines.size() < 2 ? lines[0].number : lines[1].number, "expected START");
  }
  std::size_t first_step = 2;
  while (first_step < lines.size() && lines[first_step].tokens.front() != "ADD") ++first_step;

  const std::vector<Line> body(lines.begin() + 2, lines.end());
  out.labels = LabelTable::for_tokens(label_tokens(body));
  const std::vector<Line> start(lines.begin() + 2, lines.begin() + static_cast<long>(first_step));
  out.trace = ExtensionTrace(build_complex(start, out.labels));

  for (std::size_t i = first_step; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.tokens.front() != "ADD") fail_at(line.number, "expected an ADD line");
    const auto shed = std::find(line.tokens.begin(), line.tokens.end(), "SHED");
    const auto split = static_cast<std::size_t>(shed - line.tokens.begin());
    if (split == 1) fail_at(line.number, "ADD without a facet");
    const Face facet = face_at(out.labels, line, 1, split);
    std::optional<Face> shedding;
    if (shed != line.tokens.end()) {
      if (split + 1 == line.tokens.size()) fail_at(line.number, "SHED without a face");
      shedding = face_at(out.labels, line, split + 1, line.tokens.size());
    }
    try {
      out.trace.add(facet, shedding);
    } catch (const Error& e) {
      fail_at(line.number, e.what());
    }
  }
  return out;
}

std::string serialize_trace(const ExtensionTrace& trace, int k, const LabelTable& labels) {
  std::string out = "k: " + std::to_string(k) + "\nSTART\n";
  out += serialize_complex(trace.start(), labels);
  for (const TraceStep& step : trace.steps()) {
    out += "ADD " + labels.format_facet_line(step.facet);
    if (step.shedding) out += " SHED " + labels.format_facet_line(*step.shedding);
    out += '\n';
  }
  return out;
}

std::string format_tree(const DecompositionTree& tree, const LabelTable& labels) {
  switch (tree.kind()) {
    case DecompositionTree::Kind::simplex_leaf: return "simplex";
    case DecompositionTree::Kind::trivial_leaf: return "trivial";
    case DecompositionTree::Kind::internal: break;
  }
  return "(shed " + labels.format_face(tree.shedding_face()) + " (del " +
         format_tree(tree.deletion_child(), labels) + ") (lk " +
         format_tree(tree.link_child(), labels) + "))";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::parse_error, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::parse_error, "cannot write " + path);
  out << contents;
}

}  // namespace kdec
