#include "cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>

#include "kdec/decomp.hpp"
#include "kdec/enumerate.hpp"
#include "kdec/error.hpp"
#include "kdec/extend.hpp"
#include "kdec/io.hpp"
#include "kdec/trace.hpp"

namespace kdec::cli {

namespace {

struct Globals {
  std::optional<std::uint64_t> budget;
  std::uint64_t seed = 1;
  bool quiet = false;

  SearchOptions search() const { return {budget}; }
};

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::yes: return exit_yes;
    case Verdict::no: return exit_no;
    case Verdict::inconclusive: return exit_inconclusive;
  }
  return exit_input_error;
}

const char* verdict_word(Verdict v) {
  switch (v) {
    case Verdict::yes: return "YES";
    case Verdict::no: return "NO";
    case Verdict::inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

// ---------------------------------------------------------------------------

struct CheckArgs {
  std::string file;
  int k = 1;
};

int run_check(const CheckArgs& a, const Globals& g, std::ostream& out) {
  const ParsedComplex input = parse_complex(read_file(a.file));
  const Decision d = decide_k_decomposable(input.complex, a.k, g.search());
  out << verdict_word(d.verdict) << '\n';
  if (d.witness && !g.quiet) out << "witness: " << format_tree(*d.witness, input.labels) << '\n';
  return verdict_exit(d.verdict);
}

struct ShedArgs {
  std::string file;
  std::string face;
};

int run_shed(const ShedArgs& a, const Globals& g, std::ostream& out, std::ostream& err) {
  const ParsedComplex input = parse_complex(read_file(a.file));
  const Face f = input.labels.parse_face(a.face);
  const bool gluing = is_shedding_face(input.complex, f);
  const bool direct = is_shedding_face_direct(input.complex, f);
  if (gluing != direct) {
    err << "internal error: gluing criterion says " << (gluing ? "yes" : "no")
        << ", direct test says " << (direct ? "yes" : "no") << '\n';
    return exit_disagreement;
  }
  out << (gluing ? "SHEDDING" : "NOT SHEDDING") << ' ' << input.labels.format_face(f) << '\n';
  if (!g.quiet) {
    out << "gluing: " << (gluing ? "yes" : "no") << "\ndirect: " << (direct ? "yes" : "no")
        << '\n';
  }
  return gluing ? exit_yes : exit_no;
}

// ---------------------------------------------------------------------------

struct ExtendArgs {
  std::string file;
  std::string target = "simplex";
  std::vector<std::string> cone_labels;
  std::string out_path;
};

// Cone vertex ids for `count` fresh vertices. Numeric names that are free ids
// are used as is; anything else gets consecutive ids above the ground set and
// the names are recorded in the table.
Face allocate_cone(const Complex& c, LabelTable& labels, const std::vector<std::string>& names,
                   int count) {
  const Face used = c.ground_set() | c.vertex_set();
  if (labels.is_identity() && !names.empty()) {
    Face direct;
    bool usable = true;
    for (const std::string& name : names) {
      const auto v = labels.find(name);
      if (!v || used.contains(*v) || direct.contains(*v)) {
        usable = false;
        break;
      }
      direct = direct.with(*v);
    }
    if (usable) return direct;
  }
  Vertex next = used.empty() ? 0 : used.max() + 1;
  if (next + count > kMaxVertices) {
    throw Error(Errc::universe_too_large, "not enough labels left for the cone vertices");
  }
  Face cone;
  int fallback = 1;
  for (int i = 0; i < count; ++i, ++next) {
    cone = cone.with(next);
    if (i < static_cast<int>(names.size())) {
      labels.assign(next, names[static_cast<std::size_t>(i)]);
    } else if (!labels.is_identity()) {
      std::string name;
      do {
        name = "h" + std::to_string(fallback++);
      } while (labels.find(name));
      labels.assign(next, name);
    }
  }
  return cone;
}

int run_extend(const ExtendArgs& a, const Globals& g, std::ostream& out) {
  ParsedComplex input = parse_complex(read_file(a.file));
  const Complex& c = input.complex;
  const int d = dimension(c);
  const int names = static_cast<int>(a.cone_labels.size());
  ExtensionTrace trace;

  if (a.target == "full") {
    if (d != 2) throw Error(Errc::not_applicable, "--target full needs a 2-dimensional complex");
    if (names > 0) throw Error(Errc::not_applicable, "--target full takes no cone labels");
    trace = extend_to_full_2d(c, g.search());
  } else if (a.target == "cocl") {
    const int count = names > 0 ? names : std::max(d - 2, 0);
    if (count < d - 2) throw Error(Errc::not_applicable, "cocl needs at least d-2 cone labels");
    const Face cone = allocate_cone(c, input.labels, a.cone_labels, count);
    trace = extend_to_cocl(c, cone, g.search());
  } else {
    const int count = std::max(d - 2, 0);
    if (names > 0 && names != count) {
      throw Error(Errc::not_applicable,
                  "--target simplex needs exactly " + std::to_string(count) + " cone labels");
    }
    const Face cone = allocate_cone(c, input.labels, a.cone_labels, count);
    trace = extend_main(c, cone, g.search());
  }

  const std::string text = serialize_trace(trace, 1, input.labels);
  if (a.out_path.empty()) {
    out << text;
  } else {
    write_file(a.out_path, text);
    if (!g.quiet) out << "wrote " << trace.size() << " steps to " << a.out_path << '\n';
  }
  return exit_yes;
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string file;
};

int run_verify(const VerifyArgs& a, const Globals& g, std::ostream& out) {
  const ParsedTrace input = parse_trace(read_file(a.file));
  const CertificationReport report = certify_trace(input.trace, input.k, g.search());
  const auto steps = input.trace.steps();
  if (!g.quiet) {
    for (const PrefixCertificate& p : report.prefixes) {
      if (p.verdict == Verdict::yes && p.shedding_ok.value_or(true)) continue;
      out << "prefix " << p.length << ": " << verdict_word(p.verdict);
      if (p.length > 0) out << " after ADD " << input.labels.format_facet_line(steps[p.length - 1].facet);
      if (p.shedding_ok == false) out << " (bad SHED annotation)";
      out << '\n';
    }
  }
  const std::size_t total = report.prefixes.size();
  if (report.passed) {
    out << "PASS " << total << " prefixes " << input.k << "-decomposable\n";
    return exit_yes;
  }
  out << "FAIL first failing prefix " << *report.first_failure << " of " << total - 1 << '\n';
  const bool only_budget = std::all_of(report.prefixes.begin(), report.prefixes.end(),
                                       [](const PrefixCertificate& p) {
                                         return p.verdict != Verdict::no &&
                                                p.shedding_ok.value_or(true);
                                       });
  return only_budget ? exit_inconclusive : exit_no;
}

// ---------------------------------------------------------------------------

struct EnumerateArgs {
  int n = 0;
  int d = 0;
  std::string mode;
};

int run_enumerate(const EnumerateArgs& a, const Globals& g, std::ostream& out) {
  if (a.mode == "extendability") {
    const ExtendabilityReport r = scan_extendability(a.n, a.d, g.search());
    out << "extendability of 1-decomposable subcomplexes of the " << a.d
        << "-skeleton of the simplex on " << a.n << " vertices\n";
    out << std::setw(8) << "facets" << std::setw(10) << "classes" << std::setw(12) << "extendable"
        << std::setw(8) << "stuck" << '\n';
    std::size_t total = 0;
    for (const ExtendabilityLevel& l : r.levels) {
      out << std::setw(8) << l.facets << std::setw(10) << l.classes << std::setw(12)
          << l.extendable << std::setw(8) << l.stuck << '\n';
      total += l.classes;
    }
    out << "classes: " << total << '\n';
    const LabelTable labels = LabelTable::identity();
    for (const Complex& c : r.stuck_examples) {
      out << "stuck:";
      for (Face f : c.facets()) out << ' ' << labels.format_face(f);
      out << '\n';
    }
    if (r.inconclusive) {
      out << "INCONCLUSIVE\n";
      return exit_inconclusive;
    }
    out << (r.confirmed() ? "CONFIRMED" : "COUNTEREXAMPLE") << '\n';
    return r.confirmed() ? exit_yes : exit_no;
  }

  const ThresholdReport r = scan_thresholds(a.n, a.d, g.search());
  out << "pure " << a.d << "-dimensional complexes on " << a.n
      << " vertices, up to isomorphism\n";
  out << std::setw(8) << "facets" << std::setw(10) << "classes" << std::setw(8) << "0-dec"
      << std::setw(8) << "1-dec" << std::setw(11) << "shellable" << '\n';
  for (const ThresholdLevel& l : r.levels) {
    if (l.classes == 0) continue;
    out << std::setw(8) << l.facets << std::setw(10) << l.classes << std::setw(8)
        << l.vertex_decomposable << std::setw(8) << l.one_decomposable << std::setw(11)
        << l.shellable << '\n';
  }
  const auto show = [&](const char* what, const std::optional<std::size_t>& from) {
    out << what << " from " << (from ? std::to_string(*from) : std::string("-")) << " facets\n";
  };
  show("all 0-decomposable", r.vertex_decomposable_from);
  show("all 1-decomposable", r.one_decomposable_from);
  show("all shellable", r.shellable_from);
  if (r.inconclusive) {
    out << "INCONCLUSIVE\n";
    return exit_inconclusive;
  }
  return exit_yes;
}

// ---------------------------------------------------------------------------

struct RandomArgs {
  int n = 0;
  int d = 0;
  int facets = 0;
  int k = 1;
};

// Grows a k-decomposable complex facet by facet from a random start, trying
// candidates in shuffled order. Stops early if no candidate keeps the
// property.
int run_random(const RandomArgs& a, const Globals& g, std::ostream& out) {
  if (a.n < 1 || a.d < 0 || a.d + 1 > a.n || a.n > kMaxVertices || a.facets < 1) {
    throw Error(Errc::not_applicable, "need 0 <= d < n <= 64 and at least one facet");
  }
  std::mt19937_64 rng(g.seed);
  std::vector<Face> pool = subsets_of_size(Face::range(0, a.n - 1), a.d + 1);
  std::shuffle(pool.begin(), pool.end(), rng);
  Decomposer oracle(a.k, g.search());
  Complex c = Complex::from_facets({pool.front()});
  pool.erase(pool.begin());
  while (static_cast<int>(c.facet_count()) < a.facets) {
    std::shuffle(pool.begin(), pool.end(), rng);
    const auto it = std::find_if(pool.begin(), pool.end(), [&](Face f) {
      return oracle.verdict(add_facet(c, f)) == Verdict::yes;
    });
    if (it == pool.end()) break;
    c = add_facet(c, *it);
    pool.erase(it);
  }
  out << serialize_complex(c, LabelTable::identity());
  return exit_yes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"k-decomposability toolkit for pure simplicial complexes", "kdec"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::uint64_t budget = 0;
  auto* budget_opt = app.add_option("--budget", budget, "search node cap per query");
  app.add_option("--seed", g.seed, "seed for randomized generation");
  app.add_flag("--quiet", g.quiet, "print only the verdict");

  CheckArgs check;
  auto* check_cmd = app.add_subcommand("check", "decide k-decomposability, print a witness");
  check_cmd->add_option("file", check.file)->required();
  check_cmd->add_option("--k", check.k)->required()->check(CLI::NonNegativeNumber);

  ShedArgs shed;
  auto* shed_cmd = app.add_subcommand("shed", "test a shedding face by both criteria");
  shed_cmd->add_option("file", shed.file)->required();
  shed_cmd->add_option("--face", shed.face, "labels, comma or space separated")->required();

  ExtendArgs extend;
  auto* extend_cmd = app.add_subcommand("extend", "write a 1-decomposable extension trace");
  extend_cmd->add_option("file", extend.file)->required();
  extend_cmd->add_option("--target", extend.target)
      ->check(CLI::IsMember({"simplex", "cocl", "full"}));
  extend_cmd->add_option("--cone-labels", extend.cone_labels, "names for the cone vertices")
      ->delimiter(',');
  extend_cmd->add_option("--out", extend.out_path, "trace file (default stdout)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "certify every prefix of a trace");
  verify_cmd->add_option("file", verify.file)->required();

  EnumerateArgs enumerate;
  auto* enumerate_cmd = app.add_subcommand("enumerate", "small-case scans");
  enumerate_cmd->add_option("--n", enumerate.n)->required();
  enumerate_cmd->add_option("--d", enumerate.d)->required();
  enumerate_cmd->add_option("--mode", enumerate.mode)
      ->required()
      ->check(CLI::IsMember({"extendability", "thresholds"}));

  RandomArgs random;
  auto* random_cmd = app.add_subcommand("random", "random k-decomposable complex");
  random_cmd->add_option("--n", random.n)->required();
  random_cmd->add_option("--d", random.d)->required();
  random_cmd->add_option("--facets", random.facets)->required();
  random_cmd->add_option("--k", random.k)->check(CLI::NonNegativeNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_yes;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n' << app.help();
    return exit_usage;
  }
  if (budget_opt->count() > 0) g.budget = budget;

  try {
    if (*check_cmd) return run_check(check, g, out);
    if (*shed_cmd) return run_shed(shed, g, out, err);
    if (*extend_cmd) return run_extend(extend, g, out);
    if (*verify_cmd) return run_verify(verify, g, out);
    if (*enumerate_cmd) return run_enumerate(enumerate, g, out);
    if (*random_cmd) return run_random(random, g, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::budget_exhausted ? exit_inconclusive : exit_input_error;
  }
  return exit_usage;
}

}  // namespace kdec::cli
