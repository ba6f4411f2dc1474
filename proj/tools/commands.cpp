// Copyright 2026 The plconj Authors.
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>

#include "mapspec.hpp"
#include "plconj/decider.hpp"
#include "plconj/structure.hpp"

namespace plconj::cli {

namespace {

struct Settings {
  std::size_t period_bound = kDefaultPeriodBound;
  std::size_t depth = kDefaultMaxDepth;
  std::size_t budget = kDefaultPieceBudget;
  std::string mode = "preserve";
  std::string tolerance = "1/256";
  std::size_t witness_depth = kDefaultWitnessDepth;
  std::string structure_out;
  std::string witness_out;
  std::string dot_out;
  std::string point;
  std::size_t length = 0;
  std::vector<std::string> maps;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

void write_file(const std::string& path, const std::string& content) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw UsageError("cannot open " + path + " for writing");
  file << content;
  if (!file) throw UsageError("failed writing " + path);
}

std::string set_line(const RationalSet& s) {
  return s.size() == 0 ? std::string() : " " + s.to_string();
}

std::string join_gaps(const GapList& gaps) {
  std::string out;
  for (const auto& g : gaps) out += " " + g.to_string();
  return out;
}

Mode parse_mode(const std::string& m) { return m == "any" ? Mode::any : Mode::preserve; }

int cmd_invariants(const Settings& s, std::ostream& out) {
  const PLMap f = parse_map(s.maps[0], s.budget);
  const StageFamily stages = closure(f, s.period_bound, s.depth, s.budget);
  out << "map: " << f.to_string() << '\n';
  out << "period-bound: " << s.period_bound << '\n';
  out << "sharp-extrema:" << set_line(sharp_extrema(f)) << '\n';
  out << "plateau-values:" << set_line(plateau_values(f)) << '\n';
  out << stages.to_string();
  out << "gaps:" << join_gaps(complementary_intervals(stages.final_set())) << '\n';
  if (!s.structure_out.empty()) {
    if (!stages.stabilized()) throw PreconditionError("closure did not stabilize; no structure to write");
    write_file(s.structure_out, canonical_encode(build_structure(f, stages)));
  }
  return kExitOk;
}

int cmd_compare(const Settings& s, std::ostream& out) {
  const PLMap f = parse_map(s.maps[0], s.budget);
  const PLMap g = parse_map(s.maps[1], s.budget);
  CompareOptions options;
  options.period_bound = s.period_bound;
  options.depth = s.depth;
  options.mode = parse_mode(s.mode);
  options.piece_budget = s.budget;
  const CompareResult r = stagewise_compare(f, g, options);
  if (const auto* d = std::get_if<Distinguished>(&r)) {
    out << "outcome: distinguished\nmode: " << to_string(options.mode) << "\nstage: " << d->stage
        << "\ncertificate: " << d->reason << '\n';
    return kExitDistinguished;
  }
  out << "outcome: consistent\nmode: " << to_string(options.mode)
      << "\ndepth: " << std::get<Consistent>(r).depth << '\n';
  return kExitOk;
}

int cmd_decide(const Settings& s, std::ostream& out) {
  const PLMap f = parse_map(s.maps[0], s.budget);
  const PLMap g = parse_map(s.maps[1], s.budget);
  DecideOptions options;
  options.period_bound = s.period_bound;
  options.max_depth = s.depth;
  options.mode = parse_mode(s.mode);
  options.witness_depth = s.witness_depth;
  options.piece_budget = s.budget;
  options.tolerance = Rational::parse(s.tolerance);
  if (options.tolerance.sign() <= 0) throw UsageError("tolerance must be positive");
  const Verdict v = decide_finite(f, g, options);
  out << v.report();
  if (const auto* c = std::get_if<ConjugateOutcome>(&v.outcome)) {
    if (!s.witness_out.empty()) write_file(s.witness_out, c->witness.map().to_string() + "\n");
    return kExitOk;
  }
  return kExitDistinguished;
}

int cmd_graph(const Settings& s, std::ostream& out) {
  const PLMap f = parse_map(s.maps[0], s.budget);
  const SystemAnalysis a = analyze(f, s.period_bound, s.depth, s.budget);
  write_file(s.dot_out, export_dot(a.graph));
  out << canonical_encode(a.graph);
  return kExitOk;
}

int cmd_orbit_pattern(const Settings& s, std::ostream& out) {
  const PLMap f = parse_map(s.maps[0], s.budget);
  const Rational x = Rational::parse(s.point);
  if (x.sign() < 0 || Rational(1) < x) throw DomainError("point " + x.to_string() + " outside [0,1]");
  out << orbit_order_pattern(f, x, s.length).to_string();
  return kExitOk;
}

void add_closure_flags(CLI::App* sub, Settings& s) {
  sub->add_option("--period-bound", s.period_bound, "period bound N")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  sub->add_option("--depth", s.depth, "maximum closure depth")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

void add_mode_flag(CLI::App* sub, Settings& s) {
  sub->add_option("--mode", s.mode, "orientation mode")
      ->check(CLI::IsMember({"preserve", "any"}))
      ->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Topological conjugacy of piecewise-linear interval maps", "plconj"};
  app.require_subcommand(1);
  app.add_option("--budget", s.budget, "piece budget for compositions")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  auto* inv = app.add_subcommand("invariants", "closure stages, extrema, plateaus and gaps");
  inv->add_option("map", s.maps, "map spec")->required()->expected(1);
  add_closure_flags(inv, s);
  inv->add_option("--structure-out", s.structure_out, "write the canonical structure encoding");

  auto* cmp = app.add_subcommand("compare", "stagewise comparison of two maps");
  cmp->add_option("maps", s.maps, "two map specs")->required()->expected(2);
  add_closure_flags(cmp, s);
  add_mode_flag(cmp, s);

  auto* dec = app.add_subcommand("decide", "full verdict with witness or certificate");
  dec->add_option("maps", s.maps, "two map specs")->required()->expected(2);
  add_closure_flags(dec, s);
  add_mode_flag(dec, s);
  dec->add_option("--tolerance", s.tolerance, "maximum witness defect p/q")->capture_default_str();
  dec->add_option("--witness-depth", s.witness_depth, "fundamental domains per wandering end")
      ->capture_default_str();
  dec->add_option("--witness-out", s.witness_out, "write the witness homeomorphism");

  auto* gr = app.add_subcommand("graph", "interval graph as DOT");
  gr->add_option("map", s.maps, "map spec")->required()->expected(1);
  add_closure_flags(gr, s);
  gr->add_option("--dot", s.dot_out, "output DOT file")->required();

  auto* orb = app.add_subcommand("orbit-pattern", "order matrix of an orbit segment");
  orb->add_option("map", s.maps, "map spec")->required()->expected(1);
  orb->add_option("--point", s.point, "initial point p/q")->required();
  orb->add_option("--length", s.length, "number of orbit points")->required();

  std::vector<std::string> argv_storage{"plconj"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (inv->parsed()) return cmd_invariants(s, out);
    if (cmp->parsed()) return cmd_compare(s, out);
    if (dec->parsed()) return cmd_decide(s, out);
    if (gr->parsed()) return cmd_graph(s, out);
    return cmd_orbit_pattern(s, out);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const WitnessDepthExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace plconj::cli
