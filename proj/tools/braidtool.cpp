// Command-line front end. Exit codes: 0 yes/verified, 1 no/failed check,
// 2 usage or parse error, 3 indeterminate.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "braid/centralizers.hpp"
#include "braid/instance_io.hpp"

using namespace braid;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kUsage = 2;
constexpr int kIndeterminate = 3;

bool logging() {
  const char* v = std::getenv("TOOL_LOG");
  return v && *v && std::string(v) != "0";
}

void log(const std::string& msg) {
  if (logging()) std::cerr << "[braidtool] " << msg << "\n";
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Options {
  int strands = 0;
  std::vector<std::string> words;
  std::string file;
  std::uint64_t seed = 0;
  int jobs = 1;
  std::size_t budget = SolverOptions{}.node_budget;
  int length = -1;
  std::string support;
  std::string gamma;
  std::string kind;
  int rank = 0;
};

SolverOptions solver_options(const Options& o) {
  SolverOptions s;
  s.node_budget = o.budget;
  s.jobs = o.jobs;
  if (o.length >= 0) s.fallback.max_length = o.length;
  return s;
}

int need_strands(const Options& o) {
  if (o.strands < 1) throw CLI::ValidationError("--strands", "is required");
  return o.strands;
}

int conjugacy_exit(const ConjugacyResult& r) {
  log("orbit tuples " + std::to_string(r.nodes) + (r.reason.empty() ? "" : ", " + r.reason));
  std::cout << format_conjugacy(r) << "\n";
  switch (r.decision) {
    case Decision::Yes:
      return kYes;
    case Decision::No:
      return kNo;
    case Decision::BoundedNegative:
      return kIndeterminate;
  }
  return kNo;
}

int run_nf(const Options& o) {
  const int n = need_strands(o);
  if (o.words.size() != 1) throw CLI::ValidationError("--word", "nf takes one word");
  std::cout << NormalForm::from_word(parse_word(o.words[0], n)).to_string() << "\n";
  return kYes;
}

int run_solve_conj(const Options& o) {
  const int n = need_strands(o);
  if (o.words.size() != 2) throw CLI::ValidationError("--word", "solve-conj takes two words");
  const auto x = NormalForm::from_word(parse_word(o.words[0], n));
  const auto y = NormalForm::from_word(parse_word(o.words[1], n));
  return conjugacy_exit(solve_conjugacy(x, y, solver_options(o)));
}

int run_solve_sim(const Options& o) {
  SimultaneousInstance inst;
  if (!o.file.empty()) {
    inst = parse_simultaneous(slurp(o.file));
  } else {
    std::string text = "n: " + std::to_string(need_strands(o)) + "\n";
    for (const auto& w : o.words) text += "pair: " + w + "\n";
    inst = parse_simultaneous(text);
  }
  return conjugacy_exit(solve_simultaneous(inst, solver_options(o)));
}

int run_solve_sub(const Options& o) {
  if (o.file.empty()) throw CLI::ValidationError("--file", "is required");
  const InstanceSpec spec = parse_instance(slurp(o.file));
  const auto inst = spec.build();
  const auto red = build_reduction_instance(inst);
  std::string labels;
  for (const auto& l : red.labels) labels += " " + l;
  log("constraint pairs:" + labels);
  const SubgroupResult r = solve_subgroup_conjugacy(inst, solver_options(o));
  std::cout << format_result(r) << "\n";
  switch (r.verdict) {
    case Verdict::Yes:
      return kYes;
    case Verdict::No:
      return kNo;
    case Verdict::Indeterminate:
      return kIndeterminate;
  }
  return kNo;
}

int run_centralizer(const Options& o) {
  const int n = need_strands(o);
  const std::string kind = o.kind.empty() ? "parabolic" : o.kind;
  GeneratorSet set;
  if (kind == "parabolic" || kind == "double") {
    ParabolicDescriptor d(n, parse_support(o.support, n), true);
    if (kind == "parabolic") {
      if (!o.gamma.empty()) throw CLI::ValidationError("--gamma", "only applies to --kind double");
      set = parabolic_centralizer_generators(d);
    } else {
      set = double_centralizer_generators(ConjugatedParabolic(d, NormalForm::from_word(parse_word(o.gamma, n))));
    }
  } else if (kind == "twist" || kind == "twist-full") {
    set = twist_centralizer_generators(n, o.rank, kind == "twist");
  } else if (kind == "block-orbit" || kind == "block-chain") {
    set = block_centralizer_generators(n, o.rank, kind == "block-orbit" ? BlockVariant::Orbit : BlockVariant::TwistChain);
  } else {
    throw CLI::ValidationError("--kind", "unknown centralizer kind '" + kind + "'");
  }
  for (const auto& g : set.elements) {
    std::cout << g.label << " " << g.provenance << " : " << format_word(g.value.to_word()) << "\n";
  }
  return kYes;
}

int run_verify(const Options& o) {
  const int n = need_strands(o);
  const int length = o.length >= 0 ? o.length : 3;
  std::vector<CheckResult> results = verify_structural_identities(n, o.jobs);
  for (int r = 2; r <= n - 1; ++r) {
    for (auto& c : verify_intersection_property(n, {IntersectionKind::TwistCentralizer, r, 1, 1}, length)) {
      results.push_back(std::move(c));
    }
  }
  for (int m = 1; m < n; ++m) {
    for (int K = 1; K <= n - m; ++K) {
      for (auto& c : verify_intersection_property(n, {IntersectionKind::ConstraintChain, 2, K, m}, length)) {
        results.push_back(std::move(c));
      }
    }
  }
  for (const auto& c : results) std::cout << format_check(c) << "\n";
  return all_pass(results) ? kYes : kNo;
}

int run_random(const Options& o) {
  const int n = need_strands(o);
  InstanceKind kind;
  if (o.kind.empty() || o.kind == "positive") {
    kind = InstanceKind::Positive;
  } else if (o.kind == "obstructed") {
    kind = InstanceKind::Obstructed;
  } else {
    throw CLI::ValidationError("--kind", "expected positive or obstructed");
  }
  const BraidWord gamma = o.gamma.empty() ? BraidWord(n, {}) : parse_word(o.gamma, n);
  std::cout << format_instance(random_instance(o.seed, n, parse_support(o.support, n), gamma, kind));
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Braid group normal forms, centralizers and subgroup conjugacy"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--strands,-n", o.strands, "Number of strands")->check(CLI::Range(1, kMaxStrands));
    sub->add_option("--jobs,-j", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto solver = [&](CLI::App* sub) {
    sub->add_option("--budget", o.budget, "Orbit search tuple budget")->check(CLI::PositiveNumber);
    sub->add_option("--length", o.length, "Brute-force fallback canonical length")->check(CLI::NonNegativeNumber);
  };

  auto* nf = app.add_subcommand("nf", "Print the left normal form of a word");
  common(nf);
  nf->add_option("--word,-w", o.words, "Braid word, e.g. \"1 -2 1\"")->required();

  auto* conj = app.add_subcommand("solve-conj", "Decide conjugacy of two braids");
  common(conj);
  solver(conj);
  conj->add_option("--word,-w", o.words, "x then y")->required();

  auto* sim = app.add_subcommand("solve-sim", "Decide simultaneous conjugacy");
  common(sim);
  solver(sim);
  sim->add_option("--word,-w", o.words, "Pair \"a ; b\", repeatable");
  sim->add_option("--file,-f", o.file, "Pair file");

  auto* sub = app.add_subcommand("solve-sub", "Decide conjugacy by an element of a parabolic subgroup");
  common(sub);
  solver(sub);
  sub->add_option("--file,-f", o.file, "Instance file")->required();

  auto* cent = app.add_subcommand("centralizer", "Print a centralizer generating set");
  common(cent);
  cent->add_option("--support", o.support, "Generator indices of the standard parabolic");
  cent->add_option("--gamma", o.gamma, "Conjugating word for --kind double");
  cent->add_option("--kind", o.kind, "parabolic, double, twist, twist-full, block-orbit or block-chain");
  cent->add_option("--rank,-r", o.rank, "r for the twist and block sets");

  auto* ver = app.add_subcommand("verify", "Run the identity and intersection checks");
  common(ver);
  ver->add_option("--length", o.length, "Word length for enumerated checks")->check(CLI::NonNegativeNumber);

  auto* rnd = app.add_subcommand("random", "Emit a seeded instance file");
  common(rnd);
  rnd->add_option("--seed", o.seed, "Random seed");
  rnd->add_option("--support", o.support, "Generator indices of H")->required();
  rnd->add_option("--gamma", o.gamma, "Conjugating word of H");
  rnd->add_option("--kind", o.kind, "positive or obstructed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*nf) return run_nf(o);
    if (*conj) return run_solve_conj(o);
    if (*sim) return run_solve_sim(o);
    if (*sub) return run_solve_sub(o);
    if (*cent) return run_centralizer(o);
    if (*ver) return run_verify(o);
    if (*rnd) return run_random(o);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
