#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include <CLI11.hpp>

#include "colorsampler/chain.hpp"
#include "colorsampler/error.hpp"
#include "colorsampler/flow.hpp"
#include "colorsampler/graph.hpp"
#include "colorsampler/report.hpp"
#include "colorsampler/sampler.hpp"
#include "colorsampler/separators.hpp"
#include "colorsampler/state_space.hpp"
#include "colorsampler/transition_matrix.hpp"

namespace colorsampler::cli {

namespace {

struct Options {
  std::string graph;
  int colors = 0;
  double delta = 0.05;
  std::optional<std::uint64_t> steps;
  std::uint64_t seed = 0;
  std::string chain = "single-flaw";
  std::string order;
  std::optional<std::uint64_t> trials;
  bool exact_tau = false;
  bool honor_theory = false;
  bool parallel = false;
};

// Thrown for flag combinations CLI11 cannot express.
struct UsageError : Error {
  using Error::Error;
};

LinearOrder resolve_order(const Graph& g, const Options& o, int* vsn_out) {
  if (!o.order.empty()) {
    LinearOrder order = load_order_file(o.order, g.num_vertices());
    *vsn_out = vertex_separation_number(g, order);
    return order;
  }
  MinimalOrder best = find_minimal_order(g);
  *vsn_out = best.vsn;
  return best.order;
}

double lambda_of(int n, int vsn) { return n < 2 ? 0.0 : vsn / std::log2(static_cast<double>(n)); }

// Steps per attempt: --steps, --exact-tau, or --honor-theory, in that order.
std::uint64_t resolve_steps(const Graph& g, const Options& o, SamplerParams& params,
                            std::ostream& err) {
  if (o.steps) return *o.steps;
  const int n = g.num_vertices();
  const double delta1 = params.delta1(n);
  if (o.exact_tau) {
    const StateSpace space = enumerate_states(g, o.colors);
    const TransitionMatrix p = build_transition_matrix(g, ChainConfig{o.colors}, space);
    const MixingTime t = exact_mixing_time(p, delta1);
    err << "exact mixing time for delta1=" << delta1 << ": " << t.steps << " steps\n";
    return t.steps;
  }
  int vsn = 0;
  resolve_order(g, o, &vsn);
  const double bound =
      theoretical_tau_bound(n, g.max_degree(), o.colors, vsn, lambda_of(n, vsn), delta1);
  err << "theoretical tau(delta1=" << delta1 << ") = " << bound << " steps\n";
  if (!o.honor_theory)
    throw UsageError("pass --steps N, --exact-tau or --honor-theory to choose the run length");
  if (!(bound < 9.2e18)) throw ConfigError("theoretical step count does not fit in 64 bits");
  return static_cast<std::uint64_t>(std::ceil(bound));
}

SamplerParams sampler_params(const Graph& g, const Options& o) {
  SamplerParams params;
  params.k = o.colors;
  params.delta = o.delta;
  params.seed = o.seed;
  params.parallel = o.parallel;
  params.validate(g);
  return params;
}

void emit(std::ostream& out, const nlohmann::json& doc) { out << doc.dump(2) << '\n'; }

int run_sample(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph_file(o.graph);
  SamplerParams params = sampler_params(g, o);
  params.steps = resolve_steps(g, o, params, err);
  const SampleResult r = sample_proper_coloring(g, params);
  err << "sampled " << format_coloring(r.coloring) << " after " << r.attempts << " attempt(s)"
      << (r.fallback ? " (fallback to greedy coloring)" : "") << " in "
      << std::chrono::duration<double>(r.wall_time).count() << " s\n";
  emit(out, report::sample(o.graph, params, g.num_vertices(), r));
  return kExitOk;
}

int run_enumerate(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph_file(o.graph);
  const StateSpace space = enumerate_states(g, o.colors);
  err << "|C_p| = " << space.num_proper() << ", |C_sf| = " << space.num_singly_flawed() << '\n';
  emit(out, report::enumeration(o.graph, space));
  return kExitOk;
}

int run_mix_time(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph_file(o.graph);
  const ChainConfig cfg{o.colors, parse_chain_kind(o.chain)};
  cfg.validate(g);
  if (!(o.delta > 0.0 && o.delta < 1.0)) throw ConfigError("delta must lie in (0, 1)");
  const StateSpace space = enumerate_states(g, o.colors);
  const TransitionMatrix p = build_transition_matrix(g, cfg, space);
  const MixingTime t = exact_mixing_time(p, o.delta);

  nlohmann::json doc{{"schema", report::kSchema}, {"command", "mix-time"}, {"graph", o.graph}};
  doc["chain"] = std::string(to_string(cfg.kind));
  doc["k"] = o.colors;
  doc["delta"] = o.delta;
  doc["states"] = p.dimension();
  doc["exact_t"] = t.steps;
  doc["tv_at_exact_t"] = t.tv_at_steps;
  doc["worst_start"] = report::coloring_json(space.state(t.worst_start));
  if (cfg.kind == ChainKind::SingleFlaw) {
    int vsn = 0;
    const LinearOrder order = resolve_order(g, o, &vsn);
    const int n = g.num_vertices();
    doc["vsn"] = vsn;
    doc["order"] = report::order_json(order);
    doc["theoretical_bound"] =
        theoretical_tau_bound(n, g.max_degree(), o.colors, vsn, lambda_of(n, vsn), o.delta);
  } else {
    doc["theoretical_bound"] = nullptr;
  }
  err << "exact mixing time: " << t.steps << " steps over " << p.dimension() << " states\n";
  emit(out, doc);
  return kExitOk;
}

int run_flow_audit(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph_file(o.graph);
  ChainConfig{o.colors}.validate(g);
  int vsn = 0;
  const LinearOrder order = resolve_order(g, o, &vsn);
  const SeparatorSchedule schedule(g, order);
  const StateSpace space = enumerate_states(g, o.colors);
  const FlawRepairMap repair = build_flaw_repair_map(g, space);
  const QuantumFlowReport quantum_flow = audit_quantum_flow(g, schedule, space);
  const FlowAssignment flows = route_all_flows(g, schedule, space, repair);
  const CongestionReport congestion = audit_flow_bounds(g, schedule, space, flows);
  const nlohmann::json doc = report::flow_audit(o.graph, space, schedule, quantum_flow, congestion);
  const bool pass = doc.at("pass").get<bool>();
  err << "quantum_flow " << (quantum_flow.pass ? "ok" : "FAILED") << ", phase flows "
      << (congestion.phase_flow_pass ? "ok" : "FAILED") << ", proper congestion "
      << (congestion.proper_bound_pass ? "ok" : "FAILED") << ", overall congestion "
      << (congestion.main_bound_pass ? "ok" : "FAILED") << '\n';
  emit(out, doc);
  return pass ? kExitOk : kExitAuditFailure;
}

int run_vsn(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph_file(o.graph);
  int vsn = 0;
  const LinearOrder order = resolve_order(g, o, &vsn);
  err << "vsn = " << vsn << (o.order.empty() ? " (minimal order)" : " (given order)") << '\n';
  emit(out, report::vsn(o.graph, order, vsn));
  return kExitOk;
}

int run_uniformity(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = load_graph_file(o.graph);
  SamplerParams params = sampler_params(g, o);
  const StateSpace space = enumerate_states(g, o.colors);
  params.steps = resolve_steps(g, o, params, err);
  const std::uint64_t trials = o.trials.value_or(10 * space.num_proper());
  const UniformityReport r = uniformity_test(g, params, trials, space);
  if (r.low_power)
    err << "warning: " << trials << " trials is below 10 |C_p| = " << 10 * space.num_proper()
        << "; the test has low power\n";
  err << "TV to uniform " << r.tv_to_uniform << ", chi-square " << r.chi_square << " (99% critical "
      << r.chi_square_critical << ")\n";
  emit(out, report::uniformity(o.graph, params, space, r));
  return r.pass ? kExitOk : kExitAuditFailure;
}

}  // namespace

int dispatch(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Single-Flaw dynamics sampler and canonical-path flow auditor", "colorsampler"};
  app.require_subcommand(1, 1);
  Options o;

  auto graph = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph, "Graph file (n m header, then m edge lines)")
        ->required()
        ->check(CLI::ExistingFile);
  };
  auto colors = [&](CLI::App* sub) {
    sub->add_option("--colors", o.colors, "Number of colors k")->required()->check(CLI::PositiveNumber);
  };
  auto order = [&](CLI::App* sub) {
    sub->add_option("--order", o.order, "Linear order file (permutation of 1..n)")
        ->check(CLI::ExistingFile);
  };
  auto delta = [&](CLI::App* sub) {
    sub->add_option("--delta", o.delta, "Bias parameter in (0,1)")->capture_default_str();
  };
  auto run_length = [&](CLI::App* sub) {
    auto* steps = sub->add_option("--steps", o.steps, "Chain steps per attempt");
    auto* exact = sub->add_flag("--exact-tau", o.exact_tau, "Use the exact mixing time for delta1");
    auto* theory = sub->add_flag("--honor-theory", o.honor_theory, "Use the theoretical bound");
    steps->excludes(exact)->excludes(theory);
    exact->excludes(theory);
    sub->add_option("--seed", o.seed, "Base seed")->capture_default_str();
    sub->add_flag("--parallel", o.parallel, "Run attempts concurrently");
    order(sub);
  };

  CLI::App* sample = app.add_subcommand("sample", "Draw one almost-uniform proper coloring");
  graph(sample);
  colors(sample);
  delta(sample);
  run_length(sample);

  CLI::App* enumerate = app.add_subcommand("enumerate", "Count proper and singly-flawed colorings");
  graph(enumerate);
  colors(enumerate);

  CLI::App* mix = app.add_subcommand("mix-time", "Exact mixing time from the transition matrix");
  graph(mix);
  colors(mix);
  delta(mix);
  order(mix);
  mix->add_option("--chain", o.chain, "single-flaw or glauber")
      ->capture_default_str()
      ->check(CLI::IsMember({"single-flaw", "glauber"}));

  CLI::App* flow = app.add_subcommand("flow-audit", "Route the canonical-path flow and audit its bounds");
  graph(flow);
  colors(flow);
  order(flow);

  CLI::App* vsn = app.add_subcommand("vsn", "Vertex separation number of a linear order");
  graph(vsn);
  order(vsn);

  CLI::App* uniform = app.add_subcommand("uniformity", "Tally sampler outputs against uniform");
  graph(uniform);
  colors(uniform);
  delta(uniform);
  run_length(uniform);
  uniform->add_option("--trials", o.trials, "Number of samples (default 10 |C_p|)")
      ->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (sample->parsed()) return run_sample(o, out, err);
    if (enumerate->parsed()) return run_enumerate(o, out, err);
    if (mix->parsed()) return run_mix_time(o, out, err);
    if (flow->parsed()) return run_flow_audit(o, out, err);
    if (vsn->parsed()) return run_vsn(o, out, err);
    return run_uniformity(o, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const InvariantViolation& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitAuditFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace colorsampler::cli
