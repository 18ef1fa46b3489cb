#include "colorsampler/report.hpp"

#include <cmath>
#include <limits>

#include "colorsampler/error.hpp"

namespace colorsampler::report {

namespace {

using nlohmann::json;

json header(const char* command, const std::string& graph) {
  return json{{"schema", kSchema}, {"command", command}, {"graph", graph}};
}

json exact(const Rational& r) { return json{{"exact", to_string(r)}, {"approx", to_double(r)}}; }

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

json transition_json(const StateSpace& space, Transition t) {
  return json{{"from", coloring_json(space.state(t.from))}, {"to", coloring_json(space.state(t.to))}};
}

}  // namespace

json order_json(const LinearOrder& order) {
  json out = json::array();
  for (Vertex v : order.sequence()) out.push_back(v + 1);
  return out;
}

json coloring_json(const Coloring& sigma) {
  const auto c = sigma.colors();
  return json(std::vector<Color>(c.begin(), c.end()));
}

json enumeration(const std::string& graph, const StateSpace& space) {
  json out = header("enumerate", graph);
  out["n"] = space.num_vertices();
  out["k"] = space.num_colors();
  out["num_proper"] = space.num_proper();
  out["num_singly_flawed"] = space.num_singly_flawed();
  out["omega"] = space.size();
  const auto kn = static_cast<std::uint64_t>(space.num_colors()) * space.num_vertices();
  out["flawed_bound_holds"] = space.num_singly_flawed() <= kn * space.num_proper();
  return out;
}

json vsn(const std::string& graph, const LinearOrder& order, int value) {
  json out = header("vsn", graph);
  out["vsn"] = value;
  out["order"] = order_json(order);
  return out;
}

json sample(const std::string& graph, const SamplerParams& params, int n,
            const SampleResult& result) {
  if (!result.is_proper) throw InvariantViolation("refusing to emit an improper coloring");
  json out = header("sample", graph);
  out["k"] = params.k;
  out["delta"] = params.delta;
  out["delta1"] = params.delta1(n);
  out["max_attempts"] = params.max_attempts(n);
  out["steps"] = result.steps_per_attempt;
  out["seed"] = result.seed;
  out["attempts"] = result.attempts;
  out["fallback"] = result.fallback;
  out["is_proper"] = result.is_proper;
  out["coloring"] = coloring_json(result.coloring);
  return out;
}

json flow_audit(const std::string& graph, const StateSpace& space, const SeparatorSchedule& schedule,
                const QuantumFlowReport& quantum_flow, const CongestionReport& congestion) {
  json out = header("flow-audit", graph);
  out["n"] = space.num_vertices();
  out["k"] = space.num_colors();
  out["omega"] = space.size();
  out["order"] = order_json(schedule.order());
  out["vsn"] = schedule.vsn();
  out["lambda"] = schedule.lambda();
  out["path_length"] = congestion.path_length;
  out["path_length_bound"] = congestion.path_length_bound;

  out["quantum_flow_pass"] = quantum_flow.pass;
  json qf{{"triples_checked", quantum_flow.triples_checked},
           {"violations", quantum_flow.violations},
           {"loop_triples_checked", quantum_flow.loop_triples_checked},
           {"loop_violations", quantum_flow.loop_violations},
           {"min_slack", quantum_flow.triples_checked ? exact(quantum_flow.min_slack) : json(nullptr)}};
  if (quantum_flow.first_violation) {
    const auto& v = *quantum_flow.first_violation;
    qf["first_violation"] = {{"alpha", coloring_json(space.state(v.alpha))},
                              {"beta", coloring_json(space.state(v.beta))},
                              {"phase", v.phase},
                              {"step", v.step},
                              {"edge", transition_json(space, v.edge)},
                              {"flow", exact(v.flow)},
                              {"bound", exact(v.bound)}};
  }
  out["quantum_flow"] = std::move(qf);

  out["phase_flow"] = {{"pass", congestion.phase_flow_pass},
                       {"checked", congestion.phase_flows_checked},
                       {"worst_ratio", exact(congestion.phase_flow_worst_ratio)}};
  out["congestion"] = {
      {"rho_max", exact(congestion.rho_max)},
      {"worst_edge", transition_json(space, congestion.worst_edge)},
      {"rho_max_proper", exact(congestion.rho_max_proper)},
      {"worst_edge_proper", transition_json(space, congestion.worst_edge_proper)},
      {"rho_max_loop", exact(congestion.rho_max_loop)},
      {"proper_bound", congestion.rho_bound_proper},
      {"proper_bound_pass", congestion.proper_bound_pass},
      {"proper_bound_slack", finite_or_null(congestion.proper_bound_slack)},
      {"main_bound", congestion.rho_bound_main},
      {"main_bound_pass", congestion.main_bound_pass},
      {"main_bound_slack", finite_or_null(congestion.main_bound_slack)},
      {"edges", congestion.per_edge.size()}};
  out["rho_max"] = to_double(congestion.rho_max);
  out["rho_bound_proper"] = congestion.rho_bound_proper;
  out["rho_bound_main"] = congestion.rho_bound_main;
  out["phase_flow_pass"] = congestion.phase_flow_pass;
  out["worst_edge"] = transition_json(space, congestion.worst_edge);
  out["pass"] = quantum_flow.pass && congestion.pass();
  return out;
}

json uniformity(const std::string& graph, const SamplerParams& params, const StateSpace& space,
                const UniformityReport& r) {
  json out = header("uniformity", graph);
  out["k"] = params.k;
  out["delta"] = params.delta;
  out["steps"] = params.steps;
  out["seed"] = params.seed;
  out["trials"] = r.trials;
  out["outcomes"] = space.num_proper();
  out["tv_to_uniform"] = r.tv_to_uniform;
  out["tv_tolerance"] = r.tv_tolerance;
  out["chi_square"] = r.chi_square;
  out["degrees_of_freedom"] = r.degrees_of_freedom;
  out["chi_square_critical"] = r.chi_square_critical;
  out["fallbacks"] = r.fallbacks;
  out["low_power"] = r.low_power;
  out["pass"] = r.pass;
  json counts = json::array();
  for (std::size_t i = 0; i < r.counts.size(); ++i)
    counts.push_back({{"coloring", coloring_json(space.state(i))}, {"count", r.counts[i]}});
  out["counts"] = std::move(counts);
  return out;
}

}  // namespace colorsampler::report
