#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "colorsampler/coloring.hpp"
#include "colorsampler/graph.hpp"
#include "colorsampler/rational.hpp"
#include "colorsampler/separators.hpp"
#include "colorsampler/state_space.hpp"

namespace colorsampler {

/// Directed edge (from, to) of the chain's transition graph. from == to is an idle
/// recoloring (self-loop).
struct Transition {
  StateIndex from = 0;
  StateIndex to = 0;

  bool is_loop() const noexcept { return from == to; }
  auto operator<=>(const Transition&) const = default;
};

/// Flow mass per state at time (phase, step), i.e. at the start of that step.
/// The terminal layer is stamped (n, |S_n|+2).
struct LayerMass {
  int phase = 0;
  int step = 0;
  std::map<StateIndex, Rational> mass;

  Rational total() const;
};

struct RoutedTransition {
  int phase = 0;
  int step = 0;
  Transition edge;
  Rational flow;
};

/// Canonical-path flow of one ordered pair of proper colorings.
struct PairFlow {
  std::vector<LayerMass> layers;
  std::vector<RoutedTransition> transitions;
};

/// Routes pi(alpha) pi(beta) = 1/|Ω|^2 from alpha to beta through the layered
/// canonical paths: step (j,1) moves all mass of each state to the state with the
/// rank-j vertex recolored to beta's color; a splitting step divides each state's
/// mass evenly over the available colors of the step's separator vertex. Idle
/// recolorings are kept as self-loop transitions.
///
/// Throws std::invalid_argument unless alpha and beta are proper, and
/// InvariantViolation if a layer leaves Ω, a (j,1) layer holds an improper state,
/// a split has fewer than k-Δ options, or the terminal layer is not {beta}.
PairFlow route_pair_flow(const Graph& g, const SeparatorSchedule& schedule,
                         const StateSpace& space, const Coloring& alpha, const Coloring& beta);

/// Per-edge ledger. Flows are summed per traversal (a path crossing the same edge
/// in two phases contributes twice), which is what the per-phase bounds control.
struct EdgeFlow {
  Rational flow;
  /// Σ f(p)|p| over paths through the edge.
  Rational weighted;
  /// Same two quantities restricted to pairs of proper colorings.
  Rational proper_flow;
  Rational proper_weighted;
};

/// The full multicommodity flow over Ω × Ω. Pairs with a singly-flawed endpoint go
/// through g' (first edge (alpha, g'(alpha)), last edge (g'(beta), beta)) and reuse
/// the canonical paths between the repaired endpoints; each flawed endpoint adds
/// one step to |p|.
class FlowAssignment {
 public:
  FlowAssignment() = default;

  const std::map<Transition, EdgeFlow>& edges() const noexcept { return edges_; }
  const EdgeFlow* find(Transition t) const;

  /// f_{j,t}: flow through t during phase j, proper pairs only.
  const std::map<std::pair<int, Transition>, Rational>& phase_flows() const noexcept {
    return phase_flows_;
  }

  std::int64_t path_length() const noexcept { return path_length_; }
  /// Σ over all ordered pairs of the mass delivered to the destination.
  const Rational& total_delivered() const noexcept { return total_delivered_; }
  std::uint64_t pairs_routed() const noexcept { return pairs_routed_; }
  std::uint64_t layer_states_visited() const noexcept { return layer_states_visited_; }

 private:
  friend FlowAssignment route_all_flows(const Graph&, const SeparatorSchedule&,
                                        const StateSpace&, const FlawRepairMap&);

  std::map<Transition, EdgeFlow> edges_;
  std::map<std::pair<int, Transition>, Rational> phase_flows_;
  std::int64_t path_length_ = 0;
  Rational total_delivered_;
  std::uint64_t pairs_routed_ = 0;
  std::uint64_t layer_states_visited_ = 0;
};

FlowAssignment route_all_flows(const Graph& g, const SeparatorSchedule& schedule,
                               const StateSpace& space, const FlawRepairMap& repair);

/// q(t) = pi(from) P(from, to) of the Single-Flaw chain. Throws
/// std::invalid_argument when P(from, to) = 0.
Rational ergodic_flow(const Graph& g, const StateSpace& space, Transition t);

enum class FlowScope { All, ProperPairs };

/// rho_f(t) = (1/q(t)) Σ f(p)|p|. Zero for edges that carry no flow.
Rational edge_congestion(const FlowAssignment& flows, const Graph& g, const StateSpace& space,
                         Transition t, FlowScope scope = FlowScope::All);

struct QuantumFlowViolation {
  StateIndex alpha = 0;
  StateIndex beta = 0;
  int phase = 0;
  int step = 0;
  Transition edge;
  Rational flow;
  Rational bound;
};

/// Per-pair, per-phase check f_{j,t,alpha,beta} <= pi(alpha)pi(beta) / (k-Δ)^|QS(j,t)|
/// over every pair of proper colorings. Only non-loop transitions decide `pass`;
/// self-loops may be crossed at several steps of one phase and are reported
/// separately against the loosest quantum set among those steps.
struct QuantumFlowReport {
  bool pass = true;
  std::uint64_t triples_checked = 0;
  std::uint64_t violations = 0;
  std::uint64_t loop_triples_checked = 0;
  std::uint64_t loop_violations = 0;
  /// min bound/flow over checked non-loop triples.
  Rational min_slack;
  std::optional<QuantumFlowViolation> first_violation;
};

QuantumFlowReport audit_quantum_flow(const Graph& g, const SeparatorSchedule& schedule,
                            const StateSpace& space);

struct EdgeCongestion {
  Transition edge;
  Rational rho;
  Rational rho_proper;
};

/// Measured congestion against the per-phase flow bound, the proper-pairs
/// congestion bound and the overall congestion bound. Bounds use the schedule's
/// vsn for pw and lambda = vsn/log2 n. Only non-loop edges decide pass/fail;
/// `rho_max_loop` is informational.
struct CongestionReport {
  std::vector<EdgeCongestion> per_edge;

  Rational rho_max;
  Transition worst_edge;
  Rational rho_max_proper;
  Transition worst_edge_proper;
  Rational rho_max_loop;

  std::uint64_t phase_flows_checked = 0;
  /// max over (j, t) of f_{j,t} / bound_j.
  Rational phase_flow_worst_ratio;
  bool phase_flow_pass = true;

  double rho_bound_proper = 0.0;
  double rho_bound_main = 0.0;
  bool proper_bound_pass = true;
  bool main_bound_pass = true;
  /// bound / measured; +inf when nothing was measured.
  double proper_bound_slack = 0.0;
  double main_bound_slack = 0.0;

  std::int64_t path_length = 0;
  double path_length_bound = 0.0;

  bool pass() const noexcept { return phase_flow_pass && proper_bound_pass && main_bound_pass; }
};

/// Bound on rho_f(t) for proper pairs: 2 k (lambda+1) n^3 log2(n) (k/(k-Δ))^(2 pw).
double congestion_bound_proper(int n, int max_degree, int k, int pathwidth, double lambda);

CongestionReport audit_flow_bounds(const Graph& g, const SeparatorSchedule& schedule,
                                   const StateSpace& space, const FlowAssignment& flows);

}  // namespace colorsampler
