#include "colorsampler/flow.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "colorsampler/error.hpp"
#include "colorsampler/transition_matrix.hpp"

namespace colorsampler {

Rational LayerMass::total() const {
  Rational sum = 0;
  for (const auto& [state, m] : mass) sum += m;
  return sum;
}

const EdgeFlow* FlowAssignment::find(Transition t) const {
  auto it = edges_.find(t);
  return it == edges_.end() ? nullptr : &it->second;
}

namespace {

// Masses inside one pair are integers in units of 1/D, D = lcm(k-Δ..k)^(Σ|S_j|): every
// split divides by a size in [k-Δ, k], so each branch mass is a multiple of 1/D.
using Units = mpz_class;
using Layer = std::map<StateIndex, Units>;

// Color of v inside a packed code.
Color color_at(const StateSpace& space, std::uint64_t code, Vertex v) {
  return static_cast<Color>((code / space.place_value(v)) % static_cast<std::uint64_t>(space.num_colors())) + 1;
}

std::uint64_t recolor_code(const StateSpace& space, std::uint64_t code, Vertex v, Color c) {
  const Color old = color_at(space, code, v);
  return code - static_cast<std::uint64_t>(old - 1) * space.place_value(v) +
         static_cast<std::uint64_t>(c - 1) * space.place_value(v);
}

class PairRouter {
 public:
  PairRouter(const Graph& g, const SeparatorSchedule& schedule, const StateSpace& space)
      : g_(g), schedule_(schedule), space_(space), used_(static_cast<std::size_t>(space.num_colors()) + 1) {
    min_split_ = space.num_colors() - g.max_degree();
    Units step_lcm = 1;
    for (int size = min_split_; size <= space.num_colors(); ++size) {
      const Units s = size;
      mpz_lcm(step_lcm.get_mpz_t(), step_lcm.get_mpz_t(), s.get_mpz_t());
    }
    mpz_pow_ui(unit_.get_mpz_t(), step_lcm.get_mpz_t(),
               static_cast<unsigned long>(schedule.path_length() - schedule.num_vertices()));
  }

  /// D: the full mass of one pair, in units.
  const Units& unit() const noexcept { return unit_; }

  // Routes unit mass from alpha to beta (both proper state indices).
  // on_layer(phase, step, layer) sees every layer including the first and terminal.
  // on_step(phase, step, from, to, flow) sees every transition.
  template <class OnLayer, class OnStep>
  void route(StateIndex alpha, StateIndex beta, OnLayer&& on_layer, OnStep&& on_step) {
    const int n = schedule_.num_vertices();
    const std::uint64_t beta_code = space_.code(beta);
    Layer layer;
    layer.emplace(alpha, unit_);
    require_proper(layer, 1, 1);
    on_layer(1, 1, layer);

    Layer next;
    for (int j = 1; j <= n; ++j) {
      const Vertex v = schedule_.recolored_vertex(j, 1);
      const Color target = color_at(space_, beta_code, v);
      next.clear();
      for (const auto& [state, m] : layer) {
        const StateIndex to = lookup(recolor_code(space_, space_.code(state), v, target), j, 1);
        on_step(j, 1, state, to, m);
        next[to] += m;
      }
      layer.swap(next);

      const auto& sep = schedule_.separator(j);
      for (std::size_t s = 0; s < sep.size(); ++s) {
        const int l = static_cast<int>(s) + 2;
        on_layer(j, l, layer);
        const Vertex u = sep[s];
        next.clear();
        for (const auto& [state, m] : layer) {
          const std::uint64_t code = space_.code(state);
          available(code, u);
          if (static_cast<int>(colors_.size()) < min_split_)
            throw InvariantViolation("splitting step at (" + std::to_string(j) + "," +
                                     std::to_string(l) + ") has only " +
                                     std::to_string(colors_.size()) + " available colors");
          Units share;
          mpz_divexact_ui(share.get_mpz_t(), m.get_mpz_t(), colors_.size());
          for (Color c : colors_) {
            const StateIndex to = lookup(recolor_code(space_, code, u, c), j, l);
            on_step(j, l, state, to, share);
            next[to] += share;
          }
        }
        layer.swap(next);
      }
      if (j < n) {
        require_proper(layer, j + 1, 1);
        on_layer(j + 1, 1, layer);
      } else {
        require_proper(layer, n, schedule_.steps_in_phase(n) + 1);
        on_layer(n, schedule_.steps_in_phase(n) + 1, layer);
      }
    }
    if (layer.size() != 1 || layer.begin()->first != beta || layer.begin()->second != unit_)
      throw InvariantViolation("terminal layer is not {beta} with full mass");
  }

 private:
  void available(std::uint64_t code, Vertex u) {
    std::fill(used_.begin(), used_.end(), 0);
    for (Vertex w : g_.neighbors(u)) used_[static_cast<std::size_t>(color_at(space_, code, w))] = 1;
    colors_.clear();
    for (Color c = 1; c <= space_.num_colors(); ++c)
      if (!used_[static_cast<std::size_t>(c)]) colors_.push_back(c);
  }

  StateIndex lookup(std::uint64_t code, int j, int l) const {
    const auto idx = space_.index_of_code(code);
    if (!idx)
      throw InvariantViolation("step (" + std::to_string(j) + "," + std::to_string(l) +
                               ") produced a coloring outside the state space: " +
                               format_coloring(space_.decode(code)));
    return *idx;
  }

  void require_proper(const Layer& layer, int j, int l) const {
    for (const auto& [state, m] : layer)
      if (!space_.is_proper(state))
        throw InvariantViolation("layer (" + std::to_string(j) + "," + std::to_string(l) +
                                 ") holds an improper coloring");
  }

  const Graph& g_;
  const SeparatorSchedule& schedule_;
  const StateSpace& space_;
  int min_split_;
  std::vector<char> used_;
  std::vector<Color> colors_;
  Units unit_;
};

Rational in_units(const Units& u, const Units& unit) {
  Rational r(u, unit);
  r.canonicalize();
  return r;
}

void add_multiple(Units& acc, const Units& x, unsigned long factor) {
  mpz_addmul_ui(acc.get_mpz_t(), x.get_mpz_t(), factor);
}

void check_compatible(const Graph& g, const SeparatorSchedule& schedule, const StateSpace& space) {
  if (schedule.num_vertices() != g.num_vertices() || space.num_vertices() != g.num_vertices())
    throw std::invalid_argument("graph, schedule and state space disagree on n");
  if (space.num_colors() < g.max_degree() + 2)
    throw ConfigError("flow routing requires k >= max degree + 2");
}

Rational pair_mass(const StateSpace& space) {
  Rational pi(1, static_cast<long>(space.size()));
  return pi * pi;
}

Rational power(const Rational& base, int exponent) {
  Rational out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

// Number of the 2kn equally likely outcomes of one step that leave sigma unchanged.
std::int64_t stay_outcomes(const Graph& g, const Coloring& sigma, int k) {
  const int n = g.num_vertices();
  std::int64_t stay = static_cast<std::int64_t>(k) * n;
  Coloring probe = sigma;
  for (Vertex v = 0; v < n; ++v)
    for (Color c = 1; c <= k; ++c) {
      if (c == sigma[v]) {
        ++stay;
        continue;
      }
      probe.set(v, c);
      if (!in_state_space(g, probe)) ++stay;
      probe.set(v, sigma[v]);
    }
  return stay;
}

}  // namespace

PairFlow route_pair_flow(const Graph& g, const SeparatorSchedule& schedule, const StateSpace& space,
                         const Coloring& alpha, const Coloring& beta) {
  check_compatible(g, schedule, space);
  const auto a = space.index_of(alpha);
  const auto b = space.index_of(beta);
  if (!a || !b || !space.is_proper(*a) || !space.is_proper(*b))
    throw std::invalid_argument("route_pair_flow needs two proper colorings");

  const Rational scale = pair_mass(space);
  PairFlow out;
  PairRouter router(g, schedule, space);
  const Units& unit = router.unit();
  router.route(
      *a, *b,
      [&](int j, int l, const Layer& layer) {
        LayerMass lm{j, l, {}};
        for (const auto& [state, m] : layer) lm.mass.emplace(state, in_units(m, unit) * scale);
        out.layers.push_back(std::move(lm));
      },
      [&](int j, int l, StateIndex from, StateIndex to, const Units& f) {
        out.transitions.push_back({j, l, Transition{from, to}, in_units(f, unit) * scale});
      });
  return out;
}

FlowAssignment route_all_flows(const Graph& g, const SeparatorSchedule& schedule,
                               const StateSpace& space, const FlawRepairMap& repair) {
  check_compatible(g, schedule, space);
  const std::size_t proper = space.num_proper();
  const std::int64_t length = schedule.path_length();
  const long omega = static_cast<long>(space.size());
  const long flawed = static_cast<long>(space.num_singly_flawed());

  FlowAssignment fa;
  fa.path_length_ = length;

  // Ledgers in units of pi(alpha)pi(beta)/D; proper_weighted is length * proper_flow.
  struct Tally {
    Units all;
    Units all_weighted;
    Units proper;
  };
  std::map<Transition, Tally> ledger;
  std::map<std::pair<int, Transition>, Units> phase;
  Units delivered = 0;

  PairRouter router(g, schedule, space);
  const Units& unit = router.unit();
  for (StateIndex a = 0; a < proper; ++a) {
    const auto pre_a = static_cast<unsigned long>(repair.preimage_count(a));
    const unsigned long mult_a = pre_a + 1;
    for (StateIndex b = 0; b < proper; ++b) {
      const auto pre_b = static_cast<unsigned long>(repair.preimage_count(b));
      const unsigned long mult_b = pre_b + 1;
      const unsigned long mult = mult_a * mult_b;
      // Σ |p| over the endpoint pairs sharing this canonical path.
      const unsigned long weight =
          static_cast<unsigned long>(length) * mult + pre_a * mult_b + mult_a * pre_b;
      Units last_mass;
      router.route(
          a, b,
          [&](int, int, const Layer& layer) {
            fa.layer_states_visited_ += layer.size();
            if (layer.size() == 1) last_mass = layer.begin()->second;
          },
          [&](int j, int, StateIndex from, StateIndex to, const Units& f) {
            const Transition t{from, to};
            auto& r = ledger[t];
            add_multiple(r.all, f, mult);
            add_multiple(r.all_weighted, f, weight);
            r.proper += f;
            phase[{j, t}] += f;
          });
      add_multiple(delivered, last_mass, mult);
    }
  }

  // Flawed endpoints: every pair starting at a flawed alpha first crosses
  // (alpha, g'(alpha)); every pair ending at a flawed beta last crosses (g'(beta), beta).
  const Units endpoint_flow = unit * omega;
  const Units endpoint_weighted = unit * (omega * (length + 1) + flawed);
  for (StateIndex s = proper; s < space.size(); ++s) {
    const StateIndex fixed = repair.image(s);
    for (const Transition t : {Transition{s, fixed}, Transition{fixed, s}}) {
      auto& r = ledger[t];
      r.all += endpoint_flow;
      r.all_weighted += endpoint_weighted;
    }
  }
  fa.pairs_routed_ = static_cast<std::uint64_t>(omega) * static_cast<std::uint64_t>(omega);

  const Rational scale = pair_mass(space);
  for (auto& [t, r] : ledger) {
    EdgeFlow e;
    e.flow = in_units(r.all, unit) * scale;
    e.weighted = in_units(r.all_weighted, unit) * scale;
    e.proper_flow = in_units(r.proper, unit) * scale;
    e.proper_weighted = e.proper_flow * length;
    fa.edges_.emplace(t, std::move(e));
  }
  for (auto& [key, f] : phase) fa.phase_flows_.emplace(key, in_units(f, unit) * scale);
  fa.total_delivered_ = in_units(delivered, unit) * scale;
  return fa;
}

Rational ergodic_flow(const Graph& g, const StateSpace& space, Transition t) {
  if (t.from >= space.size() || t.to >= space.size())
    throw std::invalid_argument("transition endpoint outside the state space");
  const int n = g.num_vertices();
  const int k = space.num_colors();
  const std::int64_t outcomes = 2 * static_cast<std::int64_t>(k) * n;
  Rational p;
  if (t.is_loop()) {
    p = Rational(stay_outcomes(g, space.state(t.from), k), outcomes);
  } else {
    const Coloring a = space.state(t.from);
    const Coloring b = space.state(t.to);
    int differing = 0;
    for (Vertex v = 0; v < n; ++v) differing += a[v] != b[v];
    if (differing != 1)
      throw std::invalid_argument("P(from, to) = 0: states differ in " + std::to_string(differing) +
                                  " vertices");
    p = Rational(1, outcomes);
  }
  p.canonicalize();
  return p / static_cast<long>(space.size());
}

Rational edge_congestion(const FlowAssignment& flows, const Graph& g, const StateSpace& space,
                         Transition t, FlowScope scope) {
  const EdgeFlow* e = flows.find(t);
  if (!e) return 0;
  const Rational& w = scope == FlowScope::All ? e->weighted : e->proper_weighted;
  if (w == 0) return 0;
  return w / ergodic_flow(g, space, t);
}

QuantumFlowReport audit_quantum_flow(const Graph& g, const SeparatorSchedule& schedule,
                            const StateSpace& space) {
  check_compatible(g, schedule, space);
  const long free_colors = space.num_colors() - g.max_degree();
  PairRouter router(g, schedule, space);
  const Units& unit = router.unit();
  // f <= D / (k-Δ)^q in units, i.e. f * (k-Δ)^q <= D; indexed by |QS|.
  std::vector<Units> scale_up(static_cast<std::size_t>(g.num_vertices()) + 1);
  std::vector<Rational> bound(scale_up.size());
  for (std::size_t q = 0; q < bound.size(); ++q) {
    mpz_ui_pow_ui(scale_up[q].get_mpz_t(), static_cast<unsigned long>(free_colors), q);
    bound[q] = power(Rational(1, free_colors), static_cast<int>(q));
  }

  struct Crossing {
    Units flow;
    int step;
    std::size_t quantum;  // loosest over the steps crossing this edge
  };

  QuantumFlowReport report;
  // bound/flow = D / (f (k-Δ)^q); the smallest slack has the largest scaled flow.
  Units tightest = 0;
  const Rational scale = pair_mass(space);
  std::map<std::pair<int, Transition>, Crossing> crossings;
  for (StateIndex a = 0; a < space.num_proper(); ++a)
    for (StateIndex b = 0; b < space.num_proper(); ++b) {
      crossings.clear();
      router.route(
          a, b, [](int, int, const Layer&) {},
          [&](int j, int l, StateIndex from, StateIndex to, const Units& f) {
            const std::size_t q = schedule.quantum_set(j, l).size();
            auto [it, fresh] = crossings.try_emplace({j, Transition{from, to}}, Crossing{f, l, q});
            if (!fresh) {
              it->second.flow += f;
              it->second.quantum = std::min(it->second.quantum, q);
            }
          });
      for (const auto& [key, c] : crossings) {
        const auto& [j, t] = key;
        Units scaled = c.flow * scale_up[c.quantum];
        const bool ok = scaled <= unit;
        if (t.is_loop()) {
          ++report.loop_triples_checked;
          if (!ok) ++report.loop_violations;
          continue;
        }
        ++report.triples_checked;
        if (scaled > tightest) tightest = std::move(scaled);
        if (!ok) {
          ++report.violations;
          report.pass = false;
          if (!report.first_violation)
            report.first_violation = QuantumFlowViolation{a, b, j, c.step, t, in_units(c.flow, unit) * scale,
                                                    bound[c.quantum] * scale};
        }
      }
    }
  if (tightest > 0) report.min_slack = in_units(unit, tightest);
  return report;
}

double congestion_bound_proper(int n, int max_degree, int k, int pathwidth, double lambda) {
  if (k < max_degree + 2) throw ConfigError("bound requires k >= max degree + 2");
  const double ratio = static_cast<double>(k) / static_cast<double>(k - max_degree);
  const double log_n = n > 0 ? std::log2(static_cast<double>(n)) : 0.0;
  return 2.0 * k * (lambda + 1.0) * std::pow(static_cast<double>(n), 3) * log_n *
         std::pow(ratio, 2.0 * pathwidth);
}

CongestionReport audit_flow_bounds(const Graph& g, const SeparatorSchedule& schedule,
                                   const StateSpace& space, const FlowAssignment& flows) {
  check_compatible(g, schedule, space);
  const int n = g.num_vertices();
  const int k = space.num_colors();
  const int delta = g.max_degree();
  const int pw = schedule.vsn();
  const double lambda = schedule.lambda();

  CongestionReport report;
  report.path_length = schedule.path_length();
  report.path_length_bound = (lambda + 1.0) * n * (n > 0 ? std::log2(static_cast<double>(n)) : 0.0);

  bool have_edge = false;
  bool have_proper = false;
  for (const auto& [t, e] : flows.edges()) {
    const Rational q = ergodic_flow(g, space, t);
    EdgeCongestion ec{t, e.weighted / q, e.proper_weighted / q};
    if (t.is_loop()) {
      if (ec.rho > report.rho_max_loop) report.rho_max_loop = ec.rho;
    } else {
      if (!have_edge || ec.rho > report.rho_max) {
        report.rho_max = ec.rho;
        report.worst_edge = t;
        have_edge = true;
      }
      if (!have_proper || ec.rho_proper > report.rho_max_proper) {
        report.rho_max_proper = ec.rho_proper;
        report.worst_edge_proper = t;
        have_proper = true;
      }
    }
    report.per_edge.push_back(std::move(ec));
  }

  // Per-phase flow: f_{j,t} <= pi^2 |C_p| (k/(k-Δ))^(2|S_j|).
  Rational pi(1, static_cast<long>(space.size()));
  const Rational base = pi * pi * static_cast<long>(space.num_proper());
  Rational ratio(k, k - delta);
  ratio.canonicalize();
  std::vector<Rational> phase_bound(static_cast<std::size_t>(n) + 1);
  for (int j = 1; j <= n; ++j)
    phase_bound[static_cast<std::size_t>(j)] =
        base * power(ratio, 2 * static_cast<int>(schedule.separator(j).size()));
  bool have_ratio = false;
  for (const auto& [key, f] : flows.phase_flows()) {
    const auto& [j, t] = key;
    if (t.is_loop()) continue;
    ++report.phase_flows_checked;
    const Rational& limit = phase_bound[static_cast<std::size_t>(j)];
    if (f > limit) report.phase_flow_pass = false;
    Rational r = f / limit;
    if (!have_ratio || r > report.phase_flow_worst_ratio) {
      report.phase_flow_worst_ratio = r;
      have_ratio = true;
    }
  }

  report.rho_bound_proper = congestion_bound_proper(n, delta, k, pw, lambda);
  report.rho_bound_main = congestion_bound_main(n, delta, k, pw, lambda);
  const double measured_proper = to_double(report.rho_max_proper);
  const double measured = to_double(report.rho_max);
  report.proper_bound_pass = measured_proper <= report.rho_bound_proper;
  report.main_bound_pass = measured <= report.rho_bound_main;
  const double inf = std::numeric_limits<double>::infinity();
  report.proper_bound_slack = measured_proper > 0 ? report.rho_bound_proper / measured_proper : inf;
  report.main_bound_slack = measured > 0 ? report.rho_bound_main / measured : inf;
  return report;
}

}  // namespace colorsampler
