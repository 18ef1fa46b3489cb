#pragma once

#include <nlohmann/json.hpp>

#include <string>

#include "colorsampler/coloring.hpp"
#include "colorsampler/flow.hpp"
#include "colorsampler/graph.hpp"
#include "colorsampler/sampler.hpp"
#include "colorsampler/state_space.hpp"

// JSON documents emitted by the CLI. Every document carries "schema": "colorsampler/1".
namespace colorsampler::report {

inline constexpr const char* kSchema = "colorsampler/1";

/// 1-based vertex labels.
nlohmann::json order_json(const LinearOrder& order);
nlohmann::json coloring_json(const Coloring& sigma);

nlohmann::json enumeration(const std::string& graph, const StateSpace& space);

nlohmann::json vsn(const std::string& graph, const LinearOrder& order, int vsn);

nlohmann::json sample(const std::string& graph, const SamplerParams& params, int n,
                      const SampleResult& result);

nlohmann::json flow_audit(const std::string& graph, const StateSpace& space,
                          const SeparatorSchedule& schedule, const QuantumFlowReport& quantum_flow,
                          const CongestionReport& congestion);

nlohmann::json uniformity(const std::string& graph, const SamplerParams& params,
                          const StateSpace& space, const UniformityReport& report);

}  // namespace colorsampler::report
