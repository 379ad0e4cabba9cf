#pragma once

#include <string>

#include <json.hpp>

#include "qsearch/grover.hpp"
#include "qsearch/measurement.hpp"

namespace qsearch {

using Json = nlohmann::ordered_json;

/// On-disk experiment description consumed by the measure/compare commands.
struct ExperimentDescriptor {
    SystemSpec spec;
    int register_qubits = 8;
    double epsilon = 0.01;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 1;
    bool strict_paper_n2 = false;

    /// register_qubits after applying strict mode (minimal register that
    /// holds the outcome space, 1 qubit for two outcomes).
    int effective_register_qubits() const;
};

/// Parses and validates a descriptor document; throws ValidationError on any
/// schema or invariant violation.
ExperimentDescriptor parse_descriptor(const Json& doc);

Json plan_to_json(const GroverPlan& plan);
Json run_stats_to_json(const SystemSpec& spec, const GroverPlan& plan, const RunStats& stats);
Json comparison_to_json(const SystemSpec& spec, const ModelComparison& cmp);

/// One row per event: trial, target, registered (empty if none), conclusive.
std::string events_to_csv(const RunStats& stats);

}  // namespace qsearch
