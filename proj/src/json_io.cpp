#include "qsearch/json_io.hpp"

#include <cmath>
#include <sstream>

namespace qsearch {

namespace {

constexpr const char* kConventionNote =
    "density matrix convention rho = |Psi><Psi|, entries_ij = c_i * conj(c_j)";

}  // namespace

int ExperimentDescriptor::effective_register_qubits() const {
    if (!strict_paper_n2) {
        return register_qubits;
    }
    int bits = 1;
    while ((std::uint64_t{1} << bits) < spec.n_outcomes()) {
        ++bits;
    }
    return bits;
}

ExperimentDescriptor parse_descriptor(const Json& doc) {
    if (!doc.is_object()) {
        throw ValidationError("descriptor must be a JSON object");
    }
    ExperimentDescriptor d;

    if (!doc.contains("coefficients") || !doc["coefficients"].is_array()) {
        throw ValidationError("descriptor requires a 'coefficients' array");
    }
    for (const auto& entry : doc["coefficients"]) {
        if (!entry.is_array() || entry.size() != 2 ||
            !entry[0].is_number() || !entry[1].is_number()) {
            throw ValidationError("each coefficient must be a [re, im] pair");
        }
        d.spec.coefficients.emplace_back(entry[0].get<double>(), entry[1].get<double>());
    }

    const std::size_t n = d.spec.coefficients.size();
    if (doc.contains("labels")) {
        d.spec.outcome_labels = doc["labels"].get<std::vector<std::string>>();
    } else {
        for (std::size_t i = 0; i < n; ++i) {
            d.spec.outcome_labels.push_back("outcome_" + std::to_string(i));
        }
    }
    if (doc.contains("pointer_labels")) {
        d.spec.pointer_labels = doc["pointer_labels"].get<std::vector<std::string>>();
    } else {
        d.spec.pointer_labels = d.spec.outcome_labels;
    }

    if (doc.contains("register_qubits")) {
        if (!doc["register_qubits"].is_number_integer()) {
            throw ValidationError("register_qubits must be an integer");
        }
        d.register_qubits = doc["register_qubits"].get<int>();
    }
    if (doc.contains("epsilon")) {
        d.epsilon = doc["epsilon"].get<double>();
    }
    if (doc.contains("trials")) {
        if (!doc["trials"].is_number_integer() || doc["trials"].get<std::int64_t>() < 1) {
            throw ValidationError("trials must be a positive integer");
        }
        d.trials = doc["trials"].get<std::uint64_t>();
    }
    if (doc.contains("seed")) {
        d.seed = doc["seed"].get<std::uint64_t>();
    }
    if (doc.contains("strict_paper_n2")) {
        if (!doc["strict_paper_n2"].is_boolean()) {
            throw ValidationError("strict_paper_n2 must be a boolean");
        }
        d.strict_paper_n2 = doc["strict_paper_n2"].get<bool>();
    }

    d.spec.validate();
    DetectorModel{d.epsilon}.validate();
    if (d.register_qubits < 1 || d.register_qubits > kMaxQubits) {
        throw ValidationError("register_qubits out of range");
    }
    return d;
}

Json plan_to_json(const GroverPlan& plan) {
    return Json{
        {"n", plan.n_big},
        {"m", plan.m_solutions},
        {"theta", plan.theta},
        {"k_star", plan.k_star},
        {"predicted_success", plan.predicted_success},
    };
}

Json run_stats_to_json(const SystemSpec& spec, const GroverPlan& plan, const RunStats& stats) {
    return Json{
        {"plan", plan_to_json(plan)},
        {"labels", spec.outcome_labels},
        {"pointer_labels", spec.pointer_labels},
        {"trials", stats.trials},
        {"counts", stats.counts},
        {"inconclusive", stats.inconclusive_count},
        {"frequencies", stats.empirical_frequencies},
        {"convention_notes", kConventionNote},
    };
}

Json comparison_to_json(const SystemSpec& spec, const ModelComparison& cmp) {
    Json out = run_stats_to_json(spec, cmp.plan, cmp.grover);
    out["projection"] = Json{
        {"counts", cmp.projection_counts},
        {"frequencies", cmp.projection_frequencies},
    };
    out["decoherence"] = Json{
        {"distribution", cmp.decoherence_distribution},
        {"note", "distribution-only: this model supplies no individual-event mechanism"},
    };
    out["tv_distance"] = cmp.tv_distance;
    return out;
}

std::string events_to_csv(const RunStats& stats) {
    std::ostringstream out;
    out << "trial,target,registered,conclusive\n";
    for (std::size_t t = 0; t < stats.events.size(); ++t) {
        const MeasurementEvent& e = stats.events[t];
        out << t << ',' << e.target_index << ',';
        if (e.registered_index) {
            out << *e.registered_index;
        }
        out << ',' << (e.conclusive ? 1 : 0) << '\n';
    }
    return out.str();
}

}  // namespace qsearch
