#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsearch/dense_matrix.hpp"
#include "qsearch/grover.hpp"
#include "qsearch/json_io.hpp"
#include "qsearch/measurement.hpp"

namespace {

using qsearch::Json;

constexpr int kExitValidation = 2;
constexpr int kExitInfeasible = 3;

void emit(const std::string& text, const std::string& output_path) {
    if (output_path.empty() || output_path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open output file: " + output_path);
    }
    out << text;
}

std::string render_json(const Json& doc) { return doc.dump(2) + "\n"; }

std::string plan_csv(const qsearch::GroverPlan& plan) {
    std::string out = "k,predicted_success\n";
    for (std::size_t k = 0; k < plan.predicted_success.size(); ++k) {
        out += std::to_string(k) + "," + Json(plan.predicted_success[k]).dump() + "\n";
    }
    return out;
}

std::string stats_csv(const qsearch::SystemSpec& spec, const qsearch::RunStats& stats) {
    std::string out = "outcome,label,count,frequency\n";
    for (std::size_t i = 0; i < stats.counts.size(); ++i) {
        out += std::to_string(i) + "," + spec.outcome_labels[i] + "," +
               std::to_string(stats.counts[i]) + "," +
               Json(stats.empirical_frequencies[i]).dump() + "\n";
    }
    out += "inconclusive,," + std::to_string(stats.inconclusive_count) + ",\n";
    return out;
}

qsearch::ExperimentDescriptor load_descriptor(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw qsearch::ValidationError("cannot open descriptor file: " + path);
    }
    Json doc;
    try {
        doc = Json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw qsearch::ValidationError(std::string("descriptor is not valid JSON: ") + e.what());
    }
    return qsearch::parse_descriptor(doc);
}

int run_plan(int n_qubits, std::uint64_t m, const std::string& format,
             const std::string& output_path) {
    if (n_qubits < 1 || n_qubits > qsearch::kMaxQubits) {
        throw qsearch::RangeError("n-qubits must be in [1, 26]");
    }
    const std::uint64_t n_big = std::uint64_t{1} << n_qubits;
    const qsearch::GroverPlan plan = qsearch::optimal_iterations(n_big, m);
    if (format == "csv") {
        emit(plan_csv(plan), output_path);
    } else {
        emit(render_json(qsearch::plan_to_json(plan)), output_path);
    }
    return 0;
}

int run_search(int n_qubits, const std::vector<std::uint64_t>& marked_indices,
               const std::string& k_arg, const std::string& output_path) {
    if (n_qubits < 1 || n_qubits > qsearch::kMaxQubits) {
        throw qsearch::RangeError("n-qubits must be in [1, 26]");
    }
    const qsearch::MarkedSet marked(n_qubits, marked_indices);
    const std::uint64_t n_big = marked.dim();
    const std::uint64_t m = marked.count();
    const qsearch::GroverPlan plan = qsearch::optimal_iterations(n_big, m);

    int k = plan.k_star;
    if (k_arg != "auto") {
        std::size_t pos = 0;
        k = std::stoi(k_arg, &pos);
        if (pos != k_arg.size() || k < 0) {
            throw qsearch::RangeError("--k must be 'auto' or a non-negative integer");
        }
    }

    const qsearch::StateVector final_state = qsearch::run_grover(n_qubits, marked, k);
    const auto coeffs = qsearch::predict_state(n_big, m, k);
    const double predicted_solution =
        coeffs.beta_coeff * coeffs.beta_coeff / static_cast<double>(m);
    const double predicted_nonsolution =
        m == n_big ? 0.0
                   : coeffs.alpha_coeff * coeffs.alpha_coeff / static_cast<double>(n_big - m);

    Json solution_probs = Json::object();
    double deviation = 0.0;
    double max_nonsolution = 0.0;
    for (std::uint64_t i = 0; i < n_big; ++i) {
        const double p = final_state.probability(i);
        if (marked.contains(i)) {
            solution_probs[std::to_string(i)] = p;
            deviation = std::max(deviation, std::abs(p - predicted_solution));
        } else {
            max_nonsolution = std::max(max_nonsolution, p);
            deviation = std::max(deviation, std::abs(p - predicted_nonsolution));
        }
    }

    const Json out{
        {"n_qubits", n_qubits},
        {"marked", marked.solutions()},
        {"k", k},
        {"plan", qsearch::plan_to_json(plan)},
        {"solution_probabilities", solution_probs},
        {"max_nonsolution_probability", max_nonsolution},
        {"predicted_solution_probability", predicted_solution},
        {"predicted_nonsolution_probability", predicted_nonsolution},
        {"deviation", deviation},
    };
    emit(render_json(out), output_path);
    return 0;
}

struct ExperimentArgs {
    std::string descriptor_path;
    std::string format = "json";
    std::string output_path;
    std::string events_path;
    std::uint64_t seed = 1;
    bool seed_given = false;
    bool strict_paper_n2 = false;
    int parallel = 1;
};

int run_measure(const ExperimentArgs& args, bool compare) {
    qsearch::ExperimentDescriptor d = load_descriptor(args.descriptor_path);
    if (args.seed_given) {
        d.seed = args.seed;
    }
    if (args.strict_paper_n2) {
        d.strict_paper_n2 = true;
    }
    const int reg = d.effective_register_qubits();
    const qsearch::DetectorModel detector{d.epsilon};

    try {
        if (compare) {
            const qsearch::ModelComparison cmp = qsearch::compare_models(
                d.spec, reg, detector, d.trials, d.seed, args.parallel);
            emit(render_json(qsearch::comparison_to_json(d.spec, cmp)), args.output_path);
        } else {
            const bool record = !args.events_path.empty();
            const qsearch::RunStats stats = qsearch::run_experiment(
                d.spec, reg, detector, d.trials, d.seed, args.parallel, record);
            const qsearch::GroverPlan plan =
                qsearch::optimal_iterations(std::uint64_t{1} << reg, 1);
            if (args.format == "csv") {
                emit(stats_csv(d.spec, stats), args.output_path);
            } else {
                emit(render_json(qsearch::run_stats_to_json(d.spec, plan, stats)),
                     args.output_path);
            }
            if (record) {
                emit(qsearch::events_to_csv(stats), args.events_path);
            }
        }
    } catch (const qsearch::DimensionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInfeasible;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Grover amplitude-amplification simulator and measurement harness"};
    app.require_subcommand(1);

    int n_qubits = 1;
    std::uint64_t m_solutions = 1;
    std::vector<std::uint64_t> marked_indices;
    std::string k_arg = "auto";
    std::string format = "json";
    std::string output_path;
    ExperimentArgs exp;

    auto* plan = app.add_subcommand("plan", "Closed-form rotation analytics for (N, M)");
    plan->add_option("--n-qubits", n_qubits, "register size n, N = 2^n")->required();
    plan->add_option("--m", m_solutions, "number of solutions M");
    plan->add_option("--format", format)->check(CLI::IsMember({"json", "csv"}));
    plan->add_option("--output", output_path, "output file, '-' for stdout");

    auto* run = app.add_subcommand("run", "Run G^k from the uniform state and report probabilities");
    run->add_option("--n-qubits", n_qubits)->required();
    run->add_option("--marked", marked_indices, "solution indices")
        ->required()
        ->delimiter(',');
    run->add_option("--k", k_arg, "iteration count or 'auto' for k*");
    run->add_option("--output", output_path);

    auto* measure = app.add_subcommand("measure", "Simulate detection events from a descriptor");
    measure->add_option("descriptor", exp.descriptor_path, "experiment descriptor JSON")
        ->required();
    auto* measure_seed = measure->add_option("--seed", exp.seed, "master seed (default 1)");
    measure->add_option("--format", exp.format)->check(CLI::IsMember({"json", "csv"}));
    measure->add_option("--output", exp.output_path);
    measure->add_option("--events", exp.events_path, "write per-event CSV log");
    measure->add_option("--parallel", exp.parallel, "worker threads")
        ->check(CLI::PositiveNumber);
    measure->add_flag("--strict-paper-n2", exp.strict_paper_n2,
                      "use the minimal register (N=2 for two outcomes)");

    auto* cmp = app.add_subcommand("compare", "Grover mechanism vs projection and decoherence");
    cmp->add_option("descriptor", exp.descriptor_path)->required();
    auto* cmp_seed = cmp->add_option("--seed", exp.seed);
    cmp->add_option("--output", exp.output_path);
    cmp->add_option("--parallel", exp.parallel)->check(CLI::PositiveNumber);
    cmp->add_flag("--strict-paper-n2", exp.strict_paper_n2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        if (plan->parsed()) {
            return run_plan(n_qubits, m_solutions, format, output_path);
        }
        if (run->parsed()) {
            return run_search(n_qubits, marked_indices, k_arg, output_path);
        }
        exp.seed_given = measure->parsed() ? measure_seed->count() > 0 : cmp_seed->count() > 0;
        return run_measure(exp, cmp->parsed());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
