#include "qsearch/measurement.hpp"

#include <cmath>
#include <thread>

namespace qsearch {

namespace {

constexpr double kSpecNormTol = 1e-10;
constexpr double kHermitianTol = 1e-10;
constexpr double kPsdSlack = 1e-8;
constexpr std::size_t kPsdCheckMaxDim = 16;

int required_register_qubits(const SystemSpec& spec, int register_qubits) {
    if (register_qubits < 1 || register_qubits > kMaxQubits) {
        throw RangeError("register_qubits must be in [1, 26]");
    }
    if (spec.n_outcomes() > (std::uint64_t{1} << register_qubits)) {
        throw DimensionError("register too small for the outcome space");
    }
    return register_qubits;
}

std::uint64_t sample_target(const SystemSpec& spec, RandomSource& rng) {
    double u = rng.next_double();
    std::uint64_t last_support = 0;
    for (std::uint64_t i = 0; i < spec.n_outcomes(); ++i) {
        const double p = std::norm(spec.coefficients[i]);
        if (p > 0.0) {
            last_support = i;
        }
        u -= p;
        if (u < 0.0) {
            return i;
        }
    }
    return last_support;
}

}  // namespace

void SystemSpec::validate() const {
    if (coefficients.size() < 2) {
        throw ValidationError("SystemSpec needs at least two outcomes");
    }
    double norm_sq = 0.0;
    for (const Complex& c : coefficients) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw ValidationError("non-finite coefficient");
        }
        norm_sq += std::norm(c);
    }
    if (std::abs(norm_sq - 1.0) > kSpecNormTol) {
        throw ValidationError("coefficients are not normalized: sum |c|^2 = " +
                              std::to_string(norm_sq));
    }
    if (outcome_labels.size() != coefficients.size() ||
        pointer_labels.size() != coefficients.size()) {
        throw ValidationError("label arrays must match the number of outcomes");
    }
}

void DetectorModel::validate() const {
    if (!(threshold_epsilon > 0.0) || !(threshold_epsilon < 1.0)) {
        throw ValidationError("detector threshold must lie in (0, 1)");
    }
}

DensityMatrix::DensityMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {
    if (dim == 0) {
        throw RangeError("density matrix dimension must be positive");
    }
}

void DensityMatrix::validate() const {
    double trace = 0.0;
    for (std::size_t i = 0; i < dim_; ++i) {
        trace += at(i, i).real();
        if (std::abs(at(i, i).imag()) > kHermitianTol) {
            throw ValidationError("diagonal entry is not real");
        }
        for (std::size_t j = i + 1; j < dim_; ++j) {
            if (std::abs(at(i, j) - std::conj(at(j, i))) > kHermitianTol) {
                throw ValidationError("density matrix is not Hermitian");
            }
        }
    }
    if (std::abs(trace - 1.0) > kHermitianTol) {
        throw ValidationError("density matrix trace is not 1");
    }
    if (dim_ <= kPsdCheckMaxDim) {
        // Cholesky of rho + slack*I succeeds iff eigenvalues >= -slack
        std::vector<Complex> l(dim_ * dim_, Complex{0.0, 0.0});
        for (std::size_t i = 0; i < dim_; ++i) {
            for (std::size_t j = 0; j <= i; ++j) {
                Complex sum = at(i, j);
                if (i == j) {
                    sum += kPsdSlack;
                }
                for (std::size_t k = 0; k < j; ++k) {
                    sum -= l[i * dim_ + k] * std::conj(l[j * dim_ + k]);
                }
                if (i == j) {
                    if (sum.real() < 0.0) {
                        throw ValidationError("density matrix is not positive semidefinite");
                    }
                    l[i * dim_ + j] = Complex{std::sqrt(sum.real()), 0.0};
                } else {
                    const double piv = l[j * dim_ + j].real();
                    l[i * dim_ + j] = piv > 0.0 ? sum / piv : Complex{0.0, 0.0};
                }
            }
        }
    }
}

DensityMatrix pure_density_matrix(const SystemSpec& spec) {
    spec.validate();
    const std::size_t n = spec.n_outcomes();
    DensityMatrix rho(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            rho.at(i, j) = spec.coefficients[i] * std::conj(spec.coefficients[j]);
        }
    }
    rho.validate();
    return rho;
}

DensityMatrix project_reduce(const DensityMatrix& rho) {
    rho.validate();
    DensityMatrix out(rho.dim());
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        out.at(i, i) = Complex{rho.at(i, i).real(), 0.0};
    }
    return out;
}

double coherence_norm(const DensityMatrix& rho) {
    double total = 0.0;
    for (std::size_t i = 0; i < rho.dim(); ++i) {
        for (std::size_t j = 0; j < rho.dim(); ++j) {
            if (i != j) {
                total += std::abs(rho.at(i, j));
            }
        }
    }
    return total;
}

StateVector build_entangled_state(const SystemSpec& spec, int register_qubits) {
    spec.validate();
    required_register_qubits(spec, register_qubits);
    std::vector<Complex> amps(std::uint64_t{1} << register_qubits, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < spec.n_outcomes(); ++i) {
        amps[i] = spec.coefficients[i];
    }
    return StateVector::from_amplitudes(register_qubits, std::move(amps));
}

MeasurementEvent run_measurement_event(const SystemSpec& spec, int register_qubits,
                                       const DetectorModel& detector, RandomSource& rng) {
    spec.validate();
    detector.validate();
    required_register_qubits(spec, register_qubits);

    MeasurementEvent event;
    event.target_index = sample_target(spec, rng);

    const std::uint64_t n_big = std::uint64_t{1} << register_qubits;
    const GroverPlan plan = optimal_iterations(n_big, 1);
    const MarkedSet marked(register_qubits, {event.target_index});
    const StateVector amplified = run_grover(register_qubits, marked, plan.k_star);

    event.final_probabilities.reserve(spec.n_outcomes());
    for (std::uint64_t i = 0; i < spec.n_outcomes(); ++i) {
        const double p = amplified.probability(i);
        event.final_probabilities.push_back(p);
        if (p >= detector.threshold_epsilon) {
            event.detectable_set.push_back(i);
        }
    }
    event.conclusive = event.detectable_set.size() == 1;
    if (event.conclusive) {
        event.registered_index = event.detectable_set.front();
    }
    return event;
}

RunStats run_experiment(const SystemSpec& spec, int register_qubits,
                        const DetectorModel& detector, std::uint64_t trials,
                        std::uint64_t seed, int threads, bool record_events) {
    if (trials < 1) {
        throw RangeError("trials must be >= 1");
    }
    spec.validate();
    detector.validate();
    required_register_qubits(spec, register_qubits);

    std::vector<MeasurementEvent> events(trials);
    const int workers = std::max(1, threads);

    auto worker = [&](std::uint64_t begin, std::uint64_t end) {
        for (std::uint64_t t = begin; t < end; ++t) {
            RandomSource rng = RandomSource::substream(seed, t);
            events[t] = run_measurement_event(spec, register_qubits, detector, rng);
        }
    };

    if (workers == 1) {
        worker(0, trials);
    } else {
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (trials + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const std::uint64_t begin = std::min(trials, w * chunk);
            const std::uint64_t end = std::min(trials, begin + chunk);
            if (begin < end) {
                pool.emplace_back(worker, begin, end);
            }
        }
        for (std::thread& th : pool) {
            th.join();
        }
    }

    RunStats stats;
    stats.trials = trials;
    stats.counts.assign(spec.n_outcomes(), 0);
    for (const MeasurementEvent& event : events) {
        if (event.conclusive) {
            ++stats.counts[*event.registered_index];
        } else {
            ++stats.inconclusive_count;
        }
    }
    stats.empirical_frequencies.reserve(spec.n_outcomes());
    for (std::uint64_t c : stats.counts) {
        stats.empirical_frequencies.push_back(static_cast<double>(c) /
                                              static_cast<double>(trials));
    }
    if (record_events) {
        stats.events = std::move(events);
    }
    return stats;
}

ModelComparison compare_models(const SystemSpec& spec, int register_qubits,
                               const DetectorModel& detector, std::uint64_t trials,
                               std::uint64_t seed, int threads) {
    ModelComparison cmp;
    cmp.plan = optimal_iterations(std::uint64_t{1} << register_qubits, 1);
    cmp.grover = run_experiment(spec, register_qubits, detector, trials, seed, threads);

    // Projection-postulate arm: direct Born sampling of the entangled state,
    // on its own stream family so the arms stay independent.
    const StateVector entangled = build_entangled_state(spec, register_qubits);
    cmp.projection_counts.assign(spec.n_outcomes(), 0);
    for (std::uint64_t t = 0; t < trials; ++t) {
        RandomSource rng = RandomSource::substream(seed ^ 0x70726F6A65637421ULL, t);
        const std::uint64_t outcome = entangled.born_sample(rng);
        ++cmp.projection_counts[outcome];
    }
    cmp.projection_frequencies.reserve(spec.n_outcomes());
    for (std::uint64_t c : cmp.projection_counts) {
        cmp.projection_frequencies.push_back(static_cast<double>(c) /
                                             static_cast<double>(trials));
    }

    const DensityMatrix reduced = project_reduce(pure_density_matrix(spec));
    cmp.decoherence_distribution.reserve(spec.n_outcomes());
    for (std::size_t i = 0; i < spec.n_outcomes(); ++i) {
        cmp.decoherence_distribution.push_back(reduced.at(i, i).real());
    }

    double l1 = 0.0;
    for (std::size_t i = 0; i < spec.n_outcomes(); ++i) {
        l1 += std::abs(cmp.projection_frequencies[i] - cmp.grover.empirical_frequencies[i]);
    }
    cmp.tv_distance = 0.5 * l1;
    return cmp;
}

}  // namespace qsearch
