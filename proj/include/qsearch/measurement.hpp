#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qsearch/grover.hpp"
#include "qsearch/statevector.hpp"

namespace qsearch {

/// System under measurement: outcome amplitudes plus human-readable labels
/// for the eigenvalues and the pointer positions they correlate with.
struct SystemSpec {
    std::vector<Complex> coefficients;
    std::vector<std::string> outcome_labels;
    std::vector<std::string> pointer_labels;

    std::size_t n_outcomes() const { return coefficients.size(); }

    /// Enforces sum |c_i|^2 = 1 within 1e-10 and matching label lengths.
    void validate() const;
};

/// Hermitian trace-1 matrix over the outcome space.
class DensityMatrix {
  public:
    explicit DensityMatrix(std::size_t dim);

    std::size_t dim() const { return dim_; }
    Complex& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Complex& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

    /// Hermiticity and trace within 1e-10; positive semidefiniteness is
    /// checked only for dim <= 16 (shifted Cholesky).
    void validate() const;

  private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// Finite-efficiency detector: outcomes with register probability below the
/// threshold are invisible.
struct DetectorModel {
    double threshold_epsilon = 0.01;

    void validate() const;
};

/// One simulated detection: the Born-sampled target the oracle marked, the
/// set of outcomes the detector could register after amplification, and the
/// registered outcome when exactly one survives.
struct MeasurementEvent {
    std::uint64_t target_index = 0;
    std::optional<std::uint64_t> registered_index;
    std::vector<std::uint64_t> detectable_set;
    bool conclusive = false;
    std::vector<double> final_probabilities;  // per pointer outcome
};

struct RunStats {
    std::uint64_t trials = 0;
    std::vector<std::uint64_t> counts;  // per outcome, conclusive events only
    std::uint64_t inconclusive_count = 0;
    std::vector<double> empirical_frequencies;  // counts / trials
    std::vector<MeasurementEvent> events;       // filled only when recorded
};

/// Side-by-side reference comparison. The decoherence arm is a distribution
/// only: that model supplies no per-event mechanism, and none is invented.
struct ModelComparison {
    GroverPlan plan;
    std::vector<double> projection_frequencies;
    std::vector<std::uint64_t> projection_counts;
    std::vector<double> decoherence_distribution;
    RunStats grover;
    double tv_distance = 0.0;
};

/// rho = |Psi><Psi|: entries_ij = c_i conj(c_j).
DensityMatrix pure_density_matrix(const SystemSpec& spec);

/// Zeroes the off-diagonal interference terms, diagonal untouched.
DensityMatrix project_reduce(const DensityMatrix& rho);

/// L1 mass of the off-diagonal entries; 0 iff fully decohered.
double coherence_norm(const DensityMatrix& rho);

/// Post-interaction entangled reference state: amplitude c_i at register
/// index i (outcomes occupy the low indices), 0 elsewhere.
StateVector build_entangled_state(const SystemSpec& spec, int register_qubits);

/// One trial: Born-sample the target, run k* Grover iterations on a uniform
/// register with that target marked, then apply the detector threshold.
MeasurementEvent run_measurement_event(const SystemSpec& spec, int register_qubits,
                                       const DetectorModel& detector, RandomSource& rng);

/// Aggregates independent trials over split random streams. Output is
/// identical for any thread count.
RunStats run_experiment(const SystemSpec& spec, int register_qubits,
                        const DetectorModel& detector, std::uint64_t trials,
                        std::uint64_t seed, int threads = 1, bool record_events = false);

ModelComparison compare_models(const SystemSpec& spec, int register_qubits,
                               const DetectorModel& detector, std::uint64_t trials,
                               std::uint64_t seed, int threads = 1);

}  // namespace qsearch
