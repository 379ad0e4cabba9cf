#pragma once

#include <cstdint>
#include <vector>

#include "qsearch/statevector.hpp"

namespace qsearch {

class DenseMatrix;

/// The solution set defining f(xi): membership is O(1), indices are kept
/// sorted and distinct. 1 <= |solutions| <= 2^n.
class MarkedSet {
  public:
    MarkedSet(int n_qubits, std::vector<std::uint64_t> solutions);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return std::uint64_t{1} << n_qubits_; }
    std::uint64_t count() const { return solutions_.size(); }
    bool contains(std::uint64_t index) const { return member_[index]; }
    const std::vector<std::uint64_t>& solutions() const { return solutions_; }

  private:
    int n_qubits_;
    std::vector<std::uint64_t> solutions_;
    std::vector<bool> member_;
};

/// The analytic rotation model: theta with cos(theta/2) = sqrt((N-M)/N),
/// the optimal iteration count, and the success-probability table
/// sin^2((2k+1) theta/2) for k = 0..k_star.
struct GroverPlan {
    std::uint64_t n_big = 0;
    std::uint64_t m_solutions = 0;
    double theta = 0.0;
    int k_star = 0;
    std::vector<double> predicted_success;
};

/// Coefficients of G^k|psi> in the (non-solution, solution) basis:
/// (cos((2k+1)theta/2), sin((2k+1)theta/2)).
struct RotationCoefficients {
    double alpha_coeff = 0.0;
    double beta_coeff = 0.0;
};

/// theta = 2 arccos(sqrt((N-M)/N)), in (0, pi].
double rotation_angle(std::uint64_t n_big, std::uint64_t m);

RotationCoefficients predict_state(std::uint64_t n_big, std::uint64_t m, int k);

/// k* = max(0, round(pi/(2 theta) - 1/2)); exact half-integer ties break
/// toward the smaller k (fewer operations, identical predicted success).
GroverPlan optimal_iterations(std::uint64_t n_big, std::uint64_t m);

/// Phase oracle: amplitude(xi) -> (-1)^f(xi) amplitude(xi).
void apply_oracle(StateVector& state, const MarkedSet& marked);

/// 2|0><0| - I: every basis state except |0> gets phase -1.
void apply_phase_shift_zero(StateVector& state);

/// 2|psi><psi| - I, inversion about the mean, two O(N) passes.
void apply_diffusion(StateVector& state);

/// One Grover iteration: diffusion after the oracle.
void grover_step(StateVector& state, const MarkedSet& marked);

/// G^k H^(x)n |0>^(x)n.
StateVector run_grover(int n_qubits, const MarkedSet& marked, int k);

/// U (2|0><0| - I) U^dagger; equals apply_diffusion when U = H^(x)n.
void apply_generalized_diffusion(StateVector& state, const DenseMatrix& u);

}  // namespace qsearch
