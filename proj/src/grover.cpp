#include "qsearch/grover.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "qsearch/dense_matrix.hpp"

namespace qsearch {

MarkedSet::MarkedSet(int n_qubits, std::vector<std::uint64_t> solutions)
    : n_qubits_(n_qubits), solutions_(std::move(solutions)) {
    if (n_qubits_ < 1 || n_qubits_ > kMaxQubits) {
        throw RangeError("MarkedSet n_qubits out of range");
    }
    const std::uint64_t n = dim();
    std::sort(solutions_.begin(), solutions_.end());
    solutions_.erase(std::unique(solutions_.begin(), solutions_.end()), solutions_.end());
    if (solutions_.empty()) {
        throw RangeError("MarkedSet requires at least one solution (1 <= M <= N)");
    }
    if (solutions_.back() >= n) {
        throw RangeError("solution index out of range");
    }
    member_.assign(n, false);
    for (std::uint64_t s : solutions_) {
        member_[s] = true;
    }
}

double rotation_angle(std::uint64_t n_big, std::uint64_t m) {
    if (n_big < 1 || m < 1 || m > n_big) {
        throw RangeError("rotation_angle requires 1 <= M <= N");
    }
    const double ratio = static_cast<double>(n_big - m) / static_cast<double>(n_big);
    return 2.0 * std::acos(std::sqrt(ratio));
}

RotationCoefficients predict_state(std::uint64_t n_big, std::uint64_t m, int k) {
    if (k < 0) {
        throw RangeError("iteration count must be non-negative");
    }
    const double half_theta = rotation_angle(n_big, m) / 2.0;
    const double phase = static_cast<double>(2 * k + 1) * half_theta;
    return {std::cos(phase), std::sin(phase)};
}

GroverPlan optimal_iterations(std::uint64_t n_big, std::uint64_t m) {
    const double theta = rotation_angle(n_big, m);
    const double target = std::numbers::pi / (2.0 * theta) - 0.5;
    const double frac = target - std::floor(target);
    double rounded;
    if (std::abs(frac - 0.5) < 1e-12) {
        rounded = std::floor(target);  // tie: smaller k
    } else {
        rounded = std::floor(target + 0.5);
    }
    const int k_star = static_cast<int>(std::max(0.0, rounded));

    GroverPlan plan;
    plan.n_big = n_big;
    plan.m_solutions = m;
    plan.theta = theta;
    plan.k_star = k_star;
    plan.predicted_success.reserve(static_cast<std::size_t>(k_star) + 1);
    for (int k = 0; k <= k_star; ++k) {
        const double s = std::sin(static_cast<double>(2 * k + 1) * theta / 2.0);
        plan.predicted_success.push_back(s * s);
    }
    return plan;
}

void apply_oracle(StateVector& state, const MarkedSet& marked) {
    if (state.n_qubits() != marked.n_qubits()) {
        throw DimensionError("oracle and state qubit counts differ");
    }
    auto amps = state.raw();
    for (std::uint64_t s : marked.solutions()) {
        amps[s] = -amps[s];
    }
    state.check_norm();
}

void apply_phase_shift_zero(StateVector& state) {
    auto amps = state.raw();
    for (std::uint64_t i = 1; i < amps.size(); ++i) {
        amps[i] = -amps[i];
    }
    state.check_norm();
}

void apply_diffusion(StateVector& state) {
    auto amps = state.raw();
    Complex sum{0.0, 0.0};
    for (const Complex& a : amps) {
        sum += a;
    }
    const Complex twice_mean = 2.0 * sum / static_cast<double>(amps.size());
    for (Complex& a : amps) {
        a = twice_mean - a;
    }
    state.check_norm();
}

void grover_step(StateVector& state, const MarkedSet& marked) {
    apply_oracle(state, marked);
    apply_diffusion(state);
}

StateVector run_grover(int n_qubits, const MarkedSet& marked, int k) {
    if (k < 0) {
        throw RangeError("iteration count must be non-negative");
    }
    if (n_qubits != marked.n_qubits()) {
        throw DimensionError("marked set does not match qubit count");
    }
    StateVector state = StateVector::zero_state(n_qubits);
    state.apply_hadamard_all();
    for (int i = 0; i < k; ++i) {
        grover_step(state, marked);
    }
    return state;
}

void apply_generalized_diffusion(StateVector& state, const DenseMatrix& u) {
    if (u.dim() != state.dim()) {
        throw DimensionError("transform dimension does not match state");
    }
    if (!u.is_unitary(1e-8)) {
        throw ValidationError("generalized diffusion transform is not unitary");
    }
    state.apply_dense_unitary(u.adjoint());
    apply_phase_shift_zero(state);
    state.apply_dense_unitary(u);
}

}  // namespace qsearch
