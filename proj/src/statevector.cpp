#include "qsearch/statevector.hpp"

#include <cmath>
#include <numbers>

#include "qsearch/dense_matrix.hpp"

namespace qsearch {

namespace {

void require_qubit_count(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw RangeError("n_qubits must be in [1, " + std::to_string(kMaxQubits) +
                         "], got " + std::to_string(n_qubits));
    }
}

}  // namespace

StateVector::StateVector(int n_qubits, std::vector<Complex> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {}

StateVector StateVector::zero_state(int n_qubits) {
    require_qubit_count(n_qubits);
    std::vector<Complex> amps(std::uint64_t{1} << n_qubits, Complex{0.0, 0.0});
    amps[0] = Complex{1.0, 0.0};
    return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::from_amplitudes(int n_qubits, std::vector<Complex> amps) {
    require_qubit_count(n_qubits);
    if (amps.size() != (std::uint64_t{1} << n_qubits)) {
        throw DimensionError("amplitude array length does not match 2^n_qubits");
    }
    StateVector state(n_qubits, std::move(amps));
    state.check_norm();
    return state;
}

Complex StateVector::amplitude(std::uint64_t index) const {
    if (index >= amps_.size()) {
        throw RangeError("basis index out of range");
    }
    return amps_[index];
}

double StateVector::probability(std::uint64_t index) const {
    if (index >= amps_.size()) {
        throw RangeError("basis index out of range");
    }
    return std::norm(amps_[index]);
}

void StateVector::check_norm() const {
    double norm_sq = 0.0;
    for (const Complex& a : amps_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw ValidationError("non-finite amplitude");
        }
        norm_sq += std::norm(a);
    }
    if (std::abs(norm_sq - 1.0) > kNormTolerance) {
        throw ValidationError("state norm drifted: sum |a|^2 = " + std::to_string(norm_sq));
    }
}

void StateVector::apply_hadamard_all() {
    const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
    const std::uint64_t n = amps_.size();
    for (int q = 0; q < n_qubits_; ++q) {
        const std::uint64_t stride = std::uint64_t{1} << q;
        for (std::uint64_t base = 0; base < n; base += stride << 1) {
            for (std::uint64_t i = base; i < base + stride; ++i) {
                const Complex a = amps_[i];
                const Complex b = amps_[i + stride];
                amps_[i] = (a + b) * inv_sqrt2;
                amps_[i + stride] = (a - b) * inv_sqrt2;
            }
        }
    }
    check_norm();
}

void StateVector::apply_dense_unitary(const DenseMatrix& u) {
    if (u.dim() != amps_.size()) {
        throw DimensionError("matrix dimension does not match state dimension");
    }
    if (!u.is_unitary(1e-8)) {
        throw ValidationError("matrix is not unitary within 1e-8");
    }
    amps_ = u.apply(amps_);
    check_norm();
}

std::uint64_t StateVector::born_sample(RandomSource& rng) const {
    double u = rng.next_double();
    std::uint64_t last_support = 0;
    for (std::uint64_t i = 0; i < amps_.size(); ++i) {
        const double p = std::norm(amps_[i]);
        if (p > 0.0) {
            last_support = i;
        }
        u -= p;
        if (u < 0.0) {
            return i;
        }
    }
    // u landed in the rounding slack past the final cumulative bin
    return last_support;
}

Complex inner_product(const StateVector& a, const StateVector& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw DimensionError("inner_product requires equal qubit counts");
    }
    Complex acc{0.0, 0.0};
    const auto& av = a.amplitudes();
    const auto& bv = b.amplitudes();
    for (std::uint64_t i = 0; i < av.size(); ++i) {
        acc += std::conj(av[i]) * bv[i];
    }
    return acc;
}

}  // namespace qsearch
