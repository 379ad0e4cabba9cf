#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "qsearch/errors.hpp"
#include "qsearch/random.hpp"

namespace qsearch {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 26;

// Accumulated-drift guard on the squared norm; a violation raises
// ValidationError, the state is never renormalized.
inline constexpr double kNormTolerance = 1e-8;

class DenseMatrix;

/// Dense complex statevector over 2^n basis indices.
///
/// The amplitudes always satisfy sum |a_i|^2 = 1 within kNormTolerance;
/// this is checked on construction and after every operator application.
class StateVector {
  public:
    /// |0...0>: amplitude 1 at index 0.
    static StateVector zero_state(int n_qubits);

    /// Takes ownership of `amps`; length must be 2^n_qubits and the norm
    /// constraint must already hold.
    static StateVector from_amplitudes(int n_qubits, std::vector<Complex> amps);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return amps_.size(); }
    const std::vector<Complex>& amplitudes() const { return amps_; }
    Complex amplitude(std::uint64_t index) const;

    /// |amplitude(index)|^2.
    double probability(std::uint64_t index) const;

    /// H^(x)n in place, n butterfly passes, O(N n).
    void apply_hadamard_all();

    /// result_i = sum_j u_ij a_j. Rejects non-unitary or mismatched u.
    void apply_dense_unitary(const DenseMatrix& u);

    /// Draws a basis index with probability |amplitude|^2.
    std::uint64_t born_sample(RandomSource& rng) const;

    void check_norm() const;

    /// Mutable amplitude span for operator kernels. Callers must restore
    /// the norm invariant (and call check_norm) before handing the state on.
    std::span<Complex> raw() { return amps_; }

  private:
    StateVector(int n_qubits, std::vector<Complex> amps);

    int n_qubits_;
    std::vector<Complex> amps_;
};

/// sum_i conj(a_i) b_i.
Complex inner_product(const StateVector& a, const StateVector& b);

}  // namespace qsearch
