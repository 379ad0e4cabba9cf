#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "qsearch/errors.hpp"

namespace qsearch {

using Complex = std::complex<double>;

class MarkedSet;

// Dense paths are capped at 6 qubits (64x64); large enough for every
// structural case, cheap enough to run everywhere.
inline constexpr int kMaxDenseQubits = 6;

/// Row-major dense complex matrix. Reference realization of the search
/// operators, used as the independent oracle for the fast statevector path.
class DenseMatrix {
  public:
    explicit DenseMatrix(std::size_t dim);

    static DenseMatrix identity(std::size_t dim);

    /// H^(x)n, dim 2^n, n <= kMaxDenseQubits.
    static DenseMatrix hadamard(int n_qubits);

    static DenseMatrix kron(const DenseMatrix& a, const DenseMatrix& b);

    std::size_t dim() const { return dim_; }
    Complex& at(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }
    const Complex& at(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }

    DenseMatrix multiply(const DenseMatrix& rhs) const;
    DenseMatrix adjoint() const;
    bool is_unitary(double tol) const;

    std::vector<Complex> apply(const std::vector<Complex>& v) const;

    /// max_ij |a_ij - b_ij|.
    static double max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

  private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

/// Diagonal +-1 matrix: -1 at solution indices. n <= kMaxDenseQubits.
DenseMatrix oracle_matrix(const MarkedSet& marked);

/// 2|psi><psi| - I over the uniform state. n <= kMaxDenseQubits.
DenseMatrix diffusion_matrix(int n_qubits);

/// Full Grover-step matrix, diffusion composed after the oracle. Built from
/// both factorizations (projector form and Hadamard-conjugated phase shift);
/// raises ValidationError if they disagree beyond 1e-12.
DenseMatrix grover_matrix(int n_qubits, const MarkedSet& marked);

/// Max elementwise deviation between the fast statevector path and k
/// applications of grover_matrix, both started from the uniform state.
double check_equivalence(int n_qubits, const MarkedSet& marked, int k);

}  // namespace qsearch
