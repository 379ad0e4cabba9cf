#include "qsearch/dense_matrix.hpp"

#include <bit>
#include <cmath>

#include "qsearch/grover.hpp"

namespace qsearch {

DenseMatrix::DenseMatrix(std::size_t dim)
    : dim_(dim), entries_(dim * dim, Complex{0.0, 0.0}) {
    if (dim == 0) {
        throw RangeError("matrix dimension must be positive");
    }
}

DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m.at(i, i) = Complex{1.0, 0.0};
    }
    return m;
}

DenseMatrix DenseMatrix::hadamard(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxDenseQubits) {
        throw RangeError("dense Hadamard limited to 1..6 qubits");
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    const double scale = 1.0 / std::sqrt(static_cast<double>(dim));
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            // (-1)^(popcount(i & j)) / sqrt(N)
            const int parity = std::popcount(i & j) & 1;
            m.at(i, j) = Complex{parity ? -scale : scale, 0.0};
        }
    }
    return m;
}

DenseMatrix DenseMatrix::kron(const DenseMatrix& a, const DenseMatrix& b) {
    const std::size_t da = a.dim();
    const std::size_t db = b.dim();
    DenseMatrix m(da * db);
    for (std::size_t i = 0; i < da; ++i) {
        for (std::size_t j = 0; j < da; ++j) {
            for (std::size_t k = 0; k < db; ++k) {
                for (std::size_t l = 0; l < db; ++l) {
                    m.at(i * db + k, j * db + l) = a.at(i, j) * b.at(k, l);
                }
            }
        }
    }
    return m;
}

DenseMatrix DenseMatrix::multiply(const DenseMatrix& rhs) const {
    if (dim_ != rhs.dim_) {
        throw DimensionError("matrix dimensions differ");
    }
    DenseMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t k = 0; k < dim_; ++k) {
            const Complex aik = at(i, k);
            if (aik == Complex{0.0, 0.0}) {
                continue;
            }
            for (std::size_t j = 0; j < dim_; ++j) {
                out.at(i, j) += aik * rhs.at(k, j);
            }
        }
    }
    return out;
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix out(dim_);
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            out.at(i, j) = std::conj(at(j, i));
        }
    }
    return out;
}

bool DenseMatrix::is_unitary(double tol) const {
    const DenseMatrix product = multiply(adjoint());
    for (std::size_t i = 0; i < dim_; ++i) {
        for (std::size_t j = 0; j < dim_; ++j) {
            const Complex expected = (i == j) ? Complex{1.0, 0.0} : Complex{0.0, 0.0};
            if (std::abs(product.at(i, j) - expected) > tol) {
                return false;
            }
        }
    }
    return true;
}

std::vector<Complex> DenseMatrix::apply(const std::vector<Complex>& v) const {
    if (v.size() != dim_) {
        throw DimensionError("vector length does not match matrix dimension");
    }
    std::vector<Complex> out(dim_, Complex{0.0, 0.0});
    for (std::size_t i = 0; i < dim_; ++i) {
        Complex acc{0.0, 0.0};
        for (std::size_t j = 0; j < dim_; ++j) {
            acc += at(i, j) * v[j];
        }
        out[i] = acc;
    }
    return out;
}

double DenseMatrix::max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.dim() != b.dim()) {
        throw DimensionError("matrix dimensions differ");
    }
    double worst = 0.0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        for (std::size_t j = 0; j < a.dim(); ++j) {
            worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
        }
    }
    return worst;
}

DenseMatrix oracle_matrix(const MarkedSet& marked) {
    if (marked.n_qubits() > kMaxDenseQubits) {
        throw RangeError("dense oracle limited to 6 qubits");
    }
    const std::size_t dim = marked.dim();
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        m.at(i, i) = Complex{marked.contains(i) ? -1.0 : 1.0, 0.0};
    }
    return m;
}

DenseMatrix diffusion_matrix(int n_qubits) {
    if (n_qubits < 1 || n_qubits > kMaxDenseQubits) {
        throw RangeError("dense diffusion limited to 1..6 qubits");
    }
    const std::size_t dim = std::size_t{1} << n_qubits;
    const double two_over_n = 2.0 / static_cast<double>(dim);
    DenseMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            m.at(i, j) = Complex{two_over_n - (i == j ? 1.0 : 0.0), 0.0};
        }
    }
    return m;
}

DenseMatrix grover_matrix(int n_qubits, const MarkedSet& marked) {
    if (n_qubits != marked.n_qubits()) {
        throw DimensionError("marked set does not match qubit count");
    }
    const DenseMatrix oracle = oracle_matrix(marked);
    const DenseMatrix projector_form = diffusion_matrix(n_qubits).multiply(oracle);

    // H (2|0><0| - I) H, the four-step factorization
    const std::size_t dim = marked.dim();
    DenseMatrix phase_zero(dim);
    phase_zero.at(0, 0) = Complex{1.0, 0.0};
    for (std::size_t i = 1; i < dim; ++i) {
        phase_zero.at(i, i) = Complex{-1.0, 0.0};
    }
    const DenseMatrix h = DenseMatrix::hadamard(n_qubits);
    const DenseMatrix conjugated_form = h.multiply(phase_zero).multiply(h).multiply(oracle);

    if (DenseMatrix::max_abs_diff(projector_form, conjugated_form) > 1e-12) {
        throw ValidationError("Grover-step factorizations disagree beyond 1e-12");
    }
    return projector_form;
}

double check_equivalence(int n_qubits, const MarkedSet& marked, int k) {
    if (n_qubits > kMaxDenseQubits) {
        throw RangeError("dense equivalence check limited to 6 qubits");
    }
    if (k < 0 || k > 50) {
        throw RangeError("equivalence check limited to k in [0, 50]");
    }
    const StateVector fast = run_grover(n_qubits, marked, k);

    const std::size_t dim = marked.dim();
    const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
    std::vector<Complex> reference(dim, Complex{amp, 0.0});
    const DenseMatrix g = grover_matrix(n_qubits, marked);
    for (int i = 0; i < k; ++i) {
        reference = g.apply(reference);
    }

    double worst = 0.0;
    for (std::size_t i = 0; i < dim; ++i) {
        worst = std::max(worst, std::abs(fast.amplitudes()[i] - reference[i]));
    }
    return worst;
}

}  // namespace qsearch
