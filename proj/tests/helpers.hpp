#pragma once

#include <cmath>
#include <vector>

#include "qsearch/dense_matrix.hpp"
#include "qsearch/random.hpp"
#include "qsearch/statevector.hpp"

namespace test_helpers {

using qsearch::Complex;
using qsearch::DenseMatrix;
using qsearch::RandomSource;
using qsearch::StateVector;

// Box-Muller from two uniforms
inline double gaussian(RandomSource& rng) {
    const double u1 = rng.next_double();
    const double u2 = rng.next_double();
    return std::sqrt(-2.0 * std::log(u1 + 1e-300)) * std::cos(6.283185307179586 * u2);
}

inline StateVector random_state(int n_qubits, RandomSource& rng) {
    const std::uint64_t n = std::uint64_t{1} << n_qubits;
    std::vector<Complex> amps(n);
    double norm_sq = 0.0;
    for (auto& a : amps) {
        a = Complex{gaussian(rng), gaussian(rng)};
        norm_sq += std::norm(a);
    }
    const double scale = 1.0 / std::sqrt(norm_sq);
    for (auto& a : amps) {
        a *= scale;
    }
    return StateVector::from_amplitudes(n_qubits, std::move(amps));
}

// Haar-ish random unitary: complex Gaussian matrix + modified Gram-Schmidt
inline DenseMatrix random_unitary(std::size_t dim, RandomSource& rng) {
    std::vector<std::vector<Complex>> cols(dim, std::vector<Complex>(dim));
    for (auto& col : cols) {
        for (auto& x : col) {
            x = Complex{gaussian(rng), gaussian(rng)};
        }
    }
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t prev = 0; prev < j; ++prev) {
            Complex proj{0.0, 0.0};
            for (std::size_t i = 0; i < dim; ++i) {
                proj += std::conj(cols[prev][i]) * cols[j][i];
            }
            for (std::size_t i = 0; i < dim; ++i) {
                cols[j][i] -= proj * cols[prev][i];
            }
        }
        double norm_sq = 0.0;
        for (const auto& x : cols[j]) {
            norm_sq += std::norm(x);
        }
        const double scale = 1.0 / std::sqrt(norm_sq);
        for (auto& x : cols[j]) {
            x *= scale;
        }
    }
    DenseMatrix u(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            u.at(i, j) = cols[j][i];
        }
    }
    return u;
}

inline double max_amp_diff(const StateVector& a, const StateVector& b) {
    double worst = 0.0;
    for (std::uint64_t i = 0; i < a.dim(); ++i) {
        worst = std::max(worst, std::abs(a.amplitudes()[i] - b.amplitudes()[i]));
    }
    return worst;
}

// 1 - alpha = 0.999 chi-square quantile via the Wilson-Hilferty cube
// approximation; accurate to a few percent, plenty for a 0.001-level gate.
inline double chi_square_crit_999(int df) {
    const double z = 3.090232306167813;
    const double d = static_cast<double>(df);
    const double t = 1.0 - 2.0 / (9.0 * d) + z * std::sqrt(2.0 / (9.0 * d));
    return d * t * t * t;
}

}  // namespace test_helpers
