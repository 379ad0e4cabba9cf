#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "helpers.hpp"
#include "qsearch/dense_matrix.hpp"
#include "qsearch/grover.hpp"

using namespace qsearch;
using test_helpers::max_amp_diff;
using test_helpers::random_state;

namespace {

StateVector uniform_state(int n_qubits) {
    StateVector s = StateVector::zero_state(n_qubits);
    s.apply_hadamard_all();
    return s;
}

// Normalized uniform superpositions over solutions / non-solutions,
// independent of the implementation path being checked.
std::vector<Complex> beta_vector(const MarkedSet& marked) {
    std::vector<Complex> v(marked.dim(), Complex{0.0, 0.0});
    const double amp = 1.0 / std::sqrt(static_cast<double>(marked.count()));
    for (std::uint64_t s : marked.solutions()) {
        v[s] = Complex{amp, 0.0};
    }
    return v;
}

std::vector<Complex> alpha_vector(const MarkedSet& marked) {
    std::vector<Complex> v(marked.dim(), Complex{0.0, 0.0});
    const std::uint64_t non_solutions = marked.dim() - marked.count();
    if (non_solutions == 0) {
        return v;
    }
    const double amp = 1.0 / std::sqrt(static_cast<double>(non_solutions));
    for (std::uint64_t i = 0; i < marked.dim(); ++i) {
        if (!marked.contains(i)) {
            v[i] = Complex{amp, 0.0};
        }
    }
    return v;
}

Complex project(const std::vector<Complex>& basis, const StateVector& state) {
    Complex acc{0.0, 0.0};
    for (std::uint64_t i = 0; i < state.dim(); ++i) {
        acc += std::conj(basis[i]) * state.amplitudes()[i];
    }
    return acc;
}

MarkedSet random_marked_set(int n_qubits, RandomSource& rng,
                            std::uint64_t max_m = 0) {
    const std::uint64_t n = std::uint64_t{1} << n_qubits;
    std::uint64_t m_cap = max_m == 0 ? n : max_m;
    const std::uint64_t m = 1 + rng.next_u64() % m_cap;
    std::vector<std::uint64_t> picks;
    while (picks.size() < m) {
        const std::uint64_t candidate = rng.next_u64() % n;
        bool seen = false;
        for (std::uint64_t p : picks) {
            seen = seen || p == candidate;
        }
        if (!seen) {
            picks.push_back(candidate);
        }
    }
    return MarkedSet(n_qubits, std::move(picks));
}

}  // namespace

TEST_CASE("MarkedSet validation") {
    CHECK_THROWS_AS(MarkedSet(2, {}), RangeError);
    CHECK_THROWS_AS(MarkedSet(2, {4}), RangeError);
    const MarkedSet dup(2, {3, 3, 1});
    CHECK(dup.count() == 2);
    CHECK(dup.contains(1));
    CHECK(dup.contains(3));
    CHECK_FALSE(dup.contains(0));
}

TEST_CASE("apply_oracle") {
    StateVector s = uniform_state(1);
    apply_oracle(s, MarkedSet(1, {1}));
    const double r = 1.0 / std::numbers::sqrt2;
    CHECK(s.amplitude(0).real() == doctest::Approx(r).epsilon(1e-12));
    CHECK(s.amplitude(1).real() == doctest::Approx(-r).epsilon(1e-12));

    SUBCASE("marking everything flips the global sign") {
        StateVector t = uniform_state(2);
        const StateVector before = t;
        apply_oracle(t, MarkedSet(2, {0, 1, 2, 3}));
        for (std::uint64_t i = 0; i < 4; ++i) {
            CHECK(t.amplitudes()[i] == -before.amplitudes()[i]);
        }
    }

    SUBCASE("involution") {
        RandomSource rng(3);
        const StateVector original = random_state(4, rng);
        StateVector t = original;
        const MarkedSet marked(4, {2, 9, 14});
        apply_oracle(t, marked);
        apply_oracle(t, marked);
        CHECK(max_amp_diff(t, original) == 0.0);
    }

    SUBCASE("dimension mismatch") {
        StateVector t = StateVector::zero_state(3);
        CHECK_THROWS_AS(apply_oracle(t, MarkedSet(2, {1})), DimensionError);
    }
}

TEST_CASE("apply_phase_shift_zero") {
    StateVector z = StateVector::zero_state(3);
    apply_phase_shift_zero(z);
    CHECK(z.amplitude(0) == Complex{1.0, 0.0});

    StateVector u = uniform_state(1);
    apply_phase_shift_zero(u);
    const double r = 1.0 / std::numbers::sqrt2;
    CHECK(u.amplitude(0).real() == doctest::Approx(r).epsilon(1e-12));
    CHECK(u.amplitude(1).real() == doctest::Approx(-r).epsilon(1e-12));

    RandomSource rng(5);
    const StateVector original = random_state(5, rng);
    StateVector t = original;
    apply_phase_shift_zero(t);
    apply_phase_shift_zero(t);
    CHECK(max_amp_diff(t, original) == 0.0);
}

TEST_CASE("apply_diffusion") {
    SUBCASE("the uniform state is a fixed point") {
        StateVector u = uniform_state(4);
        const StateVector before = u;
        apply_diffusion(u);
        CHECK(max_amp_diff(u, before) <= 1e-12);
    }

    SUBCASE("equals H phase_shift_zero H on random states") {
        RandomSource rng(7);
        for (int n : {1, 2, 5, 10}) {
            const StateVector original = random_state(n, rng);
            StateVector direct = original;
            apply_diffusion(direct);
            StateVector composed = original;
            composed.apply_hadamard_all();
            apply_phase_shift_zero(composed);
            composed.apply_hadamard_all();
            CHECK(max_amp_diff(direct, composed) <= 1e-10);
        }
    }

    SUBCASE("inversion about the mean, worked n=2 case") {
        // post-oracle uniform state, marked {3}: mean is 0.25
        StateVector s = StateVector::from_amplitudes(
            2, {{0.5, 0.0}, {0.5, 0.0}, {0.5, 0.0}, {-0.5, 0.0}});
        apply_diffusion(s);
        CHECK(std::abs(s.amplitude(0)) <= 1e-12);
        CHECK(std::abs(s.amplitude(1)) <= 1e-12);
        CHECK(std::abs(s.amplitude(2)) <= 1e-12);
        CHECK(s.amplitude(3).real() == doctest::Approx(1.0).epsilon(1e-12));
    }
}

TEST_CASE("grover_step") {
    SUBCASE("n=2 marked {3} reaches the target in one step") {
        StateVector s = uniform_state(2);
        grover_step(s, MarkedSet(2, {3}));
        CHECK(s.probability(3) == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("n=1 marked {1}: probability pinned at one half") {
        StateVector s = uniform_state(1);
        grover_step(s, MarkedSet(1, {1}));
        const double r = 1.0 / std::numbers::sqrt2;
        CHECK(s.amplitude(0).real() == doctest::Approx(-r).epsilon(1e-12));
        CHECK(s.amplitude(1).real() == doctest::Approx(r).epsilon(1e-12));
        CHECK(s.probability(1) == doctest::Approx(0.5).epsilon(1e-12));
    }

    SUBCASE("norm preserved") {
        RandomSource rng(11);
        StateVector s = random_state(6, rng);
        grover_step(s, MarkedSet(6, {17, 40}));
        double norm_sq = 0.0;
        for (const Complex& a : s.amplitudes()) {
            norm_sq += std::norm(a);
        }
        CHECK(std::abs(norm_sq - 1.0) <= 1e-10);
    }
}

TEST_CASE("rotation_angle") {
    CHECK(rotation_angle(2, 1) == doctest::Approx(std::numbers::pi / 2).epsilon(1e-14));
    CHECK(rotation_angle(4, 1) == doctest::Approx(std::numbers::pi / 3).epsilon(1e-12));
    CHECK(rotation_angle(16, 16) == doctest::Approx(std::numbers::pi).epsilon(1e-14));
    CHECK_THROWS_AS(rotation_angle(4, 0), RangeError);
    CHECK_THROWS_AS(rotation_angle(4, 5), RangeError);
}

TEST_CASE("predict_state") {
    SUBCASE("k=0 reproduces the initial decomposition") {
        const auto c = predict_state(8, 3, 0);
        CHECK(c.alpha_coeff == doctest::Approx(std::sqrt(5.0 / 8.0)).epsilon(1e-12));
        CHECK(c.beta_coeff == doctest::Approx(std::sqrt(3.0 / 8.0)).epsilon(1e-12));
    }

    SUBCASE("k=1, N=4, M=1 lands on the solution axis") {
        const auto c = predict_state(4, 1, 1);
        CHECK(std::abs(c.alpha_coeff) <= 1e-12);
        CHECK(c.beta_coeff == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("k=1 general matches cos/sin of 3 theta/2") {
        const double theta = rotation_angle(32, 5);
        const auto c = predict_state(32, 5, 1);
        CHECK(c.alpha_coeff == doctest::Approx(std::cos(1.5 * theta)).epsilon(1e-12));
        CHECK(c.beta_coeff == doctest::Approx(std::sin(1.5 * theta)).epsilon(1e-12));
    }

    CHECK_THROWS_AS(predict_state(4, 1, -1), RangeError);
    CHECK_THROWS_AS(predict_state(4, 0, 1), RangeError);
}

TEST_CASE("optimal_iterations") {
    SUBCASE("N=4, M=1") {
        const GroverPlan plan = optimal_iterations(4, 1);
        CHECK(plan.k_star == 1);
        REQUIRE(plan.predicted_success.size() == 2);
        CHECK(plan.predicted_success[0] == doctest::Approx(0.25).epsilon(1e-12));
        CHECK(plan.predicted_success[1] == doctest::Approx(1.0).epsilon(1e-12));
    }

    SUBCASE("N=2, M=1: exact tie resolved to the smaller k") {
        const GroverPlan plan = optimal_iterations(2, 1);
        CHECK(plan.k_star == 0);
        CHECK(plan.predicted_success[0] == doctest::Approx(0.5).epsilon(1e-12));
    }

    SUBCASE("N=1024, M=1 stays within the O(sqrt N) budget") {
        const GroverPlan plan = optimal_iterations(1024, 1);
        CHECK(plan.k_star == 25);
        CHECK(plan.k_star <= 26);  // ceil((pi/4) sqrt(1024))
    }

    SUBCASE("plan invariants hold on random (N, M)") {
        RandomSource rng(13);
        for (int trial = 0; trial < 50; ++trial) {
            const int n = 1 + static_cast<int>(rng.next_u64() % 16);
            const std::uint64_t n_big = std::uint64_t{1} << n;
            const std::uint64_t m = 1 + rng.next_u64() % n_big;
            const GroverPlan plan = optimal_iterations(n_big, m);
            CHECK(std::abs(std::cos(plan.theta / 2.0) -
                           std::sqrt(static_cast<double>(n_big - m) / n_big)) <= 1e-12);
            for (int k = 0; k <= plan.k_star; ++k) {
                const double s = std::sin((2 * k + 1) * plan.theta / 2.0);
                CHECK(std::abs(plan.predicted_success[k] - s * s) <= 1e-12);
            }
            CHECK(plan.predicted_success[plan.k_star] >=
                  1.0 - static_cast<double>(m) / n_big - 1e-12);
        }
    }
}

TEST_CASE("run_grover") {
    SUBCASE("n=2 exact search") {
        const StateVector s = run_grover(2, MarkedSet(2, {3}), 1);
        CHECK(s.probability(3) == doctest::Approx(1.0).epsilon(1e-12));
        for (std::uint64_t i = 0; i < 3; ++i) {
            CHECK(std::abs(s.amplitude(i)) <= 1e-12);
        }
    }

    SUBCASE("n=10 near-certain search") {
        const StateVector s = run_grover(10, MarkedSet(10, {517}), 25);
        CHECK(s.probability(517) >= 0.999);
    }

    SUBCASE("k=0 is the uniform state") {
        const StateVector s = run_grover(3, MarkedSet(3, {5}), 0);
        const double amp = 1.0 / std::sqrt(8.0);
        for (std::uint64_t i = 0; i < 8; ++i) {
            CHECK(s.amplitude(i).real() == doctest::Approx(amp).epsilon(1e-12));
        }
    }

    CHECK_THROWS_AS(run_grover(2, MarkedSet(2, {1}), -1), RangeError);
    CHECK_THROWS_AS(run_grover(3, MarkedSet(2, {1}), 1), DimensionError);
}

TEST_CASE("apply_generalized_diffusion") {
    RandomSource rng(17);

    SUBCASE("u = H^n reduces to the standard diffusion") {
        for (int n : {1, 3, 6}) {
            const StateVector original = random_state(n, rng);
            StateVector general = original;
            apply_generalized_diffusion(general, DenseMatrix::hadamard(n));
            StateVector standard = original;
            apply_diffusion(standard);
            CHECK(max_amp_diff(general, standard) <= 1e-10);
        }
    }

    SUBCASE("u = I reduces to the zero-phase shift") {
        const StateVector original = random_state(3, rng);
        StateVector general = original;
        apply_generalized_diffusion(general, DenseMatrix::identity(8));
        StateVector direct = original;
        apply_phase_shift_zero(direct);
        CHECK(max_amp_diff(general, direct) <= 1e-12);
    }

    SUBCASE("reflection: applying twice restores the state") {
        const StateVector original = random_state(4, rng);
        const DenseMatrix u = test_helpers::random_unitary(16, rng);
        StateVector s = original;
        apply_generalized_diffusion(s, u);
        apply_generalized_diffusion(s, u);
        CHECK(max_amp_diff(s, original) <= 1e-10);
    }

    SUBCASE("non-unitary transform rejected") {
        DenseMatrix bad = DenseMatrix::identity(8);
        bad.at(2, 2) = Complex{0.5, 0.0};
        StateVector s = StateVector::zero_state(3);
        CHECK_THROWS_AS(apply_generalized_diffusion(s, bad), ValidationError);
    }
}

TEST_CASE("closed-form agreement and two-dimensional confinement") {
    RandomSource rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_u64() % 12);
        const MarkedSet marked = random_marked_set(n, rng);
        const int k = static_cast<int>(rng.next_u64() % 201);
        const StateVector state = run_grover(n, marked, k);
        const auto predicted = predict_state(marked.dim(), marked.count(), k);

        const Complex a = project(alpha_vector(marked), state);
        const Complex b = project(beta_vector(marked), state);
        CHECK(std::abs(a.real() - predicted.alpha_coeff) <= 1e-9);
        CHECK(std::abs(b.real() - predicted.beta_coeff) <= 1e-9);
        CHECK(std::abs(a.imag()) <= 1e-12);
        CHECK(std::abs(b.imag()) <= 1e-12);

        // residual outside span{alpha, beta}
        const double in_plane = std::norm(a) + std::norm(b);
        CHECK(std::abs(1.0 - in_plane) <= 1e-9);

        // all solution amplitudes mutually equal, same for non-solutions
        Complex sol_ref{0.0, 0.0};
        Complex non_ref{0.0, 0.0};
        bool have_sol = false;
        bool have_non = false;
        for (std::uint64_t i = 0; i < state.dim(); ++i) {
            const Complex amp = state.amplitudes()[i];
            if (marked.contains(i)) {
                if (!have_sol) {
                    sol_ref = amp;
                    have_sol = true;
                }
                CHECK(std::abs(amp - sol_ref) <= 1e-10);
            } else {
                if (!have_non) {
                    non_ref = amp;
                    have_non = true;
                }
                CHECK(std::abs(amp - non_ref) <= 1e-10);
            }
            CHECK(std::abs(amp.imag()) <= 1e-12);
        }
    }
}

TEST_CASE("oracle is a reflection about alpha") {
    RandomSource rng(23);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_u64() % 8);
        // M < N so that |alpha> exists and a|alpha> + b|beta> is normalized
        const MarkedSet marked = random_marked_set(n, rng, (std::uint64_t{1} << n) - 1);
        const auto alpha = alpha_vector(marked);
        const auto beta = beta_vector(marked);
        const double phi = rng.next_double() * 6.283185307179586;
        const double a = std::cos(phi);
        const double b = std::sin(phi);
        std::vector<Complex> amps(marked.dim());
        for (std::uint64_t i = 0; i < marked.dim(); ++i) {
            amps[i] = a * alpha[i] + b * beta[i];
        }
        StateVector state = StateVector::from_amplitudes(n, std::move(amps));
        apply_oracle(state, marked);
        for (std::uint64_t i = 0; i < marked.dim(); ++i) {
            const Complex expected = a * alpha[i] - b * beta[i];
            CHECK(std::abs(state.amplitudes()[i] - expected) <= 1e-10);
        }
    }
}

TEST_CASE("fast operators match their dense counterparts") {
    RandomSource rng(29);
    for (int n : {1, 2, 4, 6}) {
        const MarkedSet marked = random_marked_set(n, rng);
        const StateVector original = random_state(n, rng);

        StateVector fast = original;
        apply_oracle(fast, marked);
        StateVector dense = original;
        dense.apply_dense_unitary(oracle_matrix(marked));
        CHECK(max_amp_diff(fast, dense) <= 1e-12);

        fast = original;
        apply_diffusion(fast);
        dense = original;
        dense.apply_dense_unitary(diffusion_matrix(n));
        CHECK(max_amp_diff(fast, dense) <= 1e-12);
    }
}
