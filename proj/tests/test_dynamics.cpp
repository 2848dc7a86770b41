#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gqfi/dynamics.hpp"
#include "gqfi/linalg.hpp"

using namespace gqfi;

namespace {

PhaseSpaceState random_state(std::mt19937_64& rng, double omega0 = 1.0) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return state_from_params(GaussianParams::make(2.0 * u(rng), 6.0 * u(rng), u(rng), 6.0 * u(rng), 2.0 * u(rng)), omega0);
}

double max_diff(const PhaseSpaceState& a, const PhaseSpaceState& b) {
    return std::max((a.mean - b.mean).cwiseAbs().maxCoeff(), (a.cov - b.cov).cwiseAbs().maxCoeff());
}

}  // namespace

TEST(MomentGenerators, TraceAndDiagonal) {
    const auto m = moment_generators(BathParams{1.3, 0.2, 0.5});
    EXPECT_NEAR(m.g_matrix.trace(), -0.2, 1e-15);
    for (int i = 0; i < 3; ++i) EXPECT_NEAR(m.k_matrix(i, i), -0.2, 1e-15);
}

TEST(Linalg, ExpmMatchesRotation) {
    Mat2 a;
    a << 0.0, 3.0, -3.0, 0.0;
    const Mat2 e = linalg::expm<double, 2>(a);
    EXPECT_NEAR(e(0, 0), std::cos(3.0), 1e-14);
    EXPECT_NEAR(e(0, 1), std::sin(3.0), 1e-14);
}

TEST(Linalg, ExpmLargeNormAndSmallNorm) {
    Mat2 a;
    a << -1.0, 0.0, 0.0, 2.0;
    for (double s : {1e-4, 0.1, 1.0, 10.0}) {
        const Mat2 e = linalg::expm<double, 2>(a * s);
        EXPECT_NEAR(e(0, 0), std::exp(-s), 1e-13 * std::exp(2.0 * s));
        EXPECT_NEAR(e(1, 1) / std::exp(2.0 * s), 1.0, 1e-13);
    }
}

TEST(Propagate, ClosedFormMatchesMatrixExponential) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const BathParams bath{0.3 + 2.0 * u(rng), 0.3 * u(rng), 3.0 * u(rng)};
        const auto s = random_state(rng);
        const double t = 20.0 * u(rng);
        EXPECT_LT(max_diff(propagate(s, bath, t), propagate_numeric(s, bath, t)), 1e-10) << i;
    }
}

TEST(Propagate, ZeroTimeIsIdentity) {
    std::mt19937_64 rng(2);
    const auto s = random_state(rng);
    const BathParams bath{1.0, 0.1, 0.3};
    EXPECT_EQ(max_diff(propagate(s, bath, 0.0), s), 0.0);
    EXPECT_LT(max_diff(propagate_numeric(s, bath, 0.0), s), 1e-15);
}

TEST(Propagate, UndampedFullPeriod) {
    std::mt19937_64 rng(3);
    const auto s = random_state(rng);
    EXPECT_LT(max_diff(propagate(s, BathParams{1.0, 0.0, 0.0}, 2.0 * constants::pi), s), 1e-12);
}

TEST(Propagate, RelaxesToSteadyState) {
    std::mt19937_64 rng(4);
    const BathParams bath{1.0, 0.5, 2.0};
    const auto s = random_state(rng);
    EXPECT_LT(max_diff(propagate(s, bath, 100.0), steady_state(bath)), 1e-10);
    EXPECT_LT(max_diff(propagate_numeric(s, bath, 100.0), steady_state(bath)), 1e-10);
}

TEST(Propagate, SemigroupProperty) {
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const BathParams bath{0.5 + u(rng), 0.3 * u(rng), 2.0 * u(rng)};
        const auto s = random_state(rng);
        const double t1 = 5.0 * u(rng), t2 = 5.0 * u(rng);
        EXPECT_LT(max_diff(propagate(propagate(s, bath, t1), bath, t2), propagate(s, bath, t1 + t2)), 1e-11);
    }
}

TEST(Propagate, PreservesHeisenbergBound) {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 200; ++i) {
        const BathParams bath{0.5 + u(rng), u(rng), 2.0 * u(rng)};
        EXPECT_TRUE(propagate(random_state(rng), bath, 30.0 * u(rng)).is_physical());
    }
}

TEST(Propagate, EvolvesAtDifferentFrequencyThanBasis) {
    // A state built at ω₀ evolved at ω stays physical and matches the matrix route.
    std::mt19937_64 rng(7);
    const auto s = random_state(rng, 1.0);
    const BathParams bath{1.7, 0.1, 0.4};
    EXPECT_LT(max_diff(propagate(s, bath, 4.2), propagate_numeric(s, bath, 4.2)), 1e-11);
}

TEST(SteadyState, ThermalCovariance) {
    const auto s = steady_state(BathParams{2.0, 0.1, 1.5});
    EXPECT_NEAR(s.sigma_qq(), 4.0 / 4.0, 1e-15);
    EXPECT_NEAR(s.sigma_pp(), 4.0, 1e-15);
    EXPECT_THROW(steady_state(BathParams{1.0, 0.0, 1.0}), NoSteadyStateError);
}

TEST(Propagate, RejectsNegativeTimeAndBadBath) {
    const PhaseSpaceState s;
    EXPECT_THROW(propagate(s, BathParams{1.0, 0.1, 0.0}, -1.0), DomainError);
    EXPECT_THROW(propagate(s, BathParams{0.0, 0.1, 0.0}, 1.0), DomainError);
    EXPECT_THROW(propagate(s, BathParams{1.0, -0.1, 0.0}, 1.0), DomainError);
}
