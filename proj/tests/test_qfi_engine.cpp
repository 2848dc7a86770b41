#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "gqfi/closed_forms.hpp"
#include "gqfi/qfi_engine.hpp"

using namespace gqfi;

namespace {

constexpr double kPi = constants::pi;

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

}  // namespace

TEST(QfiFromMoments, ZeroDerivativeGivesZero) {
    const PhaseSpaceState s;
    EXPECT_EQ(qfi_from_moments(s, MomentDerivative{}, 1.0, 0.0).total, 0.0);
}

TEST(QfiFromMoments, DisplacementTerm) {
    MomentDerivative d;
    d.mean = Vec2(0.7, 0.0);
    const auto q = qfi_from_moments(PhaseSpaceState{}, d, 1.0, 0.0);
    EXPECT_NEAR(q.total, 2.0 * 0.49, 1e-15);
    EXPECT_NEAR(q.term_disp, q.total, 0.0);
}

TEST(QfiFromMoments, PureStateBoundaryGuard) {
    EXPECT_THROW(qfi_from_moments(PhaseSpaceState{}, MomentDerivative{}, 1.0, 0.1), PureStateBoundaryError);
    PhaseSpaceState bad;
    bad.cov.setZero();
    EXPECT_THROW(qfi_from_moments(bad, MomentDerivative{}, 0.5, 0.0), InvalidStateError);
}

TEST(QfiFromMoments, ThermalFamilyMatchesFidelityCurvature) {
    auto family = [](double n) { return state_from_params(GaussianParams{0.0, 0.0, 0.0, 0.0, n}, 1.0); };
    const double n = 0.8, h = 1e-6;
    MomentDerivative d;
    d.cov = (family(n + h).cov - family(n - h).cov) / (2.0 * h);
    const double dp = (purity(family(n + h)) - purity(family(n - h))) / (2.0 * h);
    const auto q = qfi_from_moments(family(n), d, purity(family(n)), dp);
    // Thermal family: analytic QFI 1/(n(n+1)).
    EXPECT_NEAR(q.total, 1.0 / (n * (n + 1.0)), 1e-7);
    EXPECT_NEAR(qfi_via_fidelity(family, n, 1e-4), q.total, 1e-5);
}

TEST(QfiViaFidelity, ConstantAndCoherentFamilies) {
    auto constant = [](double) { return PhaseSpaceState{}; };
    EXPECT_EQ(qfi_via_fidelity(constant, 0.3, 1e-3), 0.0);
    auto coherent = [](double th) {
        PhaseSpaceState s;
        s.mean = Vec2(std::sqrt(2.0) * th, 0.0);
        return s;
    };
    EXPECT_NEAR(qfi_via_fidelity(coherent, 1.0, 1e-4), 4.0, 1e-6);
    EXPECT_THROW(qfi_via_fidelity(coherent, 1.0, 0.0), DomainError);
}

TEST(QfiViaFidelity, AgreesWithMomentsOnSqueezedThermalFamily) {
    auto family = [](double r) { return state_from_params(GaussianParams{0.5, 0.2, r, 0.4, 0.7}, 1.0); };
    const double r = 0.3, h = 1e-6;
    MomentDerivative d;
    d.mean = (family(r + h).mean - family(r - h).mean) / (2.0 * h);
    d.cov = (family(r + h).cov - family(r - h).cov) / (2.0 * h);
    const auto q = qfi_from_moments(family(r), d, purity(family(r)), 0.0);
    EXPECT_NEAR(qfi_via_fidelity(family, r, 1e-4) / q.total, 1.0, 1e-5);
}

TEST(BasisJumpSqueeze, Values) {
    EXPECT_EQ(basis_jump_squeeze(1.0, 1.0), 0.0);
    EXPECT_NEAR(basis_jump_squeeze(1.0, 2.0), std::atanh(1.0 / 3.0), 1e-15);
    EXPECT_NEAR(basis_jump_squeeze(1.0, 2.0), 0.34657359027997264, 1e-14);
    EXPECT_NEAR(basis_jump_squeeze(1.0, 1.0 + 1e-6) / 5e-7, 1.0, 1e-5);
    EXPECT_THROW(basis_jump_squeeze(0.0, 1.0), DomainError);
}

TEST(SchemeState, NoJumpEqualsPropagation) {
    const GaussianParams p{0.8, 0.4, 0.3, 1.0, 0.5};
    const BathParams bath{1.0, 0.1, 0.4};
    const auto a = scheme_state(p, 1.0, bath, 3.0);
    const auto b = propagate(state_from_params(p, 1.0), bath, 3.0);
    EXPECT_EQ(a.mean, b.mean);
    EXPECT_EQ(a.cov, b.cov);
}

TEST(SchemeState, VacuumAfterJumpStaysPure) {
    const auto s = scheme_state(GaussianParams{}, 1.0, BathParams{2.0, 0.0, 0.0}, 0.0);
    EXPECT_NEAR(s.det(), 0.25, 1e-15);
    EXPECT_NEAR(purity(s), 1.0, 1e-15);
}

TEST(QfiOmegaNumeric, UndampedCoherent) {
    const GaussianParams p{1.0, 0.0, 0.0, 0.0, 0.0};
    const double ref = 6.0 + kPi * kPi;  // 2 sin²τ + 4α²(sin²τ + τ sin 2τ + τ²) at τ = π/2
    EXPECT_NEAR(qfi_omega_numeric(p, 1.0, 0.0, 0.0, kPi / 2.0, {1e-4, true}).total, ref, 1e-8);
    EXPECT_NEAR(qfi_omega_undamped(p, kPi / 2.0, 1.0), ref, 1e-12);
}

TEST(QfiOmegaNumeric, UndampedThermal) {
    const GaussianParams p{0.0, 0.0, 0.0, 0.0, 1.0};
    EXPECT_NEAR(qfi_omega_numeric(p, 1.0, 0.0, 0.0, kPi / 2.0, {1e-4, true}).total, 4.56090602783640285, 1e-8);
}

TEST(QfiOmegaNumeric, DampedGroundState) {
    const double v = qfi_omega_numeric(GaussianParams{}, 1.0, 0.1, 5.0, 10.0, {1e-4, true}).total;
    EXPECT_LT(rel(v, qfi_omega_ground_state(0.1, 5.0, 10.0, 1.0)), 1e-6);
}

TEST(QfiOmegaNumeric, ScalesWithFrequency) {
    const GaussianParams p{0.6, 0.3, 0.2, 0.9, 0.4};
    const double w0 = 2.5;
    const double a = qfi_omega_numeric(p, w0, 0.05, 0.7, 3.0 / w0, {1e-4, true}).total * w0 * w0;
    const double b = qfi_omega_numeric(p, 1.0, 0.05, 0.7, 3.0, {1e-4, true}).total;
    EXPECT_LT(rel(a, b), 1e-8);
}

TEST(QfiOmegaNumeric, MatchesClosedFormOnRandomGrid) {
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 40; ++i) {
        const auto p = GaussianParams::make(2.0 * u(rng), 2.0 * kPi * u(rng), u(rng), 2.0 * kPi * u(rng), 3.0 * u(rng));
        const double g = 0.3 * u(rng), nbar = 3.0 * u(rng), tau = 20.0 * u(rng);
        const double num = qfi_omega_numeric(p, 1.0, g, nbar, tau, {1e-4, true}).total;
        const double closed = qfi_omega_damped_full(p, g, nbar, tau, 1.0).total;
        EXPECT_LT(rel(num, closed), 1e-6) << i;
    }
}

TEST(QfiOmegaNumeric, FixedModeDropsLogTerms) {
    // Fixed occupancies remove the ln-weight: thermal, undamped → 2C₁ sin²τ.
    const GaussianParams p{0.0, 0.0, 0.0, 0.0, 1.0};
    NumericOptions opt{1e-4, true, OccupancyMode::fixed};
    EXPECT_NEAR(qfi_omega_numeric(p, 1.0, 0.0, 0.0, kPi / 2.0, opt).total, 3.6, 1e-8);
}

TEST(QfiGammaNumeric, EquilibriumGivesZero) {
    const GaussianParams p{0.0, 0.0, 0.0, 0.0, 1.5};
    EXPECT_NEAR(qfi_gamma_numeric(p, BathParams{1.0, 0.1, 1.5}, 7.0).total, 0.0, 1e-12);
}

TEST(QfiGammaNumeric, DisplacedVacuum) {
    const GaussianParams p{1.0, 0.0, 0.0, 0.0, 0.0};
    const double v = qfi_gamma_numeric(p, BathParams{1.0, 0.1, 0.0}, 20.0, {1e-4, true}).total * 0.01;
    EXPECT_NEAR(v, 4.0 * std::exp(-2.0), 1e-9);
}

TEST(QfiGammaNumeric, MatchesClosedFormOnRandomGrid) {
    std::mt19937_64 rng(22);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 40; ++i) {
        const auto p = GaussianParams::make(2.0 * u(rng), 2.0 * kPi * u(rng), u(rng), 2.0 * kPi * u(rng), 3.0 * u(rng));
        const double g = 0.01 + 0.29 * u(rng), nbar = 3.0 * u(rng), tau = 0.1 + 20.0 * u(rng);
        const double num = qfi_gamma_numeric(p, BathParams{1.0, g, nbar}, tau, {1e-4, true}).total * g * g;
        const double closed = qfi_gamma_general(p, g, nbar, tau, 1.0);
        EXPECT_LT(rel(num, closed), 1e-6) << i;
    }
}

TEST(QfiNumeric, RejectsBadInput) {
    EXPECT_THROW(qfi_omega_numeric(GaussianParams{}, 0.0, 0.1, 0.0, 1.0), DomainError);
    EXPECT_THROW(qfi_omega_numeric(GaussianParams{}, 1.0, 0.1, 0.0, -1.0), DomainError);
    EXPECT_THROW(qfi_gamma_numeric(GaussianParams{}, BathParams{1.0, 0.0, 0.0}, 1.0), DomainError);
}
