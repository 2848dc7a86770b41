#pragma once

// General Gaussian QFI from moments and their derivatives, the fidelity-curvature
// cross-check, and the frequency-jump scheme that makes the moment formula
// applicable to frequency estimation:
//
//   1. build the initial state in the Fock basis of ω₀,
//   2. jump ω₀ → ω at t = 0 (a squeezing of the ω basis),
//   3. evolve with the dynamics at ω,
//   4. evaluate the Gaussian QFI with respect to ω,
//   5. take ω → ω₀ (central differences around ω₀).

#include <cmath>
#include <utility>

#include "gqfi/core.hpp"
#include "gqfi/dynamics.hpp"

namespace gqfi {

/// Purity within this distance of 1 is treated as the pure-state boundary.
inline constexpr double kPureStateGap = 1e-9;
/// Below this |∂P| the purity term is taken as its physical limit 0 at the boundary.
inline constexpr double kPurityDerivativeFloor = 1e-12;

/// ½tr[(Σ⁻¹∂Σ)²]/(1+P²) + 2(∂P)²/(1−P⁴) + ∂⟨X⟩ᵀΣ⁻¹∂⟨X⟩.
inline QfiBreakdown qfi_from_moments(const PhaseSpaceState& s, const MomentDerivative& ds, double p, double dp) {
    if (!(p > 0.0) || p > 1.0 + kPureStateGap) throw InvalidStateError("qfi_from_moments: purity must lie in (0, 1]");
    const double det = s.det();
    if (!(det > 0.0)) throw InvalidStateError("qfi_from_moments: singular covariance");
    const Mat2 inv = s.cov.inverse();
    const Mat2 m = inv * ds.cov;
    const double p2 = p * p;

    const double term_cov = 0.5 * (m * m).trace() / (1.0 + p2);
    double term_purity = 0.0;
    if (std::abs(1.0 - p) > kPureStateGap) {
        term_purity = 2.0 * dp * dp / (1.0 - p2 * p2);
    } else if (std::abs(dp) >= kPurityDerivativeFloor) {
        throw PureStateBoundaryError("qfi_from_moments: purity term is singular at P = 1 with dP != 0");
    }
    const double term_disp = ds.mean.dot(inv * ds.mean);
    return QfiBreakdown::from_terms(term_cov, term_purity, term_disp);
}

/// −2[F(ρ_θ, ρ_{θ+ε}) − 2 + F(ρ_θ, ρ_{θ−ε})]/ε²; second-order accurate in ε.
template <typename Family>
double qfi_via_fidelity(Family&& family, double theta, double eps) {
    if (!(eps > 0.0)) throw DomainError("qfi_via_fidelity: eps must be > 0");
    const PhaseSpaceState center = family(theta);
    const PhaseSpaceState plus = family(theta + eps);
    const PhaseSpaceState minus = family(theta - eps);
    for (const auto* s : {&center, &plus, &minus}) s->validate();
    const double f_plus = fidelity(center, plus);
    const double f_minus = fidelity(center, minus);
    return -2.0 * ((f_plus - 1.0) + (f_minus - 1.0)) / (eps * eps);
}

/// Squeezing s = −artanh((ω₀−ω)/(ω₀+ω)) that maps the ω Fock basis onto the ω₀ basis.
inline double basis_jump_squeeze(double omega0, double omega) {
    if (!(omega0 > 0.0) || !(omega > 0.0)) throw DomainError("basis_jump_squeeze: frequencies must be > 0");
    return -std::atanh((omega0 - omega) / (omega0 + omega));
}

/// Initial moments in the ω₀ basis evolved with the dynamics at bath_at_omega.omega.
inline PhaseSpaceState scheme_state(const GaussianParams& p, double omega0, const BathParams& bath_at_omega, double t) {
    return propagate(state_from_params(p, omega0), bath_at_omega, t);
}

/// How thermal occupancies respond when ω is varied.
enum class OccupancyMode {
    temperature,  ///< temperatures are held fixed; n̄(ω) and N_th(ω) follow the Bose law
    fixed,        ///< n̄ and N_th are held fixed
};

struct NumericOptions {
    double step = 1e-5;  ///< relative finite-difference step
    bool richardson = false;
    OccupancyMode mode = OccupancyMode::temperature;
};

namespace detail {

template <typename Family>
std::pair<MomentDerivative, double> central_difference(Family& family, double theta, double h) {
    const PhaseSpaceState plus = family(theta + h);
    const PhaseSpaceState minus = family(theta - h);
    MomentDerivative d;
    d.mean = (plus.mean - minus.mean) / (2.0 * h);
    d.cov = (plus.cov - minus.cov) / (2.0 * h);
    const double dp = (purity(plus) - purity(minus)) / (2.0 * h);
    return {d, dp};
}

/// QFI of a one-parameter Gaussian family by finite differences of its moments.
template <typename Family>
QfiBreakdown numeric_qfi(Family&& family, double theta, double h, bool richardson) {
    const PhaseSpaceState center = family(theta);
    auto [d, dp] = central_difference(family, theta, h);
    if (richardson) {
        auto [d_half, dp_half] = central_difference(family, theta, h / 2.0);
        d.mean = (4.0 * d_half.mean - d.mean) / 3.0;
        d.cov = (4.0 * d_half.cov - d.cov) / 3.0;
        dp = (4.0 * dp_half - dp) / 3.0;
    }
    const double p = purity(center);
    // P ≤ 1 is maximal on the boundary, so its exact derivative vanishes there.
    if (1.0 - p < kPureStateGap) dp = 0.0;
    return qfi_from_moments(center, d, std::min(p, 1.0), dp);
}

}  // namespace detail

/// Frequency QFI at ω = ω₀ through the five-step scheme.
///
/// `nbar` is the bath occupancy at ω₀ and γ = g·ω₀ is held fixed while ω varies.
/// In temperature mode both n̄ and the initial N_th follow their reservoirs'
/// Bose laws, which produces the ln-terms of the closed forms.
inline QfiBreakdown qfi_omega_numeric(const GaussianParams& p, double omega0, double g, double nbar, double t,
                                      const NumericOptions& opt = {}) {
    p.validate();
    if (!(omega0 > 0.0)) throw DomainError("qfi_omega_numeric: omega0 must be > 0");
    if (!(g >= 0.0) || !(nbar >= 0.0)) throw DomainError("qfi_omega_numeric: g and nbar must be >= 0");
    if (!(t >= 0.0)) throw DomainError("qfi_omega_numeric: t must be >= 0");
    if (!(opt.step > 0.0)) throw DomainError("qfi_omega_numeric: step must be > 0");
    const double gamma = g * omega0;
    const bool follow = opt.mode == OccupancyMode::temperature;

    auto family = [&](double omega) {
        const double scale = omega / omega0;
        const double n_th = follow ? rescaled_occupancy(p.n_th, scale) : p.n_th;
        const double nb = follow ? rescaled_occupancy(nbar, scale) : nbar;
        return scheme_state(p.with_n_th(n_th), omega0, BathParams{omega, gamma, nb}, t);
    };
    return detail::numeric_qfi(family, omega0, opt.step * omega0, opt.richardson);
}

/// Damping-rate QFI at bath.gamma > 0. No basis jump: the Fock basis does not depend on γ.
inline QfiBreakdown qfi_gamma_numeric(const GaussianParams& p, const BathParams& bath, double t,
                                      const NumericOptions& opt = {}) {
    p.validate();
    bath.validate();
    if (!(bath.gamma > 0.0)) throw DomainError("qfi_gamma_numeric: gamma must be > 0");
    if (!(t >= 0.0)) throw DomainError("qfi_gamma_numeric: t must be >= 0");
    if (!(opt.step > 0.0)) throw DomainError("qfi_gamma_numeric: step must be > 0");
    const PhaseSpaceState initial = state_from_params(p, bath.omega);
    auto family = [&](double gamma) {
        return propagate(initial, BathParams{bath.omega, gamma, bath.nbar}, t);
    };
    return detail::numeric_qfi(family, bath.gamma, opt.step * bath.gamma, opt.richardson);
}

}  // namespace gqfi
