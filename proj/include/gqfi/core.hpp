#pragma once

// Phase-space data model for single-mode Gaussian states.
//
// Units: ħ = 1 and M = 1 throughout. Quadratures q, p carry the oscillator
// frequency explicitly (σ_qq of the vacuum at ω is 1/(2ω)), so states built at
// one frequency can be evolved at another. Passing ω = 1 everywhere gives the
// dimensionless convention where the vacuum covariance is diag(1/2, 1/2).

#include <cmath>
#include <numbers>

#include <Eigen/Dense>

#include "gqfi/constants.hpp"
#include "gqfi/errors.hpp"

namespace gqfi {

using Vec2 = Eigen::Vector2d;
using Mat2 = Eigen::Matrix2d;

/// Heisenberg tolerance on det Σ − 1/4, relative.
inline constexpr double kHeisenbergTolerance = 1e-10;

/// Maps an angle onto (−π, π].
inline double normalize_angle(double angle) {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    double a = std::remainder(angle, two_pi);  // [−π, π]
    if (a <= -std::numbers::pi) a += two_pi;
    return a;
}

/// Five real parameters of ρ = R(ψ) D(α) S(r e^{iχ}) ν S† D† R†.
struct GaussianParams {
    double alpha = 0.0;  ///< displacement amplitude
    double psi = 0.0;    ///< rotation angle
    double r = 0.0;      ///< squeezing magnitude, ≥ 0
    double chi = 0.0;    ///< squeezing phase
    double n_th = 0.0;   ///< thermal photons of ν, ≥ 0

    /// Validating constructor; angles are normalized to (−π, π].
    static GaussianParams make(double alpha, double psi, double r, double chi, double n_th) {
        GaussianParams p{alpha, normalize_angle(psi), r, normalize_angle(chi), n_th};
        p.validate();
        return p;
    }

    void validate() const {
        if (!std::isfinite(alpha) || !std::isfinite(psi) || !std::isfinite(chi))
            throw DomainError("GaussianParams: non-finite parameter");
        if (!(r >= 0.0) || !std::isfinite(r))
            throw DomainError("GaussianParams: squeezing r must be finite and >= 0");
        if (!(n_th >= 0.0) || !std::isfinite(n_th))
            throw DomainError("GaussianParams: n_th must be finite and >= 0");
    }

    GaussianParams with_n_th(double n) const {
        GaussianParams q = *this;
        q.n_th = n;
        return q;
    }
};

/// First moments (⟨q⟩, ⟨p⟩) and symmetric covariance Σ.
struct PhaseSpaceState {
    Vec2 mean = Vec2::Zero();
    Mat2 cov = Mat2::Identity() * 0.5;

    double sigma_qq() const { return cov(0, 0); }
    double sigma_pp() const { return cov(1, 1); }
    double sigma_pq() const { return cov(0, 1); }
    double det() const { return cov.determinant(); }

    /// Symmetric, positive definite and above the Heisenberg bound.
    bool is_physical(double tol = kHeisenbergTolerance) const {
        if (!mean.allFinite() || !cov.allFinite()) return false;
        const double scale = std::max(std::abs(cov(0, 1)), std::max(std::abs(cov(0, 0)), std::abs(cov(1, 1))));
        if (std::abs(cov(0, 1) - cov(1, 0)) > 1e-12 * scale) return false;
        if (cov(0, 0) <= 0.0 || cov(1, 1) <= 0.0) return false;
        return det() >= 0.25 * (1.0 - tol);
    }

    void validate() const {
        if (!is_physical()) throw InvalidStateError("PhaseSpaceState violates the Heisenberg bound or is not positive definite");
    }
};

/// Elementwise parameter derivative of a PhaseSpaceState.
struct MomentDerivative {
    Vec2 mean = Vec2::Zero();
    Mat2 cov = Mat2::Zero();
};

/// Oscillator frequency, energy damping rate and bath occupancy.
struct BathParams {
    double omega = 1.0;
    double gamma = 0.0;
    double nbar = 0.0;

    double g() const { return gamma / omega; }

    void validate() const {
        if (!(omega > 0.0) || !std::isfinite(omega)) throw DomainError("BathParams: omega must be > 0");
        if (!(gamma >= 0.0) || !std::isfinite(gamma)) throw DomainError("BathParams: gamma must be >= 0");
        if (!(nbar >= 0.0) || !std::isfinite(nbar)) throw DomainError("BathParams: nbar must be >= 0");
    }
};

/// Gaussian QFI split into covariance, purity and displacement contributions.
struct QfiBreakdown {
    double total = 0.0;
    double term_cov = 0.0;
    double term_purity = 0.0;
    double term_disp = 0.0;

    static QfiBreakdown from_terms(double cov, double purity, double disp) {
        return {cov + purity + disp, cov, purity, disp};
    }

    QfiBreakdown scaled(double factor) const {
        return from_terms(term_cov * factor, term_purity * factor, term_disp * factor);
    }
};

/// Bose occupancy (e^x − 1)⁻¹ for the dimensionless inverse temperature x = ħω/k_BT.
inline double occupancy_from_ratio(double x) {
    if (!(x > 0.0)) throw DomainError("occupancy_from_ratio: x must be > 0");
    return 1.0 / std::expm1(x);
}

/// Inverse of occupancy_from_ratio: x = ln(1 + 1/n̄).
inline double ratio_from_occupancy(double nbar) {
    if (!(nbar > 0.0)) throw DomainError("ratio_from_occupancy: nbar must be > 0");
    return std::log1p(1.0 / nbar);
}

/// Mean thermal photon number for ω in rad/s and temperature in kelvin.
inline double thermal_occupancy(double omega, double temperature) {
    if (!(omega > 0.0) || !(temperature > 0.0))
        throw DomainError("thermal_occupancy: omega and temperature must be > 0");
    return occupancy_from_ratio(constants::hbar * omega / (constants::k_boltzmann * temperature));
}

/// Occupancy at frequency `scale`·ω_ref for a reservoir whose occupancy at ω_ref is `nbar_ref`
/// (same temperature). Zero stays zero.
inline double rescaled_occupancy(double nbar_ref, double scale) {
    if (nbar_ref < 0.0) throw DomainError("rescaled_occupancy: nbar must be >= 0");
    if (nbar_ref == 0.0) return 0.0;
    return occupancy_from_ratio(scale * ratio_from_occupancy(nbar_ref));
}

/// Moments of the Gaussian state with parameters `p`, expressed in the Fock basis of frequency omega0.
inline PhaseSpaceState state_from_params(const GaussianParams& p, double omega0) {
    p.validate();
    if (!(omega0 > 0.0)) throw DomainError("state_from_params: omega0 must be > 0");
    const double a1 = 1.0 + 2.0 * p.n_th;
    const double xi = p.chi + 2.0 * p.psi;
    const double c2r = std::cosh(2.0 * p.r);
    const double s2r = std::sinh(2.0 * p.r);

    PhaseSpaceState s;
    s.mean << p.alpha * std::sqrt(2.0 / omega0) * std::cos(p.psi),
              p.alpha * std::sqrt(2.0 * omega0) * std::sin(p.psi);
    const double sqq = a1 / (2.0 * omega0) * (c2r + std::cos(xi) * s2r);
    const double spp = a1 * omega0 / 2.0 * (c2r - std::cos(xi) * s2r);
    const double spq = a1 / 2.0 * std::sin(xi) * s2r;
    s.cov << sqq, spq, spq, spp;
    return s;
}

/// P = 1 / (2 √det Σ).
inline double purity(const PhaseSpaceState& s) {
    const double d = s.det();
    if (!(d > 0.0) || !std::isfinite(d)) throw InvalidStateError("purity: covariance determinant must be positive");
    return 0.5 / std::sqrt(d);
}

/// Uhlmann fidelity {tr[(√ρ₁ ρ₂ √ρ₁)^{1/2}]}² between two Gaussian states.
inline double fidelity(const PhaseSpaceState& s1, const PhaseSpaceState& s2) {
    const Mat2 sum = s1.cov + s2.cov;
    const double det_sum = sum.determinant();
    if (!(det_sum > 0.0) || !std::isfinite(det_sum)) throw NumericError("fidelity: singular covariance sum");
    const Vec2 d = s1.mean - s2.mean;
    const double exponent = -0.5 * d.dot(sum.inverse() * d);
    // (4 det Σ₁ − 1)(4 det Σ₂ − 1)/4, clipped at zero against rounding below the bound.
    const double delta = std::max(0.0, 4.0 * (s1.det() - 0.25) * (s2.det() - 0.25));
    const double denom = std::sqrt(det_sum + delta) - std::sqrt(delta);
    if (!(denom > 0.0)) throw NumericError("fidelity: non-positive normalization");
    const double log_f = exponent - std::log(denom);
    if (log_f < -700.0) return 0.0;
    return std::min(1.0, std::exp(log_f));
}

}  // namespace gqfi
