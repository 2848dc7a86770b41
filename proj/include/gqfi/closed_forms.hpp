#pragma once

// Closed-form QFIs for frequency (ω) and damping (γ) estimation.
//
// Every evaluator returns the QFI I itself; pass omega = 1 (gamma = 1) to get
// the dimensionless ω²I (γ²I). Time enters as τ = ωt and damping as g = γ/ω.
// Bath occupancy n̄ and initial occupancy N_th are independent inputs; in the
// ω-formulas both are taken to follow their reservoirs' temperature, which is
// where the logarithmic terms come from.

#include <cmath>

#include "gqfi/core.hpp"
#include "gqfi/errors.hpp"
#include "gqfi/qfi_engine.hpp"

namespace gqfi {

namespace detail {

/// n(1+n) ln²(1 + 1/n), continuous at n = 0 (value 0) and → 1 as n → ∞.
inline double thermal_log_weight(double n) {
    if (n == 0.0) return 0.0;
    const double l = std::log1p(1.0 / n);
    return n * (1.0 + n) * l * l;
}

/// 4n(1+n) ln(1 + 1/n), the product a₂a₃ (A₂A₃) with its n = 0 limit 0.
inline double thermal_a2a3(double n) {
    if (n == 0.0) return 0.0;
    return 4.0 * n * (1.0 + n) * std::log1p(1.0 / n);
}

inline void require_nonneg(double v, const char* what) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw DomainError(what);
}

inline void require_positive(double v, const char* what) {
    if (!(v > 0.0) || !std::isfinite(v)) throw DomainError(what);
}

}  // namespace detail

/// Abbreviations of the damped closed forms: bath side a₁…a_{2,τ}, initial-state side A₁…A₃.
struct DampedQfiAbbrevs {
    double a1 = 1.0;      ///< 1 + 2n̄
    double a2 = 0.0;      ///< 4n̄(1+n̄)
    double a3 = 0.0;      ///< ln(1 + 1/n̄); +inf at n̄ = 0
    double a1_tau = 0.0;  ///< (e^{gτ} − 1) a₁
    double a2_tau = 0.0;  ///< (e^{gτ} − 1) a₂
    double A1 = 1.0;      ///< 1 + 2N_th
    double A2 = 0.0;      ///< 4N_th(1+N_th)
    double A3 = 0.0;      ///< ln(1 + 1/N_th); +inf at N_th = 0
    double p_tau = 1.0;   ///< purity P(τ)
    double c_r = 1.0;     ///< cosh 2r
    double s_r = 0.0;     ///< sinh 2r
    double xi = 0.0;      ///< χ + 2ψ

    double expm1_gt = 0.0;  ///< e^{gτ} − 1
    double nbar = 0.0;
    double n_th = 0.0;

    /// A₁² + a_{1,τ}² + 2a_{1,τ}A₁ cosh 2r, so that P(τ) = e^{gτ}/√det_scale.
    double det_scale() const { return A1 * A1 + a1_tau * a1_tau + 2.0 * a1_tau * A1 * c_r; }

    /// a_{2,τ}a₃ with the n̄ = 0 limit 0.
    double a2_tau_a3() const { return expm1_gt * detail::thermal_a2a3(nbar); }

    /// A₂A₃ with the N_th = 0 limit 0.
    double A2_A3() const { return detail::thermal_a2a3(n_th); }

    /// 1 − P(τ)², from a sum of non-negative terms.
    double one_minus_p2() const {
        const double u = expm1_gt;
        // a₁A₁ cosh 2r − 1 = (a₁A₁ − 1) + 2a₁A₁ sinh²r keeps small r exact.
        const double shr = s_r / (2.0 * std::sqrt(0.5 * (c_r + 1.0)));  // sinh r
        const double gap = (A1 * A1 - 1.0) + u * u * (a1 * a1 - 1.0) +
                           2.0 * u * ((a1 * A1 - 1.0) + 2.0 * a1 * A1 * shr * shr);
        return gap / det_scale();
    }
};

inline DampedQfiAbbrevs damped_abbrevs(const GaussianParams& p, double g, double nbar, double tau) {
    p.validate();
    detail::require_nonneg(g, "damped_abbrevs: g must be >= 0");
    detail::require_nonneg(nbar, "damped_abbrevs: nbar must be >= 0");
    detail::require_nonneg(tau, "damped_abbrevs: tau must be >= 0");
    DampedQfiAbbrevs a;
    a.nbar = nbar;
    a.n_th = p.n_th;
    a.expm1_gt = std::expm1(g * tau);
    a.a1 = 1.0 + 2.0 * nbar;
    a.a2 = 4.0 * nbar * (1.0 + nbar);
    a.a3 = nbar > 0.0 ? std::log1p(1.0 / nbar) : INFINITY;
    a.a1_tau = a.expm1_gt * a.a1;
    a.a2_tau = a.expm1_gt * a.a2;
    a.A1 = 1.0 + 2.0 * p.n_th;
    a.A2 = 4.0 * p.n_th * (1.0 + p.n_th);
    a.A3 = p.n_th > 0.0 ? std::log1p(1.0 / p.n_th) : INFINITY;
    a.c_r = std::cosh(2.0 * p.r);
    a.s_r = std::sinh(2.0 * p.r);
    a.xi = p.chi + 2.0 * p.psi;
    a.p_tau = std::exp(g * tau) / std::sqrt(a.det_scale());
    return a;
}

// ---------------------------------------------------------------------------
// Frequency, no damping

/// Undamped frequency QFI of a general Gaussian state (C₁, C₂, C₃ form).
inline double qfi_omega_undamped(const GaussianParams& p, double tau, double omega) {
    p.validate();
    detail::require_nonneg(tau, "qfi_omega_undamped: tau must be >= 0");
    detail::require_positive(omega, "qfi_omega_undamped: omega must be > 0");
    const double n = p.n_th;
    const double a1 = 1.0 + 2.0 * n;
    const double c1 = a1 * a1 / (1.0 + 2.0 * n * (1.0 + n));
    const double c2 = 1.0 / (c1 * a1);
    const double c3 = detail::thermal_log_weight(n);
    const double cr = std::cosh(2.0 * p.r);
    const double sr = std::sinh(2.0 * p.r);
    const double al2 = p.alpha * p.alpha;
    const double ang = p.chi + 2.0 * p.psi - tau;
    const double sin_t = std::sin(tau);

    const double osc = sr * sr * std::cos(ang) * std::cos(ang) + 1.0 +
                       2.0 * c2 * al2 * (cr + std::cos(p.chi + 4.0 * p.psi - 2.0 * tau) * sr);
    const double cross = 4.0 * c2 * al2 * std::cos(2.0 * p.psi - tau) * cr +
                         std::cos(ang) * (4.0 * c2 * al2 * sr + std::sinh(4.0 * p.r));
    const double secular = 2.0 * c2 * al2 * (cr + std::cos(p.chi) * sr) + sr * sr;
    const double scaled = c3 + 2.0 * c1 * sin_t * sin_t * osc + 2.0 * c1 * tau * sin_t * cross +
                          2.0 * c1 * tau * tau * secular;
    return scaled / (omega * omega);
}

/// Pure-state frequency QFI from the variance of the local generator.
inline double qfi_omega_pure(double alpha, double psi, double r, double chi, double omega, double t) {
    detail::require_nonneg(t, "qfi_omega_pure: t must be >= 0");
    detail::require_positive(omega, "qfi_omega_pure: omega must be > 0");
    detail::require_nonneg(r, "qfi_omega_pure: r must be >= 0");
    const double wt = omega * t;
    const double cr = std::cosh(2.0 * r);
    const double sr = std::sinh(2.0 * r);
    const double al2 = alpha * alpha;
    const double ang = chi + 2.0 * psi - wt;
    const double s = std::sin(wt);

    const double line1 = 2.0 * t / omega * s *
                         (4.0 * al2 * std::cos(2.0 * psi - wt) * cr + std::cos(ang) * (4.0 * al2 * sr + std::sinh(4.0 * r)));
    const double line2 = 2.0 / (omega * omega) * s * s *
                         (sr * sr * std::cos(ang) * std::cos(ang) + 1.0 +
                          2.0 * al2 * (cr + std::cos(chi + 4.0 * psi - 2.0 * wt) * sr));
    const double line3 = 2.0 * t * t * (2.0 * al2 * (cr + std::cos(chi) * sr) + sr * sr);
    return line1 + line2 + line3;
}

/// Initial thermal state, no damping: (2C₁ sin²τ + C₃)/ω².
inline double qfi_omega_thermal(double n_th, double tau, double omega) {
    detail::require_nonneg(n_th, "qfi_omega_thermal: n_th must be >= 0");
    detail::require_nonneg(tau, "qfi_omega_thermal: tau must be >= 0");
    detail::require_positive(omega, "qfi_omega_thermal: omega must be > 0");
    const double a1 = 1.0 + 2.0 * n_th;
    const double c1 = a1 * a1 / (1.0 + 2.0 * n_th * (1.0 + n_th));
    const double s = std::sin(tau);
    return (2.0 * c1 * s * s + detail::thermal_log_weight(n_th)) / (omega * omega);
}

// ---------------------------------------------------------------------------
// Frequency, damped

/// QFI of the thermal equilibrium state reached for t ≫ 1/γ; independent of γ.
inline double qfi_omega_longterm(double nbar, double omega) {
    detail::require_nonneg(nbar, "qfi_omega_longterm: nbar must be >= 0");
    detail::require_positive(omega, "qfi_omega_longterm: omega must be > 0");
    const double nn = nbar * (1.0 + nbar);
    const double bracket = 2.0 * detail::thermal_log_weight(nbar) + (1.0 + 4.0 * nn) / (1.0 + 2.0 * nn);
    return bracket / (2.0 * omega * omega);
}

/// Damped frequency QFI of a general Gaussian state, split into the three Gaussian terms.
inline QfiBreakdown qfi_omega_damped_full(const GaussianParams& p, double g, double nbar, double tau, double omega) {
    detail::require_positive(omega, "qfi_omega_damped_full: omega must be > 0");
    const DampedQfiAbbrevs ab = damped_abbrevs(p, g, nbar, tau);
    const double A1 = ab.A1;
    const double a1 = ab.a1;
    const double a1t = ab.a1_tau;
    const double A23 = ab.A2_A3();
    const double a23t = ab.a2_tau_a3();
    const double cr = ab.c_r;
    const double sr = ab.s_r;
    const double sr2 = sr * sr;
    const double xi = ab.xi;
    const double t = tau;
    const double B = ab.det_scale();
    const double P = ab.p_tau;
    const double P2 = P * P;
    const double w2 = omega * omega;

    const double st = std::sin(t), ct = std::cos(t);
    const double c2t = std::cos(2.0 * t);
    const double sx = std::sin(xi), cx = std::cos(xi), c2x = std::cos(2.0 * xi);
    const double s2tx = std::sin(2.0 * t - xi), c2tx = std::cos(2.0 * t - xi);
    const double c4t2x = std::cos(4.0 * t - 2.0 * xi);
    const double stx = std::sin(t - xi), ctx = std::cos(t - xi);

    // Bracket of I₁ grouped by powers of a_{1,τ}.
    double br = 8.0 * A1 * A1 * B * sr2 * t * t;
    br += 8.0 * A1 * B * (A1 * sx * cr + (a1t + A1 * cr) * s2tx) * sr * t;
    br += A1 * A1 / 2.0 *
          (4.0 * A1 * A1 * (sr2 + 2.0) + A23 * A23 + 2.0 * A23 * a23t * cr + a23t * a23t * (2.0 * sr2 + 1.0) -
           2.0 * A1 * (4.0 * A1 * c2t + A1 * (c2x + c4t2x - 4.0 * sx * s2tx) * sr2 - 4.0 * a23t * st * stx * sr));
    br += A1 * a1t *
          (2.0 * A1 * (4.0 * A1 * cr * st * st * (3.0 + 2.0 * ctx * ctx * sr2) + sr * c2tx * (A23 - 2.0 * a23t * cr) -
                       2.0 * A23 * sr * cx) +
           A23 * A23 * cr + 2.0 * A23 * a23t + a23t * a23t * cr);
    br += a1t * a1t / 2.0 *
          (4.0 * A1 * A1 * (7.0 + 6.0 * sr2) + a23t * a23t + A23 * (2.0 * a23t * cr + A23 * (1.0 + 2.0 * sr2)) +
           2.0 * A1 *
               (A1 * sr2 * (2.0 * (std::cos(2.0 * t - 2.0 * xi) - 5.0 * c2t) - c4t2x + c2x) - 12.0 * A1 * c2t -
                8.0 * A23 * cr * sr * st * stx - 4.0 * a23t * sr * ct * ctx));
    br += a1t * a1t * a1t * (2.0 * A23 * sr * c2tx - 4.0 * A1 * cr * (c2t - 2.0));
    br += 2.0 * a1t * a1t * a1t * a1t;
    // P⁴ e^{−4gτ} = 1/B².
    const double term_cov = br / (2.0 * w2 * (1.0 + P2) * B * B);

    const double pur = A1 * A23 + a1t * a23t + (A1 * a23t + a1t * A23) * cr - 2.0 * a1t * A1 * cx * sr;
    double term_purity = 0.0;
    const double gap2 = ab.one_minus_p2();
    if (gap2 > 2.0 * kPureStateGap) {
        term_purity = P2 * pur * pur / (2.0 * w2 * B * B * gap2 * (1.0 + P2));
    } else if (P * std::abs(pur) / (2.0 * omega * B) >= kPurityDerivativeFloor) {
        throw PureStateBoundaryError("qfi_omega_damped_full: purity term singular at P = 1");
    }

    const double al2 = p.alpha * p.alpha;
    const double disp = (a1t + A1 * (cr + std::cos(p.chi) * sr)) * t * t +
                        (std::cos(t - 2.0 * p.psi) * (a1t + A1 * cr) + A1 * ctx * sr) * 2.0 * t * st +
                        (a1t + A1 * (cr + std::cos(2.0 * t - xi - 2.0 * p.psi) * sr)) * st * st;
    const double term_disp = 4.0 * al2 * disp / (w2 * B);
    (void)a1;
    return QfiBreakdown::from_terms(term_cov, term_purity, term_disp);
}

/// Damped frequency QFI of the initial ground state. Global supremum ≈ 2.135/ω².
inline double qfi_omega_ground_state(double g, double nbar, double tau, double omega) {
    detail::require_nonneg(g, "qfi_omega_ground_state: g must be >= 0");
    detail::require_nonneg(nbar, "qfi_omega_ground_state: nbar must be >= 0");
    detail::require_nonneg(tau, "qfi_omega_ground_state: tau must be >= 0");
    detail::require_positive(omega, "qfi_omega_ground_state: omega must be > 0");
    // Rearranged in u = e^{gτ} − 1 so that no term cancels for small g or large n̄.
    const double u = std::expm1(g * tau);
    const double a1 = 1.0 + 2.0 * nbar;
    const double b = 1.0 + u * a1;  // e^{gτ}(1+2n̄) − 2n̄
    const double s = std::sin(tau);
    const double num = u * u * a1 * a1 + 4.0 * b * s * s;
    const double den = 1.0 + 2.0 * u * (1.0 + nbar) + u * u * (1.0 + 2.0 * nbar + 2.0 * nbar * nbar);
    double scaled = num / (2.0 * den);
    if (nbar > 0.0) {
        const double l = std::log1p(1.0 / nbar);
        scaled += u * nbar * (1.0 + nbar) * (1.0 + nbar) * l * l / (1.0 + u * (1.0 + nbar));
    }
    return scaled / (omega * omega);
}

/// Displacement contribution I_α(τ) of an initial coherent state (α real).
inline double qfi_omega_coherent_term(double alpha, double g, double nbar, double tau, double omega) {
    detail::require_nonneg(g, "qfi_omega_coherent_term: g must be >= 0");
    detail::require_nonneg(nbar, "qfi_omega_coherent_term: nbar must be >= 0");
    detail::require_nonneg(tau, "qfi_omega_coherent_term: tau must be >= 0");
    detail::require_positive(omega, "qfi_omega_coherent_term: omega must be > 0");
    const double s = std::sin(tau);
    const double den = 1.0 + std::expm1(g * tau) * (1.0 + 2.0 * nbar);  // (2n̄+1)e^{gτ} − 2n̄
    return 4.0 * alpha * alpha / (omega * omega) * (s * s + tau * std::sin(2.0 * tau) + tau * tau) / den;
}

/// Full coherent-state QFI: ground-state part plus I_α.
inline double qfi_omega_coherent(double alpha, double g, double nbar, double tau, double omega) {
    return qfi_omega_ground_state(g, nbar, tau, omega) + qfi_omega_coherent_term(alpha, g, nbar, tau, omega);
}

enum class SqueezedMode {
    exact_zero_temperature,  ///< exact expression, requires n̄ = 0
    approximate,             ///< r ≫ 1, n̄ ≪ 1 approximation
};

/// Frequency QFI of an initial squeezed vacuum S(r)|0⟩.
inline double qfi_omega_squeezed(double r, double g, double nbar, double tau, double omega, SqueezedMode mode) {
    detail::require_nonneg(r, "qfi_omega_squeezed: r must be >= 0");
    detail::require_nonneg(g, "qfi_omega_squeezed: g must be >= 0");
    detail::require_nonneg(nbar, "qfi_omega_squeezed: nbar must be >= 0");
    detail::require_nonneg(tau, "qfi_omega_squeezed: tau must be >= 0");
    detail::require_positive(omega, "qfi_omega_squeezed: omega must be > 0");
    const double w2 = omega * omega;

    if (mode == SqueezedMode::approximate) {
        if (tau == 0.0) return 0.0;
        if (g == 0.0) throw DomainError("qfi_omega_squeezed: the approximation diverges at g = 0");
        const double lead = 2.0 * tau + std::sin(2.0 * tau);
        return std::exp(2.0 * r) * lead * lead / (4.0 * w2 * std::expm1(g * tau) * (1.0 + 2.0 * nbar));
    }

    if (nbar != 0.0) throw UnsupportedRegimeError("qfi_omega_squeezed: exact form only holds at nbar = 0");
    // At r = 0 the state stays pure at ω₀ and the QFI jumps: the expression below is the
    // r → 0⁺ limit, which exceeds the vacuum value by e^{−gτ}(1 − e^{−gτ})/ω².
    if (r == 0.0) return qfi_omega_ground_state(g, 0.0, tau, omega);
    const double e = std::exp(g * tau);
    const double u = std::expm1(g * tau);
    const double shr = std::sinh(r), chr = std::cosh(r);
    const double c2r = std::cosh(2.0 * r), s2r = std::sinh(2.0 * r);
    const double num = 16.0 * tau * s2r * std::sin(2.0 * tau) * (u + c2r) -
                       4.0 * u * c2r * (2.0 * std::cos(2.0 * tau) - 3.0) + 4.0 * e * u +
                       (8.0 * tau * tau + 1.0) * std::cosh(4.0 * r) -
                       8.0 * shr * shr * chr * chr * std::cos(4.0 * tau) - 8.0 * tau * tau -
                       8.0 * std::cos(2.0 * tau) + 7.0;
    // e^{2gτ} − cosh 2r + 1 = e^{2gτ} − 2 sinh²r.
    const double den = 8.0 * w2 * (2.0 * e * shr * shr + e * e - 2.0 * shr * shr);
    return num / den;
}

// ---------------------------------------------------------------------------
// Damping rate

/// γ-QFI of a general Gaussian state split into the three Gaussian terms. Independent of ψ.
inline QfiBreakdown qfi_gamma_general_terms(const GaussianParams& p, double g, double nbar, double tau, double gamma) {
    detail::require_positive(gamma, "qfi_gamma_general: gamma must be > 0");
    const DampedQfiAbbrevs ab = damped_abbrevs(p, g, nbar, tau);
    const double A1 = ab.A1, a1 = ab.a1, a1t = ab.a1_tau;
    const double cr = ab.c_r, sr = ab.s_r;
    const double B = ab.det_scale();
    const double P = ab.p_tau;
    const double P2 = P * P;
    const double pre = g * g * tau * tau / (gamma * gamma);

    const double disp = p.alpha * p.alpha * (A1 * (cr - std::cos(p.chi) * sr) + a1t) / B;

    // Brackets regrouped around their r = 0 factorizations so N_th ≈ n̄ and r ≈ 0 do not cancel.
    const double shr = std::sinh(p.r);
    const double sh2r = std::sinh(2.0 * p.r);
    const double pur = (A1 - a1) * (A1 + a1t) + 2.0 * A1 * (a1t - a1) * shr * shr;
    double purity = 0.0;
    const double gap2 = ab.one_minus_p2();
    if (gap2 > 2.0 * kPureStateGap) {
        purity = 2.0 * P2 * pur * pur / (B * B * gap2 * (1.0 + P2));
    } else if (P * std::abs(pur) * std::sqrt(pre) / B >= kPurityDerivativeFloor) {
        throw PureStateBoundaryError("qfi_gamma_general: purity term singular at P = 1");
    }

    const double diff = (A1 - a1) * (A1 + a1t);
    const double cov = (diff * diff + 2.0 * A1 * A1 * (a1 * a1 + a1t * a1t) * sh2r * sh2r +
                        4.0 * A1 * (a1t - a1) * (A1 * A1 - a1 * a1t) * shr * shr) /
                       (B * B * (1.0 + P2));
    return QfiBreakdown::from_terms(pre * cov, pre * purity, pre * disp);
}

inline double qfi_gamma_general(const GaussianParams& p, double g, double nbar, double tau, double gamma) {
    return qfi_gamma_general_terms(p, g, nbar, tau, gamma).total;
}

/// Initial thermal state ν with N_th photons relaxing towards n̄.
inline double qfi_gamma_thermal(double n_th, double g, double nbar, double tau, double gamma) {
    detail::require_nonneg(n_th, "qfi_gamma_thermal: n_th must be >= 0");
    detail::require_nonneg(g, "qfi_gamma_thermal: g must be >= 0");
    detail::require_nonneg(nbar, "qfi_gamma_thermal: nbar must be >= 0");
    detail::require_nonneg(tau, "qfi_gamma_thermal: tau must be >= 0");
    detail::require_positive(gamma, "qfi_gamma_thermal: gamma must be > 0");
    const double dn = nbar - n_th;
    if (tau == 0.0 || dn == 0.0) return 0.0;
    const double u = std::expm1(g * tau);
    const double d1 = u * nbar + n_th;
    const double d2 = 1.0 + u * (1.0 + nbar) + n_th;  // e^{gτ}(1+n̄) + N_th − n̄
    return dn * dn * g * g * tau * tau / (gamma * gamma * d1 * d2);
}

/// Displaced thermal state D(α)ν.
inline double qfi_gamma_displaced_thermal(double alpha, double n_th, double g, double nbar, double tau, double gamma) {
    const double thermal = qfi_gamma_thermal(n_th, g, nbar, tau, gamma);
    const double den = 1.0 + 2.0 * n_th + std::expm1(g * tau) * (1.0 + 2.0 * nbar);  // 2N_th − 2n̄ + e^{gτ}(1+2n̄)
    return thermal + alpha * alpha * g * g * tau * tau / (gamma * gamma * den);
}

/// Displaced thermal state at N_th = n̄: only the relaxation of ⟨X⟩ carries information.
inline double qfi_gamma_displaced_equilibrium(double alpha, double g, double nbar, double tau, double gamma) {
    detail::require_nonneg(g, "qfi_gamma_displaced_equilibrium: g must be >= 0");
    detail::require_nonneg(nbar, "qfi_gamma_displaced_equilibrium: nbar must be >= 0");
    detail::require_nonneg(tau, "qfi_gamma_displaced_equilibrium: tau must be >= 0");
    detail::require_positive(gamma, "qfi_gamma_displaced_equilibrium: gamma must be > 0");
    return alpha * alpha * g * g * tau * tau / (gamma * gamma * std::exp(g * tau) * (1.0 + 2.0 * nbar));
}

/// Squeezed vacuum, zero-temperature bath only.
inline double qfi_gamma_squeezed(double r, double g, double nbar, double tau, double gamma) {
    detail::require_nonneg(r, "qfi_gamma_squeezed: r must be >= 0");
    detail::require_nonneg(g, "qfi_gamma_squeezed: g must be >= 0");
    detail::require_nonneg(tau, "qfi_gamma_squeezed: tau must be >= 0");
    detail::require_positive(gamma, "qfi_gamma_squeezed: gamma must be > 0");
    if (nbar != 0.0) throw UnsupportedRegimeError("qfi_gamma_squeezed: closed form only holds at nbar = 0");
    if (tau == 0.0 || r == 0.0 || g == 0.0) return 0.0;
    const double u = std::expm1(g * tau);
    const double e = 1.0 + u;
    const double sh2 = std::sinh(r) * std::sinh(r);
    return (e * e - 2.0 * u) * g * g * tau * tau * sh2 / (gamma * gamma * u * (2.0 * u * sh2 + e * e));
}

/// Squeezing phase maximizing the displacement-driven ω-QFI at long times.
inline constexpr double kOptimalChiOmega = 0.0;
/// Squeezing phase maximizing the γ-QFI.
inline constexpr double kOptimalChiGamma = constants::pi;

}  // namespace gqfi
