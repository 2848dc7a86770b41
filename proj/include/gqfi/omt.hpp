#pragma once

// Optimal measurement times: Lambert-W closed forms and a generic numeric
// maximizer (grid scan + golden section) for arbitrary QFI curves.

#include <cmath>
#include <cstddef>
#include <limits>
#include <utility>
#include <variant>

#include "gqfi/errors.hpp"

namespace gqfi {

/// Principal branch W₀ of w e^w = x on [−1/e, ∞).
inline double lambert_w0(double x) {
    constexpr double inv_e = 0.36787944117144233;
    if (std::isnan(x) || x < -inv_e - 1e-15) throw DomainError("lambert_w0: x must be >= -1/e");
    if (x == 0.0) return 0.0;
    if (std::isinf(x)) return x;
    if (x <= -inv_e) return -1.0;

    double w;
    if (x < -0.25) {
        // Series about the branch point in p = √(2(ex + 1)).
        const double p = std::sqrt(2.0 * (std::exp(1.0) * x + 1.0));
        w = -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
    } else if (x < 3.0) {
        w = std::log1p(x);
        if (x > 0.0) w *= 0.75;
    } else {
        const double l1 = std::log(x);
        const double l2 = std::log(l1);
        w = l1 - l2 + l2 / l1;
    }

    for (int i = 0; i < 50; ++i) {
        const double ew = std::exp(w);
        const double f = w * ew - x;
        const double wp1 = w + 1.0;
        if (wp1 == 0.0) break;
        const double step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
        w -= step;
        if (std::abs(step) <= 1e-15 * (1.0 + std::abs(w))) break;
    }
    return w;
}

/// Optimal time and the QFI there. For rescaled results i_max is the maximum of I/t.
struct OmtResult {
    double tau_max = 0.0;
    double i_max = 0.0;
    bool rescaled = false;
    bool at_boundary = false;  ///< numeric maximizer stopped at an end of its bracket
};

namespace detail {

inline void require_positive_g(double g, const char* what) {
    if (!(g > 0.0) || !std::isfinite(g)) throw DomainError(what);
}

}  // namespace detail

/// Coherent state, oscillations neglected: τ_max = [2 + W(−4n̄/(e²(1+2n̄)))]/g.
inline OmtResult omt_coherent(double g, double nbar, double alpha = 1.0, double omega = 1.0) {
    detail::require_positive_g(g, "omt_coherent: g must be > 0");
    if (!(nbar >= 0.0)) throw DomainError("omt_coherent: nbar must be >= 0");
    const double e2 = std::exp(2.0);
    const double a1 = 1.0 + 2.0 * nbar;
    const double w = lambert_w0(-4.0 * nbar / (e2 * a1));
    OmtResult res;
    res.tau_max = (2.0 + w) / g;
    // 1/n̄ prefactor eliminated through W e^W = z, so n̄ = 0 needs no limit.
    res.i_max = 2.0 * alpha * alpha / (g * g * omega * omega) * std::exp(-w) * 4.0 / (e2 * a1) * (2.0 + w);
    return res;
}

/// Time as a resource, max of I/t: τ_max = [1 + W(−2n̄/(e(1+2n̄)))]/g.
inline OmtResult omt_coherent_rescaled(double g, double nbar, double alpha = 1.0, double omega = 1.0) {
    detail::require_positive_g(g, "omt_coherent_rescaled: g must be > 0");
    if (!(nbar >= 0.0)) throw DomainError("omt_coherent_rescaled: nbar must be >= 0");
    const double e = std::exp(1.0);
    const double a1 = 1.0 + 2.0 * nbar;
    const double w = lambert_w0(-2.0 * nbar / (e * a1));
    OmtResult res;
    res.tau_max = (1.0 + w) / g;
    res.i_max = 2.0 * alpha * alpha / (g * omega) * std::exp(-w) * 2.0 / (e * a1);
    res.rescaled = true;
    return res;
}

/// Squeezed vacuum: (2 + W(−2/e²))/g ≈ 1.5936/g.
inline double omt_squeezed(double g) {
    detail::require_positive_g(g, "omt_squeezed: g must be > 0");
    return (2.0 + lambert_w0(-2.0 * std::exp(-2.0))) / g;
}

struct GammaThermalCase {
    double n_th = 0.0;  ///< initial occupancy; the closed form assumes n̄ = 0
};

struct GammaDisplacedCase {
    bool rescaled = false;
};

using GammaOmtCase = std::variant<GammaThermalCase, GammaDisplacedCase>;

/// Optimal times for damping estimation.
inline double omt_gamma(const GammaOmtCase& c, double g) {
    detail::require_positive_g(g, "omt_gamma: g must be > 0");
    if (const auto* th = std::get_if<GammaThermalCase>(&c)) {
        if (!(th->n_th >= 0.0)) throw DomainError("omt_gamma: n_th must be >= 0");
        return (2.0 + lambert_w0(2.0 * th->n_th * std::exp(-2.0))) / g;
    }
    return std::get<GammaDisplacedCase>(c).rescaled ? 1.0 / g : 2.0 / g;
}

/// Default numeric bracket (10⁻³/g, 20/g).
inline std::pair<double, double> omt_default_bracket(double g) {
    detail::require_positive_g(g, "omt_default_bracket: g must be > 0");
    return {1e-3 / g, 20.0 / g};
}

/// Maximizes curve(τ) (or curve(τ)/τ) on [lo, hi]: grid scan, then golden section on the best cell.
template <typename Curve>
OmtResult omt_numeric(Curve&& curve, double lo, double hi, bool rescaled = false, std::size_t grid = 2048) {
    if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("omt_numeric: need lo < hi");
    if (rescaled && !(lo > 0.0)) throw DomainError("omt_numeric: rescaled search needs lo > 0");
    if (grid < 3) throw DomainError("omt_numeric: grid must have at least 3 points");

    auto objective = [&](double tau) {
        const double v = curve(tau);
        if (!std::isfinite(v)) throw NumericError("omt_numeric: curve returned a non-finite value");
        return rescaled ? v / tau : v;
    };

    const double h = (hi - lo) / static_cast<double>(grid - 1);
    std::size_t best = 0;
    double best_val = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid; ++i) {
        const double tau = i + 1 == grid ? hi : lo + h * static_cast<double>(i);
        const double v = objective(tau);
        if (v > best_val) {
            best_val = v;
            best = i;
        }
    }

    OmtResult res;
    res.rescaled = rescaled;
    if (best == 0 || best + 1 == grid) {
        res.tau_max = best == 0 ? lo : hi;
        res.i_max = best_val;
        res.at_boundary = true;
        return res;
    }

    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo + h * static_cast<double>(best - 1);
    double b = lo + h * static_cast<double>(best + 1);
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = objective(c);
    double fd = objective(d);
    while (b - a > 1e-8 * std::max(1.0, std::abs(c))) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = objective(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = objective(d);
        }
    }
    const double tau = 0.5 * (a + b);
    const double v = objective(tau);
    if (v >= best_val) {
        res.tau_max = tau;
        res.i_max = v;
    } else {
        res.tau_max = lo + h * static_cast<double>(best);
        res.i_max = best_val;
    }
    return res;
}

}  // namespace gqfi
