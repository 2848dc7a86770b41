#pragma once

// Moment dynamics of the damped oscillator under the rotating-wave Lindblad
// master equation. Two independent routes: the closed-form solutions and the
// matrix-exponential propagators exp(Gt), exp(Kt).

#include <cmath>

#include <Eigen/Dense>

#include "gqfi/core.hpp"
#include "gqfi/linalg.hpp"

namespace gqfi {

using Vec3 = Eigen::Vector3d;
using Mat3 = Eigen::Matrix3d;

/// Drift matrices of d⟨X⟩/dt = G⟨X⟩ and dS/dt = K S + S_inh, with S = (ωσ_qq, σ_pp/ω, σ_pq).
struct MomentGenerators {
    Mat2 g_matrix;
    Mat3 k_matrix;
    Vec3 s_inh;
};

inline MomentGenerators moment_generators(const BathParams& bath) {
    bath.validate();
    const double w = bath.omega;
    const double y = bath.gamma;
    MomentGenerators m;
    m.g_matrix << -y / 2.0, 1.0,
                  -w * w,   -y / 2.0;
    m.k_matrix << -y,  0.0, 2.0 * w,
                  0.0, -y,  -2.0 * w,
                  -w,  w,   -y;
    m.s_inh = Vec3(1.0, 1.0, 0.0) * (y * (2.0 * bath.nbar + 1.0) / 2.0);
    return m;
}

/// Packs Σ into S = (ωσ_qq, σ_pp/ω, σ_pq).
inline Vec3 to_s_vector(const Mat2& cov, double omega) {
    return {omega * cov(0, 0), cov(1, 1) / omega, cov(0, 1)};
}

inline Mat2 from_s_vector(const Vec3& s, double omega) {
    Mat2 cov;
    cov << s(0) / omega, s(2), s(2), s(1) * omega;
    return cov;
}

/// Closed-form moments at time t ≥ 0.
inline PhaseSpaceState propagate(const PhaseSpaceState& s, const BathParams& bath, double t) {
    bath.validate();
    if (!(t >= 0.0)) throw DomainError("propagate: t must be >= 0");
    if (t == 0.0) return s;

    const double w = bath.omega;
    const double wt = w * t;
    const double c = std::cos(wt);
    const double sn = std::sin(wt);
    const double s2 = std::sin(2.0 * wt);
    const double c2 = std::cos(2.0 * wt);
    const double decay = std::exp(-bath.gamma * t);
    const double half_decay = std::exp(-bath.gamma * t / 2.0);
    const double relax = -std::expm1(-bath.gamma * t);  // 1 − e^{−γt}
    const double a1 = 1.0 + 2.0 * bath.nbar;

    const double q0 = s.mean(0), p0 = s.mean(1);
    const double sqq = s.cov(0, 0), spp = s.cov(1, 1), spq = s.cov(0, 1);

    PhaseSpaceState out;
    out.mean << half_decay * (c * q0 + sn / w * p0),
                half_decay * (c * p0 - w * sn * q0);
    const double nqq = a1 / (2.0 * w) * relax + decay * (c * c * sqq + sn * sn / (w * w) * spp + s2 / w * spq);
    const double npp = a1 * w / 2.0 * relax + decay * (c * c * spp + w * w * sn * sn * sqq - w * s2 * spq);
    const double npq = decay * (c2 * spq + sn * c / w * (spp - w * w * sqq));
    out.cov << nqq, npq, npq, npp;
    return out;
}

/// Matrix-exponential moments: exp(Gt)⟨X⟩₀ and exp(Kt)S₀ + K⁻¹(exp(Kt) − I)S_inh.
///
/// The inhomogeneous part is taken from the augmented exponential
/// exp([[K, S_inh], [0, 0]] t), which equals K⁻¹(exp(Kt) − I)S_inh for invertible K
/// and its series limit Σ t^{k+1}K^k/(k+1)! S_inh at γ = 0.
inline PhaseSpaceState propagate_numeric(const PhaseSpaceState& s, const BathParams& bath, double t) {
    if (!(t >= 0.0)) throw DomainError("propagate_numeric: t must be >= 0");
    const MomentGenerators gen = moment_generators(bath);

    PhaseSpaceState out;
    const Mat2 first = linalg::expm<double, 2>(gen.g_matrix * t);
    out.mean = first * s.mean;

    Eigen::Matrix4d augmented = Eigen::Matrix4d::Zero();
    augmented.topLeftCorner<3, 3>() = gen.k_matrix * t;
    augmented.topRightCorner<3, 1>() = gen.s_inh * t;
    const Eigen::Matrix4d prop = linalg::expm<double, 4>(augmented);
    const Vec3 s0 = to_s_vector(s.cov, bath.omega);
    const Vec3 st = prop.topLeftCorner<3, 3>() * s0 + prop.topRightCorner<3, 1>();
    out.cov = from_s_vector(st, bath.omega);
    return out;
}

/// Thermal equilibrium reached for γ > 0.
inline PhaseSpaceState steady_state(const BathParams& bath) {
    bath.validate();
    if (!(bath.gamma > 0.0)) throw NoSteadyStateError("steady_state: gamma must be > 0");
    const double a1 = 1.0 + 2.0 * bath.nbar;
    PhaseSpaceState out;
    out.mean.setZero();
    out.cov << a1 / (2.0 * bath.omega), 0.0, 0.0, a1 * bath.omega / 2.0;
    return out;
}

}  // namespace gqfi
