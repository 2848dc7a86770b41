#pragma once

// Brute-force oracle in a truncated Fock space: Gaussian states as density
// matrices built from operator exponentials, Lindblad evolution, Uhlmann
// fidelity, SLD quantum Fisher information and the change-of-basis overlaps.
//
// Conventions match core.hpp: S(z) = exp[½(z a†² − z* a²)], so S†aS =
// a cosh r + e^{iχ} a† sinh r, D(α) = exp(α a† − α* a), R(ψ) = exp(iψ a†a).

#include <algorithm>
#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "gqfi/core.hpp"
#include "gqfi/errors.hpp"
#include "gqfi/qfi_engine.hpp"

namespace gqfi {

using Complex = std::complex<double>;
using CMat = Eigen::MatrixXcd;

/// Population allowed above the truncation.
inline constexpr double kFockTailTolerance = 1e-10;
/// Largest dimension reached by automatic escalation.
inline constexpr int kFockMaxDim = 320;

struct FockDensityMatrix {
    CMat data;

    int dim() const { return static_cast<int>(data.rows()); }
    double trace() const { return data.trace().real(); }

    void validate(double trace_tol = 1e-8) const {
        if (data.rows() != data.cols() || data.rows() == 0) throw InvalidStateError("FockDensityMatrix: not square");
        const double scale = std::max(1.0, data.cwiseAbs().maxCoeff());
        if ((data - data.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale)
            throw InvalidStateError("FockDensityMatrix: not Hermitian");
        if (std::abs(trace() - 1.0) > trace_tol) throw InvalidStateError("FockDensityMatrix: trace differs from 1");
        const Eigen::SelfAdjointEigenSolver<CMat> es(data, Eigen::EigenvaluesOnly);
        if (es.eigenvalues().minCoeff() < -1e-10) throw InvalidStateError("FockDensityMatrix: negative eigenvalue");
    }
};

inline CMat annihilation(int dim) {
    CMat a = CMat::Zero(dim, dim);
    for (int n = 1; n < dim; ++n) a(n - 1, n) = std::sqrt(static_cast<double>(n));
    return a;
}

namespace detail {

/// exp(A) for anti-Hermitian A through the spectrum of the Hermitian iA.
inline CMat expm_antihermitian(const CMat& a) {
    const CMat h = Complex(0.0, 1.0) * a;
    const Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (h + h.adjoint()));
    const Eigen::VectorXcd phases = (es.eigenvalues().cast<Complex>() * Complex(0.0, -1.0)).array().exp();
    return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

inline int working_dim(int dim) { return dim + std::max(40, dim / 2); }

}  // namespace detail

/// ⟨m|S(z)|n⟩ for m, n < dim, z = r e^{iχ}; computed in a padded space and cropped.
inline CMat squeeze_matrix(Complex z, int dim) {
    const int w = detail::working_dim(dim);
    const CMat a = annihilation(w);
    const CMat ad = a.adjoint();
    const CMat gen = 0.5 * (z * ad * ad - std::conj(z) * a * a);
    return detail::expm_antihermitian(gen).topLeftCorner(dim, dim);
}

/// ⟨m|D(α)|n⟩ for m, n < dim.
inline CMat displacement_matrix(Complex alpha, int dim) {
    const int w = detail::working_dim(dim);
    const CMat a = annihilation(w);
    const CMat gen = alpha * a.adjoint() - std::conj(alpha) * a;
    return detail::expm_antihermitian(gen).topLeftCorner(dim, dim);
}

/// R D S ν S† D† R† at truncation dim. Throws TruncationError if more than 1e-10 population lies above dim.
inline FockDensityMatrix build_gaussian_fock(const GaussianParams& p, int dim) {
    p.validate();
    if (dim < 2) throw DomainError("build_gaussian_fock: dim must be >= 2");
    const int w = detail::working_dim(dim);
    const CMat a = annihilation(w);
    const CMat ad = a.adjoint();
    const Complex z = std::polar(p.r, p.chi);
    const CMat s = detail::expm_antihermitian(0.5 * (z * ad * ad - std::conj(z) * a * a));
    const CMat d = detail::expm_antihermitian(Complex(p.alpha, 0.0) * (ad - a));
    Eigen::VectorXcd rot(w);
    Eigen::VectorXd nu(w);
    const double n = p.n_th;
    for (int k = 0; k < w; ++k) {
        rot(k) = std::polar(1.0, p.psi * k);
        // N^k/(1+N)^{k+1}, written to stay exact at N = 0.
        nu(k) = k == 0 ? 1.0 / (1.0 + n) : std::exp(k * std::log(n / (1.0 + n))) / (1.0 + n);
    }
    const CMat u = rot.asDiagonal() * (d * s);
    const CMat rho = u * nu.cast<Complex>().asDiagonal() * u.adjoint();

    double tail = 0.0;
    for (int k = dim; k < w; ++k) tail += rho(k, k).real();
    tail += std::max(0.0, 1.0 - rho.trace().real());
    if (tail > kFockTailTolerance)
        throw TruncationError("build_gaussian_fock: population above the truncation exceeds 1e-10", std::min(2 * dim, kFockMaxDim));

    FockDensityMatrix out;
    out.data = rho.topLeftCorner(dim, dim);
    out.data = 0.5 * (out.data + out.data.adjoint()).eval();
    return out;
}

/// Chooses the smallest dim in start, 2·start, … (capped at 320) that passes the tail check.
inline FockDensityMatrix build_gaussian_fock_auto(const GaussianParams& p, int start_dim = 60) {
    int dim = start_dim;
    for (;;) {
        try {
            return build_gaussian_fock(p, dim);
        } catch (const TruncationError& e) {
            if (dim >= kFockMaxDim) throw;
            dim = std::min(2 * dim, kFockMaxDim);
        }
    }
}

/// Smallest dimension the automatic builder accepts for these parameters.
inline int required_fock_dim(const GaussianParams& p, int start_dim = 60) {
    return build_gaussian_fock_auto(p, start_dim).dim();
}

namespace detail {

/// Dissipator γ(n̄+1)D[a]ρ + γn̄ D[a†]ρ with the truncated a, elementwise.
struct Dissipator {
    int dim;
    double down;  // γ(n̄+1)
    double up;    // γn̄
    std::vector<double> sq;  // √k
    std::vector<double> aad;  // (a a†)_kk of the truncated a

    Dissipator(int n, double gamma, double nbar) : dim(n), down(gamma * (nbar + 1.0)), up(gamma * nbar), sq(n + 1), aad(n) {
        for (int k = 0; k <= n; ++k) sq[k] = std::sqrt(static_cast<double>(k));
        for (int k = 0; k < n; ++k) aad[k] = k + 1 < n ? k + 1.0 : 0.0;
    }

    void apply(const CMat& rho, CMat& out) const {
        for (int n = 0; n < dim; ++n) {
            for (int m = 0; m < dim; ++m) {
                Complex v = -0.5 * (down * (m + n) + up * (aad[m] + aad[n])) * rho(m, n);
                if (m + 1 < dim && n + 1 < dim) v += down * sq[m + 1] * sq[n + 1] * rho(m + 1, n + 1);
                if (m > 0 && n > 0) v += up * sq[m] * sq[n] * rho(m - 1, n - 1);
                out(m, n) = v;
            }
        }
    }
};

}  // namespace detail

/// Step that satisfies the RK4 stability bound with a factor-2 margin.
inline double default_lindblad_step(const BathParams& bath, int dim) {
    return 0.05 / std::max(bath.omega, bath.gamma * (bath.nbar + 1.0) * dim);
}

/// Solves dρ/dt = −i[ωa†a, ρ] + γ(n̄+1)D[a]ρ + γn̄D[a†]ρ up to time t.
///
/// The dissipator is integrated with fixed-step RK4 in the interaction picture;
/// the free rotation, which commutes with it, is applied exactly.
inline FockDensityMatrix lindblad_evolve(const FockDensityMatrix& rho, const BathParams& bath, double t, double dt) {
    bath.validate();
    if (!(t >= 0.0)) throw DomainError("lindblad_evolve: t must be >= 0");
    const int dim = rho.dim();
    if (!(dt > 0.0) || !(dt * std::max(bath.omega, bath.gamma * (bath.nbar + 1.0) * dim) < 0.1))
        throw StepSizeError("lindblad_evolve: dt violates dt*max(omega, gamma*(nbar+1)*dim) < 0.1");

    CMat x = rho.data;
    if (bath.gamma > 0.0 && t > 0.0) {
        const detail::Dissipator diss(dim, bath.gamma, bath.nbar);
        const long steps = static_cast<long>(std::ceil(t / dt));
        const double h = t / static_cast<double>(steps);
        CMat k1(dim, dim), k2(dim, dim), k3(dim, dim), k4(dim, dim), tmp(dim, dim);
        for (long s = 0; s < steps; ++s) {
            diss.apply(x, k1);
            tmp = x + 0.5 * h * k1;
            diss.apply(tmp, k2);
            tmp = x + 0.5 * h * k2;
            diss.apply(tmp, k3);
            tmp = x + h * k3;
            diss.apply(tmp, k4);
            x += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        }
    }
    for (int n = 0; n < dim; ++n)
        for (int m = 0; m < dim; ++m) x(m, n) *= std::polar(1.0, -bath.omega * (m - n) * t);

    FockDensityMatrix out;
    out.data = 0.5 * (x + x.adjoint());
    return out;
}

inline FockDensityMatrix lindblad_evolve(const FockDensityMatrix& rho, const BathParams& bath, double t) {
    return lindblad_evolve(rho, bath, t, default_lindblad_step(bath, rho.dim()));
}

/// Quadrature moments with q = (a + a†)/√(2ω), p = i√(ω/2)(a† − a).
inline PhaseSpaceState fock_moments(const FockDensityMatrix& rho, double omega) {
    if (!(omega > 0.0)) throw DomainError("fock_moments: omega must be > 0");
    const CMat a = annihilation(rho.dim());
    const CMat q = (a + a.adjoint()) / std::sqrt(2.0 * omega);
    const CMat p = Complex(0.0, 1.0) * std::sqrt(omega / 2.0) * (a.adjoint() - a);
    auto expect = [&](const CMat& op) { return (rho.data * op).trace().real(); };
    PhaseSpaceState s;
    const double mq = expect(q), mp = expect(p);
    s.mean << mq, mp;
    // Squares from the truncated a miss only the last level's coupling upward.
    const double sqq = expect(q * q) - mq * mq;
    const double spp = expect(p * p) - mp * mp;
    const double spq = 0.5 * expect(q * p + p * q) - mq * mp;
    s.cov << sqq, spq, spq, spp;
    return s;
}

namespace detail {

inline Eigen::SelfAdjointEigenSolver<CMat> checked_spectrum(const FockDensityMatrix& rho, const char* what) {
    Eigen::SelfAdjointEigenSolver<CMat> es(0.5 * (rho.data + rho.data.adjoint()));
    if (es.info() != Eigen::Success) throw NumericError(what);
    if (es.eigenvalues().minCoeff() < -1e-8) throw InvalidStateError(what);
    return es;
}

}  // namespace detail

/// {tr[(√ρ₁ ρ₂ √ρ₁)^{1/2}]}².
inline double fidelity_fock(const FockDensityMatrix& r1, const FockDensityMatrix& r2) {
    if (r1.dim() != r2.dim()) throw DomainError("fidelity_fock: dimension mismatch");
    const auto es = detail::checked_spectrum(r1, "fidelity_fock: first state has negative eigenvalues");
    const Eigen::VectorXd root = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const CMat sqrt1 = es.eigenvectors() * root.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
    const CMat m = sqrt1 * r2.data * sqrt1;
    const Eigen::SelfAdjointEigenSolver<CMat> inner(0.5 * (m + m.adjoint()), Eigen::EigenvaluesOnly);
    const double tr = inner.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
    return std::min(1.0, tr * tr);
}

/// 2 Σ |⟨i|∂ρ|j⟩|²/(λᵢ+λⱼ) over pairs with λᵢ+λⱼ > 1e-12·λ_max.
inline double qfi_sld(const FockDensityMatrix& rho, const CMat& drho) {
    if (drho.rows() != rho.dim() || drho.cols() != rho.dim()) throw DomainError("qfi_sld: dimension mismatch");
    const double scale = std::max(1.0, drho.cwiseAbs().maxCoeff());
    if ((drho - drho.adjoint()).cwiseAbs().maxCoeff() > 1e-8 * scale) throw DomainError("qfi_sld: drho is not Hermitian");
    const auto es = detail::checked_spectrum(rho, "qfi_sld: state has negative eigenvalues");
    const Eigen::VectorXd& lam = es.eigenvalues();
    const double cutoff = 1e-12 * lam.maxCoeff();
    const CMat d = es.eigenvectors().adjoint() * drho * es.eigenvectors();
    double sum = 0.0;
    for (int j = 0; j < rho.dim(); ++j) {
        for (int i = 0; i < rho.dim(); ++i) {
            const double den = lam(i) + lam(j);
            if (den > cutoff) sum += std::norm(d(i, j)) / den;
        }
    }
    return 2.0 * sum;
}

/// ⟨m_ω|n_ω₀⟩ from the finite sum over l ≡ m (mod 2), l ≤ min(m, n).
inline double basis_overlap(int m, int n, double omega, double omega0) {
    if (m < 0 || n < 0) throw DomainError("basis_overlap: indices must be >= 0");
    if (!(omega > 0.0) || !(omega0 > 0.0)) throw DomainError("basis_overlap: frequencies must be > 0");
    if ((m + n) % 2 != 0) return 0.0;
    const double y1 = (omega0 - omega) / (omega0 + omega);
    const double y2 = 2.0 * std::sqrt(omega0 * omega) / (omega0 + omega);
    // Work in logs: the factorials overflow long before the terms do.
    const double log_pre = 0.5 * (std::log(y2) + std::lgamma(m + 1.0) + std::lgamma(n + 1.0) - (m + n) * std::log(2.0));
    double sum = 0.0;
    for (int l = m % 2; l <= std::min(m, n); l += 2) {
        const int pow_y1 = (m + n - 2 * l) / 2;
        if (pow_y1 > 0 && y1 == 0.0) continue;
        double log_mag = l * std::log(2.0 * y2) - std::lgamma(l + 1.0) - std::lgamma((n - l) / 2 + 1.0) -
                         std::lgamma((m - l) / 2 + 1.0);
        double sign = ((m - l) / 2) % 2 == 0 ? 1.0 : -1.0;
        if (pow_y1 > 0) {
            log_mag += pow_y1 * std::log(std::abs(y1));
            if (y1 < 0.0 && pow_y1 % 2 != 0) sign = -sign;
        }
        sum += sign * std::exp(log_pre + log_mag);
    }
    return sum;
}

/// R_mn = ⟨m_ω|n_ω₀⟩ for m, n < dim.
inline Eigen::MatrixXd overlap_matrix(int dim, double omega, double omega0) {
    Eigen::MatrixXd r(dim, dim);
    for (int n = 0; n < dim; ++n)
        for (int m = 0; m < dim; ++m) r(m, n) = basis_overlap(m, n, omega, omega0);
    return r;
}

struct FockQfiOptions {
    int dim = 0;  ///< truncation; 0 escalates from 60 until the tail check passes
    double step = 1e-5;  ///< relative finite-difference step
    OccupancyMode mode = OccupancyMode::temperature;
};

/// SLD frequency QFI at ω₀ from Fock-space evolution of the five-step scheme.
inline double fock_qfi_omega(const GaussianParams& p, double omega0, double g, double nbar, double t,
                             const FockQfiOptions& opt = {}) {
    p.validate();
    if (!(omega0 > 0.0) || !(g >= 0.0) || !(nbar >= 0.0) || !(t >= 0.0))
        throw DomainError("fock_qfi_omega: invalid parameters");
    const double gamma = g * omega0;
    const double h = opt.step * omega0;
    const bool follow = opt.mode == OccupancyMode::temperature;
    auto n_at = [&](double n, double omega) { return follow ? rescaled_occupancy(n, omega / omega0) : n; };
    // N_th grows as ω decreases, so the state at ω₀ − h sets the truncation.
    const int dim = opt.dim > 0 ? opt.dim : required_fock_dim(p.with_n_th(n_at(p.n_th, omega0 - h)));
    // One step size for all three evaluations so that integration error cancels in the difference.
    const double nbar_max = std::max(n_at(nbar, omega0 - h), n_at(nbar, omega0 + h));
    const double dt = default_lindblad_step(BathParams{omega0 + h, gamma, nbar_max}, dim);

    auto family = [&](double omega) {
        const CMat s = squeeze_matrix(Complex(basis_jump_squeeze(omega0, omega), 0.0), dim);
        FockDensityMatrix rho = build_gaussian_fock(p.with_n_th(n_at(p.n_th, omega)), dim);
        rho.data = s * rho.data * s.adjoint();
        rho = lindblad_evolve(rho, BathParams{omega, gamma, n_at(nbar, omega)}, t, dt);
        rho.data = s.adjoint() * rho.data * s;
        return rho;
    };
    const FockDensityMatrix center = family(omega0);
    const CMat drho = (family(omega0 + h).data - family(omega0 - h).data) / (2.0 * h);
    return qfi_sld(center, drho);
}

/// SLD damping-rate QFI at bath.gamma > 0.
inline double fock_qfi_gamma(const GaussianParams& p, const BathParams& bath, double t, const FockQfiOptions& opt = {}) {
    p.validate();
    bath.validate();
    if (!(bath.gamma > 0.0) || !(t >= 0.0)) throw DomainError("fock_qfi_gamma: need gamma > 0 and t >= 0");
    const double h = opt.step * bath.gamma;
    const FockDensityMatrix initial = opt.dim > 0 ? build_gaussian_fock(p, opt.dim) : build_gaussian_fock_auto(p);
    const double dt = default_lindblad_step(BathParams{bath.omega, bath.gamma + h, bath.nbar}, initial.dim());
    auto family = [&](double gamma) { return lindblad_evolve(initial, BathParams{bath.omega, gamma, bath.nbar}, t, dt); };
    const FockDensityMatrix center = family(bath.gamma);
    const CMat drho = (family(bath.gamma + h).data - family(bath.gamma - h).data) / (2.0 * h);
    return qfi_sld(center, drho);
}

}  // namespace gqfi
