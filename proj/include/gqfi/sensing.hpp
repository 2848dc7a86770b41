#pragma once

// Nanomechanical mass sensing: a resonator driven into a coherent state,
// read out at its optimal measurement time. SI units throughout this header.

#include <cmath>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "gqfi/constants.hpp"
#include "gqfi/core.hpp"
#include "gqfi/errors.hpp"
#include "gqfi/omt.hpp"

namespace gqfi {

/// Peak displacement of the coherent drive, in metres.
struct DriveAmplitude {
    double meters = 0.0;
};

/// Coherent amplitude α given directly.
struct DriveAlpha {
    double alpha = 0.0;
};

using Drive = std::variant<DriveAmplitude, DriveAlpha>;

/// How the quality factor maps to the dimensionless damping g = γ/ω.
enum class DampingConvention {
    inverse_q,      ///< g = 1/Q
    inverse_two_q,  ///< g = 1/(2Q)
};

struct ResonatorSpec {
    double mass = 0.0;         ///< kg
    double omega = 0.0;        ///< rad/s
    double temperature = 0.0;  ///< K
    double quality = 0.0;
    std::optional<Drive> drive;  ///< required by sensitivity(); presets leave it empty
    double shots = 1.0;
    DampingConvention convention = DampingConvention::inverse_q;

    double g() const { return convention == DampingConvention::inverse_q ? 1.0 / quality : 0.5 / quality; }

    void validate() const {
        for (double v : {mass, omega, temperature, quality})
            if (!(v > 0.0) || !std::isfinite(v)) throw DomainError("ResonatorSpec: mass, omega, temperature and quality must be > 0");
        if (!(shots >= 1.0)) throw DomainError("ResonatorSpec: shots must be >= 1");
    }
};

/// α = x_amp / √(2ħ/(Mω)), from ⟨q⟩_max = √(2ħ/(Mω))·α.
inline double alpha_from_amplitude(double x_amp, double mass, double omega) {
    if (!(x_amp > 0.0) || !(mass > 0.0) || !(omega > 0.0))
        throw DomainError("alpha_from_amplitude: inputs must be > 0");
    return x_amp / std::sqrt(2.0 * constants::hbar / (mass * omega));
}

/// Smallest resolvable mass change 2M/(ω√(m I_max)); i_max is the frequency QFI in s².
inline double delta_m_min(const ResonatorSpec& spec, double i_max, double shots) {
    if (!(i_max > 0.0)) throw DomainError("delta_m_min: i_max must be > 0");
    if (!(shots >= 1.0)) throw DomainError("delta_m_min: shots must be >= 1");
    if (!(spec.mass > 0.0) || !(spec.omega > 0.0)) throw DomainError("delta_m_min: mass and omega must be > 0");
    return 2.0 * spec.mass / (spec.omega * std::sqrt(shots * i_max));
}

struct SensitivityReport {
    double nbar = 0.0;
    double alpha = 0.0;
    double g = 0.0;
    double tau_max = 0.0;
    double t_max = 0.0;    ///< s
    double i_max = 0.0;    ///< s²
    double delta_m = 0.0;  ///< kg
    double sens = 0.0;     ///< kg/√Hz, δM·√t_max
};

/// thermal occupancy → α → coherent-state OMT → δM_min → δM_min·√t_max.
inline SensitivityReport sensitivity(const ResonatorSpec& spec) {
    spec.validate();
    if (!spec.drive)
        throw DomainError("sensitivity: drive amplitude is required (the source gives none for this resonator)");
    SensitivityReport rep;
    rep.nbar = thermal_occupancy(spec.omega, spec.temperature);
    if (const auto* amp = std::get_if<DriveAmplitude>(&*spec.drive)) {
        rep.alpha = alpha_from_amplitude(amp->meters, spec.mass, spec.omega);
    } else {
        rep.alpha = std::get<DriveAlpha>(*spec.drive).alpha;
        if (!(rep.alpha > 0.0)) throw DomainError("sensitivity: alpha must be > 0");
    }
    rep.g = spec.g();
    const OmtResult omt = omt_coherent(rep.g, rep.nbar, rep.alpha, spec.omega);
    rep.tau_max = omt.tau_max;
    rep.t_max = omt.tau_max / spec.omega;
    rep.i_max = omt.i_max;
    rep.delta_m = delta_m_min(spec, rep.i_max, spec.shots);
    rep.sens = rep.delta_m * std::sqrt(rep.t_max);
    return rep;
}

struct ResonatorPreset {
    std::string name;
    std::string description;
    ResonatorSpec spec;
};

inline ResonatorSpec chaste2012() {
    ResonatorSpec s;
    s.mass = 3e-22;
    s.omega = 2.0 * constants::pi * 1.865e9;
    s.temperature = 4.0;
    s.quality = 1e3;
    return s;
}

inline ResonatorSpec jensen2008() {
    ResonatorSpec s;
    s.mass = 1e-21;
    s.omega = 2.0 * constants::pi * 328.5e6;
    s.temperature = 300.0;
    s.quality = 1e3;
    return s;
}

inline const std::vector<ResonatorPreset>& resonator_presets() {
    static const std::vector<ResonatorPreset> presets{
        {"chaste2012", "carbon-nanotube resonator, 1.865 GHz at 4 K", chaste2012()},
        {"jensen2008", "carbon-nanotube resonator, 328.5 MHz at room temperature", jensen2008()},
    };
    return presets;
}

inline std::optional<ResonatorSpec> find_preset(std::string_view name) {
    for (const auto& p : resonator_presets())
        if (p.name == name) return p.spec;
    return std::nullopt;
}

}  // namespace gqfi
