#pragma once

// Command implementations behind the gqfi executable. Each command fills a
// Table; main() only parses arguments and prints.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "gqfi/gqfi.hpp"
#include "json.hpp"

namespace gqfi::cli {

/// Bad command-line input; main() maps it to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Parsing helpers

inline double parse_double(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("invalid number for " + what + ": '" + s + "'");
    }
    if (pos != s.size()) throw UsageError("invalid number for " + what + ": '" + s + "'");
    return v;
}

/// Accepts plain numbers and multiples of pi: "pi", "-pi/2", "2pi", "0.5*pi".
inline double parse_angle(std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    const auto at = s.find("pi");
    if (at == std::string::npos) return parse_double(s, "angle");
    std::string coef = s.substr(0, at);
    std::string rest = s.substr(at + 2);
    if (!coef.empty() && coef.back() == '*') coef.pop_back();
    double factor = 1.0;
    if (coef == "-") factor = -1.0;
    else if (!coef.empty() && coef != "+") factor = parse_double(coef, "angle");
    double divisor = 1.0;
    if (!rest.empty()) {
        if (rest.front() != '/') throw UsageError("invalid angle: '" + s + "'");
        divisor = parse_double(rest.substr(1), "angle");
        if (divisor == 0.0) throw UsageError("invalid angle: division by zero");
    }
    return factor * constants::pi / divisor;
}

/// "lo:hi:n" → n points from lo to hi inclusive.
inline std::vector<double> parse_grid(const std::string& spec) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
    if (parts.size() != 3) throw UsageError("grid must be lo:hi:n, got '" + spec + "'");
    const double lo = parse_double(parts[0], "grid lower bound");
    const double hi = parse_double(parts[1], "grid upper bound");
    const double n_real = parse_double(parts[2], "grid size");
    if (n_real < 1.0 || n_real != std::floor(n_real) || n_real > 1e7) throw UsageError("grid size must be a positive integer");
    if (!(hi >= lo)) throw UsageError("grid needs lo <= hi");
    const auto n = static_cast<std::size_t>(n_real);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = n == 1 ? lo : (i + 1 == n ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1));
    return out;
}

/// Length with unit suffix: m, mm, um, nm, pm (bare numbers are metres).
inline double parse_length(std::string s) {
    s.erase(std::remove(s.begin(), s.end(), ' '), s.end());
    static const std::vector<std::pair<std::string, double>> units{
        {"nm", 1e-9}, {"pm", 1e-12}, {"um", 1e-6}, {"mm", 1e-3}, {"m", 1.0}};
    for (const auto& [suffix, scale] : units) {
        if (s.size() > suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0)
            return parse_double(s.substr(0, s.size() - suffix.size()), "length") * scale;
    }
    return parse_double(s, "length");
}

inline std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// ---------------------------------------------------------------------------
// Output tables

using Cell = std::variant<double, std::string, bool>;

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;
};

enum class Format { csv, jsonl };

inline Format parse_format(const std::string& s) {
    if (s == "csv") return Format::csv;
    if (s == "jsonl") return Format::jsonl;
    throw UsageError("format must be csv or jsonl");
}

inline std::string cell_text(const Cell& c) {
    if (const auto* d = std::get_if<double>(&c)) return format_number(*d);
    if (const auto* b = std::get_if<bool>(&c)) return *b ? "true" : "false";
    const auto& s = std::get<std::string>(c);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char ch : s) quoted += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return quoted + "\"";
}

inline void write_table(std::ostream& os, const Table& t, Format f) {
    if (f == Format::csv) {
        for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
        os << '\n';
        for (const auto& row : t.rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
            os << '\n';
        }
        return;
    }
    for (const auto& row : t.rows) {
        nlohmann::ordered_json obj;
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::visit([&](const auto& v) { obj[t.columns[i]] = v; }, row[i]);
        }
        os << obj.dump() << '\n';
    }
}

// ---------------------------------------------------------------------------
// Concurrency

/// GQFI_THREADS if set to a positive integer, else the hardware concurrency.
inline unsigned thread_count() {
    if (const char* env = std::getenv("GQFI_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

/// Evaluates fn(i) for i < n on up to `threads` workers; results keep index order.
template <typename T, typename Fn>
std::vector<T> parallel_map(std::size_t n, unsigned threads, Fn fn) {
    std::vector<T> out(n);
    std::vector<std::exception_ptr> errors(n);
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), std::max<std::size_t>(n, 1)));
    auto run = [&](unsigned w) {
        for (std::size_t i = w; i < n; i += workers) {
            try {
                out[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

// ---------------------------------------------------------------------------
// qfi

enum class Subject { omega, gamma };
enum class Engine { closed, numeric };

struct QfiArgs {
    Subject subject = Subject::omega;
    Engine engine = Engine::closed;
    GaussianParams params;
    double g = 0.0;
    double nbar = 0.0;
    std::vector<double> tau;
    OccupancyMode mode = OccupancyMode::temperature;
    double step = 1e-5;
    bool richardson = false;
    /// SI mode: ω in rad/s, times in s; the table then carries t and I in SI units.
    std::optional<double> physical_omega;
};

inline QfiBreakdown qfi_point(const QfiArgs& a, double tau) {
    const NumericOptions opt{a.step, a.richardson, a.mode};
    if (a.subject == Subject::omega) {
        if (a.engine == Engine::closed) {
            if (a.mode != OccupancyMode::temperature)
                throw UsageError("closed forms assume temperature-following occupancies; use --engine numeric for --mode fixed");
            return qfi_omega_damped_full(a.params, a.g, a.nbar, tau, 1.0);
        }
        return qfi_omega_numeric(a.params, 1.0, a.g, a.nbar, tau, opt);
    }
    if (!(a.g > 0.0)) throw UsageError("gamma estimation needs g > 0");
    if (a.engine == Engine::closed) return qfi_gamma_general_terms(a.params, a.g, a.nbar, tau, 1.0);
    // At ω = 1 the numeric γ-QFI is I; γ²I = g²·I.
    return qfi_gamma_numeric(a.params, BathParams{1.0, a.g, a.nbar}, tau, opt).scaled(a.g * a.g);
}

inline Table cmd_qfi(const QfiArgs& a, unsigned threads = 1) {
    a.params.validate();
    if (!(a.g >= 0.0) || !(a.nbar >= 0.0)) throw UsageError("g and nbar must be >= 0");
    for (double t : a.tau)
        if (!(t >= 0.0)) throw UsageError("times must be >= 0");
    const bool si = a.physical_omega.has_value();
    const std::string label = a.subject == Subject::omega ? "omega2_qfi" : "gamma2_qfi";
    Table t;
    t.columns = si ? std::vector<std::string>{"t", "qfi", label, "term_cov", "term_purity", "term_disp", "engine"}
                   : std::vector<std::string>{"tau", label, "term_cov", "term_purity", "term_disp", "engine"};
    const auto values = parallel_map<QfiBreakdown>(a.tau.size(), threads, [&](std::size_t i) {
        return qfi_point(a, si ? a.tau[i] * *a.physical_omega : a.tau[i]);
    });
    const std::string engine = a.engine == Engine::closed ? "closed" : "numeric";
    for (std::size_t i = 0; i < a.tau.size(); ++i) {
        const QfiBreakdown& b = values[i];
        std::vector<Cell> row;
        row.emplace_back(a.tau[i]);
        if (si) {
            // ω²I and γ²I = g²ω²I both divide by ω² to give I in s².
            const double w = *a.physical_omega;
            const double norm = a.subject == Subject::omega ? w * w : a.g * a.g * w * w;
            row.emplace_back(b.total / norm);
        }
        row.emplace_back(b.total);
        row.emplace_back(b.term_cov);
        row.emplace_back(b.term_purity);
        row.emplace_back(b.term_disp);
        row.emplace_back(engine);
        t.rows.push_back(std::move(row));
    }
    return t;
}

// ---------------------------------------------------------------------------
// omt

struct OmtArgs {
    std::string kind = "coherent";  // coherent | coherent-rescaled | squeezed | gamma-thermal | gamma-displaced | gamma-displaced-rescaled
    double g = 0.1;
    double nbar = 0.0;
    double alpha = 1.0;
    double r = 2.5;
    double n_th = 0.0;
    bool envelope = false;  ///< maximize the oscillation-free envelope instead of the full curve
    std::size_t grid = 2048;
};

inline const std::vector<std::string>& omt_kinds() {
    static const std::vector<std::string> kinds{"coherent", "coherent-rescaled", "squeezed",
                                                "gamma-thermal", "gamma-displaced", "gamma-displaced-rescaled"};
    return kinds;
}

inline Table cmd_omt(const OmtArgs& a) {
    if (!(a.g > 0.0)) throw UsageError("omt needs g > 0");
    if (!(a.nbar >= 0.0) || !(a.n_th >= 0.0) || !(a.r >= 0.0)) throw UsageError("nbar, nth and r must be >= 0");
    const auto [lo, hi] = omt_default_bracket(a.g);
    double closed_tau = 0.0;
    double closed_i = NAN;
    bool rescaled = false;
    std::function<double(double)> curve;

    auto envelope = [&](double tau) {
        return 4.0 * a.alpha * a.alpha * tau * tau / (1.0 + std::expm1(a.g * tau) * (1.0 + 2.0 * a.nbar));
    };
    auto coherent = [&](double tau) { return qfi_omega_coherent_term(a.alpha, a.g, a.nbar, tau, 1.0); };

    if (a.kind == "coherent" || a.kind == "coherent-rescaled") {
        rescaled = a.kind == "coherent-rescaled";
        const OmtResult c = rescaled ? omt_coherent_rescaled(a.g, a.nbar, a.alpha) : omt_coherent(a.g, a.nbar, a.alpha);
        closed_tau = c.tau_max;
        closed_i = c.i_max;
        curve = a.envelope ? std::function<double(double)>(envelope) : std::function<double(double)>(coherent);
    } else if (a.kind == "squeezed") {
        closed_tau = omt_squeezed(a.g);
        curve = [&](double tau) { return qfi_omega_squeezed(a.r, a.g, a.nbar, tau, 1.0, SqueezedMode::approximate); };
    } else if (a.kind == "gamma-thermal") {
        closed_tau = omt_gamma(GammaThermalCase{a.n_th}, a.g);
        curve = [&](double tau) { return qfi_gamma_thermal(a.n_th, a.g, a.nbar, tau, 1.0); };
    } else if (a.kind == "gamma-displaced" || a.kind == "gamma-displaced-rescaled") {
        rescaled = a.kind == "gamma-displaced-rescaled";
        closed_tau = omt_gamma(GammaDisplacedCase{rescaled}, a.g);
        curve = [&](double tau) { return qfi_gamma_displaced_equilibrium(a.alpha, a.g, a.nbar, tau, 1.0); };
    } else {
        throw UsageError("unknown omt case '" + a.kind + "'");
    }

    const OmtResult num = omt_numeric(curve, lo, hi, rescaled, a.grid);
    const double closed_value = rescaled ? curve(closed_tau) / closed_tau : curve(closed_tau);
    Table t;
    t.columns = {"case", "rescaled", "tau_closed", "tau_numeric", "tau_discrepancy", "value_at_closed", "value_numeric",
                 "value_ratio", "i_max_closed_form", "numeric_at_boundary"};
    t.rows.push_back({a.kind, rescaled, closed_tau, num.tau_max, std::abs(closed_tau - num.tau_max) / num.tau_max,
                      closed_value, num.i_max, closed_value / num.i_max, closed_i, num.at_boundary});
    return t;
}

// ---------------------------------------------------------------------------
// sense

struct SenseArgs {
    std::optional<std::string> preset;
    std::optional<double> amplitude;  ///< m
    std::optional<double> alpha;
    std::optional<double> mass, omega, frequency, temperature, quality;
    double shots = 1.0;
    DampingConvention convention = DampingConvention::inverse_q;
};

inline ResonatorSpec resolve_spec(const SenseArgs& a) {
    ResonatorSpec s;
    if (a.preset) {
        const auto found = find_preset(*a.preset);
        if (!found) throw UsageError("unknown preset '" + *a.preset + "' (known: chaste2012, jensen2008)");
        s = *found;
    }
    if (a.mass) s.mass = *a.mass;
    if (a.omega) s.omega = *a.omega;
    if (a.frequency) s.omega = 2.0 * constants::pi * *a.frequency;
    if (a.temperature) s.temperature = *a.temperature;
    if (a.quality) s.quality = *a.quality;
    s.shots = a.shots;
    s.convention = a.convention;
    if (a.amplitude && a.alpha) throw UsageError("give either --amplitude or --alpha, not both");
    if (a.amplitude) s.drive = DriveAmplitude{*a.amplitude};
    if (a.alpha) s.drive = DriveAlpha{*a.alpha};
    if (!s.drive)
        throw UsageError("a drive is required: pass --amplitude (e.g. 10nm) or --alpha; "
                         "the source states no drive amplitude for these resonators, so none is assumed");
    try {
        s.validate();
    } catch (const DomainError& e) {
        throw UsageError(std::string(e.what()) + " (set --mass, --omega/--frequency, --temperature, --quality or use --preset)");
    }
    return s;
}

inline Table cmd_sense(const SenseArgs& a) {
    const ResonatorSpec s = resolve_spec(a);
    const SensitivityReport r = sensitivity(s);
    Table t;
    t.columns = {"quantity", "value", "unit"};
    auto add = [&](const std::string& k, double v, const std::string& unit) { t.rows.push_back({k, v, unit}); };
    add("mass", s.mass, "kg");
    add("omega", s.omega, "rad/s");
    add("temperature", s.temperature, "K");
    add("quality", s.quality, "1");
    add("g", r.g, "1");
    add("nbar", r.nbar, "1");
    add("alpha", r.alpha, "1");
    add("shots", s.shots, "1");
    add("tau_max", r.tau_max, "1");
    add("t_max", r.t_max, "s");
    add("i_max", r.i_max, "s^2");
    add("delta_m", r.delta_m, "kg");
    add("delta_m_proton", r.delta_m / constants::proton_mass, "m_p");
    add("sensitivity", r.sens, "kg/sqrt(Hz)");
    add("sensitivity_electron", r.sens / constants::electron_mass, "m_e/sqrt(Hz)");
    add("sensitivity_dalton", r.sens / constants::atomic_mass_unit, "u/sqrt(Hz)");
    return t;
}

// ---------------------------------------------------------------------------
// validate

struct ValidationRow {
    std::string scope;
    std::string name;
    double reference = 0.0;
    double candidate = 0.0;
    double tolerance = 0.0;

    double error() const {
        const double scale = std::max(std::abs(reference), 1e-300);
        return std::abs(candidate - reference) / scale;
    }
    bool pass() const { return std::isfinite(candidate) && error() <= tolerance; }
};

namespace detail {

inline GaussianParams random_params(std::mt19937_64& rng, double alpha_max, double r_max, double n_max) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const double alpha = alpha_max * u(rng);
    const double psi = 2.0 * constants::pi * u(rng);
    const double r = r_max * u(rng);
    const double chi = 2.0 * constants::pi * u(rng);
    const double n = n_max * u(rng);
    return GaussianParams::make(alpha, psi, r, chi, n);
}

inline std::string describe(const GaussianParams& p, double g, double nbar, double tau) {
    char buf[200];
    std::snprintf(buf, sizeof buf, "alpha=%.4g psi=%.4g r=%.4g chi=%.4g nth=%.4g g=%.4g nbar=%.4g tau=%.4g", p.alpha, p.psi,
                  p.r, p.chi, p.n_th, g, nbar, tau);
    return buf;
}

}  // namespace detail

inline std::vector<ValidationRow> validate_gaussian_vs_fock(std::uint64_t seed, int cases, unsigned threads) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    struct Case {
        GaussianParams p;
        double g, nbar, tau;
    };
    std::vector<Case> cs;
    for (int i = 0; i < cases; ++i) {
        const GaussianParams p = detail::random_params(rng, 1.0, 0.5, 1.0);
        const double nbar = u(rng);
        const double g = 0.01 + 0.19 * u(rng);
        const double tau = 0.1 + 4.9 * u(rng);
        cs.push_back({p, g, nbar, tau});
    }
    auto rows = parallel_map<std::vector<ValidationRow>>(cs.size(), threads, [&](std::size_t i) {
        const Case& c = cs[i];
        const std::string d = detail::describe(c.p, c.g, c.nbar, c.tau);
        std::vector<ValidationRow> out;
        out.push_back({"gaussian-vs-fock", "omega " + d, qfi_omega_damped_full(c.p, c.g, c.nbar, c.tau, 1.0).total,
                       fock_qfi_omega(c.p, 1.0, c.g, c.nbar, c.tau), 1e-3});
        out.push_back({"gaussian-vs-fock", "gamma " + d, qfi_gamma_general(c.p, c.g, c.nbar, c.tau, c.g),
                       fock_qfi_gamma(c.p, BathParams{1.0, c.g, c.nbar}, c.tau), 1e-3});
        return out;
    });
    std::vector<ValidationRow> flat;
    for (auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    return flat;
}

inline std::vector<ValidationRow> validate_closed_vs_numeric(std::uint64_t seed, int cases, unsigned threads) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    struct Case {
        GaussianParams p;
        double g, nbar, tau;
    };
    std::vector<Case> cs;
    for (int i = 0; i < cases; ++i) {
        const GaussianParams p = detail::random_params(rng, 2.0, 1.0, 3.0);
        cs.push_back({p, 0.3 * u(rng), 3.0 * u(rng), 20.0 * u(rng)});
    }
    const NumericOptions opt{1e-4, true, OccupancyMode::temperature};
    auto rows = parallel_map<std::vector<ValidationRow>>(cs.size(), threads, [&](std::size_t i) {
        const Case& c = cs[i];
        const std::string d = detail::describe(c.p, c.g, c.nbar, c.tau);
        std::vector<ValidationRow> out;
        out.push_back({"closed-vs-numeric", "omega " + d, qfi_omega_damped_full(c.p, c.g, c.nbar, c.tau, 1.0).total,
                       qfi_omega_numeric(c.p, 1.0, c.g, c.nbar, c.tau, opt).total, 1e-6});
        const double g = std::max(c.g, 1e-3);
        out.push_back({"closed-vs-numeric", "gamma " + detail::describe(c.p, g, c.nbar, c.tau),
                       qfi_gamma_general(c.p, g, c.nbar, c.tau, g),
                       qfi_gamma_numeric(c.p, BathParams{1.0, g, c.nbar}, c.tau, opt).total, 1e-6});
        return out;
    });
    std::vector<ValidationRow> flat;
    for (auto& r : rows) flat.insert(flat.end(), r.begin(), r.end());
    return flat;
}

/// Special-case closed forms against their general parents.
inline std::vector<ValidationRow> validate_reductions(std::uint64_t seed, int cases) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<ValidationRow> out;
    const double tol = 1e-12;
    for (int i = 0; i < cases; ++i) {
        const GaussianParams p = detail::random_params(rng, 2.0, 1.0, 3.0);
        const double g = 0.01 + 0.3 * u(rng);
        const double nbar = 3.0 * u(rng);
        const double tau = 0.1 + 20.0 * u(rng);
        const double gamma = 0.5 + u(rng);
        const std::string d = detail::describe(p, g, nbar, tau);
        auto add = [&](const std::string& name, double ref, double cand) {
            out.push_back({"reductions", name + " " + d, ref, cand, tol});
        };

        const GaussianParams pure = p.with_n_th(0.0);
        add("undamped-pure", qfi_omega_undamped(pure, tau, 1.0), qfi_omega_pure(p.alpha, p.psi, p.r, p.chi, 1.0, tau));
        add("undamped-thermal", qfi_omega_undamped(GaussianParams{0.0, p.psi, 0.0, p.chi, p.n_th}, tau, 1.0),
            qfi_omega_thermal(p.n_th, tau, 1.0));
        add("damped-undamped", qfi_omega_damped_full(p, 0.0, nbar, tau, 1.0).total, qfi_omega_undamped(p, tau, 1.0));
        add("damped-ground", qfi_omega_damped_full(GaussianParams{}, g, nbar, tau, 1.0).total,
            qfi_omega_ground_state(g, nbar, tau, 1.0));
        add("damped-coherent", qfi_omega_damped_full(GaussianParams{p.alpha, 0.0, 0.0, 0.0, 0.0}, g, nbar, tau, 1.0).total,
            qfi_omega_coherent(p.alpha, g, nbar, tau, 1.0));
        add("damped-squeezed", qfi_omega_damped_full(GaussianParams{0.0, 0.0, p.r, 0.0, 0.0}, g, 0.0, tau, 1.0).total,
            qfi_omega_squeezed(p.r, g, 0.0, tau, 1.0, SqueezedMode::exact_zero_temperature));
        add("gamma-thermal", qfi_gamma_general(GaussianParams{0.0, p.psi, 0.0, p.chi, p.n_th}, g, nbar, tau, gamma),
            qfi_gamma_thermal(p.n_th, g, nbar, tau, gamma));
        add("gamma-displaced-thermal", qfi_gamma_general(GaussianParams{p.alpha, p.psi, 0.0, p.chi, p.n_th}, g, nbar, tau, gamma),
            qfi_gamma_displaced_thermal(p.alpha, p.n_th, g, nbar, tau, gamma));
        add("gamma-displaced-equilibrium", qfi_gamma_displaced_thermal(p.alpha, nbar, g, nbar, tau, gamma),
            qfi_gamma_displaced_equilibrium(p.alpha, g, nbar, tau, gamma));
        add("gamma-squeezed", qfi_gamma_general(GaussianParams{0.0, p.psi, p.r, p.chi, 0.0}, g, 0.0, tau, gamma),
            qfi_gamma_squeezed(p.r, g, 0.0, tau, gamma));
    }
    return out;
}

struct ValidateArgs {
    std::string scope = "all";  // gaussian-vs-fock | closed-vs-numeric | reductions | all
    std::uint64_t seed = 1;
    int cases = 0;  ///< 0 picks the per-scope default
};

inline std::vector<ValidationRow> run_validation(const ValidateArgs& a, unsigned threads) {
    const bool all = a.scope == "all";
    if (!all && a.scope != "gaussian-vs-fock" && a.scope != "closed-vs-numeric" && a.scope != "reductions")
        throw UsageError("unknown scope '" + a.scope + "'");
    if (a.cases < 0) throw UsageError("cases must be >= 0");
    auto n = [&](int dflt) { return a.cases > 0 ? a.cases : dflt; };
    std::vector<ValidationRow> rows;
    auto append = [&](std::vector<ValidationRow> r) { rows.insert(rows.end(), r.begin(), r.end()); };
    if (all || a.scope == "reductions") append(validate_reductions(a.seed, n(20)));
    if (all || a.scope == "closed-vs-numeric") append(validate_closed_vs_numeric(a.seed, n(50), threads));
    if (all || a.scope == "gaussian-vs-fock") append(validate_gaussian_vs_fock(a.seed, n(6), threads));
    return rows;
}

inline Table validation_table(const std::vector<ValidationRow>& rows) {
    Table t;
    t.columns = {"scope", "case", "reference", "candidate", "rel_error", "tolerance", "pass"};
    for (const auto& r : rows)
        t.rows.push_back({r.scope, r.name, r.reference, r.candidate, r.error(), r.tolerance, r.pass()});
    return t;
}

}  // namespace gqfi::cli
