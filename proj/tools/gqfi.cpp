// gqfi: QFI sweeps, optimal measurement times, mass-sensing reports and oracle validation.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "cli_commands.hpp"

namespace {

using namespace gqfi;
using namespace gqfi::cli;

struct Output {
    std::string format = "csv";
    std::string path;

    void add_to(CLI::App* app) {
        app->add_option("--format", format, "csv or jsonl")->check(CLI::IsMember({"csv", "jsonl"}));
        app->add_option("-o,--output", path, "write to file instead of stdout");
    }

    void emit(const Table& t) const {
        const Format f = parse_format(format);
        if (path.empty()) {
            write_table(std::cout, t, f);
            std::cout.flush();
            return;
        }
        std::ofstream os(path, std::ios::binary);
        if (!os) throw UsageError("cannot open output file '" + path + "'");
        write_table(os, t, f);
        os.flush();
        if (!os) throw std::runtime_error("failed writing '" + path + "'");
    }
};

void warn_damping(double g) {
    if (g > 0.5)
        std::cerr << "warning: g = " << g << " > 0.5; the rotating-wave master equation assumes weak damping\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum Fisher information of a damped harmonic oscillator in Gaussian states"};
    app.require_subcommand(1);

    // qfi ------------------------------------------------------------------
    auto* qfi = app.add_subcommand("qfi", "QFI of ω or γ over a grid of times (dimensionless ω²I or γ²I)");
    std::string subject = "omega", engine = "closed", mode = "temperature";
    std::string psi = "0", chi = "0", tau_grid, t_grid;
    double alpha = 0.0, r = 0.0, nth = 0.0, g = 0.0, nbar = 0.0, step = 1e-5;
    bool richardson = false, physical = false;
    std::optional<double> omega_si, gamma_si, temperature_si;
    Output qfi_out;
    qfi->add_option("subject", subject, "omega or gamma")->check(CLI::IsMember({"omega", "gamma"}));
    qfi->add_option("--alpha", alpha, "displacement amplitude");
    qfi->add_option("--psi", psi, "rotation angle (accepts pi, pi/2, ...)");
    qfi->add_option("--r", r, "squeezing magnitude");
    qfi->add_option("--chi", chi, "squeezing phase (accepts pi, pi/2, ...)");
    qfi->add_option("--nth", nth, "initial thermal photons");
    qfi->add_option("--g", g, "damping g = gamma/omega");
    qfi->add_option("--nbar", nbar, "bath thermal photons at omega");
    qfi->add_option("--tau", tau_grid, "time grid lo:hi:n in tau = omega t");
    qfi->add_option("--engine", engine, "closed or numeric")->check(CLI::IsMember({"closed", "numeric"}));
    qfi->add_option("--mode", mode, "occupancies follow temperature or stay fixed when omega varies")
        ->check(CLI::IsMember({"temperature", "fixed"}));
    qfi->add_option("--step", step, "relative finite-difference step (numeric engine)");
    qfi->add_flag("--richardson", richardson, "Richardson-extrapolated differences (numeric engine)");
    auto* phys = qfi->add_flag("--physical", physical, "SI inputs: --omega rad/s, --gamma 1/s, --temperature K, --t s");
    qfi->add_option("--omega", omega_si, "angular frequency in rad/s")->needs(phys);
    qfi->add_option("--gamma", gamma_si, "damping rate in 1/s")->needs(phys);
    qfi->add_option("--temperature", temperature_si, "bath temperature in K")->needs(phys);
    qfi->add_option("--t", t_grid, "time grid lo:hi:n in seconds")->needs(phys);
    qfi_out.add_to(qfi);

    // omt ------------------------------------------------------------------
    auto* omt = app.add_subcommand("omt", "optimal measurement time: closed form next to numeric maximization");
    OmtArgs omt_args;
    Output omt_out;
    omt->add_option("case", omt_args.kind, "case")->check(CLI::IsMember(omt_kinds()));
    omt->add_option("--g", omt_args.g, "damping g = gamma/omega");
    omt->add_option("--nbar", omt_args.nbar, "bath thermal photons");
    omt->add_option("--alpha", omt_args.alpha, "displacement amplitude");
    omt->add_option("--r", omt_args.r, "squeezing magnitude (squeezed case)");
    omt->add_option("--nth", omt_args.n_th, "initial thermal photons (gamma-thermal case)");
    omt->add_flag("--envelope", omt_args.envelope, "maximize the oscillation-free coherent envelope");
    omt->add_option("--grid", omt_args.grid, "grid points of the numeric scan");
    omt_out.add_to(omt);

    // sense ----------------------------------------------------------------
    auto* sense = app.add_subcommand("sense", "mass sensitivity of a coherently driven resonator");
    SenseArgs sense_args;
    std::string amplitude, convention = "inverse-q";
    Output sense_out;
    sense->add_option("--preset", sense_args.preset, "chaste2012 or jensen2008");
    sense->add_option("--amplitude", amplitude, "drive amplitude with unit, e.g. 10nm");
    sense->add_option("--alpha", sense_args.alpha, "coherent amplitude alpha instead of --amplitude");
    sense->add_option("--mass", sense_args.mass, "kg");
    sense->add_option("--omega", sense_args.omega, "rad/s");
    sense->add_option("--frequency", sense_args.frequency, "Hz");
    sense->add_option("--temperature", sense_args.temperature, "K");
    sense->add_option("--quality", sense_args.quality, "quality factor Q");
    sense->add_option("--shots", sense_args.shots, "repetitions");
    sense->add_option("--convention", convention, "g = 1/Q (inverse-q) or 1/(2Q) (inverse-two-q)")
        ->check(CLI::IsMember({"inverse-q", "inverse-two-q"}));
    sense_out.add_to(sense);

    // validate -------------------------------------------------------------
    auto* validate = app.add_subcommand("validate", "oracle-equivalence suites; exit code 0 iff all pass");
    ValidateArgs val_args;
    Output val_out;
    validate->add_option("--scope", val_args.scope, "gaussian-vs-fock, closed-vs-numeric, reductions or all")
        ->check(CLI::IsMember({"gaussian-vs-fock", "closed-vs-numeric", "reductions", "all"}));
    validate->add_option("--seed", val_args.seed, "random seed");
    validate->add_option("--cases", val_args.cases, "cases per suite (0 = default)");
    val_out.add_to(validate);

    CLI11_PARSE(app, argc, argv);

    try {
        if (qfi->parsed()) {
            QfiArgs a;
            a.subject = subject == "omega" ? Subject::omega : Subject::gamma;
            a.engine = engine == "closed" ? Engine::closed : Engine::numeric;
            a.mode = mode == "temperature" ? OccupancyMode::temperature : OccupancyMode::fixed;
            a.params = GaussianParams::make(alpha, parse_angle(psi), r, parse_angle(chi), nth);
            a.step = step;
            a.richardson = richardson;
            if (physical) {
                if (!omega_si || !(*omega_si > 0.0)) throw UsageError("--physical needs --omega > 0");
                if (t_grid.empty()) throw UsageError("--physical needs --t lo:hi:n");
                a.physical_omega = *omega_si;
                a.g = gamma_si ? *gamma_si / *omega_si : g;
                a.nbar = temperature_si ? thermal_occupancy(*omega_si, *temperature_si) : nbar;
                a.tau = parse_grid(t_grid);
            } else {
                if (tau_grid.empty()) throw UsageError("--tau lo:hi:n is required");
                a.g = g;
                a.nbar = nbar;
                a.tau = parse_grid(tau_grid);
            }
            warn_damping(a.g);
            qfi_out.emit(cmd_qfi(a, thread_count()));
            return 0;
        }
        if (omt->parsed()) {
            warn_damping(omt_args.g);
            omt_out.emit(cmd_omt(omt_args));
            return 0;
        }
        if (sense->parsed()) {
            if (!amplitude.empty()) sense_args.amplitude = parse_length(amplitude);
            sense_args.convention =
                convention == "inverse-q" ? DampingConvention::inverse_q : DampingConvention::inverse_two_q;
            sense_out.emit(cmd_sense(sense_args));
            return 0;
        }
        if (validate->parsed()) {
            const auto rows = run_validation(val_args, thread_count());
            val_out.emit(validation_table(rows));
            std::size_t failed = 0;
            for (const auto& row : rows) failed += row.pass() ? 0 : 1;
            std::cerr << rows.size() - failed << "/" << rows.size() << " checks passed\n";
            return failed == 0 ? 0 : 1;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const gqfi::DomainError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
