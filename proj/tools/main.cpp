#include <cstdlib>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "ynoid/driver.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDegToRad = kPi / 180.0;

struct CliOptions {
    ynoid::RunConfig config;
    std::string surface_name;
    bool alpha_given = false;
    bool degrees = false;
    std::string format_name = "table";
    std::string far_name = "decay";
};

void add_surface_flags(CLI::App* cmd, CliOptions& opts) {
    auto* alpha = cmd->add_option("--alpha", opts.config.alpha,
                                  "family parameter alpha in (0, pi/3], radians");
    alpha->each([&opts](const std::string&) { opts.alpha_given = true; });
    cmd->add_option("--surface", opts.surface_name,
                    "symbolic surface: ycatenoid, pseudo, or pi6")
        ->check(CLI::IsMember({"ycatenoid", "pseudo", "pi6"}))
        ->excludes(alpha);
    cmd->add_flag("--degrees", opts.degrees, "interpret angle options as degrees");
}

void add_common_flags(CLI::App* cmd, CliOptions& opts) {
    cmd->add_option("--radius", opts.config.junction_radius,
                    "junction circle radius (default 2/sqrt(3))");
    cmd->add_option("--n-max", opts.config.max_mode, "highest Fourier mode (default 64)");
    cmd->add_option("--tol", opts.config.tol,
                    "classification tolerance (default 1e-9, or YNOID_TOL)");
    cmd->add_option("--format", opts.format_name, "output format: table, csv, or json")
        ->check(CLI::IsMember({"table", "csv", "json"}));
    cmd->add_option("--out", opts.config.output_path, "write output to this path");
}

void add_ode_flags(CLI::App* cmd, CliOptions& opts) {
    cmd->add_option("--ode-length", opts.config.ode.length,
                    "truncation length of the shooting domain (default 30)");
    cmd->add_option("--ode-step", opts.config.ode.step, "integrator step (default 1e-3)");
    cmd->add_option("--far", opts.far_name,
                    "far boundary condition: decay, dirichlet, or neumann")
        ->check(CLI::IsMember({"decay", "dirichlet", "neumann"}));
    cmd->add_option("--rel-tol", opts.config.rel_tolerance,
                    "relative tolerance for closed-form vs numeric rows (default 1e-6)");
}

int finalize(CliOptions& opts, CLI::App* cmd) {
    if (opts.format_name == "csv") {
        opts.config.format = ynoid::OutputFormat::Csv;
    } else if (opts.format_name == "json") {
        opts.config.format = ynoid::OutputFormat::Json;
    } else {
        opts.config.format = ynoid::OutputFormat::Table;
    }
    if (opts.far_name == "dirichlet") {
        opts.config.ode.far = ynoid::FarCondition::DirichletZero;
    } else if (opts.far_name == "neumann") {
        opts.config.ode.far = ynoid::FarCondition::BoundedNeumann;
    }

    if (opts.config.command == ynoid::Command::Sweep) {
        if (opts.degrees) {
            opts.config.sweep_min *= kDegToRad;
            opts.config.sweep_max *= kDegToRad;
        }
        return 0;
    }
    if (!opts.surface_name.empty()) {
        if (opts.surface_name == "ycatenoid") {
            opts.config.surface = ynoid::SurfaceChoice::YCatenoid;
        } else if (opts.surface_name == "pseudo") {
            opts.config.surface = ynoid::SurfaceChoice::PseudoYCatenoid;
        } else {
            opts.config.surface = ynoid::SurfaceChoice::PiOverSix;
        }
        return 0;
    }
    if (!opts.alpha_given) {
        std::cerr << "error: " << cmd->get_name()
                  << " requires either --alpha or --surface\n";
        return ynoid::kExitConfig;
    }
    if (opts.degrees) opts.config.alpha *= kDegToRad;
    opts.config.surface = ynoid::SurfaceChoice::Alpha;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Morse index and Steklov spectrum engine for Y-noid minimal surfaces"};
    app.require_subcommand(1);

    CliOptions opts;
    if (const char* env_tol = std::getenv("YNOID_TOL")) {
        char* end = nullptr;
        const double parsed = std::strtod(env_tol, &end);
        if (end == env_tol || *end != '\0' || !(parsed >= 0.0)) {
            std::cerr << "error: YNOID_TOL must be a nonnegative number, got \"" << env_tol
                      << "\"\n";
            return ynoid::kExitConfig;
        }
        opts.config.tol = parsed;
    }

    CLI::App* index = app.add_subcommand("index", "compute Morse index and nullity");
    add_surface_flags(index, opts);
    add_common_flags(index, opts);

    CLI::App* spectrum = app.add_subcommand("spectrum", "dump the closed-form mode table");
    add_surface_flags(spectrum, opts);
    add_common_flags(spectrum, opts);

    CLI::App* sweep = app.add_subcommand("sweep", "compute index/nullity over an alpha grid");
    sweep->add_option("--alpha-min", opts.config.sweep_min, "first grid point (inclusive)")
        ->required();
    sweep->add_option("--alpha-max", opts.config.sweep_max, "last grid point (inclusive)")
        ->required();
    sweep->add_option("--steps", opts.config.sweep_steps, "number of grid points (>= 2)")
        ->required();
    sweep->add_flag("--degrees", opts.degrees, "interpret angle options as degrees");
    add_common_flags(sweep, opts);

    CLI::App* verify = app.add_subcommand("verify", "check closed forms against the ODE oracle");
    add_surface_flags(verify, opts);
    add_common_flags(verify, opts);
    add_ode_flags(verify, opts);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : ynoid::kExitConfig;
    }

    CLI::App* picked = index;
    if (spectrum->parsed()) {
        picked = spectrum;
        opts.config.command = ynoid::Command::Spectrum;
    } else if (sweep->parsed()) {
        picked = sweep;
        opts.config.command = ynoid::Command::Sweep;
    } else if (verify->parsed()) {
        picked = verify;
        opts.config.command = ynoid::Command::Verify;
    } else {
        opts.config.command = ynoid::Command::Index;
    }

    if (const int status = finalize(opts, picked); status != 0) return status;
    return ynoid::run(opts.config, std::cout, std::cerr);
}
