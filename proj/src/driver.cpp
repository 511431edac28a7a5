#include "ynoid/driver.hpp"

#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>
#include <vector>

#include "ynoid/errors.hpp"

namespace ynoid {

namespace {

constexpr double kPi = 3.14159265358979323846;

YNoidGeometry make_geometry(const RunConfig& config) {
    switch (config.surface) {
        case SurfaceChoice::YCatenoid: return build_y_catenoid(config.junction_radius);
        case SurfaceChoice::PseudoYCatenoid: return build_ynoid(kPi / 3.0, config.junction_radius);
        case SurfaceChoice::PiOverSix: return build_ynoid(kPi / 6.0, config.junction_radius);
        case SurfaceChoice::Alpha: break;
    }
    return build_ynoid(config.alpha, config.junction_radius);
}

void emit(const RunConfig& config, const std::string& text, std::ostream& out) {
    if (config.output_path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(config.output_path, std::ios::binary);
    if (!file) {
        throw std::domain_error("cannot open output path " + config.output_path);
    }
    file << text;
}

int run_index(const RunConfig& config, std::ostream& out) {
    const YNoidGeometry geometry = make_geometry(config);
    const IndexReport report = compute_index(geometry, config.max_mode, config.tol);
    std::string text;
    switch (config.format) {
        case OutputFormat::Table: text = index_report_table(report); break;
        case OutputFormat::Csv: text = index_report_csv(report); break;
        case OutputFormat::Json: text = index_report_json(report); break;
    }
    emit(config, text, out);
    return kExitOk;
}

int run_spectrum(const RunConfig& config, std::ostream& out) {
    const YNoidGeometry geometry = make_geometry(config);
    const std::vector<SteklovMode> table = spectrum_table(geometry, config.max_mode);
    std::string text;
    switch (config.format) {
        case OutputFormat::Table: text = spectrum_text_table(geometry, table); break;
        case OutputFormat::Csv: text = spectrum_csv(geometry, table); break;
        case OutputFormat::Json: text = spectrum_json(geometry, table); break;
    }
    emit(config, text, out);
    return kExitOk;
}

int run_sweep(const RunConfig& config, std::ostream& out) {
    if (config.sweep_steps < 2) {
        std::ostringstream msg;
        msg << "sweep requires at least 2 steps, got " << config.sweep_steps;
        throw std::domain_error(msg.str());
    }
    if (!(config.sweep_min < config.sweep_max)) {
        std::ostringstream msg;
        msg << "sweep requires alpha-min < alpha-max, got " << config.sweep_min << " and "
            << config.sweep_max;
        throw std::domain_error(msg.str());
    }
    std::vector<IndexReport> rows;
    rows.reserve(static_cast<size_t>(config.sweep_steps));
    for (int k = 0; k < config.sweep_steps; ++k) {
        const double alpha = config.sweep_min + (config.sweep_max - config.sweep_min) *
                                                    static_cast<double>(k) /
                                                    static_cast<double>(config.sweep_steps - 1);
        rows.push_back(
            compute_index(build_ynoid(alpha, config.junction_radius), config.max_mode, config.tol));
    }
    std::string text;
    switch (config.format) {
        case OutputFormat::Table: text = sweep_table(rows); break;
        case OutputFormat::Csv: text = sweep_csv(rows); break;
        case OutputFormat::Json: text = sweep_json(rows); break;
    }
    emit(config, text, out);
    return kExitOk;
}

int run_verify(const RunConfig& config, std::ostream& out) {
    const YNoidGeometry geometry = make_geometry(config);
    const VerificationReport report =
        verify_geometry(geometry, config.max_mode, config.ode, config.rel_tolerance);
    std::string text;
    switch (config.format) {
        case OutputFormat::Table: text = verification_table(geometry, report); break;
        case OutputFormat::Csv: text = verification_csv(geometry, report); break;
        case OutputFormat::Json: text = verification_json(geometry, report); break;
    }
    emit(config, text, out);
    return report.passed ? kExitOk : kExitVerificationFailed;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        switch (config.command) {
            case Command::Index: return run_index(config, out);
            case Command::Spectrum: return run_spectrum(config, out);
            case Command::Sweep: return run_sweep(config, out);
            case Command::Verify: return run_verify(config, out);
        }
        throw InternalConsistencyError("unhandled command");
    } catch (const NonConvergenceError& e) {
        err << "error: " << e.what() << "\n";
        return kExitNonConvergence;
    } catch (const UnsupportedConfigurationError& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace ynoid
