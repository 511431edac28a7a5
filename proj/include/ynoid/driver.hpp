#pragma once

#include <iosfwd>
#include <string>

#include "ynoid/reports.hpp"

namespace ynoid {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInternal = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitVerificationFailed = 3;
inline constexpr int kExitNonConvergence = 4;

enum class Command { Index, Spectrum, Sweep, Verify };
enum class OutputFormat { Table, Csv, Json };
enum class SurfaceChoice { Alpha, YCatenoid, PseudoYCatenoid, PiOverSix };

struct RunConfig {
    Command command = Command::Index;
    SurfaceChoice surface = SurfaceChoice::Alpha;
    double alpha = 0.0;  // radians; used when surface == Alpha
    double junction_radius = kDefaultJunctionRadius;
    int max_mode = kDefaultMaxMode;
    double tol = kDefaultTol;
    OdeConfig ode{};
    double rel_tolerance = 1e-6;  // verify
    double sweep_min = 0.0;       // sweep grid, endpoints inclusive
    double sweep_max = 0.0;
    int sweep_steps = 0;
    OutputFormat format = OutputFormat::Table;
    std::string output_path;  // empty = write to `out`
};

// Execute one command, writing the rendered report to `out` (or the
// configured file) and diagnostics to `err`.  Returns the process exit
// status: 0 on success, 2 for configuration errors, 3 when verification
// fails, 4 on non-convergence.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace ynoid
