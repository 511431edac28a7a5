#include "ynoid/index_form.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ynoid/errors.hpp"

namespace ynoid {

namespace {

void check_tol(double tol) {
    if (!(tol >= 0.0) || !std::isfinite(tol)) {
        std::ostringstream msg;
        msg << "tolerance must be a nonnegative finite number, got " << tol;
        throw std::domain_error(msg.str());
    }
}

bool positive_definite(const Inertia& inertia) {
    return inertia == Inertia{0, 0, 2};
}

}  // namespace

Inertia classify_quadratic(const std::array<double, 3>& coefficients, double tol) {
    check_tol(tol);
    for (double a : coefficients) {
        if (!std::isfinite(a)) {
            throw std::domain_error("quadratic form coefficients must be finite");
        }
    }
    const double a1 = coefficients[0];
    const double a2 = coefficients[1];
    const double a3 = coefficients[2];
    // Reduced matrix of sum a_i x_i^2 on the plane x1 + x2 + x3 = 0 in the
    // basis (1,0,-1), (0,1,-1): [[a1+a3, a3],[a3, a2+a3]].
    const double det = a1 * a2 + a1 * a3 + a2 * a3;
    const double trace = a1 + a2 + 2.0 * a3;

    if (det < -tol) return {1, 0, 1};
    if (det > tol) {
        if (trace < -tol) return {2, 0, 0};
        if (trace > tol) return {0, 0, 2};
        throw InternalConsistencyError(
            "quadratic form with positive determinant and vanishing trace cannot occur for a "
            "real symmetric matrix");
    }
    if (trace < -tol) return {1, 1, 0};
    if (trace > tol) return {0, 1, 1};
    return {0, 2, 0};
}

int fixed_boundary_index(const FaceSpec& face) {
    return face.classification == FaceClass::NonGraphical ? 1 : 0;
}

ModeContribution mode_contribution(const YNoidGeometry& geometry, const SteklovMode& mode,
                                   double tol) {
    check_tol(tol);
    ModeContribution contribution;
    contribution.mode = mode.mode;
    contribution.multiplicity = mode.multiplicity;

    std::array<double, 3> scaled{};
    double largest = 0.0;
    for (int i = 0; i < 3; ++i) {
        if (!mode.faces[i].delta.has_value()) {
            std::ostringstream msg;
            msg << "mode " << mode.mode << " has a kernel member on face " << i + 1
                << "; kernel modes belong to z_space_contribution";
            throw InternalConsistencyError(msg.str());
        }
        contribution.coefficients[i] =
            *mode.faces[i].delta - geometry.faces[i].conormal_curvature;
        scaled[i] = geometry.junction_radius * contribution.coefficients[i];
        largest = std::max(largest, std::abs(scaled[i]));
    }
    // The tolerance is calibrated for O(1) dimensionless coefficients; when a
    // coefficient blows up (face 3 near the orthogonal angle) the rounding
    // noise in the determinant grows like largest^2, so widen accordingly.
    const double guard = std::max(1.0, largest);
    contribution.inertia = classify_quadratic(scaled, tol * guard * guard);
    contribution.index_contribution = contribution.multiplicity * contribution.inertia.negative;
    contribution.nullity_contribution = contribution.multiplicity * contribution.inertia.zero;
    return contribution;
}

ZContribution z_space_contribution(const YNoidGeometry& geometry, const SteklovMode& mode_zero,
                                   double tol) {
    check_tol(tol);
    if (mode_zero.mode != 0) {
        throw InternalConsistencyError("kernel members can only appear at mode 0");
    }
    int kernel_count = 0;
    int kernel_face = -1;
    for (int i = 0; i < 3; ++i) {
        if (!mode_zero.faces[i].delta.has_value()) {
            ++kernel_count;
            kernel_face = i;
        }
    }
    if (kernel_count == 0) return {};
    if (kernel_count > 1) {
        std::ostringstream msg;
        msg << "surface has " << kernel_count
            << " kernel faces at mode 0; the decomposition supports at most one";
        throw UnsupportedConfigurationError(msg.str());
    }

    // One admissible solution with vanishing boundary trace: it always pairs
    // negatively with itself (one index unit), and the residual form over the
    // other two faces decides the rest.
    double residual = 0.0;
    for (int i = 0; i < 3; ++i) {
        if (i == kernel_face) continue;
        residual += geometry.junction_radius *
                    (*mode_zero.faces[i].delta - geometry.faces[i].conormal_curvature);
    }
    ZContribution z;
    z.index = 1;
    if (std::abs(residual) <= tol) {
        z.nullity = 1;
    } else if (residual < 0.0) {
        z.index = 2;
        z.negative_residual = true;
    }
    return z;
}

IndexReport compute_index(const YNoidGeometry& geometry, int max_mode, double tol) {
    check_tol(tol);
    if (max_mode < 0) {
        std::ostringstream msg;
        msg << "max mode must be nonnegative, got " << max_mode;
        throw std::domain_error(msg.str());
    }

    IndexReport report;
    report.alpha = geometry.alpha;
    report.junction_radius = geometry.junction_radius;
    report.tag = geometry.tag;
    for (int i = 0; i < 3; ++i) {
        report.fixed_boundary[i] = fixed_boundary_index(geometry.faces[i]);
    }

    int positive_run = 0;
    bool converged = false;
    for (int n = 0; n <= max_mode; ++n) {
        const SteklovMode mode = steklov_mode(geometry, n);
        const bool has_kernel = std::any_of(mode.faces.begin(), mode.faces.end(),
                                            [](const FaceEigenvalue& f) { return !f.delta; });
        report.max_mode_used = n;
        if (has_kernel) {
            report.z = z_space_contribution(geometry, mode, tol);
            positive_run = 0;
            continue;
        }
        ModeContribution contribution = mode_contribution(geometry, mode, tol);
        report.steklov_index += contribution.index_contribution;
        report.total_nullity += contribution.nullity_contribution;
        positive_run = positive_definite(contribution.inertia) ? positive_run + 1 : 0;
        report.mode_table.push_back(std::move(contribution));
        if (positive_run >= kPositiveRunLength) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        std::ostringstream msg;
        msg << "spectrum did not turn definitely positive within " << max_mode
            << " modes (need " << kPositiveRunLength << " consecutive positive-definite modes); "
            << "trailing modes:";
        const size_t shown = std::min<size_t>(report.mode_table.size(), 5);
        for (size_t k = report.mode_table.size() - shown; k < report.mode_table.size(); ++k) {
            const ModeContribution& m = report.mode_table[k];
            msg << " n=" << m.mode << " inertia=(" << m.inertia.negative << "," << m.inertia.zero
                << "," << m.inertia.positive << ")";
        }
        throw NonConvergenceError(msg.str());
    }

    report.total_index = report.fixed_boundary[0] + report.fixed_boundary[1] +
                         report.fixed_boundary[2] + report.steklov_index + report.z.index;
    report.total_nullity += report.z.nullity;
    return report;
}

}  // namespace ynoid
