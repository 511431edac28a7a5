#include "ynoid/oracle.hpp"

#include <cmath>
#include <iostream>
#include <random>
#include <sstream>

#include "ynoid/errors.hpp"

namespace ynoid {

namespace {

constexpr double kRescaleLimit = 1e100;
constexpr double kDiskInnerCutoff = 1e-8;

struct State {
    double f = 0.0;
    double fp = 0.0;
};

void check_ode(const OdeConfig& cfg) {
    if (!(cfg.length > 0.0) || !std::isfinite(cfg.length)) {
        std::ostringstream msg;
        msg << "ode length must be a positive finite number, got " << cfg.length;
        throw std::domain_error(msg.str());
    }
    if (!(cfg.step > 0.0) || !(cfg.step <= cfg.length / 100.0)) {
        std::ostringstream msg;
        msg << "ode step must satisfy 0 < step <= length/100, got step=" << cfg.step
            << " length=" << cfg.length;
        throw std::domain_error(msg.str());
    }
}

void check_mode(int mode) {
    if (mode < 0) {
        std::ostringstream msg;
        msg << "Fourier mode must be nonnegative, got " << mode;
        throw std::domain_error(msg.str());
    }
}

// Classical RK4 over f'' = q(t) f from t0 to t1 in steps uniform pieces.
// The state is renormalized whenever it threatens to overflow; callers only
// consume scale-invariant quantities (the ratio f'/f and the sign sequence),
// reported through the optional observer called after every step.
template <class Q, class Observer>
State integrate(const Q& q, double t0, double t1, State y, long steps, Observer&& observe) {
    const double h = (t1 - t0) / static_cast<double>(steps);
    double t = t0;
    for (long k = 0; k < steps; ++k) {
        const State k1{y.fp, q(t) * y.f};
        const State y2{y.f + 0.5 * h * k1.f, y.fp + 0.5 * h * k1.fp};
        const State k2{y2.fp, q(t + 0.5 * h) * y2.f};
        const State y3{y.f + 0.5 * h * k2.f, y.fp + 0.5 * h * k2.fp};
        const State k3{y3.fp, q(t + 0.5 * h) * y3.f};
        const State y4{y.f + h * k3.f, y.fp + h * k3.fp};
        const State k4{y4.fp, q(t + h) * y4.f};
        y.f += h / 6.0 * (k1.f + 2.0 * k2.f + 2.0 * k3.f + k4.f);
        y.fp += h / 6.0 * (k1.fp + 2.0 * k2.fp + 2.0 * k3.fp + k4.fp);
        t = t0 + (t1 - t0) * static_cast<double>(k + 1) / static_cast<double>(steps);
        double rescale = 1.0;
        const double magnitude = std::max(std::abs(y.f), std::abs(y.fp));
        if (magnitude > kRescaleLimit) {
            rescale = 1.0 / magnitude;
            y.f *= rescale;
            y.fp *= rescale;
        }
        observe(y, rescale);
    }
    return y;
}

long step_count(double span, double step) {
    return static_cast<long>(std::ceil(span / step - 1e-9));
}

void no_observer(const State&, double) {}

}  // namespace

double catenoid_dtn_raw(double offset, double scale, int mode, const OdeConfig& cfg) {
    check_mode(mode);
    check_ode(cfg);
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        std::ostringstream msg;
        msg << "face scale must be a positive finite number, got " << scale;
        throw std::domain_error(msg.str());
    }
    const double n = static_cast<double>(mode);
    const auto q = [offset, n](double t) {
        const double sech = 1.0 / std::cosh(t + offset);
        return n * n - 2.0 * sech * sech;
    };

    State y{1.0, 0.0};
    switch (cfg.far) {
        case FarCondition::DecayRobin:
            if (mode == 0) {
                // Logarithmic derivative of the bounded branch tanh(t+T).
                const double x = cfg.length + offset;
                const double sech = 1.0 / std::cosh(x);
                y.fp = sech * sech / std::tanh(x);
            } else {
                y.fp = -n;
            }
            break;
        case FarCondition::DirichletZero:
            y = {0.0, 1.0};
            break;
        case FarCondition::BoundedNeumann:
            y = {1.0, 0.0};
            break;
    }

    y = integrate(q, cfg.length, 0.0, y, step_count(cfg.length, cfg.step), no_observer);
    if (std::abs(y.f) < 1e-12 * std::max(1.0, std::abs(y.fp))) {
        std::cerr << "warning: near-kernel boundary trace (|f(0)| = " << std::abs(y.f)
                  << ") for offset " << offset << ", mode " << mode
                  << "; the ratio below is ill-conditioned\n";
    }
    // Outward conormal at the junction boundary points toward decreasing t.
    return -y.fp / (scale * std::cosh(offset) * y.f);
}

double catenoid_dtn(double offset, double scale, int mode, const OdeConfig& cfg) {
    const double coarse = catenoid_dtn_raw(offset, scale, mode, cfg);
    OdeConfig halved = cfg;
    halved.step = cfg.step / 2.0;
    const double fine = catenoid_dtn_raw(offset, scale, mode, halved);
    return (16.0 * fine - coarse) / 15.0;
}

double flat_dtn_raw(double radius, int mode, FlatKind kind, const OdeConfig& cfg) {
    check_mode(mode);
    check_ode(cfg);
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        std::ostringstream msg;
        msg << "face radius must be a positive finite number, got " << radius;
        throw std::domain_error(msg.str());
    }
    if (mode == 0) return 0.0;  // bounded branch is constant on both shapes

    // In s = ln(r/R0) the radial equation becomes g'' = n^2 g with constant
    // coefficients, so a fixed step sees no stiffness at the origin.
    const double n = static_cast<double>(mode);
    const auto q = [n](double) { return n * n; };

    if (kind == FlatKind::Disk) {
        const double s0 = std::log(kDiskInnerCutoff);
        State y{1.0, n};  // regular branch r^n
        switch (cfg.far) {
            case FarCondition::DecayRobin: break;
            case FarCondition::DirichletZero: y = {0.0, 1.0}; break;
            case FarCondition::BoundedNeumann: y = {1.0, 0.0}; break;
        }
        y = integrate(q, s0, 0.0, y, step_count(-s0, cfg.step), no_observer);
        return y.fp / (radius * y.f);
    }

    State y{1.0, -n};  // decaying branch r^{-n}
    switch (cfg.far) {
        case FarCondition::DecayRobin: break;
        case FarCondition::DirichletZero: y = {0.0, 1.0}; break;
        case FarCondition::BoundedNeumann: y = {1.0, 0.0}; break;
    }
    y = integrate(q, cfg.length, 0.0, y, step_count(cfg.length, cfg.step), no_observer);
    // Outward conormal on the complement points toward decreasing r.
    return -y.fp / (radius * y.f);
}

double flat_dtn(double radius, int mode, FlatKind kind, const OdeConfig& cfg) {
    const double coarse = flat_dtn_raw(radius, mode, kind, cfg);
    OdeConfig halved = cfg;
    halved.step = cfg.step / 2.0;
    const double fine = flat_dtn_raw(radius, mode, kind, halved);
    return (16.0 * fine - coarse) / 15.0;
}

int dirichlet_negative_count(const FaceSpec& face, int max_mode, const OdeConfig& cfg) {
    if (max_mode < 0) {
        std::ostringstream msg;
        msg << "max mode must be nonnegative, got " << max_mode;
        throw std::domain_error(msg.str());
    }
    check_ode(cfg);
    if (face.classification == FaceClass::Planar) return 0;
    const auto& cat = std::get<CatenoidalFace>(face.shape);

    int total = 0;
    for (int mode = 0; mode <= max_mode; ++mode) {
        const double n = static_cast<double>(mode);
        const auto q = [&cat, n](double t) {
            const double sech = 1.0 / std::cosh(t + cat.offset);
            return -(2.0 * sech * sech - n * n);
        };

        int zeros = 0;
        bool clean_end = false;
        double length = cfg.length;
        for (int attempt = 0; attempt < 4 && !clean_end; ++attempt, length += 10.0) {
            zeros = 0;
            int last_sign = 0;
            double running_max = 0.0;
            State end = integrate(
                q, 0.0, length, State{0.0, 1.0}, step_count(length, cfg.step),
                [&](const State& y, double rescale) {
                    running_max = std::max(running_max * rescale, std::abs(y.f));
                    const int sign = y.f > 0.0 ? 1 : (y.f < 0.0 ? -1 : 0);
                    if (sign != 0 && last_sign != 0 && sign != last_sign) ++zeros;
                    if (sign != 0) last_sign = sign;
                });
            // A vanishing endpoint means a zero sits on the artificial far
            // boundary; push the boundary out and recount.
            clean_end = std::abs(end.f) > 1e-9 * running_max;
        }
        if (!clean_end) {
            std::ostringstream msg;
            msg << "oscillation count did not stabilize: the mode-" << mode
                << " solution keeps vanishing at the far boundary up to length " << length - 10.0;
            throw NonConvergenceError(msg.str());
        }
        // The final sign change, if any, is the crossing into the far
        // boundary region; every counted crossing is interior because the
        // endpoint was just checked to be clearly nonzero.
        total += zeros * (mode == 0 ? 1 : 2);
    }
    return total;
}

Inertia inertia_by_eigenvalues(const std::array<double, 3>& coefficients, double tol) {
    if (!(tol >= 0.0) || !std::isfinite(tol)) {
        std::ostringstream msg;
        msg << "tolerance must be a nonnegative finite number, got " << tol;
        throw std::domain_error(msg.str());
    }
    const double a11 = coefficients[0] + coefficients[2];
    const double a22 = coefficients[1] + coefficients[2];
    const double a12 = coefficients[2];
    const double trace = a11 + a22;
    const double det = a11 * a22 - a12 * a12;
    double disc = trace * trace - 4.0 * det;
    if (disc < 0.0) disc = 0.0;  // symmetric matrix: clamp rounding noise
    const double root = std::sqrt(disc);
    const double eigen[2] = {0.5 * (trace - root), 0.5 * (trace + root)};

    Inertia inertia;
    for (double lambda : eigen) {
        if (lambda < -tol) {
            ++inertia.negative;
        } else if (lambda > tol) {
            ++inertia.positive;
        } else {
            ++inertia.zero;
        }
    }
    return inertia;
}

VerificationReport verify_geometry(const YNoidGeometry& geometry, int max_mode,
                                   const OdeConfig& cfg, double rel_tolerance) {
    if (!(rel_tolerance > 0.0) || !std::isfinite(rel_tolerance)) {
        std::ostringstream msg;
        msg << "relative tolerance must be a positive finite number, got " << rel_tolerance;
        throw std::domain_error(msg.str());
    }
    const std::vector<SteklovMode> table = spectrum_table(geometry, max_mode);

    VerificationReport report;
    report.rel_tolerance = rel_tolerance;

    for (const SteklovMode& row : table) {
        for (int i = 0; i < 3; ++i) {
            if (!row.faces[i].delta.has_value()) continue;  // kernel member: no eigenvalue
            const double closed = *row.faces[i].delta;
            double numeric = 0.0;
            const FaceShape& shape = geometry.faces[i].shape;
            if (const auto* cat = std::get_if<CatenoidalFace>(&shape)) {
                numeric = catenoid_dtn(cat->offset, cat->scale, row.mode, cfg);
            } else if (const auto* disk = std::get_if<DiskFace>(&shape)) {
                numeric = flat_dtn(disk->radius, row.mode, FlatKind::Disk, cfg);
            } else {
                numeric = flat_dtn(std::get<PlaneComplementFace>(shape).radius, row.mode,
                                   FlatKind::PlaneComplement, cfg);
            }
            // Mixed metric: relative for values above 1, absolute below.  A
            // pure relative error would report 100% on rows whose eigenvalue
            // is exactly zero (mode 1 of an orthogonal face) even though the
            // numeric value sits at the rounding floor.
            const double denom = std::max({1.0, std::abs(closed), std::abs(numeric)});
            const double rel = std::abs(numeric - closed) / denom;
            report.steklov.push_back({row.mode, i, closed, numeric, rel});
            report.worst_rel_error = std::max(report.worst_rel_error, rel);
        }
    }

    for (int i = 0; i < 3; ++i) {
        report.dirichlet.push_back({i, fixed_boundary_index(geometry.faces[i]),
                                    dirichlet_negative_count(geometry.faces[i], max_mode, cfg)});
    }

    // Cross-check the two inertia classifiers on seeded random triples,
    // skipping samples inside the tolerance band where both legitimately
    // report a degenerate class that tiny rounding can flip.
    std::mt19937 rng(1729);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    const double band = 100.0 * kDefaultTol;
    for (int sample = 0; sample < 10000; ++sample) {
        const std::array<double, 3> a{coeff(rng), coeff(rng), coeff(rng)};
        const double det = a[0] * a[1] + a[0] * a[2] + a[1] * a[2];
        const double trace = a[0] + a[1] + 2.0 * a[2];
        if (std::abs(det) < band || std::abs(trace) < band) continue;
        ++report.inertia_samples;
        if (!(classify_quadratic(a, kDefaultTol) == inertia_by_eigenvalues(a, kDefaultTol))) {
            ++report.inertia_mismatches;
        }
    }

    bool dirichlet_ok = true;
    for (const DirichletCheck& check : report.dirichlet) {
        dirichlet_ok = dirichlet_ok && check.closed_form == check.numeric;
    }
    report.passed = report.worst_rel_error <= rel_tolerance && dirichlet_ok &&
                    report.inertia_mismatches == 0;
    return report;
}

}  // namespace ynoid
