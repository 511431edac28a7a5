#pragma once

#include <array>
#include <vector>

#include "ynoid/index_form.hpp"

namespace ynoid {

// Far-end boundary condition for the shooting integrations.  DecayRobin ties
// f'(L) to the decaying branch's logarithmic derivative (exact for flat
// faces, exponentially accurate for catenoidal ones); DirichletZero and
// BoundedNeumann are cruder truncations kept for cross-checks.
enum class FarCondition { DecayRobin, DirichletZero, BoundedNeumann };

struct OdeConfig {
    double length = 30.0;  // truncation L of the half-infinite coordinate
    double step = 1e-3;    // RK4 step h; must satisfy 0 < step <= length / 100
    FarCondition far = FarCondition::DecayRobin;
};

// Numeric Dirichlet-to-Neumann eigenvalue of a catenoidal face (offset T,
// scale c_i) at the given Fourier mode: integrate the mode equation
// f'' = (n^2 - 2 sech^2(t+T)) f backward from t = L and form the outward
// normal-derivative ratio at the junction boundary.  Single fixed-step RK4
// pass at cfg.step; no extrapolation.
double catenoid_dtn_raw(double offset, double scale, int mode, const OdeConfig& cfg = {});

// One Richardson halving step on top of catenoid_dtn_raw:
// (16 * raw(h/2) - raw(h)) / 15.
double catenoid_dtn(double offset, double scale, int mode, const OdeConfig& cfg = {});

enum class FlatKind { Disk, PlaneComplement };

// Numeric DtN eigenvalue of a flat face at the given mode, integrating the
// radial equation in log-radius.  Raw single pass resp. one Richardson step.
double flat_dtn_raw(double radius, int mode, FlatKind kind, const OdeConfig& cfg = {});
double flat_dtn(double radius, int mode, FlatKind kind, const OdeConfig& cfg = {});

// Fixed-boundary Morse index of one face by Sturm oscillation: for each mode
// n <= max_mode shoot f(0) = 0, f'(0) = 1 outward and count interior zeros,
// summed over modes with multiplicity.  Planar faces return 0 without
// integrating.  Retries with a longer domain (up to 3 times) when a zero
// lands on the far end, then throws NonConvergenceError.
int dirichlet_negative_count(const FaceSpec& face, int max_mode, const OdeConfig& cfg = {});

// Inertia of the constrained form by explicitly diagonalizing the reduced
// 2x2 matrix: eigenvalues (tr +- sqrt(tr^2 - 4 det)) / 2, counted against
// tol.  Independent cross-check of classify_quadratic.
Inertia inertia_by_eigenvalues(const std::array<double, 3>& coefficients, double tol);

struct SteklovCheck {
    int mode = 0;
    int face = 0;  // 0-based
    double closed_form = 0.0;
    double numeric = 0.0;
    // |numeric - closed_form| / max(1, |closed_form|, |numeric|): relative
    // above magnitude 1, absolute below so exact-zero eigenvalues compare
    // cleanly.
    double rel_error = 0.0;
};

struct DirichletCheck {
    int face = 0;
    int closed_form = 0;  // fixed_boundary_index
    int numeric = 0;      // dirichlet_negative_count
};

struct VerificationReport {
    std::vector<SteklovCheck> steklov;
    std::vector<DirichletCheck> dirichlet;
    int inertia_samples = 0;
    int inertia_mismatches = 0;
    double worst_rel_error = 0.0;
    double rel_tolerance = 0.0;
    bool passed = false;
};

// Compare every closed-form eigenvalue (modes 0..max_mode, kernel members
// skipped) against the shooting oracle, the per-face fixed-boundary indices
// against Sturm counts, and the form classifier against the eigenvalue
// version on seeded random coefficient triples.
VerificationReport verify_geometry(const YNoidGeometry& geometry, int max_mode,
                                   const OdeConfig& cfg = {}, double rel_tolerance = 1e-6);

}  // namespace ynoid
