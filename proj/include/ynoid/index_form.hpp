#pragma once

#include <array>
#include <vector>

#include "ynoid/spectrum.hpp"

namespace ynoid {

// Classification tolerance on the dimensionless quantities built from
// c * (delta_i - beta_i).  Overridable per call and via the CLI.
inline constexpr double kDefaultTol = 1e-9;

// How many consecutive positive-definite modes end the mode recursion.
inline constexpr int kPositiveRunLength = 3;

// Signature (negative, zero, positive) of a symmetric 2x2 form.
struct Inertia {
    int negative = 0;
    int zero = 0;
    int positive = 0;

    bool operator==(const Inertia&) const = default;
};

// Inertia of the quadratic form sum_i a_i x_i^2 restricted to the plane
// x_1 + x_2 + x_3 = 0, decided through the reduced matrix
// [[a1+a3, a3], [a3, a2+a3]] via its determinant and trace.  Entries within
// tol of zero count as zero.  Throws InternalConsistencyError on the branch
// det > tol with |trace| <= tol, which no real symmetric matrix attains.
Inertia classify_quadratic(const std::array<double, 3>& coefficients, double tol);

// One Fourier mode's contribution to the junction eigenvalue problem.
struct ModeContribution {
    int mode = 0;
    int multiplicity = 1;
    std::array<double, 3> coefficients{};  // a_i = delta_i - beta_i, units 1/length
    Inertia inertia;
    int index_contribution = 0;    // multiplicity * negative count
    int nullity_contribution = 0;  // multiplicity * zero count
};

// Contribution of the space spanned by kernel members (admissible solutions
// with vanishing boundary trace).
struct ZContribution {
    int index = 0;
    int nullity = 0;
    // Set when the residual form over the non-kernel faces is negative, which
    // contributes an extra index unit; does not occur inside the family but
    // the rule is implemented in full.
    bool negative_residual = false;
};

struct IndexReport {
    double alpha = 0.0;
    double junction_radius = 0.0;
    SurfaceTag tag = SurfaceTag::Generic;
    std::array<int, 3> fixed_boundary{};  // per-face index with Dirichlet junction data
    int steklov_index = 0;                // sum of mode contributions
    ZContribution z;
    std::vector<ModeContribution> mode_table;
    int max_mode_used = 0;  // last Fourier mode actually computed
    int total_index = 0;
    int total_nullity = 0;
};

// Morse index of one face with its junction boundary held fixed: 1 for a
// NonGraphical face, 0 for Graphical and Planar faces.
int fixed_boundary_index(const FaceSpec& face);

// Contribution of one non-kernel mode: classify the form with coefficients
// c * (delta_i - beta_i) on the zero-sum plane.  Throws
// InternalConsistencyError if the mode contains a kernel member (those are
// routed to z_space_contribution instead).
ModeContribution mode_contribution(const YNoidGeometry& geometry, const SteklovMode& mode,
                                   double tol = kDefaultTol);

// Kernel-member bookkeeping at mode 0.  No kernel face: (0, 0).  Exactly one:
// index 1, plus nullity 1 when the residual sum of c * (delta_i - beta_i)
// over the other two faces vanishes within tol (nullity 0 when positive, one
// more index unit when negative).  Throws UnsupportedConfigurationError if
// two or more faces are kernel members.
ZContribution z_space_contribution(const YNoidGeometry& geometry, const SteklovMode& mode_zero,
                                   double tol = kDefaultTol);

// Full index/nullity assembly: fixed-boundary contributions, per-mode Steklov
// contributions until kPositiveRunLength consecutive positive-definite modes,
// and the kernel-space correction.  Throws NonConvergenceError when the
// positive run is not reached by max_mode.
IndexReport compute_index(const YNoidGeometry& geometry, int max_mode = kDefaultMaxMode,
                          double tol = kDefaultTol);

}  // namespace ynoid
