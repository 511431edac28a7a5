#pragma once

#include <optional>
#include <vector>

#include "ynoid/geometry.hpp"

namespace ynoid {

// Below this the catenoidal mode-0 eigenvalue is treated as an exact kernel
// member rather than a huge finite value.
inline constexpr double kOffsetEps = 1e-9;

inline constexpr int kDefaultMaxMode = 64;

// Which solution branch of the radial equation is meant: Decaying picks the
// branch that stays in the weighted function space (bounded on catenoidal
// faces, regular at the origin on the disk, decaying at infinity on the plane
// complement); Growing is the other one.
enum class Branch { Decaying, Growing };

// Steklov eigenvalue of one face at one Fourier mode.  An empty value marks a
// kernel member (mode 0 of a catenoidal face with offset ~ 0), where the
// admissible solution has vanishing boundary trace and no eigenvalue exists.
struct FaceEigenvalue {
    std::optional<double> delta;
    bool admissible = true;
};

struct SteklovMode {
    int mode = 0;          // Fourier index n
    int multiplicity = 1;  // 1 for n = 0, else 2 (cos and sin)
    std::array<FaceEigenvalue, 3> faces;
};

// Closed-form Steklov eigenvalue of a catenoidal face (profile cosh(t+offset),
// boundary at t = 0).  Empty for mode 0 when |offset| <= kOffsetEps.
// Requires scale > 0 and mode >= 0.
std::optional<double> catenoid_steklov(double offset, double scale, int mode);

// Steklov eigenvalue of a flat face: mode / radius, the same for the disk and
// the plane complement.  Requires radius > 0 and mode >= 0.
double flat_steklov(double radius, int mode);

// Whether the given solution branch lies in the weighted space the eigenvalue
// problem is posed on.  Decaying is admissible for every face shape; Growing
// never is (unbounded on catenoidal faces, singular at the origin on the
// disk, logarithmic resp. polynomial growth on the plane complement).
bool weighted_admissible(const FaceShape& shape, int mode, Branch branch);

// Closed-form spectrum of all three faces for modes 0..max_mode.
std::vector<SteklovMode> spectrum_table(const YNoidGeometry& geometry,
                                        int max_mode = kDefaultMaxMode);

// Single mode of the table above.
SteklovMode steklov_mode(const YNoidGeometry& geometry, int mode);

}  // namespace ynoid
