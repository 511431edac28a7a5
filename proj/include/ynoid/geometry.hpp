#pragma once

#include <array>
#include <optional>
#include <string>
#include <variant>

namespace ynoid {

// Tolerances used when snapping a requested surface onto the special members
// of the family and when classifying faces.
inline constexpr double kAngleEps = 1e-9;    // on alpha itself
inline constexpr double kPlanarEps = 1e-12;  // on |cos(alpha_i)| resp. |cos(alpha_i)+1|

// Default junction-circle radius 2/sqrt(3), the normalization at which the
// catenoidal faces of the Y-catenoid have unit scale.
inline constexpr double kDefaultJunctionRadius = 1.1547005383792515;

enum class SurfaceTag { Generic, YCatenoid, PseudoYCatenoid, PiOverSix };

// Sign of the second fundamental form relative to the chosen unit normal,
// which is what the fixed-boundary index depends on.
enum class FaceClass { Graphical, NonGraphical, Planar };

// Half of a catenoid, parametrized over t in [0, inf) with profile
// cosh(t + offset); scale * cosh(offset) is the junction radius.
struct CatenoidalFace {
    double offset = 0.0;  // T_i
    double scale = 1.0;   // c_i
};

// Flat disk of the given radius, meeting the junction circle at its rim.
struct DiskFace {
    double radius = 1.0;  // R0
};

// Complement of a disk in the plane: the unbounded flat face.
struct PlaneComplementFace {
    double radius = 1.0;  // R0
};

using FaceShape = std::variant<CatenoidalFace, DiskFace, PlaneComplementFace>;

struct FaceSpec {
    FaceShape shape;
    double contact_angle = 0.0;        // alpha_i, radians
    double conormal_curvature = 0.0;   // beta_i = <H_Gamma, eta_i>, units 1/length
    FaceClass classification = FaceClass::Graphical;

    bool is_catenoidal() const { return std::holds_alternative<CatenoidalFace>(shape); }
    bool is_flat() const { return !is_catenoidal(); }
};

struct YNoidGeometry {
    double alpha = 0.0;            // family parameter, radians; 0 for the Y-catenoid limit
    double junction_radius = 0.0;  // c
    std::array<FaceSpec, 3> faces;
    SurfaceTag tag = SurfaceTag::Generic;
};

// Result of solving cos(alpha_i) = -tanh(T_i) for one face: either a finite
// catenoidal offset or one of the two flat limits.
struct FaceOffset {
    enum class Kind { Catenoidal, DiskLimit, PlaneComplementLimit };
    Kind kind = Kind::Catenoidal;
    double offset = 0.0;  // meaningful only for Kind::Catenoidal
};

// The three contact angles (alpha, alpha + 2pi/3, alpha - 2pi/3) of the member
// with parameter alpha in (0, pi/3].  Throws std::domain_error outside that
// interval (past kAngleEps).
std::array<double, 3> contact_angles(double alpha);

// Offset T_i with cos(alpha_i) = -tanh(T_i), or the flat limit when
// cos(alpha_i) is within kPlanarEps of +-1.
FaceOffset face_offset(double contact_angle);

// Member of the one-parameter family with parameter alpha in (0, pi/3] and the
// given junction radius (> 0).  Snaps to the PiOverSix / PseudoYCatenoid tags
// within kAngleEps.
YNoidGeometry build_ynoid(double alpha, double junction_radius = kDefaultJunctionRadius);

// The alpha -> 0 limit: flat disk plus two congruent catenoidal faces.
YNoidGeometry build_y_catenoid(double junction_radius = kDefaultJunctionRadius);

const char* to_string(SurfaceTag tag);
const char* to_string(FaceClass cls);

}  // namespace ynoid
