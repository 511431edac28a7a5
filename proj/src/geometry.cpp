#include "ynoid/geometry.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ynoid {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kPiOverThree = kPi / 3.0;
constexpr double kPiOverSix = kPi / 6.0;
constexpr double kTwoPiOverThree = 2.0 * kPi / 3.0;

void check_junction_radius(double junction_radius) {
    if (!(junction_radius > 0.0) || !std::isfinite(junction_radius)) {
        std::ostringstream msg;
        msg << "junction radius must be a positive finite number, got " << junction_radius;
        throw std::domain_error(msg.str());
    }
}

// Catenoidal faces are classified by the sign of cos(alpha_i): positive means
// the face curves against the chosen normal (one bound state with fixed
// boundary), negative means it is a graph over the vertical axis.  The band
// |cos| <= kPlanarEps (the orthogonal face at alpha = pi/6) is graphical.
FaceClass classify_catenoidal(double cos_angle) {
    return cos_angle > kPlanarEps ? FaceClass::NonGraphical : FaceClass::Graphical;
}

FaceSpec make_catenoidal_face(double angle, double junction_radius) {
    const double cos_angle = std::cos(angle);
    if (std::abs(cos_angle) >= 1.0) {
        std::ostringstream msg;
        msg << "contact angle " << angle
            << " is too close to a flat limit to represent the catenoidal offset; "
               "use build_y_catenoid or the exact pseudo branch";
        throw std::domain_error(msg.str());
    }
    FaceSpec face;
    const double offset = std::atanh(-cos_angle);
    face.shape = CatenoidalFace{offset, junction_radius / std::cosh(offset)};
    face.contact_angle = angle;
    face.conormal_curvature = -cos_angle / junction_radius;
    face.classification = classify_catenoidal(cos_angle);
    return face;
}

}  // namespace

std::array<double, 3> contact_angles(double alpha) {
    if (!(alpha > kAngleEps) || alpha > kPiOverThree + kAngleEps) {
        std::ostringstream msg;
        msg << "alpha must lie in (0, pi/3], got " << alpha;
        throw std::domain_error(msg.str());
    }
    if (alpha > kPiOverThree) alpha = kPiOverThree;
    return {alpha, alpha + kTwoPiOverThree, alpha - kTwoPiOverThree};
}

FaceOffset face_offset(double contact_angle) {
    const double cos_angle = std::cos(contact_angle);
    if (std::abs(cos_angle - 1.0) <= kPlanarEps) {
        return {FaceOffset::Kind::DiskLimit, 0.0};
    }
    if (std::abs(cos_angle + 1.0) <= kPlanarEps) {
        return {FaceOffset::Kind::PlaneComplementLimit, 0.0};
    }
    return {FaceOffset::Kind::Catenoidal, std::atanh(-cos_angle)};
}

YNoidGeometry build_ynoid(double alpha, double junction_radius) {
    check_junction_radius(junction_radius);
    std::array<double, 3> angles = contact_angles(alpha);
    alpha = angles[0];

    SurfaceTag tag = SurfaceTag::Generic;
    if (std::abs(alpha - kPiOverThree) <= kAngleEps) {
        tag = SurfaceTag::PseudoYCatenoid;
        angles = {kPiOverThree, kPi, -kPiOverThree};
        alpha = kPiOverThree;
    } else if (std::abs(alpha - kPiOverSix) <= kAngleEps) {
        tag = SurfaceTag::PiOverSix;
        angles = {kPiOverSix, kPiOverSix + kTwoPiOverThree, kPiOverSix - kTwoPiOverThree};
        alpha = kPiOverSix;
    }

    YNoidGeometry geometry;
    geometry.alpha = alpha;
    geometry.junction_radius = junction_radius;
    geometry.tag = tag;
    for (int i = 0; i < 3; ++i) {
        if (tag == SurfaceTag::PseudoYCatenoid && i == 1) {
            FaceSpec face;
            face.shape = PlaneComplementFace{junction_radius};
            face.contact_angle = angles[1];
            face.conormal_curvature = 1.0 / junction_radius;
            face.classification = FaceClass::Planar;
            geometry.faces[1] = face;
        } else {
            geometry.faces[i] = make_catenoidal_face(angles[i], junction_radius);
        }
    }
    return geometry;
}

YNoidGeometry build_y_catenoid(double junction_radius) {
    check_junction_radius(junction_radius);
    const double offset = std::log(std::sqrt(3.0));

    YNoidGeometry geometry;
    geometry.alpha = 0.0;
    geometry.junction_radius = junction_radius;
    geometry.tag = SurfaceTag::YCatenoid;

    FaceSpec disk;
    disk.shape = DiskFace{junction_radius};
    disk.contact_angle = 0.0;
    disk.conormal_curvature = -1.0 / junction_radius;
    disk.classification = FaceClass::Planar;
    geometry.faces[0] = disk;

    for (int i = 1; i < 3; ++i) {
        FaceSpec face;
        face.shape = CatenoidalFace{offset, junction_radius / std::cosh(offset)};
        face.contact_angle = (i == 1 ? kTwoPiOverThree : -kTwoPiOverThree);
        face.conormal_curvature = 0.5 / junction_radius;
        face.classification = FaceClass::Graphical;
        geometry.faces[i] = face;
    }
    return geometry;
}

const char* to_string(SurfaceTag tag) {
    switch (tag) {
        case SurfaceTag::Generic: return "generic";
        case SurfaceTag::YCatenoid: return "y_catenoid";
        case SurfaceTag::PseudoYCatenoid: return "pseudo_y_catenoid";
        case SurfaceTag::PiOverSix: return "pi_over_six";
    }
    return "unknown";
}

const char* to_string(FaceClass cls) {
    switch (cls) {
        case FaceClass::Graphical: return "graphical";
        case FaceClass::NonGraphical: return "non_graphical";
        case FaceClass::Planar: return "planar";
    }
    return "unknown";
}

}  // namespace ynoid
