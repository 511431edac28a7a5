#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>

#include "doctest.h"
#include "ynoid/geometry.hpp"

using namespace ynoid;

namespace {

constexpr double kPi = 3.14159265358979323846;
const double kSqrt3 = std::sqrt(3.0);
const double kLogSqrt3 = std::log(kSqrt3);

const CatenoidalFace& catenoidal(const FaceSpec& face) {
    return std::get<CatenoidalFace>(face.shape);
}

}  // namespace

TEST_CASE("contact angles are alpha and alpha +- 2pi/3") {
    const auto angles = contact_angles(0.4);
    CHECK(angles[0] == doctest::Approx(0.4).epsilon(1e-15));
    CHECK(angles[1] == doctest::Approx(0.4 + 2.0 * kPi / 3.0).epsilon(1e-15));
    CHECK(angles[2] == doctest::Approx(0.4 - 2.0 * kPi / 3.0).epsilon(1e-15));
}

TEST_CASE("contact angles reject parameters outside (0, pi/3]") {
    CHECK_THROWS_AS(contact_angles(0.0), std::domain_error);
    CHECK_THROWS_AS(contact_angles(-0.2), std::domain_error);
    CHECK_THROWS_AS(contact_angles(5e-10), std::domain_error);
    CHECK_THROWS_AS(contact_angles(kPi / 3.0 + 1e-6), std::domain_error);
    CHECK_THROWS_AS(contact_angles(std::nan("")), std::domain_error);
    // Inside the snap band the value clamps onto pi/3.
    CHECK(contact_angles(kPi / 3.0 + 5e-10)[0] == kPi / 3.0);
    const char* expected = "alpha must lie in (0, pi/3]";
    try {
        contact_angles(2.0);
        FAIL("expected a domain error");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find(expected) != std::string::npos);
    }
}

TEST_CASE("face offset solves cos(alpha) = -tanh(T) and knows the flat limits") {
    const FaceOffset finite = face_offset(2.0 * kPi / 3.0);
    REQUIRE(finite.kind == FaceOffset::Kind::Catenoidal);
    CHECK(finite.offset == doctest::Approx(kLogSqrt3).epsilon(1e-15));
    CHECK(std::cos(2.0 * kPi / 3.0) == doctest::Approx(-std::tanh(finite.offset)).epsilon(1e-15));

    CHECK(face_offset(1e-7).kind == FaceOffset::Kind::DiskLimit);
    CHECK(face_offset(kPi).kind == FaceOffset::Kind::PlaneComplementLimit);
    CHECK(face_offset(kPi / 2.0).kind == FaceOffset::Kind::Catenoidal);
}

TEST_CASE("generic member satisfies the defining relations on every face") {
    const double alpha = kPi / 4.0;
    const YNoidGeometry geometry = build_ynoid(alpha);
    const double c = geometry.junction_radius;
    CHECK(geometry.tag == SurfaceTag::Generic);
    CHECK(geometry.alpha == alpha);
    for (int i = 0; i < 3; ++i) {
        const FaceSpec& face = geometry.faces[i];
        const CatenoidalFace& cat = catenoidal(face);
        CHECK(std::cos(face.contact_angle) ==
              doctest::Approx(-std::tanh(cat.offset)).epsilon(1e-14));
        CHECK(cat.scale * std::cosh(cat.offset) == doctest::Approx(c).epsilon(1e-12));
        CHECK(face.conormal_curvature ==
              doctest::Approx(-std::cos(face.contact_angle) / c).epsilon(1e-14));
    }
}

TEST_CASE("classification splits at the orthogonal angle") {
    auto count = [](const YNoidGeometry& g, FaceClass cls) {
        int n = 0;
        for (const FaceSpec& face : g.faces) {
            if (face.classification == cls) ++n;
        }
        return n;
    };
    for (double alpha : {0.05, 0.2, 0.4, 0.5}) {
        const YNoidGeometry g = build_ynoid(alpha);
        CHECK(count(g, FaceClass::NonGraphical) == 1);
        CHECK(count(g, FaceClass::Planar) == 0);
    }
    for (double alpha : {0.55, 0.7, 0.9, 1.02}) {
        const YNoidGeometry g = build_ynoid(alpha);
        CHECK(count(g, FaceClass::NonGraphical) == 2);
        CHECK(count(g, FaceClass::Planar) == 0);
    }
    // The orthogonal face at alpha = pi/6 falls in the graphical band.
    const YNoidGeometry pi6 = build_ynoid(kPi / 6.0);
    CHECK(pi6.faces[2].classification == FaceClass::Graphical);
    CHECK(count(pi6, FaceClass::NonGraphical) == 1);
}

TEST_CASE("conormal curvatures are ordered beta_1 < beta_3 < beta_2") {
    for (int k = 1; k <= 50; ++k) {
        const double alpha = 0.02 + (kPi / 3.0 - 0.04) * k / 51.0;
        const YNoidGeometry g = build_ynoid(alpha);
        const double b1 = g.faces[0].conormal_curvature;
        const double b2 = g.faces[1].conormal_curvature;
        const double b3 = g.faces[2].conormal_curvature;
        CHECK(b1 < b3);
        CHECK(b3 < b2);
        CHECK(b1 < 0.0);
        CHECK(b2 > 0.0);
        if (alpha < kPi / 6.0 - 1e-3) CHECK(b3 > 0.0);
        if (alpha > kPi / 6.0 + 1e-3) CHECK(b3 < 0.0);
    }
}

TEST_CASE("special members snap onto their tags") {
    const YNoidGeometry pi6 = build_ynoid(kPi / 6.0 + 5e-10);
    CHECK(pi6.tag == SurfaceTag::PiOverSix);
    CHECK(pi6.alpha == kPi / 6.0);
    CHECK(std::abs(catenoidal(pi6.faces[2]).offset) < 1e-9);

    const YNoidGeometry pseudo = build_ynoid(kPi / 3.0);
    CHECK(pseudo.tag == SurfaceTag::PseudoYCatenoid);
    CHECK(std::holds_alternative<PlaneComplementFace>(pseudo.faces[1].shape));
    CHECK(pseudo.faces[1].classification == FaceClass::Planar);
    CHECK(std::get<PlaneComplementFace>(pseudo.faces[1].shape).radius ==
          pseudo.junction_radius);
    CHECK(catenoidal(pseudo.faces[0]).offset == doctest::Approx(-kLogSqrt3).epsilon(1e-14));
    CHECK(catenoidal(pseudo.faces[2]).offset == doctest::Approx(-kLogSqrt3).epsilon(1e-14));

    // Close to pi/3 but outside the snap band: still all catenoidal.
    const YNoidGeometry near = build_ynoid(kPi / 3.0 - 1e-7);
    CHECK(near.tag == SurfaceTag::Generic);
    for (const FaceSpec& face : near.faces) {
        CHECK(face.is_catenoidal());
        CHECK(face.classification != FaceClass::Planar);
    }
}

TEST_CASE("y-catenoid carries the disk face and the documented betas") {
    const YNoidGeometry g = build_y_catenoid();
    CHECK(g.tag == SurfaceTag::YCatenoid);
    CHECK(g.alpha == 0.0);
    CHECK(g.junction_radius == doctest::Approx(2.0 / kSqrt3).epsilon(1e-15));
    CHECK(std::holds_alternative<DiskFace>(g.faces[0].shape));
    CHECK(std::get<DiskFace>(g.faces[0].shape).radius == g.junction_radius);
    CHECK(g.faces[0].classification == FaceClass::Planar);
    for (int i = 1; i < 3; ++i) {
        CHECK(catenoidal(g.faces[i]).offset == doctest::Approx(kLogSqrt3).epsilon(1e-15));
        CHECK(catenoidal(g.faces[i]).scale == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(g.faces[i].classification == FaceClass::Graphical);
    }
    CHECK(g.faces[0].conormal_curvature == doctest::Approx(-kSqrt3 / 2.0).epsilon(1e-13));
    CHECK(g.faces[1].conormal_curvature == doctest::Approx(kSqrt3 / 4.0).epsilon(1e-13));
    CHECK(g.faces[2].conormal_curvature == doctest::Approx(kSqrt3 / 4.0).epsilon(1e-13));
}

TEST_CASE("doubling the junction radius halves every conormal curvature exactly") {
    const double alpha = 0.7;
    const YNoidGeometry base = build_ynoid(alpha, 1.0);
    const YNoidGeometry doubled = build_ynoid(alpha, 2.0);
    for (int i = 0; i < 3; ++i) {
        CHECK(doubled.faces[i].conormal_curvature * 2.0 == base.faces[i].conormal_curvature);
        CHECK(catenoidal(doubled.faces[i]).offset == catenoidal(base.faces[i]).offset);
        CHECK(catenoidal(doubled.faces[i]).scale == 2.0 * catenoidal(base.faces[i]).scale);
    }

    const YNoidGeometry odd = build_ynoid(alpha, 3.7);
    for (int i = 0; i < 3; ++i) {
        CHECK(odd.faces[i].conormal_curvature * 3.7 ==
              doctest::Approx(base.faces[i].conormal_curvature).epsilon(1e-15));
    }
}

TEST_CASE("degenerate parameters are rejected with domain errors") {
    CHECK_THROWS_AS(build_ynoid(0.0), std::domain_error);
    CHECK_THROWS_AS(build_ynoid(1.2), std::domain_error);
    CHECK_THROWS_AS(build_ynoid(0.5, 0.0), std::domain_error);
    CHECK_THROWS_AS(build_ynoid(0.5, -1.0), std::domain_error);
    CHECK_THROWS_AS(build_y_catenoid(0.0), std::domain_error);
    // cos(alpha) rounds to 1 below ~1.5e-8: the offset is not representable.
    CHECK_THROWS_AS(build_ynoid(1e-8), std::domain_error);
    // Just above the floor the face is extreme but valid.
    const YNoidGeometry extreme = build_ynoid(3e-8);
    CHECK(extreme.faces[0].classification == FaceClass::NonGraphical);
    CHECK(catenoidal(extreme.faces[0]).offset < -15.0);
}

TEST_CASE("tag and class names render stably") {
    CHECK(std::string(to_string(SurfaceTag::YCatenoid)) == "y_catenoid");
    CHECK(std::string(to_string(SurfaceTag::Generic)) == "generic");
    CHECK(std::string(to_string(FaceClass::NonGraphical)) == "non_graphical");
    CHECK(std::string(to_string(FaceClass::Planar)) == "planar");
}
