#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <random>

#include "doctest.h"
#include "ynoid/errors.hpp"
#include "ynoid/oracle.hpp"

using namespace ynoid;

namespace {

const double kLogSqrt3 = std::log(std::sqrt(3.0));
const double kSqrt3 = std::sqrt(3.0);

double rel_error(double value, double reference) {
    return std::abs(value - reference) / std::max(std::abs(reference), 1e-300);
}

}  // namespace

TEST_CASE("catenoidal shooting oracle reproduces the closed-form eigenvalues") {
    const double expected[4] = {-3.0 * kSqrt3 / 4.0, kSqrt3 / 4.0, 17.0 * kSqrt3 / 20.0,
                                *catenoid_steklov(kLogSqrt3, 1.0, 3)};
    for (int mode = 0; mode < 4; ++mode) {
        const double numeric = catenoid_dtn(kLogSqrt3, 1.0, mode);
        CHECK(rel_error(numeric, expected[mode]) < 1e-9);
    }
    CHECK(rel_error(catenoid_dtn(-kLogSqrt3, 1.0, 0), 3.0 * kSqrt3 / 4.0) < 1e-9);
    CHECK(rel_error(catenoid_dtn(-kLogSqrt3, 1.0, 1), -kSqrt3 / 4.0) < 1e-9);
}

TEST_CASE("high modes integrate without overflow") {
    const double closed = *catenoid_steklov(kLogSqrt3, 1.0, 64);
    const double numeric = catenoid_dtn(kLogSqrt3, 1.0, 64);
    CHECK(std::isfinite(numeric));
    CHECK(rel_error(numeric, closed) < 1e-9);

    const double flat = flat_dtn(1.0, 64, FlatKind::Disk);
    CHECK(std::isfinite(flat));
    CHECK(rel_error(flat, 64.0) < 1e-9);
}

TEST_CASE("all three far conditions agree at the default length") {
    for (FarCondition far :
         {FarCondition::DecayRobin, FarCondition::DirichletZero, FarCondition::BoundedNeumann}) {
        OdeConfig cfg;
        cfg.far = far;
        CHECK(rel_error(catenoid_dtn(kLogSqrt3, 1.0, 1, cfg), kSqrt3 / 4.0) < 1e-8);
        CHECK(rel_error(flat_dtn(2.0, 2, FlatKind::PlaneComplement, cfg), 1.0) < 1e-8);
    }
}

TEST_CASE("flat oracle matches mode / radius and is exact at mode zero") {
    const double radius = 2.0 / kSqrt3;
    CHECK(rel_error(flat_dtn(radius, 1, FlatKind::Disk), kSqrt3 / 2.0) < 1e-9);
    CHECK(rel_error(flat_dtn(radius, 1, FlatKind::PlaneComplement), kSqrt3 / 2.0) < 1e-9);
    CHECK(flat_dtn(radius, 0, FlatKind::Disk) == 0.0);
    CHECK(flat_dtn(radius, 0, FlatKind::PlaneComplement) == 0.0);
    CHECK(flat_dtn_raw(radius, 0, FlatKind::Disk) == 0.0);
}

TEST_CASE("halving the step cuts the raw truncation error by at least 3.5x") {
    OdeConfig coarse;
    coarse.step = 0.2;
    OdeConfig fine;
    fine.step = 0.1;
    struct Spot {
        double offset;
        int mode;
    } spots[] = {{kLogSqrt3, 0}, {kLogSqrt3, 1}, {-kLogSqrt3, 0}};
    for (const Spot& spot : spots) {
        const double closed = *catenoid_steklov(spot.offset, 1.0, spot.mode);
        const double coarse_err = std::abs(catenoid_dtn_raw(spot.offset, 1.0, spot.mode, coarse) - closed);
        const double fine_err = std::abs(catenoid_dtn_raw(spot.offset, 1.0, spot.mode, fine) - closed);
        CHECK(coarse_err / fine_err >= 3.5);
    }
}

TEST_CASE("one Richardson step beats the raw pass") {
    OdeConfig cfg;
    cfg.step = 0.2;
    const double closed = *catenoid_steklov(kLogSqrt3, 1.0, 1);
    const double raw_err = std::abs(catenoid_dtn_raw(kLogSqrt3, 1.0, 1, cfg) - closed);
    const double rich_err = std::abs(catenoid_dtn(kLogSqrt3, 1.0, 1, cfg) - closed);
    CHECK(rich_err < raw_err / 10.0);
}

TEST_CASE("doubling the scale halves the numeric eigenvalue exactly") {
    for (int mode : {0, 1, 2, 5}) {
        const double base = catenoid_dtn_raw(kLogSqrt3, 1.0, mode);
        const double doubled = catenoid_dtn_raw(kLogSqrt3, 2.0, mode);
        CHECK(doubled * 2.0 == base);
    }
}

TEST_CASE("oscillation counts match the fixed-boundary index per face") {
    struct Case {
        double alpha;
        std::array<int, 3> expected;
    } cases[] = {{0.3, {1, 0, 0}}, {0.8, {1, 0, 1}}};
    for (const Case& c : cases) {
        const YNoidGeometry geometry = build_ynoid(c.alpha);
        for (int i = 0; i < 3; ++i) {
            CHECK(dirichlet_negative_count(geometry.faces[i], 2) == c.expected[i]);
            CHECK(dirichlet_negative_count(geometry.faces[i], 2) ==
                  fixed_boundary_index(geometry.faces[i]));
        }
    }

    const YNoidGeometry ycat = build_y_catenoid();
    for (int i = 0; i < 3; ++i) {
        CHECK(dirichlet_negative_count(ycat.faces[i], 2) == 0);
    }
    const YNoidGeometry pseudo = build_ynoid(std::acos(0.5));  // pi/3
    CHECK(dirichlet_negative_count(pseudo.faces[0], 2) == 1);
    CHECK(dirichlet_negative_count(pseudo.faces[1], 2) == 0);
    CHECK(dirichlet_negative_count(pseudo.faces[2], 2) == 1);
}

TEST_CASE("oscillation count is insensitive to the domain length") {
    const YNoidGeometry geometry = build_ynoid(0.4);
    OdeConfig longer;
    longer.length = 45.0;
    for (int i = 0; i < 3; ++i) {
        CHECK(dirichlet_negative_count(geometry.faces[i], 1) ==
              dirichlet_negative_count(geometry.faces[i], 1, longer));
    }
}

TEST_CASE("eigenvalue-based inertia agrees with the branch classifier") {
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> coeff(-2.0, 2.0);
    int compared = 0;
    for (int sample = 0; sample < 2000; ++sample) {
        const std::array<double, 3> a{coeff(rng), coeff(rng), coeff(rng)};
        const double det = a[0] * a[1] + a[0] * a[2] + a[1] * a[2];
        const double trace = a[0] + a[1] + 2.0 * a[2];
        if (std::abs(det) < 1e-7 || std::abs(trace) < 1e-7) continue;
        ++compared;
        CHECK(classify_quadratic(a, kDefaultTol) == inertia_by_eigenvalues(a, kDefaultTol));
    }
    CHECK(compared > 1900);
}

TEST_CASE("verification harness passes on family members") {
    for (const YNoidGeometry& geometry :
         {build_y_catenoid(), build_ynoid(std::acos(0.5)), build_ynoid(0.9)}) {
        const VerificationReport report = verify_geometry(geometry, 6);
        CHECK(report.passed);
        CHECK(report.worst_rel_error < 1e-9);
        CHECK(report.inertia_mismatches == 0);
        CHECK(report.inertia_samples > 9900);
    }
}

TEST_CASE("verification skips the kernel member and still passes") {
    const YNoidGeometry geometry = build_ynoid(std::asin(0.5));  // pi/6
    const VerificationReport report = verify_geometry(geometry, 4);
    CHECK(report.passed);
    // Mode 0 of the orthogonal face has no eigenvalue: 5 modes x 3 faces - 1.
    CHECK(report.steklov.size() == 14);
}

TEST_CASE("ode configuration is validated") {
    OdeConfig bad;
    bad.step = 0.0;
    CHECK_THROWS_AS(catenoid_dtn_raw(0.5, 1.0, 0, bad), std::domain_error);
    bad.step = 1.0;  // violates step <= length/100
    CHECK_THROWS_AS(catenoid_dtn_raw(0.5, 1.0, 0, bad), std::domain_error);
    bad.step = 1e-3;
    bad.length = -1.0;
    CHECK_THROWS_AS(flat_dtn_raw(1.0, 1, FlatKind::Disk, bad), std::domain_error);
    CHECK_THROWS_AS(catenoid_dtn_raw(0.5, 0.0, 0), std::domain_error);
    CHECK_THROWS_AS(catenoid_dtn_raw(0.5, 1.0, -1), std::domain_error);
    CHECK_THROWS_AS(dirichlet_negative_count(build_ynoid(0.5).faces[0], -1), std::domain_error);
}

TEST_CASE("near-kernel offsets stay finite") {
    const double value = catenoid_dtn_raw(1e-7, 1.0, 0);
    CHECK(std::isfinite(value));
    CHECK(std::abs(value) > 1e6);  // ~ -1/offset
}
