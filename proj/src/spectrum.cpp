#include "ynoid/spectrum.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace ynoid {

namespace {

void check_mode(int mode) {
    if (mode < 0) {
        std::ostringstream msg;
        msg << "Fourier mode must be nonnegative, got " << mode;
        throw std::domain_error(msg.str());
    }
}

}  // namespace

std::optional<double> catenoid_steklov(double offset, double scale, int mode) {
    check_mode(mode);
    if (!(scale > 0.0) || !std::isfinite(scale)) {
        std::ostringstream msg;
        msg << "face scale must be a positive finite number, got " << scale;
        throw std::domain_error(msg.str());
    }
    const double ch = std::cosh(offset);
    const double sh = std::sinh(offset);
    const double th = std::tanh(offset);
    if (mode == 0) {
        if (std::abs(offset) <= kOffsetEps) return std::nullopt;
        return -1.0 / (scale * ch * ch * sh);
    }
    if (mode == 1) {
        return sh / (scale * ch * ch);
    }
    const double n = static_cast<double>(mode);
    return -(1.0 - n * ch * ch * (n + th)) / (scale * (n + th) * ch * ch * ch);
}

double flat_steklov(double radius, int mode) {
    check_mode(mode);
    if (!(radius > 0.0) || !std::isfinite(radius)) {
        std::ostringstream msg;
        msg << "face radius must be a positive finite number, got " << radius;
        throw std::domain_error(msg.str());
    }
    return static_cast<double>(mode) / radius;
}

bool weighted_admissible(const FaceShape& shape, int mode, Branch branch) {
    check_mode(mode);
    // Per shape the Decaying branch is: bounded on the catenoidal half
    // (tanh, sech, (n + tanh) e^{-nt}), r^n on the disk (regular at the
    // origin), constant resp. r^{-n} on the plane complement.  Each lies in
    // the weighted space; the complementary Growing branch (linear growth,
    // cosh-type growth, log or r^n at infinity, log or r^{-n} at the origin)
    // never does.
    (void)shape;
    return branch == Branch::Decaying;
}

SteklovMode steklov_mode(const YNoidGeometry& geometry, int mode) {
    check_mode(mode);
    SteklovMode row;
    row.mode = mode;
    row.multiplicity = mode == 0 ? 1 : 2;
    for (int i = 0; i < 3; ++i) {
        const FaceShape& shape = geometry.faces[i].shape;
        if (const auto* cat = std::get_if<CatenoidalFace>(&shape)) {
            row.faces[i].delta = catenoid_steklov(cat->offset, cat->scale, mode);
        } else if (const auto* disk = std::get_if<DiskFace>(&shape)) {
            row.faces[i].delta = flat_steklov(disk->radius, mode);
        } else {
            row.faces[i].delta = flat_steklov(std::get<PlaneComplementFace>(shape).radius, mode);
        }
        row.faces[i].admissible = weighted_admissible(shape, mode, Branch::Decaying);
    }
    return row;
}

std::vector<SteklovMode> spectrum_table(const YNoidGeometry& geometry, int max_mode) {
    if (max_mode < 0) {
        std::ostringstream msg;
        msg << "max mode must be nonnegative, got " << max_mode;
        throw std::domain_error(msg.str());
    }
    std::vector<SteklovMode> table;
    table.reserve(static_cast<size_t>(max_mode) + 1);
    for (int n = 0; n <= max_mode; ++n) {
        table.push_back(steklov_mode(geometry, n));
    }
    return table;
}

}  // namespace ynoid
