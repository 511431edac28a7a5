#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ynoid/driver.hpp"
#include "ynoid/errors.hpp"

namespace py = pybind11;
using namespace ynoid;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Morse index and Steklov spectrum engine for Y-noid minimal surfaces";
    m.attr("__version__") = "0.1.0";
    m.attr("DEFAULT_JUNCTION_RADIUS") = kDefaultJunctionRadius;

    py::register_exception<NonConvergenceError>(m, "NonConvergenceError", PyExc_RuntimeError);
    py::register_exception<UnsupportedConfigurationError>(m, "UnsupportedConfigurationError",
                                                          PyExc_RuntimeError);

    py::enum_<SurfaceTag>(m, "SurfaceTag")
        .value("GENERIC", SurfaceTag::Generic)
        .value("Y_CATENOID", SurfaceTag::YCatenoid)
        .value("PSEUDO_Y_CATENOID", SurfaceTag::PseudoYCatenoid)
        .value("PI_OVER_SIX", SurfaceTag::PiOverSix);
    py::enum_<FaceClass>(m, "FaceClass")
        .value("GRAPHICAL", FaceClass::Graphical)
        .value("NON_GRAPHICAL", FaceClass::NonGraphical)
        .value("PLANAR", FaceClass::Planar);
    py::enum_<Branch>(m, "Branch")
        .value("DECAYING", Branch::Decaying)
        .value("GROWING", Branch::Growing);
    py::enum_<FarCondition>(m, "FarCondition")
        .value("DECAY_ROBIN", FarCondition::DecayRobin)
        .value("DIRICHLET_ZERO", FarCondition::DirichletZero)
        .value("BOUNDED_NEUMANN", FarCondition::BoundedNeumann);
    py::enum_<FlatKind>(m, "FlatKind")
        .value("DISK", FlatKind::Disk)
        .value("PLANE_COMPLEMENT", FlatKind::PlaneComplement);

    py::class_<CatenoidalFace>(m, "CatenoidalFace")
        .def_readonly("offset", &CatenoidalFace::offset)
        .def_readonly("scale", &CatenoidalFace::scale);
    py::class_<DiskFace>(m, "DiskFace").def_readonly("radius", &DiskFace::radius);
    py::class_<PlaneComplementFace>(m, "PlaneComplementFace")
        .def_readonly("radius", &PlaneComplementFace::radius);

    py::class_<FaceSpec>(m, "FaceSpec")
        .def_property_readonly("shape", [](const FaceSpec& f) -> py::object {
            return std::visit([](const auto& s) { return py::cast(s); }, f.shape);
        })
        .def_readonly("contact_angle", &FaceSpec::contact_angle)
        .def_readonly("conormal_curvature", &FaceSpec::conormal_curvature)
        .def_readonly("classification", &FaceSpec::classification)
        .def("is_catenoidal", &FaceSpec::is_catenoidal)
        .def("is_flat", &FaceSpec::is_flat);

    py::class_<YNoidGeometry>(m, "YNoidGeometry")
        .def_readonly("alpha", &YNoidGeometry::alpha)
        .def_readonly("junction_radius", &YNoidGeometry::junction_radius)
        .def_readonly("faces", &YNoidGeometry::faces)
        .def_readonly("tag", &YNoidGeometry::tag);

    py::class_<FaceOffset> face_offset_cls(m, "FaceOffset");
    py::enum_<FaceOffset::Kind>(face_offset_cls, "Kind")
        .value("CATENOIDAL", FaceOffset::Kind::Catenoidal)
        .value("DISK_LIMIT", FaceOffset::Kind::DiskLimit)
        .value("PLANE_COMPLEMENT_LIMIT", FaceOffset::Kind::PlaneComplementLimit);
    face_offset_cls.def_readonly("kind", &FaceOffset::kind)
        .def_readonly("offset", &FaceOffset::offset);

    py::class_<FaceEigenvalue>(m, "FaceEigenvalue")
        .def_readonly("delta", &FaceEigenvalue::delta)
        .def_readonly("admissible", &FaceEigenvalue::admissible);
    py::class_<SteklovMode>(m, "SteklovMode")
        .def_readonly("mode", &SteklovMode::mode)
        .def_readonly("multiplicity", &SteklovMode::multiplicity)
        .def_readonly("faces", &SteklovMode::faces);

    py::class_<Inertia>(m, "Inertia")
        .def_readonly("negative", &Inertia::negative)
        .def_readonly("zero", &Inertia::zero)
        .def_readonly("positive", &Inertia::positive)
        .def("__iter__",
             [](const Inertia& i) {
                 return py::iter(py::make_tuple(i.negative, i.zero, i.positive));
             })
        .def("__repr__", [](const Inertia& i) {
            return "Inertia(" + std::to_string(i.negative) + ", " + std::to_string(i.zero) +
                   ", " + std::to_string(i.positive) + ")";
        });

    py::class_<ModeContribution>(m, "ModeContribution")
        .def_readonly("mode", &ModeContribution::mode)
        .def_readonly("multiplicity", &ModeContribution::multiplicity)
        .def_readonly("coefficients", &ModeContribution::coefficients)
        .def_readonly("inertia", &ModeContribution::inertia)
        .def_readonly("index_contribution", &ModeContribution::index_contribution)
        .def_readonly("nullity_contribution", &ModeContribution::nullity_contribution);

    py::class_<ZContribution>(m, "ZContribution")
        .def_readonly("index", &ZContribution::index)
        .def_readonly("nullity", &ZContribution::nullity)
        .def_readonly("negative_residual", &ZContribution::negative_residual);

    py::class_<IndexReport>(m, "IndexReport")
        .def_readonly("alpha", &IndexReport::alpha)
        .def_readonly("junction_radius", &IndexReport::junction_radius)
        .def_readonly("tag", &IndexReport::tag)
        .def_readonly("fixed_boundary", &IndexReport::fixed_boundary)
        .def_readonly("steklov_index", &IndexReport::steklov_index)
        .def_readonly("z", &IndexReport::z)
        .def_readonly("mode_table", &IndexReport::mode_table)
        .def_readonly("max_mode_used", &IndexReport::max_mode_used)
        .def_readonly("total_index", &IndexReport::total_index)
        .def_readonly("total_nullity", &IndexReport::total_nullity);

    py::class_<OdeConfig>(m, "OdeConfig")
        .def(py::init<>())
        .def_readwrite("length", &OdeConfig::length)
        .def_readwrite("step", &OdeConfig::step)
        .def_readwrite("far", &OdeConfig::far);

    py::class_<SteklovCheck>(m, "SteklovCheck")
        .def_readonly("mode", &SteklovCheck::mode)
        .def_readonly("face", &SteklovCheck::face)
        .def_readonly("closed_form", &SteklovCheck::closed_form)
        .def_readonly("numeric", &SteklovCheck::numeric)
        .def_readonly("rel_error", &SteklovCheck::rel_error);
    py::class_<DirichletCheck>(m, "DirichletCheck")
        .def_readonly("face", &DirichletCheck::face)
        .def_readonly("closed_form", &DirichletCheck::closed_form)
        .def_readonly("numeric", &DirichletCheck::numeric);
    py::class_<VerificationReport>(m, "VerificationReport")
        .def_readonly("steklov", &VerificationReport::steklov)
        .def_readonly("dirichlet", &VerificationReport::dirichlet)
        .def_readonly("inertia_samples", &VerificationReport::inertia_samples)
        .def_readonly("inertia_mismatches", &VerificationReport::inertia_mismatches)
        .def_readonly("worst_rel_error", &VerificationReport::worst_rel_error)
        .def_readonly("rel_tolerance", &VerificationReport::rel_tolerance)
        .def_readonly("passed", &VerificationReport::passed);

    m.def("contact_angles", &contact_angles, py::arg("alpha"),
          "the three contact angles (alpha, alpha + 2pi/3, alpha - 2pi/3)");
    m.def("face_offset", &face_offset, py::arg("contact_angle"),
          "catenoidal offset with cos(alpha_i) = -tanh(T_i), or the flat limit");
    m.def("build_ynoid", &build_ynoid, py::arg("alpha"),
          py::arg("junction_radius") = kDefaultJunctionRadius,
          "family member with parameter alpha in (0, pi/3]");
    m.def("build_y_catenoid", &build_y_catenoid,
          py::arg("junction_radius") = kDefaultJunctionRadius,
          "the alpha -> 0 limit: disk plus two catenoidal faces");
    m.def("catenoid_steklov", &catenoid_steklov, py::arg("offset"), py::arg("scale"),
          py::arg("mode"),
          "closed-form Steklov eigenvalue of a catenoidal face; None marks a kernel member");
    m.def("flat_steklov", &flat_steklov, py::arg("radius"), py::arg("mode"),
          "closed-form Steklov eigenvalue of a flat face: mode / radius");
    m.def("weighted_admissible", &weighted_admissible, py::arg("shape"), py::arg("mode"),
          py::arg("branch"), "whether the branch lies in the weighted eigenvalue space");
    m.def("spectrum_table", &spectrum_table, py::arg("geometry"),
          py::arg("max_mode") = kDefaultMaxMode, "closed-form spectrum for modes 0..max_mode");
    m.def("classify_quadratic", &classify_quadratic, py::arg("coefficients"),
          py::arg("tol") = kDefaultTol,
          "inertia of sum a_i x_i^2 on the plane x1 + x2 + x3 = 0");
    m.def("fixed_boundary_index", &fixed_boundary_index, py::arg("face"),
          "per-face Morse index with the junction boundary held fixed");
    m.def("mode_contribution", &mode_contribution, py::arg("geometry"), py::arg("mode"),
          py::arg("tol") = kDefaultTol, "one mode's index/nullity contribution");
    m.def("z_space_contribution", &z_space_contribution, py::arg("geometry"),
          py::arg("mode_zero"), py::arg("tol") = kDefaultTol,
          "kernel-member bookkeeping at mode 0");
    m.def("compute_index", &compute_index, py::arg("geometry"),
          py::arg("max_mode") = kDefaultMaxMode, py::arg("tol") = kDefaultTol,
          "full Morse index and nullity assembly");
    m.def("catenoid_dtn", &catenoid_dtn, py::arg("offset"), py::arg("scale"), py::arg("mode"),
          py::arg("cfg") = OdeConfig{},
          "numeric DtN eigenvalue of a catenoidal face (one Richardson step)");
    m.def("catenoid_dtn_raw", &catenoid_dtn_raw, py::arg("offset"), py::arg("scale"),
          py::arg("mode"), py::arg("cfg") = OdeConfig{},
          "single fixed-step pass of the catenoidal DtN oracle");
    m.def("flat_dtn", &flat_dtn, py::arg("radius"), py::arg("mode"), py::arg("kind"),
          py::arg("cfg") = OdeConfig{},
          "numeric DtN eigenvalue of a flat face (one Richardson step)");
    m.def("flat_dtn_raw", &flat_dtn_raw, py::arg("radius"), py::arg("mode"), py::arg("kind"),
          py::arg("cfg") = OdeConfig{}, "single fixed-step pass of the flat DtN oracle");
    m.def("dirichlet_negative_count", &dirichlet_negative_count, py::arg("face"),
          py::arg("max_mode"), py::arg("cfg") = OdeConfig{},
          "fixed-boundary Morse index of one face by Sturm oscillation counting");
    m.def("inertia_by_eigenvalues", &inertia_by_eigenvalues, py::arg("coefficients"),
          py::arg("tol") = kDefaultTol, "inertia via explicit 2x2 eigenvalues");
    m.def("verify_geometry", &verify_geometry, py::arg("geometry"), py::arg("max_mode"),
          py::arg("cfg") = OdeConfig{}, py::arg("rel_tolerance") = 1e-6,
          "closed forms vs the ODE oracle, Sturm counts, and classifier equivalence");
    m.def("index_report_json", &index_report_json, py::arg("report"),
          "render an IndexReport as the schema_version 1 JSON document");
    m.def("spectrum_csv", &spectrum_csv, py::arg("geometry"), py::arg("table"),
          "render a spectrum table as CSV");
}
