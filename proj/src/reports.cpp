#include "ynoid/reports.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace ynoid {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json surface_json(double alpha, double junction_radius, SurfaceTag tag) {
    ordered_json j;
    j["tag"] = to_string(tag);
    j["alpha_rad"] = round12(alpha);
    j["junction_radius"] = round12(junction_radius);
    return j;
}

ordered_json inertia_json(const Inertia& inertia) {
    return ordered_json{inertia.negative, inertia.zero, inertia.positive};
}

ordered_json index_row_json(const IndexReport& report) {
    ordered_json j;
    j["alpha_rad"] = round12(report.alpha);
    j["total_index"] = report.total_index;
    j["total_nullity"] = report.total_nullity;
    j["ind0_f1"] = report.fixed_boundary[0];
    j["ind0_f2"] = report.fixed_boundary[1];
    j["ind0_f3"] = report.fixed_boundary[2];
    j["steklov_index"] = report.steklov_index;
    j["z_index"] = report.z.index;
    j["z_nullity"] = report.z.nullity;
    j["n_cutoff"] = report.max_mode_used;
    return j;
}

void append_index_csv_row(std::ostringstream& out, const IndexReport& report) {
    out << format12(report.alpha) << ',' << report.total_index << ',' << report.total_nullity
        << ',' << report.fixed_boundary[0] << ',' << report.fixed_boundary[1] << ','
        << report.fixed_boundary[2] << ',' << report.steklov_index << ',' << report.z.index << ','
        << report.z.nullity << ',' << report.max_mode_used << '\n';
}

constexpr const char* kIndexCsvHeader =
    "alpha_rad,total_index,total_nullity,ind0_f1,ind0_f2,ind0_f3,steklov_index,z_index,"
    "z_nullity,n_cutoff\n";

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

double round12(double value) {
    if (!std::isfinite(value)) return value;
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return std::strtod(buffer, nullptr);
}

std::string format12(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

std::string index_report_json(const IndexReport& report) {
    ordered_json j;
    j["schema_version"] = 1;
    j["command"] = "index";
    j["surface"] = surface_json(report.alpha, report.junction_radius, report.tag);
    j["fixed_boundary"] = report.fixed_boundary;
    j["steklov_index"] = report.steklov_index;
    j["z"] = ordered_json{{"index", report.z.index},
                          {"nullity", report.z.nullity},
                          {"negative_residual", report.z.negative_residual}};
    ordered_json modes = ordered_json::array();
    for (const ModeContribution& mode : report.mode_table) {
        ordered_json row;
        row["n"] = mode.mode;
        row["multiplicity"] = mode.multiplicity;
        row["coefficients"] = ordered_json{round12(mode.coefficients[0]),
                                           round12(mode.coefficients[1]),
                                           round12(mode.coefficients[2])};
        row["inertia"] = inertia_json(mode.inertia);
        row["index_contribution"] = mode.index_contribution;
        row["nullity_contribution"] = mode.nullity_contribution;
        modes.push_back(std::move(row));
    }
    j["mode_table"] = std::move(modes);
    j["n_cutoff"] = report.max_mode_used;
    j["total_index"] = report.total_index;
    j["total_nullity"] = report.total_nullity;
    return dump(j);
}

std::string sweep_json(const std::vector<IndexReport>& rows) {
    ordered_json j;
    j["schema_version"] = 1;
    j["command"] = "sweep";
    ordered_json out = ordered_json::array();
    for (const IndexReport& row : rows) out.push_back(index_row_json(row));
    j["rows"] = std::move(out);
    return dump(j);
}

std::string spectrum_json(const YNoidGeometry& geometry, const std::vector<SteklovMode>& table) {
    ordered_json j;
    j["schema_version"] = 1;
    j["command"] = "spectrum";
    j["surface"] = surface_json(geometry.alpha, geometry.junction_radius, geometry.tag);
    ordered_json modes = ordered_json::array();
    for (const SteklovMode& row : table) {
        ordered_json mode;
        mode["n"] = row.mode;
        mode["multiplicity"] = row.multiplicity;
        ordered_json faces = ordered_json::array();
        for (int i = 0; i < 3; ++i) {
            ordered_json face;
            const double beta = geometry.faces[i].conormal_curvature;
            if (row.faces[i].delta.has_value()) {
                face["delta"] = round12(*row.faces[i].delta);
                face["a"] = round12(*row.faces[i].delta - beta);
            } else {
                face["delta"] = nullptr;
                face["a"] = nullptr;
            }
            face["beta"] = round12(beta);
            face["admissible"] = row.faces[i].admissible;
            faces.push_back(std::move(face));
        }
        mode["faces"] = std::move(faces);
        modes.push_back(std::move(mode));
    }
    j["modes"] = std::move(modes);
    return dump(j);
}

std::string verification_json(const YNoidGeometry& geometry, const VerificationReport& report) {
    ordered_json j;
    j["schema_version"] = 1;
    j["command"] = "verify";
    j["surface"] = surface_json(geometry.alpha, geometry.junction_radius, geometry.tag);
    j["rel_tolerance"] = round12(report.rel_tolerance);
    j["worst_rel_error"] = round12(report.worst_rel_error);
    j["passed"] = report.passed;
    ordered_json steklov = ordered_json::array();
    for (const SteklovCheck& check : report.steklov) {
        steklov.push_back(ordered_json{{"n", check.mode},
                                       {"face", check.face + 1},
                                       {"closed_form", round12(check.closed_form)},
                                       {"numeric", round12(check.numeric)},
                                       {"rel_error", round12(check.rel_error)}});
    }
    j["steklov"] = std::move(steklov);
    ordered_json dirichlet = ordered_json::array();
    for (const DirichletCheck& check : report.dirichlet) {
        dirichlet.push_back(ordered_json{{"face", check.face + 1},
                                         {"closed_form", check.closed_form},
                                         {"numeric", check.numeric}});
    }
    j["dirichlet"] = std::move(dirichlet);
    j["inertia"] = ordered_json{{"samples", report.inertia_samples},
                                {"mismatches", report.inertia_mismatches}};
    return dump(j);
}

std::string index_report_csv(const IndexReport& report) {
    std::ostringstream out;
    out << kIndexCsvHeader;
    append_index_csv_row(out, report);
    return out.str();
}

std::string sweep_csv(const std::vector<IndexReport>& rows) {
    std::ostringstream out;
    out << kIndexCsvHeader;
    for (const IndexReport& row : rows) append_index_csv_row(out, row);
    return out.str();
}

std::string spectrum_csv(const YNoidGeometry& geometry, const std::vector<SteklovMode>& table) {
    std::ostringstream out;
    out << "n,multiplicity,delta_f1,beta_f1,a_f1,delta_f2,beta_f2,a_f2,delta_f3,beta_f3,a_f3\n";
    for (const SteklovMode& row : table) {
        out << row.mode << ',' << row.multiplicity;
        for (int i = 0; i < 3; ++i) {
            const double beta = geometry.faces[i].conormal_curvature;
            if (row.faces[i].delta.has_value()) {
                out << ',' << format12(*row.faces[i].delta) << ',' << format12(beta) << ','
                    << format12(*row.faces[i].delta - beta);
            } else {
                out << ",," << format12(beta) << ',';
            }
        }
        out << '\n';
    }
    return out.str();
}

std::string verification_csv(const YNoidGeometry& geometry, const VerificationReport& report) {
    (void)geometry;
    std::ostringstream out;
    out << "kind,n,face,closed_form,numeric,rel_error\n";
    for (const SteklovCheck& check : report.steklov) {
        out << "steklov," << check.mode << ',' << check.face + 1 << ','
            << format12(check.closed_form) << ',' << format12(check.numeric) << ','
            << format12(check.rel_error) << '\n';
    }
    for (const DirichletCheck& check : report.dirichlet) {
        out << "dirichlet,," << check.face + 1 << ',' << check.closed_form << ','
            << check.numeric << ",\n";
    }
    out << "inertia,,," << report.inertia_samples << ',' << report.inertia_mismatches << ",\n";
    return out.str();
}

std::string index_report_table(const IndexReport& report) {
    std::ostringstream out;
    out << "surface: " << to_string(report.tag) << "\n";
    out << "alpha: " << format12(report.alpha) << " rad\n";
    out << "junction radius: " << format12(report.junction_radius) << "\n";
    out << "fixed-boundary index per face: " << report.fixed_boundary[0] << " "
        << report.fixed_boundary[1] << " " << report.fixed_boundary[2] << "\n";
    out << "mode table (a_i = delta_i - beta_i):\n";
    out << "  n  mult  a_1             a_2             a_3             inertia   index  nullity\n";
    for (const ModeContribution& mode : report.mode_table) {
        char line[160];
        std::snprintf(line, sizeof line, "  %-2d %-5d %-15.8g %-15.8g %-15.8g (%d,%d,%d)   %-6d %d\n",
                      mode.mode, mode.multiplicity, mode.coefficients[0], mode.coefficients[1],
                      mode.coefficients[2], mode.inertia.negative, mode.inertia.zero,
                      mode.inertia.positive, mode.index_contribution, mode.nullity_contribution);
        out << line;
    }
    out << "steklov index: " << report.steklov_index << "\n";
    out << "kernel-space contribution: index " << report.z.index << ", nullity "
        << report.z.nullity;
    if (report.z.negative_residual) out << " (negative residual)";
    out << "\n";
    out << "modes computed through n = " << report.max_mode_used << "\n";
    out << "total index: " << report.total_index << "\n";
    out << "total nullity: " << report.total_nullity << "\n";
    return out.str();
}

std::string sweep_table(const std::vector<IndexReport>& rows) {
    std::ostringstream out;
    out << "alpha_rad        index  nullity  ind0      steklov  z        n_cutoff\n";
    for (const IndexReport& row : rows) {
        char line[160];
        std::snprintf(line, sizeof line, "%-16.10g %-6d %-8d (%d,%d,%d)  %-8d (%d,%d)    %d\n",
                      row.alpha, row.total_index, row.total_nullity, row.fixed_boundary[0],
                      row.fixed_boundary[1], row.fixed_boundary[2], row.steklov_index,
                      row.z.index, row.z.nullity, row.max_mode_used);
        out << line;
    }
    return out.str();
}

std::string spectrum_text_table(const YNoidGeometry& geometry,
                                const std::vector<SteklovMode>& table) {
    std::ostringstream out;
    out << "surface: " << to_string(geometry.tag) << ", alpha " << format12(geometry.alpha)
        << " rad, junction radius " << format12(geometry.junction_radius) << "\n";
    out << "beta: " << format12(geometry.faces[0].conormal_curvature) << " "
        << format12(geometry.faces[1].conormal_curvature) << " "
        << format12(geometry.faces[2].conormal_curvature) << "\n";
    out << "  n  mult  delta_1         delta_2         delta_3\n";
    for (const SteklovMode& row : table) {
        char line[160];
        auto cell = [](const FaceEigenvalue& face) {
            char buf[32];
            if (face.delta.has_value()) {
                std::snprintf(buf, sizeof buf, "%-15.8g", *face.delta);
            } else {
                std::snprintf(buf, sizeof buf, "%-15s", "kernel");
            }
            return std::string(buf);
        };
        std::snprintf(line, sizeof line, "  %-2d %-5d %s %s %s\n", row.mode, row.multiplicity,
                      cell(row.faces[0]).c_str(), cell(row.faces[1]).c_str(),
                      cell(row.faces[2]).c_str());
        out << line;
    }
    return out.str();
}

std::string verification_table(const YNoidGeometry& geometry, const VerificationReport& report) {
    std::ostringstream out;
    out << "verification for surface " << to_string(geometry.tag) << ", alpha "
        << format12(geometry.alpha) << " rad\n";
    out << "  n  face  closed_form      numeric          rel_error\n";
    for (const SteklovCheck& check : report.steklov) {
        char line[160];
        std::snprintf(line, sizeof line, "  %-2d %-5d %-16.10g %-16.10g %.3e\n", check.mode,
                      check.face + 1, check.closed_form, check.numeric, check.rel_error);
        out << line;
    }
    for (const DirichletCheck& check : report.dirichlet) {
        out << "  dirichlet count face " << check.face + 1 << ": expected " << check.closed_form
            << ", counted " << check.numeric << "\n";
    }
    out << "  inertia classifier samples: " << report.inertia_samples
        << ", mismatches: " << report.inertia_mismatches << "\n";
    out << "worst relative error: " << format12(report.worst_rel_error) << " (tolerance "
        << format12(report.rel_tolerance) << ")\n";
    out << (report.passed ? "PASSED" : "FAILED") << "\n";
    return out.str();
}

}  // namespace ynoid
