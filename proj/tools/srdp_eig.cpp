// srdp-eig: basis catalog, mesh/matrix dumps and eigenvalue studies.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "srdp/assembly.hpp"
#include "srdp/catalog.hpp"
#include "srdp/eigensolve.hpp"
#include "srdp/errors.hpp"
#include "srdp/mesh.hpp"
#include "srdp/studies.hpp"

namespace {

const std::vector<std::string> kDomains{"square", "lshape"};
const std::vector<std::string> kBcs{"dirichlet", "neumann"};
const std::vector<std::string> kFamilies{"tensor", "serendipity"};

void write_matrix_file(const std::string& path, const srdp::SparseMatrix& m) {
    std::ofstream out(path);
    if (!out) throw srdp::IoError("cannot open '" + path + "' for writing");
    srdp::write_coordinate(out, m);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tensor-product and serendipity finite elements for Laplace eigenvalues"};
    app.require_subcommand(1);

    // study
    auto* study = app.add_subcommand("study", "h- or p-refinement sweep for one target eigenvalue");
    std::string domain = "square";
    std::string bc = "neumann";
    std::string family = "both";
    std::string sweep = "p";
    int fixed = 4;
    std::string target = "2pi2";
    std::string csv_path;
    std::string plot_path;
    bool deterministic = false;
    study->add_option("--domain", domain)->check(CLI::IsMember(kDomains));
    study->add_option("--bc", bc)->check(CLI::IsMember(kBcs));
    study->add_option("--family", family)->check(CLI::IsMember({"tensor", "serendipity", "both"}));
    study->add_option("--sweep", sweep, "p: p = 1..6 at fixed N; h: N = 1..5 at fixed p")
        ->check(CLI::IsMember({"p", "h"}));
    study->add_option("--fixed", fixed, "N for a p sweep, p for an h sweep")->check(CLI::PositiveNumber);
    study->add_option("--target", target, "eigenvalue or preset (2pi2, 5pi2, dauge1..dauge4)");
    study->add_option("--csv", csv_path, "output CSV path")->required();
    study->add_option("--plot", plot_path, "optional SVG convergence plot");
    study->add_flag("--deterministic", deterministic, "run sweep points sequentially");

    // basis
    auto* basis = app.add_subcommand("basis", "print a reference-element basis");
    std::string basis_family = "serendipity";
    int basis_p = 2;
    std::string format = "text";
    basis->add_option("--family", basis_family)->check(CLI::IsMember(kFamilies));
    basis->add_option("--p", basis_p)->required()->check(CLI::PositiveNumber);
    basis->add_option("--format", format)->check(CLI::IsMember({"text", "records"}));

    // spectrum
    auto* spectrum = app.add_subcommand("spectrum", "computed vs exact spectrum on the unit square");
    int spec_p = 3;
    int spec_n = 5;
    int spec_count = 20;
    std::string spec_bc = "neumann";
    spectrum->add_option("--p", spec_p)->required()->check(CLI::PositiveNumber);
    spectrum->add_option("--n", spec_n)->required()->check(CLI::PositiveNumber);
    spectrum->add_option("--count", spec_count)->required()->check(CLI::PositiveNumber);
    spectrum->add_option("--bc", spec_bc)->check(CLI::IsMember(kBcs));

    // mesh
    auto* mesh_cmd = app.add_subcommand("mesh", "dump mesh entities");
    std::string mesh_domain = "square";
    int mesh_n = 2;
    mesh_cmd->add_option("--domain", mesh_domain)->check(CLI::IsMember(kDomains));
    mesh_cmd->add_option("--n", mesh_n)->required()->check(CLI::PositiveNumber);

    // matrices
    auto* matrices = app.add_subcommand("matrices", "assemble and dump M and L in coordinate format");
    std::string mat_domain = "square";
    std::string mat_bc = "neumann";
    std::string mat_family = "serendipity";
    int mat_p = 2;
    int mat_n = 2;
    std::string mass_path;
    std::string stiffness_path;
    matrices->add_option("--domain", mat_domain)->check(CLI::IsMember(kDomains));
    matrices->add_option("--bc", mat_bc)->check(CLI::IsMember(kBcs));
    matrices->add_option("--family", mat_family)->check(CLI::IsMember(kFamilies));
    matrices->add_option("--p", mat_p)->required()->check(CLI::PositiveNumber);
    matrices->add_option("--n", mat_n)->required()->check(CLI::PositiveNumber);
    matrices->add_option("--mass", mass_path)->required();
    matrices->add_option("--stiffness", stiffness_path)->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (study->parsed()) {
            srdp::StudySpec spec;
            spec.domain = srdp::parse_domain(domain);
            spec.bc = srdp::parse_boundary_condition(bc);
            spec.families = family == "both"
                                ? std::vector<srdp::Family>{srdp::Family::tensor, srdp::Family::serendipity}
                                : std::vector<srdp::Family>{srdp::parse_family(family)};
            spec.sweep = sweep == "p" ? srdp::SweepKind::p : srdp::SweepKind::h;
            spec.fixed = fixed;
            spec.target = srdp::parse_target(target);
            spec.deterministic = deterministic;

            const auto result = srdp::run_study(spec);
            for (const auto& note : result.notices) std::cerr << note << "\n";
            srdp::write_csv(result.rows, csv_path);
            if (!plot_path.empty()) {
                if (result.rows.empty()) {
                    std::cerr << "no rows to plot; skipping " << plot_path << "\n";
                } else {
                    std::ostringstream title;
                    title << srdp::to_string(spec.domain) << ", " << bc << ", lambda = " << std::setprecision(11)
                          << spec.target << ", " << sweep << "-refinement (" << (sweep == "p" ? "N" : "p")
                          << " = " << fixed << ")";
                    srdp::plot_convergence(result.rows, plot_path, title.str());
                }
            }
            std::cout << "wrote " << result.rows.size() << " rows to " << csv_path << "\n";
        } else if (basis->parsed()) {
            const auto b = srdp::make_basis(srdp::parse_family(basis_family), basis_p);
            if (format == "text") {
                srdp::write_basis_text(std::cout, b);
            } else {
                srdp::write_basis_records(std::cout, b);
            }
        } else if (spectrum->parsed()) {
            const auto rows =
                srdp::spectrum_report(srdp::Domain::unit_square, srdp::parse_boundary_condition(spec_bc), spec_p,
                                      spec_n, spec_count);
            std::cout << "index,exact,tensor,serendipity\n" << std::setprecision(17);
            for (const auto& r : rows) {
                std::cout << r.index << ',' << r.exact << ',' << r.tensor << ',' << r.serendipity << '\n';
            }
        } else if (mesh_cmd->parsed()) {
            srdp::write_mesh(std::cout, srdp::build_mesh(srdp::parse_domain(mesh_domain), mesh_n));
        } else if (matrices->parsed()) {
            const auto sys = srdp::build_system(srdp::parse_domain(mat_domain), srdp::parse_boundary_condition(mat_bc),
                                                srdp::parse_family(mat_family), mat_p, mat_n);
            write_matrix_file(mass_path, sys.mass);
            write_matrix_file(stiffness_path, sys.stiffness);
            std::cout << "free dofs " << sys.size() << " of " << sys.total_dofs << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "srdp-eig: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
