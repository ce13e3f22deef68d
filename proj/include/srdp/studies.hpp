#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srdp/assembly.hpp"

namespace srdp {

/// Lowest nonzero Neumann eigenvalues of the L-shaped domain (Dauge benchmarks).
inline constexpr double lshape_neumann_1 = 1.4756218450;
inline constexpr double lshape_neumann_2 = 3.5340313683;
inline constexpr double lshape_neumann_3 = 9.8696044011;
inline constexpr double lshape_neumann_4 = 11.389479398;

struct TargetPreset {
    std::string_view name;
    double value;
};

/// 2pi2, 5pi2, dauge1..dauge4.
const std::vector<TargetPreset>& target_presets();
/// A preset name or a floating-point literal.
double parse_target(std::string_view text);

/// (m^2 + n^2) pi^2 on [0,1]^2, ascending with multiplicity; m, n >= 1 for
/// Dirichlet and >= 0 for Neumann.
std::vector<double> square_exact_spectrum(BoundaryCondition bc, int count);

enum class SweepKind { p, h };

struct StudySpec {
    Domain domain = Domain::unit_square;
    BoundaryCondition bc = BoundaryCondition::neumann;
    std::vector<Family> families{Family::tensor, Family::serendipity};
    double target = 0.0;
    SweepKind sweep = SweepKind::p;
    /// N for a p sweep, p for an h sweep.
    int fixed = 1;
    int max_order = 6;
    int max_n = 5;
    /// Sequential execution; otherwise sweep points run concurrently.
    bool deterministic = true;
};

struct StudyRow {
    Family family = Family::tensor;
    int p = 1;
    int n = 1;
    int ndofs = 0;
    double lambda_h = 0.0;
    double error = 0.0;

    friend bool operator==(const StudyRow&, const StudyRow&) = default;
};

struct StudyResult {
    /// Family-major, then sweep order.
    std::vector<StudyRow> rows;
    /// One entry per skipped (degenerate) sweep point.
    std::vector<std::string> notices;
};

/// Solves one configuration and returns its row for the given target.
StudyRow solve_point(Domain domain, BoundaryCondition bc, Family family, int p, int n, double target);

StudyResult run_study(const StudySpec& spec);

/// Header "family,p,N,ndofs,lambda_h,error"; floats at 17 significant digits.
void write_csv(std::ostream& os, const std::vector<StudyRow>& rows);
void write_csv(const std::vector<StudyRow>& rows, const std::filesystem::path& path);
std::vector<StudyRow> read_csv(std::istream& is);

/// Error below this value is drawn at this value on the log axis.
inline constexpr double plot_error_floor = 1e-16;

/// Standalone SVG: ndofs against log10 error, one polyline (two or more
/// points) plus markers per family, with legend and axis labels.
void plot_convergence(std::ostream& os, const std::vector<StudyRow>& rows, std::string_view title = {});
void plot_convergence(const std::vector<StudyRow>& rows, const std::filesystem::path& path,
                      std::string_view title = {});

struct SpectrumReportRow {
    int index = 0;
    double exact = 0.0;
    double tensor = 0.0;
    double serendipity = 0.0;
};

/// First `count` exact eigenvalues next to the tensor and serendipity
/// approximations at order p on an N x N mesh. Only the unit square has a
/// closed-form spectrum; other domains throw Error.
std::vector<SpectrumReportRow> spectrum_report(Domain domain, BoundaryCondition bc, int p, int n, int count);

}  // namespace srdp
