#include "srdp/studies.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <future>
#include <numbers>
#include <sstream>

#include "srdp/eigensolve.hpp"
#include "srdp/errors.hpp"

namespace srdp {

const std::vector<TargetPreset>& target_presets() {
    static const std::vector<TargetPreset> presets = {
        {"2pi2", 2.0 * std::numbers::pi * std::numbers::pi},
        {"5pi2", 5.0 * std::numbers::pi * std::numbers::pi},
        {"dauge1", lshape_neumann_1},
        {"dauge2", lshape_neumann_2},
        {"dauge3", lshape_neumann_3},
        {"dauge4", lshape_neumann_4},
    };
    return presets;
}

double parse_target(std::string_view text) {
    for (const auto& p : target_presets()) {
        if (p.name == text) return p.value;
    }
    double value = 0.0;
    const auto* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(text.data(), end, value);
    if (ec != std::errc() || ptr != end || !std::isfinite(value)) {
        throw Error("target '" + std::string(text) + "' is neither a number nor a preset name");
    }
    return value;
}

std::vector<double> square_exact_spectrum(BoundaryCondition bc, int count) {
    if (count <= 0) {
        return {};
    }
    const int first = bc == BoundaryCondition::dirichlet ? 1 : 0;
    // Every pair with m or n > bound exceeds bound^2 pi^2, so the values
    // below that threshold are complete; the quarter disc holds >= count pairs.
    const int bound = static_cast<int>(std::ceil(2.0 * std::sqrt(static_cast<double>(count)))) + 2 + first;
    std::vector<int> sums;
    for (int m = first; m <= bound; ++m) {
        for (int n = first; n <= bound; ++n) {
            if (m * m + n * n <= bound * bound) sums.push_back(m * m + n * n);
        }
    }
    std::sort(sums.begin(), sums.end());
    sums.resize(std::min(sums.size(), static_cast<std::size_t>(count)));
    std::vector<double> out;
    for (int s : sums) out.push_back(s * std::numbers::pi * std::numbers::pi);
    return out;
}

StudyRow solve_point(Domain domain, BoundaryCondition bc, Family family, int p, int n, double target) {
    const GlobalSystem sys = build_system(domain, bc, family, p, n);
    const EigenResult res = solve_generalized(sys);
    const double lam = select_near(res, target).front();
    return {family, p, n, sys.size(), lam, std::abs(lam - target)};
}

StudyResult run_study(const StudySpec& spec) {
    if (spec.fixed < 1) {
        throw Error("run_study: fixed sweep parameter must be >= 1");
    }
    if (spec.sweep == SweepKind::h && (spec.fixed > max_serendipity_order)) {
        throw UnsupportedOrder("run_study: p must be <= " + std::to_string(max_serendipity_order));
    }

    struct Point {
        Family family;
        int p;
        int n;
    };
    std::vector<Point> points;
    for (Family f : spec.families) {
        if (spec.sweep == SweepKind::p) {
            for (int p = 1; p <= spec.max_order; ++p) points.push_back({f, p, spec.fixed});
        } else {
            for (int n = 1; n <= spec.max_n; ++n) points.push_back({f, spec.fixed, n});
        }
    }

    auto run = [&spec](const Point& pt) -> std::optional<StudyRow> {
        try {
            return solve_point(spec.domain, spec.bc, pt.family, pt.p, pt.n, spec.target);
        } catch (const EmptySystem&) {
            return std::nullopt;
        } catch (const InsufficientSpectrum&) {
            return std::nullopt;
        }
    };

    std::vector<std::optional<StudyRow>> results(points.size());
    if (spec.deterministic) {
        for (std::size_t k = 0; k < points.size(); ++k) results[k] = run(points[k]);
    } else {
        std::vector<std::future<std::optional<StudyRow>>> jobs;
        for (const auto& pt : points) jobs.push_back(std::async(std::launch::async, run, pt));
        for (std::size_t k = 0; k < jobs.size(); ++k) results[k] = jobs[k].get();
    }

    StudyResult out;
    for (std::size_t k = 0; k < points.size(); ++k) {
        if (results[k]) {
            out.rows.push_back(*results[k]);
        } else {
            out.notices.push_back("skipped degenerate case: " + to_string(points[k].family) +
                                  " p=" + std::to_string(points[k].p) + " N=" + std::to_string(points[k].n) +
                                  " (" + to_string(spec.bc) + ", no free degrees of freedom)");
        }
    }
    return out;
}

void write_csv(std::ostream& os, const std::vector<StudyRow>& rows) {
    os << "family,p,N,ndofs,lambda_h,error\n";
    std::ostringstream line;
    line.precision(17);
    for (const auto& r : rows) {
        line.str({});
        line << to_string(r.family) << ',' << r.p << ',' << r.n << ',' << r.ndofs << ',' << r.lambda_h << ','
             << r.error << '\n';
        os << line.str();
    }
}

void write_csv(const std::vector<StudyRow>& rows, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    write_csv(out, rows);
    if (!out) {
        throw IoError("write to '" + path.string() + "' failed");
    }
}

std::vector<StudyRow> read_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line != "family,p,N,ndofs,lambda_h,error") {
        throw Error("read_csv: missing or unexpected header");
    }
    std::vector<StudyRow> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::stringstream ss(line);
        std::string f;
        while (std::getline(ss, f, ',')) fields.push_back(f);
        if (fields.size() != 6) {
            throw Error("read_csv: expected 6 fields in '" + line + "'");
        }
        rows.push_back({parse_family(fields[0]), std::stoi(fields[1]), std::stoi(fields[2]), std::stoi(fields[3]),
                        std::stod(fields[4]), std::stod(fields[5])});
    }
    return rows;
}

std::vector<SpectrumReportRow> spectrum_report(Domain domain, BoundaryCondition bc, int p, int n, int count) {
    if (domain != Domain::unit_square) {
        throw Error("spectrum_report: no closed-form spectrum for domain " + to_string(domain));
    }
    const auto exact = square_exact_spectrum(bc, count);
    const EigenResult tensor = solve_generalized(build_system(domain, bc, Family::tensor, p, n));
    const EigenResult serendipity = solve_generalized(build_system(domain, bc, Family::serendipity, p, n));
    const auto te = spectrum_error_profile(tensor, exact);
    const auto se = spectrum_error_profile(serendipity, exact);
    std::vector<SpectrumReportRow> rows;
    for (std::size_t k = 0; k < exact.size(); ++k) {
        rows.push_back({static_cast<int>(k), exact[k], te[k].computed, se[k].computed});
    }
    return rows;
}

}  // namespace srdp
