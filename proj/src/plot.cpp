#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "srdp/errors.hpp"
#include "srdp/studies.hpp"

namespace srdp {

namespace {

constexpr double kWidth = 640;
constexpr double kHeight = 440;
constexpr double kLeft = 80;
constexpr double kRight = 150;
constexpr double kTop = 40;
constexpr double kBottom = 60;

const char* family_color(Family f) {
    return f == Family::tensor ? "#1f77b4" : "#d62728";
}

std::string escape(std::string_view s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

/// Round step (1, 2 or 5 times a power of ten) giving about `target` ticks.
double nice_step(double span, int target) {
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (m * mag >= raw) return m * mag;
    }
    return 10.0 * mag;
}

}  // namespace

void plot_convergence(std::ostream& os, const std::vector<StudyRow>& rows, std::string_view title) {
    if (rows.empty()) {
        throw Error("plot_convergence: no rows to plot");
    }
    auto log_err = [](double e) { return std::log10(std::max(e, plot_error_floor)); };

    double xmin = rows.front().ndofs;
    double xmax = xmin;
    double ymin = log_err(rows.front().error);
    double ymax = ymin;
    for (const auto& r : rows) {
        xmin = std::min<double>(xmin, r.ndofs);
        xmax = std::max<double>(xmax, r.ndofs);
        ymin = std::min(ymin, log_err(r.error));
        ymax = std::max(ymax, log_err(r.error));
    }
    ymin = std::floor(ymin);
    ymax = std::ceil(ymax);
    if (ymax <= ymin) ymax = ymin + 1;
    const double xstep = nice_step(std::max(xmax - xmin, 1.0), 5);
    xmin = std::floor(xmin / xstep) * xstep;
    xmax = std::ceil(xmax / xstep) * xstep;
    if (xmax <= xmin) xmax = xmin + xstep;

    const double pw = kWidth - kLeft - kRight;
    const double ph = kHeight - kTop - kBottom;
    auto sx = [&](double v) { return kLeft + (v - xmin) / (xmax - xmin) * pw; };
    auto sy = [&](double v) { return kTop + (ymax - v) / (ymax - ymin) * ph; };

    os << std::fixed << std::setprecision(2);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!title.empty()) {
        os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
           << escape(title) << "</text>\n";
    }
    os << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << pw << "\" height=\"" << ph
       << "\" fill=\"none\" stroke=\"black\"/>\n";

    // y ticks at whole decades
    const int ystride = std::max(1, static_cast<int>(std::ceil((ymax - ymin) / 8)));
    for (int d = static_cast<int>(ymin); d <= static_cast<int>(ymax); d += ystride) {
        const double y = sy(d);
        os << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << y << "\" x2=\"" << kLeft + pw << "\" y2=\"" << y
           << "\" stroke=\"#dddddd\"/>\n";
        os << "<text x=\"" << kLeft - 8 << "\" y=\"" << y + 4 << "\" text-anchor=\"end\" font-size=\"12\">1e"
           << d << "</text>\n";
    }
    for (double v = xmin; v <= xmax + 0.5 * xstep; v += xstep) {
        const double x = sx(v);
        os << "<line x1=\"" << x << "\" y1=\"" << kTop + ph << "\" x2=\"" << x << "\" y2=\"" << kTop + ph + 5
           << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << x << "\" y=\"" << kTop + ph + 20 << "\" text-anchor=\"middle\" font-size=\"12\">"
           << std::setprecision(0) << v << std::setprecision(2) << "</text>\n";
    }
    os << "<text x=\"" << kLeft + pw / 2 << "\" y=\"" << kHeight - 15
       << "\" text-anchor=\"middle\" font-size=\"13\">degrees of freedom</text>\n";
    os << "<text x=\"20\" y=\"" << kTop + ph / 2 << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 20 "
       << kTop + ph / 2 << ")\">|eigenvalue error|</text>\n";

    int legend_row = 0;
    for (Family f : {Family::tensor, Family::serendipity}) {
        std::vector<const StudyRow*> series;
        for (const auto& r : rows) {
            if (r.family == f) series.push_back(&r);
        }
        if (series.empty()) continue;
        const char* color = family_color(f);
        if (series.size() > 1) {
            os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t k = 0; k < series.size(); ++k) {
                os << (k == 0 ? "" : " ") << sx(series[k]->ndofs) << ',' << sy(log_err(series[k]->error));
            }
            os << "\"/>\n";
        }
        for (const auto* r : series) {
            os << "<circle cx=\"" << sx(r->ndofs) << "\" cy=\"" << sy(log_err(r->error)) << "\" r=\"3.5\" fill=\""
               << color << "\"/>\n";
        }
        const double ly = kTop + 20 + 22 * legend_row++;
        const double lx = kLeft + pw + 15;
        os << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 24 << "\" y2=\"" << ly << "\" stroke=\""
           << color << "\" stroke-width=\"1.5\"/>\n";
        os << "<text x=\"" << lx + 30 << "\" y=\"" << ly + 4 << "\" font-size=\"12\">" << to_string(f)
           << "</text>\n";
    }
    os << "</svg>\n";
}

void plot_convergence(const std::vector<StudyRow>& rows, const std::filesystem::path& path, std::string_view title) {
    std::ofstream out(path);
    if (!out) {
        throw IoError("cannot open '" + path.string() + "' for writing");
    }
    plot_convergence(out, rows, title);
    if (!out) {
        throw IoError("write to '" + path.string() + "' failed");
    }
}

}  // namespace srdp
