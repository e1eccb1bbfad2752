#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "csucb/errors.hpp"
#include "csucb/harness.hpp"

namespace csucb {

namespace {

constexpr double kWidth = 860.0;
constexpr double kHeight = 520.0;
constexpr double kMarginLeft = 78.0;
constexpr double kMarginRight = 24.0;
constexpr double kMarginTop = 30.0;
constexpr double kMarginBottom = 56.0;

std::string num(double v) {
    char buffer[32];
    std::snprintf(buffer, sizeof(buffer), "%.6g", v);
    return buffer;
}

struct Series {
    std::string label;
    std::string color;
    bool dashed = false;
    std::vector<double> values;  // aligned with checkpoints; NaN = skip
};

class ChartBuilder {
public:
    ChartBuilder(const std::vector<std::int64_t>& checkpoints, bool log_time)
        : checkpoints_(checkpoints), log_time_(log_time) {
        t_lo_ = static_cast<double>(checkpoints.front());
        t_hi_ = static_cast<double>(checkpoints.back());
        if (log_time_ && t_lo_ < 1.0) t_lo_ = 1.0;
    }

    double x_of(double t) const {
        const double lo = log_time_ ? std::log10(t_lo_) : t_lo_;
        const double hi = log_time_ ? std::log10(t_hi_) : t_hi_;
        const double v = log_time_ ? std::log10(std::max(t, t_lo_)) : t;
        const double span = hi > lo ? hi - lo : 1.0;
        return kMarginLeft + (v - lo) / span * (kWidth - kMarginLeft - kMarginRight);
    }

    double y_of(double value) const {
        const double span = y_hi_ > y_lo_ ? y_hi_ - y_lo_ : 1.0;
        return kHeight - kMarginBottom -
               (value - y_lo_) / span * (kHeight - kMarginTop - kMarginBottom);
    }

    void fit_y(const std::vector<double>& values) {
        for (double v : values) {
            if (std::isnan(v)) continue;
            y_lo_ = std::min(y_lo_, v);
            y_hi_ = std::max(y_hi_, v);
        }
    }

    void finish_y() {
        if (y_lo_ > y_hi_) {
            y_lo_ = 0.0;
            y_hi_ = 1.0;
        }
        if (y_lo_ > 0.0) y_lo_ = 0.0;
        y_hi_ += 0.05 * (y_hi_ - y_lo_ + 1e-12);
        if (y_lo_ < 0.0) y_lo_ *= 1.05;
    }

    std::string polyline(const std::vector<double>& values) const {
        std::string points;
        for (std::size_t i = 0; i < checkpoints_.size(); ++i) {
            if (std::isnan(values[i])) continue;
            points += num(x_of(static_cast<double>(checkpoints_[i]))) + "," +
                      num(y_of(values[i])) + " ";
        }
        return points;
    }

    double y_lo() const { return y_lo_; }
    double y_hi() const { return y_hi_; }
    double t_lo() const { return t_lo_; }
    double t_hi() const { return t_hi_; }
    bool log_time() const { return log_time_; }

private:
    const std::vector<std::int64_t>& checkpoints_;
    bool log_time_;
    double t_lo_ = 1.0;
    double t_hi_ = 1.0;
    double y_lo_ = std::numeric_limits<double>::infinity();
    double y_hi_ = -std::numeric_limits<double>::infinity();
};

}  // namespace

std::string render_chart_svg(const AggregateResult& result, bool log_time_axis) {
    if (result.checkpoints.empty()) {
        throw ValidationError("render_chart: no checkpoints to plot");
    }
    ChartBuilder chart(result.checkpoints, log_time_axis);

    const std::size_t n = result.checkpoints.size();
    std::vector<double> band_hi(n), band_lo(n);
    for (std::size_t i = 0; i < n; ++i) {
        band_hi[i] = result.regret_mean[i] + result.regret_std[i];
        band_lo[i] = result.regret_mean[i] - result.regret_std[i];
    }

    std::vector<Series> overlays;
    auto add_overlay = [&](const std::vector<double>& values, const std::string& label,
                           const std::string& color) {
        if (!values.empty()) overlays.push_back({label, color, true, values});
    };
    add_overlay(result.bound_thm1, "bound_thm1", "#c44e52");
    add_overlay(result.bound_thm2, "bound_thm2", "#dd8452");
    add_overlay(result.bound_thm3, "bound_thm3", "#55a868");
    add_overlay(result.bound_thm4, "bound_thm4", "#8172b3");

    chart.fit_y(band_hi);
    chart.fit_y(band_lo);
    chart.fit_y(result.regret_mean);
    for (const auto& s : overlays) chart.fit_y(s.values);
    chart.finish_y();

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
           num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
    svg += "<rect x=\"0\" y=\"0\" width=\"" + num(kWidth) + "\" height=\"" + num(kHeight) +
           "\" fill=\"white\"/>\n";

    // Axes.
    svg += "<line x1=\"" + num(kMarginLeft) + "\" y1=\"" + num(kHeight - kMarginBottom) +
           "\" x2=\"" + num(kWidth - kMarginRight) + "\" y2=\"" + num(kHeight - kMarginBottom) +
           "\" stroke=\"black\"/>\n";
    svg += "<line x1=\"" + num(kMarginLeft) + "\" y1=\"" + num(kMarginTop) + "\" x2=\"" +
           num(kMarginLeft) + "\" y2=\"" + num(kHeight - kMarginBottom) +
           "\" stroke=\"black\"/>\n";

    // Time ticks: decades on a log axis, five even stops otherwise.
    std::vector<double> ticks;
    if (log_time_axis) {
        for (double d = std::pow(10.0, std::floor(std::log10(chart.t_lo())));
             d <= chart.t_hi() * 1.0001; d *= 10.0) {
            if (d >= chart.t_lo() * 0.9999) ticks.push_back(d);
        }
        if (ticks.empty()) ticks.push_back(chart.t_hi());
    } else {
        for (int j = 0; j <= 4; ++j) {
            ticks.push_back(chart.t_lo() + (chart.t_hi() - chart.t_lo()) * j / 4.0);
        }
    }
    for (double t : ticks) {
        const double x = chart.x_of(t);
        svg += "<line x1=\"" + num(x) + "\" y1=\"" + num(kHeight - kMarginBottom) + "\" x2=\"" +
               num(x) + "\" y2=\"" + num(kHeight - kMarginBottom + 5.0) +
               "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(x) + "\" y=\"" + num(kHeight - kMarginBottom + 20.0) +
               "\" font-size=\"12\" text-anchor=\"middle\">" + num(t) + "</text>\n";
    }
    for (int j = 0; j <= 4; ++j) {
        const double v = chart.y_lo() + (chart.y_hi() - chart.y_lo()) * j / 4.0;
        const double y = chart.y_of(v);
        svg += "<line x1=\"" + num(kMarginLeft - 5.0) + "\" y1=\"" + num(y) + "\" x2=\"" +
               num(kMarginLeft) + "\" y2=\"" + num(y) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(kMarginLeft - 9.0) + "\" y=\"" + num(y + 4.0) +
               "\" font-size=\"12\" text-anchor=\"end\">" + num(v) + "</text>\n";
    }
    svg += "<text x=\"" + num((kMarginLeft + kWidth - kMarginRight) / 2.0) + "\" y=\"" +
           num(kHeight - 12.0) + "\" font-size=\"13\" text-anchor=\"middle\">round t" +
           std::string(log_time_axis ? " (log scale)" : "") + "</text>\n";
    svg += "<text x=\"16\" y=\"" + num((kMarginTop + kHeight - kMarginBottom) / 2.0) +
           "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
           num((kMarginTop + kHeight - kMarginBottom) / 2.0) +
           ")\">cumulative sleeping regret</text>\n";

    // +-1 std band.
    std::string band = "M";
    for (std::size_t i = 0; i < n; ++i) {
        band += " " + num(chart.x_of(static_cast<double>(result.checkpoints[i]))) + " " +
                num(chart.y_of(band_hi[i]));
    }
    for (std::size_t i = n; i-- > 0;) {
        band += " " + num(chart.x_of(static_cast<double>(result.checkpoints[i]))) + " " +
                num(chart.y_of(band_lo[i]));
    }
    band += " Z";
    svg += "<path d=\"" + band + "\" fill=\"#4c72b0\" fill-opacity=\"0.2\" stroke=\"none\"/>\n";

    // Mean regret line.
    svg += "<polyline points=\"" + chart.polyline(result.regret_mean) +
           "\" fill=\"none\" stroke=\"#4c72b0\" stroke-width=\"1.8\"/>\n";

    for (const auto& s : overlays) {
        svg += "<polyline points=\"" + chart.polyline(s.values) + "\" fill=\"none\" stroke=\"" +
               s.color + "\" stroke-width=\"1.4\" stroke-dasharray=\"7 4\"/>\n";
    }

    // Legend.
    double ly = kMarginTop + 8.0;
    const double lx = kMarginLeft + 12.0;
    auto legend_row = [&](const std::string& label, const std::string& color, bool dashed) {
        svg += "<line x1=\"" + num(lx) + "\" y1=\"" + num(ly) + "\" x2=\"" + num(lx + 26.0) +
               "\" y2=\"" + num(ly) + "\" stroke=\"" + color + "\" stroke-width=\"2\"" +
               (dashed ? " stroke-dasharray=\"7 4\"" : "") + "/>\n";
        svg += "<text x=\"" + num(lx + 32.0) + "\" y=\"" + num(ly + 4.0) +
               "\" font-size=\"12\">" + label + "</text>\n";
        ly += 17.0;
    };
    legend_row("mean regret (" + std::to_string(result.runs) + " runs, +-1 std)", "#4c72b0",
               false);
    for (const auto& s : overlays) legend_row(s.label, s.color, true);

    svg += "</svg>\n";
    return svg;
}

void render_chart(const AggregateResult& result, const std::string& path, bool log_time_axis) {
    const std::string body = render_chart_svg(result, log_time_axis);
    std::ofstream out(path, std::ios::binary);
    if (!out.is_open()) throw IoError("cannot open " + path + " for writing");
    out.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!out.good()) throw IoError("failed while writing " + path);
}

}  // namespace csucb
