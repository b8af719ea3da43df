#include "gridfreq/report_io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <system_error>

#include <unistd.h>

#include "gridfreq/errors.hpp"
#include "gridfreq/scenario_io.hpp"

namespace gridfreq {

std::string format_double(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void atomic_write_file(const std::filesystem::path& path, const std::string& content) {
    const auto tmp = path.parent_path() /
                     (path.filename().string() + ".tmp." + std::to_string(::getpid()));
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw ParseError("cannot write '" + tmp.string() + "'");
        out << content;
        if (!out.flush()) throw ParseError("write failed for '" + tmp.string() + "'");
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw ParseError("cannot move '" + tmp.string() + "' to '" + path.string() + "': " +
                         ec.message());
    }
}

std::string trajectory_csv(const Trajectory& traj) {
    std::string out = "t,f_hz,delta_f_pu,p_turbine_pu,p_ev_mw,triggered\n";
    for (const auto& s : traj.samples) {
        out += format_double(s.t_s);
        out += ',';
        out += format_double(s.f_hz);
        out += ',';
        out += format_double(s.delta_f_pu);
        out += ',';
        out += format_double(s.p_turbine_pu);
        out += ',';
        out += format_double(s.p_ev_mw);
        out += ',';
        out += s.triggered ? '1' : '0';
        out += '\n';
    }
    return out;
}

std::string nadir_csv(const NadirReport& r) {
    std::string out = "nadir_hz,nadir_time_s,settling_time_s,steady_state_f_hz\n";
    out += format_double(r.nadir_hz);
    out += ',';
    out += format_double(r.nadir_time_s);
    out += ',';
    if (r.settling_time_s) out += format_double(*r.settling_time_s);
    out += ',';
    out += format_double(r.steady_state_f_hz);
    out += '\n';
    return out;
}

namespace {

void sweep_row(std::string& out, double level, const char* mode, const NadirReport& r) {
    out += format_double(level);
    out += ',';
    out += mode;
    out += ',';
    out += format_double(r.nadir_hz);
    out += ',';
    out += format_double(r.nadir_time_s);
    out += ',';
    if (r.settling_time_s) out += format_double(*r.settling_time_s);
    out += '\n';
}

} // namespace

std::string sweep_csv(const ParticipationSweep& sweep) {
    std::string out = "level,mode,nadir_hz,nadir_time_s,settling_time_s\n";
    sweep_row(out, 0.0, "none", sweep.baseline);
    for (const auto& p : sweep.points) {
        sweep_row(out, p.level, p.mode == FleetMode::V1G ? "v1g" : "v2g", p.report);
    }
    return out;
}

std::string daily_csv(const std::vector<DailyRow>& rows) {
    std::string out = "time,baseline_nadir_hz,v1g_nadir_hz,v2g_nadir_hz\n";
    for (const auto& r : rows) {
        out += format_time_of_day(r.time_of_day_min);
        out += ',';
        out += format_double(r.baseline_nadir_hz);
        out += ',';
        out += format_double(r.v1g_nadir_hz);
        out += ',';
        out += format_double(r.v2g_nadir_hz);
        out += '\n';
    }
    return out;
}

std::string soc_csv(const std::vector<double>& soc_per_minute) {
    std::string out = "minute,soc\n";
    for (size_t i = 0; i < soc_per_minute.size(); ++i) {
        out += std::to_string(i);
        out += ',';
        out += format_double(soc_per_minute[i]);
        out += '\n';
    }
    return out;
}

std::string trajectory_svg(const Trajectory& traj) {
    const double width = 900.0, height = 420.0;
    const double ml = 70.0, mr = 20.0, mt = 20.0, mb = 50.0;
    const double pw = width - ml - mr, ph = height - mt - mb;

    double fmin = traj.samples.front().f_hz, fmax = fmin;
    for (const auto& s : traj.samples) {
        fmin = std::min(fmin, s.f_hz);
        fmax = std::max(fmax, s.f_hz);
    }
    const double pad = std::max(0.02, (fmax - fmin) * 0.08);
    fmin -= pad;
    fmax += pad;
    const double t0 = traj.samples.front().t_s;
    const double t1 = traj.samples.back().t_s;

    const auto x_of = [&](double t) { return ml + (t - t0) / (t1 - t0) * pw; };
    const auto y_of = [&](double f) { return mt + (fmax - f) / (fmax - fmin) * ph; };

    char buf[160];
    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"900\" height=\"420\" "
           "viewBox=\"0 0 900 420\">\n";
    svg += "<rect width=\"900\" height=\"420\" fill=\"white\"/>\n";
    std::snprintf(buf, sizeof buf,
                  "<rect x=\"%.1f\" y=\"%.1f\" width=\"%.1f\" height=\"%.1f\" fill=\"none\" "
                  "stroke=\"#888\"/>\n",
                  ml, mt, pw, ph);
    svg += buf;
    // horizontal gridlines with labels
    for (int i = 0; i <= 4; ++i) {
        const double f = fmin + (fmax - fmin) * i / 4.0;
        const double y = y_of(f);
        std::snprintf(buf, sizeof buf,
                      "<line x1=\"%.1f\" y1=\"%.2f\" x2=\"%.1f\" y2=\"%.2f\" stroke=\"#ddd\"/>\n",
                      ml, y, ml + pw, y);
        svg += buf;
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.1f\" y=\"%.2f\" font-size=\"12\" text-anchor=\"end\" "
                      "fill=\"#333\">%.3f</text>\n",
                      ml - 6.0, y + 4.0, f);
        svg += buf;
    }
    for (int i = 0; i <= 6; ++i) {
        const double t = t0 + (t1 - t0) * i / 6.0;
        const double x = x_of(t);
        std::snprintf(buf, sizeof buf,
                      "<text x=\"%.2f\" y=\"%.1f\" font-size=\"12\" text-anchor=\"middle\" "
                      "fill=\"#333\">%.0f</text>\n",
                      x, mt + ph + 18.0, t);
        svg += buf;
    }
    svg += "<text x=\"450\" y=\"410\" font-size=\"13\" text-anchor=\"middle\" fill=\"#333\">"
           "time (s)</text>\n";
    svg += "<text x=\"16\" y=\"220\" font-size=\"13\" text-anchor=\"middle\" fill=\"#333\" "
           "transform=\"rotate(-90 16 220)\">frequency (Hz)</text>\n";

    svg += "<polyline fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" points=\"";
    // thin the polyline to at most ~2000 points; it is a quick-look plot
    const size_t stride = std::max<size_t>(1, traj.samples.size() / 2000);
    for (size_t i = 0; i < traj.samples.size(); i += stride) {
        std::snprintf(buf, sizeof buf, "%.2f,%.2f ", x_of(traj.samples[i].t_s),
                      y_of(traj.samples[i].f_hz));
        svg += buf;
    }
    std::snprintf(buf, sizeof buf, "%.2f,%.2f", x_of(traj.samples.back().t_s),
                  y_of(traj.samples.back().f_hz));
    svg += buf;
    svg += "\"/>\n</svg>\n";
    return svg;
}

} // namespace gridfreq
