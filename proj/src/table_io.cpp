/*
   Copyright 2026 The vanet-outage Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "vanet/table_io.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace vanet {

std::string format_float(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 9);
    if (res.ec != std::errc{})
        throw std::runtime_error("float formatting failed");
    return std::string(buf, res.ptr);
}

namespace {

double parse_float(std::string_view s)
{
    double v = 0.0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size())
        throw std::runtime_error("malformed number in CSV: " + std::string(s));
    return v;
}

std::vector<std::string> split_row(const std::string& line)
{
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ','))
        cells.push_back(cell);
    if (!line.empty() && line.back() == ',')
        cells.emplace_back();
    return cells;
}

} // namespace

void write_curve_csv(std::ostream& os, const OutageCurve& curve, std::string_view scenario)
{
    const bool with_status = !curve.all_converged();
    os << kCurveHeader << (with_status ? ",status" : "") << '\n';
    for (const auto& p : curve.points) {
        os << format_float(p.tau_s) << ',' << format_float(p.p_neigh) << ',' << format_float(p.p_request) << ','
           << format_float(p.p_find) << ',' << format_float(p.p_outage) << ','
           << (p.ci_half_width ? format_float(*p.ci_half_width) : std::string()) << ',' << to_string(p.method) << ','
           << scenario;
        if (with_status)
            os << ',' << (p.converged ? "ok" : "nonconvergent");
        os << '\n';
    }
}

OutageCurve parse_curve_csv(std::istream& is)
{
    std::string line;
    if (!std::getline(is, line))
        throw std::runtime_error("empty CSV");
    const bool with_status = line == std::string(kCurveHeader) + ",status";
    if (line != kCurveHeader && !with_status)
        throw std::runtime_error("unexpected CSV header: " + line);

    OutageCurve curve;
    while (std::getline(is, line)) {
        if (line.empty())
            continue;
        const auto cells = split_row(line);
        if (cells.size() != (with_status ? 9u : 8u))
            throw std::runtime_error("wrong column count in CSV row: " + line);
        OutagePoint p;
        p.tau_s = parse_float(cells[0]);
        p.p_neigh = parse_float(cells[1]);
        p.p_request = parse_float(cells[2]);
        p.p_find = parse_float(cells[3]);
        p.p_outage = parse_float(cells[4]);
        if (!cells[5].empty())
            p.ci_half_width = parse_float(cells[5]);
        p.method = parse_method(cells[6]);
        curve.label = cells[7];
        if (with_status)
            p.converged = cells[8] == "ok";
        curve.points.push_back(p);
    }
    return curve;
}

void write_compare_csv(std::ostream& os, const ComparisonReport& report)
{
    os << kCompareHeader << '\n';
    for (const auto& r : report.records)
        os << format_float(r.tau_s) << ',' << format_float(r.p_outage_random) << ','
           << format_float(r.p_outage_vehicular) << ',' << format_float(r.rel_improvement) << '\n';
}

void write_literal_csv(std::ostream& os, const std::vector<LiteralDiagnosticRow>& rows)
{
    os << kLiteralHeader << '\n';
    for (const auto& r : rows)
        os << format_float(r.tau_s) << ',' << format_float(r.u_min) << ',' << format_float(r.u_max) << ','
           << format_float(r.p_neigh_region) << ',' << format_float(r.literal.value) << ','
           << format_float(r.literal.unclamped) << ',' << format_float(r.literal.value - r.p_neigh_region) << ','
           << (r.literal.radicand_clamped ? 1 : 0) << '\n';
}

std::vector<LiteralDiagnosticRow> literal_diagnostic(const CachingParams& params, const TauGrid& grid,
                                                     const QuadratureSettings& settings)
{
    const auto model = builtin_model(ModelSpec::random_full(), params);
    std::vector<LiteralDiagnosticRow> rows;
    for (double tau : grid.values()) {
        const auto [u_min, u_max] = normalized_speed_bounds(params, tau);
        if (!(u_min < u_max))
            continue;
        LiteralDiagnosticRow r;
        r.tau_s = tau;
        r.u_min = u_min;
        r.u_max = u_max;
        r.p_neigh_region = p_neigh_quadrature(model, u_min, u_max, settings);
        r.literal = p_neigh_literal_random(u_min, u_max, settings);
        rows.push_back(r);
    }
    return rows;
}

namespace {

void write_stats(std::ostream& os, const char* title, const ImprovementStats& st)
{
    os << title << ": ";
    if (!st.avg) {
        os << "absent (no grid points)\n";
        return;
    }
    os << "avg " << format_float(*st.avg) << ", max " << format_float(*st.max) << " over " << st.n_points
       << " grid points\n";
}

} // namespace

std::string summarize(const ComparisonReport& report)
{
    std::ostringstream os;
    os << "scenario: " << report.scenario << '\n';
    os << "pair: " << report.random_label << " vs " << report.vehicular_label << '\n';
    os << "engine: " << to_string(report.engine) << '\n';
    os << "grid: " << report.grid_description << '\n';
    write_stats(os, "relative improvement where P_o(vehicular) < 0.5", report.region);
    write_stats(os, "relative improvement over the full grid", report.full_grid);
    os << "crossovers: " << report.crossovers.size();
    for (std::size_t i = 0; i < report.crossovers.size(); ++i) {
        os << (i ? ", " : " at tau = ") << format_float(report.crossovers[i].tau_s) << " s";
        if (report.crossovers[i].uncertain)
            os << " (uncertain)";
    }
    os << '\n';
    return os.str();
}

} // namespace vanet
