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

#include <algorithm>
#include <cmath>
#include <locale>
#include <sstream>

namespace vanet {

namespace {

constexpr double kWidth = 800.0;
constexpr double kHeight = 600.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 30.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 70.0;

std::string escape_xml(std::string_view s)
{
    std::string out;
    for (char c : s) {
        switch (c) {
        case '&': out += "&amp;"; break;
        case '<': out += "&lt;"; break;
        case '>': out += "&gt;"; break;
        case '"': out += "&quot;"; break;
        default: out += c;
        }
    }
    return out;
}

/// 1, 2 or 5 times a power of ten, giving roughly `target` ticks.
double nice_step(double span, int target)
{
    const double raw = span / target;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0})
        if (m * mag >= raw)
            return m * mag;
    return 10.0 * mag;
}

} // namespace

std::string render_svg(const ComparisonReport& report)
{
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    double tau_max = 0.0;
    for (const auto& r : report.records)
        tau_max = std::max(tau_max, r.tau_s);
    if (tau_max <= 0.0)
        tau_max = 1.0;

    auto px = [&](double tau) { return kLeft + plot_w * tau / tau_max; };
    auto py = [&](double p) { return kTop + plot_h * (1.0 - std::clamp(p, 0.0, 1.0)); };

    std::ostringstream os;
    os.imbue(std::locale::classic());
    os.precision(6);
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
    os << "<text x=\"400\" y=\"24\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">"
       << escape_xml(report.scenario + ": " + report.random_label + " vs " + report.vehicular_label) << "</text>\n";

    // Axes and ticks.
    os << "<g stroke=\"black\" stroke-width=\"1\">\n";
    os << "<line x1=\"" << kLeft << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << kLeft + plot_w << "\" y2=\""
       << kTop + plot_h << "\"/>\n";
    os << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << kTop + plot_h << "\"/>\n";
    os << "</g>\n";
    os << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    const double xstep = nice_step(tau_max, 8);
    for (int i = 0; i * xstep <= tau_max * (1.0 + 1e-9); ++i) {
        const double t = i * xstep;
        os << "<line x1=\"" << px(t) << "\" y1=\"" << kTop + plot_h << "\" x2=\"" << px(t) << "\" y2=\""
           << kTop + plot_h + 5 << "\" stroke=\"black\"/>";
        os << "<text x=\"" << px(t) << "\" y=\"" << kTop + plot_h + 20 << "\" text-anchor=\"middle\">" << t
           << "</text>\n";
    }
    for (int i = 0; i <= 10; ++i) {
        const double p = i / 10.0;
        os << "<line x1=\"" << kLeft - 5 << "\" y1=\"" << py(p) << "\" x2=\"" << kLeft << "\" y2=\"" << py(p)
           << "\" stroke=\"black\"/>";
        os << "<text x=\"" << kLeft - 8 << "\" y=\"" << py(p) + 4 << "\" text-anchor=\"end\">" << p << "</text>\n";
    }
    os << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kHeight - 25
       << "\" text-anchor=\"middle\" font-size=\"14\">tau (s)</text>\n";
    os << "<text x=\"20\" y=\"" << kTop + plot_h / 2 << "\" text-anchor=\"middle\" font-size=\"14\" transform=\"rotate(-90 20 "
       << kTop + plot_h / 2 << ")\">outage probability</text>\n";
    os << "</g>\n";

    auto polyline = [&](const char* color, auto value_of) {
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
        for (std::size_t i = 0; i < report.records.size(); ++i)
            os << (i ? " " : "") << px(report.records[i].tau_s) << ',' << py(value_of(report.records[i]));
        os << "\"/>\n";
    };
    polyline("#d62728", [](const ImprovementRecord& r) { return r.p_outage_random; });
    polyline("#1f77b4", [](const ImprovementRecord& r) { return r.p_outage_vehicular; });

    // Legend, top right.
    const double lx = kLeft + plot_w - 200;
    const double ly = kTop + 15;
    os << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    os << "<rect x=\"" << lx - 10 << "\" y=\"" << ly - 12 << "\" width=\"205\" height=\"48\" fill=\"white\" stroke=\"gray\"/>\n";
    os << "<line x1=\"" << lx << "\" y1=\"" << ly << "\" x2=\"" << lx + 25 << "\" y2=\"" << ly
       << "\" stroke=\"#d62728\" stroke-width=\"2\"/>";
    os << "<text x=\"" << lx + 32 << "\" y=\"" << ly + 4 << "\">" << escape_xml(report.random_label) << "</text>\n";
    os << "<line x1=\"" << lx << "\" y1=\"" << ly + 22 << "\" x2=\"" << lx + 25 << "\" y2=\"" << ly + 22
       << "\" stroke=\"#1f77b4\" stroke-width=\"2\"/>";
    os << "<text x=\"" << lx + 32 << "\" y=\"" << ly + 26 << "\">" << escape_xml(report.vehicular_label) << "</text>\n";
    os << "</g>\n";
    os << "</svg>\n";
    return os.str();
}

} // namespace vanet
