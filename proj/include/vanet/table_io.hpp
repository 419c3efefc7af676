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

#pragma once

#include "vanet/analysis.hpp"
#include "vanet/experiments.hpp"

#include <iosfwd>
#include <string>
#include <string_view>

namespace vanet {

inline constexpr std::string_view kCurveHeader =
    "tau_s,p_neigh,p_request,p_find,p_outage,ci_half_width,method,scenario";
inline constexpr std::string_view kCompareHeader = "tau_s,p_outage_random,p_outage_vehicular,rel_improvement";
inline constexpr std::string_view kLiteralHeader =
    "tau_s,u_min,u_max,p_neigh_region,p_neigh_literal,p_neigh_literal_unclamped,discrepancy,radicand_clamped";

/// 9 significant digits, '.' decimal separator, independent of locale.
std::string format_float(double v);

/// Rows use LF endings. An extra `status` column (ok / nonconvergent) is
/// appended only when some point failed to converge.
void write_curve_csv(std::ostream& os, const OutageCurve& curve, std::string_view scenario);

/// Inverse of write_curve_csv; label is taken from the scenario column.
OutageCurve parse_curve_csv(std::istream& is);

void write_compare_csv(std::ostream& os, const ComparisonReport& report);

struct LiteralDiagnosticRow
{
    double tau_s = 0.0;
    double u_min = 0.0;
    double u_max = 0.0;
    double p_neigh_region = 0.0;
    LiteralRandomIntegral literal;
};

void write_literal_csv(std::ostream& os, const std::vector<LiteralDiagnosticRow>& rows);

/// Region-based and literal integrals for the fully random model across a grid.
std::vector<LiteralDiagnosticRow> literal_diagnostic(const CachingParams& params, const TauGrid& grid,
                                                     const QuadratureSettings& settings = {});

/// Plain-text summary: grid, region-qualified and full-grid statistics,
/// crossovers.
std::string summarize(const ComparisonReport& report);

/// 800x600 SVG with both outage curves as polylines, axes, labels and legend.
std::string render_svg(const ComparisonReport& report);

} // namespace vanet
