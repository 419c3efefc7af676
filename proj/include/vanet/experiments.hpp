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
#include "vanet/core.hpp"
#include "vanet/mobility.hpp"
#include "vanet/montecarlo.hpp"
#include "vanet/quadrature.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace vanet {

/// A random-vs-vehicular comparison. Sector-shrinking studies carry a family
/// of random models; `headline` selects the member the scenario's summary
/// statistics refer to.
struct Scenario
{
    std::string name;
    std::string description;
    std::vector<ModelSpec> random_family;
    std::size_t headline = 0;
    ModelSpec vehicular;
    CachingParams params;
    TauGrid grid;

    void validate() const;
};

/// fig4, fig5, fig6, fig7. Throws std::invalid_argument for unknown names.
Scenario builtin_scenario(const std::string& name);
std::vector<std::string> builtin_scenario_names();

enum class Engine
{
    quadrature,
    monte_carlo,
};

std::string_view to_string(Engine e);
Engine parse_engine(std::string_view s);

struct Crossover
{
    double tau_s = 0.0;
    /// Monte Carlo only: the sign change lies within the combined confidence band.
    bool uncertain = false;
};

/// Grid-level sign changes of a - b located by linear interpolation.
std::vector<Crossover> find_crossovers(const OutageCurve& a, const OutageCurve& b);

using OutageFunction = std::function<double(double tau_s)>;

/// Grid-level sign changes of a - b refined by bisection on the underlying
/// functions until the bracket is narrower than tol_s.
std::vector<Crossover> find_crossovers(const OutageCurve& a, const OutageCurve& b, const OutageFunction& fa,
                                       const OutageFunction& fb, double tol_s = 1e-6);

struct ImprovementRecord
{
    double tau_s = 0.0;
    double p_outage_random = 0.0;
    double p_outage_vehicular = 0.0;
    double rel_improvement = 0.0;  // (random - vehicular) / random
};

struct ImprovementStats
{
    std::optional<double> avg;  // unweighted mean over grid points
    std::optional<double> max;
    std::size_t n_points = 0;
};

/// Region threshold on the vehicular outage for the headline statistics.
inline constexpr double kOutageRegionThreshold = 0.5;

struct ComparisonReport
{
    std::string scenario;
    std::string random_label;
    std::string vehicular_label;
    Engine engine = Engine::quadrature;
    std::string grid_description;
    OutageCurve random_curve;
    OutageCurve vehicular_curve;
    std::vector<ImprovementRecord> records;
    ImprovementStats region;     // grid points with P_o(vehicular) < 0.5
    ImprovementStats full_grid;
    std::vector<Crossover> crossovers;
};

double relative_improvement(double p_outage_random, double p_outage_vehicular);

/// Builds records and statistics from two curves on the same grid.
/// Crossovers are left empty.
ComparisonReport compare_curves(const OutageCurve& random_curve, const OutageCurve& vehicular_curve);

struct EngineSettings
{
    QuadratureSettings quadrature;
    TrialConfig trials;
};

struct ScenarioReport
{
    Scenario scenario;
    Engine engine = Engine::quadrature;
    std::vector<ComparisonReport> comparisons;  // one per random family member

    const ComparisonReport& headline() const { return comparisons.at(scenario.headline); }
};

ComparisonReport run_pair(const Scenario& scenario, std::size_t member, Engine engine,
                          const EngineSettings& settings = {});

ScenarioReport run_comparison(const Scenario& scenario, Engine engine, const EngineSettings& settings = {});

/// Sup-norm distance between two outage curves on the same grid.
double sup_distance(const OutageCurve& a, const OutageCurve& b);

} // namespace vanet
