#pragma once

#include "agl/correspondence.hpp"
#include "agl/json_io.hpp"
#include "agl/structure.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace agl {

struct Budgets {
    std::uint64_t tuples = 100'000'000;
    FactorBudget factor;
};

/**
 * Declarative set builder.  The experiment sweep substitutes its values into
 * the builder's one size knob (ap/gp length, box side, powers range).
 */
struct SetBuilder {
    enum class Kind { Explicit, Ap, Gp, Box, Gap, Powers };
    Kind kind = Kind::Explicit;

    std::vector<GroupElement> elements; // explicit
    Rational start = Rational(0);       // ap / gp
    Rational step = Rational(1);        // ap difference / gp ratio
    unsigned long length = 1;
    std::vector<GroupElement> generators; // box
    unsigned long side = 1;
    std::optional<GroupElement> base;
    std::vector<GroupElement> gap_steps; // gap
    std::vector<unsigned long> gap_lengths;
    Rational gamma = Rational(2);  // powers: { gamma^i : |i| <= N } (+ extras)
    std::vector<Rational> extras;
};

struct ExperimentConfig {
    std::string experiment;
    GroupDescriptor group = GroupDescriptor::multiplicative();
    std::optional<SetBuilder> set;
    std::vector<Correspondence> correspondences;
    unsigned fold = 1; // the g of g-fold sums; replicates a single correspondence
    Json variety_json;
    std::optional<MultiPoly> polynomial;
    std::vector<std::uint64_t> sweep;
    std::vector<GroupElement> generators; // curve generators (user-supplied)
    std::vector<Rational> pattern_values;
    Budgets budgets;
    unsigned threads = 1;
    std::string point_cache_path;
    std::string out_path;
    std::string format = "csv";
};

/// Parses and validates a config document.  Throws MalformedConfig.
ExperimentConfig config_from_json(const Json& j);

/// Builds the configured set at the given sweep size.
FiniteSet build_set(const GroupDescriptor& group, const SetBuilder& builder, std::uint64_t sweep_value);

/**
 * One output row of an experiment.  The exponent log(result)/log(set_size)
 * is present only when set_size >= 2.  Everything except runtime_ms is
 * deterministic for a fixed config.
 */
struct ReportRow {
    std::string label;
    std::uint64_t set_size = 0;
    Rational doubling = Rational(0);
    std::uint64_t result = 0;
    std::optional<double> exponent;
    std::int64_t runtime_ms = 0;
};
using Report = std::vector<ReportRow>;

bool rows_equal_ignoring_runtime(const Report& a, const Report& b);

std::string report_to_csv(const Report& report);
Report report_from_csv(const std::string& csv);
Json report_to_json(const Report& report);
Report report_from_json(const Json& j);

/**
 * Pattern search in the coordinates of a box of rational points on a curve:
 * builds the point box per sweep value L from the user-supplied generators,
 * projects to x- and y-coordinates, and reports the longest AP / GP / square
 * chain in each.  Throws OffCurveGenerator.
 */
Report run_bremner(const ExperimentConfig& config);

/**
 * Growth of |gA| and |C_1(A) + ... + C_g(A)| over a size sweep.  Refuses
 * correspondences that are subgroup translates (TranslateCorrespondence).
 */
Report run_expansion(const ExperimentConfig& config);

/// Exact |V intersect A^g| against doubling over a size sweep.
Report run_eszabo(const ExperimentConfig& config);

/// Exact |P(A, ..., A)| over a size sweep; refuses degenerate polynomials.
Report run_elekes_ronyai(const ExperimentConfig& config);

/// Longest AP / GP / square-chain reports for an explicit list of rationals.
Json run_patterns(const ExperimentConfig& config);

/// Degeneracy report for the configured polynomial.
Json run_degeneracy(const ExperimentConfig& config);

} // namespace agl
