#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "mostad/algorithm.hpp"
#include "mostad/metrics.hpp"
#include "mostad/problems.hpp"

namespace mostad {

/// The two algorithm variants a campaign can run.
inline constexpr std::string_view kMostad = "mostad";
inline constexpr std::string_view kMostadTcheby = "mostad-tcheby";

bool is_known_algorithm(std::string_view name);
Scalarization scalarization_for(std::string_view algorithm);

struct CampaignConfig {
    std::vector<std::string> problems;
    std::vector<std::string> algorithms{std::string(kMostad)};
    std::size_t runs = 30;
    std::size_t population = 200;
    std::size_t neighborhood = 20;
    std::size_t parents = 0;
    std::size_t max_evals = 100000;
    std::uint64_t base_seed = 0;
    double scope_probability = 0.5;
    OperatorParams operators;
    ProblemOptions problem_options;
    std::size_t reference_count = 0; ///< 0: the problem's default
    std::size_t jobs = 1;
    std::filesystem::path output_dir = "results";
    std::filesystem::path reference_dir = "reference_fronts";

    /// Throws ConfigError for unknown names or broken invariants.
    void validate() const;
};

void to_json(nlohmann::json& j, const OperatorParams& p);
void from_json(const nlohmann::json& j, OperatorParams& p);
void to_json(nlohmann::json& j, const AlgorithmConfig& c);
void to_json(nlohmann::json& j, const CampaignConfig& c);
/// Missing keys keep their defaults; unknown keys are a ConfigError.
CampaignConfig campaign_from_json(const nlohmann::json& j);
CampaignConfig load_campaign_config(const std::filesystem::path& path);

/// The exact algorithm configuration a campaign uses for one run.
AlgorithmConfig algorithm_config(const CampaignConfig& campaign, std::string_view algorithm, std::size_t run);

struct RunRecord {
    std::string problem;
    std::string algorithm;
    std::size_t run = 0;
    std::uint64_t seed = 0;
    std::vector<ObjectiveVector> front; ///< nondominated, reporting units
    double igd_plus = 0.0;
    double hv = 0.0;
    std::size_t evaluations = 0;
    double wall_seconds = 0.0;
};

void to_json(nlohmann::json& j, const RunRecord& r);
void from_json(const nlohmann::json& j, RunRecord& r);

/// Runs one (problem, algorithm, run) cell and scores it against `reference_front`.
RunRecord execute_cell(const Problem& problem, std::string_view algorithm, std::size_t run,
                       const CampaignConfig& campaign, const std::vector<ObjectiveVector>& reference_front);

/// Every cell of the campaign, in (problem, algorithm, run) order. Cells whose
/// record already exists under output_dir/cells are loaded, not rerun. Writes
/// runs.csv, timings.csv, fronts/, summary.json and per-metric summary CSVs.
std::vector<RunRecord> run_campaign(const CampaignConfig& config, std::ostream* log = nullptr);

/// Front CSV: header `# problem=<p>,algorithm=<a>,seed=<s>`, one vector per line.
void emit_front(const RunRecord& record, const std::filesystem::path& path);

enum class Metric { IgdPlus, Hv };
Metric parse_metric(std::string_view name);
std::string_view to_string(Metric m) noexcept;

struct Statistics {
    double mean = 0.0;
    double stddev = 0.0; ///< sample standard deviation; 0 for a single value
    double median = 0.0;
    double best = 0.0;
    double worst = 0.0;
};

Statistics describe(const std::vector<double>& values, Better better);

struct SummaryCell {
    std::string problem;
    std::string algorithm;
    std::size_t runs = 0;
    Statistics igd_plus;
    Statistics hv;
    /// Against the first-listed algorithm; absent for that algorithm itself or with too few runs.
    std::optional<WilcoxonVerdict> igd_plus_verdict;
    std::optional<WilcoxonVerdict> hv_verdict;
};

struct Summary {
    std::vector<std::string> problems;   ///< first-appearance order
    std::vector<std::string> algorithms; ///< first-appearance order; the first is the baseline
    std::vector<SummaryCell> cells;

    [[nodiscard]] const SummaryCell* find(std::string_view problem, std::string_view algorithm) const;
};

Summary summarize(const std::vector<RunRecord>& records);
nlohmann::json summary_to_json(const Summary& summary);

enum class TableFormat { Csv, Json, Markdown };
TableFormat parse_table_format(std::string_view name);

/// Mean (std) per problem x algorithm with Wilcoxon symbols.
std::string format_table(const Summary& summary, Metric metric, TableFormat format);

/// 4-digit mantissa, compact exponent: 1.7191e-2.
std::string format_sci(double v);

void write_runs_csv(const std::filesystem::path& path, const std::vector<RunRecord>& records);
/// Records without fronts (metrics only), as written by write_runs_csv.
std::vector<RunRecord> read_runs_csv(const std::filesystem::path& path);

} // namespace mostad
