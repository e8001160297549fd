#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "mostad/core.hpp"

namespace mostad {

/// True if `a` is no worse than `b` in every objective and better in at least one.
bool dominates(std::span<const double> a, std::span<const double> b) noexcept;

/// Indices (ascending) of the maximal mutually nondominated subset. Of several
/// identical points only the first is kept.
std::vector<std::size_t> nondominated_indices(const std::vector<ObjectiveVector>& points);

/// The nondominated subset in input order, duplicates removed.
std::vector<ObjectiveVector> nondominated_filter(const std::vector<ObjectiveVector>& points);

/// Mean over reference points z of min over solutions a of |max(a - z, 0)|.
double igd_plus(const std::vector<ObjectiveVector>& solutions, const std::vector<ObjectiveVector>& reference);

/// Componentwise 1.2 x the maximum over a reference front.
ObjectiveVector hv_reference_point(const std::vector<ObjectiveVector>& reference_front);

struct MonteCarloEstimate {
    double value = 0.0;
    double standard_error = 0.0;
};

/// Volume dominated by `solutions` inside the box bounded by `ref_point`.
/// Exact for two and three objectives; Monte-Carlo (10^6 samples, seeded) otherwise.
/// Points that do not strictly dominate `ref_point` are ignored.
double hypervolume(const std::vector<ObjectiveVector>& solutions, std::span<const double> ref_point,
                   std::uint64_t seed = 0);

/// Uniform sampling of the box [ideal of solutions, ref_point].
MonteCarloEstimate hypervolume_monte_carlo(const std::vector<ObjectiveVector>& solutions,
                                           std::span<const double> ref_point, std::size_t samples,
                                           std::uint64_t seed);

struct MetricReport {
    double igd_plus = 0.0;
    double hv = 0.0;
    ObjectiveVector reference_point;
    std::size_t front_size = 0;
};

/// IGD+ and HV of a solution set against a reference front.
MetricReport evaluate_metrics(const std::vector<ObjectiveVector>& solutions,
                              const std::vector<ObjectiveVector>& reference_front);

/// Raised when a statistical test gets too few samples.
class InsufficientData : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Which direction of a metric is an improvement.
enum class Better { Lower, Higher };

/// Outcome of comparing a baseline sample `a` against a competitor sample `b`.
/// `symbol` is "-" when `a` is significantly better (the competitor is
/// outperformed), "+" when `b` is significantly better, "≈" otherwise.
struct WilcoxonVerdict {
    double statistic = 0.0; ///< rank sum of `a`
    double z = 0.0;
    double p_value = 1.0;
    std::string symbol = "≈";
};

/// Two-sided rank-sum test: midranks for ties, tie-corrected variance, normal
/// approximation with continuity correction. Needs at least five samples each.
WilcoxonVerdict wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b, double alpha = 0.05,
                                  Better better = Better::Lower);

double median(std::vector<double> values);

} // namespace mostad
