#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mostad/core.hpp"

namespace mostad {

/// A box-constrained multi-objective minimisation problem.
///
/// `evaluate` returns the objectives the optimiser works with. `to_report_units`
/// maps them back to the units results are reported in (identity everywhere
/// except the truss, whose compliance is scaled during optimisation).
/// `reference_front` samples the Pareto front in reporting units; its points
/// are mutually nondominated.
class Problem {
public:
    Problem(std::string name, std::size_t objectives, Bounds bounds);
    virtual ~Problem() = default;

    Problem(const Problem&) = delete;
    Problem& operator=(const Problem&) = delete;

    [[nodiscard]] const std::string& name() const noexcept { return name_; }
    [[nodiscard]] std::size_t dimension() const noexcept { return bounds_.size(); }
    [[nodiscard]] std::size_t objectives() const noexcept { return objectives_; }
    [[nodiscard]] const Bounds& bounds() const noexcept { return bounds_; }

    [[nodiscard]] virtual ObjectiveVector evaluate(std::span<const double> x) const = 0;
    [[nodiscard]] virtual ObjectiveVector to_report_units(ObjectiveVector f) const { return f; }
    [[nodiscard]] virtual std::vector<ObjectiveVector> reference_front(std::size_t count) const = 0;

    /// Default sample count: 10 000 for two objectives, 10 011 (H = 140 lattice) for three.
    [[nodiscard]] std::size_t default_front_size() const noexcept;

protected:
    void check_dimension(std::span<const double> x) const;

private:
    std::string name_;
    std::size_t objectives_;
    Bounds bounds_;
};

/// Tunables for problems whose definition leaves a constant open.
struct ProblemOptions {
    double p3_exponent = 100.0;
    double truss_tau = 75000.0;
    std::size_t truss_sweep = 1'000'000; ///< brute-force samples behind the truss reference front
    std::uint64_t truss_sweep_seed = 20210901;
};

/// Names accepted by make_problem: P1..P14 and truss (case-insensitive).
std::vector<std::string> problem_names();
bool is_known_problem(std::string_view name);
std::unique_ptr<Problem> make_problem(std::string_view name, const ProblemOptions& options = {});

// Four-bar plane truss.
namespace truss {
inline constexpr double kForce = 10.0;      // kN
inline constexpr double kModulus = 2.0e5;   // kN/cm^2
inline constexpr double kStress = 10.0;     // kN/cm^2
inline constexpr double kLength = 0.2;      // m

/// Objectives with compliance multiplied by tau (tau = 1 gives the original units).
ObjectiveVector objectives(std::span<const double> x, double tau);
/// Divides the scaled compliance by tau.
ObjectiveVector descale(ObjectiveVector f, double tau);
Bounds bounds();
} // namespace truss

// Reference-front CSV cache: header `# problem=<name> m=<m> count=<k>`, then
// one comma-separated objective vector per line at 17 significant digits.

void write_front_csv(const std::filesystem::path& path, std::string_view problem, std::size_t m,
                     const std::vector<ObjectiveVector>& front);
std::vector<ObjectiveVector> read_front_csv(const std::filesystem::path& path);

std::filesystem::path reference_front_path(const std::filesystem::path& cache_dir, std::string_view problem,
                                           std::size_t count);

/// Loads the cached front or samples and caches it (write to a temp file, then rename).
std::vector<ObjectiveVector> load_or_build_reference_front(const Problem& problem, std::size_t count,
                                                           const std::filesystem::path& cache_dir);

} // namespace mostad
