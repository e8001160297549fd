#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace mostad {

/// A point in decision space.
using DecisionVector = std::vector<double>;
/// A point in objective space (minimisation).
using ObjectiveVector = std::vector<double>;

/// Raised when a caller breaks an operation's precondition.
class ContractViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised for invalid user-facing configuration (unknown names, bad sizes).
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws ContractViolation with `message` unless `condition` holds.
inline void require(bool condition, const std::string& message)
{
    if (!condition) {
        throw ContractViolation(message);
    }
}

/// Per-variable box constraints.
class Bounds {
public:
    Bounds() = default;
    Bounds(std::vector<double> lower, std::vector<double> upper);

    /// The same [lo, hi] interval for all n variables.
    static Bounds uniform(std::size_t n, double lo, double hi);

    [[nodiscard]] std::size_t size() const noexcept { return lower_.size(); }
    [[nodiscard]] const std::vector<double>& lower() const noexcept { return lower_; }
    [[nodiscard]] const std::vector<double>& upper() const noexcept { return upper_; }
    [[nodiscard]] bool contains(std::span<const double> x) const;

private:
    std::vector<double> lower_;
    std::vector<double> upper_;
};

/// Projects every component of `x` onto its [lower, upper] interval.
DecisionVector clamp_to_bounds(DecisionVector x, const Bounds& bounds);

/// Seeded random stream. Single owner; never share one across threads.
class RngStream {
public:
    explicit RngStream(std::uint64_t seed);

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

    /// Draw in [lo, hi).
    double uniform(double lo, double hi);
    double gaussian(double mean, double stddev);
    /// Uniform index in [0, n).
    std::size_t index(std::size_t n);

    std::mt19937_64& engine() noexcept { return engine_; }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

double uniform(RngStream& rng, double lo, double hi);
double gaussian(RngStream& rng, double mean, double stddev);

/// Independent seed for the `index`-th run of a campaign (splitmix64 mix).
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) noexcept;

/// Counts objective-function evaluations for one run.
class EvaluationCounter {
public:
    void add(std::size_t n = 1) noexcept { count_ += n; }
    [[nodiscard]] std::size_t count() const noexcept { return count_; }

private:
    std::size_t count_ = 0;
};

double squared_norm(std::span<const double> v) noexcept;
double norm(std::span<const double> v) noexcept;

} // namespace mostad
