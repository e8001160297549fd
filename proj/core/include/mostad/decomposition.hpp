#pragma once

#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "mostad/core.hpp"
#include "mostad/weights.hpp"

namespace mostad {

/// Weight components below this are floored when forming omega = 1/lambda.
inline constexpr double kWeightFloor = 1e-6;

/// Raised by cos_angle for a zero-length input.
class DegenerateVector : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Componentwise minimum of every objective vector seen in a run.
class IdealPoint {
public:
    IdealPoint() = default;
    explicit IdealPoint(std::vector<double> z);

    /// +inf in every component; the first update replaces it.
    static IdealPoint unset(std::size_t m);

    void update(std::span<const double> f);

    [[nodiscard]] std::size_t size() const noexcept { return z_.size(); }
    [[nodiscard]] const std::vector<double>& values() const noexcept { return z_; }
    [[nodiscard]] double operator[](std::size_t i) const { return z_[i]; }

private:
    std::vector<double> z_;
};

IdealPoint update_ideal(IdealPoint z, std::span<const double> f);

/// A weight vector together with its reciprocal direction omega.
class Weighting {
public:
    Weighting() = default;
    explicit Weighting(WeightVector lambda);

    [[nodiscard]] const WeightVector& lambda() const noexcept { return lambda_; }
    [[nodiscard]] const std::vector<double>& omega() const noexcept { return omega_; }
    [[nodiscard]] std::size_t size() const noexcept { return lambda_.size(); }

private:
    WeightVector lambda_;
    std::vector<double> omega_;
};

/// Everything a scalarization needs: the subproblem weighting and the current ideal point.
struct ScalarizationContext {
    const Weighting& weighting;
    std::span<const double> ideal;
};

enum class Scalarization { ModifiedTchebycheff, Tchebycheff };

std::string_view to_string(Scalarization s) noexcept;
Scalarization parse_scalarization(std::string_view name);

/// max_i lambda_i |f_i - z*_i|
double tchebycheff(std::span<const double> f, const ScalarizationContext& ctx);

double weighted_sum(std::span<const double> f, std::span<const double> lambda);

/// (v . u) / (|v| |u|), clamped into [-1, 1].
double cos_angle(std::span<const double> v, std::span<const double> u);

/// |cos(omega, f - z*) - 1|, in [0, 2]. Zero when f coincides with z*.
double matching_degree(std::span<const double> f, const ScalarizationContext& ctx);

/// tchebycheff * (1 + matching_degree)
double modified_tchebycheff(std::span<const double> f, const ScalarizationContext& ctx);

double scalarize(Scalarization kind, std::span<const double> f, const ScalarizationContext& ctx);

} // namespace mostad
