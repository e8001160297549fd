#include "mostad/decomposition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace mostad {

IdealPoint::IdealPoint(std::vector<double> z)
    : z_(std::move(z))
{
}

IdealPoint IdealPoint::unset(std::size_t m)
{
    return IdealPoint(std::vector<double>(m, std::numeric_limits<double>::infinity()));
}

void IdealPoint::update(std::span<const double> f)
{
    require(f.size() == z_.size(), "ideal point: dimension mismatch");
    for (std::size_t i = 0; i < f.size(); ++i) {
        z_[i] = std::min(z_[i], f[i]);
    }
}

IdealPoint update_ideal(IdealPoint z, std::span<const double> f)
{
    z.update(f);
    return z;
}

Weighting::Weighting(WeightVector lambda)
    : lambda_(std::move(lambda))
    , omega_(lambda_.size())
{
    for (std::size_t i = 0; i < lambda_.size(); ++i) {
        require(lambda_[i] >= 0.0, "weighting: negative weight component");
        omega_[i] = 1.0 / std::max(lambda_[i], kWeightFloor);
    }
}

std::string_view to_string(Scalarization s) noexcept
{
    switch (s) {
    case Scalarization::ModifiedTchebycheff:
        return "modified_tchebycheff";
    case Scalarization::Tchebycheff:
        return "tchebycheff";
    }
    return "unknown";
}

Scalarization parse_scalarization(std::string_view name)
{
    if (name == "modified_tchebycheff" || name == "tmd") {
        return Scalarization::ModifiedTchebycheff;
    }
    if (name == "tchebycheff" || name == "te") {
        return Scalarization::Tchebycheff;
    }
    throw ConfigError("unknown scalarization '" + std::string(name) + "'");
}

double tchebycheff(std::span<const double> f, const ScalarizationContext& ctx)
{
    const auto& lambda = ctx.weighting.lambda();
    require(f.size() == lambda.size() && f.size() == ctx.ideal.size(), "tchebycheff: dimension mismatch");
    double g = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        g = std::max(g, lambda[i] * std::abs(f[i] - ctx.ideal[i]));
    }
    return g;
}

double weighted_sum(std::span<const double> f, std::span<const double> lambda)
{
    require(f.size() == lambda.size(), "weighted_sum: dimension mismatch");
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        s += lambda[i] * f[i];
    }
    return s;
}

double cos_angle(std::span<const double> v, std::span<const double> u)
{
    require(v.size() == u.size(), "cos_angle: dimension mismatch");
    double dot = 0.0;
    double vv = 0.0;
    double uu = 0.0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        dot += v[i] * u[i];
        vv += v[i] * v[i];
        uu += u[i] * u[i];
    }
    if (vv == 0.0 || uu == 0.0) {
        throw DegenerateVector("cos_angle: zero-length vector");
    }
    return std::clamp(dot / (std::sqrt(vv) * std::sqrt(uu)), -1.0, 1.0);
}

double matching_degree(std::span<const double> f, const ScalarizationContext& ctx)
{
    const auto& omega = ctx.weighting.omega();
    require(f.size() == omega.size() && f.size() == ctx.ideal.size(), "matching_degree: dimension mismatch");
    double dot = 0.0;
    double dd = 0.0;
    double ww = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i) {
        const double d = f[i] - ctx.ideal[i];
        dot += omega[i] * d;
        dd += d * d;
        ww += omega[i] * omega[i];
    }
    if (dd == 0.0) {
        return 0.0;
    }
    const double c = std::clamp(dot / (std::sqrt(ww) * std::sqrt(dd)), -1.0, 1.0);
    return std::abs(c - 1.0);
}

double modified_tchebycheff(std::span<const double> f, const ScalarizationContext& ctx)
{
    return tchebycheff(f, ctx) * (1.0 + matching_degree(f, ctx));
}

double scalarize(Scalarization kind, std::span<const double> f, const ScalarizationContext& ctx)
{
    switch (kind) {
    case Scalarization::ModifiedTchebycheff:
        return modified_tchebycheff(f, ctx);
    case Scalarization::Tchebycheff:
        return tchebycheff(f, ctx);
    }
    return tchebycheff(f, ctx);
}

} // namespace mostad
