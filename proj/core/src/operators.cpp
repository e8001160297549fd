#include "mostad/operators.hpp"

#include <cmath>
#include <string>

namespace mostad {

namespace {

std::vector<DecisionVector> clamp_all(std::vector<DecisionVector> xs, const Bounds& bounds)
{
    for (auto& x : xs) {
        x = clamp_to_bounds(std::move(x), bounds);
    }
    return xs;
}

} // namespace

std::string_view to_string(RotationRange r) noexcept
{
    return r == RotationRange::Unit ? "unit" : "symmetric";
}

RotationRange parse_rotation_range(std::string_view name)
{
    if (name == "unit") {
        return RotationRange::Unit;
    }
    if (name == "symmetric") {
        return RotationRange::Symmetric;
    }
    throw ConfigError("unknown rotation range '" + std::string(name) + "'");
}

void OperatorParams::validate() const
{
    require(alpha > 0 && beta > 0 && gamma > 0 && delta_ax > 0, "operator factors must be positive");
    require(alpha_min > 0 && alpha_min < alpha_max, "need 0 < alpha_min < alpha_max");
    require(gamma_min > 0 && gamma_min < gamma_max, "need 0 < gamma_min < gamma_max");
    require(fc_alpha > 1 && fc_gamma > 1, "decay divisors must exceed 1");
    require(se >= 1, "search enforcement must be at least 1");
}

OperatorParams step_schedule(OperatorParams params)
{
    params.alpha /= params.fc_alpha;
    params.gamma /= params.fc_gamma;
    if (params.alpha < params.alpha_min) {
        params.alpha = params.alpha_max;
    }
    if (params.gamma < params.gamma_min) {
        params.gamma = params.gamma_max;
    }
    return params;
}

std::vector<DecisionVector> rotation(const DecisionVector& s, const OperatorParams& params, RngStream& rng)
{
    const std::size_t n = s.size();
    const double s_norm = norm(s);
    std::vector<DecisionVector> out(params.se, s);
    if (s_norm == 0.0) {
        return out;
    }
    const double lo = params.rotation_range == RotationRange::Unit ? 0.0 : -1.0;
    const double scale = params.alpha / (static_cast<double>(n) * s_norm);
    for (auto& cand : out) {
        for (std::size_t r = 0; r < n; ++r) {
            double row = 0.0;
            for (std::size_t c = 0; c < n; ++c) {
                row += rng.uniform(lo, 1.0) * s[c];
            }
            cand[r] += scale * row;
        }
    }
    return out;
}

std::vector<DecisionVector> translation(const DecisionVector& s_new, const DecisionVector& s_old,
                                        const OperatorParams& params, RngStream& rng)
{
    require(s_new.size() == s_old.size(), "translation: dimension mismatch");
    DecisionVector dir(s_new.size());
    for (std::size_t i = 0; i < dir.size(); ++i) {
        dir[i] = s_new[i] - s_old[i];
    }
    const double d = norm(dir);
    if (d == 0.0) {
        throw DegeneratePair("translation: states coincide");
    }
    std::vector<DecisionVector> out(params.se, s_new);
    for (auto& cand : out) {
        const double step = params.beta * rng.uniform(0.0, 1.0) / d;
        for (std::size_t i = 0; i < cand.size(); ++i) {
            cand[i] += step * dir[i];
        }
    }
    return out;
}

std::vector<DecisionVector> expansion(const DecisionVector& s, const OperatorParams& params, RngStream& rng)
{
    std::vector<DecisionVector> out(params.se, s);
    for (auto& cand : out) {
        for (std::size_t i = 0; i < cand.size(); ++i) {
            cand[i] += params.gamma * rng.gaussian(0.0, 1.0) * s[i];
        }
    }
    return out;
}

std::vector<DecisionVector> axesion(const DecisionVector& s, const OperatorParams& params, RngStream& rng)
{
    require(!s.empty(), "axesion: empty state");
    std::vector<DecisionVector> out(params.se, s);
    for (auto& cand : out) {
        const std::size_t j = rng.index(s.size());
        cand[j] += params.delta_ax * rng.gaussian(0.0, 1.0) * s[j];
    }
    return out;
}

std::vector<DecisionVector> rotation(const DecisionVector& s, const OperatorParams& params, RngStream& rng,
                                     const Bounds& bounds)
{
    return clamp_all(rotation(s, params, rng), bounds);
}

std::vector<DecisionVector> translation(const DecisionVector& s_new, const DecisionVector& s_old,
                                        const OperatorParams& params, RngStream& rng, const Bounds& bounds)
{
    return clamp_all(translation(s_new, s_old, params, rng), bounds);
}

std::vector<DecisionVector> expansion(const DecisionVector& s, const OperatorParams& params, RngStream& rng,
                                      const Bounds& bounds)
{
    return clamp_all(expansion(s, params, rng), bounds);
}

std::vector<DecisionVector> axesion(const DecisionVector& s, const OperatorParams& params, RngStream& rng,
                                    const Bounds& bounds)
{
    return clamp_all(axesion(s, params, rng), bounds);
}

} // namespace mostad
