#include "mostad/core.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace mostad {

Bounds::Bounds(std::vector<double> lower, std::vector<double> upper)
    : lower_(std::move(lower))
    , upper_(std::move(upper))
{
    require(lower_.size() == upper_.size(), "bounds: lower and upper differ in length");
    for (std::size_t i = 0; i < lower_.size(); ++i) {
        require(lower_[i] < upper_[i], "bounds: lower must be strictly below upper");
    }
}

Bounds Bounds::uniform(std::size_t n, double lo, double hi)
{
    return Bounds(std::vector<double>(n, lo), std::vector<double>(n, hi));
}

bool Bounds::contains(std::span<const double> x) const
{
    if (x.size() != size()) {
        return false;
    }
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(x[i] >= lower_[i] && x[i] <= upper_[i])) {
            return false;
        }
    }
    return true;
}

DecisionVector clamp_to_bounds(DecisionVector x, const Bounds& bounds)
{
    require(x.size() == bounds.size(), "clamp_to_bounds: dimension mismatch");
    for (std::size_t i = 0; i < x.size(); ++i) {
        x[i] = std::clamp(x[i], bounds.lower()[i], bounds.upper()[i]);
    }
    return x;
}

RngStream::RngStream(std::uint64_t seed)
    : seed_(seed)
    , engine_(seed)
{
}

double RngStream::uniform(double lo, double hi)
{
    require(lo < hi, "uniform: lo must be below hi");
    // 53 random bits -> [0, 1)
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    const double v = lo + (hi - lo) * u;
    return v < hi ? v : std::nextafter(hi, lo);
}

double RngStream::gaussian(double mean, double stddev)
{
    require(stddev > 0.0, "gaussian: stddev must be positive");
    std::normal_distribution<double> dist(mean, stddev);
    return dist(engine_);
}

std::size_t RngStream::index(std::size_t n)
{
    require(n > 0, "index: empty range");
    std::uniform_int_distribution<std::size_t> dist(0, n - 1);
    return dist(engine_);
}

double uniform(RngStream& rng, double lo, double hi) { return rng.uniform(lo, hi); }

double gaussian(RngStream& rng, double mean, double stddev) { return rng.gaussian(mean, stddev); }

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) noexcept
{
    std::uint64_t z = base_seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double squared_norm(std::span<const double> v) noexcept
{
    return std::inner_product(v.begin(), v.end(), v.begin(), 0.0);
}

double norm(std::span<const double> v) noexcept { return std::sqrt(squared_norm(v)); }

} // namespace mostad
