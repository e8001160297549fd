#include "mostad/weights.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

namespace mostad {

namespace {

void enumerate(std::size_t m, std::size_t remaining, std::size_t divisions, std::vector<std::size_t>& parts,
               std::vector<WeightVector>& out)
{
    const std::size_t pos = parts.size();
    if (pos + 1 == m) {
        parts.push_back(remaining);
        WeightVector w(m);
        for (std::size_t i = 0; i < m; ++i) {
            w[i] = static_cast<double>(parts[i]) / static_cast<double>(divisions);
        }
        out.push_back(std::move(w));
        parts.pop_back();
        return;
    }
    for (std::size_t k = 0; k <= remaining; ++k) {
        parts.push_back(k);
        enumerate(m, remaining - k, divisions, parts, out);
        parts.pop_back();
    }
}

} // namespace

std::uint64_t lattice_size(std::size_t m, std::size_t divisions)
{
    require(m >= 1, "lattice_size: m must be positive");
    // C(H + m - 1, m - 1), multiplicative form keeps every step integral
    std::uint64_t result = 1;
    const std::uint64_t k = m - 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        result = result * (divisions + i) / i;
    }
    return result;
}

std::size_t divisions_for(std::size_t m, std::size_t population)
{
    require(m >= 2, "divisions_for: need at least two objectives");
    require(population >= 1, "divisions_for: population must be positive");
    std::size_t h = 1;
    while (lattice_size(m, h) < population) {
        ++h;
    }
    return h;
}

std::vector<WeightVector> simplex_lattice(std::size_t m, std::size_t divisions)
{
    require(m >= 2, "simplex_lattice: need at least two objectives");
    require(divisions >= 1, "simplex_lattice: need at least one division");
    std::vector<WeightVector> out;
    out.reserve(lattice_size(m, divisions));
    std::vector<std::size_t> parts;
    parts.reserve(m);
    enumerate(m, divisions, divisions, parts, out);
    return out;
}

std::vector<WeightVector> subsample_weights(const std::vector<WeightVector>& all, std::size_t count, RngStream& rng)
{
    require(count <= all.size(), "subsample_weights: more vectors requested than the lattice holds; raise H");
    if (count == all.size()) {
        return all;
    }
    std::vector<std::size_t> idx(all.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    // partial Fisher-Yates
    for (std::size_t i = 0; i < count; ++i) {
        const std::size_t j = i + rng.index(all.size() - i);
        std::swap(idx[i], idx[j]);
    }
    idx.resize(count);
    std::sort(idx.begin(), idx.end());
    std::vector<WeightVector> out;
    out.reserve(count);
    for (auto i : idx) {
        out.push_back(all[i]);
    }
    return out;
}

std::vector<WeightVector> generate_weights(std::size_t m, std::size_t population, RngStream& rng)
{
    return subsample_weights(simplex_lattice(m, divisions_for(m, population)), population, rng);
}

NeighborhoodTable build_neighborhoods(const std::vector<WeightVector>& weights, std::size_t neighborhood_size)
{
    const std::size_t n = weights.size();
    require(neighborhood_size >= 1 && neighborhood_size <= n, "build_neighborhoods: need 1 <= Nh <= N");

    NeighborhoodTable table;
    table.neighbors.resize(n);
    std::vector<std::pair<double, std::size_t>> dist(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            double d = 0.0;
            for (std::size_t k = 0; k < weights[i].size(); ++k) {
                const double diff = weights[i][k] - weights[j][k];
                d += diff * diff;
            }
            dist[j] = {d, j};
        }
        // self always leads, even against an exact duplicate weight
        auto closer = [i](const auto& a, const auto& b) {
            if (a.first != b.first) {
                return a.first < b.first;
            }
            if ((a.second == i) != (b.second == i)) {
                return a.second == i;
            }
            return a.second < b.second;
        };
        std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(neighborhood_size), dist.end(),
                          closer);
        auto& row = table.neighbors[i];
        row.reserve(neighborhood_size);
        for (std::size_t k = 0; k < neighborhood_size; ++k) {
            row.push_back(dist[k].second);
        }
    }
    return table;
}

} // namespace mostad
