#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mostad/core.hpp"

namespace mostad {

/// Non-negative weights summing to one, one per objective.
using WeightVector = std::vector<double>;

/// For each subproblem, the indices of its nearest weight vectors (itself first).
struct NeighborhoodTable {
    std::vector<std::vector<std::size_t>> neighbors;

    [[nodiscard]] std::size_t size() const noexcept { return neighbors.size(); }
    [[nodiscard]] const std::vector<std::size_t>& operator[](std::size_t i) const { return neighbors[i]; }
};

/// Number of lattice vectors, C(H + m - 1, m - 1).
std::uint64_t lattice_size(std::size_t m, std::size_t divisions);

/// Smallest H whose lattice holds at least `population` vectors.
std::size_t divisions_for(std::size_t m, std::size_t population);

/// All vectors (i1/H, ..., im/H) with integer parts summing to H, in
/// lexicographic order of the integer parts.
std::vector<WeightVector> simplex_lattice(std::size_t m, std::size_t divisions);

/// Picks `count` distinct vectors uniformly without replacement. The chosen
/// vectors keep their relative order from `all`.
std::vector<WeightVector> subsample_weights(const std::vector<WeightVector>& all, std::size_t count, RngStream& rng);

/// Lattice with the smallest sufficient H, subsampled to `population` vectors.
std::vector<WeightVector> generate_weights(std::size_t m, std::size_t population, RngStream& rng);

/// Nh nearest vectors by Euclidean distance for each weight; ties go to the lower index.
NeighborhoodTable build_neighborhoods(const std::vector<WeightVector>& weights, std::size_t neighborhood_size);

} // namespace mostad
