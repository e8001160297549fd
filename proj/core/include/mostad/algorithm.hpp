#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mostad/core.hpp"
#include "mostad/decomposition.hpp"
#include "mostad/operators.hpp"
#include "mostad/problems.hpp"
#include "mostad/weights.hpp"

namespace mostad {

struct AlgorithmConfig {
    std::size_t population = 200;        ///< N, one subproblem per weight vector
    std::size_t neighborhood = 20;       ///< Nh
    std::size_t parents = 0;             ///< T parents per generation; 0 means Nh
    std::size_t max_evals = 100000;
    Scalarization scalarization = Scalarization::ModifiedTchebycheff;
    OperatorParams operators;
    double scope_probability = 0.5;      ///< chance of a random replacement scope instead of B(i)
    std::uint64_t seed = 0;
    bool record_trace = false;
    bool record_replacements = false;

    [[nodiscard]] std::size_t parent_count() const noexcept { return parents == 0 ? neighborhood : parents; }
    /// Throws ContractViolation on broken invariants.
    void validate() const;
};

struct Subproblem {
    std::size_t index = 0;
    Weighting weighting;
    DecisionVector incumbent;
    ObjectiveVector incumbent_f;
};

/// Candidate solutions with their objective vectors, index-aligned.
struct Offspring {
    std::vector<DecisionVector> x;
    std::vector<ObjectiveVector> f;

    [[nodiscard]] std::size_t size() const noexcept { return x.size(); }
};

struct GenerationTrace {
    std::size_t generation = 0;
    std::size_t evaluations = 0;
    std::vector<double> ideal;
    std::vector<double> g_values; ///< per subproblem, under the ideal point at the end of the generation
};

/// One accepted incumbent replacement, scored under the ideal point current at that moment.
struct ReplacementEvent {
    std::size_t generation = 0;
    std::size_t subproblem = 0;
    double g_old = 0.0;
    double g_new = 0.0;
};

struct UpdateStats {
    std::size_t comparisons = 0;  ///< scalarized values compared
    std::size_t improved = 0;     ///< subproblems whose best offspring beat the incumbent
    std::size_t replacements = 0;
    std::size_t strengthened_evaluations = 0;
};

struct AlgorithmState {
    const Problem* problem = nullptr;
    AlgorithmConfig config;
    NeighborhoodTable neighborhoods;
    std::vector<Subproblem> subproblems;
    IdealPoint ideal;
    OperatorParams params;
    RngStream rng{0};
    EvaluationCounter evaluations;
    std::size_t generation = 0;
    bool complete = false;
    std::vector<ReplacementEvent> replacements;

    [[nodiscard]] std::size_t budget_left() const noexcept;
    [[nodiscard]] ScalarizationContext context(std::size_t i) const;
    [[nodiscard]] double g(std::span<const double> f, std::size_t i) const;
};

struct RunResult {
    std::vector<DecisionVector> population;
    std::vector<ObjectiveVector> objectives;      ///< in optimisation units
    std::vector<ObjectiveVector> front;           ///< nondominated, in reporting units
    std::vector<double> ideal;
    std::vector<GenerationTrace> trace;
    std::vector<ReplacementEvent> replacements;
    std::size_t evaluations = 0;
    std::size_t generations = 0;
};

/// Weights, neighbourhoods, a uniformly random evaluated population and the ideal point.
AlgorithmState initialize(const Problem& problem, const AlgorithmConfig& config);

/// T parents, each passed through rotation, expansion and axesion (SE candidates
/// each). Candidates are evaluated and folded into the ideal point. Stops early,
/// and marks the run complete, once the evaluation budget is spent.
Offspring reproduce(AlgorithmState& state);

/// Scalarized neighbourhood replacement with translation-based strengthened
/// search, followed by one schedule step of the operator factors.
UpdateStats update(AlgorithmState& state, const Offspring& offspring);

RunResult run(const Problem& problem, const AlgorithmConfig& config);

} // namespace mostad
