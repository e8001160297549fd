#include "mostad/algorithm.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "mostad/metrics.hpp"

namespace mostad {

namespace {

/// `count` distinct indices from [0, n), uniformly without replacement.
std::vector<std::size_t> sample_indices(std::size_t n, std::size_t count, RngStream& rng)
{
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t i = 0; i < count; ++i) {
        std::swap(idx[i], idx[i + rng.index(n - i)]);
    }
    idx.resize(count);
    return idx;
}

/// Evaluates as many of `xs` as the budget allows. Returns false if some were dropped.
bool evaluate_within_budget(AlgorithmState& state, std::vector<DecisionVector> xs, Offspring& out)
{
    for (auto& x : xs) {
        if (state.budget_left() == 0) {
            return false;
        }
        auto f = state.problem->evaluate(x);
        state.evaluations.add();
        state.ideal.update(f);
        out.x.push_back(std::move(x));
        out.f.push_back(std::move(f));
    }
    return true;
}

void record_generation(AlgorithmState& state, std::vector<GenerationTrace>& trace)
{
    GenerationTrace t;
    t.generation = state.generation;
    t.evaluations = state.evaluations.count();
    t.ideal = state.ideal.values();
    t.g_values.reserve(state.subproblems.size());
    for (std::size_t i = 0; i < state.subproblems.size(); ++i) {
        t.g_values.push_back(state.g(state.subproblems[i].incumbent_f, i));
    }
    trace.push_back(std::move(t));
}

} // namespace

void AlgorithmConfig::validate() const
{
    require(population >= 1, "population must be positive");
    require(neighborhood >= 1 && neighborhood <= population, "need 1 <= Nh <= N");
    require(parent_count() <= population, "cannot draw more parents than the population holds");
    require(max_evals >= population, "evaluation budget must cover the initial population");
    require(scope_probability >= 0.0 && scope_probability <= 1.0, "scope probability must lie in [0, 1]");
    operators.validate();
}

std::size_t AlgorithmState::budget_left() const noexcept
{
    const auto used = evaluations.count();
    return used >= config.max_evals ? 0 : config.max_evals - used;
}

ScalarizationContext AlgorithmState::context(std::size_t i) const
{
    return ScalarizationContext{subproblems[i].weighting, ideal.values()};
}

double AlgorithmState::g(std::span<const double> f, std::size_t i) const
{
    return scalarize(config.scalarization, f, context(i));
}

AlgorithmState initialize(const Problem& problem, const AlgorithmConfig& config)
{
    try {
        config.validate();
    } catch (const ContractViolation& e) {
        throw ConfigError(e.what());
    }
    if (problem.objectives() < 2) {
        throw ConfigError(problem.name() + ": decomposition needs at least two objectives");
    }

    AlgorithmState state;
    state.problem = &problem;
    state.config = config;
    state.rng = RngStream(config.seed);
    state.params = config.operators;
    state.params.alpha = state.params.alpha_max;
    state.params.gamma = state.params.gamma_max;

    const auto weights = generate_weights(problem.objectives(), config.population, state.rng);
    state.neighborhoods = build_neighborhoods(weights, config.neighborhood);

    const auto& lo = problem.bounds().lower();
    const auto& hi = problem.bounds().upper();
    state.ideal = IdealPoint::unset(problem.objectives());
    state.subproblems.resize(config.population);
    for (std::size_t i = 0; i < config.population; ++i) {
        auto& sp = state.subproblems[i];
        sp.index = i;
        sp.weighting = Weighting(weights[i]);
        sp.incumbent.resize(problem.dimension());
        for (std::size_t d = 0; d < sp.incumbent.size(); ++d) {
            sp.incumbent[d] = state.rng.uniform(lo[d], hi[d]);
        }
        sp.incumbent_f = problem.evaluate(sp.incumbent);
        state.evaluations.add();
        state.ideal.update(sp.incumbent_f);
    }
    state.complete = state.budget_left() == 0;
    return state;
}

Offspring reproduce(AlgorithmState& state)
{
    Offspring q;
    if (state.complete || state.budget_left() == 0) {
        state.complete = true;
        return q;
    }
    const auto& bounds = state.problem->bounds();
    const auto parents = sample_indices(state.subproblems.size(), state.config.parent_count(), state.rng);

    std::vector<DecisionVector> pool;
    pool.reserve(3 * parents.size() * state.params.se);
    auto append = [&pool](std::vector<DecisionVector> xs) {
        std::move(xs.begin(), xs.end(), std::back_inserter(pool));
    };
    for (auto p : parents) {
        append(rotation(state.subproblems[p].incumbent, state.params, state.rng, bounds));
    }
    for (auto p : parents) {
        append(expansion(state.subproblems[p].incumbent, state.params, state.rng, bounds));
    }
    for (auto p : parents) {
        append(axesion(state.subproblems[p].incumbent, state.params, state.rng, bounds));
    }

    q.x.reserve(pool.size());
    q.f.reserve(pool.size());
    if (!evaluate_within_budget(state, std::move(pool), q) || state.budget_left() == 0) {
        state.complete = true;
    }
    return q;
}

UpdateStats update(AlgorithmState& state, const Offspring& offspring)
{
    UpdateStats stats;
    const std::size_t n = state.subproblems.size();
    const std::size_t nh = state.config.neighborhood;
    const auto& bounds = state.problem->bounds();

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), state.rng.engine());

    for (auto i : order) {
        const bool random_scope = state.rng.uniform(0.0, 1.0) < state.config.scope_probability;
        const auto scope = random_scope ? sample_indices(n, nh, state.rng) : state.neighborhoods[i];
        if (offspring.size() == 0) {
            continue;
        }

        std::size_t best = 0;
        double best_g = std::numeric_limits<double>::infinity();
        for (std::size_t c = 0; c < offspring.size(); ++c) {
            const double g = state.g(offspring.f[c], i);
            if (g < best_g) {
                best_g = g;
                best = c;
            }
        }
        stats.comparisons += offspring.size();

        ++stats.comparisons;
        if (best_g > state.g(state.subproblems[i].incumbent_f, i)) {
            continue;
        }
        ++stats.improved;

        // Strengthened search: translate from the incumbent through the winning offspring.
        Offspring candidates;
        candidates.x.push_back(offspring.x[best]);
        candidates.f.push_back(offspring.f[best]);
        if (state.budget_left() > 0) {
            try {
                auto moves = translation(offspring.x[best], state.subproblems[i].incumbent, state.params, state.rng,
                                         bounds);
                const auto before = state.evaluations.count();
                if (!evaluate_within_budget(state, std::move(moves), candidates)) {
                    state.complete = true;
                }
                stats.strengthened_evaluations += state.evaluations.count() - before;
            } catch (const DegeneratePair&) {
                // offspring coincides with the incumbent; keep it alone
            }
        }

        for (auto j : scope) {
            std::size_t pick = 0;
            double pick_g = std::numeric_limits<double>::infinity();
            for (std::size_t c = 0; c < candidates.size(); ++c) {
                const double g = state.g(candidates.f[c], j);
                if (g < pick_g) {
                    pick_g = g;
                    pick = c;
                }
            }
            stats.comparisons += candidates.size() + 1;
            auto& target = state.subproblems[j];
            const double old_g = state.g(target.incumbent_f, j);
            if (pick_g < old_g) {
                target.incumbent = candidates.x[pick];
                target.incumbent_f = candidates.f[pick];
                ++stats.replacements;
                if (state.config.record_replacements) {
                    state.replacements.push_back({state.generation, j, old_g, pick_g});
                }
            }
        }
    }

    state.params = step_schedule(state.params);
    ++state.generation;
    if (state.budget_left() == 0) {
        state.complete = true;
    }
    return stats;
}

RunResult run(const Problem& problem, const AlgorithmConfig& config)
{
    auto state = initialize(problem, config);
    RunResult result;
    if (config.record_trace) {
        record_generation(state, result.trace);
    }
    while (!state.complete) {
        const auto q = reproduce(state);
        if (q.size() == 0) {
            break;
        }
        update(state, q);
        if (config.record_trace) {
            record_generation(state, result.trace);
        }
    }

    result.population.reserve(state.subproblems.size());
    result.objectives.reserve(state.subproblems.size());
    std::vector<ObjectiveVector> reported;
    for (auto& sp : state.subproblems) {
        result.population.push_back(sp.incumbent);
        result.objectives.push_back(sp.incumbent_f);
        reported.push_back(problem.to_report_units(sp.incumbent_f));
    }
    result.front = nondominated_filter(reported);
    result.ideal = state.ideal.values();
    result.replacements = std::move(state.replacements);
    result.evaluations = state.evaluations.count();
    result.generations = state.generation;
    return result;
}

} // namespace mostad
