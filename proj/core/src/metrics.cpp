#include "mostad/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace mostad {

namespace {

bool weakly_dominates(std::span<const double> a, std::span<const double> b) noexcept
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

std::vector<ObjectiveVector> inside_box(const std::vector<ObjectiveVector>& solutions, std::span<const double> ref)
{
    std::vector<ObjectiveVector> kept;
    for (const auto& s : solutions) {
        require(s.size() == ref.size(), "hypervolume: dimension mismatch");
        bool inside = true;
        for (std::size_t i = 0; i < s.size() && inside; ++i) {
            inside = s[i] < ref[i];
        }
        if (inside) {
            kept.push_back(s);
        }
    }
    return kept;
}

/// Area dominated by 2-D points, bounded by (r0, r1). Input needs no filtering.
double area_2d(std::vector<std::pair<double, double>> pts, double r0, double r1)
{
    std::sort(pts.begin(), pts.end());
    double area = 0.0;
    double best = r1;
    for (const auto& [x, y] : pts) {
        if (y < best) {
            area += (r0 - x) * (best - y);
            best = y;
        }
    }
    return area;
}

double exact_2d(const std::vector<ObjectiveVector>& pts, std::span<const double> ref)
{
    std::vector<std::pair<double, double>> xy;
    xy.reserve(pts.size());
    for (const auto& p : pts) {
        xy.emplace_back(p[0], p[1]);
    }
    return area_2d(std::move(xy), ref[0], ref[1]);
}

// Slice along the third objective; each slab contributes its 2-D area times its height.
double exact_3d(std::vector<ObjectiveVector> pts, std::span<const double> ref)
{
    std::sort(pts.begin(), pts.end(), [](const auto& a, const auto& b) { return a[2] < b[2]; });
    double volume = 0.0;
    std::vector<std::pair<double, double>> active;
    active.reserve(pts.size());
    for (std::size_t i = 0; i < pts.size(); ++i) {
        active.emplace_back(pts[i][0], pts[i][1]);
        const double top = i + 1 < pts.size() ? pts[i + 1][2] : ref[2];
        const double height = top - pts[i][2];
        if (height > 0.0) {
            volume += height * area_2d(active, ref[0], ref[1]);
        }
    }
    return volume;
}

double normal_sf_two_sided(double z) { return std::erfc(std::abs(z) / std::sqrt(2.0)); }

} // namespace

bool dominates(std::span<const double> a, std::span<const double> b) noexcept
{
    bool strictly = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
        if (a[i] < b[i]) {
            strictly = true;
        }
    }
    return strictly;
}

std::vector<std::size_t> nondominated_indices(const std::vector<ObjectiveVector>& points)
{
    require(!points.empty(), "nondominated_filter: empty input");
    const std::size_t m = points.front().size();
    for (const auto& p : points) {
        require(p.size() == m, "nondominated_filter: inconsistent objective counts");
    }

    // A dominator always precedes its victim in lexicographic order, and of
    // equal points the lowest index comes first.
    std::vector<std::size_t> order(points.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        if (points[a] != points[b]) {
            return points[a] < points[b];
        }
        return a < b;
    });

    std::vector<std::size_t> kept;
    if (m == 2) {
        double best = std::numeric_limits<double>::infinity();
        for (auto i : order) {
            if (points[i][1] < best) {
                best = points[i][1];
                kept.push_back(i);
            }
        }
    } else {
        for (auto i : order) {
            const bool covered = std::any_of(kept.begin(), kept.end(),
                                             [&](std::size_t k) { return weakly_dominates(points[k], points[i]); });
            if (!covered) {
                kept.push_back(i);
            }
        }
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

std::vector<ObjectiveVector> nondominated_filter(const std::vector<ObjectiveVector>& points)
{
    std::vector<ObjectiveVector> out;
    for (auto i : nondominated_indices(points)) {
        out.push_back(points[i]);
    }
    return out;
}

double igd_plus(const std::vector<ObjectiveVector>& solutions, const std::vector<ObjectiveVector>& reference)
{
    require(!solutions.empty() && !reference.empty(), "igd_plus: empty input");
    const std::size_t m = reference.front().size();
    double total = 0.0;
    for (const auto& z : reference) {
        require(z.size() == m, "igd_plus: inconsistent objective counts");
        double best = std::numeric_limits<double>::infinity();
        for (const auto& a : solutions) {
            require(a.size() == m, "igd_plus: inconsistent objective counts");
            double d2 = 0.0;
            for (std::size_t j = 0; j < m && d2 < best; ++j) {
                const double d = std::max(a[j] - z[j], 0.0);
                d2 += d * d;
            }
            best = std::min(best, d2);
        }
        total += std::sqrt(best);
    }
    return total / static_cast<double>(reference.size());
}

ObjectiveVector hv_reference_point(const std::vector<ObjectiveVector>& reference_front)
{
    require(!reference_front.empty(), "hv_reference_point: empty front");
    ObjectiveVector r(reference_front.front().size(), -std::numeric_limits<double>::infinity());
    for (const auto& f : reference_front) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            r[i] = std::max(r[i], f[i]);
        }
    }
    for (auto& v : r) {
        v *= 1.2;
    }
    return r;
}

double hypervolume(const std::vector<ObjectiveVector>& solutions, std::span<const double> ref_point,
                   std::uint64_t seed)
{
    auto pts = inside_box(solutions, ref_point);
    if (pts.empty()) {
        return 0.0;
    }
    switch (ref_point.size()) {
    case 1:
        return ref_point[0] - std::min_element(pts.begin(), pts.end())->front();
    case 2:
        return exact_2d(pts, ref_point);
    case 3:
        return exact_3d(nondominated_filter(pts), ref_point);
    default:
        return hypervolume_monte_carlo(pts, ref_point, 1'000'000, seed).value;
    }
}

MonteCarloEstimate hypervolume_monte_carlo(const std::vector<ObjectiveVector>& solutions,
                                           std::span<const double> ref_point, std::size_t samples,
                                           std::uint64_t seed)
{
    require(samples > 0, "hypervolume_monte_carlo: need samples");
    auto pts = inside_box(solutions, ref_point);
    if (pts.empty()) {
        return {};
    }
    pts = nondominated_filter(pts);
    const std::size_t m = ref_point.size();
    std::vector<double> lo(ref_point.begin(), ref_point.end());
    for (const auto& p : pts) {
        for (std::size_t i = 0; i < m; ++i) {
            lo[i] = std::min(lo[i], p[i]);
        }
    }
    double box = 1.0;
    for (std::size_t i = 0; i < m; ++i) {
        box *= ref_point[i] - lo[i];
    }

    RngStream rng(seed);
    std::vector<double> sample(m);
    std::size_t hits = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        for (std::size_t i = 0; i < m; ++i) {
            sample[i] = rng.uniform(lo[i], ref_point[i]);
        }
        const bool hit = std::any_of(pts.begin(), pts.end(), [&](const auto& p) { return weakly_dominates(p, sample); });
        hits += hit ? 1 : 0;
    }
    const double n = static_cast<double>(samples);
    const double frac = static_cast<double>(hits) / n;
    return {box * frac, box * std::sqrt(frac * (1.0 - frac) / n)};
}

MetricReport evaluate_metrics(const std::vector<ObjectiveVector>& solutions,
                              const std::vector<ObjectiveVector>& reference_front)
{
    MetricReport report;
    report.reference_point = hv_reference_point(reference_front);
    report.igd_plus = igd_plus(solutions, reference_front);
    report.hv = hypervolume(solutions, report.reference_point);
    report.front_size = solutions.size();
    return report;
}

double median(std::vector<double> values)
{
    require(!values.empty(), "median: empty input");
    std::sort(values.begin(), values.end());
    const std::size_t n = values.size();
    return n % 2 == 1 ? values[n / 2] : 0.5 * (values[n / 2 - 1] + values[n / 2]);
}

WilcoxonVerdict wilcoxon_rank_sum(std::span<const double> a, std::span<const double> b, double alpha, Better better)
{
    if (a.size() < 5 || b.size() < 5) {
        throw InsufficientData("wilcoxon_rank_sum: need at least five samples per group");
    }
    const std::size_t n1 = a.size();
    const std::size_t n2 = b.size();
    const std::size_t n = n1 + n2;

    std::vector<std::pair<double, bool>> pooled; // value, from a
    pooled.reserve(n);
    for (double v : a) pooled.emplace_back(v, true);
    for (double v : b) pooled.emplace_back(v, false);
    std::sort(pooled.begin(), pooled.end(), [](const auto& x, const auto& y) { return x.first < y.first; });

    double rank_sum = 0.0;
    double tie_term = 0.0;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && pooled[j].first == pooled[i].first) {
            ++j;
        }
        const double midrank = 0.5 * static_cast<double>(i + 1 + j);
        const double t = static_cast<double>(j - i);
        tie_term += t * t * t - t;
        for (std::size_t k = i; k < j; ++k) {
            if (pooled[k].second) {
                rank_sum += midrank;
            }
        }
        i = j;
    }

    const double dn1 = static_cast<double>(n1);
    const double dn2 = static_cast<double>(n2);
    const double dn = static_cast<double>(n);
    const double mean = dn1 * (dn + 1.0) / 2.0;
    const double variance = dn1 * dn2 / 12.0 * ((dn + 1.0) - tie_term / (dn * (dn - 1.0)));

    WilcoxonVerdict verdict;
    verdict.statistic = rank_sum;
    const double diff = rank_sum - mean;
    if (variance <= 0.0 || diff == 0.0) {
        return verdict;
    }
    const double corrected = std::max(std::abs(diff) - 0.5, 0.0);
    verdict.z = std::copysign(corrected / std::sqrt(variance), diff);
    verdict.p_value = std::min(1.0, normal_sf_two_sided(verdict.z));
    if (verdict.p_value < alpha) {
        const double ma = median({a.begin(), a.end()});
        const double mb = median({b.begin(), b.end()});
        // lower ranks for `a` means `a` holds the smaller values
        bool a_lower = diff < 0.0;
        if (ma != mb) {
            a_lower = ma < mb;
        }
        const bool a_better = better == Better::Lower ? a_lower : !a_lower;
        verdict.symbol = a_better ? "-" : "+";
    }
    return verdict;
}

} // namespace mostad
