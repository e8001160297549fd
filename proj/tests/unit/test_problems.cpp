#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>

#include "mostad/metrics.hpp"
#include "mostad/problems.hpp"
#include "mostad/wfg.hpp"
#include "oracles.hpp"
#include "wfg_golden.hpp"

using namespace mostad;
namespace fs = std::filesystem;

namespace {

constexpr double kPi = std::numbers::pi;

DecisionVector random_in(const Bounds& b, RngStream& rng)
{
    DecisionVector x(b.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = rng.uniform(b.lower()[i], b.upper()[i]);
    return x;
}

DecisionVector curve_point(std::size_t n, double x1)
{
    DecisionVector x(n, std::sin(0.5 * kPi * x1));
    x[0] = x1;
    return x;
}

/// Single-linkage components of `pts` under a Euclidean gap threshold.
std::size_t count_components(const std::vector<ObjectiveVector>& pts, double gap)
{
    std::vector<int> label(pts.size(), -1);
    int next = 0;
    for (std::size_t s = 0; s < pts.size(); ++s) {
        if (label[s] >= 0) continue;
        std::vector<std::size_t> stack{s};
        label[s] = next;
        while (!stack.empty()) {
            const auto i = stack.back();
            stack.pop_back();
            for (std::size_t j = 0; j < pts.size(); ++j) {
                if (label[j] >= 0) continue;
                double d = 0.0;
                for (std::size_t k = 0; k < pts[i].size(); ++k) d += (pts[i][k] - pts[j][k]) * (pts[i][k] - pts[j][k]);
                if (d <= gap * gap) {
                    label[j] = next;
                    stack.push_back(j);
                }
            }
        }
        ++next;
    }
    return static_cast<std::size_t>(next);
}

} // namespace

TEST(Problems, CatalogueAndLookup)
{
    EXPECT_EQ(problem_names().size(), 15u);
    for (const auto& name : problem_names()) {
        EXPECT_TRUE(is_known_problem(name));
        EXPECT_EQ(make_problem(name)->name(), name);
    }
    EXPECT_EQ(make_problem("p2")->name(), "P2");
    EXPECT_EQ(make_problem("TRUSS")->name(), "truss");
    EXPECT_FALSE(is_known_problem("P15"));
    EXPECT_THROW(make_problem("P15"), ConfigError);
}

TEST(Problems, DimensionsAndObjectives)
{
    const std::vector<std::tuple<std::string, std::size_t, std::size_t>> expected{
        {"P1", 7, 3},   {"P2", 12, 3},  {"P3", 12, 3},  {"P4", 13, 3},  {"P5", 10, 2},
        {"P6", 10, 2},  {"P7", 10, 2},  {"P8", 30, 2},  {"P9", 30, 2},  {"P10", 30, 3},
        {"P11", 12, 3}, {"P12", 14, 3}, {"P13", 13, 3}, {"P14", 13, 3}, {"truss", 4, 2}};
    for (const auto& [name, n, m] : expected) {
        const auto p = make_problem(name);
        EXPECT_EQ(p->dimension(), n) << name;
        EXPECT_EQ(p->objectives(), m) << name;
        EXPECT_THROW(p->evaluate(DecisionVector(n + 1, 0.5)), ContractViolation) << name;
    }
}

TEST(Problems, FiniteAndDeterministicOnTheBox)
{
    RngStream rng(21);
    for (const auto& name : problem_names()) {
        const auto p = make_problem(name);
        for (int t = 0; t < 300; ++t) {
            const auto x = random_in(p->bounds(), rng);
            const auto f = p->evaluate(x);
            ASSERT_EQ(f.size(), p->objectives());
            for (double v : f) ASSERT_TRUE(std::isfinite(v)) << name;
            EXPECT_EQ(f, p->evaluate(x));
        }
        const auto lo = p->evaluate(p->bounds().lower());
        const auto hi = p->evaluate(p->bounds().upper());
        for (double v : lo) EXPECT_TRUE(std::isfinite(v)) << name;
        for (double v : hi) EXPECT_TRUE(std::isfinite(v)) << name;
    }
}

TEST(P1, TailAtHalfLiesOnPlane)
{
    const auto p = make_problem("P1");
    RngStream rng(22);
    for (int t = 0; t < 1000; ++t) {
        DecisionVector x(7, 0.5);
        x[0] = rng.uniform(0, 1);
        x[1] = rng.uniform(0, 1);
        const auto f = p->evaluate(x);
        EXPECT_NEAR(f[0] + f[1] + f[2], 0.5, 1e-12);
    }
}

TEST(P2, Examples)
{
    const auto p = make_problem("P2");
    DecisionVector x(12, 0.5);
    x[0] = 0.0;
    x[1] = 0.0;
    const auto f = p->evaluate(x);
    EXPECT_NEAR(f[0], 1.0, 1e-15);
    EXPECT_NEAR(f[1], 0.0, 1e-15);
    EXPECT_NEAR(f[2], 0.0, 1e-15);

    RngStream rng(23);
    for (int t = 0; t < 1000; ++t) {
        x[0] = rng.uniform(0, 1);
        x[1] = rng.uniform(0, 1);
        EXPECT_NEAR(norm(p->evaluate(x)), 1.0, 1e-12);
    }
}

TEST(SphericalProblems, TailAtHalfLiesOnSphere)
{
    RngStream rng(24);
    for (const char* name : {"P3", "P11"}) {
        const auto p = make_problem(name);
        for (int t = 0; t < 200; ++t) {
            DecisionVector x(12, 0.5);
            x[0] = rng.uniform(0, 1);
            x[1] = rng.uniform(0, 1);
            EXPECT_NEAR(norm(p->evaluate(x)), 1.0, 1e-12) << name;
        }
    }
}

TEST(P5, ParetoSetClosedForm)
{
    const auto p = make_problem("P5");
    for (double x1 : {0.0, 0.1, 0.37, 0.5, 0.91, 1.0}) {
        const auto f = p->evaluate(curve_point(10, x1));
        EXPECT_NEAR(f[0], x1, 1e-15);
        EXPECT_NEAR(f[1], 1.0 - x1 * x1, 1e-15);
    }
}

TEST(P6, ParetoSetClosedForm)
{
    const auto p = make_problem("P6");
    for (double x1 : {0.0, 0.2, 0.5, 0.8, 1.0}) {
        const auto f = p->evaluate(curve_point(10, x1));
        EXPECT_NEAR(f[0], std::cos(kPi * x1 / 2.0), 1e-15);
        EXPECT_NEAR(f[1], 1.0 - x1 * x1, 1e-15);
    }
}

TEST(P8, OriginExample)
{
    const auto f = make_problem("P8")->evaluate(DecisionVector(30, 0.0));
    EXPECT_DOUBLE_EQ(f[0], 1.0);
    EXPECT_DOUBLE_EQ(f[1], 0.0);
}

TEST(CurveProblems, FrontIsNondominatedPartOfTheCurve)
{
    for (const char* name : {"P5", "P6", "P7", "P8", "P9"}) {
        const auto p = make_problem(name);
        std::vector<ObjectiveVector> curve;
        for (int i = 0; i < 2000; ++i) curve.push_back(p->evaluate(curve_point(p->dimension(), i / 1999.0)));
        const auto expected = oracle::nondominated(curve);
        EXPECT_EQ(p->reference_front(2000), expected) << name;
    }
    // P5 keeps the whole curve; P6 collapses onto its x1 = 1 end
    EXPECT_EQ(make_problem("P5")->reference_front(2000).size(), 2000u);
    const auto p6 = make_problem("P6")->reference_front(2000);
    ASSERT_EQ(p6.size(), 1u);
    EXPECT_NEAR(p6[0][0], 0.0, 1e-15);
    EXPECT_EQ(p6[0][1], 0.0);
}

TEST(P10, Examples)
{
    const auto p = make_problem("P10");
    DecisionVector x(30, 2.0);
    x[0] = x[1] = x[2] = 1.0;
    auto f = p->evaluate(x);
    EXPECT_DOUBLE_EQ(f[0], 1.0);
    EXPECT_DOUBLE_EQ(f[1], 1.0);
    EXPECT_DOUBLE_EQ(f[2], 1.0);
    x[0] = 4.0;
    f = p->evaluate(x);
    EXPECT_DOUBLE_EQ(f[0], 4.0);
    EXPECT_DOUBLE_EQ(f[1], 0.5);
    EXPECT_DOUBLE_EQ(f[2], 0.5);

    RngStream rng(26);
    for (int t = 0; t < 200; ++t) {
        const double v = rng.uniform(1, 4);
        x[0] = x[1] = x[2] = v;
        f = p->evaluate(x);
        EXPECT_NEAR(f[0] * f[1] * f[2], 1.0, 1e-12);
    }
}

TEST(WfgTransforms, Examples)
{
    EXPECT_DOUBLE_EQ(wfg::s_linear(0.35, 0.35), 0.0);
    EXPECT_DOUBLE_EQ(wfg::s_linear(1.0, 0.35), 1.0);
    const std::vector<double> y{0.42}, w{1.0};
    EXPECT_DOUBLE_EQ(wfg::r_sum(y, w), 0.42);
    EXPECT_NEAR(wfg::s_multi(0.35, 30, 10, 0.35), 0.0, 1e-12);
    EXPECT_NEAR(wfg::s_decept(0.35, 0.35, 0.001, 0.05), 0.0, 1e-9);
    EXPECT_THROW(wfg::r_nonsep(std::vector<double>{0.1, 0.2, 0.3}, 2), ContractViolation);
}

TEST(WfgTransforms, OutputsInUnitInterval)
{
    RngStream rng(27);
    for (int t = 0; t < 10000; ++t) {
        const double v = rng.uniform(0, 1);
        for (double r : {wfg::s_linear(v, 0.35), wfg::s_multi(v, 30, 10, 0.35), wfg::s_decept(v, 0.35, 0.001, 0.05)}) {
            EXPECT_GE(r, 0.0);
            EXPECT_LE(r, 1.0);
        }
    }
}

TEST(WfgProblems, MatchFrozenReferenceValues)
{
    for (const auto& g : oracle::wfg_golden()) {
        const auto f = make_problem(g.problem)->evaluate(g.x);
        for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(f[i], g.f[i], 1e-9) << g.problem;
    }
}

TEST(WfgProblems, MatchIndependentOracle)
{
    RngStream rng(28);
    for (const char* name : {"P4", "P12", "P13", "P14"}) {
        const auto p = make_problem(name);
        for (int t = 0; t < 1000; ++t) {
            const auto x = random_in(p->bounds(), rng);
            const auto f = p->evaluate(x);
            const auto o = oracle::wfg(name, x);
            for (std::size_t i = 0; i < 3; ++i) ASSERT_NEAR(f[i], o[i], 1e-9) << name;
        }
        const auto zero = oracle::wfg(name, DecisionVector(p->dimension(), 0.0));
        const auto f0 = p->evaluate(DecisionVector(p->dimension(), 0.0));
        for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(f0[i], zero[i], 1e-9) << name;
    }
}

TEST(P12, SweptFrontIsDisconnected)
{
    const auto p = make_problem("P12");
    RngStream rng(29);
    DecisionVector x(14);
    for (std::size_t i = 4; i < 14; ++i) x[i] = 0.35 * 2.0 * static_cast<double>(i + 1);
    std::vector<ObjectiveVector> pts;
    for (int t = 0; t < 100000; ++t) {
        for (std::size_t i = 0; i < 4; ++i) x[i] = rng.uniform(0, 2.0 * static_cast<double>(i + 1));
        auto f = p->evaluate(x);
        for (std::size_t i = 0; i < 3; ++i) f[i] /= 2.0 * static_cast<double>(i + 1);
        pts.push_back(std::move(f));
    }
    const auto front = nondominated_filter(pts);
    EXPECT_GE(count_components(front, 0.05), 2u);
}

TEST(Truss, GoldenValues)
{
    const auto p = make_problem("truss");
    const DecisionVector x{1.0, std::sqrt(2.0), std::sqrt(2.0), 1.0};
    const auto f = p->evaluate(x);
    // f1 = 0.2 (2 + 2 + 2^(1/4) + 1); f2 = 75000 * 10 * 0.2 / 2e5 * 4
    EXPECT_NEAR(f[0], 0.2 * (5.0 + std::pow(2.0, 0.25)), 1e-12);
    EXPECT_NEAR(f[0], 1.2378414230005442, 1e-12);
    EXPECT_NEAR(f[1], 3.0, 1e-12);
    const auto d = p->to_report_units(f);
    EXPECT_NEAR(d[1], 4e-5, 1e-17);
    EXPECT_DOUBLE_EQ(d[1] * 75000.0, f[1]);
    const auto o = oracle::truss(x);
    EXPECT_NEAR(d[0], o[0], 1e-12);
    EXPECT_NEAR(d[1], o[1], 1e-18);
}

TEST(Truss, BoundsAndCorners)
{
    const auto b = truss::bounds();
    EXPECT_DOUBLE_EQ(b.lower()[0], 1.0);
    EXPECT_DOUBLE_EQ(b.lower()[1], std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(b.lower()[2], std::sqrt(2.0));
    EXPECT_DOUBLE_EQ(b.lower()[3], 1.0);
    for (double u : b.upper()) EXPECT_DOUBLE_EQ(u, 3.0);
    const auto p = make_problem("truss");
    for (int mask = 0; mask < 16; ++mask) {
        DecisionVector x(4);
        for (int i = 0; i < 4; ++i) x[i] = (mask >> i) & 1 ? b.upper()[i] : b.lower()[i];
        const auto f = p->to_report_units(p->evaluate(x));
        const auto o = oracle::truss(x);
        EXPECT_NEAR(f[0], o[0], 1e-12);
        EXPECT_NEAR(f[1], o[1], 1e-18);
    }
}

TEST(Truss, MonotonicityBySign)
{
    const auto p = make_problem("truss");
    RngStream rng(30);
    const double h = 1e-6;
    for (int t = 0; t < 100; ++t) {
        auto x = random_in(p->bounds(), rng);
        for (auto& v : x) v = std::min(v, 3.0 - 2 * h);
        const auto f = p->evaluate(x);
        for (std::size_t i = 0; i < 4; ++i) {
            auto y = x;
            y[i] += h;
            const auto g = p->evaluate(y);
            EXPECT_GT(g[0], f[0]);
            if (i == 2) {
                EXPECT_GT(g[1], f[1]);
            } else {
                EXPECT_LT(g[1], f[1]);
            }
        }
    }
}

TEST(ReferenceFronts, AnalyticIdentities)
{
    for (const auto& f : make_problem("P2")->reference_front(10011)) EXPECT_NEAR(norm(f), 1.0, 1e-9);
    for (const auto& f : make_problem("P1")->reference_front(10011)) EXPECT_NEAR(f[0] + f[1] + f[2], 0.5, 1e-9);
    for (const auto& f : make_problem("P10")->reference_front(3000)) EXPECT_NEAR(f[0] * f[1] * f[2], 1.0, 1e-9);
}

TEST(ReferenceFronts, MutuallyNondominated)
{
    ProblemOptions opts;
    opts.truss_sweep = 20000;
    for (const auto& name : problem_names()) {
        const auto front = make_problem(name, opts)->reference_front(800);
        ASSERT_FALSE(front.empty()) << name;
        const auto brute = oracle::nondominated(front);
        EXPECT_EQ(brute.size(), front.size()) << name;
    }
}

TEST(ReferenceFronts, CsvCacheRoundTrip)
{
    const auto dir = fs::temp_directory_path() / "mostad_front_cache_test";
    fs::remove_all(dir);
    const auto p = make_problem("P5");
    const auto path = reference_front_path(dir, "P5", 500);
    EXPECT_EQ(path.filename(), "P5_500.csv");
    const auto built = load_or_build_reference_front(*p, 500, dir);
    ASSERT_TRUE(fs::exists(path));
    EXPECT_EQ(read_front_csv(path), built);
    EXPECT_EQ(load_or_build_reference_front(*p, 500, dir), built);
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "# problem=P5 m=2 count=" + std::to_string(built.size()));
    fs::remove_all(dir);
}
