#include "mostad/problems.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>

#include "mostad/metrics.hpp"
#include "mostad/weights.hpp"
#include "mostad/wfg.hpp"

namespace mostad {

namespace {

constexpr double kPi = std::numbers::pi;

std::string upper(std::string_view s)
{
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(), [](unsigned char c) { return std::toupper(c); });
    return out;
}

/// Simplex lattice with at least `count` points.
std::vector<WeightVector> lattice_with_at_least(std::size_t m, std::size_t count)
{
    return simplex_lattice(m, divisions_for(m, std::max<std::size_t>(count, 2)));
}

std::vector<ObjectiveVector> unit_sphere_octant(std::size_t m, std::size_t count)
{
    auto pts = lattice_with_at_least(m, count);
    for (auto& p : pts) {
        const double r = norm(p);
        for (auto& v : p) {
            v /= r;
        }
    }
    return pts;
}

/// Evenly spaced samples of [0, 1], both ends included.
std::vector<double> unit_grid(std::size_t count)
{
    std::vector<double> g(count);
    for (std::size_t i = 0; i < count; ++i) {
        g[i] = static_cast<double>(i) / static_cast<double>(count - 1);
    }
    return g;
}

// ---------------------------------------------------------------------------
// P1: linear front, multimodal g.

double dtlz_multimodal_g(std::span<const double> tail)
{
    double s = 0.0;
    for (double xi : tail) {
        const double d = xi - 0.5;
        s += d * d - std::cos(20.0 * kPi * d);
    }
    return 100.0 * (static_cast<double>(tail.size()) + s);
}

double dtlz_sphere_g(std::span<const double> tail)
{
    double s = 0.0;
    for (double xi : tail) {
        s += (xi - 0.5) * (xi - 0.5);
    }
    return s;
}

class LinearFront final : public Problem {
public:
    LinearFront()
        : Problem("P1", 3, Bounds::uniform(7, 0.0, 1.0))
    {
    }

    ObjectiveVector evaluate(std::span<const double> x) const override
    {
        check_dimension(x);
        const double g = dtlz_multimodal_g(x.subspan(2));
        return {0.5 * x[0] * x[1] * (1.0 + g), 0.5 * x[0] * (1.0 - x[1]) * (1.0 + g), 0.5 * (1.0 - x[0]) * (1.0 + g)};
    }

    std::vector<ObjectiveVector> reference_front(std::size_t count) const override
    {
        auto pts = lattice_with_at_least(3, count);
        for (auto& p : pts) {
            for (auto& v : p) {
                v *= 0.5;
            }
        }
        return pts;
    }
};

// P2, P3, P11: spherical fronts.
class SphericalFront final : public Problem {
public:
    enum class Variant { Plain, Biased, Multimodal };

    SphericalFront(std::string name, Variant variant, double exponent)
        : Problem(std::move(name), 3, Bounds::uniform(12, 0.0, 1.0))
        , variant_(variant)
        , exponent_(exponent)
    {
    }

    ObjectiveVector evaluate(std::span<const double> x) const override
    {
        check_dimension(x);
        const auto tail = x.subspan(2);
        const double g = variant_ == Variant::Multimodal ? dtlz_multimodal_g(tail) : dtlz_sphere_g(tail);
        double a = x[0];
        double b = x[1];
        if (variant_ == Variant::Biased) {
            a = std::pow(a, exponent_);
            b = std::pow(b, exponent_);
        }
        const double ca = std::cos(0.5 * kPi * a);
        return {ca * std::cos(0.5 * kPi * b) * (1.0 + g), ca * std::sin(0.5 * kPi * b) * (1.0 + g),
                std::sin(0.5 * kPi * a) * (1.0 + g)};
    }

    std::vector<ObjectiveVector> reference_front(std::size_t count) const override
    {
        return unit_sphere_octant(3, count);
    }

private:
    Variant variant_;
    double exponent_;
};

// ---------------------------------------------------------------------------
// P5-P9: two-objective problems with a Pareto set along x_i = sin(pi x_1 / 2).

class CurveFront : public Problem {
public:
    CurveFront(std::string name, std::size_t n)
        : Problem(std::move(name), 2, Bounds::uniform(n, 0.0, 1.0))
    {
    }

    ObjectiveVector evaluate(std::span<const double> x) const override
    {
        check_dimension(x);
        return shape(x, g(x));
    }

    std::vector<ObjectiveVector> reference_front(std::size_t count) const override
    {
        std::vector<ObjectiveVector> curve;
        curve.reserve(count);
        DecisionVector x(dimension());
        for (double x1 : unit_grid(std::max<std::size_t>(count, 2))) {
            x[0] = x1;
            for (std::size_t i = 1; i < x.size(); ++i) {
                x[i] = std::sin(0.5 * kPi * x1);
            }
            curve.push_back(shape(x, 0.0));
        }
        return nondominated_filter(curve);
    }

protected:
    virtual double g(std::span<const double> x) const = 0;
    virtual ObjectiveVector shape(std::span<const double> x, double g) const = 0;
};

double sigmoid_g(std::span<const double> x)
{
    double s = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double t = std::abs(x[i] - std::sin(0.5 * kPi * x[0]));
        s += t / (1.0 + std::exp(5.0 * t));
    }
    return 10.0 * std::sin(kPi * x[0]) * s;
}

double rastrigin_g(std::span<const double> x)
{
    const double n = static_cast<double>(x.size());
    double s = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double y = x[i] - std::sin(0.5 * kPi * x[0]);
        s += y * y - std::cos(2.0 * kPi * y);
    }
    return 2.0 * std::sin(0.5 * kPi * x[0]) * (n - 1.0 + s);
}

class P5 final : public CurveFront {
public:
    P5() : CurveFront("P5", 10) {}

protected:
    double g(std::span<const double> x) const override { return sigmoid_g(x); }
    ObjectiveVector shape(std::span<const double> x, double g) const override
    {
        return {(1.0 + g) * x[0], (1.0 + g) * (1.0 - x[0] * x[0])};
    }
};

class P6 final : public CurveFront {
public:
    P6() : CurveFront("P6", 10) {}

protected:
    double g(std::span<const double> x) const override { return sigmoid_g(x); }
    ObjectiveVector shape(std::span<const double> x, double g) const override
    {
        return {(1.0 + g) * std::cos(0.5 * kPi * x[0]), (1.0 + g) * (1.0 - x[0] * x[0])};
    }
};

class P7 final : public CurveFront {
public:
    P7() : CurveFront("P7", 10) {}

protected:
    double g(std::span<const double> x) const override { return sigmoid_g(x); }
    ObjectiveVector shape(std::span<const double> x, double g) const override
    {
        const double c = std::cos(2.0 * kPi * x[0]);
        return {(1.0 + g) * x[0], (1.0 - std::sqrt(x[0]) * c * c) * (1.0 + g)};
    }
};

class P8 final : public CurveFront {
public:
    P8() : CurveFront("P8", 30) {}

protected:
    double g(std::span<const double> x) const override { return rastrigin_g(x); }
    ObjectiveVector shape(std::span<const double> x, double g) const override
    {
        const double c = std::cos(4.0 * kPi * x[0]);
        return {(1.0 + g) * (1.0 - x[0]), 0.5 * (1.0 + g) * (x[0] + std::sqrt(x[0]) * c * c)};
    }
};

class P9 final : public CurveFront {
public:
    P9() : CurveFront("P9", 30) {}

protected:
    double g(std::span<const double> x) const override { return rastrigin_g(x); }
    ObjectiveVector shape(std::span<const double> x, double g) const override
    {
        const double c = std::cos(3.0 * kPi * x[0]);
        const double r = 1.0 - std::sqrt(x[1]);
        return {(1.0 + g) * x[0], 0.5 * (1.0 + g) * (1.0 - std::pow(x[0], 0.1) + r * r * c * c)};
    }
};

// ---------------------------------------------------------------------------
// P10: f1 f2 f3 = (1 + g)^3, so the g = 0 front is the surface f1 f2 f3 = 1.

class P10 final : public Problem {
public:
    P10()
        : Problem("P10", 3, Bounds::uniform(30, 1.0, 4.0))
    {
    }

    ObjectiveVector evaluate(std::span<const double> x) const override
    {
        check_dimension(x);
        double g = 0.0;
        for (std::size_t i = 3; i < x.size(); ++i) {
            g += (x[i] - 2.0) * (x[i] - 2.0);
        }
        return {x[0] * (1.0 + g) / std::sqrt(x[1] * x[2]), x[1] * (1.0 + g) / std::sqrt(x[0] * x[2]),
                x[2] * (1.0 + g) / std::sqrt(x[0] * x[1])};
    }

    std::vector<ObjectiveVector> reference_front(std::size_t count) const override
    {
        // The objectives depend only on the log-ratios p = ln(x1/x2), q = ln(x1/x3),
        // which range over the hexagon |p|, |q|, |p - q| <= ln 4 (area 3 ln^2 4).
        const double span = std::log(4.0);
        const double h = span * std::sqrt(3.0 / static_cast<double>(std::max<std::size_t>(count, 3)));
        const auto steps = static_cast<long>(std::floor(span / h));
        std::vector<ObjectiveVector> pts;
        for (long i = -steps; i <= steps; ++i) {
            for (long j = -steps; j <= steps; ++j) {
                const double p = static_cast<double>(i) * h;
                const double q = static_cast<double>(j) * h;
                if (std::abs(p - q) > span + 1e-12) {
                    continue;
                }
                pts.push_back({std::exp(0.5 * (p + q)), std::exp(-p + 0.5 * q), std::exp(-q + 0.5 * p)});
            }
        }
        return nondominated_filter(pts);
    }
};

// ---------------------------------------------------------------------------
// P4, P12, P13, P14: WFG compositions with M = 3, k = 4 position parameters.

class WfgFront final : public Problem {
public:
    enum class Variant { P4, P12, P13, P14 };

    WfgFront(std::string name, Variant variant, std::size_t n)
        : Problem(std::move(name), 3, wfg_bounds(n))
        , variant_(variant)
    {
    }

    static constexpr std::size_t kPosition = 4;

    ObjectiveVector evaluate(std::span<const double> x) const override
    {
        check_dimension(x);
        const std::size_t n = x.size();
        const std::size_t m = objectives();
        const std::size_t k = kPosition;
        const std::size_t l = n - k;

        std::vector<double> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            y[i] = x[i] / (2.0 * static_cast<double>(i + 1));
        }

        std::vector<double> t(m);
        const std::size_t group = k / (m - 1);
        switch (variant_) {
        case Variant::P4:
        case Variant::P13: {
            for (auto& v : y) {
                v = variant_ == Variant::P4 ? wfg::s_multi(v, 30.0, 10.0, 0.35)
                                            : wfg::s_decept(v, 0.35, 0.001, 0.05);
            }
            const std::vector<double> ones(n, 1.0);
            for (std::size_t i = 0; i + 1 < m; ++i) {
                t[i] = wfg::r_sum(std::span(y).subspan(i * group, group), std::span(ones).first(group));
            }
            t[m - 1] = wfg::r_sum(std::span(y).subspan(k), std::span(ones).first(l));
            break;
        }
        case Variant::P14: {
            for (std::size_t i = k; i < n; ++i) {
                y[i] = wfg::s_linear(y[i], 0.35);
            }
            for (std::size_t i = 0; i + 1 < m; ++i) {
                t[i] = wfg::r_nonsep(std::span(y).subspan(i * group, group), group);
            }
            t[m - 1] = wfg::r_nonsep(std::span(y).subspan(k), l);
            break;
        }
        case Variant::P12: {
            for (std::size_t i = k; i < n; ++i) {
                y[i] = wfg::s_linear(y[i], 0.35);
            }
            std::vector<double> t2(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(k));
            for (std::size_t i = 0; i < l / 2; ++i) {
                t2.push_back(wfg::r_nonsep(std::span(y).subspan(k + 2 * i, 2), 2));
            }
            const std::vector<double> ones(t2.size(), 1.0);
            for (std::size_t i = 0; i + 1 < m; ++i) {
                t[i] = wfg::r_sum(std::span(t2).subspan(i * group, group), std::span(ones).first(group));
            }
            t[m - 1] = wfg::r_sum(std::span(t2).subspan(k), std::span(ones).first(l / 2));
            break;
        }
        }
        // Degeneracy constants A_i = 1: position values pass through unchanged.
        return finish(std::span(t).first(m - 1), t[m - 1]);
    }

    std::vector<ObjectiveVector> reference_front(std::size_t count) const override
    {
        if (variant_ != Variant::P12) {
            auto pts = unit_sphere_octant(3, count);
            for (auto& p : pts) {
                for (std::size_t i = 0; i < p.size(); ++i) {
                    p[i] *= 2.0 * static_cast<double>(i + 1);
                }
            }
            return pts;
        }
        // Disconnected front: oversample the position square, keep the nondominated part.
        const auto side = static_cast<std::size_t>(std::ceil(2.0 * std::sqrt(static_cast<double>(count))));
        const auto grid = unit_grid(std::max<std::size_t>(side, 2));
        std::vector<ObjectiveVector> pts;
        pts.reserve(grid.size() * grid.size());
        for (double a : grid) {
            for (double b : grid) {
                const double pos[] = {a, b};
                pts.push_back(finish(pos, 0.0));
            }
        }
        return nondominated_filter(pts);
    }

private:
    static Bounds wfg_bounds(std::size_t n)
    {
        std::vector<double> hi(n);
        for (std::size_t i = 0; i < n; ++i) {
            hi[i] = 2.0 * static_cast<double>(i + 1);
        }
        return Bounds(std::vector<double>(n, 0.0), std::move(hi));
    }

    ObjectiveVector finish(std::span<const double> position, double distance) const
    {
        std::vector<double> h;
        if (variant_ == Variant::P12) {
            h = wfg::convex(position);
            h.back() = wfg::disc(position[0], 1.0, 1.0, 5.0);
        } else {
            h = wfg::concave(position);
        }
        ObjectiveVector f(h.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            f[i] = distance + 2.0 * static_cast<double>(i + 1) * h[i];
        }
        return f;
    }

    Variant variant_;
};

// ---------------------------------------------------------------------------

class Truss final : public Problem {
public:
    explicit Truss(const ProblemOptions& options)
        : Problem("truss", 2, truss::bounds())
        , tau_(options.truss_tau)
        , sweep_(options.truss_sweep)
        , seed_(options.truss_sweep_seed)
    {
    }

    ObjectiveVector evaluate(std::span<const double> x) const override
    {
        check_dimension(x);
        return truss::objectives(x, tau_);
    }

    ObjectiveVector to_report_units(ObjectiveVector f) const override { return truss::descale(std::move(f), tau_); }

    // Latin-hypercube sweep in original units; `count` is ignored.
    std::vector<ObjectiveVector> reference_front(std::size_t /*count*/) const override
    {
        RngStream rng(seed_);
        const std::size_t n = dimension();
        std::vector<std::vector<std::size_t>> strata(n, std::vector<std::size_t>(sweep_));
        for (auto& s : strata) {
            std::iota(s.begin(), s.end(), std::size_t{0});
            std::shuffle(s.begin(), s.end(), rng.engine());
        }
        const auto& lo = bounds().lower();
        const auto& hi = bounds().upper();
        std::vector<ObjectiveVector> pts;
        pts.reserve(sweep_);
        DecisionVector x(n);
        for (std::size_t p = 0; p < sweep_; ++p) {
            for (std::size_t i = 0; i < n; ++i) {
                const double u = (static_cast<double>(strata[i][p]) + rng.uniform(0.0, 1.0)) / static_cast<double>(sweep_);
                x[i] = std::min(lo[i] + u * (hi[i] - lo[i]), hi[i]);
            }
            pts.push_back(truss::objectives(x, 1.0));
        }
        return nondominated_filter(pts);
    }

private:
    double tau_;
    std::size_t sweep_;
    std::uint64_t seed_;
};

} // namespace

Problem::Problem(std::string name, std::size_t objectives, Bounds bounds)
    : name_(std::move(name))
    , objectives_(objectives)
    , bounds_(std::move(bounds))
{
}

std::size_t Problem::default_front_size() const noexcept
{
    return objectives_ == 2 ? 10000 : 10011;
}

void Problem::check_dimension(std::span<const double> x) const
{
    require(x.size() == dimension(), name_ + ": decision vector has the wrong dimension");
}

namespace truss {

Bounds bounds()
{
    const double a = kForce / kStress;
    const double r2 = std::numbers::sqrt2;
    return Bounds({a, r2 * a, r2 * a, a}, {3.0 * a, 3.0 * a, 3.0 * a, 3.0 * a});
}

ObjectiveVector objectives(std::span<const double> x, double tau)
{
    require(x.size() == 4, "truss: expects four cross-sections");
    const double r2 = std::numbers::sqrt2;
    const double mass = kLength * (2.0 * x[0] + r2 * x[1] + std::sqrt(x[2]) + x[3]);
    const double compliance =
        tau * kForce * kLength / kModulus * (2.0 / x[0] + 2.0 * r2 / x[1] - 2.0 * r2 / x[2] + 2.0 / x[3]);
    return {mass, compliance};
}

ObjectiveVector descale(ObjectiveVector f, double tau)
{
    require(f.size() == 2, "truss: expects two objectives");
    f[1] /= tau;
    return f;
}

} // namespace truss

std::vector<std::string> problem_names()
{
    return {"P1", "P2", "P3", "P4", "P5", "P6", "P7", "P8", "P9", "P10", "P11", "P12", "P13", "P14", "truss"};
}

bool is_known_problem(std::string_view name)
{
    const auto key = upper(name);
    const auto names = problem_names();
    return std::any_of(names.begin(), names.end(), [&](const std::string& n) { return upper(n) == key; });
}

std::unique_ptr<Problem> make_problem(std::string_view name, const ProblemOptions& options)
{
    using Sph = SphericalFront::Variant;
    using Wfg = WfgFront::Variant;
    const auto key = upper(name);
    if (key == "P1") return std::make_unique<LinearFront>();
    if (key == "P2") return std::make_unique<SphericalFront>("P2", Sph::Plain, 1.0);
    if (key == "P3") return std::make_unique<SphericalFront>("P3", Sph::Biased, options.p3_exponent);
    if (key == "P4") return std::make_unique<WfgFront>("P4", Wfg::P4, 13);
    if (key == "P5") return std::make_unique<P5>();
    if (key == "P6") return std::make_unique<P6>();
    if (key == "P7") return std::make_unique<P7>();
    if (key == "P8") return std::make_unique<P8>();
    if (key == "P9") return std::make_unique<P9>();
    if (key == "P10") return std::make_unique<P10>();
    if (key == "P11") return std::make_unique<SphericalFront>("P11", Sph::Multimodal, 1.0);
    if (key == "P12") return std::make_unique<WfgFront>("P12", Wfg::P12, 14);
    if (key == "P13") return std::make_unique<WfgFront>("P13", Wfg::P13, 13);
    if (key == "P14") return std::make_unique<WfgFront>("P14", Wfg::P14, 13);
    if (key == "TRUSS") return std::make_unique<Truss>(options);
    throw ConfigError("unknown problem '" + std::string(name) + "'");
}

} // namespace mostad
