#include "mostad/wfg.hpp"

#include <cmath>
#include <numbers>

#include "mostad/core.hpp"

namespace mostad::wfg {

namespace {
constexpr double kEpsilon = 1.0e-10;
constexpr double kPi = std::numbers::pi;
} // namespace

double correct_to_01(double a) noexcept
{
    if (a <= 0.0 && a >= -kEpsilon) {
        return 0.0;
    }
    if (a >= 1.0 && a <= 1.0 + kEpsilon) {
        return 1.0;
    }
    return a;
}

double s_linear(double y, double a)
{
    return correct_to_01(std::abs(y - a) / std::abs(std::floor(a - y) + a));
}

double s_decept(double y, double a, double b, double c)
{
    const double tmp1 = std::floor(y - a + b) * (1.0 - c + (a - b) / b) / (a - b);
    const double tmp2 = std::floor(a + b - y) * (1.0 - c + (1.0 - a - b) / b) / (1.0 - a - b);
    return correct_to_01(1.0 + (std::abs(y - a) - b) * (tmp1 + tmp2 + 1.0 / b));
}

double s_multi(double y, double a, double b, double c)
{
    const double tmp1 = std::abs(y - c) / (2.0 * (std::floor(c - y) + c));
    const double tmp2 = (4.0 * a + 2.0) * kPi * (0.5 - tmp1);
    return correct_to_01((1.0 + std::cos(tmp2) + 4.0 * b * tmp1 * tmp1) / (b + 2.0));
}

double r_sum(std::span<const double> y, std::span<const double> w)
{
    require(y.size() == w.size() && !y.empty(), "r_sum: size mismatch");
    double num = 0.0;
    double den = 0.0;
    for (std::size_t i = 0; i < y.size(); ++i) {
        num += w[i] * y[i];
        den += w[i];
    }
    return correct_to_01(num / den);
}

double r_nonsep(std::span<const double> y, std::size_t a)
{
    const std::size_t n = y.size();
    require(a >= 1 && a <= n && n % a == 0, "r_nonsep: |y| must be a multiple of A");
    double num = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        num += y[j];
        for (std::size_t k = 0; k + 2 <= a; ++k) {
            num += std::abs(y[j] - y[(1 + j + k) % n]);
        }
    }
    const double half = std::ceil(static_cast<double>(a) / 2.0);
    const double ad = static_cast<double>(a);
    const double den = static_cast<double>(n) / ad * half * (1.0 + 2.0 * ad - 2.0 * half);
    return correct_to_01(num / den);
}

std::vector<double> concave(std::span<const double> x)
{
    const std::size_t m = x.size() + 1;
    std::vector<double> h(m);
    for (std::size_t k = 1; k <= m; ++k) {
        double r = 1.0;
        for (std::size_t i = 1; i <= m - k; ++i) {
            r *= std::sin(x[i - 1] * kPi / 2.0);
        }
        if (k != 1) {
            r *= std::cos(x[m - k] * kPi / 2.0);
        }
        h[k - 1] = correct_to_01(r);
    }
    return h;
}

std::vector<double> convex(std::span<const double> x)
{
    const std::size_t m = x.size() + 1;
    std::vector<double> h(m);
    for (std::size_t k = 1; k <= m; ++k) {
        double r = 1.0;
        for (std::size_t i = 1; i <= m - k; ++i) {
            r *= 1.0 - std::cos(x[i - 1] * kPi / 2.0);
        }
        if (k != 1) {
            r *= 1.0 - std::sin(x[m - k] * kPi / 2.0);
        }
        h[k - 1] = correct_to_01(r);
    }
    return h;
}

double disc(double x1, double alpha, double beta, double a)
{
    const double c = std::cos(a * std::pow(x1, beta) * kPi);
    return correct_to_01(1.0 - std::pow(x1, alpha) * c * c);
}

} // namespace mostad::wfg
