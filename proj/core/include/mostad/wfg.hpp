#pragma once

#include <cstddef>
#include <span>
#include <vector>

// Transformation and shape functions of the WFG toolkit (Huband et al. 2006).
// Inputs and outputs of every transformation lie in [0, 1].

namespace mostad::wfg {

/// Clips tiny excursions outside [0, 1] caused by rounding.
double correct_to_01(double a) noexcept;

double s_linear(double y, double a);
double s_decept(double y, double a, double b, double c);
double s_multi(double y, double a, double b, double c);
double r_sum(std::span<const double> y, std::span<const double> w);
double r_nonsep(std::span<const double> y, std::size_t a);

/// Concave shape h_1..h_M over position parameters x_1..x_{M-1}.
std::vector<double> concave(std::span<const double> x);
/// Convex shape h_1..h_{M-1}.
std::vector<double> convex(std::span<const double> x);
/// Disconnected last component h_M.
double disc(double x1, double alpha, double beta, double a);

} // namespace mostad::wfg
