#pragma once

#include <cstddef>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "mostad/core.hpp"

namespace mostad {

/// Entry range of the rotation matrix.
enum class RotationRange {
    Unit,      ///< entries uniform on [0, 1]
    Symmetric, ///< entries uniform on [-1, 1]
};

std::string_view to_string(RotationRange r) noexcept;
RotationRange parse_rotation_range(std::string_view name);

/// Factors and schedule of the four state transformation operators.
struct OperatorParams {
    double alpha = 1.0;     ///< rotation factor, decays each generation
    double beta = 1.0;      ///< translation factor
    double gamma = 1.0;     ///< expansion factor, decays each generation
    double delta_ax = 1.0;  ///< axesion factor
    double alpha_max = 1.0;
    double alpha_min = 1e-4;
    double gamma_max = 1.0;
    double gamma_min = 1e-4;
    double fc_alpha = 2.0;
    double fc_gamma = 2.0;
    std::size_t se = 5;     ///< search enforcement: candidates per parent per operator
    RotationRange rotation_range = RotationRange::Unit;

    /// Throws ContractViolation if any invariant is broken.
    void validate() const;
};

/// Raised by translation when the two states coincide.
class DegeneratePair : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// One schedule step: decay alpha and gamma, then reset any factor that fell
/// below its minimum back to its maximum.
OperatorParams step_schedule(OperatorParams params);

// Unclamped forms. These expose the raw displacement for inspection; the
// algorithm always goes through the bounded overloads below.

/// s + alpha / (n |s|) * R s. A zero-norm s yields `se` copies of s.
std::vector<DecisionVector> rotation(const DecisionVector& s, const OperatorParams& params, RngStream& rng);

/// s_new + beta * r * (s_new - s_old) / |s_new - s_old|, with one r ~ U[0,1) per candidate.
std::vector<DecisionVector> translation(const DecisionVector& s_new, const DecisionVector& s_old,
                                        const OperatorParams& params, RngStream& rng);

/// s + gamma * diag(g) s, g standard normal.
std::vector<DecisionVector> expansion(const DecisionVector& s, const OperatorParams& params, RngStream& rng);

/// s + delta_ax * g * s_j e_j for one uniformly chosen axis j.
std::vector<DecisionVector> axesion(const DecisionVector& s, const OperatorParams& params, RngStream& rng);

// Bounded forms: the candidates above projected onto the box.

std::vector<DecisionVector> rotation(const DecisionVector& s, const OperatorParams& params, RngStream& rng,
                                     const Bounds& bounds);
std::vector<DecisionVector> translation(const DecisionVector& s_new, const DecisionVector& s_old,
                                        const OperatorParams& params, RngStream& rng, const Bounds& bounds);
std::vector<DecisionVector> expansion(const DecisionVector& s, const OperatorParams& params, RngStream& rng,
                                      const Bounds& bounds);
std::vector<DecisionVector> axesion(const DecisionVector& s, const OperatorParams& params, RngStream& rng,
                                    const Bounds& bounds);

} // namespace mostad
