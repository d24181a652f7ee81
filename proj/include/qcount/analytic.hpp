#pragma once

#include "qcount/grover.hpp"

#include <vector>

namespace qcount {

// Probability of reading 1 on the measurement qubit after 2^k controlled-G
// applications: sin^2(pi 2^k phi).
double p1_exact(unsigned k, const GroverAngle& angle);
inline double p0_exact(unsigned k, const GroverAngle& angle) { return 1.0 - p1_exact(k, angle); }

// Coefficients of the pre-measurement state of the single-qubit counting
// circuit in the basis {|0>,|1>} x {|xi>,|chi>}.
struct CircuitCoefficients {
    double zero_unmarked = 0.0;
    double zero_marked = 0.0;
    double one_unmarked = 0.0;
    double one_marked = 0.0;

    double p1() const noexcept { return one_unmarked * one_unmarked + one_marked * one_marked; }
};

CircuitCoefficients circuit_state_closed_form(unsigned k, const GroverAngle& angle);

// Squared magnitude of the t-qubit phase-estimation amplitude for outcome j
// given phase x: sin^2(2^t pi d) / (2^2t sin^2(pi d)), d = x - j/2^t.
double phase_kernel(unsigned t, std::uint64_t j, double x);

// Outcome distribution of the phase-estimation counting circuit: the equal
// mixture of the kernels centred at phi and 1 - phi. Requires 1 <= t <= 24.
std::vector<double> pea_distribution(unsigned t, const GroverAngle& angle);

} // namespace qcount
