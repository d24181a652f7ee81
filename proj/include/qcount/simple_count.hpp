#pragma once

#include "qcount/grover.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace qcount {

enum class Engine { Analytic, Statevector };

struct CountingConfig {
    double threshold = 0.5;
    // 0 means exact probabilities.
    std::uint64_t shots = 0;
    Engine engine = Engine::Analytic;
    // Unset means ceil(n/2) + 2.
    std::optional<unsigned> max_k;
    std::uint64_t seed = 0;
};

struct StepOutcome {
    unsigned k = 0;
    std::uint64_t K = 1;
    std::uint64_t shots = 0;
    std::uint64_t ones = 0;
    double p1_hat = 0.0;
    double p0_hat = 1.0;
};

struct CountEstimate {
    double M_hat = 0.0;
    double theta_hat = 0.0;
    unsigned k_final = 0;
    // Optimal Grover iterations for theta_hat; absent when theta_hat = 0.
    std::optional<std::uint64_t> R;
    bool halted_on_threshold = false;
    std::vector<StepOutcome> trace;

    // Controlled-G applications summed over the trace.
    std::uint64_t cost() const noexcept;
};

struct AngleEstimate {
    double theta_hat = 0.0;
    double M_hat = 0.0;
};

unsigned default_max_k(unsigned n);

// Smallest k with 4^k M >= N, i.e. ceil(log2 sqrt(N/M)). Requires M >= 1.
unsigned halt_bound(std::uint64_t N, std::uint64_t M);

// theta = arccos(p(k)) / 2^k, M = N sin^2(theta/2). p_k is clamped to [-1, 1].
AngleEstimate postprocess_arccos(double p_k, unsigned k, std::uint64_t N);

// Iterates p(j-1) = sqrt((1 + p(j))/2) down to p(0) = cos(theta), then
// M = N (1 - p(0))/2.
AngleEstimate postprocess_halfangle(double p_k, unsigned k, std::uint64_t N);

// ceil((pi/theta - 1)/2). Requires theta > 0.
std::uint64_t optimal_grover_iterations(double theta);

// Doubles the search space until the marked fraction is below one half.
struct MinorityProblem {
    GroverProblem problem;
    unsigned doublings = 0;
};
MinorityProblem ensure_minority(const GroverProblem& problem);

// Qubit layout of the single-measurement-qubit circuit: the computation
// register occupies qubits [0, n), the measurement qubit is qubit n.
struct StepCircuitLayout {
    Register computation;
    QubitIndex measurement = 0;
};
StepCircuitLayout step_circuit_layout(unsigned n);

// State just before measurement at step k: H on both registers,
// controlled-G^(2^k), H on the measurement qubit.
Statevector prepare_step_state(const GroverProblem& problem, unsigned k);

// Exact p1 at step k evaluated with the selected engine.
double step_probability(const GroverProblem& problem, unsigned k, Engine engine);

// Runs steps k = 0, 1, ... until p1_hat >= threshold or max_k. Requires a
// marked fraction below one half.
CountEstimate run_simple_count(const GroverProblem& problem, const CountingConfig& config);

} // namespace qcount
