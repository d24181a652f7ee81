#pragma once

#include "qcount/grover.hpp"
#include "qcount/simple_count.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace qcount {

struct PEAConfig {
    unsigned t = 3;
    std::uint64_t shots = 0;
    Engine engine = Engine::Analytic;
    std::uint64_t seed = 0;
};

// Outcomes j and 2^t - j (mod 2^t) yield the same count.
struct OutcomePair {
    std::uint64_t low = 0;
    std::uint64_t high = 0;
    double probability = 0.0;
};

struct PEAResult {
    unsigned t = 0;
    // Probability per outcome (exact, or counts/shots when sampled).
    std::vector<double> histogram;
    // Raw counts when sampled; empty in exact mode.
    std::vector<std::uint64_t> counts;
    std::vector<OutcomePair> paired_prob;
    OutcomePair best_pair;
    double phi_hat = 0.0;
    double M_hat = 0.0;

    std::uint64_t cost() const noexcept;
};

// ceil(m + log2(2 + 1/(2 eps))).
unsigned required_t(unsigned m, double epsilon);

// 2^t - 1 controlled-G applications.
std::uint64_t pea_cost(unsigned t);

// Forward and inverse QFT on `reg` (reg[0] is the least significant bit):
// QFT|j> = 2^{-t/2} sum_k e^{2 pi i jk / 2^t} |k>.
void qft(Statevector& state, std::span<const QubitIndex> reg);
void inverse_qft(Statevector& state, std::span<const QubitIndex> reg);

// Qubit layout of the phase-estimation circuit: register-1 (the t control
// qubits) occupies [0, t), the computation register [t, t + n). Control
// qubit j drives G^(2^j).
struct PEALayout {
    Register control;
    Register computation;
};
PEALayout pea_layout(unsigned t, unsigned n);

// Full simulation of the phase-estimation circuit; returns the exact
// register-1 distribution.
std::vector<double> pea_statevector_distribution(const GroverProblem& problem, unsigned t);

// Groups a histogram into outcome pairs {j, 2^t - j}, ordered by low index.
std::vector<OutcomePair> pair_outcomes(const std::vector<double>& histogram, unsigned t);

// Smallest nonzero count the t-qubit read-out can express: N sin^2(pi/2^t).
double pea_resolution_floor(std::uint64_t N, unsigned t);

PEAResult run_pea(const GroverProblem& problem, const PEAConfig& config);

} // namespace qcount
