#pragma once

#include "qcount/oracle.hpp"
#include "qcount/statevector.hpp"

#include <cstdint>

namespace qcount {

// Search problem over an n-qubit computation register.
class GroverProblem {
public:
    explicit GroverProblem(Oracle oracle);

    unsigned n() const noexcept { return oracle_.num_qubits(); }
    std::uint64_t N() const noexcept { return oracle_.space_size(); }
    // Number of marked states, from the oracle's closed form.
    std::uint64_t M() const noexcept { return marked_; }
    double marked_fraction() const noexcept {
        return static_cast<double>(marked_) / static_cast<double>(N());
    }
    const Oracle& oracle() const noexcept { return oracle_; }

private:
    Oracle oracle_;
    std::uint64_t marked_;
};

// Grover rotation angle: sin^2(theta / 2) = M / N, theta = 2 pi phi.
struct GroverAngle {
    double theta = 0.0;
    double phi = 0.0;
    std::uint64_t M = 0;
    std::uint64_t N = 1;
};

GroverAngle grover_angle(std::uint64_t N, std::uint64_t M);
inline GroverAngle grover_angle(const GroverProblem& problem) {
    return grover_angle(problem.N(), problem.M());
}

// Exhaustive count of marked indices.
std::uint64_t marked_count(const GroverProblem& problem);

// G = (2|psi><psi| - I) O on `reg`, whose width must equal problem.n().
void apply_grover(Statevector& state, const GroverProblem& problem,
                  std::span<const QubitIndex> reg, ControlMask controls = 0);

enum class EigenSign { Plus, Minus };

// |phi_+-> = (|xi> -+ i|chi>)/sqrt(2) on an n-qubit state. G|phi_+-> = e^{+-i theta}|phi_+->.
// Throws DomainError when M = 0 or M = N.
Statevector build_eigenstate(const GroverProblem& problem, EigenSign sign);

// Normalized uniform superpositions of the unmarked (xi) and marked (chi)
// states of the register.
Statevector unmarked_superposition(const GroverProblem& problem);
Statevector marked_superposition(const GroverProblem& problem);

// Controlled-G applied `repetitions` times.
void controlled_grover_power(Statevector& state, QubitIndex control, const GroverProblem& problem,
                             std::span<const QubitIndex> reg, std::uint64_t repetitions,
                             ControlMask outer = 0);

} // namespace qcount
