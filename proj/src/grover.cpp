#include "qcount/grover.hpp"

#include "qcount/errors.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>

namespace qcount {

GroverProblem::GroverProblem(Oracle oracle) : oracle_(std::move(oracle)), marked_(oracle_.count()) {}

GroverAngle grover_angle(std::uint64_t N, std::uint64_t M) {
    if (N == 0 || !std::has_single_bit(N)) {
        throw DomainError("search-space size " + std::to_string(N) + " is not a power of two");
    }
    if (M > N) {
        throw DomainError("marked count " + std::to_string(M) + " exceeds search-space size " + std::to_string(N));
    }
    GroverAngle a;
    a.M = M;
    a.N = N;
    const double ratio = static_cast<double>(M) / static_cast<double>(N);
    a.theta = 2.0 * std::asin(std::sqrt(ratio));
    a.phi = a.theta / (2.0 * std::numbers::pi);
    return a;
}

std::uint64_t marked_count(const GroverProblem& problem) {
    const Oracle& o = problem.oracle();
    std::uint64_t count = 0;
    for (BasisIndex x = 0; x < o.space_size(); ++x) {
        if (o.marks(x)) ++count;
    }
    return count;
}

void apply_grover(Statevector& state, const GroverProblem& problem, std::span<const QubitIndex> reg,
                  ControlMask controls) {
    if (reg.size() != problem.n()) {
        throw DomainError("register width " + std::to_string(reg.size()) + " does not match problem width " +
                          std::to_string(problem.n()));
    }
    apply_phase_flip(state, problem.oracle(), reg, controls);
    apply_diffusion(state, reg, controls);
}

namespace {

Statevector superposition(const GroverProblem& problem, bool marked) {
    const std::uint64_t count = marked ? problem.M() : problem.N() - problem.M();
    if (count == 0) {
        throw DomainError(marked ? "no marked states to superpose" : "no unmarked states to superpose");
    }
    Statevector s(problem.n());
    s[0] = 0.0;
    const double amp = 1.0 / std::sqrt(static_cast<double>(count));
    for (BasisIndex x = 0; x < problem.N(); ++x) {
        if (problem.oracle().marks(x) == marked) s[x] = amp;
    }
    return s;
}

} // namespace

Statevector unmarked_superposition(const GroverProblem& problem) { return superposition(problem, false); }
Statevector marked_superposition(const GroverProblem& problem) { return superposition(problem, true); }

Statevector build_eigenstate(const GroverProblem& problem, EigenSign sign) {
    if (problem.M() == 0 || problem.M() == problem.N()) {
        throw DomainError("eigenstates are undefined when M = 0 or M = N");
    }
    const double amp_unmarked = 1.0 / std::sqrt(2.0 * static_cast<double>(problem.N() - problem.M()));
    const double amp_marked = 1.0 / std::sqrt(2.0 * static_cast<double>(problem.M()));
    // (|xi> -+ i|chi>)/sqrt(2)
    const Amplitude marked_coeff{0.0, sign == EigenSign::Plus ? -amp_marked : amp_marked};
    Statevector s(problem.n());
    for (BasisIndex x = 0; x < problem.N(); ++x) {
        s[x] = problem.oracle().marks(x) ? marked_coeff : Amplitude{amp_unmarked, 0.0};
    }
    return s;
}

void controlled_grover_power(Statevector& state, QubitIndex control, const GroverProblem& problem,
                             std::span<const QubitIndex> reg, std::uint64_t repetitions, ControlMask outer) {
    const SubCircuit grover = [&](Statevector& s, ControlMask controls) {
        apply_grover(s, problem, reg, controls);
    };
    if (repetitions == 0) {
        // still validate the layout
        controlled_apply(state, control, reg, [](Statevector&, ControlMask) {}, outer);
        return;
    }
    for (std::uint64_t r = 0; r < repetitions; ++r) {
        controlled_apply(state, control, reg, grover, outer);
    }
}

} // namespace qcount
