#include "qcount/pea_count.hpp"

#include "qcount/analytic.hpp"
#include "qcount/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qcount {

unsigned required_t(unsigned m, double epsilon) {
    if (m < 1) throw DomainError("accuracy m must be at least 1");
    if (!(epsilon > 0.0 && epsilon < 1.0)) {
        throw DomainError("failure probability must be in (0, 1), got " + std::to_string(epsilon));
    }
    const double t = static_cast<double>(m) + std::log2(2.0 + 1.0 / (2.0 * epsilon));
    return static_cast<unsigned>(std::ceil(t - 1e-9));
}

std::uint64_t pea_cost(unsigned t) {
    if (t < 1 || t > 63) throw DomainError("phase register width must be in [1, 63]");
    return (std::uint64_t{1} << t) - 1;
}

std::uint64_t PEAResult::cost() const noexcept { return (std::uint64_t{1} << t) - 1; }

void qft(Statevector& state, std::span<const QubitIndex> reg) {
    state.check_register(reg);
    const std::size_t t = reg.size();
    for (std::size_t i = t; i-- > 0;) {
        apply_hadamard(state, reg[i]);
        for (std::size_t m = i; m-- > 0;) {
            const double angle = 2.0 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(i - m + 1));
            apply_phase(state, reg[i], angle, ControlMask{1} << reg[m]);
        }
    }
    for (std::size_t i = 0; i < t / 2; ++i) apply_swap(state, reg[i], reg[t - 1 - i]);
}

void inverse_qft(Statevector& state, std::span<const QubitIndex> reg) {
    state.check_register(reg);
    const std::size_t t = reg.size();
    for (std::size_t i = 0; i < t / 2; ++i) apply_swap(state, reg[i], reg[t - 1 - i]);
    for (std::size_t i = 0; i < t; ++i) {
        for (std::size_t m = 0; m < i; ++m) {
            const double angle = -2.0 * std::numbers::pi / std::ldexp(1.0, static_cast<int>(i - m + 1));
            apply_phase(state, reg[i], angle, ControlMask{1} << reg[m]);
        }
        apply_hadamard(state, reg[i]);
    }
}

PEALayout pea_layout(unsigned t, unsigned n) {
    return PEALayout{contiguous_register(0, t), contiguous_register(t, n)};
}

std::vector<double> pea_statevector_distribution(const GroverProblem& problem, unsigned t) {
    if (t < 1) throw DomainError("phase register width must be at least 1");
    const unsigned width = t + problem.n();
    if (width > max_qubits()) {
        throw ResourceError("phase-estimation circuit needs " + std::to_string(width) + " qubits (t = " +
                                std::to_string(t) + ", n = " + std::to_string(problem.n()) +
                                "), cap is " + std::to_string(max_qubits()),
                            width);
    }
    const auto layout = pea_layout(t, problem.n());
    Statevector state(width);
    apply_hadamard(state, layout.control);
    apply_hadamard(state, layout.computation);
    for (unsigned j = 0; j < t; ++j) {
        controlled_grover_power(state, layout.control[j], problem, layout.computation,
                                std::uint64_t{1} << j);
    }
    inverse_qft(state, layout.control);
    return register_distribution(state, layout.control);
}

std::vector<OutcomePair> pair_outcomes(const std::vector<double>& histogram, unsigned t) {
    const std::uint64_t size = std::uint64_t{1} << t;
    if (histogram.size() != size) throw DomainError("histogram length does not match 2^t");
    std::vector<OutcomePair> pairs;
    pairs.reserve(size / 2 + 1);
    for (std::uint64_t j = 0; j <= size / 2; ++j) {
        const std::uint64_t partner = (size - j) % size;
        OutcomePair p{j, partner, histogram[j]};
        if (partner != j) p.probability += histogram[partner];
        pairs.push_back(p);
    }
    return pairs;
}

double pea_resolution_floor(std::uint64_t N, unsigned t) {
    const double s = std::sin(std::numbers::pi / std::ldexp(1.0, static_cast<int>(t)));
    return static_cast<double>(N) * s * s;
}

PEAResult run_pea(const GroverProblem& problem, const PEAConfig& config) {
    if (config.t < 1 || config.t > 24) {
        throw DomainError("phase register width must be in [1, 24], got " + std::to_string(config.t));
    }
    if (2 * problem.M() >= problem.N() && problem.M() > 0) {
        throw DomainError("marked fraction must be below one half; double the search space first");
    }

    PEAResult result;
    result.t = config.t;
    const std::vector<double> exact = config.engine == Engine::Analytic
                                          ? pea_distribution(config.t, grover_angle(problem))
                                          : pea_statevector_distribution(problem, config.t);
    if (config.shots == 0) {
        result.histogram = exact;
    } else {
        result.counts = sample_distribution(exact, config.shots, config.seed);
        result.histogram.resize(exact.size());
        for (std::size_t j = 0; j < exact.size(); ++j) {
            result.histogram[j] = static_cast<double>(result.counts[j]) / static_cast<double>(config.shots);
        }
    }

    result.paired_prob = pair_outcomes(result.histogram, config.t);
    // pairs are ordered by increasing phi_hat, so a strict comparison keeps
    // the smaller phase on ties
    result.best_pair = result.paired_prob.front();
    for (const auto& p : result.paired_prob) {
        if (p.probability > result.best_pair.probability + 1e-12) result.best_pair = p;
    }
    result.phi_hat = static_cast<double>(result.best_pair.low) / std::ldexp(1.0, static_cast<int>(config.t));
    const double s = std::sin(std::numbers::pi * result.phi_hat);
    result.M_hat = static_cast<double>(problem.N()) * s * s;
    return result;
}

} // namespace qcount
