#include "qcount/simple_count.hpp"

#include "qcount/analytic.hpp"
#include "qcount/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace qcount {

namespace {

// Slack for ceilings of quantities that are integral in exact arithmetic.
constexpr double kCeilSlack = 1e-9;

} // namespace

std::uint64_t CountEstimate::cost() const noexcept {
    std::uint64_t total = 0;
    for (const auto& step : trace) total += step.K;
    return total;
}

unsigned default_max_k(unsigned n) { return (n + 1) / 2 + 2; }

unsigned halt_bound(std::uint64_t N, std::uint64_t M) {
    if (M == 0) throw DomainError("halt bound undefined for M = 0");
    if (M > N) throw DomainError("marked count exceeds search-space size");
    unsigned k = 0;
    std::uint64_t scaled = M;
    while (scaled < N) {
        scaled *= 4;
        ++k;
    }
    return k;
}

AngleEstimate postprocess_arccos(double p_k, unsigned k, std::uint64_t N) {
    const double p = std::clamp(p_k, -1.0, 1.0);
    AngleEstimate e;
    e.theta_hat = std::ldexp(std::acos(p), -static_cast<int>(k));
    const double s = std::sin(e.theta_hat / 2.0);
    e.M_hat = static_cast<double>(N) * s * s;
    return e;
}

AngleEstimate postprocess_halfangle(double p_k, unsigned k, std::uint64_t N) {
    double p = std::clamp(p_k, -1.0, 1.0);
    for (unsigned j = k; j > 0; --j) p = std::sqrt((1.0 + p) / 2.0);
    AngleEstimate e;
    e.theta_hat = std::acos(p);
    e.M_hat = static_cast<double>(N) * (1.0 - p) / 2.0;
    return e;
}

std::uint64_t optimal_grover_iterations(double theta) {
    if (!(theta > 0.0)) throw DomainError("optimal iteration count needs theta > 0");
    const double r = (std::numbers::pi / theta - 1.0) / 2.0;
    if (r <= 0.0) return 0;
    return static_cast<std::uint64_t>(std::ceil(r - kCeilSlack));
}

MinorityProblem ensure_minority(const GroverProblem& problem) {
    MinorityProblem out{problem, 0};
    while (2 * out.problem.M() >= out.problem.N() && out.problem.M() > 0) {
        out.problem = GroverProblem(out.problem.oracle().widened());
        ++out.doublings;
    }
    return out;
}

StepCircuitLayout step_circuit_layout(unsigned n) {
    return StepCircuitLayout{contiguous_register(0, n), n};
}

Statevector prepare_step_state(const GroverProblem& problem, unsigned k) {
    const auto layout = step_circuit_layout(problem.n());
    Statevector state(problem.n() + 1);
    apply_hadamard(state, layout.measurement);
    apply_hadamard(state, layout.computation);
    controlled_grover_power(state, layout.measurement, problem, layout.computation,
                            std::uint64_t{1} << k);
    apply_hadamard(state, layout.measurement);
    return state;
}

double step_probability(const GroverProblem& problem, unsigned k, Engine engine) {
    if (engine == Engine::Analytic) return p1_exact(k, grover_angle(problem));
    const auto state = prepare_step_state(problem, k);
    return std::clamp(probability_of_one(state, problem.n()), 0.0, 1.0);
}

CountEstimate run_simple_count(const GroverProblem& problem, const CountingConfig& config) {
    if (!(config.threshold > 0.0 && config.threshold <= 1.0)) {
        throw DomainError("threshold must be in (0, 1], got " + std::to_string(config.threshold));
    }
    const unsigned max_k = config.max_k.value_or(default_max_k(problem.n()));
    if (max_k < 1) throw DomainError("max_k must be at least 1");
    if (2 * problem.M() >= problem.N() && problem.M() > 0) {
        throw DomainError("marked fraction must be below one half; double the search space first");
    }
    if (config.engine == Engine::Statevector && problem.n() + 1 > max_qubits()) {
        throw ResourceError("counting circuit needs " + std::to_string(problem.n() + 1) +
                                " qubits, cap is " + std::to_string(max_qubits()),
                            problem.n() + 1);
    }
    if (max_k >= 63) throw DomainError("max_k too large");

    CountEstimate est;
    for (unsigned k = 0; k <= max_k; ++k) {
        StepOutcome step;
        step.k = k;
        step.K = std::uint64_t{1} << k;
        const double p1 = step_probability(problem, k, config.engine);
        if (config.shots == 0) {
            step.p1_hat = p1;
            step.p0_hat = 1.0 - p1;
        } else {
            step.shots = config.shots;
            step.ones = sample_bit(p1, config.shots, derive_seed(config.seed, k));
            const double shots = static_cast<double>(config.shots);
            step.p1_hat = static_cast<double>(step.ones) / shots;
            step.p0_hat = static_cast<double>(config.shots - step.ones) / shots;
        }
        est.trace.push_back(step);
        if (step.p1_hat >= config.threshold) {
            est.halted_on_threshold = true;
            break;
        }
    }

    const StepOutcome& last = est.trace.back();
    est.k_final = last.k;
    const auto angle = postprocess_arccos(last.p0_hat - last.p1_hat, last.k, problem.N());
    est.theta_hat = angle.theta_hat;
    est.M_hat = angle.M_hat;
    if (est.theta_hat > 0.0) est.R = optimal_grover_iterations(est.theta_hat);
    return est;
}

} // namespace qcount
