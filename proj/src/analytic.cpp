#include "qcount/analytic.hpp"

#include "qcount/errors.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace qcount {

double p1_exact(unsigned k, const GroverAngle& angle) {
    const double s = std::sin(std::ldexp(angle.theta, static_cast<int>(k)) / 2.0);
    return s * s;
}

CircuitCoefficients circuit_state_closed_form(unsigned k, const GroverAngle& angle) {
    const double K = std::ldexp(1.0, static_cast<int>(k));
    const double a = K * angle.theta / 2.0;
    const double b = (K + 1.0) * angle.theta / 2.0;
    CircuitCoefficients c;
    c.zero_unmarked = std::cos(a) * std::cos(b);
    c.zero_marked = std::cos(a) * std::sin(b);
    c.one_unmarked = std::sin(a) * std::sin(b);
    c.one_marked = -std::sin(a) * std::cos(b);
    return c;
}

double phase_kernel(unsigned t, std::uint64_t j, double x) {
    const double scale = std::ldexp(1.0, static_cast<int>(t));
    const double delta = x - static_cast<double>(j) / scale;
    const double den = std::sin(std::numbers::pi * delta);
    if (std::abs(den) < 1e-15) return 1.0;
    const double num = std::sin(scale * std::numbers::pi * delta);
    return (num * num) / (scale * scale * den * den);
}

std::vector<double> pea_distribution(unsigned t, const GroverAngle& angle) {
    if (t < 1 || t > 24) {
        throw DomainError("phase register width must be in [1, 24], got " + std::to_string(t));
    }
    const std::uint64_t size = std::uint64_t{1} << t;
    std::vector<double> dist(size);
    for (std::uint64_t j = 0; j < size; ++j) {
        dist[j] = 0.5 * phase_kernel(t, j, angle.phi) + 0.5 * phase_kernel(t, j, 1.0 - angle.phi);
    }
    return dist;
}

} // namespace qcount
