#include "qcount/errors.hpp"
#include "qcount/statevector.hpp"

#include <cmath>
#include <random>
#include <string>

namespace qcount {

std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index) {
    std::uint64_t z = base_seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t sample_bit(double p1, std::uint64_t shots, std::uint64_t seed) {
    if (!(p1 >= 0.0 && p1 <= 1.0)) {
        throw DomainError("probability " + std::to_string(p1) + " outside [0, 1]");
    }
    if (shots == 0) throw DomainError("shot count must be at least 1");
    if (p1 == 0.0) return 0;
    if (p1 == 1.0) return shots;
    std::mt19937_64 rng(seed);
    std::binomial_distribution<std::uint64_t> dist(shots, p1);
    return dist(rng);
}

std::vector<std::uint64_t> sample_distribution(std::span<const double> probabilities,
                                               std::uint64_t shots, std::uint64_t seed) {
    if (shots == 0) throw DomainError("shot count must be at least 1");
    double total = 0.0;
    for (double p : probabilities) {
        if (!(p >= 0.0)) throw DomainError("negative probability in distribution");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-8) throw DomainError("distribution does not sum to 1");

    // Conditional binomials: outcome i gets Binomial(remaining, p_i / mass_left).
    std::vector<std::uint64_t> counts(probabilities.size(), 0);
    std::mt19937_64 rng(seed);
    std::uint64_t remaining = shots;
    double mass_left = total;
    for (std::size_t i = 0; i < probabilities.size() && remaining > 0; ++i) {
        if (i + 1 == probabilities.size()) {
            counts[i] = remaining;
            break;
        }
        const double p = probabilities[i];
        if (p <= 0.0) continue;
        const double q = std::min(1.0, p / mass_left);
        std::uint64_t c = remaining;
        if (q < 1.0) {
            std::binomial_distribution<std::uint64_t> dist(remaining, q);
            c = dist(rng);
        }
        counts[i] = c;
        remaining -= c;
        mass_left -= p;
        if (mass_left <= 0.0) break;
    }
    if (remaining > 0 && mass_left <= 0.0) {
        // round-off left shots unassigned; give them to the last nonzero outcome
        for (std::size_t i = probabilities.size(); i-- > 0;) {
            if (probabilities[i] > 0.0) {
                counts[i] += remaining;
                break;
            }
        }
    }
    return counts;
}

} // namespace qcount
