#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

namespace qcount {

class Oracle;

using Amplitude = std::complex<double>;
using BasisIndex = std::uint64_t;
using QubitIndex = unsigned;
using Register = std::vector<QubitIndex>;

// Bit set of control qubits that must all be |1> for a gate to act.
using ControlMask = std::uint64_t;

constexpr unsigned kDefaultMaxQubits = 24;

// Qubit cap for dense simulation. QCOUNT_MAX_QUBITS overrides the default
// of 24; unparsable values are ignored.
unsigned max_qubits();

// Register of `width` consecutive qubits starting at `first`.
Register contiguous_register(QubitIndex first, unsigned width);

// Dense statevector over the computational basis.
//
// Qubit q is bit q of the basis index (qubit 0 is least significant). A
// register [r0, r1, ...] addresses the sub-index whose bit i is the value of
// qubit r_i.
class Statevector {
public:
    Statevector(unsigned num_qubits, BasisIndex basis_index);
    explicit Statevector(unsigned num_qubits) : Statevector(num_qubits, 0) {}

    unsigned num_qubits() const noexcept { return num_qubits_; }
    std::size_t size() const noexcept { return amplitudes_.size(); }

    std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
    std::span<Amplitude> amplitudes() noexcept { return amplitudes_; }

    const Amplitude& operator[](BasisIndex i) const { return amplitudes_[i]; }
    Amplitude& operator[](BasisIndex i) { return amplitudes_[i]; }

    double norm_squared() const noexcept;

    // Throws DomainError if q is not a qubit of this state.
    void check_qubit(QubitIndex q) const;
    // Validates distinct, in-range qubits and returns their bit mask.
    std::uint64_t check_register(std::span<const QubitIndex> reg) const;

private:
    unsigned num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

Statevector init_basis(unsigned num_qubits, BasisIndex basis_index);

// Gate actions. Each mutates `state` in place and acts only on the subspace
// where every qubit in `controls` is |1>.
void apply_hadamard(Statevector& state, QubitIndex q, ControlMask controls = 0);
void apply_hadamard(Statevector& state, std::span<const QubitIndex> reg, ControlMask controls = 0);

// Multiplies by -1 every amplitude whose register sub-index is marked.
void apply_phase_flip(Statevector& state, const Oracle& oracle,
                      std::span<const QubitIndex> reg, ControlMask controls = 0);

// Reflection 2|s><s| - I about the uniform superposition |s> of `reg`,
// applied independently for every configuration of the other qubits.
void apply_diffusion(Statevector& state, std::span<const QubitIndex> reg, ControlMask controls = 0);

// Multiplies amplitudes with qubit q set by e^{i angle}.
void apply_phase(Statevector& state, QubitIndex q, double angle, ControlMask controls = 0);

void apply_swap(Statevector& state, QubitIndex a, QubitIndex b, ControlMask controls = 0);

// A sub-circuit receives the control mask it must forward to every gate it
// applies.
using SubCircuit = std::function<void(Statevector&, ControlMask)>;

// Runs `action` conditioned on `control` (in addition to `outer`). Throws
// DomainError if `control` is one of `targets`.
void controlled_apply(Statevector& state, QubitIndex control,
                      std::span<const QubitIndex> targets, const SubCircuit& action,
                      ControlMask outer = 0);

double probability_of_one(const Statevector& state, QubitIndex q);

// Probability of each sub-index of `reg` (length 2^|reg|).
std::vector<double> register_distribution(const Statevector& state, std::span<const QubitIndex> reg);

// Binomial(shots, p1) draw, deterministic in (p1, shots, seed).
std::uint64_t sample_bit(double p1, std::uint64_t shots, std::uint64_t seed);

// Multinomial draw of `shots` outcomes over `probabilities`.
std::vector<std::uint64_t> sample_distribution(std::span<const double> probabilities,
                                               std::uint64_t shots, std::uint64_t seed);

// SplitMix64 finalizer combining a base seed with a stream index.
std::uint64_t derive_seed(std::uint64_t base_seed, std::uint64_t index);

} // namespace qcount
