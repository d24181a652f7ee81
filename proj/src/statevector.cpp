#include "qcount/statevector.hpp"

#include "qcount/errors.hpp"
#include "qcount/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <string>

namespace qcount {

namespace {

constexpr unsigned kHardQubitLimit = 40;

// Basis offsets of every sub-index of `reg`.
std::vector<BasisIndex> register_offsets(std::span<const QubitIndex> reg) {
    std::vector<BasisIndex> offsets(std::size_t{1} << reg.size(), 0);
    for (std::size_t r = 0; r < offsets.size(); ++r) {
        BasisIndex off = 0;
        for (std::size_t b = 0; b < reg.size(); ++b) {
            if ((r >> b) & 1U) off |= BasisIndex{1} << reg[b];
        }
        offsets[r] = off;
    }
    return offsets;
}

// Calls fn(base) for every basis index with all `fixed` bits clear and all
// `controls` bits set.
template <typename Fn>
void for_each_base(std::size_t dim, std::uint64_t fixed, ControlMask controls, Fn&& fn) {
    const std::uint64_t skip = fixed | controls;
    const std::uint64_t full = dim - 1;
    std::uint64_t free = 0;
    while (true) {
        fn(free | controls);
        // next subset of the free bits
        free = ((free | skip | ~full) + 1) & ~(skip | ~full);
        if (free == 0) break;
    }
}

void check_controls(const Statevector& state, ControlMask controls, std::uint64_t targets) {
    if (state.num_qubits() < 64 && (controls >> state.num_qubits()) != 0) {
        throw DomainError("control qubit out of range");
    }
    if ((controls & targets) != 0) {
        throw DomainError("control qubit overlaps target");
    }
}

} // namespace

unsigned max_qubits() {
    if (const char* env = std::getenv("QCOUNT_MAX_QUBITS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v >= 1 && v <= static_cast<long>(kHardQubitLimit)) {
            return static_cast<unsigned>(v);
        }
    }
    return kDefaultMaxQubits;
}

Register contiguous_register(QubitIndex first, unsigned width) {
    Register reg(width);
    for (unsigned i = 0; i < width; ++i) reg[i] = first + i;
    return reg;
}

Statevector::Statevector(unsigned num_qubits, BasisIndex basis_index) : num_qubits_(num_qubits) {
    if (num_qubits == 0) {
        throw DomainError("statevector needs at least one qubit");
    }
    const unsigned cap = max_qubits();
    if (num_qubits > cap) {
        throw ResourceError("statevector of " + std::to_string(num_qubits) +
                                " qubits exceeds the cap of " + std::to_string(cap) +
                                " (set QCOUNT_MAX_QUBITS to raise it)",
                            num_qubits);
    }
    const BasisIndex dim = BasisIndex{1} << num_qubits;
    if (basis_index >= dim) {
        throw DomainError("basis index " + std::to_string(basis_index) + " out of range for " +
                          std::to_string(num_qubits) + " qubits");
    }
    amplitudes_.assign(dim, Amplitude{0.0, 0.0});
    amplitudes_[basis_index] = Amplitude{1.0, 0.0};
}

double Statevector::norm_squared() const noexcept {
    double s = 0.0;
    for (const auto& a : amplitudes_) s += std::norm(a);
    return s;
}

void Statevector::check_qubit(QubitIndex q) const {
    if (q >= num_qubits_) {
        throw DomainError("qubit " + std::to_string(q) + " out of range for " +
                          std::to_string(num_qubits_) + " qubits");
    }
}

std::uint64_t Statevector::check_register(std::span<const QubitIndex> reg) const {
    std::uint64_t mask = 0;
    for (QubitIndex q : reg) {
        check_qubit(q);
        const std::uint64_t bit = std::uint64_t{1} << q;
        if (mask & bit) throw DomainError("register qubits must be distinct");
        mask |= bit;
    }
    return mask;
}

Statevector init_basis(unsigned num_qubits, BasisIndex basis_index) {
    return Statevector(num_qubits, basis_index);
}

void apply_hadamard(Statevector& state, QubitIndex q, ControlMask controls) {
    state.check_qubit(q);
    const std::uint64_t bit = std::uint64_t{1} << q;
    check_controls(state, controls, bit);
    const double s = std::numbers::sqrt2 / 2.0;
    auto amps = state.amplitudes();
    for_each_base(amps.size(), bit, controls, [&](std::uint64_t i) {
        const Amplitude a0 = amps[i];
        const Amplitude a1 = amps[i | bit];
        amps[i] = s * (a0 + a1);
        amps[i | bit] = s * (a0 - a1);
    });
}

void apply_hadamard(Statevector& state, std::span<const QubitIndex> reg, ControlMask controls) {
    state.check_register(reg);
    for (QubitIndex q : reg) apply_hadamard(state, q, controls);
}

void apply_phase_flip(Statevector& state, const Oracle& oracle, std::span<const QubitIndex> reg,
                      ControlMask controls) {
    const std::uint64_t reg_mask = state.check_register(reg);
    check_controls(state, controls, reg_mask);
    if (oracle.num_qubits() != reg.size()) {
        throw DomainError("oracle width " + std::to_string(oracle.num_qubits()) +
                          " does not match register width " + std::to_string(reg.size()));
    }
    const auto offsets = register_offsets(reg);
    std::vector<BasisIndex> marked;
    for (BasisIndex r = 0; r < offsets.size(); ++r) {
        if (oracle.marks(r)) marked.push_back(offsets[r]);
    }
    if (marked.empty()) return;
    auto amps = state.amplitudes();
    for_each_base(amps.size(), reg_mask, controls, [&](std::uint64_t base) {
        for (BasisIndex off : marked) amps[base | off] = -amps[base | off];
    });
}

void apply_diffusion(Statevector& state, std::span<const QubitIndex> reg, ControlMask controls) {
    const std::uint64_t reg_mask = state.check_register(reg);
    check_controls(state, controls, reg_mask);
    const auto offsets = register_offsets(reg);
    const double inv = 1.0 / static_cast<double>(offsets.size());
    auto amps = state.amplitudes();
    for_each_base(amps.size(), reg_mask, controls, [&](std::uint64_t base) {
        Amplitude sum{0.0, 0.0};
        for (BasisIndex off : offsets) sum += amps[base | off];
        const Amplitude twice_mean = 2.0 * inv * sum;
        for (BasisIndex off : offsets) amps[base | off] = twice_mean - amps[base | off];
    });
}

void apply_phase(Statevector& state, QubitIndex q, double angle, ControlMask controls) {
    state.check_qubit(q);
    const std::uint64_t bit = std::uint64_t{1} << q;
    check_controls(state, controls, bit);
    const Amplitude phase = std::polar(1.0, angle);
    auto amps = state.amplitudes();
    for_each_base(amps.size(), bit, controls, [&](std::uint64_t i) { amps[i | bit] *= phase; });
}

void apply_swap(Statevector& state, QubitIndex a, QubitIndex b, ControlMask controls) {
    state.check_qubit(a);
    state.check_qubit(b);
    if (a == b) return;
    const std::uint64_t ba = std::uint64_t{1} << a;
    const std::uint64_t bb = std::uint64_t{1} << b;
    check_controls(state, controls, ba | bb);
    auto amps = state.amplitudes();
    for_each_base(amps.size(), ba | bb, controls,
                  [&](std::uint64_t i) { std::swap(amps[i | ba], amps[i | bb]); });
}

void controlled_apply(Statevector& state, QubitIndex control, std::span<const QubitIndex> targets,
                      const SubCircuit& action, ControlMask outer) {
    state.check_qubit(control);
    const std::uint64_t target_mask = state.check_register(targets);
    const std::uint64_t bit = std::uint64_t{1} << control;
    if (target_mask & bit) {
        throw DomainError("control qubit " + std::to_string(control) + " is one of the targets");
    }
    check_controls(state, outer, target_mask);
    action(state, outer | bit);
}

double probability_of_one(const Statevector& state, QubitIndex q) {
    state.check_qubit(q);
    const std::uint64_t bit = std::uint64_t{1} << q;
    const auto amps = state.amplitudes();
    double p = 0.0;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & bit) p += std::norm(amps[i]);
    }
    return p;
}

std::vector<double> register_distribution(const Statevector& state, std::span<const QubitIndex> reg) {
    const std::uint64_t reg_mask = state.check_register(reg);
    const auto offsets = register_offsets(reg);
    std::vector<double> dist(offsets.size(), 0.0);
    const auto amps = state.amplitudes();
    for_each_base(amps.size(), reg_mask, 0, [&](std::uint64_t base) {
        for (std::size_t r = 0; r < offsets.size(); ++r) dist[r] += std::norm(amps[base | offsets[r]]);
    });
    return dist;
}

} // namespace qcount
