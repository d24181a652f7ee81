#pragma once

#include "qcount/statevector.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qcount {

// Membership predicate over the basis indices of an n-qubit register.
//
// Two forms exist: an explicit sorted set of marked indices, and the
// bit-pattern oracle that marks x when every bit of `mask` is set in x. A
// bit-pattern oracle remembers the width it was defined for so that widening
// the search space leaves the new upper half unmarked.
class Oracle {
public:
    enum class Form { ExplicitSet, BitPattern };

    static Oracle explicit_set(unsigned n, std::vector<BasisIndex> indices);
    static Oracle bit_pattern(unsigned n, BasisIndex mask);

    Form form() const noexcept { return form_; }
    unsigned num_qubits() const noexcept { return n_; }
    BasisIndex space_size() const noexcept { return BasisIndex{1} << n_; }

    // Explicit-set members in increasing order; empty for bit patterns.
    const std::vector<BasisIndex>& indices() const noexcept { return indices_; }
    BasisIndex mask() const noexcept { return mask_; }
    // Width the pattern was defined over (equals num_qubits() until widened).
    unsigned pattern_bits() const noexcept { return pattern_bits_; }

    // Throws DomainError for x outside [0, 2^n).
    bool is_marked(BasisIndex x) const;
    // Unchecked variant for inner loops.
    bool marks(BasisIndex x) const noexcept;

    // Closed-form number of marked indices.
    std::uint64_t count() const noexcept;

    // Same marked indices embedded in n + 1 qubits.
    Oracle widened() const;

    // Textual form accepted by parse_oracle (widened patterns excepted).
    std::string to_string() const;

private:
    Oracle(Form form, unsigned n) : form_(form), n_(n), pattern_bits_(n) {}

    Form form_;
    unsigned n_;
    unsigned pattern_bits_;
    BasisIndex mask_ = 0;
    std::vector<BasisIndex> indices_;
};

// 2^(n - popcount(mask)).
std::uint64_t pattern_marked_count(unsigned n, BasisIndex mask);

// Parses `set:3,5,12` or `mask:<int>` (decimal, 0x hex or 0b binary).
// An empty set is written `set:`.
Oracle parse_oracle(std::string_view text, unsigned n);

} // namespace qcount
