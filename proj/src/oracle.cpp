#include "qcount/oracle.hpp"

#include "qcount/errors.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <string>

namespace qcount {

namespace {

constexpr unsigned kMaxOracleQubits = 62;

void check_width(unsigned n) {
    if (n == 0 || n > kMaxOracleQubits) {
        throw DomainError("oracle width must be in [1, " + std::to_string(kMaxOracleQubits) + "], got " +
                          std::to_string(n));
    }
}

BasisIndex parse_integer(std::string_view text) {
    int base = 10;
    if (text.size() > 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
        base = 16;
        text.remove_prefix(2);
    } else if (text.size() > 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B')) {
        base = 2;
        text.remove_prefix(2);
    }
    BasisIndex value = 0;
    const auto* first = text.data();
    const auto* last = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(first, last, value, base);
    if (text.empty() || ec != std::errc{} || ptr != last) {
        throw DomainError("invalid integer '" + std::string(text) + "' in oracle spec");
    }
    return value;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
}

} // namespace

Oracle Oracle::explicit_set(unsigned n, std::vector<BasisIndex> indices) {
    check_width(n);
    std::sort(indices.begin(), indices.end());
    if (std::adjacent_find(indices.begin(), indices.end()) != indices.end()) {
        throw DomainError("explicit marked set contains duplicate indices");
    }
    const BasisIndex dim = BasisIndex{1} << n;
    if (!indices.empty() && indices.back() >= dim) {
        throw DomainError("marked index " + std::to_string(indices.back()) + " out of range for " +
                          std::to_string(n) + " qubits");
    }
    Oracle o(Form::ExplicitSet, n);
    o.indices_ = std::move(indices);
    return o;
}

Oracle Oracle::bit_pattern(unsigned n, BasisIndex mask) {
    check_width(n);
    if ((mask >> n) != 0) {
        throw DomainError("bit-pattern mask does not fit in " + std::to_string(n) + " bits");
    }
    Oracle o(Form::BitPattern, n);
    o.mask_ = mask;
    return o;
}

bool Oracle::is_marked(BasisIndex x) const {
    if (x >= space_size()) {
        throw DomainError("basis index " + std::to_string(x) + " out of range for " + std::to_string(n_) +
                          " qubits");
    }
    return marks(x);
}

bool Oracle::marks(BasisIndex x) const noexcept {
    if (form_ == Form::ExplicitSet) {
        return std::binary_search(indices_.begin(), indices_.end(), x);
    }
    return (x >> pattern_bits_) == 0 && (x & mask_) == mask_;
}

std::uint64_t Oracle::count() const noexcept {
    if (form_ == Form::ExplicitSet) return indices_.size();
    return pattern_marked_count(pattern_bits_, mask_);
}

Oracle Oracle::widened() const {
    check_width(n_ + 1);
    Oracle o = *this;
    o.n_ = n_ + 1;
    return o;
}

std::string Oracle::to_string() const {
    if (form_ == Form::ExplicitSet) {
        std::string s = "set:";
        for (std::size_t i = 0; i < indices_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(indices_[i]);
        }
        return s;
    }
    std::string bits;
    for (unsigned b = pattern_bits_; b-- > 0;) bits += ((mask_ >> b) & 1U) ? '1' : '0';
    return "mask:0b" + bits;
}

std::uint64_t pattern_marked_count(unsigned n, BasisIndex mask) {
    if (n < 64 && (mask >> n) != 0) {
        throw DomainError("bit-pattern mask does not fit in " + std::to_string(n) + " bits");
    }
    return std::uint64_t{1} << (n - static_cast<unsigned>(std::popcount(mask)));
}

Oracle parse_oracle(std::string_view text, unsigned n) {
    text = trim(text);
    if (text.starts_with("set:")) {
        std::string_view body = text.substr(4);
        std::vector<BasisIndex> indices;
        if (!trim(body).empty()) {
            while (true) {
                const auto comma = body.find(',');
                indices.push_back(parse_integer(trim(body.substr(0, comma))));
                if (comma == std::string_view::npos) break;
                body.remove_prefix(comma + 1);
            }
        }
        return Oracle::explicit_set(n, std::move(indices));
    }
    if (text.starts_with("mask:")) {
        return Oracle::bit_pattern(n, parse_integer(trim(text.substr(5))));
    }
    throw DomainError("oracle spec must start with 'set:' or 'mask:', got '" + std::string(text) + "'");
}

} // namespace qcount
