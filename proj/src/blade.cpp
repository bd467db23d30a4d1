#include "clifford/blade.hpp"

#include <stdexcept>

namespace clifford {

int generator_square(const Signature& sig, unsigned index) {
    switch (sig.role(index)) {
    case Role::Plus: return 1;
    case Role::Minus: return -1;
    case Role::Null: return 0;
    }
    return 0;
}

void check_blade(const Signature& sig, BasisBlade blade) {
    if ((blade.mask & ~sig.full_mask()) != 0) {
        throw std::out_of_range("blade " + to_string(blade) + " is not valid for " + sig.to_string());
    }
}

namespace {

// Transpositions needed to sort the word a·b: every member j of b must move
// past each member of a that is larger than j.
unsigned swap_count(std::uint32_t a, std::uint32_t b) noexcept {
    unsigned swaps = 0;
    for (std::uint32_t rest = b; rest != 0; rest &= rest - 1) {
        const unsigned j = static_cast<unsigned>(std::countr_zero(rest));
        swaps += static_cast<unsigned>(std::popcount(a >> j >> 1));
    }
    return swaps;
}

} // namespace

BladeProduct blade_mul(const Signature& sig, BasisBlade a, BasisBlade b) {
    check_blade(sig, a);
    check_blade(sig, b);
    const std::uint32_t shared = a.mask & b.mask;
    if ((shared & sig.null_mask()) != 0) {
        return {0, BasisBlade::unit()};
    }
    unsigned negations = swap_count(a.mask, b.mask);
    negations += static_cast<unsigned>(std::popcount(shared & sig.minus_mask()));
    return {(negations & 1U) ? -1 : 1, BasisBlade{a.mask ^ b.mask}};
}

BladeParts blade_parts(const Signature& sig, BasisBlade blade) {
    check_blade(sig, blade);
    return {blade.mask & sig.plus_mask(), blade.mask & sig.minus_mask(), blade.mask & sig.null_mask()};
}

std::vector<unsigned> mask_indices(std::uint32_t mask) {
    std::vector<unsigned> out;
    for (; mask != 0; mask &= mask - 1) {
        out.push_back(static_cast<unsigned>(std::countr_zero(mask)));
    }
    return out;
}

std::string to_string(BasisBlade blade) {
    if (blade.mask == 0) return "1";
    std::string out;
    for (unsigned i : mask_indices(blade.mask)) {
        if (!out.empty()) out += '*';
        out += 'e';
        out += std::to_string(i);
    }
    return out;
}

} // namespace clifford
