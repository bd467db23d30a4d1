#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "clifford/signature.hpp"

namespace clifford {

/// One basis element e_I e_J e_K: the product of the member generators in
/// ascending index order. The empty set is the unit.
struct BasisBlade {
    std::uint32_t mask = 0;

    static constexpr BasisBlade unit() noexcept { return {}; }
    static constexpr BasisBlade generator(unsigned index) noexcept { return {std::uint32_t{1} << index}; }

    unsigned grade() const noexcept { return static_cast<unsigned>(std::popcount(mask)); }
    bool contains(unsigned index) const noexcept { return (mask >> index) & 1U; }

    friend constexpr auto operator<=>(BasisBlade, BasisBlade) = default;
};

/// Product of two blades: coefficient in {+1,-1,0} times a blade.
struct BladeProduct {
    int sign = 1;
    BasisBlade blade;

    friend bool operator==(const BladeProduct&, const BladeProduct&) = default;
};

/// Role-restricted pieces of a blade; I = Plus part, J = Minus part, K = Null part.
struct BladeParts {
    std::uint32_t plus = 0;
    std::uint32_t minus = 0;
    std::uint32_t null = 0;

    unsigned grade() const noexcept {
        return static_cast<unsigned>(std::popcount(plus) + std::popcount(minus) + std::popcount(null));
    }
    friend bool operator==(const BladeParts&, const BladeParts&) = default;
};

/// +1, -1 or 0 according to the role of generator `index`.
int generator_square(const Signature& sig, unsigned index);

/// Throws std::out_of_range unless every member of `blade` is a generator of `sig`.
void check_blade(const Signature& sig, BasisBlade blade);

BladeProduct blade_mul(const Signature& sig, BasisBlade a, BasisBlade b);

BladeParts blade_parts(const Signature& sig, BasisBlade blade);

/// Ascending indices set in `mask`.
std::vector<unsigned> mask_indices(std::uint32_t mask);

/// `1` or `e<i>*e<j>*...` with ascending indices.
std::string to_string(BasisBlade blade);

} // namespace clifford
