#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "clifford/blade.hpp"
#include "clifford/rational.hpp"
#include "clifford/signature.hpp"

namespace clifford {

struct Term {
    BasisBlade blade;
    Rational coef;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse linear combination of basis blades with exact rational
/// coefficients. Terms are kept sorted by ascending blade mask and zero
/// coefficients are never stored.
class Multivector {
public:
    Multivector() = default;
    explicit Multivector(Signature sig) : sig_(sig) {}
    /// Terms may be unsorted and may repeat blades; they are merged.
    Multivector(Signature sig, std::vector<Term> terms);

    static Multivector scalar(Signature sig, const Rational& value);
    static Multivector blade(Signature sig, BasisBlade blade, const Rational& coef = 1);
    static Multivector generator(Signature sig, unsigned index);

    const Signature& signature() const noexcept { return sig_; }
    std::span<const Term> terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }
    Rational coefficient(BasisBlade blade) const;

    Multivector operator-() const;
    Multivector& operator+=(const Multivector& other);
    Multivector& operator-=(const Multivector& other);
    Multivector& operator*=(const Rational& s);

    friend Multivector operator+(Multivector a, const Multivector& b) { return a += b; }
    friend Multivector operator-(Multivector a, const Multivector& b) { return a -= b; }
    friend Multivector operator*(Multivector a, const Rational& s) { return a *= s; }
    friend Multivector operator*(const Rational& s, Multivector a) { return a *= s; }
    friend Multivector operator*(const Multivector& a, const Multivector& b);

    friend bool operator==(const Multivector&, const Multivector&) = default;

private:
    void check_same(const Multivector& other) const;

    Signature sig_;
    std::vector<Term> terms_;
};

/// Body and radical parts: C = C(p,q) (+) R as vector spaces.
struct RadicalSplit {
    Multivector body;
    Multivector rad;
};

RadicalSplit radical_split(const Multivector& u);

/// Mask of the Null generators occurring in any term of u.
std::uint32_t null_support_mask(const Multivector& u);
/// Ascending Null generator indices occurring in u.
std::vector<unsigned> null_support(const Multivector& u);

/// Terms of u whose Null part has exactly `grade` members (grade >= 1).
Multivector radical_grade_component(const Multivector& u, unsigned grade);

Multivector power(const Multivector& u, std::uint64_t n);

/// Smallest n with u^n = 0, or nullopt when u is not nilpotent. The
/// nilpotency index of any element is bounded by the algebra dimension.
std::optional<std::uint64_t> element_nilpotency_index(const Multivector& u);

/// Inverse of 1 + x for x in the radical, as the finite series
/// 1 - x + x^2 - ... Throws std::domain_error when the body of u is not 1.
Multivector invert_unipotent(const Multivector& u);

/// Canonical text: terms in ascending blade order, e.g. `3 + 2*e0 - 5/2*e2`.
std::string to_string(const Multivector& u);

} // namespace clifford
