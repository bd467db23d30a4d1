#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "clifford/linear.hpp"
#include "clifford/multivector.hpp"
#include "clifford/signature.hpp"

namespace clifford {

/// A computed result that contradicts the ideal-structure theory of C(p,q,z).
/// Seeing one means a bug in the arithmetic, never bad input.
class InternalContradiction : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Two-sided ideal stored as a reduced row-echelon basis over the blade
/// coordinates. The closed flag is only set once left and right
/// multiplication by every generator has been checked to stay inside.
class Ideal {
public:
    Ideal() = default;
    /// The zero ideal.
    explicit Ideal(Signature sig) : sig_(sig) {}

    /// Echelonized span of `vectors`; closure is tested and recorded.
    static Ideal from_span(const Signature& sig, const std::vector<Multivector>& vectors);
    static Ideal whole(const Signature& sig);

    const Signature& signature() const noexcept { return sig_; }
    std::size_t dim() const noexcept { return basis_.rank(); }
    bool is_zero() const noexcept { return basis_.empty(); }
    bool is_whole() const noexcept { return basis_.rank() == sig_.dimension(); }
    bool is_closed() const noexcept { return closed_; }

    std::vector<Multivector> basis() const;
    const EchelonBasis& echelon() const noexcept { return basis_; }

    /// Re-runs the two-sided closure test against every generator.
    bool verify_closure() const;

    friend bool operator==(const Ideal& a, const Ideal& b) { return a.sig_ == b.sig_ && a.basis_ == b.basis_; }

private:
    friend Ideal make_ideal(const Signature&, EchelonBasis);

    Signature sig_;
    EchelonBasis basis_;
    bool closed_ = true;
};

/// Smallest two-sided ideal containing `gens`: the span of e_A * g * e_B
/// over all basis blades A, B and generators g.
Ideal ideal_closure(const Signature& sig, const std::vector<Multivector>& gens);

bool ideal_contains(const Ideal& ideal, const Multivector& u);
bool is_subset(const Ideal& inner, const Ideal& outer);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersect(const Ideal& a, const Ideal& b);

/// The ideal generated by the Null generators, checked against the span of
/// all blades with a Null member.
Ideal nil_radical(const Signature& sig);
Ideal jacobson_radical(const Signature& sig);

/// Basis of e_i * C(p,q) for i in {1, 2} (Split signatures only).
std::vector<Multivector> component_basis(const Signature& sig, int which);
/// Two-sided ideal of C generated by the central idempotent e_i.
Ideal component_ideal(const Signature& sig, int which);

enum class Verdict { Zero, ContainedInRadical, C1PlusRadicalPart, C2PlusRadicalPart, WholeAlgebra };

const char* to_string(Verdict v) noexcept;

struct ClassificationReport {
    Verdict verdict = Verdict::Zero;
    Ideal radical_intersection;
    std::size_t dim = 0;
    std::size_t radical_dim = 0;
};

/// Places a nonzero proper ideal either inside the radical or, for Split
/// C(p,q), as C_i (+) (I n R). Any other shape throws InternalContradiction.
ClassificationReport ideal_classify(const Ideal& ideal);

/// [R] for Simple C(p,q); [C_1 (+) R, C_2 (+) R] for Split.
std::vector<Ideal> prime_ideals(const Signature& sig);

/// Smallest n with I^n = 0, searched up to z + 1. The zero ideal has index 1.
std::optional<unsigned> ideal_nilpotency_index(const Ideal& ideal);

/// I_S: the ideal generated by the Null generators listed in `nulls`.
Ideal ideal_from_null_set(const Signature& sig, const std::vector<unsigned>& nulls);

struct NullSupportSets {
    std::vector<unsigned> canonical;
    std::vector<unsigned> minimal;
};

/// Null generator sets S with I contained in I_S: the union of the basis
/// supports, and a smallest such S (lexicographically first among ties).
NullSupportSets null_support_of_ideal(const Ideal& ideal);

/// (e_a), (e_a e_b), (e_a e_b e_c), ... over the first k Null generators.
std::vector<Ideal> descending_chain(const Signature& sig, unsigned k);
/// (e_a), (e_a, e_b), (e_a, e_b, e_c), ... over the first k Null generators.
std::vector<Ideal> ascending_chain(const Signature& sig, unsigned k);

/// A subset of the basis of a nilpotent ideal that still generates it.
std::vector<Multivector> finite_generating_witness(const Ideal& ideal);

} // namespace clifford
