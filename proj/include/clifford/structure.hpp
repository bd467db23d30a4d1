#pragma once

#include <optional>

#include "clifford/multivector.hpp"
#include "clifford/signature.hpp"

namespace clifford {

enum class AlgebraTag { Simple, Split };

struct CentralIdempotents {
    Multivector first;
    Multivector second;
};

/// Simple-vs-split verdict for the non-degenerate subalgebra C(p,q).
struct AlgebraClass {
    AlgebraTag tag = AlgebraTag::Simple;
    /// Present exactly when tag == Split.
    std::optional<CentralIdempotents> idempotents;
};

/// (p - q) mod 8 with a non-negative result.
unsigned signature_residue(const Signature& sig) noexcept;

bool is_split(const Signature& sig) noexcept;

AlgebraClass classify_pq(const Signature& sig);

/// Product of every Plus and Minus generator in ascending order.
Multivector volume_element(const Signature& sig);

/// e1 = (1 + w)/2 and e2 = (1 - w)/2 for the volume element w. The pair is
/// checked (idempotent, orthogonal, summing to 1, commuting with the
/// non-null generators) before it is returned; a failed check throws
/// std::logic_error. Throws std::domain_error for Simple signatures.
CentralIdempotents central_idempotents(const Signature& sig);

struct SplitParts {
    Multivector first;
    Multivector second;
    Multivector rad;
};

/// u = e1*body + e2*body + rad. Throws std::domain_error for Simple signatures.
SplitParts split_decompose(const Multivector& u);

const char* to_string(AlgebraTag tag) noexcept;

} // namespace clifford
