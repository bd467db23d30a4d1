#include "clifford/structure.hpp"

#include <stdexcept>

namespace clifford {

unsigned signature_residue(const Signature& sig) noexcept {
    const long diff = static_cast<long>(sig.p()) - static_cast<long>(sig.q());
    return static_cast<unsigned>(((diff % 8) + 8) % 8);
}

bool is_split(const Signature& sig) noexcept {
    const unsigned r = signature_residue(sig);
    return r == 1 || r == 5;
}

AlgebraClass classify_pq(const Signature& sig) {
    if (!is_split(sig)) return {AlgebraTag::Simple, std::nullopt};
    return {AlgebraTag::Split, central_idempotents(sig)};
}

Multivector volume_element(const Signature& sig) {
    return Multivector::blade(sig, BasisBlade{sig.non_null_mask()});
}

CentralIdempotents central_idempotents(const Signature& sig) {
    if (!is_split(sig)) {
        throw std::domain_error("C(p,q) is simple for " + sig.to_string() + "; no central idempotent split");
    }
    const Multivector one = Multivector::scalar(sig, 1);
    const Multivector omega = volume_element(sig);
    const Rational half(1, 2);
    CentralIdempotents out{(one + omega) * half, (one - omega) * half};

    const Multivector zero(sig);
    bool ok = out.first * out.first == out.first && out.second * out.second == out.second &&
              out.first * out.second == zero && out.second * out.first == zero && out.first + out.second == one;
    for (unsigned i = 0; ok && i < sig.non_null(); ++i) {
        const Multivector g = Multivector::generator(sig, i);
        ok = g * out.first == out.first * g;
    }
    if (!ok) {
        throw std::logic_error("volume-element idempotents failed verification for " + sig.to_string());
    }
    return out;
}

SplitParts split_decompose(const Multivector& u) {
    const CentralIdempotents e = central_idempotents(u.signature());
    auto [body, rad] = radical_split(u);
    return {e.first * body, e.second * body, std::move(rad)};
}

const char* to_string(AlgebraTag tag) noexcept { return tag == AlgebraTag::Simple ? "Simple" : "Split"; }

} // namespace clifford
