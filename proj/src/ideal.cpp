#include "clifford/ideal.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <stdexcept>

#include "clifford/structure.hpp"

namespace clifford {

Ideal make_ideal(const Signature& sig, EchelonBasis basis) {
    Ideal out(sig);
    out.basis_ = std::move(basis);
    out.closed_ = out.verify_closure();
    return out;
}

namespace {

void check_signature(const Signature& a, const Signature& b) {
    if (a != b) throw std::invalid_argument("signature mismatch: " + a.to_string() + " vs " + b.to_string());
}

void require_closed(const Ideal& ideal, const char* op) {
    if (!ideal.is_closed()) throw std::invalid_argument(std::string(op) + " requires a two-sided ideal");
}

Multivector blade_mv(const Signature& sig, std::uint32_t mask) { return Multivector::blade(sig, BasisBlade{mask}); }

// Span of all blades whose Null part meets `nulls`.
EchelonBasis blades_meeting(const Signature& sig, std::uint32_t nulls) {
    EchelonBasis out;
    for (std::uint32_t m = 0; m <= sig.full_mask(); ++m) {
        if ((m & nulls) != 0) out.insert({{m, Rational(1)}});
    }
    return out;
}

} // namespace

Ideal Ideal::from_span(const Signature& sig, const std::vector<Multivector>& vectors) {
    EchelonBasis basis;
    for (const Multivector& v : vectors) {
        check_signature(sig, v.signature());
        basis.insert(to_sparse(v));
    }
    return make_ideal(sig, std::move(basis));
}

Ideal Ideal::whole(const Signature& sig) { return ideal_closure(sig, {Multivector::scalar(sig, 1)}); }

std::vector<Multivector> Ideal::basis() const {
    std::vector<Multivector> out;
    out.reserve(basis_.rank());
    for (const auto& [pivot, row] : basis_.by_pivot()) out.push_back(from_sparse(sig_, row));
    return out;
}

bool Ideal::verify_closure() const {
    for (const auto& [pivot, row] : basis_.by_pivot()) {
        const Multivector v = from_sparse(sig_, row);
        for (unsigned i = 0; i < sig_.generators(); ++i) {
            const Multivector g = Multivector::generator(sig_, i);
            if (!basis_.contains(to_sparse(g * v)) || !basis_.contains(to_sparse(v * g))) return false;
        }
    }
    return true;
}

Ideal ideal_closure(const Signature& sig, const std::vector<Multivector>& gens) {
    const std::uint64_t dim = sig.dimension();
    const std::uint32_t top = sig.full_mask();
    EchelonBasis result;
    for (const Multivector& g : gens) {
        check_signature(sig, g.signature());
        if (result.rank() == dim) break;
        // span{e_A g e_B} = span{v e_B : v in span{e_A g}}.
        EchelonBasis left;
        for (std::uint32_t a = 0; a <= top; ++a) left.insert(to_sparse(blade_mv(sig, a) * g));
        for (const auto& [pivot, row] : left.by_pivot()) {
            const Multivector v = from_sparse(sig, row);
            for (std::uint32_t b = 0; b <= top && result.rank() < dim; ++b) {
                result.insert(to_sparse(v * blade_mv(sig, b)));
            }
        }
    }
    Ideal out = make_ideal(sig, std::move(result));
    if (!out.is_closed()) throw InternalContradiction("ideal closure failed its two-sided closure check");
    return out;
}

bool ideal_contains(const Ideal& ideal, const Multivector& u) {
    check_signature(ideal.signature(), u.signature());
    return ideal.echelon().contains(to_sparse(u));
}

bool is_subset(const Ideal& inner, const Ideal& outer) {
    check_signature(inner.signature(), outer.signature());
    for (const auto& [pivot, row] : inner.echelon().by_pivot()) {
        if (!outer.echelon().contains(row)) return false;
    }
    return true;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    check_signature(a.signature(), b.signature());
    require_closed(a, "ideal_sum");
    require_closed(b, "ideal_sum");
    EchelonBasis basis = a.echelon();
    for (const auto& [pivot, row] : b.echelon().by_pivot()) basis.insert(row);
    return make_ideal(a.signature(), std::move(basis));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    check_signature(a.signature(), b.signature());
    require_closed(a, "ideal_product");
    require_closed(b, "ideal_product");
    const Signature& sig = a.signature();
    const std::vector<Multivector> left = a.basis();
    const std::vector<Multivector> right = b.basis();
    EchelonBasis basis;
    for (const Multivector& x : left) {
        for (const Multivector& y : right) basis.insert(to_sparse(x * y));
    }
    Ideal out = make_ideal(sig, std::move(basis));
    if (!out.is_closed()) throw InternalContradiction("product of ideals is not a two-sided ideal");
    return out;
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
    check_signature(a.signature(), b.signature());
    require_closed(a, "ideal_intersect");
    require_closed(b, "ideal_intersect");
    // Zassenhaus: rows [u | u] for u in a and [v | 0] for v in b. Rows whose
    // left half vanishes after elimination span the intersection.
    const std::uint32_t shift = std::uint32_t{1} << a.signature().generators();
    EchelonBasis stacked;
    for (const auto& [pivot, row] : a.echelon().by_pivot()) {
        SparseVector doubled = row;
        for (const Entry& e : row) doubled.push_back({e.key | shift, e.value});
        stacked.insert(doubled);
    }
    for (const auto& [pivot, row] : b.echelon().by_pivot()) stacked.insert(row);
    EchelonBasis meet;
    for (auto it = stacked.by_pivot().lower_bound(shift); it != stacked.by_pivot().end(); ++it) {
        SparseVector right;
        for (const Entry& e : it->second) right.push_back({e.key & ~shift, e.value});
        meet.insert(right);
    }
    Ideal out = make_ideal(a.signature(), std::move(meet));
    if (!out.is_closed()) throw InternalContradiction("intersection of ideals is not a two-sided ideal");
    return out;
}

Ideal nil_radical(const Signature& sig) {
    std::vector<Multivector> gens;
    for (unsigned i = sig.non_null(); i < sig.generators(); ++i) gens.push_back(Multivector::generator(sig, i));
    Ideal rad = ideal_closure(sig, gens);
    if (rad.echelon() != blades_meeting(sig, sig.null_mask())) {
        throw InternalContradiction("ideal generated by the null generators differs from the radical blade span");
    }
    return rad;
}

Ideal jacobson_radical(const Signature& sig) { return nil_radical(sig); }

std::vector<Multivector> component_basis(const Signature& sig, int which) {
    if (which != 1 && which != 2) throw std::invalid_argument("component index must be 1 or 2");
    const CentralIdempotents e = central_idempotents(sig);
    const Multivector& idem = which == 1 ? e.first : e.second;
    EchelonBasis basis;
    for (std::uint32_t m = 0; m <= sig.non_null_mask(); ++m) basis.insert(to_sparse(idem * blade_mv(sig, m)));
    std::vector<Multivector> out;
    for (const auto& [pivot, row] : basis.by_pivot()) out.push_back(from_sparse(sig, row));
    return out;
}

Ideal component_ideal(const Signature& sig, int which) {
    if (which != 1 && which != 2) throw std::invalid_argument("component index must be 1 or 2");
    const CentralIdempotents e = central_idempotents(sig);
    return ideal_closure(sig, {which == 1 ? e.first : e.second});
}

const char* to_string(Verdict v) noexcept {
    switch (v) {
    case Verdict::Zero: return "Zero";
    case Verdict::ContainedInRadical: return "ContainedInRadical";
    case Verdict::C1PlusRadicalPart: return "C1PlusRadicalPart";
    case Verdict::C2PlusRadicalPart: return "C2PlusRadicalPart";
    case Verdict::WholeAlgebra: return "WholeAlgebra";
    }
    return "?";
}

ClassificationReport ideal_classify(const Ideal& ideal) {
    require_closed(ideal, "ideal_classify");
    const Signature& sig = ideal.signature();
    ClassificationReport report;
    report.dim = ideal.dim();
    report.radical_intersection = ideal_intersect(ideal, nil_radical(sig));
    report.radical_dim = report.radical_intersection.dim();

    if (ideal.is_zero()) {
        report.verdict = Verdict::Zero;
        return report;
    }
    if (ideal.is_whole()) {
        report.verdict = Verdict::WholeAlgebra;
        return report;
    }
    if (report.radical_dim == report.dim) {
        report.verdict = Verdict::ContainedInRadical;
        return report;
    }
    if (!is_split(sig)) {
        throw InternalContradiction("proper ideal of " + sig.to_string() +
                                    " escapes the radical although C(p,q) is simple");
    }
    const CentralIdempotents e = central_idempotents(sig);
    const bool has_first = ideal_contains(ideal, e.first);
    const bool has_second = ideal_contains(ideal, e.second);
    if (has_first == has_second) {
        throw InternalContradiction("proper ideal outside the radical contains " +
                                    std::string(has_first ? "both" : "neither") + " central idempotents");
    }
    const int which = has_first ? 1 : 2;
    // I = C_i (+) (I n R): C_i inside I and the dimensions add up.
    for (const Multivector& v : component_basis(sig, which)) {
        if (!ideal_contains(ideal, v)) throw InternalContradiction("ideal holds e_i but not all of C_i");
    }
    if (report.dim != (std::uint64_t{1} << sig.non_null()) / 2 + report.radical_dim) {
        throw InternalContradiction("dim I != dim C_i + dim(I n R)");
    }
    report.verdict = which == 1 ? Verdict::C1PlusRadicalPart : Verdict::C2PlusRadicalPart;
    return report;
}

std::vector<Ideal> prime_ideals(const Signature& sig) {
    Ideal rad = nil_radical(sig);
    if (!is_split(sig)) return {rad};
    return {ideal_sum(component_ideal(sig, 1), rad), ideal_sum(component_ideal(sig, 2), rad)};
}

std::optional<unsigned> ideal_nilpotency_index(const Ideal& ideal) {
    require_closed(ideal, "ideal_nilpotency_index");
    if (ideal.is_zero()) return 1U;
    // Any (z+1)-fold product of radical elements repeats a null generator.
    const unsigned bound = ideal.signature().z() + 1;
    Ideal power = ideal;
    for (unsigned n = 2; n <= bound; ++n) {
        power = ideal_product(power, ideal);
        if (power.is_zero()) return n;
    }
    return std::nullopt;
}

Ideal ideal_from_null_set(const Signature& sig, const std::vector<unsigned>& nulls) {
    std::vector<Multivector> gens;
    for (unsigned i : nulls) {
        if (sig.role(i) != Role::Null) {
            throw std::domain_error("e" + std::to_string(i) + " is not a null generator of " + sig.to_string());
        }
        gens.push_back(Multivector::generator(sig, i));
    }
    return ideal_closure(sig, gens);
}

NullSupportSets null_support_of_ideal(const Ideal& ideal) {
    require_closed(ideal, "null_support_of_ideal");
    const Signature& sig = ideal.signature();
    const std::uint32_t nulls = sig.null_mask();
    std::vector<std::uint32_t> parts;
    std::uint32_t canonical = 0;
    for (const auto& [pivot, row] : ideal.echelon().by_pivot()) {
        for (const Entry& e : row) {
            const std::uint32_t k = e.key & nulls;
            if (k == 0) {
                throw std::domain_error("ideal is not contained in the nil radical");
            }
            canonical |= k;
            parts.push_back(k);
        }
    }
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());

    // I is inside the monomial ideal I_S iff every blade in its basis meets S.
    auto hits = [&](std::uint32_t s) {
        return std::all_of(parts.begin(), parts.end(), [s](std::uint32_t k) { return (k & s) != 0; });
    };
    const std::vector<unsigned> candidates = mask_indices(nulls);
    std::optional<std::uint32_t> minimal;
    std::vector<unsigned> chosen;
    // Combinations of each size in lexicographic order of index tuples.
    std::function<bool(std::size_t, std::size_t)> search = [&](std::size_t start, std::size_t remaining) {
        if (remaining == 0) {
            std::uint32_t s = 0;
            for (unsigned i : chosen) s |= std::uint32_t{1} << i;
            if (hits(s)) minimal = s;
            return minimal.has_value();
        }
        for (std::size_t i = start; i + remaining <= candidates.size(); ++i) {
            chosen.push_back(candidates[i]);
            const bool found = search(i + 1, remaining - 1);
            chosen.pop_back();
            if (found) return true;
        }
        return false;
    };
    for (std::size_t size = 0; size <= candidates.size() && !minimal; ++size) search(0, size);
    return {mask_indices(canonical), mask_indices(minimal.value_or(canonical))};
}

namespace {

void check_chain_length(const Signature& sig, unsigned k) {
    if (k > sig.z()) {
        throw std::domain_error("chain length " + std::to_string(k) + " exceeds the " + std::to_string(sig.z()) +
                                " null generators of " + sig.to_string());
    }
}

} // namespace

std::vector<Ideal> descending_chain(const Signature& sig, unsigned k) {
    check_chain_length(sig, k);
    std::vector<Ideal> chain;
    Multivector product = Multivector::scalar(sig, 1);
    for (unsigned i = 0; i < k; ++i) {
        product = product * Multivector::generator(sig, sig.non_null() + i);
        chain.push_back(ideal_closure(sig, {product}));
        if (i > 0 && (!is_subset(chain[i], chain[i - 1]) || chain[i].dim() >= chain[i - 1].dim())) {
            throw InternalContradiction("descending chain is not strictly decreasing");
        }
    }
    return chain;
}

std::vector<Ideal> ascending_chain(const Signature& sig, unsigned k) {
    check_chain_length(sig, k);
    std::vector<Ideal> chain;
    std::vector<unsigned> nulls;
    for (unsigned i = 0; i < k; ++i) {
        nulls.push_back(sig.non_null() + i);
        chain.push_back(ideal_from_null_set(sig, nulls));
        if (i > 0 && (!is_subset(chain[i - 1], chain[i]) || chain[i].dim() <= chain[i - 1].dim())) {
            throw InternalContradiction("ascending chain is not strictly increasing");
        }
    }
    return chain;
}

std::vector<Multivector> finite_generating_witness(const Ideal& ideal) {
    require_closed(ideal, "finite_generating_witness");
    const Signature& sig = ideal.signature();
    if (!is_subset(ideal, nil_radical(sig))) {
        throw std::domain_error("finite_generating_witness expects an ideal inside the nil radical");
    }
    // Keep a basis vector only if the ones kept so far do not generate it,
    // then drop any kept vector that the others already generate.
    std::vector<Multivector> kept;
    Ideal generated(sig);
    for (const Multivector& v : ideal.basis()) {
        if (ideal_contains(generated, v)) continue;
        kept.push_back(v);
        generated = ideal_sum(generated, ideal_closure(sig, {v}));
    }
    for (std::size_t i = kept.size(); i-- > 0;) {
        std::vector<Multivector> rest = kept;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
        if (ideal_closure(sig, rest) == ideal) kept = std::move(rest);
    }
    if (ideal_closure(sig, kept) != ideal) {
        throw InternalContradiction("generating witness does not reproduce the ideal");
    }
    return kept;
}

} // namespace clifford
