#include "clifford/linear.hpp"

#include <algorithm>

namespace clifford {

SparseVector to_sparse(const Multivector& u) {
    SparseVector v;
    v.reserve(u.size());
    for (const Term& t : u.terms()) v.push_back({t.blade.mask, t.coef});
    return v;
}

Multivector from_sparse(const Signature& sig, const SparseVector& v) {
    std::vector<Term> terms;
    terms.reserve(v.size());
    for (const Entry& e : v) terms.push_back({BasisBlade{e.key}, e.value});
    return Multivector(sig, std::move(terms));
}

namespace {

const Rational* find_entry(const SparseVector& v, std::uint32_t key) {
    auto it = std::lower_bound(v.begin(), v.end(), key, [](const Entry& e, std::uint32_t k) { return e.key < k; });
    return (it != v.end() && it->key == key) ? &it->value : nullptr;
}

// a - c*b, both sorted.
SparseVector axpy(const SparseVector& a, const Rational& c, const SparseVector& b) {
    SparseVector out;
    out.reserve(a.size() + b.size());
    auto i = a.begin();
    auto j = b.begin();
    while (i != a.end() || j != b.end()) {
        if (j == b.end() || (i != a.end() && i->key < j->key)) {
            out.push_back(*i++);
        } else if (i == a.end() || j->key < i->key) {
            out.push_back({j->key, -c * j->value});
            ++j;
        } else {
            Rational value = i->value - c * j->value;
            if (sgn(value) != 0) out.push_back({i->key, std::move(value)});
            ++i;
            ++j;
        }
    }
    return out;
}

} // namespace

SparseVector EchelonBasis::reduce(const SparseVector& v) const {
    if (rows_.empty() || v.empty()) return v;
    // Subtracting a reduced row only touches its pivot and non-pivot
    // columns, so one ascending sweep over v's pivot columns suffices.
    SparseVector acc = v;
    std::size_t pos = 0;
    while (pos < acc.size()) {
        auto row = rows_.find(acc[pos].key);
        if (row == rows_.end()) {
            ++pos;
            continue;
        }
        const std::uint32_t key = acc[pos].key;
        const Rational c = acc[pos].value;
        acc = axpy(acc, c, row->second);
        pos = static_cast<std::size_t>(
            std::upper_bound(acc.begin(), acc.end(), key, [](std::uint32_t k, const Entry& e) { return k < e.key; }) -
            acc.begin());
    }
    return acc;
}

bool EchelonBasis::insert(const SparseVector& v) {
    SparseVector r = reduce(v);
    if (r.empty()) return false;
    const Rational lead = r.front().value;
    if (lead != 1) {
        for (Entry& e : r) e.value /= lead;
    }
    const std::uint32_t pivot = r.front().key;
    for (auto& [key, row] : rows_) {
        if (key > pivot) break;
        if (const Rational* c = find_entry(row, pivot)) {
            row = axpy(row, Rational(*c), r);
        }
    }
    rows_.emplace(pivot, std::move(r));
    return true;
}

std::vector<SparseVector> EchelonBasis::rows() const {
    std::vector<SparseVector> out;
    out.reserve(rows_.size());
    for (const auto& [key, row] : rows_) out.push_back(row);
    return out;
}

} // namespace clifford
