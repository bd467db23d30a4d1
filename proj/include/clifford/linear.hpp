#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "clifford/multivector.hpp"
#include "clifford/rational.hpp"

namespace clifford {

struct Entry {
    std::uint32_t key;
    Rational value;

    friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sorted by key, no zero values.
using SparseVector = std::vector<Entry>;

SparseVector to_sparse(const Multivector& u);
Multivector from_sparse(const Signature& sig, const SparseVector& v);

/// Reduced row-echelon basis of a subspace over exact rationals. Pivots are
/// the smallest key of each row, rows are scaled so the pivot is 1, and no
/// row has a nonzero entry in another row's pivot column.
class EchelonBasis {
public:
    /// Residual of v after eliminating every pivot column.
    SparseVector reduce(const SparseVector& v) const;
    bool contains(const SparseVector& v) const { return reduce(v).empty(); }
    /// Adds v to the span; returns false when v was already in it.
    bool insert(const SparseVector& v);

    std::size_t rank() const noexcept { return rows_.size(); }
    bool empty() const noexcept { return rows_.empty(); }
    /// Rows in ascending pivot order.
    std::vector<SparseVector> rows() const;
    const std::map<std::uint32_t, SparseVector>& by_pivot() const noexcept { return rows_; }

    friend bool operator==(const EchelonBasis&, const EchelonBasis&) = default;

private:
    std::map<std::uint32_t, SparseVector> rows_;
};

} // namespace clifford
