#include "doctest.h"

#include <random>

#include "clifford/linear.hpp"

using namespace clifford;

TEST_CASE("echelon basis keeps reduced form") {
    EchelonBasis basis;
    CHECK(basis.insert({{1, 2}, {3, 4}}));
    CHECK(basis.insert({{0, 1}, {1, 1}}));
    CHECK_FALSE(basis.insert({{0, 2}, {1, 4}, {3, 4}}));
    CHECK(basis.rank() == 2);
    const auto rows = basis.rows();
    // Row for pivot 0 must have no entry in column 1.
    CHECK(rows[0] == SparseVector{{0, 1}, {3, -2}});
    CHECK(rows[1] == SparseVector{{1, 1}, {3, 2}});
    CHECK(basis.contains(SparseVector{{1, Rational(5, 2)}, {3, 5}}));
    CHECK_FALSE(basis.contains({{3, 1}}));
    CHECK(basis.reduce({{3, 1}}) == SparseVector{{3, 1}});
}

TEST_CASE("echelon form is independent of insertion order") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<SparseVector> vectors;
        for (int i = 0; i < 6; ++i) {
            SparseVector v;
            for (std::uint32_t k = 0; k < 8; ++k) {
                if (rng() % 3 == 0) v.push_back({k, Rational(static_cast<long>(rng() % 7) - 3)});
            }
            std::erase_if(v, [](const Entry& e) { return sgn(e.value) == 0; });
            vectors.push_back(v);
        }
        EchelonBasis forward, backward;
        for (const auto& v : vectors) forward.insert(v);
        for (auto it = vectors.rbegin(); it != vectors.rend(); ++it) backward.insert(*it);
        REQUIRE(forward == backward);
        for (const auto& v : vectors) REQUIRE(forward.contains(v));
    }
}
