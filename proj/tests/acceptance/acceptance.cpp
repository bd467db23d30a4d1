// Acceptance gate: one line per criterion, exact arithmetic throughout.
// Exit status is nonzero if any criterion fails or exceeds its time budget.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "clifford/cli.hpp"
#include "clifford/ideal.hpp"
#include "clifford/structure.hpp"
#include "clifford/text.hpp"
#include "generators.hpp"
#include "golden_cases.hpp"
#include "oracle.hpp"

using namespace clifford;

namespace {

struct Failure {
    std::string message;
};

void expect(bool condition, const std::string& message) {
    if (!condition) throw Failure{message};
}

std::string sig_name(const Signature& sig) { return sig.to_string(); }

/// Closures computed by criteria 2-4, re-derived by the oracle in criterion 8.
struct RecordedClosure {
    Signature sig;
    std::vector<Multivector> gens;
    Ideal ideal;
};

struct Ledger {
    std::vector<RecordedClosure> closures;
    /// Ideals inside the radical, checked against null supports in criterion 7.
    std::vector<Ideal> radical_ideals;
    /// (sig, S, computed index) from criterion 7, re-derived in criterion 8.
    std::vector<std::tuple<Ideal, unsigned>> nilpotency;

    Ideal closure(const Signature& sig, const std::vector<Multivector>& gens) {
        Ideal ideal = ideal_closure(sig, gens);
        closures.push_back({sig, gens, ideal});
        return ideal;
    }
};

std::vector<Multivector> null_generators(const Signature& sig) {
    std::vector<Multivector> gens;
    for (unsigned i = sig.non_null(); i < sig.generators(); ++i) gens.push_back(Multivector::generator(sig, i));
    return gens;
}

// 1. Generator relations and blade associativity.
void generator_relations(Ledger&) {
    for (const Signature& sig : testing::signatures_up_to(8)) {
        const unsigned n = sig.generators();
        for (unsigned i = 0; i < n; ++i) {
            const auto sq = blade_mul(sig, BasisBlade::generator(i), BasisBlade::generator(i));
            const int expected = i < sig.p() ? 1 : (i < sig.non_null() ? -1 : 0);
            expect(sq.sign == expected && sq.blade == BasisBlade::unit(), "square of e" + std::to_string(i) + " in " + sig_name(sig));
            for (unsigned j = 0; j < n; ++j) {
                if (i == j) continue;
                const auto ij = blade_mul(sig, BasisBlade::generator(i), BasisBlade::generator(j));
                const auto ji = blade_mul(sig, BasisBlade::generator(j), BasisBlade::generator(i));
                expect(ij.blade == ji.blade && ij.sign == -ji.sign && ij.sign != 0,
                       "anticommutation e" + std::to_string(i) + " e" + std::to_string(j) + " in " + sig_name(sig));
            }
        }
    }
    for (const Signature& sig : testing::signatures_up_to(5)) {
        const std::uint32_t top = sig.full_mask();
        for (std::uint32_t a = 0; a <= top; ++a) {
            for (std::uint32_t b = 0; b <= top; ++b) {
                const auto ab = blade_mul(sig, {a}, {b});
                for (std::uint32_t c = 0; c <= top; ++c) {
                    const auto bc = blade_mul(sig, {b}, {c});
                    const auto left = blade_mul(sig, ab.blade, {c});
                    const auto right = blade_mul(sig, {a}, bc.blade);
                    const int l = ab.sign * left.sign;
                    const int r = bc.sign * right.sign;
                    expect(l == r && (l == 0 || left.blade == right.blade), "blade associativity in " + sig_name(sig));
                }
            }
        }
    }
}

// 2. The ideal generated by the null generators is the K-nonempty blade span.
void nil_radical_generation(Ledger& ledger) {
    for (const Signature& sig : testing::signatures_up_to(8, true)) {
        const Ideal generated = ledger.closure(sig, null_generators(sig));
        std::vector<Multivector> blades;
        for (std::uint32_t m = 0; m <= sig.full_mask(); ++m) {
            if (m & sig.null_mask()) blades.push_back(Multivector::blade(sig, {m}));
        }
        const Ideal span = Ideal::from_span(sig, blades);
        const std::uint64_t expected = (std::uint64_t{1} << sig.non_null()) * ((std::uint64_t{1} << sig.z()) - 1);
        expect(generated == span, "closure of null generators differs from blade span in " + sig_name(sig));
        expect(generated.dim() == expected, "radical dimension in " + sig_name(sig));
        expect(nil_radical(sig) == generated, "nil_radical disagrees in " + sig_name(sig));
        ledger.radical_ideals.push_back(generated);
    }
}

std::vector<Signature> classification_signatures() {
    return {Signature(1, 1, 1), Signature(2, 0, 1), Signature(0, 0, 3), Signature(2, 2, 2), Signature(0, 1, 4),
            Signature(1, 0, 1), Signature(2, 1, 1), Signature(0, 3, 1), Signature(3, 2, 1), Signature(1, 0, 5),
            Signature(1, 4, 1), Signature(0, 3, 3)};
}

Multivector random_generator(const Signature& sig, std::mt19937_64& rng) {
    const Multivector one = Multivector::scalar(sig, 1);
    switch (rng() % 4) {
    case 0: return testing::random_multivector(sig, rng, 4);
    case 1: return testing::random_radical(sig, rng, 4);
    case 2:
        if (is_split(sig)) {
            const auto e = central_idempotents(sig);
            return (rng() % 2 ? e.first : e.second) * testing::random_body(sig, rng, 3) + testing::random_radical(sig, rng, 3);
        }
        return testing::random_body(sig, rng, 3) * testing::random_radical(sig, rng, 3);
    default: return testing::random_radical(sig, rng, 2) * testing::random_multivector(sig, rng, 3);
    }
}

void check_verdict(const Signature& sig, const Ideal& ideal, const Ideal& rad) {
    const ClassificationReport report = ideal_classify(ideal);
    const std::string where = " in " + sig_name(sig);
    expect(report.dim == ideal.dim(), "reported dim" + where);
    expect(report.radical_intersection == ideal_intersect(ideal, rad), "I n R" + where);
    switch (report.verdict) {
    case Verdict::Zero: expect(ideal.is_zero(), "Zero verdict on nonzero ideal" + where); break;
    case Verdict::WholeAlgebra: expect(ideal.is_whole(), "WholeAlgebra verdict on proper ideal" + where); break;
    case Verdict::ContainedInRadical: expect(is_subset(ideal, rad), "ContainedInRadical but I not in R" + where); break;
    case Verdict::C1PlusRadicalPart:
    case Verdict::C2PlusRadicalPart: {
        expect(is_split(sig), "component verdict for Simple C(p,q)" + where);
        const int which = report.verdict == Verdict::C1PlusRadicalPart ? 1 : 2;
        for (const Multivector& v : component_basis(sig, which)) expect(ideal_contains(ideal, v), "C_i not inside I" + where);
        expect(report.dim == (std::uint64_t{1} << sig.non_null()) / 2 + report.radical_dim, "dimension identity" + where);
        break;
    }
    }
    if (!is_split(sig)) {
        expect(report.verdict != Verdict::C1PlusRadicalPart && report.verdict != Verdict::C2PlusRadicalPart,
               "Simple signature produced a component verdict" + where);
    }
}

// 3. Classification of principal ideals.
void ideal_classification(Ledger& ledger) {
    std::mt19937_64 rng(31);
    for (const Signature& sig : classification_signatures()) {
        const Ideal rad = nil_radical(sig);
        for (std::uint32_t m = 0; m <= sig.full_mask(); ++m) {
            const Ideal ideal = ledger.closure(sig, {Multivector::blade(sig, {m})});
            check_verdict(sig, ideal, rad);
            if (is_subset(ideal, rad)) ledger.radical_ideals.push_back(ideal);
        }
        for (int trial = 0; trial < 200; ++trial) {
            const Ideal ideal = ledger.closure(sig, {random_generator(sig, rng)});
            check_verdict(sig, ideal, rad);
            if (is_subset(ideal, rad)) ledger.radical_ideals.push_back(ideal);
        }
    }
}

bool primality_probe(const Ideal& prime, const std::vector<Ideal>& family) {
    for (const Ideal& a : family) {
        for (const Ideal& b : family) {
            if (is_subset(ideal_product(a, b), prime) && !is_subset(a, prime) && !is_subset(b, prime)) return false;
        }
    }
    return true;
}

// 4. Prime ideals are maximal and prime; R is not prime when C(p,q) splits.
void prime_and_maximal(Ledger& ledger) {
    for (const Signature& sig : testing::signatures_up_to(5)) {
        const std::string where = " in " + sig_name(sig);
        const Ideal rad = ledger.closure(sig, null_generators(sig));
        ledger.radical_ideals.push_back(rad);
        const std::vector<Ideal> primes = prime_ideals(sig);
        expect(primes.size() == (is_split(sig) ? 2U : 1U), "number of primes" + where);
        const Ideal whole = Ideal::whole(sig);

        std::vector<Multivector> probes;
        for (std::uint32_t m = 0; m <= sig.full_mask(); ++m) probes.push_back(Multivector::blade(sig, {m}));
        if (is_split(sig)) {
            const auto e = central_idempotents(sig);
            probes.push_back(e.first);
            probes.push_back(e.second);
        }
        // Principal ideals of the probes, without duplicates.
        std::vector<Ideal> family;
        for (const Multivector& x : probes) {
            Ideal ideal = ledger.closure(sig, {x});
            if (std::find(family.begin(), family.end(), ideal) == family.end()) family.push_back(std::move(ideal));
        }

        for (const Ideal& prime : primes) {
            expect(!prime.is_whole(), "prime equals the whole algebra" + where);
            expect(is_subset(rad, prime), "prime misses the radical" + where);
            for (std::uint32_t m = 0; m <= sig.full_mask(); ++m) {
                const Multivector b = Multivector::blade(sig, {m});
                if (ideal_contains(prime, b)) continue;
                std::vector<Multivector> gens = prime.basis();
                gens.push_back(b);
                expect(ledger.closure(sig, gens) == whole, "prime is not maximal" + where);
            }
            expect(primality_probe(prime, family), "principal primality probe failed" + where);
        }
        // Every proper ideal R + (x) lies in one of the listed primes.
        for (const Multivector& x : probes) {
            std::vector<Multivector> gens = null_generators(sig);
            gens.push_back(x);
            const Ideal candidate = ledger.closure(sig, gens);
            if (candidate.is_whole()) continue;
            const bool covered = std::any_of(primes.begin(), primes.end(),
                                             [&](const Ideal& p) { return is_subset(candidate, p); });
            expect(covered, "a proper ideal escapes every listed prime" + where);
        }
        if (is_split(sig)) {
            expect(!primality_probe(rad, family), "radical passed the primality probe" + where);
            const auto e = central_idempotents(sig);
            const Ideal c1 = ledger.closure(sig, {e.first});
            const Ideal c2 = ledger.closure(sig, {e.second});
            expect(is_subset(ideal_product(c1, c2), rad) && !is_subset(c1, rad) && !is_subset(c2, rad),
                   "C1 C2 witness" + where);
        } else {
            expect(primes.front() == rad, "Simple prime differs from the radical" + where);
        }
    }
}

// 5. 1 + x is invertible for x in the radical.
void quasi_regularity(Ledger&) {
    std::mt19937_64 rng(5);
    for (const Signature& sig : testing::signatures_up_to(6, true)) {
        const Multivector one = Multivector::scalar(sig, 1);
        const Ideal jac = jacobson_radical(sig);
        for (int trial = 0; trial < 500; ++trial) {
            const Multivector x = testing::random_radical(sig, rng, 6);
            expect(ideal_contains(jac, x), "sample outside the radical");
            const Multivector u = one + x;
            const Multivector v = invert_unipotent(u);
            expect(u * v == one && v * u == one, "1 + x not inverted in " + sig_name(sig));
        }
    }
}

// 6. Strict chains for z = 1..6.
void strict_chains(Ledger&) {
    for (unsigned z = 1; z <= 6; ++z) {
        for (unsigned p = 0; p <= 2; ++p) {
            for (unsigned q = 0; p + q <= 2; ++q) {
                const Signature sig(p, q, z);
                const std::string where = " in " + sig_name(sig);
                const auto down = descending_chain(sig, z);
                const auto up = ascending_chain(sig, z);
                expect(down.size() == z && up.size() == z, "chain length" + where);
                for (unsigned i = 1; i < z; ++i) {
                    expect(is_subset(down[i], down[i - 1]) && !is_subset(down[i - 1], down[i]), "descending strictness" + where);
                    expect(down[i].dim() < down[i - 1].dim(), "descending dims" + where);
                    expect(is_subset(up[i - 1], up[i]) && !is_subset(up[i], up[i - 1]), "ascending strictness" + where);
                    expect(up[i].dim() > up[i - 1].dim(), "ascending dims" + where);
                }
                expect(up.back() == nil_radical(sig), "ascending chain ends at R" + where);
            }
        }
    }
}

// 7. Finite null supports, I_S nilpotency and finite generating sets.
void nilpotent_ideals(Ledger& ledger) {
    for (const Ideal& ideal : ledger.radical_ideals) {
        const Signature& sig = ideal.signature();
        const std::string where = " in " + sig_name(sig);
        const NullSupportSets sets = null_support_of_ideal(ideal);
        expect(is_subset(ideal, ideal_from_null_set(sig, sets.canonical)), "I not in I_canonical" + where);
        expect(is_subset(ideal, ideal_from_null_set(sig, sets.minimal)), "I not in I_minimal" + where);
        expect(sets.minimal.size() <= sets.canonical.size(), "minimal support larger than canonical" + where);
        const auto witness = finite_generating_witness(ideal);
        expect(ideal_closure(sig, witness) == ideal, "witness does not regenerate I" + where);
    }
    for (unsigned z = 1; z <= 4; ++z) {
        for (unsigned p = 0; p <= 2; ++p) {
            for (unsigned q = 0; p + q <= 2; ++q) {
                const Signature sig(p, q, z);
                for (std::uint32_t s = 0; s < (std::uint32_t{1} << z); ++s) {
                    std::vector<unsigned> nulls;
                    for (unsigned i = 0; i < z; ++i) {
                        if (s & (1U << i)) nulls.push_back(sig.non_null() + i);
                    }
                    const Ideal is = ideal_from_null_set(sig, nulls);
                    const auto index = ideal_nilpotency_index(is);
                    expect(index == nulls.size() + 1, "index of I_S != |S| + 1 in " + sig_name(sig));
                    ledger.nilpotency.emplace_back(is, *index);
                }
            }
        }
    }
}

// 8. Oracle agreement.
void oracle_agreement(Ledger& ledger) {
    for (const Signature& sig : testing::signatures_up_to(8)) {
        const std::uint32_t top = sig.full_mask();
        for (std::uint32_t a = 0; a <= top; ++a) {
            for (std::uint32_t b = 0; b <= top; ++b) {
                const auto fast = blade_mul(sig, {a}, {b});
                const auto slow = oracle::oracle_blade_mul(sig, a, b);
                expect(fast.sign == slow.coefficient && (fast.sign == 0 || fast.blade.mask == slow.blade),
                       "blade product disagrees with the oracle in " + sig_name(sig));
            }
        }
    }
    for (const RecordedClosure& c : ledger.closures) {
        expect(c.ideal.basis() == oracle::oracle_closure_fixpoint(c.sig, c.gens),
               "closure disagrees with the fixpoint oracle in " + sig_name(c.sig));
    }
    for (const auto& [ideal, index] : ledger.nilpotency) {
        expect(oracle::oracle_nilpotency(ideal.signature(), ideal.basis()) == index,
               "nilpotency index disagrees with the oracle in " + sig_name(ideal.signature()));
    }
}

// 9. CLI golden files and expression round trip.
void cli_surface(Ledger&) {
    for (const testing::GoldenCase& c : testing::golden_cases()) {
        const cli::Outcome text = cli::run(c.args);
        expect(text.exit_code == 0, std::string("CLI failed for ") + c.name + ": " + text.err);
        expect(text.out == testing::read_golden(std::string(c.name) + ".txt"), std::string("text golden ") + c.name);
        std::vector<std::string> args = c.args;
        args.insert(args.begin(), "--json");
        const cli::Outcome machine = cli::run(args);
        expect(machine.exit_code == 0, std::string("CLI --json failed for ") + c.name);
        expect(testing::stable_json(machine.out) == testing::read_golden(std::string(c.name) + ".json"),
               std::string("json golden ") + c.name);
        const auto report = cli::report_from_json(nlohmann::json::parse(machine.out));
        expect(cli::to_json(report) == nlohmann::json::parse(machine.out), std::string("report round trip ") + c.name);
    }
    std::mt19937_64 rng(9);
    const std::vector<Signature> sigs = testing::signatures_up_to(6);
    for (int trial = 0; trial < 10000; ++trial) {
        const Signature& sig = sigs[rng() % sigs.size()];
        const Multivector u = testing::random_multivector(sig, rng, 8);
        expect(parse_expression(sig, to_string(u)) == u, "round trip failed for " + to_string(u));
    }
}

struct Criterion {
    int id;
    const char* title;
    double budget_seconds;
    std::function<void(Ledger&)> run;
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {1, "generator relations and blade associativity", 30, generator_relations},
        {2, "null generators generate the nil radical", 60, nil_radical_generation},
        {3, "ideal classification of principal ideals", 120, ideal_classification},
        {4, "prime ideals are maximal, radical not prime when split", 120, prime_and_maximal},
        {5, "1 + x invertible for radical x", 30, quasi_regularity},
        {6, "strict descending and ascending chains", 30, strict_chains},
        {7, "null supports, I_S nilpotency, generating witnesses", 120, nilpotent_ideals},
        {8, "oracle agreement", 600, oracle_agreement},
        {9, "CLI golden files and expression round trip", 60, cli_surface},
    };
    Ledger ledger;
    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = true;
        try {
            c.run(ledger);
        } catch (const Failure& f) {
            ok = false;
            detail = f.message;
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (ok && seconds > c.budget_seconds) {
            ok = false;
            std::ostringstream os;
            os << "over time budget of " << c.budget_seconds << " s";
            detail = os.str();
        }
        failures += ok ? 0 : 1;
        std::printf("[%s] %d. %s (%.2f s)%s%s\n", ok ? "PASS" : "FAIL", c.id, c.title, seconds, detail.empty() ? "" : ": ",
                    detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
