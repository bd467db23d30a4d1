#include "clifford/multivector.hpp"

#include <algorithm>
#include <stdexcept>

namespace clifford {

namespace {

// Sorts by blade, merges duplicates and drops zeros.
void normalize(std::vector<Term>& terms) {
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return a.blade < b.blade; });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i + 1;
        Rational sum = std::move(terms[i].coef);
        while (j < terms.size() && terms[j].blade == terms[i].blade) {
            sum += terms[j].coef;
            ++j;
        }
        if (sgn(sum) != 0) {
            terms[out].blade = terms[i].blade;
            terms[out].coef = std::move(sum);
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

} // namespace

Multivector::Multivector(Signature sig, std::vector<Term> terms) : sig_(sig), terms_(std::move(terms)) {
    for (const Term& t : terms_) check_blade(sig_, t.blade);
    normalize(terms_);
}

Multivector Multivector::scalar(Signature sig, const Rational& value) {
    return blade(sig, BasisBlade::unit(), value);
}

Multivector Multivector::blade(Signature sig, BasisBlade blade, const Rational& coef) {
    check_blade(sig, blade);
    Multivector out(sig);
    if (sgn(coef) != 0) out.terms_.push_back({blade, coef});
    return out;
}

Multivector Multivector::generator(Signature sig, unsigned index) {
    sig.role(index);
    return blade(sig, BasisBlade::generator(index));
}

Rational Multivector::coefficient(BasisBlade blade) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), blade,
                               [](const Term& t, BasisBlade b) { return t.blade < b; });
    if (it != terms_.end() && it->blade == blade) return it->coef;
    return 0;
}

void Multivector::check_same(const Multivector& other) const {
    if (sig_ != other.sig_) {
        throw std::invalid_argument("signature mismatch: " + sig_.to_string() + " vs " + other.sig_.to_string());
    }
}

Multivector Multivector::operator-() const {
    Multivector out = *this;
    for (Term& t : out.terms_) t.coef = -t.coef;
    return out;
}

Multivector& Multivector::operator+=(const Multivector& other) {
    check_same(other);
    std::vector<Term> merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->blade < b->blade)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->blade < a->blade) {
            merged.push_back(*b++);
        } else {
            Rational sum = a->coef + b->coef;
            if (sgn(sum) != 0) merged.push_back({a->blade, std::move(sum)});
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

Multivector& Multivector::operator-=(const Multivector& other) { return *this += -other; }

Multivector& Multivector::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        terms_.clear();
        return *this;
    }
    for (Term& t : terms_) t.coef *= s;
    return *this;
}

Multivector operator*(const Multivector& a, const Multivector& b) {
    a.check_same(b);
    std::vector<Term> products;
    products.reserve(a.terms_.size() * b.terms_.size());
    for (const Term& x : a.terms_) {
        for (const Term& y : b.terms_) {
            const BladeProduct p = blade_mul(a.sig_, x.blade, y.blade);
            if (p.sign == 0) continue;
            Rational c = x.coef * y.coef;
            if (p.sign < 0) c = -c;
            products.push_back({p.blade, std::move(c)});
        }
    }
    Multivector out(a.sig_);
    normalize(products);
    out.terms_ = std::move(products);
    return out;
}

RadicalSplit radical_split(const Multivector& u) {
    const std::uint32_t nulls = u.signature().null_mask();
    std::vector<Term> body, rad;
    for (const Term& t : u.terms()) {
        ((t.blade.mask & nulls) == 0 ? body : rad).push_back(t);
    }
    return {Multivector(u.signature(), std::move(body)), Multivector(u.signature(), std::move(rad))};
}

std::uint32_t null_support_mask(const Multivector& u) {
    std::uint32_t mask = 0;
    for (const Term& t : u.terms()) mask |= t.blade.mask;
    return mask & u.signature().null_mask();
}

std::vector<unsigned> null_support(const Multivector& u) { return mask_indices(null_support_mask(u)); }

Multivector radical_grade_component(const Multivector& u, unsigned grade) {
    if (grade == 0) {
        throw std::domain_error("radical grading starts at 1; use radical_split for the body");
    }
    const std::uint32_t nulls = u.signature().null_mask();
    std::vector<Term> kept;
    for (const Term& t : u.terms()) {
        if (static_cast<unsigned>(std::popcount(t.blade.mask & nulls)) == grade) kept.push_back(t);
    }
    return Multivector(u.signature(), std::move(kept));
}

Multivector power(const Multivector& u, std::uint64_t n) {
    Multivector result = Multivector::scalar(u.signature(), 1);
    Multivector base = u;
    while (n != 0) {
        if (n & 1U) result = result * base;
        n >>= 1;
        if (n != 0) base = base * base;
    }
    return result;
}

std::optional<std::uint64_t> element_nilpotency_index(const Multivector& u) {
    if (u.is_zero()) return 1;
    // Nilpotent iff u^dim = 0; decide that first by squaring so non-nilpotent
    // elements cost O(log dim) products.
    const std::uint64_t dim = u.signature().dimension();
    if (!power(u, dim).is_zero()) return std::nullopt;
    Multivector acc = u;
    for (std::uint64_t n = 2; n <= dim; ++n) {
        acc = acc * u;
        if (acc.is_zero()) return n;
    }
    return dim;
}

Multivector invert_unipotent(const Multivector& u) {
    const Signature& sig = u.signature();
    auto [body, rad] = radical_split(u);
    if (body != Multivector::scalar(sig, 1)) {
        throw std::domain_error("invert_unipotent expects 1 + x with x in the radical, got " + to_string(u));
    }
    // x^(z+1) = 0 for x in the radical.
    Multivector inverse = Multivector::scalar(sig, 1);
    Multivector term = Multivector::scalar(sig, 1);
    const Multivector neg_rad = -rad;
    for (unsigned k = 1; k <= sig.z(); ++k) {
        term = term * neg_rad;
        if (term.is_zero()) break;
        inverse += term;
    }
    return inverse;
}

std::string to_string(const Multivector& u) {
    if (u.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const Term& t : u.terms()) {
        Rational magnitude = abs(t.coef);
        if (first) {
            if (sgn(t.coef) < 0) out += '-';
        } else {
            out += sgn(t.coef) < 0 ? " - " : " + ";
        }
        first = false;
        if (t.blade.mask == 0) {
            out += to_string(magnitude);
        } else if (magnitude == 1) {
            out += to_string(t.blade);
        } else {
            out += to_string(magnitude) + "*" + to_string(t.blade);
        }
    }
    return out;
}

} // namespace clifford
