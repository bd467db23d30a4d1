#include "clifford/signature.hpp"

#include <stdexcept>

namespace clifford {

Signature::Signature(unsigned p, unsigned q, unsigned z, unsigned cap) : p_(p), q_(q), z_(z) {
    if (cap > kMaskBits - 1) {
        throw std::invalid_argument("generator cap exceeds the blade mask width");
    }
    if (p + q + z > cap) {
        throw std::invalid_argument("signature " + to_string() + " exceeds the generator cap of " +
                                    std::to_string(cap));
    }
}

Role Signature::role(unsigned index) const {
    if (index < p_) return Role::Plus;
    if (index < p_ + q_) return Role::Minus;
    if (index < p_ + q_ + z_) return Role::Null;
    throw std::out_of_range("generator index " + std::to_string(index) + " out of range for " +
                            to_string());
}

std::string Signature::to_string() const {
    return "(" + std::to_string(p_) + "," + std::to_string(q_) + "," + std::to_string(z_) + ")";
}

} // namespace clifford
