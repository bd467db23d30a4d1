#pragma once

#include <cstdint>
#include <string>

namespace clifford {

/// Number of generators a signature may carry unless the caller asks otherwise.
/// Keeps the algebra dimension 2^n addressable by a dense index.
inline constexpr unsigned kDefaultMaxGenerators = 16;

/// Hard ceiling imposed by the 32-bit blade mask.
inline constexpr unsigned kMaskBits = 32;

enum class Role : std::uint8_t { Plus, Minus, Null };

/// Generator roles of C(p,q,z) in canonical labeling: indices [0,p) square
/// to +1, [p,p+q) to -1 and [p+q,p+q+z) to 0.
class Signature {
public:
    Signature() = default;
    Signature(unsigned p, unsigned q, unsigned z, unsigned cap = kDefaultMaxGenerators);

    unsigned p() const noexcept { return p_; }
    unsigned q() const noexcept { return q_; }
    unsigned z() const noexcept { return z_; }
    unsigned generators() const noexcept { return p_ + q_ + z_; }
    unsigned non_null() const noexcept { return p_ + q_; }

    /// 2^(p+q+z).
    std::uint64_t dimension() const noexcept { return std::uint64_t{1} << generators(); }

    Role role(unsigned index) const;

    std::uint32_t plus_mask() const noexcept { return (std::uint32_t{1} << p_) - 1; }
    std::uint32_t minus_mask() const noexcept { return ((std::uint32_t{1} << q_) - 1) << p_; }
    /// Mask with one bit per Plus/Minus generator.
    std::uint32_t non_null_mask() const noexcept { return (std::uint32_t{1} << non_null()) - 1; }
    /// Mask with one bit per Null generator.
    std::uint32_t null_mask() const noexcept { return ((std::uint32_t{1} << z_) - 1) << non_null(); }
    std::uint32_t full_mask() const noexcept { return non_null_mask() | null_mask(); }

    std::string to_string() const;

    friend bool operator==(const Signature&, const Signature&) = default;

private:
    unsigned p_ = 0;
    unsigned q_ = 0;
    unsigned z_ = 0;
};

} // namespace clifford
