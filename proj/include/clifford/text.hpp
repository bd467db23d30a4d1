#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "clifford/ideal.hpp"
#include "clifford/multivector.hpp"
#include "clifford/signature.hpp"

namespace clifford {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t position)
        : std::invalid_argument(what + " at position " + std::to_string(position)), position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

struct ParsedSignature {
    Signature sig;
    /// For role-string input: canonical index of each input generator.
    /// Empty for `p,q,z` input.
    std::vector<unsigned> relabel;
};

/// Accepts `p,q,z` or a role string over {+, -, 0} such as `++-0`.
ParsedSignature parse_signature(std::string_view text, unsigned cap = kDefaultMaxGenerators);

/// Grammar (whitespace-insensitive):
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*     a rational may also be followed
///                                      directly by a generator or '('
///   factor := '-' factor | rational | 'e'INT | '(' expr ')'
///   rational := INT ['/' POSINT]
/// Products are evaluated in the algebra, so `e1*e0` normalizes to `-e0*e1`.
Multivector parse_expression(const Signature& sig, std::string_view text);

/// `expr;expr;...` with empty entries skipped.
std::vector<Multivector> parse_expression_list(const Signature& sig, std::string_view text);

nlohmann::json signature_to_json(const Signature& sig);
Signature signature_from_json(const nlohmann::json& j);

/// {"signature": {...}, "basis": [canonical strings in pivot order]}.
nlohmann::json ideal_to_json(const Ideal& ideal);
/// Inverse of ideal_to_json; throws std::invalid_argument if the listed
/// basis does not span a two-sided ideal.
Ideal ideal_from_json(const nlohmann::json& j);

} // namespace clifford
