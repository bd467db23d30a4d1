#include "clifford/text.hpp"

#include <cctype>
#include <charconv>

namespace clifford {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

unsigned parse_count(std::string_view s, std::string_view whole) {
    s = trim(s);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) {
        throw std::invalid_argument("malformed signature '" + std::string(whole) + "'");
    }
    return value;
}

} // namespace

ParsedSignature parse_signature(std::string_view text, unsigned cap) {
    const std::string_view body = trim(text);
    if (body.find(',') != std::string_view::npos) {
        std::vector<std::string_view> fields;
        std::size_t start = 0;
        for (std::size_t comma; (comma = body.find(',', start)) != std::string_view::npos; start = comma + 1) {
            fields.push_back(body.substr(start, comma - start));
        }
        fields.push_back(body.substr(start));
        if (fields.size() != 3) {
            throw std::invalid_argument("signature '" + std::string(text) + "' must have the form p,q,z");
        }
        return {Signature(parse_count(fields[0], text), parse_count(fields[1], text), parse_count(fields[2], text),
                          cap),
                {}};
    }

    std::vector<Role> roles;
    for (std::size_t i = 0; i < body.size(); ++i) {
        const char c = body[i];
        if (c == '+') {
            roles.push_back(Role::Plus);
        } else if (c == '-') {
            roles.push_back(Role::Minus);
        } else if (c == '0') {
            roles.push_back(Role::Null);
        } else if (body.substr(i, 3) == "\xE2\x88\x92") { // U+2212 minus sign
            roles.push_back(Role::Minus);
            i += 2;
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            throw std::invalid_argument("malformed signature '" + std::string(text) +
                                        "': expected p,q,z or a role string over +, -, 0");
        }
    }
    if (roles.empty()) throw std::invalid_argument("empty signature");
    unsigned counts[3] = {0, 0, 0};
    for (Role r : roles) ++counts[static_cast<int>(r)];
    ParsedSignature out{Signature(counts[0], counts[1], counts[2], cap), {}};
    unsigned next[3] = {0, counts[0], counts[0] + counts[1]};
    for (Role r : roles) out.relabel.push_back(next[static_cast<int>(r)]++);
    return out;
}

namespace {

class ExpressionParser {
public:
    ExpressionParser(const Signature& sig, std::string_view text) : sig_(sig), text_(text) {}

    Multivector parse() {
        Multivector value = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_space();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    Multivector expr() {
        Multivector value(sig_);
        bool negate = false;
        if (accept('-')) {
            negate = true;
        } else {
            accept('+');
        }
        Multivector first = term();
        value = negate ? -first : first;
        for (;;) {
            if (accept('+')) {
                value += term();
            } else if (accept('-')) {
                value -= term();
            } else {
                return value;
            }
        }
    }

    Multivector term() {
        bool numeric = false;
        Multivector value = factor(numeric);
        for (;;) {
            if (accept('*')) {
                value = value * factor(numeric);
            } else if (numeric && (peek() == 'e' || peek() == '(')) {
                value = value * factor(numeric);
            } else {
                return value;
            }
        }
    }

    Multivector factor(bool& numeric) {
        numeric = false;
        const char c = peek();
        if (c == '\0') fail("unexpected end of expression");
        if (c == '-') {
            ++pos_;
            return -factor(numeric);
        }
        if (c == '(') {
            ++pos_;
            Multivector inner = expr();
            if (!accept(')')) fail("expected ')'");
            return inner;
        }
        if (c == 'e') {
            const std::size_t at = pos_++;
            if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                fail("expected generator index after 'e'");
            }
            const std::string digits = integer();
            unsigned long index = 0;
            auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
            if (ec != std::errc() || index >= sig_.generators()) {
                throw ParseError("generator e" + digits + " out of range for " + sig_.to_string(), at);
            }
            return Multivector::generator(sig_, static_cast<unsigned>(index));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Rational value(integer());
            skip_space();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                skip_space();
                const std::size_t at = pos_;
                if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                    fail("expected denominator after '/'");
                }
                const mpz_class denominator(integer());
                if (denominator == 0) throw ParseError("zero denominator", at);
                value /= Rational(denominator);
            }
            numeric = true;
            return Multivector::scalar(sig_, value);
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    std::string integer() {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    const Signature& sig_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Multivector parse_expression(const Signature& sig, std::string_view text) {
    return ExpressionParser(sig, text).parse();
}

std::vector<Multivector> parse_expression_list(const Signature& sig, std::string_view text) {
    std::vector<Multivector> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t semi = text.find(';', start);
        const std::string_view piece = text.substr(start, semi == std::string_view::npos ? semi : semi - start);
        if (!trim(piece).empty()) out.push_back(parse_expression(sig, piece));
        if (semi == std::string_view::npos) return out;
        start = semi + 1;
    }
}

nlohmann::json signature_to_json(const Signature& sig) {
    return {{"p", sig.p()}, {"q", sig.q()}, {"z", sig.z()}};
}

Signature signature_from_json(const nlohmann::json& j) {
    return Signature(j.at("p").get<unsigned>(), j.at("q").get<unsigned>(), j.at("z").get<unsigned>());
}

nlohmann::json ideal_to_json(const Ideal& ideal) {
    nlohmann::json basis = nlohmann::json::array();
    for (const Multivector& v : ideal.basis()) basis.push_back(to_string(v));
    return {{"signature", signature_to_json(ideal.signature())}, {"basis", std::move(basis)}};
}

Ideal ideal_from_json(const nlohmann::json& j) {
    const Signature sig = signature_from_json(j.at("signature"));
    std::vector<Multivector> vectors;
    for (const auto& item : j.at("basis")) vectors.push_back(parse_expression(sig, item.get<std::string>()));
    Ideal ideal = Ideal::from_span(sig, vectors);
    if (!ideal.is_closed()) throw std::invalid_argument("serialized basis does not span a two-sided ideal");
    return ideal;
}

} // namespace clifford
