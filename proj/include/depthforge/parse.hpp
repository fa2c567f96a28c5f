#pragma once

// Text form of a monomial ideal:
//
//   vars x, y, z ; x^2, x*y, y*z^3
//
// The term list may be `0` (zero ideal) or `1` (unit ideal). Whitespace,
// including newlines, is insignificant.

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "depthforge/monomial.hpp"

namespace depthforge {

struct ParsedIdeal {
    RingContext context;
    MonomialIdeal ideal;
};

namespace detail {

class IdealParser {
public:
    explicit IdealParser(std::string_view text) : text_(text) {}

    ParsedIdeal parse() {
        skip_space();
        expect_keyword("vars");
        std::vector<std::string> names;
        std::unordered_map<std::string, std::size_t> index;
        skip_space();
        if (peek() != ';') {
            while (true) {
                skip_space();
                const auto [line, col] = position();
                auto name = identifier();
                if (!index.emplace(name, names.size()).second)
                    throw ParseError("duplicate variable declaration '" + name + "'", line, col);
                names.push_back(std::move(name));
                skip_space();
                if (peek() != ',') break;
                advance();
            }
        }
        skip_space();
        expect(';');
        const std::size_t n = names.size();

        std::vector<Monomial> gens;
        skip_space();
        if (peek() == '0' || peek() == '1') {
            const char c = advance();
            if (c == '1') gens.emplace_back(n);
        } else {
            while (true) {
                gens.push_back(term(index, n));
                skip_space();
                if (peek() != ',') break;
                advance();
            }
        }
        skip_space();
        if (!at_end()) fail("unexpected character '" + std::string(1, peek()) + "'");
        return ParsedIdeal{RingContext(std::move(names)), MonomialIdeal::generated_by(n, std::move(gens))};
    }

private:
    Monomial term(const std::unordered_map<std::string, std::size_t>& index, std::size_t n) {
        Monomial m(n);
        while (true) {
            skip_space();
            const auto [line, col] = position();
            const auto name = identifier();
            const auto it = index.find(name);
            if (it == index.end()) throw ParseError("undeclared variable '" + name + "'", line, col);
            Exponent e = 1;
            skip_space();
            if (peek() == '^') {
                advance();
                skip_space();
                e = exponent();
            }
            m[it->second] += e;
            skip_space();
            if (peek() != '*') break;
            advance();
        }
        return m;
    }

    Exponent exponent() {
        const auto [line, col] = position();
        if (peek() == '-') throw ParseError("negative exponent", line, col);
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent");
        std::uint64_t value = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            value = value * 10 + static_cast<std::uint64_t>(advance() - '0');
            if (value > 0xFFFFFFFFULL) throw ParseError("exponent too large", line, col);
        }
        if (value == 0) throw ParseError("zero exponent", line, col);
        return static_cast<Exponent>(value);
    }

    std::string identifier() {
        if (!std::isalpha(static_cast<unsigned char>(peek()))) fail("expected a variable name");
        std::string out;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') out += advance();
        return out;
    }

    void expect_keyword(std::string_view kw) {
        const auto [line, col] = position();
        if (text_.substr(pos_, kw.size()) != kw) throw ParseError("expected '" + std::string(kw) + "'", line, col);
        for (std::size_t i = 0; i < kw.size(); ++i) advance();
        if (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
            throw ParseError("expected '" + std::string(kw) + "'", line, col);
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    [[noreturn]] void fail(const std::string& what) const {
        const auto [line, col] = position();
        throw ParseError(at_end() ? what + " at end of input" : what, line, col);
    }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) advance();
    }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    char advance() {
        const char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    std::pair<std::size_t, std::size_t> position() const { return {line_, col_}; }

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
};

}  // namespace detail

inline ParsedIdeal parse_ideal(std::string_view text) { return detail::IdealParser(text).parse(); }

/// Monomial in the parser's term syntax, e.g. "x^2*y"; "1" for the constant.
inline std::string format_monomial(const Monomial& m, const RingContext& ctx) {
    std::string out;
    for (std::size_t i = 0; i < m.num_vars(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += ctx.name(i);
        if (m[i] > 1) out += "^" + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

/// Generator list such as "x^2, x*y"; "0" for the zero ideal.
inline std::string format_generators(const MonomialIdeal& I, const RingContext& ctx) {
    if (I.is_zero()) return "0";
    std::string out;
    for (const auto& g : I.generators()) {
        if (!out.empty()) out += ", ";
        out += format_monomial(g, ctx);
    }
    return out;
}

/// Inverse of parse_ideal.
inline std::string format_ideal(const MonomialIdeal& I, const RingContext& ctx) {
    std::string out = "vars ";
    for (std::size_t i = 0; i < ctx.num_vars(); ++i) out += (i ? ", " : "") + ctx.name(i);
    return out + " ; " + format_generators(I, ctx);
}

}  // namespace depthforge
