// SPDX-License-Identifier: Apache-2.0
//
// Text front-end for polynomials.
//
//   expr    := ['-'] term { ('+' | '-') term }
//   term    := factor { '*' factor }
//   factor  := primary [ '^' INT ]
//   primary := INT [ '/' INT ] | 'zeta'N | variable | '(' expr ')'
//
// Implicit multiplication is not part of the grammar; "2x" is a syntax
// error. "zeta6" is the literal root of unity and is only meaningful in a
// cyclotomic coefficient domain.
#pragma once

#include "galtwist/multipoly.hpp"

#include <cctype>
#include <string>
#include <vector>

namespace galtwist {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t offset, const std::string& what)
        : std::runtime_error(what + " (at offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

namespace detail {

template <class K>
struct LiteralPolicy;

template <>
struct LiteralPolicy<Rational> {
    static Rational fraction(const BigInt& num, const BigInt& den) { return Rational(num, den); }
    static Rational zeta(unsigned, std::size_t offset) {
        throw ParseError(offset, "cyclotomic literal not allowed in a rational coefficient domain");
    }
};

template <>
struct LiteralPolicy<CycloNumber> {
    static CycloNumber fraction(const BigInt& num, const BigInt& den) {
        return CycloNumber(Rational(num, den));
    }
    static CycloNumber zeta(unsigned n, std::size_t) { return CycloNumber::zeta(n); }
};

template <class K>
class PolyParser {
public:
    PolyParser(const std::string& text, std::vector<std::string>* warnings)
        : text_(text), warnings_(warnings) {}

    MultiPoly<K> run() {
        MultiPoly<K> p = expr();
        skip_ws();
        if (pos_ != text_.size()) throw ParseError(pos_, "unexpected trailing input");
        return p;
    }

private:
    MultiPoly<K> expr() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            ++pos_;
            neg = true;
        }
        MultiPoly<K> acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                MultiPoly<K> t = term();
                acc = (c == '+') ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    MultiPoly<K> term() {
        MultiPoly<K> acc = factor();
        while (true) {
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                acc = acc * factor();
            } else {
                return acc;
            }
        }
    }

    MultiPoly<K> factor() {
        MultiPoly<K> base = primary();
        skip_ws();
        if (peek() == '^') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            BigInt e = integer("exponent");
            if (e < 0 || e > 1'000'000) throw ParseError(at, "exponent out of range");
            base = base.pow(static_cast<long>(e));
        }
        return base;
    }

    MultiPoly<K> primary() {
        skip_ws();
        std::size_t at = pos_;
        char c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly<K> inner = expr();
            skip_ws();
            if (peek() != ')') throw ParseError(pos_, "expected ')'");
            ++pos_;
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            BigInt num = integer("integer");
            skip_ws();
            if (peek() == '/') {
                ++pos_;
                skip_ws();
                std::size_t dat = pos_;
                BigInt den = integer("denominator");
                if (den == 0) throw ParseError(dat, "zero denominator");
                return MultiPoly<K>::constant(LiteralPolicy<K>::fraction(num, den));
            }
            return MultiPoly<K>::constant(LiteralPolicy<K>::fraction(num, 1));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::string name = identifier();
            if (name.size() > 4 && name.compare(0, 4, "zeta") == 0 &&
                std::all_of(name.begin() + 4, name.end(),
                            [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
                unsigned n = static_cast<unsigned>(std::stoul(name.substr(4)));
                if (n == 0) throw ParseError(at, "zeta0 is undefined");
                return MultiPoly<K>::constant(LiteralPolicy<K>::zeta(n, at));
            }
            VarName v = VarName::from_string(name);
            if (v.role == VarRole::Generic && warnings_)
                warnings_->push_back("unrecognized variable role: '" + name + "'");
            return MultiPoly<K>::variable(v);
        }
        if (c == '\0') throw ParseError(pos_, "unexpected end of input");
        throw ParseError(pos_, std::string("unexpected character '") + c + "'");
    }

    BigInt integer(const char* what) {
        skip_ws();
        std::size_t at = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError(at, std::string("expected ") + what);
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
        return BigInt(digits);
    }

    std::string identifier() {
        std::string s;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') s += text_[pos_++];
        return s;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    const std::string& text_;
    std::vector<std::string>* warnings_;
    std::size_t pos_ = 0;
};

}  // namespace detail

template <class K>
MultiPoly<K> parse_poly(const std::string& text, std::vector<std::string>* warnings = nullptr) {
    return detail::PolyParser<K>(text, warnings).run();
}

inline MultiPoly<Rational> parse_rational(const std::string& text,
                                          std::vector<std::string>* warnings = nullptr) {
    return parse_poly<Rational>(text, warnings);
}
inline MultiPoly<CycloNumber> parse_cyclo(const std::string& text,
                                          std::vector<std::string>* warnings = nullptr) {
    return parse_poly<CycloNumber>(text, warnings);
}

}  // namespace galtwist
