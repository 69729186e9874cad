#pragma once

// Recursive-descent parser for ring expressions such as "x*y - 2*y*x" or
// "(x+y)^2 - 3". Products are evaluated left to right so the same parser
// serves noncommutative algebras.

#include <cctype>
#include <gmpxx.h>
#include <stdexcept>
#include <string>
#include <string_view>

namespace mfact {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::string_view src, std::size_t pos)
        : std::invalid_argument(what + " at offset " + std::to_string(pos) + " in '" + std::string(src) + "'") {}
};

/// Ops must provide value_type and integer(mpz_class), variable(std::string),
/// add, sub, mul, neg and pow(value, unsigned).
template <class Ops>
class ExprParser {
public:
    using Value = typename Ops::value_type;

    ExprParser(std::string_view src, const Ops& ops) : src_(src), ops_(ops) {}

    Value parse() {
        skip();
        if (pos_ >= src_.size()) throw ParseError("empty expression", src_, pos_);
        Value v = sum();
        skip();
        if (pos_ != src_.size()) throw ParseError("unexpected character", src_, pos_);
        return v;
    }

private:
    void skip() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Value sum() {
        Value acc = signed_product();
        for (;;) {
            if (eat('+'))
                acc = ops_.add(acc, product());
            else if (eat('-'))
                acc = ops_.sub(acc, product());
            else
                return acc;
        }
    }

    Value signed_product() {
        if (eat('-')) return ops_.neg(product());
        eat('+');
        return product();
    }

    Value product() {
        Value acc = power();
        while (eat('*')) acc = ops_.mul(acc, power());
        return acc;
    }

    Value power() {
        Value base = atom();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            if (start == pos_) throw ParseError("expected exponent", src_, pos_);
            unsigned long e = std::stoul(std::string(src_.substr(start, pos_ - start)));
            return ops_.pow(base, static_cast<unsigned>(e));
        }
        return base;
    }

    Value atom() {
        skip();
        if (pos_ >= src_.size()) throw ParseError("unexpected end of expression", src_, pos_);
        char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            Value v = sum();
            if (!eat(')')) throw ParseError("expected ')'", src_, pos_);
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
            return ops_.integer(mpz_class(std::string(src_.substr(start, pos_ - start))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                ++pos_;
            std::string name(src_.substr(start, pos_ - start));
            try {
                return ops_.variable(name);
            } catch (const std::out_of_range&) {
                throw ParseError("unknown variable '" + name + "'", src_, start);
            }
        }
        throw ParseError("unexpected character", src_, pos_);
    }

    std::string_view src_;
    const Ops& ops_;
    std::size_t pos_ = 0;
};

template <class Ops>
typename Ops::value_type parse_expression(std::string_view src, const Ops& ops) {
    return ExprParser<Ops>(src, ops).parse();
}

}  // namespace mfact
