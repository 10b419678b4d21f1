#include "ehk/parse.h"

#include <cctype>

#include "ehk/errors.h"

namespace ehk {

namespace {

class FieldParser {
public:
    FieldParser(const std::string& text, const Context* ctx) : s_(text), ctx_(ctx) {}

    FieldElement run() {
        FieldElement f = expr();
        skip_ws();
        if (pos_ < s_.size()) throw ParseError("unexpected trailing input", pos_);
        return f;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    FieldElement expr() {
        FieldElement acc = term();
        for (;;) {
            if (eat('+'))
                acc += term();
            else if (eat('-'))
                acc -= term();
            else
                return acc;
        }
    }

    FieldElement term() {
        FieldElement acc = factor();
        for (;;) {
            if (eat('*')) {
                acc *= factor();
            } else if (eat('/')) {
                acc /= factor();
            } else {
                return acc;
            }
        }
    }

    FieldElement factor() {
        if (eat('-')) return -factor();
        FieldElement base = primary();
        if (eat('^')) {
            auto [n, half] = exponent();
            if (half) {
                size_t at = pos_;
                try {
                    FieldElement p = base.pow(n);
                    return p.sqrt();
                } catch (const DomainError& e) {
                    throw ParseError(e.what(), at);
                }
            }
            return base.pow(n);
        }
        return base;
    }

    FieldElement primary() {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            FieldElement f = expr();
            if (!eat(')')) throw ParseError("expected ')'", pos_);
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            return FieldElement(ctx_, Rational(read_integer()));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            std::string name = read_name();
            int i = ctx_->index(name);
            if (i < 0) throw ParseError("unknown generator '" + name + "'", start);
            return FieldElement::gen(ctx_, i);
        }
        throw ParseError(std::string("unexpected character '") + c + "'", pos_);
    }

    // Returns (n, half): plain n means base^n, (n, true) means base^(n/2).
    std::pair<long, bool> exponent() {
        skip_ws();
        if (peek() == '(') {
            ++pos_;
            bool neg = eat('-');
            long n = read_long();
            bool half = false;
            if (eat('/')) {
                size_t at = pos_;
                long d = read_long();
                if (d != 2) throw ParseError("only half-integer exponents are supported", at);
                half = true;
            }
            if (!eat(')')) throw ParseError("expected ')' in exponent", pos_);
            return {neg ? -n : n, half};
        }
        return {read_long(), false};
    }

    Integer read_integer() {
        skip_ws();
        size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) throw ParseError("expected a number", pos_);
        return Integer(s_.substr(start, pos_ - start));
    }

    long read_long() {
        size_t at = pos_;
        Integer n = read_integer();
        if (!n.fits_slong_p()) throw ParseError("exponent out of range", at);
        return n.get_si();
    }

    std::string read_name() {
        size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    const std::string& s_;
    const Context* ctx_;
    size_t pos_ = 0;
};

} // namespace

FieldElement parse_field(const std::string& text, const Context* ctx) {
    FieldParser p(text, ctx);
    return p.run();
}

} // namespace ehk
