#include "torext/parser.hpp"

#include <cctype>

namespace torext {

namespace {

class Parser {
  public:
    Parser(const std::string& text, RegistryPtr reg, Field field)
        : text_(text), reg_(std::move(reg)), field_(field) {}

    MultiPoly parse() {
        MultiPoly f = expression();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError("unexpected trailing input", pos_);
        return f;
    }

  private:
    MultiPoly expression() {
        skip_ws();
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        } else if (peek() == '+') {
            ++pos_;
        }
        MultiPoly acc = term();
        if (neg) acc = -acc;
        while (true) {
            skip_ws();
            char c = peek();
            if (c == '+' || c == '-') {
                ++pos_;
                MultiPoly t = term();
                acc = c == '+' ? acc + t : acc - t;
            } else {
                return acc;
            }
        }
    }

    MultiPoly term() {
        MultiPoly acc = factor();
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

    MultiPoly factor() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly f = expression();
            skip_ws();
            if (peek() != ')') throw SyntaxError("expected ')'", pos_);
            ++pos_;
            return f;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '-') return coefficient();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            std::string name = identifier();
            if (!reg_->has(name)) throw UnknownVariable(name, start);
            std::uint32_t e = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                e = natural();
            }
            return MultiPoly::variable(reg_, field_, reg_->index_of(name), e);
        }
        throw SyntaxError("expected coefficient, variable or '('", pos_);
    }

    MultiPoly coefficient() {
        mpz_class num = integer();
        skip_ws();
        if (peek() == '/') {
            if (field_.kind() != FieldKind::Rationals)
                throw SyntaxError("fraction coefficients are only allowed over Q", pos_);
            ++pos_;
            skip_ws();
            std::size_t dpos = pos_;
            mpz_class den = integer();
            if (den == 0) throw SyntaxError("zero denominator", dpos);
            return MultiPoly::constant(reg_, Scalar::fraction(num, den));
        }
        return MultiPoly::constant(reg_, Scalar(field_, num));
    }

    mpz_class integer() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (peek() == '-') {
            neg = true;
            ++pos_;
        }
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw SyntaxError("expected integer", start);
        std::string digits;
        while (std::isdigit(static_cast<unsigned char>(peek()))) digits += text_[pos_++];
        mpz_class v(digits);
        return neg ? mpz_class(-v) : v;
    }

    std::uint32_t natural() {
        skip_ws();
        std::size_t start = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek())))
            throw SyntaxError("expected exponent", pos_);
        std::uint64_t v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
            if (v > Monomial::kMaxExponent) throw SyntaxError("exponent exceeds 2^16 bound", start);
        }
        return static_cast<std::uint32_t>(v);
    }

    std::string identifier() {
        std::string name;
        while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')
            name += text_[pos_++];
        return name;
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    const std::string& text_;
    RegistryPtr reg_;
    Field field_;
    std::size_t pos_ = 0;
};

}  // namespace

MultiPoly poly_parse(const std::string& text, RegistryPtr reg, Field field) {
    return Parser(text, std::move(reg), field).parse();
}

}  // namespace torext
