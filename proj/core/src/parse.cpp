#include "klab/parse.hpp"

#include <cctype>

namespace klab {

namespace {

class Parser {
public:
    Parser(const std::string& text, RingPtr ring) : text_(text), ring_(std::move(ring)) {}

    Polynomial run() {
        Polynomial p = expression();
        skip_space();
        if (pos_ != text_.size()) error("unexpected trailing input");
        return p;
    }

private:
    [[noreturn]] void error(const std::string& what) const {
        fail("parse_error", "column " + std::to_string(pos_ + 1) + ": " + what + " in '" + text_ + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek(char c) {
        skip_space();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    bool accept(char c) {
        if (!peek(c)) return false;
        ++pos_;
        return true;
    }

    Polynomial expression() {
        bool negate = false;
        skip_space();
        if (accept('-')) negate = true;
        else accept('+');
        Polynomial p = product();
        if (negate) p = -p;
        while (true) {
            if (accept('+')) p = p + product();
            else if (accept('-')) p = p - product();
            else break;
        }
        return p;
    }

    Polynomial product() {
        Polynomial p = power();
        while (accept('*')) p = p * power();
        return p;
    }

    Polynomial power() {
        Polynomial base = atom();
        if (accept('^')) {
            unsigned long e = parse_uint("exponent");
            Polynomial r = Polynomial::constant(ring_, Scalar::one(ring_->field));
            for (unsigned long i = 0; i < e; ++i) r = r * base;
            return r;
        }
        return base;
    }

    Polynomial atom() {
        skip_space();
        if (pos_ >= text_.size()) error("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            Polynomial p = expression();
            if (!accept(')')) error("expected ')'");
            return p;
        }
        if (c == 'X') return variable();
        if (std::isdigit(static_cast<unsigned char>(c))) return number();
        error("expected coefficient, variable or '('");
    }

    Polynomial variable() {
        ++pos_; // consume 'X'
        unsigned long index = parse_uint("variable index");
        std::size_t slot;
        if (ring_->is_projective()) {
            if (index >= static_cast<unsigned long>(ring_->nvars))
                error("variable X" + std::to_string(index) + " exceeds ring arity");
            slot = index;
        } else if (ring_->is_affine()) {
            if (index == 0) error("X0 is not a variable of the affine ring");
            if (index > static_cast<unsigned long>(ring_->nvars))
                error("variable X" + std::to_string(index) + " exceeds ring arity");
            slot = index - 1;
        } else {
            error("cannot parse variables in a scratch ring");
        }
        return Polynomial::variable(ring_, slot);
    }

    Polynomial number() {
        std::string digits = parse_digits("coefficient");
        if (accept('/')) {
            skip_space();
            std::string den = parse_digits("denominator");
            return Polynomial::constant(ring_, Scalar::parse(digits + "/" + den, ring_->field));
        }
        return Polynomial::constant(ring_, Scalar::parse(digits, ring_->field));
    }

    std::string parse_digits(const std::string& what) {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) error("expected " + what);
        return text_.substr(start, pos_ - start);
    }

    unsigned long parse_uint(const std::string& what) {
        return std::stoul(parse_digits(what));
    }

    const std::string& text_;
    RingPtr ring_;
    std::size_t pos_ = 0;
};

} // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
    return Parser(text, ring).run();
}

} // namespace klab
