#include "nullwave/algebra/rho_rational.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace nullwave {

namespace {

// expr    := term (('+' | '-') term)*
// term    := unary (('*' | '/') unary)*
// unary   := ('+' | '-') unary | power
// power   := primary ('^' exponent)?
// exponent:= ['+' | '-'] digits | '(' ['+' | '-'] digits ')'
// primary := number | "rho" | '(' expr ')'
class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    RhoRational parse() {
        RhoRational v = expr();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing input");
        return v;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("cannot parse '" + std::string(text_) + "' at offset " +
                                    std::to_string(pos_) + ": " + what);
    }

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

    RhoRational expr() {
        RhoRational v = term();
        for (;;) {
            if (accept('+')) v += term();
            else if (accept('-')) v -= term();
            else return v;
        }
    }

    RhoRational term() {
        RhoRational v = unary();
        for (;;) {
            if (accept('*')) {
                v *= unary();
            } else if (accept('/')) {
                RhoRational d = unary();
                if (d.is_zero()) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    RhoRational unary() {
        if (accept('-')) return -unary();
        if (accept('+')) return unary();
        return power();
    }

    RhoRational power() {
        RhoRational base = primary();
        if (!accept('^')) return base;
        bool paren = accept('(');
        bool negative = false;
        if (accept('-')) negative = true;
        else accept('+');
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (start == pos_) fail("expected integer exponent");
        if (pos_ - start > 6) fail("exponent too large");
        int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
        if (paren && !accept(')')) fail("expected ')'");
        if (negative && base.is_zero()) fail("negative power of zero");
        return base.pow(negative ? -e : e);
    }

    RhoRational primary() {
        skip_space();
        if (accept('(')) {
            RhoRational v = expr();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (text_.substr(pos_, 3) == "rho") {
            pos_ += 3;
            return RhoRational::rho();
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.'))
            ++pos_;
        if (start == pos_) fail("expected number, 'rho' or '('");
        return RhoRational(parse_rational(text_.substr(start, pos_ - start)));
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

RhoRational parse_rho_rational(std::string_view text) { return Parser(text).parse(); }

}  // namespace nullwave
