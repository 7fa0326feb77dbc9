#include "pdeform/parse.hpp"

#include <cctype>

namespace pdeform {

namespace {

class Parser {
  public:
    Parser(const std::string& text, int arity) : text_(text), arity_(arity) {}

    Poly run() {
        Poly result(arity_);
        skip_ws();
        if (eof()) throw ParseError("empty polynomial", pos_);
        result += term(read_sign(true));
        skip_ws();
        while (!eof()) {
            int sign = read_sign(false);
            result += term(sign);
            skip_ws();
        }
        return result;
    }

  private:
    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    // Leading sign of a term. Mandatory between terms, optional up front.
    int read_sign(bool optional) {
        skip_ws();
        if (!eof() && (peek() == '+' || peek() == '-')) {
            int s = peek() == '-' ? -1 : 1;
            ++pos_;
            return s;
        }
        if (!optional) throw ParseError("expected '+' or '-'", pos_);
        return 1;
    }

    Poly term(int sign) {
        skip_ws();
        if (eof()) throw ParseError("expected a term", pos_);
        Rational coeff(sign);
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff *= rational();
            have_coeff = true;
            skip_ws();
            if (eof() || peek() != '*') return Poly::constant(coeff, arity_);
            ++pos_;  // consume '*', a monomial must follow
        }
        Monomial m = monomial(have_coeff);
        return Poly::monomial(m, coeff, arity_);
    }

    Rational rational() {
        Integer num = integer();
        skip_ws();
        if (!eof() && peek() == '/') {
            ++pos_;
            skip_ws();
            std::size_t at = pos_;
            Integer den = integer();
            if (den == 0) throw ParseError("zero denominator", at);
            Rational q(num, den);
            q.canonicalize();
            return q;
        }
        Rational q(num, 1);
        q.canonicalize();
        return q;
    }

    Integer integer() {
        skip_ws();
        std::size_t start = pos_;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (pos_ == start) throw ParseError("expected an integer", pos_);
        return Integer(text_.substr(start, pos_ - start));
    }

    Monomial monomial(bool after_coeff) {
        Monomial m;
        bool any = false;
        bool expect_var = after_coeff;
        while (true) {
            skip_ws();
            if (eof()) {
                if (expect_var) throw ParseError("expected a variable after '*'", pos_);
                break;
            }
            char c = peek();
            int var = c == 'x' ? 0 : c == 'y' ? 1 : c == 'z' ? 2 : -1;
            if (var < 0) {
                if (expect_var) throw ParseError("expected a variable after '*'", pos_);
                break;
            }
            if (var >= arity_)
                throw ParseError(std::string("variable '") + c + "' not allowed for arity " +
                                     std::to_string(arity_),
                                 pos_);
            ++pos_;
            unsigned long exp = 1;
            skip_ws();
            if (!eof() && peek() == '^') {
                ++pos_;
                std::size_t at = pos_;
                Integer e = integer();
                if (e <= 0 || e >= long(kDefaultExponentCap))
                    throw ParseError("exponent out of range", at);
                exp = e.get_ui();
            }
            std::uint64_t s = std::uint64_t(m.e[std::size_t(var)]) + exp;
            if (s >= kDefaultExponentCap) throw ParseError("exponent out of range", pos_);
            m.e[std::size_t(var)] = std::uint32_t(s);
            any = true;
            expect_var = false;
            skip_ws();
            if (eof() || peek() != '*') break;
            ++pos_;
            expect_var = true;
        }
        if (!any) throw ParseError("expected a term", pos_);
        return m;
    }

    const std::string& text_;
    int arity_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(const std::string& text, int arity) {
    if (arity != 2 && arity != 3) throw PreconditionError("arity must be 2 or 3");
    return Parser(text, arity).run();
}

}  // namespace pdeform
