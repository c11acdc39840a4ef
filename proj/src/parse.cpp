#include "vpcremona/parse.hpp"

#include "vpcremona/error.hpp"

#include <cctype>
#include <string>

namespace vpcremona {

namespace {

class Parser {
public:
    Parser(std::string_view text, int nvars) : s_(text), n_(nvars) {}

    Poly parse() {
        Poly p = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InvalidArgument("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Integer integer() {
        skip();
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (start == pos_) fail("expected a number");
        return Integer(std::string(s_.substr(start, pos_ - start)));
    }

    Poly expr() {
        Poly acc(n_);
        bool negate = false;
        if (eat('-')) negate = true;
        else eat('+');
        Poly t = term();
        acc += negate ? -t : t;
        while (true) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }

    Poly term() {
        Poly acc = power();
        while (true) {
            if (eat('*')) {
                acc = acc * power();
            } else if (eat('/')) {
                const Integer d = integer();
                if (d == 0) fail("division by zero");
                acc *= Rational(1, d);
            } else {
                skip();
                // Implicit multiplication: "2x", "x y", "(..)(..)".
                if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
                    acc = acc * power();
                    continue;
                }
                return acc;
            }
        }
    }

    Poly power() {
        Poly base = atom();
        if (eat('^')) {
            const Integer e = integer();
            if (!e.fits_uint_p()) fail("exponent too large");
            base = base.pow(static_cast<unsigned>(e.get_ui()));
        }
        return base;
    }

    Poly atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            Poly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (c == '-') {
            ++pos_;
            return -power();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return Poly::constant(n_, Rational(integer()));
        if (std::isalpha(static_cast<unsigned char>(c))) return Poly::variable(n_, variable());
        fail(std::string("unexpected character '") + c + "'");
    }

    int variable() {
        const char c = s_[pos_++];
        if (n_ == 4) {
            if (c != 'x' || pos_ >= s_.size() || s_[pos_] < '0' || s_[pos_] > '3') fail("expected x0..x3");
            return s_[pos_++] - '0';
        }
        const std::string_view names = n_ == 3 ? "xyz" : n_ == 2 ? "uv" : "t";
        const auto i = names.find(c);
        if (i == std::string_view::npos) fail(std::string("unknown variable '") + c + "'");
        return static_cast<int>(i);
    }

    std::string_view s_;
    int n_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, int nvars) {
    Poly probe(nvars);
    return Parser(text, nvars).parse();
}

HomPoly parse_hom(std::string_view text, int nvars) { return HomPoly(parse_poly(text, nvars)); }

}  // namespace vpcremona
