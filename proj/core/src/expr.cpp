#include "djp/expr.hpp"

#include <cctype>

namespace djp {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    AlgebraElement run() {
        AlgebraElement e = expr();
        skip_ws();
        if (pos_ < s_.size()) fail("unexpected trailing input");
        return e;
    }

private:
    const std::string& s_;
    size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos_); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool eat(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    AlgebraElement expr() {
        bool neg = false;
        if (eat('-')) neg = true;
        else eat('+');
        AlgebraElement acc = term();
        if (neg) acc = -acc;
        while (true) {
            if (eat('+')) acc += term();
            else if (eat('-')) acc -= term();
            else return acc;
        }
    }

    AlgebraElement term() {
        AlgebraElement acc = factor();
        while (eat('*')) acc = multiply(acc, factor());
        return acc;
    }

    AlgebraElement factor() {
        size_t atom_pos;
        AlgebraElement base = atom(atom_pos);
        if (!eat('^')) return base;
        long e = integer("exponent");
        if (e >= 0) return power(base, unsigned(e));
        // negative exponents: only the group-like generator is invertible
        int m = g_exponent_of(base);
        if (m == 0) {
            pos_ = atom_pos;
            fail("negative exponent is only allowed on g and gi");
        }
        return AlgebraElement::g_power(int(e) * m);
    }

    // returns m if base is exactly the monomial g^m with coefficient 1, else 0
    static int g_exponent_of(const AlgebraElement& e) {
        if (e.term_count() != 1) return 0;
        const auto& [mono, coef] = *e.terms().begin();
        if (!coef.is_one()) return 0;
        if (mono.x || mono.y || mono.xi || mono.u || mono.v) return 0;
        return mono.g;
    }

    AlgebraElement atom(size_t& start) {
        char c = peek();
        start = pos_;
        if (c == '(') {
            ++pos_;
            AlgebraElement e = expr();
            if (!eat(')')) fail("expected ')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) return rational_literal();
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t b = pos_;
            while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            std::string id = s_.substr(b, pos_ - b);
            if (id == "x") return AlgebraElement::gen(Gen::X);
            if (id == "y") return AlgebraElement::gen(Gen::Y);
            if (id == "g") return AlgebraElement::g_power(1);
            if (id == "gi") return AlgebraElement::g_power(-1);
            if (id == "xi") return AlgebraElement::gen(Gen::Xi);
            if (id == "u") return AlgebraElement::gen(Gen::U);
            if (id == "v") return AlgebraElement::gen(Gen::V);
            pos_ = b;
            fail("unknown name '" + id + "' (generators: x y g gi xi u v)");
        }
        fail(pos_ < s_.size() ? "unexpected character" : "unexpected end of input");
    }

    AlgebraElement rational_literal() {
        mpz_class num = digits("number");
        if (!eat('/')) return AlgebraElement::monomial(PbwMonomial{}, Rational(mpz_class(num)));
        size_t dpos = pos_;
        mpz_class den = digits("denominator");
        if (den == 0) {
            pos_ = dpos;
            fail("zero denominator");
        }
        return AlgebraElement::monomial(PbwMonomial{},
                                        Rational(mpq_class(num, den)));
    }

    long integer(const char* what) {
        skip_ws();
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        mpz_class d = digits(what);
        if (!d.fits_slong_p()) fail("exponent out of range");
        long v = d.get_si();
        return neg ? -v : v;
    }

    mpz_class digits(const char* what) {
        skip_ws();
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail(std::string("expected ") + what);
        size_t b = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        return mpz_class(s_.substr(b, pos_ - b));
    }
};

} // namespace

AlgebraElement parse_expression(const std::string& text) { return Parser(text).run(); }

} // namespace djp
