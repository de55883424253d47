#include "djp/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace djp {

Rational::Rational(long num, long den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("rational: division by zero");
    q_ /= o.q_;
    return *this;
}

Rational Rational::inv() const {
    if (is_zero()) throw std::invalid_argument("rational: division by zero");
    return Rational(mpq_class(1) / q_);
}

static bool valid_integer(const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    size_t i = (allow_sign && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

// GMP's string constructor rejects an explicit plus sign
static std::string drop_plus(const std::string& s) {
    return s[0] == '+' ? s.substr(1) : s;
}

Rational Rational::parse(const std::string& text) {
    auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!valid_integer(text, true))
            throw std::invalid_argument("rational: cannot parse '" + text + "'");
        return Rational(mpq_class(mpz_class(drop_plus(text))));
    }
    std::string p = text.substr(0, slash), q = text.substr(slash + 1);
    if (!valid_integer(p, true) || !valid_integer(q, false))
        throw std::invalid_argument("rational: cannot parse '" + text + "'");
    p = drop_plus(p);
    mpz_class den(q);
    if (den == 0) throw std::invalid_argument("rational: zero denominator in '" + text + "'");
    mpq_class r{mpz_class(p)};
    r /= mpq_class(den);
    return Rational(r);
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

Rational Rational::factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational Rational::binom(unsigned long n, unsigned long k) {
    if (k > n) return Rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Rational(b);
}

Rational raising_factorial(const Rational& t, unsigned k) {
    Rational r(1);
    for (unsigned i = 1; i <= k; ++i) r *= t + Rational(long(i) - 1);
    return r;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

} // namespace djp
