#pragma once

#include "djp/rational.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace djp {

// Generators of the double of the Jordan plane. Normal (PBW) order is
// x < y < g = g^{-1} < xi < u < v; words are reduced into this order.
enum class Gen : std::uint8_t { X, Y, G, Gi, Xi, U, V };

const char* gen_name(Gen g);
int gen_grade(Gen g);  // Z-grading: deg x = deg y = -2, deg u = deg v = +2

using Word = std::vector<Gen>;

// x^a y^b g^m xi^k u^p v^q with m in Z; the unit is the empty monomial
struct PbwMonomial {
    unsigned x = 0, y = 0;
    int g = 0;
    unsigned xi = 0, u = 0, v = 0;

    friend auto operator<=>(const PbwMonomial&, const PbwMonomial&) = default;

    bool is_unit() const { return x == 0 && y == 0 && g == 0 && xi == 0 && u == 0 && v == 0; }
    int grade() const { return -2 * int(x + y) + 2 * int(u + v); }
    unsigned letters() const { return x + y + unsigned(g < 0 ? -g : g) + xi + u + v; }
    Word word() const;
    std::string str() const;
};

// Finite Q-linear combination of PBW monomials. Terms are kept in a map
// ordered by exponent tuple; printing iterates in descending order.
class AlgebraElement {
public:
    AlgebraElement() = default;

    static AlgebraElement zero() { return {}; }
    static AlgebraElement one();
    static AlgebraElement gen(Gen g);
    static AlgebraElement g_power(int m);
    static AlgebraElement monomial(const PbwMonomial& m, const Rational& c = Rational(1));

    bool is_zero() const { return t_.empty(); }
    size_t term_count() const { return t_.size(); }
    const std::map<PbwMonomial, Rational>& terms() const { return t_; }
    Rational coeff(const PbwMonomial& m) const;

    void add_term(const PbwMonomial& m, const Rational& c);

    AlgebraElement operator-() const;
    AlgebraElement& operator+=(const AlgebraElement& o);
    AlgebraElement& operator-=(const AlgebraElement& o);
    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    AlgebraElement scaled(const Rational& c) const;
    friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;

    // grade if the element is homogeneous for the Z-grading (0 for the zero element)
    std::optional<int> grade() const;

    std::string str() const;

private:
    std::map<PbwMonomial, Rational> t_;
};

enum class ReduceStrategy { Leftmost, Rightmost };

// Rewrite an arbitrary word in the generators into the PBW basis. The
// rewriting replaces one out-of-order adjacent pair at a time; it terminates
// because every rule's correction terms strictly decrease the measure
// (#v + #y, word length, inversion count) in lexicographic order.
AlgebraElement normal_form(const Word& w, ReduceStrategy s = ReduceStrategy::Leftmost);

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b,
                        ReduceStrategy s = ReduceStrategy::Leftmost);
AlgebraElement power(const AlgebraElement& a, unsigned e);

// The 15 defining relations (g g^{-1} = 1 is implicit in the g-exponent).
// Each is a linear combination of words that must normalize to zero.
struct Relation {
    std::string name;     // "R1" .. "R15"
    std::string display;  // e.g. "xi*g - g*xi"
    std::vector<std::pair<Rational, Word>> terms;
};
const std::vector<Relation>& defining_relations();

struct CheckReport {
    struct Item {
        std::string name;
        bool pass;
    };
    std::vector<Item> items;
    bool ok = true;
    void add(const std::string& name, bool pass);
};

CheckReport verify_presentation(ReduceStrategy s = ReduceStrategy::Leftmost);

// ---- Hopf structure -------------------------------------------------------

class TensorElement {
public:
    using Key = std::pair<PbwMonomial, PbwMonomial>;

    static TensorElement one();
    static TensorElement of(const AlgebraElement& a, const AlgebraElement& b);

    bool is_zero() const { return t_.empty(); }
    const std::map<Key, Rational>& terms() const { return t_; }
    void add_term(const PbwMonomial& a, const PbwMonomial& b, const Rational& c);

    TensorElement& operator+=(const TensorElement& o);
    TensorElement& operator-=(const TensorElement& o);
    friend TensorElement operator+(TensorElement a, const TensorElement& b) { return a += b; }
    friend TensorElement operator-(TensorElement a, const TensorElement& b) { return a -= b; }
    TensorElement scaled(const Rational& c) const;
    TensorElement operator*(const TensorElement& o) const;  // legwise products
    friend bool operator==(const TensorElement&, const TensorElement&) = default;

private:
    std::map<Key, Rational> t_;
};

TensorElement coproduct(const AlgebraElement& a);
Rational counit(const AlgebraElement& a);
AlgebraElement antipode(const AlgebraElement& a);

// Hopf axiom suite on all generators plus `samples` random monomials with at
// most `max_letters` letters: counit laws, coassociativity (triple-tensor
// expansion), the antipode convolution identity, S as antihomomorphism, and
// multiplicativity of the coproduct.
CheckReport hopf_suite(int max_letters, int samples, std::uint32_t seed);

PbwMonomial random_monomial(std::mt19937& rng, int max_letters);

} // namespace djp
