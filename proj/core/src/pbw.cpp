#include "djp/pbw.hpp"

#include <array>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace djp {

const char* gen_name(Gen g) {
    switch (g) {
        case Gen::X: return "x";
        case Gen::Y: return "y";
        case Gen::G: return "g";
        case Gen::Gi: return "gi";
        case Gen::Xi: return "xi";
        case Gen::U: return "u";
        case Gen::V: return "v";
    }
    return "?";
}

int gen_grade(Gen g) {
    switch (g) {
        case Gen::X:
        case Gen::Y: return -2;
        case Gen::U:
        case Gen::V: return 2;
        default: return 0;
    }
}

Word PbwMonomial::word() const {
    Word w;
    w.reserve(letters());
    for (unsigned i = 0; i < x; ++i) w.push_back(Gen::X);
    for (unsigned i = 0; i < y; ++i) w.push_back(Gen::Y);
    for (int i = 0; i < g; ++i) w.push_back(Gen::G);
    for (int i = 0; i < -g; ++i) w.push_back(Gen::Gi);
    for (unsigned i = 0; i < xi; ++i) w.push_back(Gen::Xi);
    for (unsigned i = 0; i < u; ++i) w.push_back(Gen::U);
    for (unsigned i = 0; i < v; ++i) w.push_back(Gen::V);
    return w;
}

std::string PbwMonomial::str() const {
    if (is_unit()) return "1";
    std::ostringstream os;
    bool first = true;
    auto emit = [&](const char* n, unsigned e) {
        if (e == 0) return;
        if (!first) os << "*";
        first = false;
        os << n;
        if (e > 1) os << "^" << e;
    };
    emit("x", x);
    emit("y", y);
    if (g > 0) emit("g", unsigned(g));
    if (g < 0) emit("gi", unsigned(-g));
    emit("xi", xi);
    emit("u", u);
    emit("v", v);
    return os.str();
}

AlgebraElement AlgebraElement::one() { return monomial(PbwMonomial{}); }

AlgebraElement AlgebraElement::gen(Gen g) {
    PbwMonomial m;
    switch (g) {
        case Gen::X: m.x = 1; break;
        case Gen::Y: m.y = 1; break;
        case Gen::G: m.g = 1; break;
        case Gen::Gi: m.g = -1; break;
        case Gen::Xi: m.xi = 1; break;
        case Gen::U: m.u = 1; break;
        case Gen::V: m.v = 1; break;
    }
    return monomial(m);
}

AlgebraElement AlgebraElement::g_power(int m) {
    PbwMonomial mono;
    mono.g = m;
    return monomial(mono);
}

AlgebraElement AlgebraElement::monomial(const PbwMonomial& m, const Rational& c) {
    AlgebraElement e;
    e.add_term(m, c);
    return e;
}

Rational AlgebraElement::coeff(const PbwMonomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rational(0) : it->second;
}

void AlgebraElement::add_term(const PbwMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t_.emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

AlgebraElement AlgebraElement::operator-() const {
    AlgebraElement r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& o) {
    for (const auto& [m, c] : o.t_) add_term(m, c);
    return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& o) {
    for (const auto& [m, c] : o.t_) add_term(m, -c);
    return *this;
}

AlgebraElement AlgebraElement::scaled(const Rational& c) const {
    AlgebraElement r;
    if (c.is_zero()) return r;
    for (const auto& [m, k] : t_) r.t_.emplace(m, k * c);
    return r;
}

std::optional<int> AlgebraElement::grade() const {
    if (t_.empty()) return 0;
    int d = t_.begin()->first.grade();
    for (const auto& [m, c] : t_)
        if (m.grade() != d) return std::nullopt;
    return d;
}

std::string AlgebraElement::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        if (m.is_unit())
            os << a.str();
        else if (a.is_one())
            os << m.str();
        else
            os << a.str() << "*" << m.str();
    }
    return os.str();
}

namespace {

// position in the normal order; g and g^{-1} share a slot
int slot(Gen g) {
    switch (g) {
        case Gen::X: return 0;
        case Gen::Y: return 1;
        case Gen::G:
        case Gen::Gi: return 2;
        case Gen::Xi: return 3;
        case Gen::U: return 4;
        case Gen::V: return 5;
    }
    return -1;
}

struct Rule {
    std::vector<std::pair<Rational, Word>> repl;
};

using Gen2 = std::pair<Gen, Gen>;

const Rule* find_rule(Gen a, Gen b) {
    using G = Gen;
    static const std::map<Gen2, Rule> rules = [] {
        std::map<Gen2, Rule> r;
        auto put = [&](G p, G q, std::vector<std::pair<Rational, Word>> repl) {
            r.emplace(Gen2{p, q}, Rule{std::move(repl)});
        };
        const Rational one(1), half(1, 2);
        // inverses
        put(G::G, G::Gi, {{one, {}}});
        put(G::Gi, G::G, {{one, {}}});
        // past x
        put(G::Y, G::X, {{one, {G::X, G::Y}}, {Rational(-1, 2), {G::X, G::X}}});
        put(G::G, G::X, {{one, {G::X, G::G}}});
        put(G::Gi, G::X, {{one, {G::X, G::Gi}}});
        put(G::Xi, G::X, {{one, {G::X, G::Xi}}, {Rational(-2), {G::X}}});
        put(G::U, G::X, {{one, {G::X, G::U}}});
        put(G::V, G::X, {{one, {G::X, G::V}}, {one, {}}, {Rational(-1), {G::G}}, {one, {G::X, G::U}}});
        // past y
        put(G::G, G::Y, {{one, {G::Y, G::G}}, {one, {G::X, G::G}}});
        put(G::Gi, G::Y, {{one, {G::Y, G::Gi}}, {Rational(-1), {G::X, G::Gi}}});
        put(G::Xi, G::Y, {{one, {G::Y, G::Xi}}, {Rational(-2), {G::Y}}});
        put(G::U, G::Y, {{one, {G::Y, G::U}}, {one, {}}, {Rational(-1), {G::G}}});
        put(G::V, G::Y, {{one, {G::Y, G::V}}, {half, {G::G, G::Xi}}, {one, {G::Y, G::U}}});
        // past g, g^{-1}
        put(G::Xi, G::G, {{one, {G::G, G::Xi}}});
        put(G::Xi, G::Gi, {{one, {G::Gi, G::Xi}}});
        put(G::U, G::G, {{one, {G::G, G::U}}});
        put(G::U, G::Gi, {{one, {G::Gi, G::U}}});
        put(G::V, G::G, {{one, {G::G, G::V}}, {one, {G::G, G::U}}});
        put(G::V, G::Gi, {{one, {G::Gi, G::V}}, {Rational(-1), {G::Gi, G::U}}});
        // past xi
        put(G::U, G::Xi, {{one, {G::Xi, G::U}}, {Rational(-2), {G::U}}});
        put(G::V, G::Xi, {{one, {G::Xi, G::V}}, {Rational(-2), {G::V}}});
        // past u
        put(G::V, G::U, {{one, {G::U, G::V}}, {Rational(-1, 2), {G::U, G::U}}});
        return r;
    }();
    if (slot(a) < slot(b)) return nullptr;
    if (slot(a) == slot(b) && !((a == G::G && b == G::Gi) || (a == G::Gi && b == G::G)))
        return nullptr;
    auto it = rules.find(Gen2{a, b});
    if (it == rules.end()) return nullptr;  // same generator repeated
    return &it->second;
}

PbwMonomial monomial_of_normal_word(const Word& w) {
    PbwMonomial m;
    for (Gen g : w) switch (g) {
        case Gen::X: ++m.x; break;
        case Gen::Y: ++m.y; break;
        case Gen::G: ++m.g; break;
        case Gen::Gi: --m.g; break;
        case Gen::Xi: ++m.xi; break;
        case Gen::U: ++m.u; break;
        case Gen::V: ++m.v; break;
    }
    return m;
}

} // namespace

AlgebraElement normal_form(const Word& w, ReduceStrategy s) {
    AlgebraElement result;
    std::vector<std::pair<Rational, Word>> work;
    work.emplace_back(Rational(1), w);
    while (!work.empty()) {
        auto [c, cur] = std::move(work.back());
        work.pop_back();
        const Rule* rule = nullptr;
        size_t pos = 0;
        if (s == ReduceStrategy::Leftmost) {
            for (size_t p = 0; p + 1 < cur.size(); ++p)
                if ((rule = find_rule(cur[p], cur[p + 1]))) { pos = p; break; }
        } else {
            for (size_t p = cur.size(); p-- > 1;)
                if ((rule = find_rule(cur[p - 1], cur[p]))) { pos = p - 1; break; }
        }
        if (!rule) {
            result.add_term(monomial_of_normal_word(cur), c);
            continue;
        }
        for (const auto& [rc, repl] : rule->repl) {
            Word next;
            next.reserve(cur.size() - 2 + repl.size());
            next.insert(next.end(), cur.begin(), cur.begin() + pos);
            next.insert(next.end(), repl.begin(), repl.end());
            next.insert(next.end(), cur.begin() + pos + 2, cur.end());
            work.emplace_back(c * rc, std::move(next));
        }
    }
    return result;
}

AlgebraElement multiply(const AlgebraElement& a, const AlgebraElement& b, ReduceStrategy s) {
    AlgebraElement r;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) {
            Word w = ma.word();
            Word wb = mb.word();
            w.insert(w.end(), wb.begin(), wb.end());
            r += normal_form(w, s).scaled(ca * cb);
        }
    return r;
}

AlgebraElement power(const AlgebraElement& a, unsigned e) {
    AlgebraElement r = AlgebraElement::one();
    for (unsigned i = 0; i < e; ++i) r = multiply(r, a);
    return r;
}

void CheckReport::add(const std::string& name, bool pass) {
    items.push_back({name, pass});
    ok = ok && pass;
}

const std::vector<Relation>& defining_relations() {
    using G = Gen;
    static const std::vector<Relation> rels = [] {
        const Rational one(1), neg(-1), half(1, 2);
        std::vector<Relation> r;
        auto put = [&](const char* name, const char* disp,
                       std::vector<std::pair<Rational, Word>> terms) {
            r.push_back({name, disp, std::move(terms)});
        };
        put("R1", "xi*g - g*xi", {{one, {G::Xi, G::G}}, {neg, {G::G, G::Xi}}});
        put("R2", "g*x - x*g", {{one, {G::G, G::X}}, {neg, {G::X, G::G}}});
        put("R3", "g*y - y*g - x*g", {{one, {G::G, G::Y}}, {neg, {G::Y, G::G}}, {neg, {G::X, G::G}}});
        put("R4", "xi*y - y*xi + 2*y", {{one, {G::Xi, G::Y}}, {neg, {G::Y, G::Xi}}, {Rational(2), {G::Y}}});
        put("R5", "xi*x - x*xi + 2*x", {{one, {G::Xi, G::X}}, {neg, {G::X, G::Xi}}, {Rational(2), {G::X}}});
        put("R6", "u*g - g*u", {{one, {G::U, G::G}}, {neg, {G::G, G::U}}});
        put("R7", "v*g - g*v - g*u", {{one, {G::V, G::G}}, {neg, {G::G, G::V}}, {neg, {G::G, G::U}}});
        put("R8", "v*xi - xi*v + 2*v", {{one, {G::V, G::Xi}}, {neg, {G::Xi, G::V}}, {Rational(2), {G::V}}});
        put("R9", "u*xi - xi*u + 2*u", {{one, {G::U, G::Xi}}, {neg, {G::Xi, G::U}}, {Rational(2), {G::U}}});
        put("R10", "y*x - x*y + 1/2*x^2", {{one, {G::Y, G::X}}, {neg, {G::X, G::Y}}, {half, {G::X, G::X}}});
        put("R11", "v*u - u*v + 1/2*u^2", {{one, {G::V, G::U}}, {neg, {G::U, G::V}}, {half, {G::U, G::U}}});
        put("R12", "u*x - x*u", {{one, {G::U, G::X}}, {neg, {G::X, G::U}}});
        put("R13", "v*x - x*v - 1 + g - x*u",
            {{one, {G::V, G::X}}, {neg, {G::X, G::V}}, {neg, {}}, {one, {G::G}}, {neg, {G::X, G::U}}});
        put("R14", "u*y - y*u - 1 + g",
            {{one, {G::U, G::Y}}, {neg, {G::Y, G::U}}, {neg, {}}, {one, {G::G}}});
        put("R15", "v*y - y*v - 1/2*g*xi - y*u",
            {{one, {G::V, G::Y}}, {neg, {G::Y, G::V}}, {Rational(-1, 2), {G::G, G::Xi}}, {neg, {G::Y, G::U}}});
        return r;
    }();
    return rels;
}

CheckReport verify_presentation(ReduceStrategy s) {
    CheckReport rep;
    for (const auto& rel : defining_relations()) {
        AlgebraElement acc;
        for (const auto& [c, w] : rel.terms) acc += normal_form(w, s).scaled(c);
        rep.add(rel.name + ": " + rel.display, acc.is_zero());
    }
    return rep;
}

// ---- Hopf structure -------------------------------------------------------

TensorElement TensorElement::one() {
    TensorElement t;
    t.add_term(PbwMonomial{}, PbwMonomial{}, Rational(1));
    return t;
}

TensorElement TensorElement::of(const AlgebraElement& a, const AlgebraElement& b) {
    TensorElement t;
    for (const auto& [ma, ca] : a.terms())
        for (const auto& [mb, cb] : b.terms()) t.add_term(ma, mb, ca * cb);
    return t;
}

void TensorElement::add_term(const PbwMonomial& a, const PbwMonomial& b, const Rational& c) {
    if (c.is_zero()) return;
    Key k{a, b};
    auto [it, fresh] = t_.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t_.erase(it);
    }
}

TensorElement& TensorElement::operator+=(const TensorElement& o) {
    for (const auto& [k, c] : o.t_) add_term(k.first, k.second, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& o) {
    for (const auto& [k, c] : o.t_) add_term(k.first, k.second, -c);
    return *this;
}

TensorElement TensorElement::scaled(const Rational& c) const {
    TensorElement r;
    if (c.is_zero()) return r;
    for (const auto& [k, v] : t_) r.t_.emplace(k, v * c);
    return r;
}

TensorElement TensorElement::operator*(const TensorElement& o) const {
    TensorElement r;
    for (const auto& [ka, ca] : t_)
        for (const auto& [kb, cb] : o.t_) {
            AlgebraElement left = multiply(AlgebraElement::monomial(ka.first),
                                           AlgebraElement::monomial(kb.first));
            AlgebraElement right = multiply(AlgebraElement::monomial(ka.second),
                                            AlgebraElement::monomial(kb.second));
            const Rational c = ca * cb;
            for (const auto& [ml, cl] : left.terms())
                for (const auto& [mr, cr] : right.terms())
                    r.add_term(ml, mr, c * cl * cr);
        }
    return r;
}

namespace {

const TensorElement& coproduct_gen(Gen g) {
    using A = AlgebraElement;
    static const std::array<TensorElement, 7> table = [] {
        std::array<TensorElement, 7> t;
        auto set = [&](Gen gg, TensorElement e) { t[size_t(gg)] = std::move(e); };
        set(Gen::X, TensorElement::of(A::gen(Gen::X), A::one()) +
                        TensorElement::of(A::gen(Gen::G), A::gen(Gen::X)));
        set(Gen::Y, TensorElement::of(A::gen(Gen::Y), A::one()) +
                        TensorElement::of(A::gen(Gen::G), A::gen(Gen::Y)));
        set(Gen::G, TensorElement::of(A::gen(Gen::G), A::gen(Gen::G)));
        set(Gen::Gi, TensorElement::of(A::gen(Gen::Gi), A::gen(Gen::Gi)));
        set(Gen::Xi, TensorElement::of(A::gen(Gen::Xi), A::one()) +
                         TensorElement::of(A::one(), A::gen(Gen::Xi)));
        set(Gen::U, TensorElement::of(A::gen(Gen::U), A::one()) +
                        TensorElement::of(A::one(), A::gen(Gen::U)));
        set(Gen::V, TensorElement::of(A::gen(Gen::V), A::one()) +
                        TensorElement::of(A::one(), A::gen(Gen::V)) +
                        TensorElement::of(A::gen(Gen::Xi), A::gen(Gen::U)).scaled(Rational(-1, 2)));
        return t;
    }();
    return table[size_t(g)];
}

const AlgebraElement& antipode_gen(Gen g) {
    using A = AlgebraElement;
    static const std::array<AlgebraElement, 7> table = [] {
        std::array<AlgebraElement, 7> t;
        auto set = [&](Gen gg, AlgebraElement e) { t[size_t(gg)] = std::move(e); };
        // S(x) = -g^{-1} x, S(y) = -g^{-1} y, S(v) = -v - 1/2 xi u
        set(Gen::X, -normal_form({Gen::Gi, Gen::X}));
        set(Gen::Y, -normal_form({Gen::Gi, Gen::Y}));
        set(Gen::G, A::gen(Gen::Gi));
        set(Gen::Gi, A::gen(Gen::G));
        set(Gen::Xi, -A::gen(Gen::Xi));
        set(Gen::U, -A::gen(Gen::U));
        set(Gen::V, -A::gen(Gen::V) - normal_form({Gen::Xi, Gen::U}).scaled(Rational(1, 2)));
        return t;
    }();
    return table[size_t(g)];
}

} // namespace

TensorElement coproduct(const AlgebraElement& a) {
    TensorElement r;
    for (const auto& [m, c] : a.terms()) {
        // factor coproducts multiplied in PBW letter order x, y, g, xi, u, v
        TensorElement t = TensorElement::one();
        for (unsigned i = 0; i < m.x; ++i) t = t * coproduct_gen(Gen::X);
        for (unsigned i = 0; i < m.y; ++i) t = t * coproduct_gen(Gen::Y);
        if (m.g != 0)
            t = t * TensorElement::of(AlgebraElement::g_power(m.g), AlgebraElement::g_power(m.g));
        for (unsigned i = 0; i < m.xi; ++i) t = t * coproduct_gen(Gen::Xi);
        for (unsigned i = 0; i < m.u; ++i) t = t * coproduct_gen(Gen::U);
        for (unsigned i = 0; i < m.v; ++i) t = t * coproduct_gen(Gen::V);
        r += t.scaled(c);
    }
    return r;
}

Rational counit(const AlgebraElement& a) {
    Rational e;
    for (const auto& [m, c] : a.terms())
        if (m.x == 0 && m.y == 0 && m.xi == 0 && m.u == 0 && m.v == 0) e += c;  // eps(g^m) = 1
    return e;
}

AlgebraElement antipode(const AlgebraElement& a) {
    AlgebraElement r;
    for (const auto& [m, c] : a.terms()) {
        // antihomomorphism: factors of x^a y^b g^m xi^k u^p v^q in reverse
        AlgebraElement s = AlgebraElement::one();
        for (unsigned i = 0; i < m.v; ++i) s = multiply(s, antipode_gen(Gen::V));
        for (unsigned i = 0; i < m.u; ++i) s = multiply(s, antipode_gen(Gen::U));
        for (unsigned i = 0; i < m.xi; ++i) s = multiply(s, antipode_gen(Gen::Xi));
        if (m.g != 0) s = multiply(s, AlgebraElement::g_power(-m.g));
        for (unsigned i = 0; i < m.y; ++i) s = multiply(s, antipode_gen(Gen::Y));
        for (unsigned i = 0; i < m.x; ++i) s = multiply(s, antipode_gen(Gen::X));
        r += s.scaled(c);
    }
    return r;
}

PbwMonomial random_monomial(std::mt19937& rng, int max_letters) {
    std::uniform_int_distribution<int> len(0, max_letters);
    std::uniform_int_distribution<int> pick(0, 6);
    PbwMonomial m;
    int n = len(rng);
    for (int i = 0; i < n; ++i) {
        switch (pick(rng)) {
            case 0: ++m.x; break;
            case 1: ++m.y; break;
            case 2: ++m.g; break;
            case 3: --m.g; break;
            case 4: ++m.xi; break;
            case 5: ++m.u; break;
            case 6: ++m.v; break;
        }
    }
    return m;
}

namespace {

// triple tensor expansion used for coassociativity
using Key3 = std::tuple<PbwMonomial, PbwMonomial, PbwMonomial>;
using Tensor3 = std::map<Key3, Rational>;

void add3(Tensor3& t, const Key3& k, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = t.emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) t.erase(it);
    }
}

Tensor3 delta_left(const TensorElement& t) {  // (Delta x id)
    Tensor3 r;
    for (const auto& [k, c] : t.terms()) {
        TensorElement d = coproduct(AlgebraElement::monomial(k.first));
        for (const auto& [dk, dc] : d.terms()) add3(r, {dk.first, dk.second, k.second}, c * dc);
    }
    return r;
}

Tensor3 delta_right(const TensorElement& t) {  // (id x Delta)
    Tensor3 r;
    for (const auto& [k, c] : t.terms()) {
        TensorElement d = coproduct(AlgebraElement::monomial(k.second));
        for (const auto& [dk, dc] : d.terms()) add3(r, {k.first, dk.first, dk.second}, c * dc);
    }
    return r;
}

bool counit_laws(const AlgebraElement& a) {
    TensorElement d = coproduct(a);
    AlgebraElement left, right;
    for (const auto& [k, c] : d.terms()) {
        left += AlgebraElement::monomial(k.second).scaled(c * counit(AlgebraElement::monomial(k.first)));
        right += AlgebraElement::monomial(k.first).scaled(c * counit(AlgebraElement::monomial(k.second)));
    }
    return left == a && right == a;
}

bool antipode_laws(const AlgebraElement& a) {
    TensorElement d = coproduct(a);
    AlgebraElement conv_l, conv_r;
    for (const auto& [k, c] : d.terms()) {
        conv_l += multiply(antipode(AlgebraElement::monomial(k.first)),
                           AlgebraElement::monomial(k.second)).scaled(c);
        conv_r += multiply(AlgebraElement::monomial(k.first),
                           antipode(AlgebraElement::monomial(k.second))).scaled(c);
    }
    AlgebraElement target = AlgebraElement::one().scaled(counit(a));
    return conv_l == target && conv_r == target;
}

} // namespace

CheckReport hopf_suite(int max_letters, int samples, std::uint32_t seed) {
    CheckReport rep;

    std::vector<AlgebraElement> probe;
    for (Gen g : {Gen::X, Gen::Y, Gen::G, Gen::Gi, Gen::Xi, Gen::U, Gen::V})
        probe.push_back(AlgebraElement::gen(g));
    std::mt19937 rng(seed);
    for (int i = 0; i < samples; ++i)
        probe.push_back(AlgebraElement::monomial(random_monomial(rng, max_letters)));

    bool counit_ok = true, coassoc_ok = true, antipode_ok = true;
    for (const auto& a : probe) {
        counit_ok = counit_ok && counit_laws(a);
        TensorElement d = coproduct(a);
        coassoc_ok = coassoc_ok && delta_left(d) == delta_right(d);
        antipode_ok = antipode_ok && antipode_laws(a);
    }
    rep.add("counit laws (eps x id) Delta = id = (id x eps) Delta", counit_ok);
    rep.add("coassociativity (Delta x id) Delta = (id x Delta) Delta", coassoc_ok);
    rep.add("antipode convolution m (S x id) Delta = eps 1 = m (id x S) Delta", antipode_ok);

    // coproduct and counit respect the relations, so both are well defined
    bool delta_rel_ok = true, eps_rel_ok = true;
    for (const auto& rel : defining_relations()) {
        TensorElement acc;
        Rational eps_acc;
        for (const auto& [c, w] : rel.terms) {
            TensorElement t = TensorElement::one();
            Rational p(1);
            for (Gen g : w) {
                t = t * coproduct_gen(g);
                p *= counit(AlgebraElement::gen(g));
            }
            acc += t.scaled(c);
            eps_acc += c * p;
        }
        delta_rel_ok = delta_rel_ok && acc.is_zero();
        eps_rel_ok = eps_rel_ok && eps_acc.is_zero();
    }
    rep.add("coproduct annihilates the defining relations", delta_rel_ok);
    rep.add("counit annihilates the defining relations", eps_rel_ok);

    // S is an algebra antihomomorphism; checked on random pairs
    bool antihom_ok = true;
    std::mt19937 rng2(seed ^ 0x9e3779b9u);
    for (int i = 0; i < std::max(8, samples / 4); ++i) {
        AlgebraElement a = AlgebraElement::monomial(random_monomial(rng2, std::max(1, max_letters / 2)));
        AlgebraElement b = AlgebraElement::monomial(random_monomial(rng2, std::max(1, max_letters / 2)));
        antihom_ok = antihom_ok && antipode(multiply(a, b)) == multiply(antipode(b), antipode(a));
    }
    rep.add("antipode antihomomorphism S(ab) = S(b)S(a)", antihom_ok);

    // coproduct is multiplicative: Delta(ab) = Delta(a) Delta(b)
    bool delta_mult_ok = true;
    std::mt19937 rng3(seed ^ 0x7f4a7c15u);
    for (int i = 0; i < std::max(8, samples / 4); ++i) {
        AlgebraElement a = AlgebraElement::monomial(random_monomial(rng3, std::max(1, max_letters / 2)));
        AlgebraElement b = AlgebraElement::monomial(random_monomial(rng3, std::max(1, max_letters / 2)));
        delta_mult_ok = delta_mult_ok && coproduct(multiply(a, b)) == coproduct(a) * coproduct(b);
    }
    rep.add("coproduct multiplicativity Delta(ab) = Delta(a)Delta(b)", delta_mult_ok);

    return rep;
}

} // namespace djp
