#ifndef GSX_TESTS_SUPPORT_HPP
#define GSX_TESTS_SUPPORT_HPP

#include <random>

#include "gsx/conditions.hpp"
#include "gsx/finite.hpp"
#include "gsx/gsb.hpp"

// Shared fixtures and brute-force oracles. Everything here is independent
// of the engine paths it checks: oracles enumerate or recompute directly.
namespace gsx::testsupport {

inline Field Q() { return Field::rationals(); }
inline Field GF(long p) { return Field::prime(BigInt(p)); }

inline Scalar q(long n, long d = 1) { return Scalar(Q(), n, d); }

// --- fixtures -------------------------------------------------------------

// {x^2 - y} over x > y.
inline Presentation cyclic_like_xxy() {
    Alphabet ab({"x", "y"});
    Poly p(Q(), ab.word({"x", "x"}));
    p.add_term(ab.word({"y"}), q(-1));
    return Presentation(ab, Q(), false, {{"u1", p}});
}

// Cyclic algebra k<x | x^n = f(x)>, coefficients of f given ascending:
// f = f1*x + f2*x^2 + ...
inline Presentation cyclic(std::size_t n, const std::vector<Scalar>& f_coeffs,
                           const Field& field) {
    Alphabet ab({"x"});
    Word xn;
    for (std::size_t i = 0; i < n; ++i)
        xn.letters.push_back(0);
    Poly p(field, xn);
    for (std::size_t i = 0; i < f_coeffs.size(); ++i) {
        Word xi;
        for (std::size_t k = 0; k <= i; ++k)
            xi.letters.push_back(0);
        p.add_term(xi, -f_coeffs[i]);
    }
    return Presentation(ab, field, false, {{"u", p}});
}

// Free commutative algebra on n generators x_n > ... > x_1:
// relations x_p x_q - x_q x_p for p > q.
inline Presentation commutative(std::size_t n, const Field& field) {
    std::vector<std::string> names;
    for (std::size_t i = n; i >= 1; --i)
        names.push_back("x" + std::to_string(i));
    Alphabet ab(names);
    std::vector<std::pair<std::string, Poly>> rels;
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t qq = p + 1; qq < n; ++qq) {
            // ranks: p < qq means generator p is greater
            Poly poly(field, Word({static_cast<Gen>(p), static_cast<Gen>(qq)}));
            poly.add_term(Word({static_cast<Gen>(qq), static_cast<Gen>(p)}),
                          -Scalar::one(field));
            rels.emplace_back("u" + names[p] + names[qq], poly);
        }
    return Presentation(ab, field, false, std::move(rels));
}

// Grassmann algebra on n generators: x_q^2 = 0 and x_p x_q + x_q x_p = 0.
inline Presentation grassmann(std::size_t n, const Field& field) {
    std::vector<std::string> names;
    for (std::size_t i = n; i >= 1; --i)
        names.push_back("x" + std::to_string(i));
    Alphabet ab(names);
    std::vector<std::pair<std::string, Poly>> rels;
    for (std::size_t p = 0; p < n; ++p) {
        Poly sq(field, Word({static_cast<Gen>(p), static_cast<Gen>(p)}));
        rels.emplace_back("s" + names[p], sq);
    }
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t qq = p + 1; qq < n; ++qq) {
            Poly poly(field, Word({static_cast<Gen>(p), static_cast<Gen>(qq)}));
            poly.add_term(Word({static_cast<Gen>(qq), static_cast<Gen>(p)}),
                          Scalar::one(field));
            rels.emplace_back("u" + names[p] + names[qq], poly);
        }
    return Presentation(ab, field, false, std::move(rels));
}

// UEA of the Heisenberg Lie algebra on x3 > x2 > x1: [x3 x2] = x1.
inline Presentation heisenberg(const Field& field) {
    Alphabet ab({"x3", "x2", "x1"});
    auto rel = [&](const char* a, const char* b, const Poly& bracket) {
        Poly p(field, ab.word({a, b}));
        p.add_term(ab.word({b, a}), -Scalar::one(field));
        return p - bracket;
    };
    Poly zero(field);
    Poly x1(field, ab.word({"x1"}));
    std::vector<std::pair<std::string, Poly>> rels;
    rels.emplace_back("u32", rel("x3", "x2", x1));
    rels.emplace_back("u31", rel("x3", "x1", zero));
    rels.emplace_back("u21", rel("x2", "x1", zero));
    return Presentation(ab, field, false, std::move(rels));
}

// dim-1 module: generator g acts by l[g] on the left, r[g] on the right.
inline BimoduleSpec module_1d(const Alphabet& ab, const std::vector<Scalar>& l,
                              const std::vector<Scalar>& r) {
    BimoduleSpec m;
    m.basis = {"m"};
    for (std::size_t g = 0; g < ab.size(); ++g) {
        m.left[ab.name(static_cast<Gen>(g))] = {{l[g]}};
        m.right[ab.name(static_cast<Gen>(g))] = {{r[g]}};
    }
    return m;
}

// B = span{e}, e^2 = e; actions e.m = lambda m, m.e = mu m; (e,e) = gamma m.
inline FiniteAlgebraSpec idempotent_spec(const Field& f, const Scalar& lambda, const Scalar& mu,
                                         const Scalar& gamma) {
    FiniteAlgebraSpec spec;
    spec.field = f;
    spec.basis = {"e"};
    spec.products = {{{Scalar::one(f)}}};
    spec.module.basis = {"m"};
    spec.module.left["e"] = {{lambda}};
    spec.module.right["e"] = {{mu}};
    spec.factor = {{{gamma}}};
    return spec;
}

// --- random generation (fixed seeds; deterministic suites) -----------------

inline Word random_word(std::mt19937_64& rng, std::size_t n_gens, std::size_t min_deg,
                        std::size_t max_deg) {
    std::uniform_int_distribution<std::size_t> dlen(min_deg, max_deg);
    std::uniform_int_distribution<Gen> dgen(0, static_cast<Gen>(n_gens - 1));
    Word w;
    std::size_t len = dlen(rng);
    for (std::size_t i = 0; i < len; ++i)
        w.letters.push_back(dgen(rng));
    return w;
}

inline Scalar random_scalar(std::mt19937_64& rng, const Field& f) {
    if (f.is_rational()) {
        std::uniform_int_distribution<long> dn(-6, 6);
        std::uniform_int_distribution<long> dd(1, 4);
        return Scalar(f, dn(rng), dd(rng));
    }
    std::uniform_int_distribution<long> dn(0, static_cast<long>(f.modulus().convert_to<long>()) - 1);
    return Scalar(f, dn(rng));
}

inline Scalar random_nonzero_scalar(std::mt19937_64& rng, const Field& f) {
    for (;;) {
        Scalar s = random_scalar(rng, f);
        if (!s.is_zero())
            return s;
    }
}

inline Poly random_poly(std::mt19937_64& rng, const Field& f, std::size_t n_gens,
                        std::size_t max_terms, std::size_t max_deg) {
    std::uniform_int_distribution<std::size_t> dterms(0, max_terms);
    Poly p(f);
    std::size_t k = dterms(rng);
    for (std::size_t i = 0; i < k; ++i)
        p.add_term(random_word(rng, n_gens, 1, max_deg), random_scalar(rng, f));
    return p;
}

// Random element of Id(S): sum of alpha * a * s * b.
inline Poly random_ideal_element(std::mt19937_64& rng, const Presentation& p,
                                 std::size_t pieces, std::size_t max_ctx_deg) {
    Poly g(p.field());
    std::uniform_int_distribution<std::size_t> drel(0, p.size() - 1);
    for (std::size_t i = 0; i < pieces; ++i) {
        const Relation& r = p.relations()[drel(rng)];
        Word a = random_word(rng, p.alphabet().size(), 0, max_ctx_deg);
        Word b = random_word(rng, p.alphabet().size(), 0, max_ctx_deg);
        g = g + r.poly.framed(a, b).scaled(random_nonzero_scalar(rng, p.field()));
    }
    return g;
}

// --- reference condition formulas -------------------------------------------

// x (u) - (u) x, the cyclic extension condition.
inline BimoduleExpr expected_cyclic_condition(const Field& f, const Alphabet& ab,
                                              const std::string& rel) {
    BimoduleExpr e(f);
    e.add(ab.word({"x"}), FactorSymbol::relation(rel), Word{}, Scalar::one(f));
    e.add(Word{}, FactorSymbol::relation(rel), ab.word({"x"}), -Scalar::one(f));
    return e;
}

// Commutative condition on pair symbols at (x3, x2, x1):
// (x2,x1)x3 - x3(x2,x1) + x2(x3,x1) - (x3,x1)x2 + (x3,x2)x1 - x1(x3,x2).
inline BimoduleExpr commutative_pair_condition(const Field& f, const Alphabet& ab) {
    BimoduleExpr e(f);
    Scalar one = Scalar::one(f);
    auto P = [](const char* a, const char* b) { return FactorSymbol::pair(a, b); };
    e.add(Word{}, P("x2", "x1"), ab.word({"x3"}), one);
    e.add(ab.word({"x3"}), P("x2", "x1"), Word{}, -one);
    e.add(ab.word({"x2"}), P("x3", "x1"), Word{}, one);
    e.add(Word{}, P("x3", "x1"), ab.word({"x2"}), -one);
    e.add(Word{}, P("x3", "x2"), ab.word({"x1"}), one);
    e.add(ab.word({"x1"}), P("x3", "x2"), Word{}, -one);
    return e;
}

// --- independent oracles ----------------------------------------------------

// Trace identity, recomputed with plain polynomial arithmetic.
inline bool trace_identity_holds(const ReductionTrace& t, const Presentation& p) {
    return t.reconstruct(p) == t.input;
}

// Word bound: every step stays at or below the input's leading word.
inline bool trace_word_bound_holds(const ReductionTrace& t, const Presentation& p) {
    if (t.input.is_zero())
        return t.steps.empty();
    for (const auto& s : t.steps) {
        Word asb = concat(s.left, concat(p.require(s.relation).leading(), s.right));
        if (cmp_deglex(asb, t.input.leading_word()) > 0)
            return false;
    }
    return true;
}

// All words over the alphabet with 1 <= deg <= max_deg, ascending deg-lex.
inline std::vector<Word> all_words(std::size_t n_gens, std::size_t max_deg) {
    std::vector<Word> out;
    std::vector<Word> frontier{Word{}};
    for (std::size_t d = 1; d <= max_deg; ++d) {
        std::vector<Word> next;
        for (const auto& base : frontier)
            for (Gen g = 0; g < n_gens; ++g) {
                Word w = base;
                w.letters.push_back(g);
                next.push_back(std::move(w));
            }
        std::sort(next.begin(), next.end(), WordDegLexAsc{});
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

// Brute-force Irr: filter all words by subword containment.
inline std::vector<Word> irr_brute_force(const Presentation& p, std::size_t max_deg) {
    std::vector<Word> out;
    for (const auto& w : all_words(p.alphabet().size(), max_deg)) {
        bool reducible = false;
        for (const auto& r : p.relations())
            if (contains(w, r.leading())) {
                reducible = true;
                break;
            }
        if (!reducible)
            out.push_back(w);
    }
    return out;
}

} // namespace gsx::testsupport

#endif
