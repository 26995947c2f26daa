#include "gsx/extension.hpp"

#include <algorithm>

namespace gsx {

namespace {

// Extended alphabet: base generators first (greater), then module basis.
Alphabet extended_alphabet(const Presentation& base, const BimoduleSpec& module) {
    std::vector<std::string> names = base.alphabet().names();
    for (const auto& m : module.basis) {
        if (base.alphabet().find(m))
            throw input_error("module basis name '" + m + "' collides with a generator");
        names.push_back(m);
    }
    return Alphabet(std::move(names));
}

// The factor term accumulated while reducing a pure-B polynomial in R: each
// trace step a (u) b contributes alpha * a . (u) . b through the actions.
Vec factor_contribution(const ExtensionAlgebra& A, const ReductionTrace& trace) {
    const Field& f = A.base.field();
    Vec acc = zero_vec(f, A.module.dim());
    for (const auto& step : trace.steps) {
        auto it = A.assignment.find(step.relation);
        if (it == A.assignment.end())
            throw input_error("no factor value for relation '" + step.relation + "'");
        Vec v = act_left(A.module, A.base.alphabet(), step.left, it->second);
        v = act_right(A.module, A.base.alphabet(), step.right, v);
        acc = add_vec(acc, scale_vec(step.alpha, v));
    }
    return acc;
}

Poly module_combo(const Field& f, const Vec& v, std::size_t base_gens) {
    Poly p(f);
    for (std::size_t j = 0; j < v.size(); ++j)
        p.add_term(Word({static_cast<Gen>(base_gens + j)}), v[j]);
    return p;
}

} // namespace

ExtensionAlgebra build_extension(const Presentation& base, const BimoduleSpec& module,
                                 const std::map<std::string, Vec>& assignment,
                                 std::optional<std::size_t> working_deg) {
    if (base.unital())
        throw input_error("extensions are defined over non-unital presentations");
    if (!is_gsb(base).is_basis)
        throw contract_error("build_extension() requires a Groebner-Shirshov basis");
    if (!is_minimal(base))
        throw contract_error("build_extension() requires a minimal basis "
                             "(leading words pairwise not subwords)");
    BimoduleReport mod_report = check_bimodule(base, module);
    if (!mod_report.ok)
        throw input_error("bimodule check failed: " + mod_report.violations.front());

    const Field& f = base.field();
    for (const auto& r : base.relations()) {
        auto it = assignment.find(r.name);
        if (it == assignment.end())
            throw input_error("no factor value for relation '" + r.name + "'");
        if (it->second.size() != module.dim())
            throw input_error("factor value for '" + r.name + "' has wrong dimension");
    }
    if (assignment.size() != base.size())
        throw input_error("factor set assigns values to unknown relations");

    // Gate of Theorem-style construction: every derived condition must
    // specialize to zero.
    DeriveResult derived = derive_conditions(base);
    std::map<FactorSymbol, Vec> sym_assignment;
    for (const auto& [name, v] : assignment)
        sym_assignment.emplace(FactorSymbol::relation(name), v);
    for (const auto& cond : derived.conditions) {
        Vec v = specialize(cond.expr, module, base.alphabet(), sym_assignment);
        if (!is_zero_vec(v))
            throw construction_error("extension condition violated at composition " +
                                         cond.describe(base.alphabet()) + ": value " +
                                         render_vec(v),
                                     cond.describe(base.alphabet()));
    }

    // Assemble S1.
    Alphabet ext_ab = extended_alphabet(base, module);
    std::size_t n = base.alphabet().size();
    std::vector<std::pair<std::string, Poly>> rels;
    for (const auto& r : base.relations()) {
        Poly poly = r.poly - module_combo(f, assignment.at(r.name), n);
        rels.emplace_back(r.name, std::move(poly));
    }
    for (std::size_t x = 0; x < n; ++x) {
        const std::string& xn = base.alphabet().name(static_cast<Gen>(x));
        const Mat& lx = module.left.at(xn);
        const Mat& rx = module.right.at(xn);
        for (std::size_t j = 0; j < module.dim(); ++j) {
            Gen mj = static_cast<Gen>(n + j);
            Vec lcol = zero_vec(f, module.dim());
            Vec rcol = zero_vec(f, module.dim());
            for (std::size_t i = 0; i < module.dim(); ++i) {
                lcol[i] = lx[i][j];
                rcol[i] = rx[i][j];
            }
            Poly lp(f, Word({static_cast<Gen>(x), mj}));
            lp = lp - module_combo(f, lcol, n);
            rels.emplace_back("xm." + xn + "." + module.basis[j], std::move(lp));
            Poly rp(f, Word({mj, static_cast<Gen>(x)}));
            rp = rp - module_combo(f, rcol, n);
            rels.emplace_back("mx." + module.basis[j] + "." + xn, std::move(rp));
        }
    }
    for (std::size_t j = 0; j < module.dim(); ++j)
        for (std::size_t l = 0; l < module.dim(); ++l)
            rels.emplace_back("mm." + module.basis[j] + "." + module.basis[l],
                              Poly(f, Word({static_cast<Gen>(n + j), static_cast<Gen>(n + l)})));
    {
        std::vector<std::string> names;
        names.reserve(rels.size());
        for (const auto& [name, poly] : rels)
            names.push_back(name);
        std::sort(names.begin(), names.end());
        if (std::adjacent_find(names.begin(), names.end()) != names.end())
            throw input_error("relation name collides with a structure relation name");
    }
    Presentation s1(ext_ab, f, false, std::move(rels));

    // Theorem gate: S1 must itself pass the Composition-Diamond criterion.
    GsbReport s1_report = is_gsb(s1);
    if (!s1_report.is_basis)
        throw construction_error(
            "S1 is not a Groebner-Shirshov basis; first failing composition " +
                s1_report.failures.front().composition.describe(ext_ab),
            s1_report.failures.front().composition.describe(ext_ab));

    std::size_t wdeg = working_deg ? *working_deg : 1 + 2 * base.max_leading_deg();
    ExtensionAlgebra A{base, module, assignment, std::move(s1), false, wdeg};

    // Lemma-2 sanity: Irr(S1) up to the working degree is {m_j} plus Irr(R).
    std::size_t irr_s1 = irr(A.s1, wdeg).size();
    std::size_t irr_r = irr(base, wdeg).size();
    if (irr_s1 != module.dim() + irr_r)
        throw construction_error("Irr(S1) basis count mismatch at degree " + std::to_string(wdeg),
                                 "basis count");
    return A;
}

ExtensionAlgebra build_extension(const FiniteAlgebraSpec& spec,
                                 std::optional<std::size_t> working_deg) {
    spec.validate();
    BimoduleReport mod_report = check_finite_module(spec);
    if (!mod_report.ok)
        throw input_error("bimodule check failed: " + mod_report.violations.front());
    auto violations = cocycle_check(spec);
    if (!violations.empty()) {
        const auto& v = violations.front();
        std::string where = "(" + spec.basis[v.p] + "," + spec.basis[v.q] + "," +
                            spec.basis[v.r] + ")";
        throw construction_error("cocycle condition violated at " + where + ": value " +
                                     render_vec(v.value),
                                 where);
    }
    ExtensionAlgebra A = build_extension(table_presentation(spec), table_module(spec),
                                         table_assignment(spec), working_deg);
    A.from_finite = true;
    return A;
}

ExtElem make_element(const ExtensionAlgebra& A, const Vec& m_part, const Poly& b_part) {
    if (m_part.size() != A.module.dim())
        throw input_error("element M-part has wrong dimension");
    for (const auto& [w, c] : b_part.terms())
        if (!A.base.alphabet().valid(w))
            throw input_error("element B-part uses letters outside the base alphabet");
    ReductionTrace trace = reduce(b_part, A.base);
    Vec m = add_vec(m_part, factor_contribution(A, trace));
    return {std::move(m), std::move(trace.remainder)};
}

ExtElem zero_element(const ExtensionAlgebra& A) {
    return {zero_vec(A.base.field(), A.module.dim()), Poly(A.base.field())};
}

ExtElem ext_mul(const ExtensionAlgebra& A, const ExtElem& r, const ExtElem& s) {
    const Field& f = A.base.field();
    const Alphabet& ab = A.base.alphabet();
    Vec m = zero_vec(f, A.module.dim());
    // m b' (right action of the polynomial) and b m' (left action).
    for (const auto& [w, c] : s.b_part.terms())
        m = add_vec(m, scale_vec(c, act_right(A.module, ab, w, r.m_part)));
    for (const auto& [w, c] : r.b_part.terms())
        m = add_vec(m, scale_vec(c, act_left(A.module, ab, w, s.m_part)));
    // b b' with the factor term read off the reduction trace.
    ReductionTrace trace = reduce(r.b_part * s.b_part, A.base);
    m = add_vec(m, factor_contribution(A, trace));
    return {std::move(m), std::move(trace.remainder)};
}

std::pair<Vec, Poly> split_extended(const ExtensionAlgebra& A, const Poly& p) {
    const Field& f = A.base.field();
    std::size_t n = A.base.alphabet().size();
    Vec m = zero_vec(f, A.module.dim());
    Poly b(f);
    for (const auto& [w, c] : p.terms()) {
        if (w.deg() == 1 && w.letters[0] >= n) {
            m[w.letters[0] - n] += c;
            continue;
        }
        bool pure_base = std::all_of(w.letters.begin(), w.letters.end(),
                                     [&](Gen g) { return g < n; });
        if (!pure_base)
            throw contract_error("polynomial is not split into M + Irr(R) words");
        b.add_term(w, c);
    }
    return {std::move(m), std::move(b)};
}

VerifyReport verify_extension(const ExtensionAlgebra& A, std::size_t max_deg) {
    VerifyReport report;
    const Field& f = A.base.field();
    const Alphabet& ab = A.base.alphabet();
    auto unit_m = [&](std::size_t j) {
        Vec v = zero_vec(f, A.module.dim());
        v[j] = Scalar::one(f);
        return ExtElem{std::move(v), Poly(f)};
    };
    auto word_elem = [&](const Word& w) {
        return ExtElem{zero_vec(f, A.module.dim()), Poly(f, w)};
    };
    // (i) M^2 = 0.
    for (std::size_t j = 0; j < A.module.dim(); ++j)
        for (std::size_t l = 0; l < A.module.dim(); ++l) {
            ExtElem prod = ext_mul(A, unit_m(j), unit_m(l));
            if (!is_zero_vec(prod.m_part) || !prod.b_part.is_zero()) {
                report.ok = false;
                report.failures.push_back("M^2 != 0 at (" + A.module.basis[j] + "," +
                                          A.module.basis[l] + ")");
            }
        }
    // (ii) M is an ideal: products with irreducible words stay in M.
    std::vector<Word> words = irr(A.base, max_deg);
    for (const auto& w : words)
        for (std::size_t j = 0; j < A.module.dim(); ++j) {
            if (!ext_mul(A, word_elem(w), unit_m(j)).b_part.is_zero() ||
                !ext_mul(A, unit_m(j), word_elem(w)).b_part.is_zero()) {
                report.ok = false;
                report.failures.push_back("product of " + ab.render(w) + " with " +
                                          A.module.basis[j] + " leaves M");
            }
        }
    // (iii) The quotient multiplies like B.
    for (const auto& v : words)
        for (const auto& w : words) {
            ExtElem prod = ext_mul(A, word_elem(v), word_elem(w));
            Poly expected = normal_form(Poly(f, concat(v, w)), A.base);
            if (prod.b_part != expected) {
                report.ok = false;
                report.failures.push_back("quotient product mismatch at (" + ab.render(v) + ")(" +
                                          ab.render(w) + ")");
            }
        }
    return report;
}

std::map<std::string, Vec> extract_factor_set(const ExtensionAlgebra& A) {
    std::map<std::string, Vec> out;
    const Field& f = A.base.field();
    for (const auto& r : A.base.relations()) {
        // Words of the base presentation keep their ranks in the extended
        // alphabet, so the polynomials transfer verbatim.
        Poly nf_u = normal_form(Poly(f, r.leading()), A.s1);
        Poly nf_f = normal_form(r.tail(), A.s1);
        auto [mu, bu] = split_extended(A, nf_u);
        auto [mf, bf] = split_extended(A, nf_f);
        out.emplace(r.name, sub_vec(mu, mf));
    }
    return out;
}

} // namespace gsx
