#include "gsx/conditions.hpp"

#include <algorithm>

namespace gsx {

std::string FactorSymbol::render() const {
    if (kind == Kind::Relation)
        return "(" + first + ")";
    return "(" + first + "," + second + ")";
}

void BimoduleExpr::add(Word left, FactorSymbol sym, Word right, const Scalar& c) {
    if (c.is_zero())
        return;
    Triple t{std::move(left), std::move(sym), std::move(right)};
    auto [it, inserted] = terms_.emplace(std::move(t), c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

BimoduleExpr BimoduleExpr::operator+(const BimoduleExpr& o) const {
    if (field_ != o.field_)
        throw input_error("mixed coefficient fields in condition sum");
    BimoduleExpr r(*this);
    for (const auto& [t, c] : o.terms_)
        r.add(t.left, t.sym, t.right, c);
    return r;
}

BimoduleExpr BimoduleExpr::operator-(const BimoduleExpr& o) const {
    return *this + o.scaled(-Scalar::one(field_));
}

BimoduleExpr BimoduleExpr::scaled(const Scalar& c) const {
    BimoduleExpr r(field_);
    if (c.is_zero())
        return r;
    for (const auto& [t, coeff] : terms_)
        r.terms_.emplace(t, coeff * c);
    return r;
}

BimoduleExpr BimoduleExpr::canonical() const {
    if (is_zero())
        return *this;
    return scaled(terms_.begin()->second.inverse());
}

std::string BimoduleExpr::render(const Alphabet& ab) const {
    if (is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, c] : terms_) {
        Scalar abs = c;
        bool neg = false;
        if (field_.is_rational() && c.numerator() < 0) {
            neg = true;
            abs = -c;
        }
        if (first) {
            if (neg)
                out += '-';
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (!abs.is_one()) {
            out += abs.render();
            out += '*';
        }
        if (!t.left.empty()) {
            out += ab.render(t.left);
            out += '*';
        }
        out += t.sym.render();
        if (!t.right.empty()) {
            out += '*';
            out += ab.render(t.right);
        }
    }
    return out;
}

std::string NamedCondition::describe(const Alphabet& ab) const {
    return "(" + left_name + "," + right_name + ") at w=" + ab.render(w);
}

DeriveResult derive_conditions(const Presentation& p) {
    if (!is_gsb(p).is_basis)
        throw contract_error("derive_conditions() requires a Groebner-Shirshov basis");
    DeriveResult result{{}, 0, false, {}, p};
    if (!is_minimal(p)) {
        MinimizeResult min = minimize(p);
        result.auto_minimized = true;
        result.removed = min.removed;
        result.presentation = std::move(min.presentation);
    }
    const Presentation& pm = result.presentation;
    const Field& f = pm.field();

    // Normal form of a context word; may expand to several irreducible
    // words, each carrying its own coefficient.
    auto nf_terms = [&](const Word& w) {
        return normal_form(Poly(f, w), pm).terms();
    };

    for (const auto& comp : compositions(pm)) {
        if (comp.kind == CompositionKind::Inclusion)
            throw contract_error("inclusion composition in a minimal basis: " +
                                 comp.describe(pm.alphabet()));
        ReductionTrace trace = reduce(comp.value, pm);
        if (!trace.remainder.is_zero())
            throw contract_error("composition failed to reduce in a verified basis");
        BimoduleExpr g(f);
        for (const auto& step : trace.steps) {
            for (const auto& [wa, ca] : nf_terms(step.left))
                for (const auto& [wb, cb] : nf_terms(step.right))
                    g.add(wa, FactorSymbol::relation(step.relation), wb, step.alpha * ca * cb);
        }
        // - ((u1) c - d (u2)). Cofactors of a minimal basis are already
        // irreducible; the normal form is taken uniformly anyway.
        for (const auto& [wc, cc] : nf_terms(comp.left_cofactor_b))
            g.add(Word{}, FactorSymbol::relation(comp.left_name), wc, -cc);
        for (const auto& [wd, cd] : nf_terms(comp.right_cofactor_a))
            g.add(wd, FactorSymbol::relation(comp.right_name), Word{}, cd);
        if (g.is_zero()) {
            ++result.dropped_zero;
            continue;
        }
        result.conditions.push_back({comp.left_name, comp.right_name, comp.w, g.canonical(),
                                     comp.value.is_zero()});
    }
    return result;
}

namespace {

// Applies the antisymmetry/diagonal rules to a basis pair symbol.
void add_pair_canonical(BimoduleExpr& out, const Alphabet& ab, const Word& left, Gen p, Gen q,
                        const Word& right, const Scalar& c, PairConvention convention) {
    if (convention == PairConvention::Antisymmetric) {
        if (p == q)
            return; // (x,x) = 0
        if (p > q) {
            // rank p > rank q means x_p < x_q: flip to the canonical
            // greater-first order with a sign.
            out.add(left, FactorSymbol::pair(ab.name(q), ab.name(p)), right, -c);
            return;
        }
    }
    out.add(left, FactorSymbol::pair(ab.name(p), ab.name(q)), right, c);
}

} // namespace

BimoduleExpr expand_pair_bilinear(const Field& f, const Alphabet& ab, const Word& left_ctx,
                                  const std::vector<std::pair<Scalar, std::string>>& first,
                                  const std::vector<std::pair<Scalar, std::string>>& second,
                                  const Word& right_ctx, const Scalar& coeff,
                                  PairConvention convention) {
    BimoduleExpr out(f);
    for (const auto& [c1, n1] : first)
        for (const auto& [c2, n2] : second)
            add_pair_canonical(out, ab, left_ctx, ab.require(n1), ab.require(n2), right_ctx,
                               coeff * c1 * c2, convention);
    return out;
}

NamedCondition expand_pair_symbols(const NamedCondition& cond, const Presentation& p,
                                   PairConvention convention) {
    // The presentation must have the pair shape: every leading word is a
    // two-letter word, so each relation symbol names a generator pair.
    std::map<std::string, std::pair<Gen, Gen>> pairs;
    for (const auto& r : p.relations()) {
        if (r.leading().deg() != 2)
            throw contract_error("relation '" + r.name +
                                 "' does not have a two-letter leading word");
        pairs[r.name] = {r.leading().letters[0], r.leading().letters[1]};
    }
    BimoduleExpr out(cond.expr.field());
    for (const auto& [t, c] : cond.expr.terms()) {
        if (t.sym.kind == FactorSymbol::Kind::Pair) {
            add_pair_canonical(out, p.alphabet(), t.left, p.alphabet().require(t.sym.first),
                               p.alphabet().require(t.sym.second), t.right, c, convention);
            continue;
        }
        auto it = pairs.find(t.sym.first);
        if (it == pairs.end())
            throw contract_error("condition references unknown relation '" + t.sym.first + "'");
        add_pair_canonical(out, p.alphabet(), t.left, it->second.first, it->second.second,
                           t.right, c, convention);
    }
    NamedCondition r = cond;
    r.expr = out.canonical();
    return r;
}

Vec specialize(const BimoduleExpr& expr, const BimoduleSpec& m, const Alphabet& ab,
               const std::map<FactorSymbol, Vec>& assignment) {
    Vec acc = zero_vec(expr.field(), m.dim());
    for (const auto& [t, c] : expr.terms()) {
        auto it = assignment.find(t.sym);
        if (it == assignment.end())
            throw input_error("no assignment for symbol " + t.sym.render());
        if (it->second.size() != m.dim())
            throw input_error("assignment for symbol " + t.sym.render() + " has wrong dimension");
        Vec v = act_left(m, ab, t.left, it->second);
        v = act_right(m, ab, t.right, v);
        acc = add_vec(acc, scale_vec(c, v));
    }
    return acc;
}

SpanRelation conditions_equal_span(const std::vector<BimoduleExpr>& a,
                                   const std::vector<BimoduleExpr>& b) {
    // Coordinatize over the union of triples.
    std::vector<BimoduleExpr::Triple> coords;
    Field f = Field::rationals();
    bool have_field = false;
    for (const auto* side : {&a, &b})
        for (const auto& e : *side) {
            if (!have_field && !e.is_zero()) {
                f = e.field();
                have_field = true;
            }
            for (const auto& [t, c] : e.terms())
                coords.push_back(t);
        }
    std::sort(coords.begin(), coords.end());
    coords.erase(std::unique(coords.begin(), coords.end()), coords.end());
    auto index_of = [&](const BimoduleExpr::Triple& t) {
        return static_cast<std::size_t>(
            std::lower_bound(coords.begin(), coords.end(), t) - coords.begin());
    };
    auto rows = [&](const std::vector<BimoduleExpr>& side) {
        Mat m;
        for (const auto& e : side) {
            Vec row = zero_vec(f, coords.size());
            for (const auto& [t, c] : e.terms())
                row[index_of(t)] = c;
            m.push_back(std::move(row));
        }
        return m;
    };
    Mat ma = rows(a), mb = rows(b);
    std::size_t ra = rank(ma), rb = rank(mb);
    Mat both = ma;
    both.insert(both.end(), mb.begin(), mb.end());
    std::size_t rboth = rank(std::move(both));
    bool b_in_a = rboth == ra;
    bool a_in_b = rboth == rb;
    if (a_in_b && b_in_a)
        return SpanRelation::Equal;
    if (b_in_a)
        return SpanRelation::AContainsB;
    if (a_in_b)
        return SpanRelation::BContainsA;
    return SpanRelation::Incomparable;
}

} // namespace gsx
