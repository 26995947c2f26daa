#include "gsx/rewrite.hpp"

#include <optional>

namespace gsx {

namespace {

struct Occurrence {
    std::size_t pos;
    std::size_t rel_index;
};

// All (position, relation) matches inside w, then the strategy's pick.
std::optional<Occurrence> pick_occurrence(const Word& w, const Presentation& p,
                                          ReduceStrategy strategy) {
    std::optional<Occurrence> best;
    const auto& rels = p.relations();
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
        const Word& lead = rels[ri].leading();
        if (lead.deg() > w.deg())
            continue;
        for (std::size_t pos : occurrences(w, lead)) {
            if (!best) {
                best = Occurrence{pos, ri};
                continue;
            }
            const std::string& cand = rels[ri].name;
            const std::string& cur = rels[best->rel_index].name;
            if (strategy == ReduceStrategy::LeftmostFirstName) {
                if (pos < best->pos || (pos == best->pos && cand < cur))
                    best = Occurrence{pos, ri};
            } else {
                if (pos > best->pos || (pos == best->pos && cand > cur))
                    best = Occurrence{pos, ri};
            }
        }
    }
    return best;
}

} // namespace

ReductionTrace reduce(const Poly& f, const Presentation& p, ReduceStrategy strategy) {
    ReductionTrace trace{f, {}, Poly(f.field())};
    Poly work = f;
    for (;;) {
        // Greatest reducible word of the current polynomial.
        const Word* target = nullptr;
        Scalar coeff = Scalar::zero(f.field());
        std::optional<Occurrence> occ;
        for (const auto& [w, c] : work.terms()) {
            occ = pick_occurrence(w, p, strategy);
            if (occ) {
                target = &w;
                coeff = c;
                break;
            }
        }
        if (!target)
            break;
        const Relation& rel = p.relations()[occ->rel_index];
        Word a = target->prefix(occ->pos);
        Word b = target->suffix(target->deg() - occ->pos - rel.leading().deg());
        trace.steps.push_back({coeff, a, rel.name, b});
        work = work - rel.poly.framed(a, b).scaled(coeff);
    }
    trace.remainder = std::move(work);
    return trace;
}

Poly ReductionTrace::reconstruct(const Presentation& p) const {
    Poly sum = remainder;
    for (const auto& s : steps)
        sum = sum + p.require(s.relation).poly.framed(s.left, s.right).scaled(s.alpha);
    return sum;
}

Poly normal_form(const Poly& f, const Presentation& p, ReduceStrategy strategy) {
    return reduce(f, p, strategy).remainder;
}

bool is_irreducible(const Word& w, const Presentation& p) {
    for (const auto& r : p.relations())
        if (contains(w, r.leading()))
            return false;
    return true;
}

bool is_irreducible(const Poly& f, const Presentation& p) {
    for (const auto& [w, c] : f.terms())
        if (!is_irreducible(w, p))
            return false;
    return true;
}

} // namespace gsx
