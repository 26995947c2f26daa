#include "gsx/gsb.hpp"

#include <algorithm>

namespace gsx {

GsbReport is_gsb(const Presentation& p) {
    GsbReport report;
    auto comps = compositions(p);
    report.compositions_checked = comps.size();
    for (auto& c : comps) {
        Poly r = normal_form(c.value, p);
        if (!r.is_zero())
            report.failures.push_back({std::move(c), std::move(r)});
    }
    report.is_basis = report.failures.empty();
    return report;
}

namespace {

std::string fresh_name(const Presentation& p, std::size_t& counter) {
    for (;;) {
        std::string name = "c" + std::to_string(++counter);
        if (!p.find(name))
            return name;
    }
}

} // namespace

CompleteResult complete(const Presentation& p, std::size_t max_deg, std::size_t max_iter) {
    if (max_deg < p.max_leading_deg())
        throw contract_error("max_deg is below the maximum relation leading degree");
    Presentation cur = p;
    std::vector<std::string> added;
    std::size_t counter = 0;
    // max_iter caps the number of relations added; a set that is already
    // complete reports Complete under any cap.
    for (;;) {
        bool truncated = false;
        bool changed = false;
        for (const auto& comp : compositions(cur)) {
            if (comp.w.deg() > max_deg) {
                truncated = true;
                continue;
            }
            Poly r = normal_form(comp.value, cur);
            if (r.is_zero())
                continue;
            if (added.size() >= max_iter)
                return {std::move(cur), CompleteStatus::IterationCapped, std::move(added)};
            std::string name = fresh_name(cur, counter);
            cur = cur.with_relation(name, r.monic());
            added.push_back(std::move(name));
            changed = true;
        }
        if (!changed) {
            auto status = truncated ? CompleteStatus::DegreeTruncated : CompleteStatus::Complete;
            return {std::move(cur), status, std::move(added)};
        }
    }
}

std::vector<Word> irr(const Presentation& p, std::size_t max_deg) {
    if (!is_gsb(p).is_basis)
        throw contract_error("irr() requires a Groebner-Shirshov basis");
    std::vector<Word> out;
    if (p.unital())
        out.push_back(Word{});
    std::vector<Word> frontier{Word{}};
    for (std::size_t d = 1; d <= max_deg; ++d) {
        std::vector<Word> next;
        for (const auto& base : frontier) {
            for (Gen g = 0; g < p.alphabet().size(); ++g) {
                Word w = base;
                w.letters.push_back(g);
                // The prefix is irreducible, so a new occurrence must be a suffix.
                bool reducible = false;
                for (const auto& r : p.relations()) {
                    std::size_t len = r.leading().deg();
                    if (len <= w.deg() && w.suffix(len) == r.leading()) {
                        reducible = true;
                        break;
                    }
                }
                if (!reducible)
                    next.push_back(std::move(w));
            }
        }
        std::sort(next.begin(), next.end(), WordDegLexAsc{});
        out.insert(out.end(), next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

bool is_minimal(const Presentation& p) {
    const auto& rels = p.relations();
    for (std::size_t i = 0; i < rels.size(); ++i)
        for (std::size_t j = 0; j < rels.size(); ++j)
            if (i != j && contains(rels[i].leading(), rels[j].leading()))
                return false;
    return true;
}

std::vector<Composition> minimality_violations(const Presentation& p) {
    std::vector<Composition> out;
    for (auto& c : compositions(p))
        if (c.kind == CompositionKind::Inclusion)
            out.push_back(std::move(c));
    return out;
}

MinimizeResult minimize(const Presentation& p) {
    if (!is_gsb(p).is_basis)
        throw contract_error("minimize() requires a Groebner-Shirshov basis");
    std::vector<Relation> work(p.relations().begin(), p.relations().end());
    std::vector<std::string> removed;
    auto rebuild = [&](std::size_t skip) {
        std::vector<std::pair<std::string, Poly>> rels;
        for (std::size_t i = 0; i < work.size(); ++i)
            if (i != skip)
                rels.emplace_back(work[i].name, work[i].poly);
        return Presentation(p.alphabet(), p.field(), p.unital(), std::move(rels));
    };
    for (;;) {
        std::size_t target = work.size();
        for (std::size_t i = 0; i < work.size() && target == work.size(); ++i)
            for (std::size_t j = 0; j < work.size(); ++j)
                if (i != j && contains(work[i].leading(), work[j].leading())) {
                    target = i;
                    break;
                }
        if (target == work.size())
            break;
        Presentation others = rebuild(target);
        Poly nf = normal_form(work[target].poly, others);
        if (nf.is_zero()) {
            removed.push_back(work[target].name);
            work.erase(work.begin() + static_cast<std::ptrdiff_t>(target));
        } else {
            work[target].poly = nf.monic();
        }
    }
    return {rebuild(work.size()), std::move(removed)};
}

} // namespace gsx
