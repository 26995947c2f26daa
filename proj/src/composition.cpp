#include "gsx/composition.hpp"

#include <algorithm>
#include <tuple>

namespace gsx {

std::string Composition::describe(const Alphabet& ab) const {
    std::string k = kind == CompositionKind::Intersection ? "intersection" : "inclusion";
    return "(" + left_name + "," + right_name + ") " + k + " at w=" + ab.render(w);
}

std::vector<Composition> compositions(const Presentation& p) {
    std::vector<Composition> out;
    const auto& rels = p.relations();
    for (std::size_t i = 0; i < rels.size(); ++i) {
        const Word& lf = rels[i].leading();
        for (std::size_t j = 0; j < rels.size(); ++j) {
            const Word& lg = rels[j].leading();

            // Intersection: a proper suffix of lf equals a proper prefix of lg.
            std::size_t max_k = std::min(lf.deg(), lg.deg());
            for (std::size_t k = 1; k < max_k; ++k) {
                if (lf.suffix(k) != lg.prefix(k))
                    continue;
                Word b = lg.suffix(lg.deg() - k);
                Word a = lf.prefix(lf.deg() - k);
                Word w = concat(lf, b);
                Poly value = rels[i].poly.framed(Word{}, b) - rels[j].poly.framed(a, Word{});
                out.push_back({CompositionKind::Intersection, rels[i].name, rels[j].name,
                               std::move(w), std::move(b), std::move(a), std::move(value),
                               i == j});
            }

            // Inclusion: lg occurs inside lf; the identity occurrence of a
            // relation in itself is not a composition.
            if (i == j)
                continue;
            for (std::size_t pos : occurrences(lf, lg)) {
                Word a = lf.prefix(pos);
                Word b = lf.suffix(lf.deg() - pos - lg.deg());
                Poly value = rels[i].poly - rels[j].poly.framed(a, b);
                out.push_back({CompositionKind::Inclusion, rels[i].name, rels[j].name, lf,
                               std::move(b), std::move(a), std::move(value), false});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Composition& x, const Composition& y) {
        int c = cmp_deglex(x.w, y.w);
        if (c != 0)
            return c < 0;
        auto key = [](const Composition& z) {
            return std::tie(z.left_name, z.right_name, z.kind, z.right_cofactor_a.letters,
                            z.left_cofactor_b.letters);
        };
        return key(x) < key(y);
    });
    return out;
}

} // namespace gsx
