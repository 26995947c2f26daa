#ifndef GSX_COMPOSITION_HPP
#define GSX_COMPOSITION_HPP

#include "gsx/presentation.hpp"

namespace gsx {

enum class CompositionKind { Intersection, Inclusion };

// A critical pair of relations (f, g) at the ambiguity word w.
//   Intersection: w = lead(f)*b = a*lead(g), overlap proper on both sides;
//                 value = f*b - a*g.
//   Inclusion:    w = lead(f) = a*lead(g)*b; value = f - a*g*b.
// The value's leading word is < w (or the value is 0).
struct Composition {
    CompositionKind kind;
    std::string left_name;
    std::string right_name;
    Word w;
    Word left_cofactor_b;  // b above
    Word right_cofactor_a; // a above
    Poly value;
    bool self_pair; // left and right are the same relation

    std::string describe(const Alphabet& ab) const;
};

// Every composition of p, including self-overlaps of a relation with
// itself, in deterministic order: w ascending deg-lex, then names, then
// cofactors.
std::vector<Composition> compositions(const Presentation& p);

} // namespace gsx

#endif
