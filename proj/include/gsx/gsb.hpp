#ifndef GSX_GSB_HPP
#define GSX_GSB_HPP

#include "gsx/composition.hpp"
#include "gsx/rewrite.hpp"

namespace gsx {

struct GsbFailure {
    Composition composition;
    Poly remainder; // nonzero normal form of the composition value
};

struct GsbReport {
    bool is_basis = false;
    std::size_t compositions_checked = 0;
    std::vector<GsbFailure> failures;
};

// Reduces every composition value; the set is a basis iff all remainders
// vanish (Composition-Diamond criterion).
GsbReport is_gsb(const Presentation& p);

enum class CompleteStatus { Complete, DegreeTruncated, IterationCapped };

struct CompleteResult {
    Presentation presentation;
    CompleteStatus status;
    std::vector<std::string> added; // names of relations created, in order
};

// Critical-pair completion bounded by ambiguity degree and pass count.
// New relations are monic normal forms of failed compositions, processed in
// ascending deg-lex order of w and named c1, c2, ...
CompleteResult complete(const Presentation& p, std::size_t max_deg, std::size_t max_iter);

// Nonempty irreducible words of degree <= max_deg in ascending deg-lex
// order; in unital mode the empty word is prepended. Requires a basis.
std::vector<Word> irr(const Presentation& p, std::size_t max_deg);

struct MinimizeResult {
    Presentation presentation;
    std::vector<std::string> removed;
};

// Discards relations whose leading words contain another relation's leading
// word, replacing them by their normal form modulo the rest (dropped when
// that normal form is zero). Requires a basis; the result is again a basis
// of the same ideal with pairwise non-subword leading words.
MinimizeResult minimize(const Presentation& p);

// Leading words pairwise not subwords of one another.
bool is_minimal(const Presentation& p);

// Inclusion compositions present in p. A minimal basis has none; any entry
// here is a minimality violation.
std::vector<Composition> minimality_violations(const Presentation& p);

} // namespace gsx

#endif
