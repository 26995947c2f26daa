#ifndef GSX_REWRITE_HPP
#define GSX_REWRITE_HPP

#include "gsx/presentation.hpp"

namespace gsx {

// One division step: subtract alpha * left * s * right for the named
// monic relation s.
struct ReductionStep {
    Scalar alpha;
    Word left;
    std::string relation;
    Word right;
};

// A division certificate: input = sum_i alpha_i a_i s_i b_i + remainder,
// with every a_i*lead(s_i)*b_i bounded by the input's leading word and the
// remainder free of leading-word occurrences.
struct ReductionTrace {
    Poly input;
    std::vector<ReductionStep> steps;
    Poly remainder;

    // Recomputes sum + remainder from the steps; exact identity with input.
    Poly reconstruct(const Presentation& p) const;
};

// Which reducible occurrence to rewrite. Both strategies rewrite the
// greatest reducible word of the current polynomial; they differ in the
// occurrence picked inside that word. Remainders agree whenever the
// presentation is a Groebner-Shirshov basis.
enum class ReduceStrategy {
    LeftmostFirstName, // leftmost position, then lowest relation name
    RightmostLastName, // rightmost position, then highest relation name
};

ReductionTrace reduce(const Poly& f, const Presentation& p,
                      ReduceStrategy strategy = ReduceStrategy::LeftmostFirstName);

// Remainder only.
Poly normal_form(const Poly& f, const Presentation& p,
                 ReduceStrategy strategy = ReduceStrategy::LeftmostFirstName);

// True when no word of f contains a relation leading word.
bool is_irreducible(const Poly& f, const Presentation& p);
bool is_irreducible(const Word& w, const Presentation& p);

} // namespace gsx

#endif
