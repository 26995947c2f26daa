#ifndef GSX_FINITE_HPP
#define GSX_FINITE_HPP

#include "gsx/bimodule.hpp"

namespace gsx {

// A finite-dimensional algebra B given by structure constants, together
// with a bimodule M (actions keyed by algebra basis elements) and a factor
// set (b_p, b_q) given on basis pairs; bilinearity extends it.
struct FiniteAlgebraSpec {
    Field field = Field::rationals();
    std::vector<std::string> basis;         // b_i names, descending order
    std::vector<std::vector<Vec>> products; // products[p][q] = [b_p b_q] in the basis
    BimoduleSpec module;                    // left/right actions per basis element
    std::vector<std::vector<Vec>> factor;   // factor[p][q] = (b_p, b_q) in the module basis

    std::size_t dim() const { return basis.size(); }

    // Dimensions plus associativity of the structure constants; names the
    // first failing triple on error.
    void validate() const;

    // The algebra basis as a (descending) alphabet.
    Alphabet algebra_alphabet() const;
};

// Bimodule axioms in finite mode: products act as composed actions and the
// two actions commute.
BimoduleReport check_finite_module(const FiniteAlgebraSpec& spec);

struct CocycleViolation {
    std::size_t p, q, r;
    Vec value; // nonzero element of M
};

// Evaluates b_p(b_q,b_r) - (b_p b_q, b_r) + (b_p, b_q b_r) - (b_p,b_q) b_r
// on every basis triple; returns the triples where it is nonzero.
std::vector<CocycleViolation> cocycle_check(const FiniteAlgebraSpec& spec);

// Brute-force associativity of the extension multiplication
//   (m+b)(m'+b') = mb' + bm' + (b,b') + bb'
// over all triples from the combined basis {m_j} u {b_i}. Independent
// oracle for the cocycle condition.
bool associativity_check(const FiniteAlgebraSpec& spec);

// The multiplication-table presentation {b_p b_q - [b_p b_q]} over the
// algebra alphabet; relation for the pair (p, q) is named "t.<bp>.<bq>".
Presentation table_presentation(const FiniteAlgebraSpec& spec);

// Factor set keyed by table relation names, for use with the symbolic
// condition machinery.
std::map<std::string, Vec> table_assignment(const FiniteAlgebraSpec& spec);

// The module re-keyed by table-presentation generators (identical data).
BimoduleSpec table_module(const FiniteAlgebraSpec& spec);

} // namespace gsx

#endif
