#ifndef GSX_EXTENSION_HPP
#define GSX_EXTENSION_HPP

#include <optional>

#include "gsx/conditions.hpp"
#include "gsx/finite.hpp"

namespace gsx {

// The extension algebra A = M + B built from a validated factor set. The
// extended presentation s1 lives over the alphabet X followed by the module
// basis (every x greater than every m_j) and is a verified GS basis.
struct ExtensionAlgebra {
    Presentation base;                    // R, a minimal GS basis
    BimoduleSpec module;                  // actions per generator of base
    std::map<std::string, Vec> assignment; // (u) per relation name
    Presentation s1;
    bool from_finite = false;
    std::size_t working_deg = 0; // degree bound used by construction checks
};

// An element m + b with b R-irreducible.
struct ExtElem {
    Vec m_part;
    Poly b_part;
};

// Builds A after checking the bimodule axioms and that every derived
// condition specializes to zero; then verifies s1 with the
// Composition-Diamond criterion and the Irr(S1) basis count. Throws
// construction_error naming the failing composition otherwise.
ExtensionAlgebra build_extension(const Presentation& base, const BimoduleSpec& module,
                                 const std::map<std::string, Vec>& assignment,
                                 std::optional<std::size_t> working_deg = std::nullopt);

// Finite-dimensional mode: the multiplication-table presentation plus the
// (b_p, b_q) factor matrix.
ExtensionAlgebra build_extension(const FiniteAlgebraSpec& spec,
                                 std::optional<std::size_t> working_deg = std::nullopt);

// Normalizing constructor for elements: the polynomial part is reduced and
// its M-contribution folded into the vector part.
ExtElem make_element(const ExtensionAlgebra& A, const Vec& m_part, const Poly& b_part);
ExtElem zero_element(const ExtensionAlgebra& A);

// (m+b)(m'+b') = mb' + bm' + (factor term) + bb', the factor term collected
// from the reduction trace of bb'.
ExtElem ext_mul(const ExtensionAlgebra& A, const ExtElem& r, const ExtElem& s);

struct VerifyReport {
    bool ok = true;
    std::vector<std::string> failures;
};

// Desk-scale regression checks: M^2 = 0, M absorbs products, and the
// quotient by M multiplies like B on irreducible words of degree <= max_deg.
VerifyReport verify_extension(const ExtensionAlgebra& A, std::size_t max_deg);

// Recovers the factor set from s1-normal forms: (u) is the M-part of
// nf(u) minus the M-part of nf(f_u).
std::map<std::string, Vec> extract_factor_set(const ExtensionAlgebra& A);

// Splits an s1-irreducible polynomial over the extended alphabet into its
// M-coordinates and its B-part over the base alphabet.
std::pair<Vec, Poly> split_extended(const ExtensionAlgebra& A, const Poly& p);

} // namespace gsx

#endif
