#ifndef GSX_BIMODULE_HPP
#define GSX_BIMODULE_HPP

#include <map>

#include "gsx/linalg.hpp"
#include "gsx/presentation.hpp"

namespace gsx {

// A B-bimodule M with square-zero multiplication, given by exact action
// matrices per generator: left[x] column j holds the coordinates of x*m_j,
// right[x] column j those of m_j*x.
struct BimoduleSpec {
    std::vector<std::string> basis; // m_j names, in order
    std::map<std::string, Mat> left;
    std::map<std::string, Mat> right;

    std::size_t dim() const { return basis.size(); }

    // Dimension/coverage checks against an alphabet; input_error on failure.
    void validate(const Alphabet& ab, const Field& f) const;
};

// Action of a word as a matrix: the empty word acts as the identity.
Mat left_action(const BimoduleSpec& m, const Alphabet& ab, const Word& w, const Field& f);
Mat right_action(const BimoduleSpec& m, const Alphabet& ab, const Word& w, const Field& f);

// Linear extension to polynomials.
Mat left_action(const BimoduleSpec& m, const Alphabet& ab, const Poly& p);
Mat right_action(const BimoduleSpec& m, const Alphabet& ab, const Poly& p);

Vec act_left(const BimoduleSpec& m, const Alphabet& ab, const Word& w, const Vec& v);
Vec act_right(const BimoduleSpec& m, const Alphabet& ab, const Word& w, const Vec& v);

struct BimoduleReport {
    bool ok = true;
    std::vector<std::string> violations;
};

// Checks that the matrices define a B-bimodule structure on M:
//   (i) every relation acts trivially: rho(u) = rho(f_u) on both sides,
//  (ii) left and right actions commute: L_x R_y = R_y L_x.
BimoduleReport check_bimodule(const Presentation& p, const BimoduleSpec& m);

} // namespace gsx

#endif
