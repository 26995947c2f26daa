#ifndef GSX_PRESENTATION_HPP
#define GSX_PRESENTATION_HPP

#include <string>
#include <vector>

#include "gsx/poly.hpp"

namespace gsx {

// A named, monic defining relation h_u = u - f_u; the leading word u is the
// rewrite target, the tail f_u the replacement.
struct Relation {
    std::string name;
    Poly poly; // monic, nonzero
    const Word& leading() const { return poly.leading_word(); }
    // u - f_u  =>  f_u
    Poly tail() const;
};

// A presented algebra k<X_+ | S> (or k<X | S> when unital): an ordered
// alphabet plus a set of named monic relations over one coefficient field.
class Presentation {
public:
    Presentation(Alphabet alphabet, Field field, bool unital,
                 std::vector<std::pair<std::string, Poly>> relations);

    const Alphabet& alphabet() const { return alphabet_; }
    const Field& field() const { return field_; }
    bool unital() const { return unital_; }
    const std::vector<Relation>& relations() const { return relations_; }
    std::size_t size() const { return relations_.size(); }

    const Relation* find(const std::string& name) const;
    const Relation& require(const std::string& name) const;

    std::size_t max_leading_deg() const;

    // Same alphabet/field/mode with one more relation (stored monic).
    Presentation with_relation(const std::string& name, const Poly& poly) const;

private:
    Alphabet alphabet_;
    Field field_;
    bool unital_;
    std::vector<Relation> relations_;
};

bool is_relation_name(const std::string& s);

} // namespace gsx

#endif
