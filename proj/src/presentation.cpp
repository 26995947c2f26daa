#include "gsx/presentation.hpp"

#include <unordered_set>

namespace gsx {

Poly Relation::tail() const {
    Poly t = -poly;
    t.add_term(poly.leading_word(), poly.leading_coeff());
    return t;
}

bool is_relation_name(const std::string& s) {
    if (s.empty())
        return false;
    for (char c : s) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
                  c == '_' || c == '.';
        if (!ok)
            return false;
    }
    return true;
}

Presentation::Presentation(Alphabet alphabet, Field field, bool unital,
                           std::vector<std::pair<std::string, Poly>> relations)
    : alphabet_(std::move(alphabet)), field_(field), unital_(unital) {
    std::unordered_set<std::string> seen;
    relations_.reserve(relations.size());
    for (auto& [name, poly] : relations) {
        if (!is_relation_name(name))
            throw input_error("bad relation name '" + name + "'");
        if (!seen.insert(name).second)
            throw input_error("duplicate relation name '" + name + "'");
        if (poly.field() != field_)
            throw input_error("relation '" + name + "' uses a different coefficient field");
        if (poly.is_zero())
            throw input_error("relation '" + name + "' is the zero polynomial");
        for (const auto& [w, c] : poly.terms()) {
            if (!alphabet_.valid(w))
                throw input_error("relation '" + name + "' uses letters outside the alphabet");
            if (w.empty() && !unital_)
                throw input_error("relation '" + name + "' contains the empty word (non-unital mode)");
        }
        if (poly.leading_word().empty())
            throw input_error("relation '" + name + "' has a constant leading term");
        relations_.push_back({name, poly.monic()});
    }
}

const Relation* Presentation::find(const std::string& name) const {
    for (const auto& r : relations_)
        if (r.name == name)
            return &r;
    return nullptr;
}

const Relation& Presentation::require(const std::string& name) const {
    const Relation* r = find(name);
    if (!r)
        throw input_error("unknown relation '" + name + "'");
    return *r;
}

std::size_t Presentation::max_leading_deg() const {
    std::size_t d = 0;
    for (const auto& r : relations_)
        d = std::max(d, r.leading().deg());
    return d;
}

Presentation Presentation::with_relation(const std::string& name, const Poly& poly) const {
    std::vector<std::pair<std::string, Poly>> rels;
    rels.reserve(relations_.size() + 1);
    for (const auto& r : relations_)
        rels.emplace_back(r.name, r.poly);
    rels.emplace_back(name, poly);
    return Presentation(alphabet_, field_, unital_, std::move(rels));
}

} // namespace gsx
