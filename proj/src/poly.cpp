#include "gsx/poly.hpp"

namespace gsx {

Poly Poly::normalize(const Field& f, const std::vector<std::pair<Scalar, Word>>& raw_terms,
                     bool allow_empty_word) {
    Poly p(f);
    for (const auto& [c, w] : raw_terms) {
        if (c.field() != f)
            throw input_error("mixed coefficient fields in polynomial");
        if (w.empty() && !allow_empty_word)
            throw input_error("the empty word is not allowed in a non-unital polynomial");
        p.add_term(w, c);
    }
    return p;
}

const Word& Poly::leading_word() const {
    if (is_zero())
        throw contract_error("leading word of the zero polynomial");
    return terms_.begin()->first;
}

const Scalar& Poly::leading_coeff() const {
    if (is_zero())
        throw contract_error("leading coefficient of the zero polynomial");
    return terms_.begin()->second;
}

Scalar Poly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero(field_) : it->second;
}

void Poly::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Poly Poly::operator-() const {
    Poly r(field_);
    for (const auto& [w, c] : terms_)
        r.terms_.emplace(w, -c);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    if (field_ != o.field_)
        throw input_error("mixed coefficient fields in polynomial sum");
    Poly r(*this);
    for (const auto& [w, c] : o.terms_)
        r.add_term(w, c);
    return r;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    if (field_ != o.field_)
        throw input_error("mixed coefficient fields in polynomial product");
    Poly r(field_);
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : o.terms_)
            r.add_term(concat(w1, w2), c1 * c2);
    return r;
}

Poly Poly::scaled(const Scalar& c) const {
    Poly r(field_);
    if (c.is_zero())
        return r;
    for (const auto& [w, t] : terms_)
        r.terms_.emplace(w, t * c);
    return r;
}

Poly Poly::monic() const {
    if (is_zero())
        throw contract_error("monic form of the zero polynomial");
    return scaled(leading_coeff().inverse());
}

Poly Poly::framed(const Word& a, const Word& b) const {
    Poly r(field_);
    for (const auto& [w, c] : terms_)
        r.terms_.emplace(concat(a, w, b), c);
    return r;
}

bool Poly::operator==(const Poly& o) const {
    return field_ == o.field_ && terms_ == o.terms_;
}

std::string Poly::render(const Alphabet& ab) const {
    if (is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        Scalar abs = c;
        bool neg = false;
        if (field_.is_rational() && c.numerator() < 0) {
            neg = true;
            abs = -c;
        }
        if (first) {
            if (neg)
                out += '-';
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        if (w.empty()) {
            out += abs.render();
        } else if (abs.is_one()) {
            out += ab.render(w);
        } else {
            out += abs.render();
            out += '*';
            out += ab.render(w);
        }
    }
    return out;
}

} // namespace gsx
