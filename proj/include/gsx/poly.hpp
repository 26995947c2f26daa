#ifndef GSX_POLY_HPP
#define GSX_POLY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gsx/scalar.hpp"
#include "gsx/word.hpp"

namespace gsx {

// An element of the free associative algebra: a finite sum of words with
// exact coefficients, stored in strictly descending deg-lex order with no
// zero terms. The leading word is the greatest word present.
class Poly {
public:
    using TermMap = std::map<Word, Scalar, WordDegLexDesc>;

    explicit Poly(const Field& f) : field_(f) {}
    Poly(const Field& f, const Word& w) : field_(f) { add_term(w, Scalar::one(f)); }

    // Combines like terms, drops zeros, sorts. Words must be nonempty unless
    // allow_empty_word is set (unital mode).
    static Poly normalize(const Field& f, const std::vector<std::pair<Scalar, Word>>& raw_terms,
                          bool allow_empty_word = true);

    const Field& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    const Word& leading_word() const;   // contract_error on zero
    const Scalar& leading_coeff() const;
    bool is_monic() const { return !is_zero() && leading_coeff().is_one(); }
    std::size_t max_deg() const { return is_zero() ? 0 : leading_word().deg(); }

    Scalar coeff(const Word& w) const; // zero if absent
    bool has_empty_word() const { return !terms_.empty() && std::prev(terms_.end())->first.empty(); }

    void add_term(const Word& w, const Scalar& c); // merges, erasing cancellations

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const; // concatenation product, bilinear
    Poly scaled(const Scalar& c) const;
    Poly monic() const; // scaled so the leading coefficient is 1

    // a * f * b for context words a, b (either may be empty).
    Poly framed(const Word& a, const Word& b) const;

    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    // Canonical text: terms descending, "2*x*y - 1/3*y", "0" when zero.
    std::string render(const Alphabet& ab) const;

private:
    Field field_;
    TermMap terms_;
};

} // namespace gsx

#endif
