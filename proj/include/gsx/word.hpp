#ifndef GSX_WORD_HPP
#define GSX_WORD_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gsx/errors.hpp"

namespace gsx {

// Generators are identified by rank: 0 is the greatest generator under the
// order, ranks are positions in the (descending) alphabet list.
using Gen = std::uint32_t;

// A word in the free monoid on the alphabet. The empty word stands for 1
// and is only legal as a reduction context / cofactor in non-unital mode.
struct Word {
    std::vector<Gen> letters;

    Word() = default;
    explicit Word(std::vector<Gen> ls) : letters(std::move(ls)) {}

    std::size_t deg() const { return letters.size(); }
    bool empty() const { return letters.empty(); }

    Word prefix(std::size_t n) const { return Word({letters.begin(), letters.begin() + n}); }
    Word suffix(std::size_t n) const { return Word({letters.end() - n, letters.end()}); }
    Word subword(std::size_t pos, std::size_t n) const {
        return Word({letters.begin() + pos, letters.begin() + pos + n});
    }

    bool operator==(const Word& o) const { return letters == o.letters; }
    bool operator!=(const Word& o) const { return !(*this == o); }
};

Word concat(const Word& a, const Word& b);
Word concat(const Word& a, const Word& b, const Word& c);

// Positions where `pat` occurs in `w` as a contiguous subword, ascending.
std::vector<std::size_t> occurrences(const Word& w, const Word& pat);
bool contains(const Word& w, const Word& pat);

// Deg-lex: compare by degree first, then letter by letter; rank 0 is the
// greatest generator, so a smaller rank wins the lexicographic step.
// Returns <0 if u < v, 0 if equal, >0 if u > v.
int cmp_deglex(const Word& u, const Word& v);

inline bool deglex_less(const Word& u, const Word& v) { return cmp_deglex(u, v) < 0; }
inline bool deglex_greater(const Word& u, const Word& v) { return cmp_deglex(u, v) > 0; }

// Comparator for descending storage (leading term first).
struct WordDegLexDesc {
    bool operator()(const Word& a, const Word& b) const { return cmp_deglex(a, b) > 0; }
};
// Comparator for ascending agenda/report order.
struct WordDegLexAsc {
    bool operator()(const Word& a, const Word& b) const { return cmp_deglex(a, b) < 0; }
};

// An ordered alphabet. The constructor takes generator names in descending
// order: names[0] is the greatest generator. Names must be unique, nonempty
// identifiers ([A-Za-z_][A-Za-z0-9_]*).
class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names_descending);

    std::size_t size() const { return names_.size(); }
    const std::string& name(Gen g) const;
    const std::vector<std::string>& names() const { return names_; }

    std::optional<Gen> find(const std::string& name) const;
    Gen require(const std::string& name) const; // input_error if unknown

    Word word(const std::vector<std::string>& letter_names) const;
    bool valid(const Word& w) const;

    // "x*y*x" for words, "1" for the empty word.
    std::string render(const Word& w) const;

    bool operator==(const Alphabet& o) const { return names_ == o.names_; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, Gen> index_;
};

bool is_identifier(const std::string& s);

} // namespace gsx

#endif
