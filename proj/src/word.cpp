#include "gsx/word.hpp"

#include <algorithm>

namespace gsx {

Word concat(const Word& a, const Word& b) {
    Word r;
    r.letters.reserve(a.deg() + b.deg());
    r.letters.insert(r.letters.end(), a.letters.begin(), a.letters.end());
    r.letters.insert(r.letters.end(), b.letters.begin(), b.letters.end());
    return r;
}

Word concat(const Word& a, const Word& b, const Word& c) { return concat(concat(a, b), c); }

std::vector<std::size_t> occurrences(const Word& w, const Word& pat) {
    std::vector<std::size_t> result;
    if (pat.empty() || pat.deg() > w.deg())
        return result;
    for (std::size_t i = 0; i + pat.deg() <= w.deg(); ++i) {
        if (std::equal(pat.letters.begin(), pat.letters.end(), w.letters.begin() + i))
            result.push_back(i);
    }
    return result;
}

bool contains(const Word& w, const Word& pat) {
    if (pat.empty() || pat.deg() > w.deg())
        return false;
    for (std::size_t i = 0; i + pat.deg() <= w.deg(); ++i)
        if (std::equal(pat.letters.begin(), pat.letters.end(), w.letters.begin() + i))
            return true;
    return false;
}

int cmp_deglex(const Word& u, const Word& v) {
    if (u.deg() != v.deg())
        return u.deg() < v.deg() ? -1 : 1;
    for (std::size_t i = 0; i < u.deg(); ++i) {
        if (u.letters[i] != v.letters[i])
            return u.letters[i] < v.letters[i] ? 1 : -1; // smaller rank = greater generator
    }
    return 0;
}

bool is_identifier(const std::string& s) {
    if (s.empty())
        return false;
    auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
    auto digit = [](char c) { return c >= '0' && c <= '9'; };
    if (!alpha(s[0]))
        return false;
    for (char c : s)
        if (!alpha(c) && !digit(c))
            return false;
    return true;
}

Alphabet::Alphabet(std::vector<std::string> names_descending) : names_(std::move(names_descending)) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (!is_identifier(names_[i]))
            throw input_error("generator name '" + names_[i] + "' is not an identifier");
        if (!index_.emplace(names_[i], static_cast<Gen>(i)).second)
            throw input_error("duplicate generator name '" + names_[i] + "'");
    }
}

const std::string& Alphabet::name(Gen g) const {
    if (g >= names_.size())
        throw input_error("generator rank out of range");
    return names_[g];
}

std::optional<Gen> Alphabet::find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Gen Alphabet::require(const std::string& name) const {
    auto g = find(name);
    if (!g)
        throw input_error("unknown generator '" + name + "'");
    return *g;
}

Word Alphabet::word(const std::vector<std::string>& letter_names) const {
    Word w;
    w.letters.reserve(letter_names.size());
    for (const auto& n : letter_names)
        w.letters.push_back(require(n));
    return w;
}

bool Alphabet::valid(const Word& w) const {
    return std::all_of(w.letters.begin(), w.letters.end(),
                       [&](Gen g) { return g < names_.size(); });
}

std::string Alphabet::render(const Word& w) const {
    if (w.empty())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < w.deg(); ++i) {
        if (i)
            out += '*';
        out += name(w.letters[i]);
    }
    return out;
}

} // namespace gsx
