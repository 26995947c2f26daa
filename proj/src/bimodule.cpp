#include "gsx/bimodule.hpp"

namespace gsx {

void BimoduleSpec::validate(const Alphabet& ab, const Field& f) const {
    if (basis.empty())
        throw input_error("module basis is empty");
    for (const auto& n : basis)
        if (!is_identifier(n))
            throw input_error("module basis name '" + n + "' is not an identifier");
    auto check_side = [&](const std::map<std::string, Mat>& side, const char* which) {
        for (std::size_t g = 0; g < ab.size(); ++g) {
            auto it = side.find(ab.name(static_cast<Gen>(g)));
            if (it == side.end())
                throw input_error(std::string("module: missing ") + which + " action for generator '" +
                                  ab.name(static_cast<Gen>(g)) + "'");
            const Mat& m = it->second;
            if (m.size() != basis.size())
                throw input_error(std::string("module: ") + which + " action matrix for '" + it->first +
                                  "' has wrong row count");
            for (const auto& row : m) {
                if (row.size() != basis.size())
                    throw input_error(std::string("module: ") + which + " action matrix for '" +
                                      it->first + "' is not square");
                for (const auto& c : row)
                    if (c.field() != f)
                        throw input_error("module: action entry in a different coefficient field");
            }
        }
        for (const auto& [name, mat] : side)
            if (!ab.find(name))
                throw input_error("module: action for unknown generator '" + name + "'");
    };
    check_side(left, "left");
    check_side(right, "right");
}

Mat left_action(const BimoduleSpec& m, const Alphabet& ab, const Word& w, const Field& f) {
    Mat acc = identity_mat(f, m.dim());
    for (Gen g : w.letters)
        acc = mat_mul(acc, m.left.at(ab.name(g)));
    return acc;
}

Mat right_action(const BimoduleSpec& m, const Alphabet& ab, const Word& w, const Field& f) {
    // m * (x1...xt) applies R_{x1} first, so the matrix is R_{xt}...R_{x1}.
    Mat acc = identity_mat(f, m.dim());
    for (Gen g : w.letters)
        acc = mat_mul(m.right.at(ab.name(g)), acc);
    return acc;
}

Mat left_action(const BimoduleSpec& m, const Alphabet& ab, const Poly& p) {
    Mat acc = zero_mat(p.field(), m.dim(), m.dim());
    for (const auto& [w, c] : p.terms())
        acc = mat_add(acc, mat_scale(c, left_action(m, ab, w, p.field())));
    return acc;
}

Mat right_action(const BimoduleSpec& m, const Alphabet& ab, const Poly& p) {
    Mat acc = zero_mat(p.field(), m.dim(), m.dim());
    for (const auto& [w, c] : p.terms())
        acc = mat_add(acc, mat_scale(c, right_action(m, ab, w, p.field())));
    return acc;
}

Vec act_left(const BimoduleSpec& m, const Alphabet& ab, const Word& w, const Vec& v) {
    Vec r = v;
    for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
        r = mat_vec(m.left.at(ab.name(*it)), r);
    return r;
}

Vec act_right(const BimoduleSpec& m, const Alphabet& ab, const Word& w, const Vec& v) {
    Vec r = v;
    for (Gen g : w.letters)
        r = mat_vec(m.right.at(ab.name(g)), r);
    return r;
}

BimoduleReport check_bimodule(const Presentation& p, const BimoduleSpec& m) {
    m.validate(p.alphabet(), p.field());
    BimoduleReport report;
    const Alphabet& ab = p.alphabet();
    const Field& f = p.field();
    for (const auto& r : p.relations()) {
        Poly tail = r.tail();
        if (!mat_equal(left_action(m, ab, r.leading(), f), left_action(m, ab, tail))) {
            report.ok = false;
            report.violations.push_back("left action does not respect relation '" + r.name + "'");
        }
        if (!mat_equal(right_action(m, ab, r.leading(), f), right_action(m, ab, tail))) {
            report.ok = false;
            report.violations.push_back("right action does not respect relation '" + r.name + "'");
        }
    }
    for (std::size_t x = 0; x < ab.size(); ++x) {
        const Mat& lx = m.left.at(ab.name(static_cast<Gen>(x)));
        for (std::size_t y = 0; y < ab.size(); ++y) {
            const Mat& ry = m.right.at(ab.name(static_cast<Gen>(y)));
            if (!mat_equal(mat_mul(lx, ry), mat_mul(ry, lx))) {
                report.ok = false;
                report.violations.push_back("left action of '" + ab.name(static_cast<Gen>(x)) +
                                            "' does not commute with right action of '" +
                                            ab.name(static_cast<Gen>(y)) + "'");
            }
        }
    }
    return report;
}

} // namespace gsx
