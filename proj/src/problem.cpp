#include "gsx/problem.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

namespace gsx {

using nlohmann::json;

const char* const kVersion = "0.1.0";

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
    throw input_error(path.empty() ? msg : path + ": " + msg);
}

std::string sub(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

std::string idx(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

void check_keys(const json& j, const std::string& path, const std::set<std::string>& allowed) {
    if (!j.is_object())
        fail(path, "expected an object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (!allowed.count(it.key()))
            fail(sub(path, it.key()), "unknown key");
}

const json& require_key(const json& j, const std::string& path, const std::string& key) {
    auto it = j.find(key);
    if (it == j.end())
        fail(sub(path, key), "missing required key");
    return *it;
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string())
        fail(path, "expected a string");
    return j.get<std::string>();
}

bool get_bool(const json& j, const std::string& path) {
    if (!j.is_boolean())
        fail(path, "expected a boolean");
    return j.get<bool>();
}

std::size_t get_size(const json& j, const std::string& path) {
    if (!j.is_number_integer() || j.get<long long>() < 0)
        fail(path, "expected a nonnegative integer");
    return static_cast<std::size_t>(j.get<long long>());
}

Scalar parse_scalar(const Field& f, const json& j, const std::string& path) {
    try {
        if (j.is_number_integer())
            return Scalar(f, BigInt(j.get<long long>()));
        if (j.is_string())
            return Scalar::parse(f, j.get<std::string>());
    } catch (const input_error& e) {
        fail(path, e.what());
    }
    fail(path, "expected an exact numeric literal (integer or \"p/q\" string)");
}

Vec parse_vec(const Field& f, const json& j, const std::string& path, std::size_t expect) {
    if (!j.is_array())
        fail(path, "expected an array");
    if (j.size() != expect)
        fail(path, "expected " + std::to_string(expect) + " entries, got " +
                       std::to_string(j.size()));
    Vec v;
    v.reserve(expect);
    for (std::size_t i = 0; i < j.size(); ++i)
        v.push_back(parse_scalar(f, j[i], idx(path, i)));
    return v;
}

Mat parse_mat(const Field& f, const json& j, const std::string& path, std::size_t n) {
    if (!j.is_array())
        fail(path, "expected a matrix (array of rows)");
    if (j.size() != n)
        fail(path, "expected " + std::to_string(n) + " rows, got " + std::to_string(j.size()));
    Mat m;
    for (std::size_t i = 0; i < n; ++i)
        m.push_back(parse_vec(f, j[i], idx(path, i), n));
    return m;
}

Word parse_word(const Alphabet& ab, const json& j, const std::string& path) {
    if (!j.is_array())
        fail(path, "expected an array of generator names");
    Word w;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string name = get_string(j[i], idx(path, i));
        auto g = ab.find(name);
        if (!g)
            fail(idx(path, i), "unknown generator '" + name + "'");
        w.letters.push_back(*g);
    }
    return w;
}

Poly parse_poly(const Field& f, const Alphabet& ab, bool unital, const json& j,
                const std::string& path) {
    if (!j.is_array())
        fail(path, "expected an array of [coefficient, word] terms");
    std::vector<std::pair<Scalar, Word>> terms;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const json& t = j[i];
        if (!t.is_array() || t.size() != 2)
            fail(idx(path, i), "expected a [coefficient, word] pair");
        Scalar c = parse_scalar(f, t[0], idx(path, i) + "[0]");
        Word w = parse_word(ab, t[1], idx(path, i) + "[1]");
        if (w.empty() && !unital)
            fail(idx(path, i) + "[1]", "the empty word is not allowed in non-unital mode");
        terms.emplace_back(std::move(c), std::move(w));
    }
    return Poly::normalize(f, terms, unital);
}

BimoduleSpec parse_module(const Field& f, const Alphabet& ab, const json& j,
                          const std::string& path) {
    check_keys(j, path, {"basis", "left", "right"});
    BimoduleSpec m;
    const json& basis = require_key(j, path, "basis");
    if (!basis.is_array() || basis.empty())
        fail(sub(path, "basis"), "expected a nonempty array of names");
    for (std::size_t i = 0; i < basis.size(); ++i)
        m.basis.push_back(get_string(basis[i], idx(sub(path, "basis"), i)));
    auto parse_side = [&](const char* key, std::map<std::string, Mat>& out) {
        const json& side = require_key(j, path, key);
        if (!side.is_object())
            fail(sub(path, key), "expected an object of generator -> matrix");
        for (auto it = side.begin(); it != side.end(); ++it)
            out[it.key()] = parse_mat(f, it.value(), sub(sub(path, key), it.key()), m.basis.size());
    };
    parse_side("left", m.left);
    parse_side("right", m.right);
    try {
        m.validate(ab, f);
    } catch (const input_error& e) {
        fail(path, e.what());
    }
    return m;
}

// Line/column of a byte offset, for syntax errors.
std::pair<std::size_t, std::size_t> line_col(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

} // namespace

std::size_t ProblemFile::effective_max_deg(const Presentation& p) const {
    if (options.max_deg)
        return *options.max_deg;
    return 1 + 2 * p.max_leading_deg();
}

std::size_t ProblemFile::effective_max_iter() const {
    return options.max_iter ? *options.max_iter : 50;
}

ProblemFile parse_problem(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw input_error("syntax error at line " + std::to_string(line) + ", column " +
                          std::to_string(col) + ": " + e.what());
    }
    if (!j.is_object())
        fail("", "problem file must be a JSON object");

    ProblemFile pf;

    const json& jfield = require_key(j, "", "field");
    if (jfield.is_string()) {
        if (jfield.get<std::string>() != "Q")
            fail("field", "expected \"Q\" or {\"gf\": p}");
        pf.field = Field::rationals();
    } else if (jfield.is_object()) {
        check_keys(jfield, "field", {"gf"});
        const json& p = require_key(jfield, "field", "gf");
        BigInt modulus;
        if (p.is_number_integer())
            modulus = BigInt(p.get<long long>());
        else if (p.is_string())
            modulus = BigInt(p.get<std::string>());
        else
            fail("field.gf", "expected an integer");
        try {
            pf.field = Field::prime(modulus);
        } catch (const input_error& e) {
            fail("field.gf", e.what());
        }
    } else {
        fail("field", "expected \"Q\" or {\"gf\": p}");
    }

    std::string mode = get_string(require_key(j, "", "mode"), "mode");
    if (mode == "presentation")
        pf.mode = ProblemFile::Mode::Presentation;
    else if (mode == "finite")
        pf.mode = ProblemFile::Mode::Finite;
    else
        fail("mode", "expected \"presentation\" or \"finite\"");

    if (pf.mode == ProblemFile::Mode::Presentation) {
        check_keys(j, "",
                   {"field", "mode", "alphabet", "unital", "relations", "module", "factor",
                    "input", "options"});
        const json& jab = require_key(j, "", "alphabet");
        if (!jab.is_array() || jab.empty())
            fail("alphabet", "expected a nonempty array of generator names (descending order)");
        std::vector<std::string> names;
        for (std::size_t i = 0; i < jab.size(); ++i)
            names.push_back(get_string(jab[i], idx("alphabet", i)));
        Alphabet ab;
        try {
            ab = Alphabet(std::move(names));
        } catch (const input_error& e) {
            fail("alphabet", e.what());
        }
        bool unital = false;
        if (auto it = j.find("unital"); it != j.end())
            unital = get_bool(*it, "unital");

        const json& jrels = require_key(j, "", "relations");
        if (!jrels.is_array())
            fail("relations", "expected an array");
        std::vector<std::pair<std::string, Poly>> rels;
        for (std::size_t i = 0; i < jrels.size(); ++i) {
            const std::string rpath = idx("relations", i);
            check_keys(jrels[i], rpath, {"name", "terms"});
            std::string name = get_string(require_key(jrels[i], rpath, "name"), sub(rpath, "name"));
            Poly poly = parse_poly(pf.field, ab, unital, require_key(jrels[i], rpath, "terms"),
                                   sub(rpath, "terms"));
            rels.emplace_back(std::move(name), std::move(poly));
        }
        try {
            pf.presentation = Presentation(ab, pf.field, unital, std::move(rels));
        } catch (const input_error& e) {
            fail("relations", e.what());
        }

        if (auto it = j.find("module"); it != j.end())
            pf.module = parse_module(pf.field, ab, *it, "module");

        if (auto it = j.find("input"); it != j.end()) {
            check_keys(*it, "input", {"terms"});
            pf.input = parse_poly(pf.field, ab, unital, require_key(*it, "input", "terms"),
                                  "input.terms");
        }
    } else {
        check_keys(j, "",
                   {"field", "mode", "basis", "products", "module", "factor", "input", "options"});
        FiniteAlgebraSpec spec;
        spec.field = pf.field;
        const json& jbasis = require_key(j, "", "basis");
        if (!jbasis.is_array() || jbasis.empty())
            fail("basis", "expected a nonempty array of names (descending order)");
        for (std::size_t i = 0; i < jbasis.size(); ++i)
            spec.basis.push_back(get_string(jbasis[i], idx("basis", i)));
        std::size_t n = spec.basis.size();
        const json& jprod = require_key(j, "", "products");
        if (!jprod.is_array() || jprod.size() != n)
            fail("products", "expected " + std::to_string(n) + " rows");
        for (std::size_t p = 0; p < n; ++p) {
            if (!jprod[p].is_array() || jprod[p].size() != n)
                fail(idx("products", p), "expected " + std::to_string(n) + " entries");
            std::vector<Vec> row;
            for (std::size_t q = 0; q < n; ++q)
                row.push_back(parse_vec(pf.field, jprod[p][q], idx(idx("products", p), q), n));
            spec.products.push_back(std::move(row));
        }
        Alphabet ab;
        try {
            ab = Alphabet(spec.basis);
        } catch (const input_error& e) {
            fail("basis", e.what());
        }
        spec.module = parse_module(pf.field, ab, require_key(j, "", "module"), "module");
        // Factor defaults to zero (the trivial extension) when absent.
        spec.factor.assign(n, std::vector<Vec>(n, zero_vec(pf.field, spec.module.dim())));
        if (auto it = j.find("input"); it != j.end()) {
            check_keys(*it, "input", {"terms"});
            pf.input = parse_poly(pf.field, ab, false, require_key(*it, "input", "terms"),
                                  "input.terms");
        }
        pf.finite = std::move(spec);
    }

    if (auto it = j.find("factor"); it != j.end()) {
        const json& jf = *it;
        check_keys(jf, "factor", {"symbolic", "pairs", "assign", "assign_pairs"});
        if (jf.size() != 1)
            fail("factor", "expected exactly one of symbolic/pairs/assign/assign_pairs");
        if (auto s = jf.find("symbolic"); s != jf.end()) {
            if (!get_bool(*s, "factor.symbolic"))
                fail("factor.symbolic", "must be true when present");
            pf.factor.mode = FactorBlock::Mode::Symbolic;
        } else if (auto ps = jf.find("pairs"); ps != jf.end()) {
            check_keys(*ps, "factor.pairs", {"antisymmetric"});
            pf.factor.mode = FactorBlock::Mode::Pairs;
            if (auto a = ps->find("antisymmetric"); a != ps->end())
                pf.factor.antisymmetric = get_bool(*a, "factor.pairs.antisymmetric");
        } else if (auto as = jf.find("assign"); as != jf.end()) {
            if (pf.mode != ProblemFile::Mode::Presentation)
                fail("factor.assign", "only valid in presentation mode (use assign_pairs)");
            if (!pf.module)
                fail("factor.assign", "requires a module block");
            if (!as->is_object())
                fail("factor.assign", "expected an object of relation -> vector");
            pf.factor.mode = FactorBlock::Mode::Assign;
            for (auto a = as->begin(); a != as->end(); ++a) {
                if (!pf.presentation->find(a.key()))
                    fail(sub("factor.assign", a.key()), "unknown relation");
                pf.factor.assign[a.key()] = parse_vec(pf.field, a.value(),
                                                      sub("factor.assign", a.key()),
                                                      pf.module->dim());
            }
            for (const auto& r : pf.presentation->relations())
                if (!pf.factor.assign.count(r.name))
                    fail("factor.assign", "missing value for relation '" + r.name + "'");
        } else {
            auto ap = jf.find("assign_pairs");
            if (pf.mode != ProblemFile::Mode::Finite)
                fail("factor.assign_pairs", "only valid in finite mode (use assign)");
            std::size_t n = pf.finite->dim();
            if (!ap->is_array() || ap->size() != n)
                fail("factor.assign_pairs", "expected " + std::to_string(n) + " rows");
            pf.factor.mode = FactorBlock::Mode::AssignPairs;
            pf.factor.assign_pairs.clear();
            for (std::size_t p = 0; p < n; ++p) {
                if (!(*ap)[p].is_array() || (*ap)[p].size() != n)
                    fail(idx("factor.assign_pairs", p),
                         "expected " + std::to_string(n) + " entries");
                std::vector<Vec> row;
                for (std::size_t q = 0; q < n; ++q)
                    row.push_back(parse_vec(pf.field, (*ap)[p][q],
                                            idx(idx("factor.assign_pairs", p), q),
                                            pf.finite->module.dim()));
                pf.factor.assign_pairs.push_back(std::move(row));
            }
            pf.finite->factor = pf.factor.assign_pairs;
        }
    }
    if (pf.mode == ProblemFile::Mode::Finite) {
        try {
            pf.finite->validate();
        } catch (const input_error& e) {
            fail("", e.what());
        }
    }

    if (auto it = j.find("options"); it != j.end()) {
        check_keys(*it, "options", {"max_deg", "max_iter"});
        if (auto d = it->find("max_deg"); d != it->end())
            pf.options.max_deg = get_size(*d, "options.max_deg");
        if (auto d = it->find("max_iter"); d != it->end())
            pf.options.max_iter = get_size(*d, "options.max_iter");
    }
    return pf;
}

namespace {

json scalar_json(const Scalar& s) { return s.render(); }

json vec_json(const Vec& v) {
    json a = json::array();
    for (const auto& c : v)
        a.push_back(scalar_json(c));
    return a;
}

json mat_json(const Mat& m) {
    json a = json::array();
    for (const auto& row : m)
        a.push_back(vec_json(row));
    return a;
}

json word_json(const Alphabet& ab, const Word& w) {
    json a = json::array();
    for (Gen g : w.letters)
        a.push_back(ab.name(g));
    return a;
}

json poly_json(const Alphabet& ab, const Poly& p) {
    json a = json::array();
    for (const auto& [w, c] : p.terms())
        a.push_back(json::array({scalar_json(c), word_json(ab, w)}));
    return a;
}

json field_json(const Field& f) {
    if (f.is_rational())
        return "Q";
    return json{{"gf", f.modulus().str()}};
}

json module_json(const BimoduleSpec& m) {
    json left = json::object(), right = json::object();
    for (const auto& [k, v] : m.left)
        left[k] = mat_json(v);
    for (const auto& [k, v] : m.right)
        right[k] = mat_json(v);
    return json{{"basis", m.basis}, {"left", left}, {"right", right}};
}

} // namespace

std::string render_problem(const ProblemFile& pf) {
    json j;
    j["field"] = field_json(pf.field);
    if (pf.mode == ProblemFile::Mode::Presentation) {
        j["mode"] = "presentation";
        const Presentation& p = *pf.presentation;
        j["alphabet"] = p.alphabet().names();
        j["unital"] = p.unital();
        json rels = json::array();
        for (const auto& r : p.relations())
            rels.push_back(json{{"name", r.name}, {"terms", poly_json(p.alphabet(), r.poly)}});
        j["relations"] = std::move(rels);
        if (pf.module)
            j["module"] = module_json(*pf.module);
        if (pf.input)
            j["input"] = json{{"terms", poly_json(p.alphabet(), *pf.input)}};
    } else {
        j["mode"] = "finite";
        const FiniteAlgebraSpec& spec = *pf.finite;
        j["basis"] = spec.basis;
        json prods = json::array();
        for (const auto& row : spec.products) {
            json r = json::array();
            for (const auto& v : row)
                r.push_back(vec_json(v));
            prods.push_back(std::move(r));
        }
        j["products"] = std::move(prods);
        j["module"] = module_json(spec.module);
        if (pf.input)
            j["input"] = json{{"terms", poly_json(spec.algebra_alphabet(), *pf.input)}};
    }
    switch (pf.factor.mode) {
    case FactorBlock::Mode::None:
        break;
    case FactorBlock::Mode::Symbolic:
        j["factor"] = json{{"symbolic", true}};
        break;
    case FactorBlock::Mode::Pairs:
        j["factor"] = json{{"pairs", json{{"antisymmetric", pf.factor.antisymmetric}}}};
        break;
    case FactorBlock::Mode::Assign: {
        json a = json::object();
        for (const auto& [name, v] : pf.factor.assign)
            a[name] = vec_json(v);
        j["factor"] = json{{"assign", std::move(a)}};
        break;
    }
    case FactorBlock::Mode::AssignPairs: {
        json rows = json::array();
        for (const auto& row : pf.factor.assign_pairs) {
            json r = json::array();
            for (const auto& v : row)
                r.push_back(vec_json(v));
            rows.push_back(std::move(r));
        }
        j["factor"] = json{{"assign_pairs", std::move(rows)}};
        break;
    }
    }
    if (pf.options.max_deg || pf.options.max_iter) {
        json o = json::object();
        if (pf.options.max_deg)
            o["max_deg"] = *pf.options.max_deg;
        if (pf.options.max_iter)
            o["max_iter"] = *pf.options.max_iter;
        j["options"] = std::move(o);
    }
    return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Command dispatch.

namespace {

Presentation working_presentation(const ProblemFile& pf) {
    if (pf.mode == ProblemFile::Mode::Presentation)
        return *pf.presentation;
    return table_presentation(*pf.finite);
}

std::string kind_name(CompositionKind k) {
    return k == CompositionKind::Intersection ? "intersection" : "inclusion";
}

json composition_json(const Alphabet& ab, const Composition& c) {
    return json{{"kind", kind_name(c.kind)},
                {"left", c.left_name},
                {"right", c.right_name},
                {"w", word_json(ab, c.w)}};
}

json symbol_json(const FactorSymbol& s) {
    if (s.kind == FactorSymbol::Kind::Relation)
        return json{{"kind", "relation"}, {"name", s.first}};
    return json{{"kind", "pair"}, {"first", s.first}, {"second", s.second}};
}

json expr_json(const Alphabet& ab, const BimoduleExpr& e) {
    json terms = json::array();
    for (const auto& [t, c] : e.terms())
        terms.push_back(json{{"coeff", c.render()},
                             {"left", word_json(ab, t.left)},
                             {"symbol", symbol_json(t.sym)},
                             {"right", word_json(ab, t.right)}});
    return terms;
}

RunResult finish(int code, std::string text, OutputFormat fmt, const json& machine) {
    if (fmt == OutputFormat::Machine)
        return {code, machine.dump(2) + "\n"};
    if (text.empty() || text.back() != '\n')
        text += '\n';
    return {code, std::move(text)};
}

RunResult cmd_gsb_check(const ProblemFile& pf, OutputFormat fmt) {
    Presentation p = working_presentation(pf);
    GsbReport rep = is_gsb(p);
    std::ostringstream out;
    out << "GS basis: " << (rep.is_basis ? "yes" : "no")
        << ", compositions checked: " << rep.compositions_checked;
    if (!rep.is_basis)
        out << ", failures: " << rep.failures.size();
    out << "\n";
    json failures = json::array();
    for (const auto& f : rep.failures) {
        out << "  " << f.composition.describe(p.alphabet())
            << ": remainder " << f.remainder.render(p.alphabet()) << "\n";
        failures.push_back(json{{"composition", composition_json(p.alphabet(), f.composition)},
                                {"remainder", f.remainder.render(p.alphabet())}});
    }
    json machine{{"command", "gsb-check"},
                 {"is_basis", rep.is_basis},
                 {"compositions_checked", rep.compositions_checked},
                 {"failures", std::move(failures)}};
    return finish(rep.is_basis ? 0 : 1, out.str(), fmt, machine);
}

RunResult cmd_complete(const ProblemFile& pf, OutputFormat fmt) {
    Presentation p = working_presentation(pf);
    CompleteResult res = complete(p, pf.effective_max_deg(p), pf.effective_max_iter());
    const char* status = res.status == CompleteStatus::Complete          ? "complete"
                         : res.status == CompleteStatus::DegreeTruncated ? "degree-truncated"
                                                                         : "iteration-capped";
    std::ostringstream out;
    out << "status: " << status << "\n";
    out << "relations: " << res.presentation.size() << "\n";
    json rels = json::array();
    for (const auto& r : res.presentation.relations()) {
        out << r.name << ": " << r.poly.render(res.presentation.alphabet()) << "\n";
        rels.push_back(json{{"name", r.name},
                            {"poly", r.poly.render(res.presentation.alphabet())},
                            {"terms", poly_json(res.presentation.alphabet(), r.poly)}});
    }
    json machine{{"command", "complete"},
                 {"status", status},
                 {"added", res.added},
                 {"relations", std::move(rels)}};
    return finish(res.status == CompleteStatus::Complete ? 0 : 3, out.str(), fmt, machine);
}

RunResult cmd_nf(const ProblemFile& pf, OutputFormat fmt) {
    Presentation p = working_presentation(pf);
    if (!pf.input)
        throw input_error("nf requires an \"input\" polynomial block");
    ReductionTrace trace = reduce(*pf.input, p);
    std::ostringstream out;
    out << "remainder: " << trace.remainder.render(p.alphabet()) << "\n";
    out << "steps: " << trace.steps.size() << "\n";
    json steps = json::array();
    for (const auto& s : trace.steps)
        steps.push_back(json{{"alpha", s.alpha.render()},
                             {"left", word_json(p.alphabet(), s.left)},
                             {"relation", s.relation},
                             {"right", word_json(p.alphabet(), s.right)}});
    json machine{{"command", "nf"},
                 {"remainder", trace.remainder.render(p.alphabet())},
                 {"remainder_terms", poly_json(p.alphabet(), trace.remainder)},
                 {"steps", std::move(steps)}};
    return finish(0, out.str(), fmt, machine);
}

RunResult cmd_irr(const ProblemFile& pf, OutputFormat fmt) {
    Presentation p = working_presentation(pf);
    if (!is_gsb(p).is_basis) {
        json machine{{"command", "irr"}, {"error", "not a Groebner-Shirshov basis"}};
        return finish(1, "GS basis: no; irr requires a Groebner-Shirshov basis\n", fmt, machine);
    }
    std::size_t max_deg = pf.effective_max_deg(p);
    std::vector<Word> words = irr(p, max_deg);
    std::ostringstream out;
    out << "irreducible words (deg <= " << max_deg << "): " << words.size() << "\n";
    json list = json::array();
    for (const auto& w : words) {
        out << p.alphabet().render(w) << "\n";
        list.push_back(word_json(p.alphabet(), w));
    }
    json machine{{"command", "irr"},
                 {"max_deg", max_deg},
                 {"count", words.size()},
                 {"words", std::move(list)}};
    return finish(0, out.str(), fmt, machine);
}

RunResult cmd_ext_conditions(const ProblemFile& pf, OutputFormat fmt) {
    Presentation p = working_presentation(pf);
    if (!is_gsb(p).is_basis) {
        json machine{{"command", "ext-conditions"}, {"error", "not a Groebner-Shirshov basis"}};
        return finish(1, "GS basis: no; ext-conditions requires a Groebner-Shirshov basis\n", fmt,
                      machine);
    }
    DeriveResult res = derive_conditions(p);
    const Presentation& pm = res.presentation;
    bool pair_lens = pf.factor.mode == FactorBlock::Mode::Pairs;
    PairConvention conv = pf.factor.antisymmetric ? PairConvention::Antisymmetric
                                                  : PairConvention::None;
    std::ostringstream out;
    json jconds = json::array();
    if (res.auto_minimized) {
        out << "warning: basis was not minimal; auto-minimized (removed:";
        for (const auto& n : res.removed)
            out << " " << n;
        out << ")\n";
    }
    out << "conditions: " << res.conditions.size() << " (trivial: " << res.dropped_zero << ")\n";
    for (const auto& cond : res.conditions) {
        NamedCondition c = pair_lens ? expand_pair_symbols(cond, pm, conv) : cond;
        out << c.describe(pm.alphabet());
        if (c.self_overlap)
            out << " [self-overlap]";
        out << ": " << c.expr.render(pm.alphabet()) << " = 0\n";
        jconds.push_back(json{{"left", c.left_name},
                              {"right", c.right_name},
                              {"w", word_json(pm.alphabet(), c.w)},
                              {"self_overlap", c.self_overlap},
                              {"rendered", c.expr.render(pm.alphabet()) + " = 0"},
                              {"terms", expr_json(pm.alphabet(), c.expr)}});
    }
    json machine{{"command", "ext-conditions"},
                 {"auto_minimized", res.auto_minimized},
                 {"removed", res.removed},
                 {"trivial", res.dropped_zero},
                 {"conditions", std::move(jconds)}};
    return finish(0, out.str(), fmt, machine);
}

RunResult cmd_ext_cocycle(const ProblemFile& pf, OutputFormat fmt) {
    if (pf.mode != ProblemFile::Mode::Finite)
        throw input_error("ext-cocycle requires a finite-mode problem");
    const FiniteAlgebraSpec& spec = *pf.finite;
    BimoduleReport mod = check_finite_module(spec);
    if (!mod.ok) {
        std::ostringstream out;
        out << "module axioms: violated\n";
        for (const auto& v : mod.violations)
            out << "  " << v << "\n";
        json machine{{"command", "ext-cocycle"}, {"module_ok", false},
                     {"module_violations", mod.violations}};
        return finish(2, out.str(), fmt, machine);
    }
    auto violations = cocycle_check(spec);
    std::size_t total = spec.dim() * spec.dim() * spec.dim();
    std::ostringstream out;
    json jv = json::array();
    if (violations.empty()) {
        out << "cocycle: ok (triples checked: " << total << ")\n";
    } else {
        out << "cocycle: violated (" << violations.size() << " of " << total << " triples)\n";
        for (const auto& v : violations) {
            out << "  (" << spec.basis[v.p] << "," << spec.basis[v.q] << "," << spec.basis[v.r]
                << "): value " << render_vec(v.value) << "\n";
            jv.push_back(json{{"p", spec.basis[v.p]},
                              {"q", spec.basis[v.q]},
                              {"r", spec.basis[v.r]},
                              {"value", vec_json(v.value)}});
        }
    }
    json machine{{"command", "ext-cocycle"},
                 {"module_ok", true},
                 {"triples_checked", total},
                 {"violations", std::move(jv)}};
    return finish(violations.empty() ? 0 : 1, out.str(), fmt, machine);
}

RunResult cmd_ext_verify(const ProblemFile& pf, OutputFormat fmt) {
    std::ostringstream out;
    if (pf.mode == ProblemFile::Mode::Finite) {
        const FiniteAlgebraSpec& spec = *pf.finite;
        BimoduleReport mod = check_finite_module(spec);
        if (!mod.ok) {
            out << "module axioms: violated\n";
            for (const auto& v : mod.violations)
                out << "  " << v << "\n";
            json machine{{"command", "ext-verify"}, {"ok", false},
                         {"module_violations", mod.violations}};
            return finish(1, out.str(), fmt, machine);
        }
        out << "module axioms: ok\n";
        auto violations = cocycle_check(spec);
        bool assoc = associativity_check(spec);
        if (!violations.empty()) {
            const auto& v = violations.front();
            out << "cocycle: violated at (" << spec.basis[v.p] << "," << spec.basis[v.q] << ","
                << spec.basis[v.r] << "): value " << render_vec(v.value) << "\n";
            out << "associativity oracle: " << (assoc ? "DISAGREES" : "agrees") << "\n";
            json machine{{"command", "ext-verify"}, {"ok", false},
                         {"cocycle_ok", false}, {"associativity_ok", assoc}};
            return finish(1, out.str(), fmt, machine);
        }
        out << "cocycle: ok (" << spec.dim() * spec.dim() * spec.dim() << " triples)\n";
        out << "associativity oracle: " << (assoc ? "agrees" : "DISAGREES") << "\n";
        if (!assoc) {
            json machine{{"command", "ext-verify"}, {"ok", false},
                         {"cocycle_ok", true}, {"associativity_ok", false}};
            return finish(1, out.str(), fmt, machine);
        }
        ExtensionAlgebra A = build_extension(spec);
        VerifyReport rep = verify_extension(A, A.working_deg);
        out << "S1: GS basis verified\n";
        out << "extension: " << (rep.ok ? "valid" : "INVALID") << " (verified to degree "
            << A.working_deg << ")\n";
        for (const auto& f : rep.failures)
            out << "  " << f << "\n";
        json machine{{"command", "ext-verify"}, {"ok", rep.ok},
                     {"cocycle_ok", true}, {"associativity_ok", true},
                     {"verified_degree", A.working_deg}, {"failures", rep.failures}};
        return finish(rep.ok ? 0 : 1, out.str(), fmt, machine);
    }

    const Presentation& p = *pf.presentation;
    if (!pf.module)
        throw input_error("ext-verify requires a module block");
    if (pf.factor.mode != FactorBlock::Mode::Assign)
        throw input_error("ext-verify requires a concrete factor assignment");
    if (!is_gsb(p).is_basis) {
        json machine{{"command", "ext-verify"}, {"error", "not a Groebner-Shirshov basis"}};
        return finish(1, "GS basis: no; ext-verify requires a Groebner-Shirshov basis\n", fmt,
                      machine);
    }
    BimoduleReport mod = check_bimodule(p, *pf.module);
    if (!mod.ok) {
        out << "bimodule: violated\n";
        for (const auto& v : mod.violations)
            out << "  " << v << "\n";
        json machine{{"command", "ext-verify"}, {"ok", false},
                     {"bimodule_violations", mod.violations}};
        return finish(1, out.str(), fmt, machine);
    }
    out << "bimodule: ok\n";
    DeriveResult derived = derive_conditions(p);
    std::map<FactorSymbol, Vec> sym;
    for (const auto& [name, v] : pf.factor.assign)
        sym.emplace(FactorSymbol::relation(name), v);
    for (const auto& cond : derived.conditions) {
        Vec v = specialize(cond.expr, *pf.module, derived.presentation.alphabet(), sym);
        if (!is_zero_vec(v)) {
            out << "condition violated at composition "
                << cond.describe(derived.presentation.alphabet()) << ": value " << render_vec(v)
                << "\n";
            json machine{{"command", "ext-verify"},
                         {"ok", false},
                         {"violated", cond.describe(derived.presentation.alphabet())},
                         {"value", vec_json(v)}};
            return finish(1, out.str(), fmt, machine);
        }
    }
    out << "conditions: " << derived.conditions.size() << " checked, all vanish\n";
    ExtensionAlgebra A = build_extension(p, *pf.module, pf.factor.assign);
    std::size_t vdeg = pf.options.max_deg ? *pf.options.max_deg : A.working_deg;
    VerifyReport rep = verify_extension(A, vdeg);
    out << "S1: GS basis verified\n";
    out << "extension: " << (rep.ok ? "valid" : "INVALID") << " (verified to degree " << vdeg
        << ")\n";
    for (const auto& f : rep.failures)
        out << "  " << f << "\n";
    json machine{{"command", "ext-verify"},
                 {"ok", rep.ok},
                 {"conditions_checked", derived.conditions.size()},
                 {"verified_degree", vdeg},
                 {"failures", rep.failures}};
    return finish(rep.ok ? 0 : 1, out.str(), fmt, machine);
}

RunResult cmd_ext_build(const ProblemFile& pf, OutputFormat) {
    ExtensionAlgebra A = [&] {
        if (pf.mode == ProblemFile::Mode::Finite)
            return build_extension(*pf.finite);
        if (!pf.module)
            throw input_error("ext-build requires a module block");
        if (pf.factor.mode != FactorBlock::Mode::Assign)
            throw input_error("ext-build requires a concrete factor assignment");
        return build_extension(*pf.presentation, *pf.module, pf.factor.assign);
    }();
    ProblemFile out;
    out.field = A.s1.field();
    out.mode = ProblemFile::Mode::Presentation;
    out.presentation = A.s1;
    // The serialized extension is a plain presentation problem; it reloads
    // and re-verifies bit-exactly.
    std::string text = render_problem(out);
    return {0, text};
}

} // namespace

RunResult run_command(const std::string& command, const ProblemFile& pf, OutputFormat fmt) {
    try {
        if (command == "gsb-check")
            return cmd_gsb_check(pf, fmt);
        if (command == "complete")
            return cmd_complete(pf, fmt);
        if (command == "nf")
            return cmd_nf(pf, fmt);
        if (command == "irr")
            return cmd_irr(pf, fmt);
        if (command == "ext-conditions")
            return cmd_ext_conditions(pf, fmt);
        if (command == "ext-cocycle")
            return cmd_ext_cocycle(pf, fmt);
        if (command == "ext-verify")
            return cmd_ext_verify(pf, fmt);
        if (command == "ext-build")
            return cmd_ext_build(pf, fmt);
        throw input_error("unknown command '" + command + "'");
    } catch (const construction_error& e) {
        return {1, std::string("error: ") + e.what() + "\n"};
    } catch (const input_error& e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    } catch (const contract_error& e) {
        return {2, std::string("error: ") + e.what() + "\n"};
    }
}

} // namespace gsx
