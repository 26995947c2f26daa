#ifndef GSX_CONDITIONS_HPP
#define GSX_CONDITIONS_HPP

#include <tuple>

#include "gsx/bimodule.hpp"
#include "gsx/composition.hpp"
#include "gsx/gsb.hpp"

namespace gsx {

// A factor-set symbol: (u) for a relation u, or a pair symbol (x_p, x_q).
struct FactorSymbol {
    enum class Kind { Relation, Pair };
    Kind kind;
    std::string first;  // relation name, or first generator of the pair
    std::string second; // empty for relation symbols

    static FactorSymbol relation(std::string name) {
        return {Kind::Relation, std::move(name), {}};
    }
    static FactorSymbol pair(std::string p, std::string q) {
        return {Kind::Pair, std::move(p), std::move(q)};
    }

    std::string render() const; // "(u1)" or "(x2,x1)"

    friend bool operator<(const FactorSymbol& a, const FactorSymbol& b) {
        return std::tie(a.kind, a.first, a.second) < std::tie(b.kind, b.first, b.second);
    }
    friend bool operator==(const FactorSymbol& a, const FactorSymbol& b) {
        return a.kind == b.kind && a.first == b.first && a.second == b.second;
    }
};

// A formal k-linear combination of triples a * (sym) * b with irreducible
// context words. This is where the extension conditions g live.
class BimoduleExpr {
public:
    struct Triple {
        Word left;
        FactorSymbol sym;
        Word right;

        friend bool operator<(const Triple& a, const Triple& b) {
            if (a.sym < b.sym || b.sym < a.sym)
                return a.sym < b.sym;
            int c = cmp_deglex(a.left, b.left);
            if (c != 0)
                return c < 0;
            return cmp_deglex(a.right, b.right) < 0;
        }
        friend bool operator==(const Triple& a, const Triple& b) {
            return a.sym == b.sym && a.left == b.left && a.right == b.right;
        }
    };
    using TermMap = std::map<Triple, Scalar>;

    explicit BimoduleExpr(const Field& f) : field_(f) {}

    const Field& field() const { return field_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(Word left, FactorSymbol sym, Word right, const Scalar& c);

    BimoduleExpr operator+(const BimoduleExpr& o) const;
    BimoduleExpr operator-(const BimoduleExpr& o) const;
    BimoduleExpr scaled(const Scalar& c) const;

    // Scaled so the first stored coefficient is 1; zero stays zero.
    BimoduleExpr canonical() const;

    bool operator==(const BimoduleExpr& o) const {
        return field_ == o.field_ && terms_ == o.terms_;
    }

    // "x*(u1) - (u1)*x" (empty context words are omitted).
    std::string render(const Alphabet& ab) const;

private:
    Field field_;
    TermMap terms_;
};

// One extension condition, attached to the composition it came from.
struct NamedCondition {
    std::string left_name;
    std::string right_name;
    Word w;
    BimoduleExpr expr;    // nonzero, canonical
    bool self_overlap;    // the R-composition value was identically zero

    std::string describe(const Alphabet& ab) const; // "(u1,u1) at w=x*x*x"
};

struct DeriveResult {
    std::vector<NamedCondition> conditions;
    std::size_t dropped_zero = 0;        // compositions whose condition vanished
    bool auto_minimized = false;
    std::vector<std::string> removed;    // relations dropped by auto-minimize
    Presentation presentation;           // the (minimal) presentation actually used
};

// For every composition of the (minimal) basis, reduces its value to obtain
// the division certificate and emits the symbolic obstruction
//   g = sum_i alpha_i a_i (u_i') b_i - ((u1) c - d (u2)),
// with every context word replaced by its normal form (expanded linearly).
// Requires a basis; auto-minimizes non-minimal input.
DeriveResult derive_conditions(const Presentation& p);

enum class PairConvention {
    None,          // keep pair symbols as written
    Antisymmetric, // (x_p,x_q) = -(x_q,x_p), (x_p,x_p) = 0
};

// Rewrites relation symbols of a presentation whose leading words all have
// degree two into pair symbols (x_p, x_q), applying the convention.
NamedCondition expand_pair_symbols(const NamedCondition& cond, const Presentation& p,
                                   PairConvention convention);

// Bilinear expansion of a generalized pair symbol whose slots are linear
// combinations of generators, normalized by the convention. Building block
// for instantiating pair-style condition formulas.
BimoduleExpr expand_pair_bilinear(const Field& f, const Alphabet& ab, const Word& left_ctx,
                                  const std::vector<std::pair<Scalar, std::string>>& first,
                                  const std::vector<std::pair<Scalar, std::string>>& second,
                                  const Word& right_ctx, const Scalar& coeff,
                                  PairConvention convention);

// Evaluates the expression in M: each triple a*(sym)*b applies the left
// action of a and right action of b to the assigned vector. Linear in the
// assignment.
Vec specialize(const BimoduleExpr& expr, const BimoduleSpec& m, const Alphabet& ab,
               const std::map<FactorSymbol, Vec>& assignment);

enum class SpanRelation { Equal, AContainsB, BContainsA, Incomparable };

// Compares k-linear spans inside the free module on triples, by exact row
// reduction.
SpanRelation conditions_equal_span(const std::vector<BimoduleExpr>& a,
                                   const std::vector<BimoduleExpr>& b);

} // namespace gsx

#endif
