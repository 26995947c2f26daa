#include "gsx/finite.hpp"

namespace gsx {

Alphabet FiniteAlgebraSpec::algebra_alphabet() const { return Alphabet(basis); }

void FiniteAlgebraSpec::validate() const {
    Alphabet ab = algebra_alphabet(); // checks names
    std::size_t n = dim();
    if (products.size() != n)
        throw input_error("products table has wrong row count");
    for (std::size_t p = 0; p < n; ++p) {
        if (products[p].size() != n)
            throw input_error("products table row for '" + basis[p] + "' has wrong length");
        for (std::size_t q = 0; q < n; ++q) {
            if (products[p][q].size() != n)
                throw input_error("product [" + basis[p] + " " + basis[q] + "] has wrong dimension");
            for (const auto& c : products[p][q])
                if (c.field() != field)
                    throw input_error("product entry in a different coefficient field");
        }
    }
    module.validate(ab, field);
    if (factor.size() != n)
        throw input_error("factor set has wrong row count");
    for (std::size_t p = 0; p < n; ++p) {
        if (factor[p].size() != n)
            throw input_error("factor set row for '" + basis[p] + "' has wrong length");
        for (std::size_t q = 0; q < n; ++q)
            if (factor[p][q].size() != module.dim())
                throw input_error("factor value (" + basis[p] + "," + basis[q] +
                                  ") has wrong dimension");
    }
    // Associativity of the structure constants.
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r) {
                Vec lhs = zero_vec(field, n); // [[b_p b_q] b_r]
                Vec rhs = zero_vec(field, n); // [b_p [b_q b_r]]
                for (std::size_t s = 0; s < n; ++s) {
                    lhs = add_vec(lhs, scale_vec(products[p][q][s], products[s][r]));
                    rhs = add_vec(rhs, scale_vec(products[q][r][s], products[p][s]));
                }
                if (lhs != rhs)
                    throw input_error("structure constants are not associative at (" + basis[p] +
                                      "," + basis[q] + "," + basis[r] + ")");
            }
}

BimoduleReport check_finite_module(const FiniteAlgebraSpec& spec) {
    BimoduleReport report;
    std::size_t n = spec.dim();
    std::size_t k = spec.module.dim();
    auto L = [&](std::size_t p) -> const Mat& { return spec.module.left.at(spec.basis[p]); };
    auto R = [&](std::size_t p) -> const Mat& { return spec.module.right.at(spec.basis[p]); };
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            Mat lsum = zero_mat(spec.field, k, k);
            Mat rsum = zero_mat(spec.field, k, k);
            for (std::size_t i = 0; i < n; ++i) {
                lsum = mat_add(lsum, mat_scale(spec.products[p][q][i], L(i)));
                rsum = mat_add(rsum, mat_scale(spec.products[p][q][i], R(i)));
            }
            if (!mat_equal(mat_mul(L(p), L(q)), lsum)) {
                report.ok = false;
                report.violations.push_back("left action is not multiplicative at (" +
                                            spec.basis[p] + "," + spec.basis[q] + ")");
            }
            if (!mat_equal(mat_mul(R(q), R(p)), rsum)) {
                report.ok = false;
                report.violations.push_back("right action is not multiplicative at (" +
                                            spec.basis[p] + "," + spec.basis[q] + ")");
            }
            if (!mat_equal(mat_mul(L(p), R(q)), mat_mul(R(q), L(p)))) {
                report.ok = false;
                report.violations.push_back("left action of '" + spec.basis[p] +
                                            "' does not commute with right action of '" +
                                            spec.basis[q] + "'");
            }
        }
    return report;
}

std::vector<CocycleViolation> cocycle_check(const FiniteAlgebraSpec& spec) {
    std::vector<CocycleViolation> out;
    std::size_t n = spec.dim();
    auto L = [&](std::size_t p) -> const Mat& { return spec.module.left.at(spec.basis[p]); };
    auto R = [&](std::size_t p) -> const Mat& { return spec.module.right.at(spec.basis[p]); };
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q)
            for (std::size_t r = 0; r < n; ++r) {
                Vec v = mat_vec(L(p), spec.factor[q][r]);                 // b_p (b_q, b_r)
                v = sub_vec(v, mat_vec(R(r), spec.factor[p][q]));         // - (b_p,b_q) b_r
                for (std::size_t i = 0; i < n; ++i) {
                    v = sub_vec(v, scale_vec(spec.products[p][q][i], spec.factor[i][r]));
                    v = add_vec(v, scale_vec(spec.products[q][r][i], spec.factor[p][i]));
                }
                if (!is_zero_vec(v))
                    out.push_back({p, q, r, std::move(v)});
            }
    return out;
}

namespace {

// Element of M + B in coordinates.
struct Elem {
    Vec m;
    Vec b;
};

Elem ext_product(const FiniteAlgebraSpec& spec, const Elem& x, const Elem& y) {
    std::size_t n = spec.dim();
    Elem r{zero_vec(spec.field, spec.module.dim()), zero_vec(spec.field, n)};
    // m b' + b m'
    for (std::size_t q = 0; q < n; ++q)
        if (!y.b[q].is_zero())
            r.m = add_vec(r.m, scale_vec(y.b[q], mat_vec(spec.module.right.at(spec.basis[q]), x.m)));
    for (std::size_t p = 0; p < n; ++p)
        if (!x.b[p].is_zero())
            r.m = add_vec(r.m, scale_vec(x.b[p], mat_vec(spec.module.left.at(spec.basis[p]), y.m)));
    // (b, b') and b b'
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            Scalar c = x.b[p] * y.b[q];
            if (c.is_zero())
                continue;
            r.m = add_vec(r.m, scale_vec(c, spec.factor[p][q]));
            r.b = add_vec(r.b, scale_vec(c, spec.products[p][q]));
        }
    return r;
}

} // namespace

bool associativity_check(const FiniteAlgebraSpec& spec) {
    std::size_t n = spec.dim();
    std::size_t k = spec.module.dim();
    std::vector<Elem> basis_elems;
    for (std::size_t j = 0; j < k; ++j) {
        Elem e{zero_vec(spec.field, k), zero_vec(spec.field, n)};
        e.m[j] = Scalar::one(spec.field);
        basis_elems.push_back(std::move(e));
    }
    for (std::size_t i = 0; i < n; ++i) {
        Elem e{zero_vec(spec.field, k), zero_vec(spec.field, n)};
        e.b[i] = Scalar::one(spec.field);
        basis_elems.push_back(std::move(e));
    }
    for (const auto& x : basis_elems)
        for (const auto& y : basis_elems)
            for (const auto& z : basis_elems) {
                Elem lhs = ext_product(spec, ext_product(spec, x, y), z);
                Elem rhs = ext_product(spec, x, ext_product(spec, y, z));
                if (lhs.m != rhs.m || lhs.b != rhs.b)
                    return false;
            }
    return true;
}

Presentation table_presentation(const FiniteAlgebraSpec& spec) {
    Alphabet ab = spec.algebra_alphabet();
    std::vector<std::pair<std::string, Poly>> rels;
    std::size_t n = spec.dim();
    for (std::size_t p = 0; p < n; ++p)
        for (std::size_t q = 0; q < n; ++q) {
            Poly poly(spec.field, Word({static_cast<Gen>(p), static_cast<Gen>(q)}));
            for (std::size_t i = 0; i < n; ++i)
                poly.add_term(Word({static_cast<Gen>(i)}), -spec.products[p][q][i]);
            rels.emplace_back("t." + spec.basis[p] + "." + spec.basis[q], std::move(poly));
        }
    return Presentation(std::move(ab), spec.field, false, std::move(rels));
}

std::map<std::string, Vec> table_assignment(const FiniteAlgebraSpec& spec) {
    std::map<std::string, Vec> out;
    for (std::size_t p = 0; p < spec.dim(); ++p)
        for (std::size_t q = 0; q < spec.dim(); ++q)
            out.emplace("t." + spec.basis[p] + "." + spec.basis[q], spec.factor[p][q]);
    return out;
}

BimoduleSpec table_module(const FiniteAlgebraSpec& spec) { return spec.module; }

} // namespace gsx
