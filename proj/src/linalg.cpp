#include "gsx/linalg.hpp"

namespace gsx {

Vec zero_vec(const Field& f, std::size_t n) { return Vec(n, Scalar::zero(f)); }

Mat zero_mat(const Field& f, std::size_t rows, std::size_t cols) {
    return Mat(rows, zero_vec(f, cols));
}

Mat identity_mat(const Field& f, std::size_t n) {
    Mat m = zero_mat(f, n, n);
    for (std::size_t i = 0; i < n; ++i)
        m[i][i] = Scalar::one(f);
    return m;
}

bool is_zero_vec(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero())
            return false;
    return true;
}

Vec add_vec(const Vec& a, const Vec& b) {
    if (a.size() != b.size())
        throw input_error("vector size mismatch");
    Vec r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] += b[i];
    return r;
}

Vec sub_vec(const Vec& a, const Vec& b) { return add_vec(a, scale_vec(a.empty() ? Scalar() : -Scalar::one(a[0].field()), b)); }

Vec scale_vec(const Scalar& c, const Vec& v) {
    Vec r = v;
    for (auto& x : r)
        x *= c;
    return r;
}

Mat mat_mul(const Mat& a, const Mat& b) {
    if (a.empty() || b.empty())
        return {};
    std::size_t n = a.size(), k = b.size(), m = b[0].size();
    if (a[0].size() != k)
        throw input_error("matrix size mismatch in product");
    Field f = a[0][0].field();
    Mat r = zero_mat(f, n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t].is_zero())
                continue;
            for (std::size_t j = 0; j < m; ++j)
                r[i][j] += a[i][t] * b[t][j];
        }
    return r;
}

Vec mat_vec(const Mat& m, const Vec& v) {
    if (m.empty())
        return {};
    if (m[0].size() != v.size())
        throw input_error("matrix/vector size mismatch");
    Field f = m[0][0].field();
    Vec r = zero_vec(f, m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            r[i] += m[i][j] * v[j];
    return r;
}

Mat mat_add(const Mat& a, const Mat& b) {
    if (a.size() != b.size())
        throw input_error("matrix size mismatch in sum");
    Mat r = a;
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = add_vec(r[i], b[i]);
    return r;
}

Mat mat_scale(const Scalar& c, const Mat& m) {
    Mat r = m;
    for (auto& row : r)
        row = scale_vec(c, row);
    return r;
}

bool mat_equal(const Mat& a, const Mat& b) {
    if (a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i])
            return false;
    return true;
}

std::size_t row_reduce(Mat& m) {
    if (m.empty())
        return 0;
    std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t pivot = rows;
        for (std::size_t r = rank; r < rows; ++r)
            if (!m[r][col].is_zero()) {
                pivot = r;
                break;
            }
        if (pivot == rows)
            continue;
        std::swap(m[rank], m[pivot]);
        Scalar inv = m[rank][col].inverse();
        m[rank] = scale_vec(inv, m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][col].is_zero())
                continue;
            Scalar factor = m[r][col];
            for (std::size_t c = 0; c < cols; ++c)
                m[r][c] -= factor * m[rank][c];
        }
        ++rank;
    }
    return rank;
}

std::size_t rank(Mat m) { return row_reduce(m); }

bool in_row_span(const Mat& rows, const Vec& v) {
    if (is_zero_vec(v))
        return true;
    Mat m = rows;
    std::size_t r0 = row_reduce(m);
    m.push_back(v);
    return row_reduce(m) == r0;
}

Mat nullspace(const Mat& m, const Field& f, std::size_t cols) {
    Mat r = m;
    std::size_t rk = row_reduce(r);
    // Pivot column of each reduced row.
    std::vector<std::size_t> pivot_col(rk);
    std::vector<bool> is_pivot(cols, false);
    for (std::size_t i = 0; i < rk; ++i) {
        std::size_t c = 0;
        while (c < cols && r[i][c].is_zero())
            ++c;
        pivot_col[i] = c;
        is_pivot[c] = true;
    }
    Mat basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free])
            continue;
        Vec v = zero_vec(f, cols);
        v[free] = Scalar::one(f);
        for (std::size_t i = 0; i < rk; ++i)
            v[pivot_col[i]] = -r[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::string render_vec(const Vec& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            out += ", ";
        out += v[i].render();
    }
    out += "]";
    return out;
}

} // namespace gsx
