#ifndef GSX_LINALG_HPP
#define GSX_LINALG_HPP

#include <vector>

#include "gsx/scalar.hpp"

namespace gsx {

// Dense exact linear algebra, row-major. Sizes here are desk scale; clarity
// over asymptotics.
using Vec = std::vector<Scalar>;
using Mat = std::vector<Vec>;

Vec zero_vec(const Field& f, std::size_t n);
Mat zero_mat(const Field& f, std::size_t rows, std::size_t cols);
Mat identity_mat(const Field& f, std::size_t n);

bool is_zero_vec(const Vec& v);
Vec add_vec(const Vec& a, const Vec& b);
Vec sub_vec(const Vec& a, const Vec& b);
Vec scale_vec(const Scalar& c, const Vec& v);

Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_vec(const Mat& m, const Vec& v);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_scale(const Scalar& c, const Mat& m);
bool mat_equal(const Mat& a, const Mat& b);

// In-place reduced row echelon form; returns the rank.
std::size_t row_reduce(Mat& m);

std::size_t rank(Mat m);

// Is v in the row span of rows?
bool in_row_span(const Mat& rows, const Vec& v);

// Basis of { x : m x = 0 }, one kernel vector per row.
Mat nullspace(const Mat& m, const Field& f, std::size_t cols);

std::string render_vec(const Vec& v);

} // namespace gsx

#endif
