#pragma once

// Small dense matrices and polynomials over Z/lZ with int64 entries.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace g2c::modl {

using Vec = std::vector<std::int64_t>;
using Mat = std::vector<Vec>;  // row-major

std::int64_t reduce(std::int64_t a, std::int64_t l);
std::int64_t inv(std::int64_t a, std::int64_t l);
std::int64_t pow(std::int64_t a, std::uint64_t e, std::int64_t l);

Mat identity(int n);
Mat zero(int rows, int cols);
Mat mul(const Mat& a, const Mat& b, std::int64_t l);
Vec mul(const Mat& a, const Vec& x, std::int64_t l);
Mat transpose(const Mat& a);
Mat scale(const Mat& a, std::int64_t s, std::int64_t l);
Mat add(const Mat& a, const Mat& b, std::int64_t l);
Mat sub(const Mat& a, const Mat& b, std::int64_t l);
Mat pow(const Mat& a, std::uint64_t e, std::int64_t l);
bool is_zero(const Mat& a, std::int64_t l);
std::int64_t det(Mat a, std::int64_t l);
int rank(Mat a, std::int64_t l);
std::optional<Mat> inverse(Mat a, std::int64_t l);
// Basis of the right null space {x : a x = 0}.
std::vector<Vec> kernel(Mat a, std::int64_t l);
// Reduced row echelon form of the row span.
Mat rref(Mat rows, std::int64_t l);

// Characteristic polynomial det(X I - a), little-endian, monic.
Vec charpoly(const Mat& a, std::int64_t l);
// p(a) for little-endian coefficients p.
Mat eval_poly(const Vec& p, const Mat& a, std::int64_t l);
// Smallest k in [1, limit] with a^k = I, if any.
std::optional<std::uint64_t> multiplicative_order(const Mat& a, std::int64_t l, std::uint64_t limit);

// Companion matrix of a monic little-endian polynomial.
Mat companion(const Vec& monic_poly, std::int64_t l);

std::string to_string(const Mat& a);

}  // namespace g2c::modl
