#pragma once

// Exact rationals (GMP) and a small dense matrix with a fraction-free
// determinant.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace octachar {

using Rat = mpq_class;
using BigInt = mpz_class;

BigInt to_bigint(__int128 v);
/// Throws std::overflow_error if v does not fit.
__int128 to_int128(const BigInt& v);

/// Always "p/q" with q ≥ 1, e.g. "11/1", "-3/4".
std::string format_rational(const Rat& r);
/// Accepts "p", "p/q", "-p/q". Throws ParseError.
Rat parse_rational(std::string_view text);

Rat pow(const Rat& base, unsigned exponent);

class RatMatrix {
public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rat> data_;
};

/// Bareiss elimination over the integers after clearing row denominators.
/// Every intermediate division is exact.
Rat determinant(const RatMatrix& m);

}  // namespace octachar
