#include "octachar/rational.hpp"

#include <stdexcept>
#include <utility>

#include "octachar/notation.hpp"

namespace octachar {

BigInt to_bigint(__int128 v) {
    return BigInt(format_int128(v));
}

__int128 to_int128(const BigInt& v) {
    try {
        return parse_int128(v.get_str());
    } catch (const ParseError&) {
        throw std::overflow_error("integer does not fit in 128 bits");
    }
}

std::string format_rational(const Rat& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rat parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    const auto num_text = text.substr(0, slash);
    const auto valid_int = [](std::string_view s) {
        std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (i >= s.size()) return false;
        for (; i < s.size(); ++i)
            if (s[i] < '0' || s[i] > '9') return false;
        return true;
    };
    if (!valid_int(num_text)) throw ParseError("malformed rational numerator", 0);
    BigInt num(std::string(num_text[0] == '+' ? num_text.substr(1) : num_text));
    BigInt den(1);
    if (slash != std::string_view::npos) {
        const auto den_text = text.substr(slash + 1);
        if (!valid_int(den_text) || den_text[0] == '-' || den_text[0] == '+')
            throw ParseError("malformed rational denominator", slash + 1);
        den = BigInt(std::string(den_text));
        if (den == 0) throw ParseError("zero denominator", slash + 1);
    }
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat pow(const Rat& base, unsigned exponent) {
    BigInt num, den;
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exponent);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exponent);
    Rat r(num, den);
    r.canonicalize();
    return r;
}

Rat determinant(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Rat(1);

    // Scale each row to integers; det(original) = det(scaled) / Π scale.
    std::vector<std::vector<BigInt>> a(n, std::vector<BigInt>(n));
    BigInt scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt row_lcm = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), m(i, j).get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m(i, j).get_num() * (row_lcm / m(i, j).get_den());
        scale *= row_lcm;
    }

    int sign = 1;
    BigInt prev_pivot = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return Rat(0);
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev_pivot.get_mpz_t());
            }
            a[i][k] = 0;
        }
        prev_pivot = a[k][k];
    }
    Rat det(a[n - 1][n - 1] * sign, scale);
    det.canonicalize();
    return det;
}

}  // namespace octachar
