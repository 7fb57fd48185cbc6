#include "octachar/symfunc.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "octachar/characters.hpp"

namespace octachar {

namespace {

void require_distinct_nonzero(const std::vector<Rat>& values) {
    std::set<Rat> seen;
    for (const Rat& v : values) {
        if (v == 0) throw std::invalid_argument("mirrored point entries must be nonzero");
        if (!seen.insert(v).second)
            throw std::invalid_argument("mirrored point entries must be pairwise distinct");
    }
}

std::vector<Rat> squares(const std::vector<Rat>& xs) {
    std::vector<Rat> out;
    out.reserve(xs.size());
    for (const Rat& x : xs) out.push_back(x * x);
    return out;
}

}  // namespace

PointSpec PointSpec::plain(std::vector<Rat> values) {
    return PointSpec(Shape::plain, std::move(values));
}

PointSpec PointSpec::mirrored(std::vector<Rat> base) {
    std::vector<Rat> values(base);
    for (const Rat& x : base) values.push_back(-x);
    require_distinct_nonzero(values);
    return PointSpec(Shape::mirrored, std::move(values));
}

PointSpec PointSpec::mirrored_plus_one(std::vector<Rat> base, Rat extra) {
    std::vector<Rat> values(base);
    for (const Rat& x : base) values.push_back(-x);
    values.push_back(std::move(extra));
    require_distinct_nonzero(values);
    return PointSpec(Shape::mirrored_plus_one, std::move(values));
}

Rat power_sum(int r, const PointSpec& pt) {
    if (r < 1) throw std::invalid_argument("power sum degree must be at least 1");
    Rat sum = 0;
    for (const Rat& x : pt.values()) sum += pow(x, static_cast<unsigned>(r));
    return sum;
}

Rat schur_eval(const Partition& lambda, const std::vector<Rat>& values) {
    const std::size_t d = values.size();
    if (lambda.length() > d) throw std::invalid_argument("partition has more parts than variables");
    if (std::set<Rat>(values.begin(), values.end()).size() != d)
        throw std::domain_error("Weyl denominator vanishes");
    const BetaSet beta = beta_set(lambda, d);
    RatMatrix numerator(d, d), denominator(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
            numerator(i, j) = pow(values[j], static_cast<unsigned>(beta.entries()[i]));
            denominator(i, j) = pow(values[j], static_cast<unsigned>(d - 1 - i));
        }
    }
    return determinant(numerator) / determinant(denominator);
}

Rat schur_eval(const Partition& lambda, const PointSpec& pt) {
    return schur_eval(lambda, pt.values());
}

bool verify_frobenius(const Partition& lambda, const PointSpec& pt) {
    const Rat lhs = schur_eval(lambda, pt);
    Rat rhs = 0;
    for (const Partition& rho : partitions_of(lambda.size())) {
        const ConjClass cls(rho);
        const CharValue chi = mn_character(lambda, cls);
        if (chi == 0) continue;
        Rat term(to_bigint(chi), to_bigint(centralizer_order(cls)));
        term.canonicalize();
        for (int part : rho.parts()) term *= power_sum(part, pt);
        rhs += term;
    }
    return lhs == rhs;
}

FactorizationCheck check_factorization_even(const Partition& lambda, const std::vector<Rat>& base) {
    if (lambda.length() > 2 * base.size())
        throw std::invalid_argument("partition has more parts than variables");
    FactorizationCheck check;
    check.lhs = schur_eval(lambda, PointSpec::mirrored(base));
    if (lambda.size() % 2 != 0 || !has_basechange_core(lambda)) {
        check.which = FactorCase::vanishing;
        check.rhs = 0;
        return check;
    }
    check.which = FactorCase::even;
    const auto [q0, q1] = two_quotient(lambda);
    const auto sq = squares(base);
    check.rhs = Rat(to_int(sign_shuffle(lambda))) * schur_eval(q0, sq) * schur_eval(q1, sq);
    return check;
}

bool verify_factorization_even(const Partition& lambda, const std::vector<Rat>& base) {
    return check_factorization_even(lambda, base).holds();
}

FactorizationCheck check_factorization_odd(const Partition& lambda, const std::vector<Rat>& base,
                                           const Rat& extra) {
    const std::size_t length = 2 * base.size() + 1;
    if (lambda.length() > length) throw std::invalid_argument("partition has more parts than variables");
    FactorizationCheck check;
    check.lhs = schur_eval(lambda, PointSpec::mirrored_plus_one(base, extra));

    const BetaSet beta = beta_set(lambda, length);
    const std::size_t odd = beta.count_odd(), even = beta.count_even();
    if (odd != even + 1 && even != odd + 1) {
        check.which = FactorCase::vanishing;
        check.rhs = 0;
        return check;
    }
    const auto quotient = p_quotient(lambda, 2, 1);
    const Rat eps(to_int(sign_shuffle(lambda)));
    const auto sq = squares(base);
    auto sq_plus = sq;
    sq_plus.push_back(extra * extra);
    if (odd == even + 1) {
        check.which = FactorCase::odd_a;
        check.rhs = eps * extra * schur_eval(quotient[0], sq) * schur_eval(quotient[1], sq_plus);
    } else {
        check.which = FactorCase::odd_b;
        check.rhs = eps * schur_eval(quotient[1], sq) * schur_eval(quotient[0], sq_plus);
    }
    return check;
}

bool verify_factorization_odd(const Partition& lambda, const std::vector<Rat>& base, const Rat& extra) {
    return check_factorization_odd(lambda, base, extra).holds();
}

std::vector<Rat> interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    if (xs.size() != ys.size() || xs.empty()) throw std::invalid_argument("interpolation needs matching samples");
    const std::size_t n = xs.size();
    std::vector<Rat> coeffs(n, Rat(0));
    for (std::size_t i = 0; i < n; ++i) {
        // basis = Π_{j≠i} (x − x_j) / (x_i − x_j), built up in monomial form.
        std::vector<Rat> basis{Rat(1)};
        Rat denom = 1;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            if (xs[i] == xs[j]) throw std::invalid_argument("interpolation nodes must be distinct");
            std::vector<Rat> next(basis.size() + 1, Rat(0));
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * xs[j];
            }
            basis = std::move(next);
            denom *= xs[i] - xs[j];
        }
        const Rat scale = ys[i] / denom;
        for (std::size_t k = 0; k < basis.size(); ++k) coeffs[k] += basis[k] * scale;
    }
    return coeffs;
}

std::vector<Rat> mirrored_schur_coefficients_in_x(const Partition& lambda,
                                                  const std::vector<Rat>& base,
                                                  const std::vector<Rat>& sample_x) {
    const auto degree = static_cast<std::size_t>(lambda.size());
    if (sample_x.size() < degree + 1)
        throw std::invalid_argument("need at least |lambda|+1 sample points");
    std::vector<Rat> xs(sample_x.begin(), sample_x.begin() + static_cast<std::ptrdiff_t>(degree + 1));
    std::vector<Rat> ys;
    ys.reserve(xs.size());
    for (const Rat& x : xs) ys.push_back(schur_eval(lambda, PointSpec::mirrored_plus_one(base, x)));
    return interpolate(xs, ys);
}

}  // namespace octachar
