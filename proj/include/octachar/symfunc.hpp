#pragma once

// Evaluation of Schur polynomials and power sums at exact rational points,
// and checks of the Frobenius expansion and of the Schur factorizations at
// points of the form (X, −X) and (X, −X, x).

#include <cstddef>
#include <vector>

#include "octachar/partition.hpp"
#include "octachar/rational.hpp"

namespace octachar {

class PointSpec {
public:
    enum class Shape { plain, mirrored, mirrored_plus_one };

    static PointSpec plain(std::vector<Rat> values);
    /// (x₁, …, x_m, −x₁, …, −x_m). The |xᵢ| must be distinct and nonzero.
    static PointSpec mirrored(std::vector<Rat> base);
    /// (x₁, …, x_m, −x₁, …, −x_m, x). All of ±xᵢ and x distinct and nonzero.
    static PointSpec mirrored_plus_one(std::vector<Rat> base, Rat extra);

    Shape shape() const { return shape_; }
    const std::vector<Rat>& values() const { return values_; }
    std::size_t arity() const { return values_.size(); }

private:
    PointSpec(Shape shape, std::vector<Rat> values) : shape_(shape), values_(std::move(values)) {}

    Shape shape_ = Shape::plain;
    std::vector<Rat> values_;
};

/// Σᵢ xᵢ^r, r ≥ 1.
Rat power_sum(int r, const PointSpec& pt);

/// s_λ(x₁, …, x_d) as det(x_j^{β_i}) / det(x_j^{d−i}) with β the length-d
/// beta-set of λ. Throws std::domain_error "Weyl denominator vanishes" on
/// repeated values, std::invalid_argument when ℓ(λ) > d.
Rat schur_eval(const Partition& lambda, const PointSpec& pt);
Rat schur_eval(const Partition& lambda, const std::vector<Rat>& values);

/// s_λ(pt) == Σ_{ρ ⊢ |λ|} Θ_λ(ρ) / |Z(ρ)| · Π_i p_{ρ_i}(pt).
bool verify_frobenius(const Partition& lambda, const PointSpec& pt);

enum class FactorCase {
    vanishing,   // the identity predicts zero
    even,        // (X, −X): ε s_{λ⁰}(X²) s_{λ¹}(X²)
    odd_a,       // (X, −X, x), odd β-numbers one more than even ones
    odd_b,       // (X, −X, x), even β-numbers one more than odd ones
};

struct FactorizationCheck {
    FactorCase which = FactorCase::vanishing;
    Rat lhs;
    Rat rhs;
    bool holds() const { return lhs == rhs; }
};

/// At (X, −X) with ℓ(λ) ≤ 2|X|.
FactorizationCheck check_factorization_even(const Partition& lambda, const std::vector<Rat>& base);
bool verify_factorization_even(const Partition& lambda, const std::vector<Rat>& base);

/// At (X, −X, x) with ℓ(λ) ≤ 2|X|+1. The beta-set has length 2|X|+1 and the
/// quotient is read at that odd length.
FactorizationCheck check_factorization_odd(const Partition& lambda, const std::vector<Rat>& base,
                                           const Rat& extra);
bool verify_factorization_odd(const Partition& lambda, const std::vector<Rat>& base, const Rat& extra);

/// Coefficients c₀, …, c_deg of the polynomial f(x) = s_λ(X, −X, x), found by
/// evaluating at deg+1 distinct x and interpolating. deg = |λ|.
std::vector<Rat> mirrored_schur_coefficients_in_x(const Partition& lambda,
                                                  const std::vector<Rat>& base,
                                                  const std::vector<Rat>& sample_x);

/// Lagrange interpolation through (xs[i], ys[i]); returns monomial coefficients.
std::vector<Rat> interpolate(const std::vector<Rat>& xs, const std::vector<Rat>& ys);

}  // namespace octachar
