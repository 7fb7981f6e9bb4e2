#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace bgk {

using Int = boost::multiprecision::cpp_int;

/* Truncated formal power series in one variable t with nonnegative
 * arbitrary-precision integer coefficients.  Every value carries its
 * inclusive truncation degree; arithmetic on mismatched truncations is an
 * error, never a silent coercion.  Only products are provided: all the
 * Poincare series handled here are products of the two factor shapes
 * below, so there is no inversion and no subtraction.
 */
class PowerSeries {
public:
    // 1, truncated at degree trunc.
    static PowerSeries one(int trunc);

    // 1 + t^degree.  Series of an exterior generator; just 1 if degree > trunc.
    static PowerSeries exterior_factor(int degree, int trunc);

    // 1 + t^d + t^2d + ...  Series of a polynomial generator.
    static PowerSeries geometric_factor(int degree, int trunc);

    // Arbitrary coefficients; rejects negative entries and empty input.
    static PowerSeries from_coefficients(std::vector<Int> coeffs);

    int trunc() const { return static_cast<int>(coeffs_.size()) - 1; }

    // Coefficient of t^n, 0 <= n <= trunc.
    const Int& coefficient(int n) const;

    const std::vector<Int>& coefficients() const { return coeffs_; }

    bool operator==(const PowerSeries&) const = default;

    friend PowerSeries mul(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries add(const PowerSeries& a, const PowerSeries& b);

private:
    explicit PowerSeries(std::vector<Int> coeffs);

    std::vector<Int> coeffs_;  // coeffs_[d] is the coefficient of t^d; size trunc+1
};

// Cauchy product truncated at the common truncation degree.
PowerSeries mul(const PowerSeries& a, const PowerSeries& b);

// Coefficient-wise sum at the common truncation degree.
PowerSeries add(const PowerSeries& a, const PowerSeries& b);

}  // namespace bgk
