#include "bgk/series.hpp"

#include <stdexcept>
#include <string>

namespace bgk {

PowerSeries::PowerSeries(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("power series needs at least the degree-0 coefficient");
    for (const Int& c : coeffs_)
        if (c < 0)
            throw std::invalid_argument("power series coefficients are dimensions and must be >= 0");
}

PowerSeries PowerSeries::one(int trunc) {
    if (trunc < 0)
        throw std::invalid_argument("truncation degree must be >= 0, got " + std::to_string(trunc));
    std::vector<Int> c(static_cast<size_t>(trunc) + 1, Int(0));
    c[0] = 1;
    return PowerSeries(std::move(c));
}

PowerSeries PowerSeries::exterior_factor(int degree, int trunc) {
    if (degree < 1)
        throw std::invalid_argument("generator degree must be >= 1, got " + std::to_string(degree));
    PowerSeries s = one(trunc);
    if (degree <= trunc)
        s.coeffs_[static_cast<size_t>(degree)] = 1;
    return s;
}

PowerSeries PowerSeries::geometric_factor(int degree, int trunc) {
    if (degree < 1)
        throw std::invalid_argument("generator degree must be >= 1, got " + std::to_string(degree));
    PowerSeries s = one(trunc);
    for (long long d = degree; d <= trunc; d += degree)
        s.coeffs_[static_cast<size_t>(d)] = 1;
    return s;
}

PowerSeries PowerSeries::from_coefficients(std::vector<Int> coeffs) {
    return PowerSeries(std::move(coeffs));
}

const Int& PowerSeries::coefficient(int n) const {
    if (n < 0 || n > trunc())
        throw std::invalid_argument("coefficient index " + std::to_string(n) +
                                    " outside [0, " + std::to_string(trunc()) + "]");
    return coeffs_[static_cast<size_t>(n)];
}

static void require_same_trunc(const PowerSeries& a, const PowerSeries& b) {
    if (a.trunc() != b.trunc())
        throw std::invalid_argument("truncation degrees differ (" + std::to_string(a.trunc()) +
                                    " vs " + std::to_string(b.trunc()) +
                                    "); re-truncate explicitly before combining");
}

PowerSeries mul(const PowerSeries& a, const PowerSeries& b) {
    require_same_trunc(a, b);
    const int n = a.trunc();
    std::vector<Int> c(static_cast<size_t>(n) + 1, Int(0));
    for (int i = 0; i <= n; ++i) {
        if (a.coeffs_[static_cast<size_t>(i)] == 0)
            continue;
        for (int j = 0; i + j <= n; ++j)
            c[static_cast<size_t>(i + j)] +=
                a.coeffs_[static_cast<size_t>(i)] * b.coeffs_[static_cast<size_t>(j)];
    }
    return PowerSeries(std::move(c));
}

PowerSeries add(const PowerSeries& a, const PowerSeries& b) {
    require_same_trunc(a, b);
    std::vector<Int> c(a.coeffs_);
    for (size_t i = 0; i < c.size(); ++i)
        c[i] += b.coeffs_[i];
    return PowerSeries(std::move(c));
}

}  // namespace bgk
