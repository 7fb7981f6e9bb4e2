#include "bgk/algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace bgk {

const char* family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::ABar: return "ABAR";
        case Family::BBar: return "BBAR";
        case Family::XBG: return "X_BG";
        case Family::XG: return "X_G";
    }
    return "?";
}

const char* kind_name(Kind k) {
    return k == Kind::Exterior ? "exterior" : "polynomial";
}

const char* family_formula(Family f) {
    switch (f) {
        case Family::A: return "2(n p^k - 1) p^j - 1";
        case Family::B: return "2(n p^k - 1) p^j - 2";
        case Family::C: return "2 n p^k - 2";
        case Family::ABar: return "2(p - 1) p^k - 1";
        case Family::BBar: return "2(p - 1) p^k - 2";
        case Family::XBG: return "2 n_i";
        case Family::XG: return "2 n_i - 1";
    }
    return "?";
}

static bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

AlgebraPresentation::AlgebraPresentation(std::vector<Generator> generators, int prime,
                                         int trunc, std::string tag)
    : generators_(std::move(generators)), prime_(prime), trunc_(trunc), tag_(std::move(tag)) {
    if (!is_prime(prime_) || prime_ == 2)
        throw std::invalid_argument("presentation needs an odd prime, got " + std::to_string(prime_));
    if (trunc_ < 0)
        throw std::invalid_argument("truncation degree must be >= 0, got " + std::to_string(trunc_));
    std::set<std::string> labels;
    for (const Generator& g : generators_) {
        if (g.degree < 1)
            throw std::invalid_argument("generator " + g.label + " has degree " +
                                        std::to_string(g.degree) + " < 1");
        // Graded commutativity over odd p: odd degrees square to zero.
        if (g.kind == Kind::Exterior && g.degree % 2 == 0)
            throw std::invalid_argument("exterior generator " + g.label +
                                        " has even degree " + std::to_string(g.degree));
        if (g.kind == Kind::Polynomial && g.degree % 2 != 0)
            throw std::invalid_argument("polynomial generator " + g.label +
                                        " has odd degree " + std::to_string(g.degree));
        if (!labels.insert(g.label).second)
            throw std::invalid_argument("duplicate generator label " + g.label);
    }
    std::sort(generators_.begin(), generators_.end(), [](const Generator& a, const Generator& b) {
        if (a.degree != b.degree) return a.degree < b.degree;
        return a.label < b.label;
    });
}

AlgebraPresentation AlgebraPresentation::with_tag(std::string tag) const {
    AlgebraPresentation copy = *this;
    copy.tag_ = std::move(tag);
    return copy;
}

PowerSeries poincare(const AlgebraPresentation& pres, int trunc) {
    if (trunc < 0)
        throw std::invalid_argument("truncation degree must be >= 0");
    if (trunc > pres.trunc())
        throw std::invalid_argument("requested truncation " + std::to_string(trunc) +
                                    " exceeds the presentation's completeness promise " +
                                    std::to_string(pres.trunc()));
    PowerSeries s = PowerSeries::one(trunc);
    for (const Generator& g : pres.generators()) {
        if (g.degree > trunc)
            continue;
        s = mul(s, g.kind == Kind::Exterior
                       ? PowerSeries::exterior_factor(g.degree, trunc)
                       : PowerSeries::geometric_factor(g.degree, trunc));
    }
    return s;
}

AlgebraPresentation tensor(const AlgebraPresentation& a, const AlgebraPresentation& b) {
    if (a.prime() != b.prime())
        throw std::invalid_argument("tensor over different primes (" + std::to_string(a.prime()) +
                                    " vs " + std::to_string(b.prime()) + ")");
    std::vector<Generator> gens = a.generators();
    std::set<std::string> used;
    for (const Generator& g : gens)
        used.insert(g.label);
    for (Generator g : b.generators()) {
        if (used.count(g.label)) {
            int m = 2;
            std::string fresh;
            do {
                fresh = "f" + std::to_string(m++) + "." + g.label;
            } while (used.count(fresh));
            g.label = fresh;
        }
        used.insert(g.label);
        gens.push_back(std::move(g));
    }
    return AlgebraPresentation(std::move(gens), a.prime(), std::min(a.trunc(), b.trunc()),
                               a.tag() + " (x) " + b.tag());
}

AlgebraPresentation drop_generator(const AlgebraPresentation& pres, const std::string& label) {
    std::vector<Generator> gens = pres.generators();
    auto it = std::find_if(gens.begin(), gens.end(),
                           [&](const Generator& g) { return g.label == label; });
    if (it == gens.end())
        throw std::invalid_argument("no generator labelled " + label + " in " + pres.tag());
    gens.erase(it);
    return AlgebraPresentation(std::move(gens), pres.prime(), pres.trunc(), pres.tag());
}

std::vector<std::pair<int, Int>> dims_table(const AlgebraPresentation& pres, int trunc) {
    PowerSeries s = poincare(pres, trunc);
    std::vector<std::pair<int, Int>> rows;
    rows.reserve(static_cast<size_t>(trunc) + 1);
    for (int d = 0; d <= trunc; ++d)
        rows.emplace_back(d, s.coefficient(d));
    return rows;
}

}  // namespace bgk
