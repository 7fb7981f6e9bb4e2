/* Independent monomial-enumeration oracle.  Counts basis monomials degree by
 * degree by brute recursion over the generator list.  Kept apart from
 * algebra.cpp on purpose: this file must not use PowerSeries or poincare(),
 * so that agreement between the two is a real check and not a tautology. */

#include <cstddef>
#include <stdexcept>
#include <string>

#include "bgk/algebra.hpp"

namespace bgk {

static Int walk(const std::vector<Generator>& gens, size_t i, int remaining) {
    if (i == gens.size())
        return remaining == 0 ? 1 : 0;
    const Generator& g = gens[i];
    Int total = walk(gens, i + 1, remaining);  // exponent 0
    if (g.kind == Kind::Exterior) {
        if (remaining >= g.degree)
            total += walk(gens, i + 1, remaining - g.degree);
    } else {
        for (int r = remaining - g.degree; r >= 0; r -= g.degree)
            total += walk(gens, i + 1, r);
    }
    return total;
}

Int monomial_count_oracle(const AlgebraPresentation& pres, int degree) {
    if (degree < 0)
        throw std::invalid_argument("degree must be >= 0");
    if (degree > pres.trunc())
        throw std::invalid_argument("degree " + std::to_string(degree) +
                                    " exceeds the presentation's completeness promise " +
                                    std::to_string(pres.trunc()));
    return walk(pres.generators(), 0, degree);
}

}  // namespace bgk
