#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bgk/series.hpp"

namespace bgk {

/* Generator families.  A/B/C are the three families of H_*(Omega^3 S^{2n+1}),
 * ABar/BBar the two families of H_*(Omega^2 S^{2p-1}), XBG and XG the
 * classifying-space and group classes of a p-regular G. */
enum class Family { A, B, C, ABar, BBar, XBG, XG };

enum class Kind { Exterior, Polynomial };

const char* family_name(Family f);
const char* kind_name(Kind k);

// Degree formula template for a family, with n/p/k/j as symbols.
const char* family_formula(Family f);

/* One generator of a free graded-commutative algebra over F_p.
 * `param` is the parameter the degree formula depends on besides p:
 * the sphere parameter n for A/B/C, the type entry n_i for XBG/XG,
 * unused (0) for ABar/BBar whose formulas involve p alone.
 */
struct Generator {
    std::string label;
    Family family = Family::A;
    int k = 0;
    int j = 0;  // 0 for single-index families
    int param = 0;
    int degree = 0;
    Kind kind = Kind::Exterior;

    bool operator==(const Generator&) const = default;
};

/* A finite presentation of a free graded-commutative algebra over F_p,
 * odd p: exterior generators in odd degrees, polynomial generators in even
 * degrees.  `trunc` is a completeness promise: the list contains every
 * generator of the presented algebra of degree <= trunc.
 */
class AlgebraPresentation {
public:
    // Validates parity, label uniqueness and the odd prime; sorts the
    // generators by (degree, label) so equal presentations compare equal.
    AlgebraPresentation(std::vector<Generator> generators, int prime, int trunc,
                        std::string tag);

    const std::vector<Generator>& generators() const { return generators_; }
    int prime() const { return prime_; }
    int trunc() const { return trunc_; }
    const std::string& tag() const { return tag_; }

    AlgebraPresentation with_tag(std::string tag) const;

    bool operator==(const AlgebraPresentation&) const = default;

private:
    std::vector<Generator> generators_;
    int prime_;
    int trunc_;
    std::string tag_;
};

/* Poincare series of the presented algebra, truncated at N <= pres.trunc():
 * the product over generators of (1 + t^d) for exterior and 1/(1 - t^d)
 * for polynomial ones.  Coefficient at d is dim over F_p in degree d. */
PowerSeries poincare(const AlgebraPresentation& pres, int trunc);

/* Tensor product: concatenated generator lists over the common prime,
 * truncated at the weaker promise.  Colliding labels on the right side are
 * renamed with a fresh "f<m>." namespace prefix. */
AlgebraPresentation tensor(const AlgebraPresentation& a, const AlgebraPresentation& b);

/* Quotient by the ideal generated by one named generator.  Legitimate
 * exactly because the algebra is free on its generator list, so the
 * quotient is again free on the remaining generators. */
AlgebraPresentation drop_generator(const AlgebraPresentation& pres, const std::string& label);

/* Counts monomials prod g_i^{e_i} of total degree `degree`, with
 * e_i in {0,1} for exterior g_i and e_i >= 0 for polynomial g_i, by
 * exhaustive recursion over the generator list.  Deliberately shares no
 * code with poincare(): it is the independent check on it. */
Int monomial_count_oracle(const AlgebraPresentation& pres, int degree);

// Rows (degree, dimension) for degrees 0..trunc.
std::vector<std::pair<int, Int>> dims_table(const AlgebraPresentation& pres, int trunc);

}  // namespace bgk
