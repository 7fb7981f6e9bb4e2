#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bgk/algebra.hpp"
#include "bgk/groups.hpp"

namespace bgk {

/* Which structural regime covers a given (G, p, k), most informative first:
 *   FullTheorem        - p odd, n_l < p-1, (p,k)=1: H_*(BG_k) = H_*(O3G3) (x) H_*(BG)
 *   SU2Mod3            - G = SU(2), p = 3, (3,k)=1: H_*(BG_k) = H_*(O3S3<3>)/(x_3)
 *   PDividesK          - p odd, p | k: no statement for this component
 *   PRegularOnly       - p-regular but n_l >= p-1: the loop space splitting
 *                        applies, the boundary map does not vanish
 *   NotPRegular        - n_l > p
 *   PrimeTwoOutOfScope - p = 2
 */
enum class Regime { FullTheorem, SU2Mod3, PDividesK, PRegularOnly, NotPRegular, PrimeTwoOutOfScope };

const char* regime_name(Regime r);

struct ApplicabilityVerdict {
    Regime regime = Regime::NotPRegular;
    bool p_regular = false;          // n_l <= p
    bool theorem_condition = false;  // n_l < p - 1
    bool coprime = false;            // gcd(p, k) = 1
    bool boundary_null = false;      // connecting map S-dual vanishes, == theorem_condition
    bool gauge_splits = false;       // Gauge_1 = G x Omega^3 G<3>, == boundary_null
    bool bgk_equiv_bg1 = false;      // p >= 3 and coprime
    std::optional<int> su2_boundary_order;  // 12 whenever the type is {2}
    std::string notes;

    bool operator==(const ApplicabilityVerdict&) const = default;
};

/* H_*(Omega^3 S^{2n+1}; F_p) for n >= 2, odd prime p.  Three families:
 *   a: exterior,   deg 2(n p^k - 1) p^j - 1,  k >= 1, j >= 0
 *   b: polynomial, deg 2(n p^k - 1) p^j - 2,  k >= 1, j >= 1
 *   c: polynomial, deg 2 n p^k - 2,           k >= 0
 * complete through degree trunc. */
AlgebraPresentation loops3_sphere(int n, int p, int trunc);

/* H_*(Omega^2 S^{2p-1}; F_p):
 *   abar: exterior,   deg 2(p-1) p^k - 1,  k >= 0
 *   bbar: polynomial, deg 2(p-1) p^k - 2,  k >= 1 */
AlgebraPresentation loops2_sphere_2pminus1(int p, int trunc);

/* H_*(Omega^3 S^3<3>; F_p) = H_*(Omega^2 S^{2p-1}) (x) H_*(Omega^3 S^{2p+1});
 * bottom class abar[k=0] in degree 2p-3. */
AlgebraPresentation anick_t(int p, int trunc);

/* H_*(Omega^3 G<3>; F_p) for p-regular G of type {2, n_2, ..., n_l}:
 * the S^3<3> factor tensored with Omega^3 S^{2 n_i - 1} for each i >= 2. */
AlgebraPresentation loops3_g3(const GroupType& type, int p, int trunc);

// H_*(BG; F_p), p-regular G: polynomial on one class of degree 2 n_i per entry.
AlgebraPresentation classifying_space_bg(const GroupType& type, int p, int trunc);

// H_*(G; F_p), p-regular G: exterior on one class of degree 2 n_i - 1 per entry.
AlgebraPresentation group_g(const GroupType& type, int p, int trunc);

/* H_*(BGauge_k; F_p) in the FullTheorem regime:
 * loops3_g3 (x) classifying_space_bg, independent of k within the regime. */
AlgebraPresentation bgk_homology(const GroupType& type, int p, long long chern, int trunc);

/* H_*(BGauge_k; F_3) for SU(2), (3,k)=1:
 * the S^3<3> algebra with the degree-3 exterior class deleted. */
AlgebraPresentation su2_mod3_bgk(long long chern, int trunc);

/* Odd degrees of the primitive classes killed by all dual Steenrod
 * operations and higher Bocksteins: 2p-3 from the S^3<3> factor plus
 * 2(n_i - 1) p - 3 for each i >= 2 entry. */
std::vector<int> mh_odd(const GroupType& type, int p);

/* The same list under the printed-subscript reading 2 n_i p - 3; those
 * values are not degrees of generators of the corresponding factor and are
 * exposed only so reports can show both. */
std::vector<int> mh_odd_printed_variant(const GroupType& type, int p);

// Full regime classification; p must be prime (p = 2 is a regime, not an error).
ApplicabilityVerdict verdict(const GroupType& type, int p, long long chern);

}  // namespace bgk
