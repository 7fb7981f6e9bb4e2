#include "bgk/catalog.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "bgk/errors.hpp"

namespace bgk {

const char* regime_name(Regime r) {
    switch (r) {
        case Regime::FullTheorem: return "FullTheorem";
        case Regime::SU2Mod3: return "SU2Mod3";
        case Regime::PDividesK: return "PDividesK";
        case Regime::PRegularOnly: return "PRegularOnly";
        case Regime::NotPRegular: return "NotPRegular";
        case Regime::PrimeTwoOutOfScope: return "PrimeTwoOutOfScope";
    }
    return "?";
}

static bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

static void require_prime(int p) {
    if (!is_prime(p))
        throw std::invalid_argument("p must be prime, got " + std::to_string(p));
}

static void require_odd_prime(int p) {
    require_prime(p);
    if (p == 2)
        throw hypothesis_error("p = 2 is out of scope (odd primes only)");
}

static void require_p_regular(const GroupType& type, int p) {
    if (type.entries.empty())
        throw std::invalid_argument("empty group type");
    if (type.max_entry() > p)
        throw hypothesis_error(type.display() + " is not " + std::to_string(p) +
                               "-regular (n_l = " + std::to_string(type.max_entry()) +
                               " > p = " + std::to_string(p) + ")");
}

static std::string idx2(const char* sym, int n, int k, int j) {
    return std::string(sym) + "[n=" + std::to_string(n) + ",k=" + std::to_string(k) +
           ",j=" + std::to_string(j) + "]";
}

AlgebraPresentation loops3_sphere(int n, int p, int trunc) {
    if (n < 2)
        throw std::invalid_argument("sphere parameter n must be >= 2, got " + std::to_string(n));
    require_odd_prime(p);
    if (trunc < 0)
        throw std::invalid_argument("truncation degree must be >= 0");

    std::vector<Generator> gens;
    const long long N = trunc;

    // Degrees grow strictly in both k and j, so each loop stops at its
    // first generator past the truncation.

    // a-family: 2(n p^k - 1) p^j - 1, exterior, k >= 1, j >= 0
    for (long long pk = p, k = 1; 2 * (n * pk - 1) - 1 <= N; pk *= p, ++k) {
        const long long base = 2 * (n * pk - 1);
        long long pj = 1;
        for (int j = 0; base * pj - 1 <= N; ++j, pj *= p)
            gens.push_back({idx2("a", n, static_cast<int>(k), j), Family::A,
                            static_cast<int>(k), j, n, static_cast<int>(base * pj - 1),
                            Kind::Exterior});
    }
    // b-family: 2(n p^k - 1) p^j - 2, polynomial, k >= 1, j >= 1
    for (long long pk = p, k = 1; 2 * (n * pk - 1) * p - 2 <= N; pk *= p, ++k) {
        const long long base = 2 * (n * pk - 1);
        long long pj = p;
        for (int j = 1; base * pj - 2 <= N; ++j, pj *= p)
            gens.push_back({idx2("b", n, static_cast<int>(k), j), Family::B,
                            static_cast<int>(k), j, n, static_cast<int>(base * pj - 2),
                            Kind::Polynomial});
    }
    // c-family: 2 n p^k - 2, polynomial, k >= 0
    for (long long pk = 1, k = 0; 2 * n * pk - 2 <= N; pk *= p, ++k)
        gens.push_back({"c[n=" + std::to_string(n) + ",k=" + std::to_string(k) + "]",
                        Family::C, static_cast<int>(k), 0, n,
                        static_cast<int>(2 * n * pk - 2), Kind::Polynomial});
    return AlgebraPresentation(std::move(gens), p, trunc,
                               "H_*(Omega^3 S^" + std::to_string(2 * n + 1) + "; F_" +
                                   std::to_string(p) + ")");
}

AlgebraPresentation loops2_sphere_2pminus1(int p, int trunc) {
    require_odd_prime(p);
    if (trunc < 0)
        throw std::invalid_argument("truncation degree must be >= 0");

    std::vector<Generator> gens;
    const long long N = trunc;
    const long long base = 2 * (p - 1);

    // abar: 2(p-1) p^k - 1, exterior, k >= 0
    {
        long long pk = 1;
        for (int k = 0; base * pk - 1 <= N; ++k, pk *= p)
            gens.push_back({"abar[k=" + std::to_string(k) + "]", Family::ABar, k, 0, 0,
                            static_cast<int>(base * pk - 1), Kind::Exterior});
    }
    // bbar: 2(p-1) p^k - 2, polynomial, k >= 1
    {
        long long pk = p;
        for (int k = 1; base * pk - 2 <= N; ++k, pk *= p)
            gens.push_back({"bbar[k=" + std::to_string(k) + "]", Family::BBar, k, 0, 0,
                            static_cast<int>(base * pk - 2), Kind::Polynomial});
    }
    return AlgebraPresentation(std::move(gens), p, trunc,
                               "H_*(Omega^2 S^" + std::to_string(2 * p - 1) + "; F_" +
                                   std::to_string(p) + ")");
}

AlgebraPresentation anick_t(int p, int trunc) {
    require_odd_prime(p);
    // Omega^3 S^3<3> = Omega^2 (Anick space); its homology splits as
    // Omega^2 S^{2p-1} tensor Omega^3 S^{2p+1}.
    return tensor(loops2_sphere_2pminus1(p, trunc), loops3_sphere(p, p, trunc))
        .with_tag("H_*(Omega^3 S^3<3>; F_" + std::to_string(p) + ")");
}

AlgebraPresentation loops3_g3(const GroupType& type, int p, int trunc) {
    require_odd_prime(p);
    require_p_regular(type, p);
    if (type.entries.front() != 2)
        throw hypothesis_error(type.display() +
                               " has n_1 != 2; the S^3<3> factor needs a type starting at 2");
    AlgebraPresentation pres = anick_t(p, trunc);
    // S^{2 n_i - 1} = S^{2(n_i - 1) + 1}, so the i-th factor is
    // loops3_sphere at n = n_i - 1 (>= 2 since n_i >= 3 for i >= 2).
    for (size_t i = 1; i < type.entries.size(); ++i)
        pres = tensor(pres, loops3_sphere(type.entries[i] - 1, p, trunc));
    return pres.with_tag("H_*(Omega^3 G<3>; F_" + std::to_string(p) + "), G = " + type.display());
}

AlgebraPresentation classifying_space_bg(const GroupType& type, int p, int trunc) {
    require_odd_prime(p);
    require_p_regular(type, p);
    std::vector<Generator> gens;
    for (size_t i = 0; i < type.entries.size(); ++i) {
        const int n = type.entries[i];
        gens.push_back({"x_bg[i=" + std::to_string(i + 1) + "]", Family::XBG,
                        static_cast<int>(i + 1), 0, n, 2 * n, Kind::Polynomial});
    }
    return AlgebraPresentation(std::move(gens), p, trunc,
                               "H_*(BG; F_" + std::to_string(p) + "), G = " + type.display());
}

AlgebraPresentation group_g(const GroupType& type, int p, int trunc) {
    require_odd_prime(p);
    require_p_regular(type, p);
    std::vector<Generator> gens;
    for (size_t i = 0; i < type.entries.size(); ++i) {
        const int n = type.entries[i];
        gens.push_back({"x_g[i=" + std::to_string(i + 1) + "]", Family::XG,
                        static_cast<int>(i + 1), 0, n, 2 * n - 1, Kind::Exterior});
    }
    return AlgebraPresentation(std::move(gens), p, trunc,
                               "H_*(G; F_" + std::to_string(p) + "), G = " + type.display());
}

static long long gcd_pk(int p, long long k) {
    if (k == std::numeric_limits<long long>::min())
        throw std::invalid_argument("chern class out of supported range");
    return std::gcd(static_cast<long long>(p), k);
}

AlgebraPresentation bgk_homology(const GroupType& type, int p, long long chern, int trunc) {
    require_odd_prime(p);
    require_p_regular(type, p);
    if (gcd_pk(p, chern) != 1)
        throw hypothesis_error("(p,k)=1 fails: gcd(" + std::to_string(p) + "," +
                               std::to_string(chern) + ") = " + std::to_string(gcd_pk(p, chern)));
    if (!(type.max_entry() < p - 1))
        throw hypothesis_error("n_l < p-1 fails (n_l = " + std::to_string(type.max_entry()) +
                               ", p-1 = " + std::to_string(p - 1) + ")");
    // Independent of k once (p,k)=1: BGauge_k and BGauge_1 are p-locally equivalent.
    return tensor(loops3_g3(type, p, trunc), classifying_space_bg(type, p, trunc))
        .with_tag("H_*(BGauge_k; F_" + std::to_string(p) + "), G = " + type.display());
}

AlgebraPresentation su2_mod3_bgk(long long chern, int trunc) {
    if (gcd_pk(3, chern) != 1)
        throw hypothesis_error("(3,k)=1 fails: k = " + std::to_string(chern) +
                               " is divisible by 3");
    // The degree-3 class generates a tensor-algebra factor Lambda(x_3),
    // so the quotient by (x_3) is presented by deleting that generator.
    return drop_generator(anick_t(3, trunc), "abar[k=0]")
        .with_tag("H_*(BGauge_k; F_3), G = SU(2), (3,k)=1");
}

std::vector<int> mh_odd(const GroupType& type, int p) {
    require_odd_prime(p);
    require_p_regular(type, p);
    if (type.entries.front() != 2)
        throw hypothesis_error(type.display() + " has n_1 != 2");
    std::vector<int> degs{2 * p - 3};
    for (size_t i = 1; i < type.entries.size(); ++i)
        degs.push_back(2 * (type.entries[i] - 1) * p - 3);
    return degs;
}

std::vector<int> mh_odd_printed_variant(const GroupType& type, int p) {
    require_odd_prime(p);
    require_p_regular(type, p);
    if (type.entries.front() != 2)
        throw hypothesis_error(type.display() + " has n_1 != 2");
    std::vector<int> degs{2 * p - 3};
    for (size_t i = 1; i < type.entries.size(); ++i)
        degs.push_back(2 * type.entries[i] * p - 3);
    return degs;
}

ApplicabilityVerdict verdict(const GroupType& type, int p, long long chern) {
    if (p < 2)
        throw std::invalid_argument("p must be >= 2, got " + std::to_string(p));
    require_prime(p);
    if (type.entries.empty())
        throw std::invalid_argument("empty group type");

    ApplicabilityVerdict v;
    const int nl = type.max_entry();
    v.p_regular = nl <= p;
    v.theorem_condition = nl < p - 1;
    v.coprime = gcd_pk(p, chern) == 1;
    v.boundary_null = v.theorem_condition;
    v.gauge_splits = v.boundary_null;
    v.bgk_equiv_bg1 = p >= 3 && v.coprime;
    const bool su2 = type.entries == std::vector<int>{2};
    if (su2)
        v.su2_boundary_order = 12;

    if (p == 2) {
        v.regime = Regime::PrimeTwoOutOfScope;
        v.notes = "p = 2 is out of scope for this component";
    } else if (su2 && p == 3 && v.coprime) {
        v.regime = Regime::SU2Mod3;
        v.notes = "mod-3 SU(2) case: H_*(BGauge_k) is the S^3<3> algebra modulo (x_3); "
                  "the boundary map has order 12, so its 3-component is nontrivial";
    } else if (p % 2 == 1 && !v.coprime) {
        v.regime = Regime::PDividesK;
        v.notes = "p divides k: the p-local equivalence BGauge_k = BGauge_1 is unavailable";
    } else if (v.theorem_condition) {
        v.regime = Regime::FullTheorem;
        v.notes = "n_l = " + std::to_string(nl) + " < p-1 = " + std::to_string(p - 1) +
                  " and (p,k)=1: H_*(BGauge_k) = H_*(Omega^3 G<3>) (x) H_*(BG)";
    } else if (v.p_regular) {
        v.regime = Regime::PRegularOnly;
        v.notes = "p-regular (n_l = " + std::to_string(nl) + " <= p) but n_l < p-1 fails; "
                  "the boundary map need not vanish and no tensor formula is asserted";
    } else {
        v.regime = Regime::NotPRegular;
        v.notes = "not p-regular: n_l = " + std::to_string(nl) + " > p = " + std::to_string(p);
    }
    return v;
}

}  // namespace bgk
