#pragma once

#include <optional>
#include <utility>

#include "sextic/chow.hpp"

namespace sextic {

/// Chern data (c1, c2) of a rank-2 bundle; c2 is a codimension-2 class on
/// the same variety.
struct Rank2Chern {
    DivisorClass c1;
    ChowClass c2;

    Variety variety() const { return c1.variety; }
    friend bool operator==(const Rank2Chern&, const Rank2Chern&) = default;
};

Rank2Chern make_rank2(DivisorClass c1, ChowClass c2);

/// Chern data of E(L): c1 + 2L and c2 + c1.L + L^2.
Rank2Chern twist(const Rank2Chern& x, const DivisorClass& L);

/// Chern data of the dual: (-c1, c2).
Rank2Chern dual(const Rank2Chern& x);

/// E -> E^(dual)(h) on F.  In coefficients, c1' = (2-a1, 2-a2) and
/// c2' = (beta2 - 2a1 - a2 + 3) h1^2 + (beta1 - a1 - 2a2 + 3) h2^2.
/// An involution on Chern data.
Rank2Chern dual_twist_h(const Rank2Chern& x);

/// G -> G^(dual)(eta) on Phi: (2eta - gamma1, gamma2 - gamma1.eta + eta^2).
Rank2Chern dual_twist_eta(const Rank2Chern& x);

/// Chern data of O(a) + O(b): c1 = a + b, c2 = a.b.
Rank2Chern decomposable_chern(const DivisorClass& a, const DivisorClass& b);

/// Second Chern class of the cotangent bundle of F: 6 h1 h2.
const ChowClass& cotangent_c2_f();

/// Riemann-Roch on F:
///   chi(E) = 2 + (c1^3 - 3 c1 c2)/6 + (c1^2 h - 2 c2 h)/2
///              + (4 c1 h^2 + w2 c1)/12,          w2 = 6 h1 h2.
/// The middle term enters with a plus sign: the decomposable oracle
/// (chi of O(a)+O(b) against line-bundle Euler characteristics) pins it,
/// and the minus variant fails that oracle.  All intersection numbers are
/// computed in the Chow ring; the combined division is exact for rank-2
/// Chern data.
Int chi_f(const Rank2Chern& x);

/// restrict of rank-2 data along A(Phi) -> A(F).
Rank2Chern restrict_to_f(const Rank2Chern& x);

/// Numerical invariants of the zero locus of a general section vanishing in
/// codimension 2: degree = deg(h.c2) on F, deg(eta^2.c2) on Phi; the
/// arithmetic genus (curves on F only) is c1c2/2 - hc2 + 1.
struct ZeroLocusInvariants {
    Int degree;
    std::optional<Int> arithmetic_genus;
};

ZeroLocusInvariants zero_locus_invariants(const Rank2Chern& x);

/// Residuals (LHS - RHS) of the two constraint identities on F:
///   c1 c2:  a1 b1 + a2 b2  =  a1^2 a2 + a1 a2^2
///   h  c2:  b1 + b2  =  2 + (a1^2 + 4 a1 a2 + a2^2 - 3 a1 - 3 a2)/2 - e
/// where e = e(c1, D) is 1 when D = c1 and 0 otherwise.
struct IdentityResiduals {
    Int c1c2;
    Int hc2;
};

IdentityResiduals identity_residuals(const DivisorClass& c1,
                                     std::pair<long long, long long> beta, int e);

/// Right-hand sides of the two identities as closed forms.
Int hc2_value(long long a1, long long a2, int e);
Int c1c2_value(long long a1, long long a2);

}  // namespace sextic
