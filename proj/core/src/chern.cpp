#include "sextic/chern.hpp"

#include <stdexcept>

namespace sextic {

namespace {

void require_variety(const Rank2Chern& x, Variety v, const char* what) {
    if (x.variety() != v) throw std::invalid_argument(what);
}

}  // namespace

Rank2Chern make_rank2(DivisorClass c1, ChowClass c2) {
    if (c1.variety != c2.variety())
        throw std::invalid_argument("make_rank2: variety mismatch between c1 and c2");
    if (!c2.is_homogeneous(2))
        throw std::invalid_argument("make_rank2: c2 must be of pure codimension 2");
    return {c1, std::move(c2)};
}

Rank2Chern twist(const Rank2Chern& x, const DivisorClass& L) {
    if (x.variety() != L.variety)
        throw std::invalid_argument("twist: variety mismatch");
    const ChowClass l = L.to_chow();
    return {x.c1 + 2 * L, x.c2 + x.c1.to_chow() * l + l * l};
}

Rank2Chern dual(const Rank2Chern& x) { return {-x.c1, x.c2}; }

Rank2Chern dual_twist_h(const Rank2Chern& x) {
    require_variety(x, Variety::F, "dual_twist_h: defined on F only");
    return twist(dual(x), hyperplane(Variety::F));
}

Rank2Chern dual_twist_eta(const Rank2Chern& x) {
    require_variety(x, Variety::Phi, "dual_twist_eta: defined on Phi only");
    return twist(dual(x), hyperplane(Variety::Phi));
}

Rank2Chern decomposable_chern(const DivisorClass& a, const DivisorClass& b) {
    if (a.variety != b.variety)
        throw std::invalid_argument("decomposable_chern: variety mismatch");
    return {a + b, a.to_chow() * b.to_chow()};
}

const ChowClass& cotangent_c2_f() {
    static const ChowClass w2 = ChowClass::monomial(Variety::F, {1, 1}, 6);
    return w2;
}

Int chi_f(const Rank2Chern& x) {
    require_variety(x, Variety::F, "chi_f: defined on F only");
    const ChowClass c1 = x.c1.to_chow();
    const ChowClass h = hyperplane(Variety::F).to_chow();

    const Int c13 = (c1 * c1 * c1).degree();
    const Int c1c2 = (c1 * x.c2).degree();
    const Int c12h = (c1 * c1 * h).degree();
    const Int c2h = (x.c2 * h).degree();
    const Int c1h2 = (c1 * h * h).degree();
    const Int w2c1 = (cotangent_c2_f() * c1).degree();

    // 12*chi gathered over a common denominator; the division is exact.
    const Int num = 2 * (c13 - 3 * c1c2) + 6 * (c12h - 2 * c2h) + (4 * c1h2 + w2c1);
    return 2 + exact_div(num, 12);
}

Rank2Chern restrict_to_f(const Rank2Chern& x) {
    require_variety(x, Variety::Phi, "restrict: expected Chern data on Phi");
    return {{Variety::F, x.c1.a1, x.c1.a2}, restrict_to_f(x.c2)};
}

ZeroLocusInvariants zero_locus_invariants(const Rank2Chern& x) {
    ZeroLocusInvariants out{0, std::nullopt};
    if (x.variety() == Variety::F) {
        const ChowClass h = hyperplane(Variety::F).to_chow();
        out.degree = (h * x.c2).degree();
        const Int c1c2 = (x.c1.to_chow() * x.c2).degree();
        out.arithmetic_genus = exact_div(c1c2, 2) - out.degree + 1;
    } else {
        const ChowClass eta = hyperplane(Variety::Phi).to_chow();
        out.degree = (eta * eta * x.c2).degree();
    }
    return out;
}

Int hc2_value(long long a1, long long a2, int e) {
    const Int q = Int(a1) * a1 + 4 * Int(a1) * a2 + Int(a2) * a2 - 3 * Int(a1) - 3 * Int(a2);
    return 2 + exact_div(q, 2) - e;
}

Int c1c2_value(long long a1, long long a2) {
    return Int(a1) * a1 * a2 + Int(a1) * a2 * a2;
}

IdentityResiduals identity_residuals(const DivisorClass& c1,
                                     std::pair<long long, long long> beta, int e) {
    if (c1.variety != Variety::F)
        throw std::invalid_argument("identity_residuals: stated on F");
    const auto [b1, b2] = beta;
    IdentityResiduals r;
    r.c1c2 = Int(c1.a1) * b1 + Int(c1.a2) * b2 - c1c2_value(c1.a1, c1.a2);
    r.hc2 = Int(b1) + Int(b2) - hc2_value(c1.a1, c1.a2, e);
    return r;
}

}  // namespace sextic
