#include "sextic/chow.hpp"

#include <stdexcept>

namespace sextic {

namespace {

const std::vector<Monomial> kBasisF = {
    {0, 0}, {1, 0}, {0, 1}, {2, 0}, {0, 2}, {2, 1},
};

const std::vector<Monomial> kBasisPhi = {
    {0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {0, 2}, {2, 1}, {1, 2}, {2, 2},
};

int basis_index(Variety v, Monomial m) {
    const auto& basis = v == Variety::F ? kBasisF : kBasisPhi;
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (basis[i] == m) return static_cast<int>(i);
    return -1;
}

void require_same_variety(Variety a, Variety b) {
    if (a != b) throw std::invalid_argument("chow: variety mismatch");
}

// Reduction of a raw monomial h1^a h2^b modulo the relation ideal of A(F).
// Degree 2 uses h1h2 = h1^2 + h2^2; degree 3 collapses to the point class
// h1^2 h2 = h1 h2^2 = [pt]; anything of degree > 3 or with a cubed generator
// vanishes.
void accumulate_f(Monomial m, const Int& c, std::vector<Int>& out) {
    const int a = m.e1, b = m.e2, d = a + b;
    if (d > 3 || a >= 3 || b >= 3) return;
    switch (d) {
        case 0:
            out[0] += c;
            return;
        case 1:
            out[a == 1 ? 1 : 2] += c;
            return;
        case 2:
            if (a == 2) {
                out[3] += c;
            } else if (b == 2) {
                out[4] += c;
            } else {  // h1 h2
                out[3] += c;
                out[4] += c;
            }
            return;
        default:  // d == 3 with 1 <= a,b <= 2
            out[5] += c;
            return;
    }
}

void accumulate_phi(Monomial m, const Int& c, std::vector<Int>& out) {
    if (m.e1 >= 3 || m.e2 >= 3) return;
    out[basis_index(Variety::Phi, m)] += c;
}

void accumulate(Variety v, Monomial m, const Int& c, std::vector<Int>& out) {
    if (m.e1 < 0 || m.e2 < 0)
        throw std::invalid_argument("chow: negative exponent in monomial");
    if (v == Variety::F)
        accumulate_f(m, c, out);
    else
        accumulate_phi(m, c, out);
}

}  // namespace

ChowClass::ChowClass(Variety v)
    : variety_(v), coeffs_(basis(v).size()) {}

const std::vector<Monomial>& ChowClass::basis(Variety v) {
    return v == Variety::F ? kBasisF : kBasisPhi;
}

ChowClass ChowClass::unit(Variety v) {
    ChowClass x(v);
    x.coeffs_[0] = 1;
    return x;
}

ChowClass ChowClass::monomial(Variety v, Monomial m, const Int& coeff) {
    ChowClass x(v);
    accumulate(v, m, coeff, x.coeffs_);
    return x;
}

ChowClass ChowClass::from_terms(Variety v,
                                const std::vector<std::pair<Monomial, Int>>& terms) {
    ChowClass x(v);
    for (const auto& [m, c] : terms) accumulate(v, m, c, x.coeffs_);
    return x;
}

const Int& ChowClass::coeff(Monomial m) const {
    static const Int kZero = 0;
    const int i = basis_index(variety_, m);
    if (i < 0) return kZero;
    return coeffs_[static_cast<std::size_t>(i)];
}

bool ChowClass::is_zero() const {
    for (const auto& c : coeffs_)
        if (c != 0) return false;
    return true;
}

bool ChowClass::is_homogeneous(int codim) const {
    const auto& b = basis(variety_);
    for (std::size_t i = 0; i < b.size(); ++i)
        if (coeffs_[i] != 0 && b[i].codim() != codim) return false;
    return true;
}

Int ChowClass::degree() const {
    if (!is_homogeneous(dimension(variety_)))
        throw std::invalid_argument("degree: class is not of top codimension");
    return coeffs_.back();
}

ChowClass ChowClass::operator-() const {
    ChowClass x(*this);
    for (auto& c : x.coeffs_) c = -c;
    return x;
}

ChowClass& ChowClass::operator+=(const ChowClass& rhs) {
    require_same_variety(variety_, rhs.variety_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& rhs) {
    require_same_variety(variety_, rhs.variety_);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    return *this;
}

ChowClass& ChowClass::operator*=(const Int& scalar) {
    for (auto& c : coeffs_) c *= scalar;
    return *this;
}

ChowClass operator*(const ChowClass& lhs, const ChowClass& rhs) {
    require_same_variety(lhs.variety_, rhs.variety_);
    const auto& b = ChowClass::basis(lhs.variety_);
    ChowClass out(lhs.variety_);
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (rhs.coeffs_[j] == 0) continue;
            Monomial m{b[i].e1 + b[j].e1, b[i].e2 + b[j].e2};
            accumulate(lhs.variety_, m, lhs.coeffs_[i] * rhs.coeffs_[j], out.coeffs_);
        }
    }
    return out;
}

bool operator==(const ChowClass& a, const ChowClass& b) {
    return a.variety_ == b.variety_ && a.coeffs_ == b.coeffs_;
}

ChowClass DivisorClass::to_chow() const {
    ChowClass x(variety);
    x += ChowClass::monomial(variety, {1, 0}, a1);
    x += ChowClass::monomial(variety, {0, 1}, a2);
    return x;
}

DivisorClass operator+(DivisorClass lhs, const DivisorClass& rhs) {
    require_same_variety(lhs.variety, rhs.variety);
    lhs.a1 += rhs.a1;
    lhs.a2 += rhs.a2;
    return lhs;
}

DivisorClass hyperplane(Variety v) { return {v, 1, 1}; }

ChowClass restrict_to_f(const ChowClass& x) {
    if (x.variety() != Variety::Phi)
        throw std::invalid_argument("restrict_to_f: expected a class on Phi");
    if (x.coeff({2, 2}) != 0)
        throw std::invalid_argument("restrict_to_f: codimension-4 classes have no image on F");
    std::vector<std::pair<Monomial, Int>> terms;
    for (const auto& m : ChowClass::basis(Variety::Phi)) {
        const Int& c = x.coeff(m);
        if (c != 0) terms.emplace_back(m, c);
    }
    return ChowClass::from_terms(Variety::F, terms);
}

std::pair<Int, Int> beta_pair(const ChowClass& x) {
    if (x.variety() != Variety::F)
        throw std::invalid_argument("beta_pair: expected a class on F");
    const ChowClass h1 = ChowClass::monomial(Variety::F, {1, 0});
    const ChowClass h2 = ChowClass::monomial(Variety::F, {0, 1});
    return {(h1 * x).degree(), (h2 * x).degree()};
}

std::array<Int, 3> mu_triple(const ChowClass& x) {
    if (x.variety() != Variety::Phi)
        throw std::invalid_argument("mu_triple: expected a class on Phi");
    const ChowClass e1sq = ChowClass::monomial(Variety::Phi, {2, 0});
    const ChowClass e2sq = ChowClass::monomial(Variety::Phi, {0, 2});
    const ChowClass e1e2 = ChowClass::monomial(Variety::Phi, {1, 1});
    return {(e1sq * x).degree(), (e2sq * x).degree(), (e1e2 * x).degree()};
}

ChowClass class_from_beta(const Int& beta1, const Int& beta2) {
    return ChowClass::from_terms(Variety::F, {{{0, 2}, beta1}, {{2, 0}, beta2}});
}

ChowClass class_from_mu(const Int& mu1, const Int& mu2, const Int& mu3) {
    return ChowClass::from_terms(
        Variety::Phi, {{{0, 2}, mu1}, {{2, 0}, mu2}, {{1, 1}, mu3}});
}

}  // namespace sextic
