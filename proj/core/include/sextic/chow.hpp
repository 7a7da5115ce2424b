#pragma once

#include <array>
#include <utility>
#include <vector>

#include "sextic/ints.hpp"
#include "sextic/variety.hpp"

namespace sextic {

/// A formal monomial in the two Picard generators, by exponents.
struct Monomial {
    int e1 = 0;
    int e2 = 0;
    int codim() const { return e1 + e2; }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Exact cycle class in A(F) = Z[h1,h2]/(h1^2-h1h2+h2^2, h1^3, h2^3) or in
/// A(Phi) = Z[eta1,eta2]/(eta1^3, eta2^3), stored on the canonical monomial
/// basis.  On F the relation rewrites h1h2 as h1^2 + h2^2, so the basis is
///   {1; h1, h2; h1^2, h2^2; [pt] = h1^2 h2},
/// and on Phi it is all eta1^a eta2^b with 0 <= a,b <= 2, [pt] = eta1^2 eta2^2.
/// Values are immutable in spirit: every operation returns a new class.
class ChowClass {
public:
    explicit ChowClass(Variety v);

    static ChowClass zero(Variety v) { return ChowClass(v); }
    static ChowClass unit(Variety v);

    /// A single normalized monomial multiple.
    static ChowClass monomial(Variety v, Monomial m, const Int& coeff = 1);

    /// Reduce a formal integer combination of monomials to the canonical
    /// basis. Exponents must be non-negative.
    static ChowClass from_terms(Variety v,
                                const std::vector<std::pair<Monomial, Int>>& terms);

    Variety variety() const { return variety_; }

    /// Coefficient of a canonical basis monomial (zero for non-basis input).
    const Int& coeff(Monomial m) const;

    bool is_zero() const;
    /// True when every nonzero coefficient sits in codimension k.
    bool is_homogeneous(int codim) const;

    /// Coefficient of the point class; rejects anything with support below
    /// the top codimension.
    Int degree() const;

    /// Basis monomials of this variety, graded then by decreasing first
    /// exponent; the serialization order.
    static const std::vector<Monomial>& basis(Variety v);

    ChowClass operator-() const;
    ChowClass& operator+=(const ChowClass& rhs);
    ChowClass& operator-=(const ChowClass& rhs);
    ChowClass& operator*=(const Int& scalar);

    friend ChowClass operator+(ChowClass lhs, const ChowClass& rhs) { return lhs += rhs; }
    friend ChowClass operator-(ChowClass lhs, const ChowClass& rhs) { return lhs -= rhs; }
    friend ChowClass operator*(ChowClass lhs, const Int& scalar) { return lhs *= scalar; }
    friend ChowClass operator*(const Int& scalar, ChowClass rhs) { return rhs *= scalar; }

    /// Intersection product, normalized. Varieties must match.
    friend ChowClass operator*(const ChowClass& lhs, const ChowClass& rhs);

    friend bool operator==(const ChowClass&, const ChowClass&);

private:
    Variety variety_;
    std::vector<Int> coeffs_;  // indexed along basis(variety_)
};

/// Divisor a1*h1 + a2*h2 (resp. a1*eta1 + a2*eta2).
struct DivisorClass {
    Variety variety = Variety::F;
    long long a1 = 0;
    long long a2 = 0;

    ChowClass to_chow() const;
    DivisorClass operator-() const { return {variety, -a1, -a2}; }
    friend DivisorClass operator+(DivisorClass lhs, const DivisorClass& rhs);
    friend DivisorClass operator*(long long k, DivisorClass d) {
        d.a1 *= k;
        d.a2 *= k;
        return d;
    }
    friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// The hyperplane divisor h = h1 + h2 (resp. eta = eta1 + eta2).
DivisorClass hyperplane(Variety v);

/// The ring map A(Phi) -> A(F), eta_i -> h_i, defined through codimension 3.
/// A class with a point component on Phi has no image and is rejected.
ChowClass restrict_to_f(const ChowClass& x);

/// Intersection-defined coefficient extraction on F, matching the convention
/// c2 = beta1*h2^2 + beta2*h1^2: beta_i = deg(h_i . c2).
std::pair<Int, Int> beta_pair(const ChowClass& codim2_on_f);

/// Same on Phi for gamma2 = mu1*eta2^2 + mu2*eta1^2 + mu3*eta1*eta2:
/// mu1 = deg(eta1^2 . x), mu2 = deg(eta2^2 . x), mu3 = deg(eta1 eta2 . x).
std::array<Int, 3> mu_triple(const ChowClass& codim2_on_phi);

/// Build the codimension-2 class with given (beta1, beta2) on F or
/// (mu1, mu2, mu3) on Phi.
ChowClass class_from_beta(const Int& beta1, const Int& beta2);
ChowClass class_from_mu(const Int& mu1, const Int& mu2, const Int& mu3);

}  // namespace sextic
