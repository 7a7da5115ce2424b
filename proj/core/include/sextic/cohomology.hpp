#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <vector>

#include "sextic/ints.hpp"
#include "sextic/variety.hpp"

namespace sextic {

/// Cohomology dimensions (h^0, ..., h^n) of a line bundle O(a1, a2).
struct CohomTable {
    Variety variety = Variety::F;
    long long a1 = 0;
    long long a2 = 0;
    std::vector<Int> h;

    Int euler() const;
    friend bool operator==(const CohomTable&, const CohomTable&) = default;
};

/// (h^0, h^1, h^2) of O_P2(a): h^0 = C(a+2,2), h^1 = 0, h^2 = C(-a-1,2).
std::array<Int, 3> cohom_p2(long long a);

/// Cohomology of O_F(a1 h1 + a2 h2). Exactly one entry can be nonzero; after
/// sorting the pair it is h^i = (-1)^i (a1+1)(a2+1)(a1+a2+2)/2 on the region
///   i=0: a1 >= 0;       i=1: a1 <= -2, a1+a2+1 >= 0;
///   i=2: a2 >= 0, a1+a2+3 <= 0;       i=3: a2 <= -2;
/// and the table is zero outside these regions.
CohomTable cohom_f(long long a1, long long a2);

/// Cohomology of O_Phi(a1 eta1 + a2 eta2) by the Kuenneth convolution of the
/// two P2 factors; odd entries vanish.
CohomTable cohom_phi(long long a1, long long a2);

CohomTable cohom_line(Variety v, long long a1, long long a2);

/// Euler characteristic polynomial: (a1+1)(a2+1)(a1+a2+2)/2 on F and
/// [(a1+1)(a1+2)/2]*[(a2+1)(a2+2)/2] on Phi.
Int euler_line(Variety v, long long a1, long long a2);

/// Which nonvanishing region of the (x1, x2) lattice plane a point lies in.
/// The two h^1 (resp. h^2) labels are exchanged by swapping coordinates.
enum class RegionLabel { H0, H1_upper, H2_upper, H2_lower, H1_lower, H3, Zero };

RegionLabel figure1_region(long long x1, long long x2);
std::string_view region_name(RegionLabel r);

/// aCM / initialized / Ulrich data for a line bundle.
struct LineBundleReport {
    Variety variety = Variety::F;
    long long a1 = 0;
    long long a2 = 0;
    bool is_acm = false;
    long long initial_twist = 0;  // min { t : h^0(O(a1+t, a2+t)) != 0 }
    bool is_initialized = false;
    bool is_ulrich = false;
};

/// aCM is decided by the closed criterion |a1 - a2| <= 2 (valid on both
/// varieties); the initial twist is found by a window scan.
LineBundleReport classify_line_bundle(Variety v, long long a1, long long a2);

struct ModuleNonvanishing {
    bool nonzero = false;
    std::optional<long long> witness_twist;  // smallest t with h^i != 0
};

/// Does the graded module H^i_* (0 < i < dim) have a nonzero piece?  Decided
/// by the closed criterion and cross-checked against a scan over
/// t in [-(|a1|+|a2|+5), |a1|+|a2|+5], which also produces the witness.
ModuleNonvanishing module_nonvanishing(Variety v, long long a1, long long a2, int i);

}  // namespace sextic
