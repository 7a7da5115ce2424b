#include "sextic/classify.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "sextic/cohomology.hpp"

namespace sextic {

namespace rules {

const CitedRule globally_generated_section{
    "globally-generated-section",
    "with this zero-locus class the bundle is globally generated, so its general "
    "section vanishes in pure codimension 2, contradicting the divisorial part"};

const CitedRule pencil_resolution{
    "pencil-resolution",
    "E is cut out by a pencil in |h1|, so I_E(2h1) is globally generated and the "
    "bundle again has general sections vanishing in pure codimension 2"};

const CitedRule double_line{
    "double-line",
    "E would be a double structure of arithmetic genus 0 on a line, requiring a "
    "surjection from the trivial conormal bundle of the line onto O(-1), which is "
    "impossible"};

const CitedRule four_points{
    "four-points",
    "c2 = 4h2^2 makes E four skew lines over four points of P2; every position of "
    "the points forces either the splitting O(2h2)+O(2h2) or a complete "
    "intersection of two conics, so no indecomposable bundle arises"};

const CitedRule quadric_projection{
    "quadric-projection",
    "a quadric octic with both factor polarizations of type (1,1) is the image of "
    "a product of point-projections P3 -> P2, which lands in a hyperplane, so the "
    "surface would be degenerate"};

const CitedRule degenerate_factor_map{
    "degenerate-factor-map",
    "one factor map has fewer than three independent sections, so its image lies "
    "in a line and the surface sits inside a degenerate divisor"};

const CitedRule fixed_line_component{
    "fixed-line-component",
    "every section of this factor polarization vanishes on the (-1)-curve, so the "
    "three coordinate sections cannot define the factor map"};

const CitedRule octic_embedding_exhaustion{
    "octic-embedding-exhaustion",
    "no bidegree data (a, b) on F1 or on the smooth quadric realizes this second "
    "Chern class among anticanonically embedded octics"};

const CitedRule chi_dual_twist{
    "chi-dual-twist",
    "a bundle in this range is regular, so chi of its dual hyperplane twist "
    "vanishes; here that Euler characteristic is 12 - 3(alpha1 + alpha2) != 0"};

const CitedRule line_pencil_splitting{
    "line-pencil-splitting",
    "the sheaf attached to a line with determinant 2h2 coincides with the sheaf "
    "of the line's degree-2 pencil resolution, hence splits"};

const CitedRule vanishing_extension_group{
    "vanishing-extension-group",
    "the candidate is classified by an extension group H^1(O(h2-h1)) that "
    "vanishes, hence splits"};

const CitedRule complete_intersection_splitting{
    "complete-intersection-splitting",
    "an octic cut out by divisors from |2eta1| and |2eta2| is their complete "
    "intersection, and the attached bundle splits accordingly"};

}  // namespace rules

Status Status::admissible(std::string witness, std::string detail) {
    return {Resolution::Admissible, std::move(witness), std::move(detail), "", ""};
}
Status Status::negative_intersection(std::string detail) {
    return {Resolution::NegativeIntersection, "", std::move(detail), "", ""};
}
Status Status::no_integer_solution(std::string detail) {
    return {Resolution::NoIntegerSolution, "", std::move(detail), "", ""};
}
Status Status::cited(const CitedRule& rule, std::string detail) {
    return {Resolution::CitedRule, "", std::move(detail), std::string(rule.id),
            std::string(rule.statement)};
}
Status Status::decomposable(std::string splitting, const CitedRule& rule,
                            std::string detail) {
    return {Resolution::Decomposable, std::move(splitting), std::move(detail),
            std::string(rule.id), std::string(rule.statement)};
}

std::string_view resolution_name(Resolution r) {
    switch (r) {
        case Resolution::Admissible: return "admissible";
        case Resolution::NegativeIntersection: return "eliminated:negative-intersection";
        case Resolution::NoIntegerSolution: return "eliminated:no-integer-solution";
        case Resolution::CitedRule: return "eliminated:cited-rule";
        case Resolution::Decomposable: return "decomposable";
    }
    return "?";
}

namespace {

std::string fmt_pair(long long x, long long y) {
    std::ostringstream os;
    os << "(" << x << "," << y << ")";
    return os.str();
}

Rank2Chern chern_from_beta(std::pair<long long, long long> alpha,
                           std::pair<long long, long long> beta) {
    return make_rank2({Variety::F, alpha.first, alpha.second},
                      class_from_beta(beta.first, beta.second));
}

}  // namespace

std::vector<std::pair<long long, long long>> solve_beta(std::pair<int, int> alpha,
                                                        std::pair<int, int> delta) {
    static const std::pair<int, int> allowed[] = {{0, 0}, {0, 1}, {0, 2}, {1, 0}, {2, 0}};
    if (std::find(std::begin(allowed), std::end(allowed), delta) == std::end(allowed))
        throw std::invalid_argument("solve_beta: divisorial part out of range");

    const auto [a1, a2] = alpha;
    const int e = delta == alpha ? 1 : 0;
    const Int hc2 = hc2_value(a1, a2, e);
    const Int c1c2 = c1c2_value(a1, a2);

    std::vector<std::pair<long long, long long>> out;
    if (hc2 < 0) return out;
    if (a1 != a2) {
        const Int num = c1c2 - Int(a1) * hc2;
        if (num % (a2 - a1) != 0) return out;
        const Int b2 = num / (a2 - a1);
        const Int b1 = hc2 - b2;
        if (b1 >= 0 && b2 >= 0) out.emplace_back(to_longlong(b1), to_longlong(b2));
    } else {
        if (Int(a1) * hc2 != c1c2) return out;
        for (Int b1 = 0; b1 <= hc2; ++b1)
            out.emplace_back(to_longlong(b1), to_longlong(hc2 - b1));
        // balanced solutions first, then decreasing beta1
        std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
            const auto kx = std::make_pair(-std::min(x.first, x.second), -x.first);
            const auto ky = std::make_pair(-std::min(y.first, y.second), -y.first);
            return kx < ky;
        });
    }
    return out;
}

std::vector<DivisorialRow> divisorial_case_table() {
    static const std::pair<int, int> alphas[] = {{0, 1}, {0, 2}, {1, 1}, {1, 2}};
    static const std::pair<int, int> deltas[] = {{0, 1}, {0, 2}, {1, 0}, {2, 0}};

    std::vector<DivisorialRow> rows;
    for (const auto& alpha : alphas) {
        for (const auto& delta : deltas) {
            // with alpha symmetric, (delta1, delta2) and its swap give the
            // same case up to exchanging the factors
            if (alpha.first == alpha.second && delta.first > delta.second) continue;
            if (alpha.first < delta.first || alpha.second < delta.second) continue;

            const int e = delta == alpha ? 1 : 0;
            for (const auto& beta : solve_beta(alpha, delta)) {
                DivisorialRow row;
                row.alpha = alpha;
                row.delta = delta;
                row.e = e;
                row.hc2 = hc2_value(alpha.first, alpha.second, e);
                row.c1c2 = c1c2_value(alpha.first, alpha.second);
                row.beta = beta;

                const ChowClass c1 = DivisorClass{Variety::F, alpha.first, alpha.second}.to_chow();
                const ChowClass d = DivisorClass{Variety::F, delta.first, delta.second}.to_chow();
                row.e_class = class_from_beta(beta.first, beta.second) - c1 * d + d * d;

                if (row.e_class.is_zero()) {
                    row.status = Status::cited(rules::globally_generated_section, "E = empty");
                } else {
                    const auto [eh1, eh2] = beta_pair(row.e_class);
                    if (eh1 < 0)
                        row.status = Status::negative_intersection(
                            "deg(h1.[E]) = " + eh1.str());
                    else if (eh2 < 0)
                        row.status = Status::negative_intersection(
                            "deg(h2.[E]) = " + eh2.str());
                    else
                        row.status = Status::cited(rules::pencil_resolution);
                }
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

std::vector<SplitSearchHit> split_obstruction_search(int t_min) {
    if (t_min > -1) throw std::invalid_argument("split_obstruction_search: window must reach -1");
    // b_i <= 2 with min(b1,b2) <= 0 and |b1-b2| <= 2 already forces b_i >= -2
    std::vector<SplitSearchHit> hits;
    for (int a2 = 0; a2 <= 2; ++a2)
        for (int b1 = -2; b1 <= 2; ++b1)
            for (int b2 = -2; b2 <= 2; ++b2) {
                if (std::abs(b1 - b2) > 2 || std::min(b1, b2) > 0) continue;
                for (int t = t_min; t <= -1; ++t)
                    if (cohom_f(t + b1, t + b2 - a2).h[1] != 0)
                        hits.push_back({a2, b1, b2, t});
            }
    return hits;
}

std::vector<CaseRowF> intermediate_table_f() {
    static const std::pair<int, int> alphas[] = {{0, 1}, {0, 2}, {1, 1}, {1, 2}};

    std::vector<CaseRowF> rows;
    for (const auto& alpha : alphas) {
        auto betas = solve_beta(alpha, {0, 0});
        if (alpha.first == alpha.second) {
            // keep one representative of each factor-swap orbit
            std::erase_if(betas, [](const auto& b) { return b.first < b.second; });
        }
        std::sort(betas.begin(), betas.end(),
                  [](const auto& x, const auto& y) { return x.first > y.first; });
        for (const auto& beta : betas) {
            CaseRowF row;
            row.alpha = alpha;
            row.beta = beta;
            const auto data = chern_from_beta({alpha.first, alpha.second}, beta);
            const auto inv = zero_locus_invariants(data);
            row.degree = inv.degree;
            row.genus = *inv.arithmetic_genus;
            const auto dt = dual_twist_h(data);
            row.dual_alpha = {dt.c1.a1, dt.c1.a2};
            const auto [db1, db2] = beta_pair(dt.c2);
            row.dual_beta = {to_longlong(db1), to_longlong(db2)};
            rows.push_back(std::move(row));
        }
    }
    if (rows.size() != 5) throw std::logic_error("intermediate_table_f: expected 5 cases");

    static const char labels[] = {'L', 'M', 'N', 'P', 'Q'};
    for (std::size_t i = 0; i < rows.size(); ++i) rows[i].label = labels[i];

    for (auto& row : rows) {
        switch (row.label) {
            case 'L':
                row.status = Status::admissible("p2^*Omega^1(2h2)", "zero locus a line");
                break;
            case 'M':
                row.status = Status::decomposable("O(h2) (+) O(h2)",
                                                  rules::line_pencil_splitting);
                break;
            case 'N':
                row.status = Status::cited(rules::double_line);
                break;
            case 'P':
                row.status = Status::decomposable("O(h1) (+) O(h2)",
                                                  rules::vanishing_extension_group);
                break;
            case 'Q':
                row.status = Status::admissible("p1^*Omega^1(2h1+h2)",
                                                "zero locus a quartic of genus 0");
                break;
            default:
                throw std::logic_error("intermediate_table_f: unexpected label");
        }
    }
    return rows;
}

std::vector<UlrichBetaEntry> ulrich_beta_f() {
    auto betas = solve_beta({2, 2}, {0, 0});
    // The restriction of |h_i| to the elliptic zero locus has dimension >= 2,
    // so its degree beta_i is at least 3.
    std::erase_if(betas, [](const auto& b) { return b.first < 3 || b.second < 3; });
    std::sort(betas.begin(), betas.end());

    std::vector<UlrichBetaEntry> out;
    for (const auto& beta : betas) {
        UlrichBetaEntry entry{beta, {}};
        if (beta == std::pair<long long, long long>{4, 4}) {
            entry.witnesses = {"extension of O(2h1) by O(2h2)",
                               "complete intersection O(2h1) (+) O(2h2) (decomposable)"};
        } else if (beta == std::pair<long long, long long>{3, 5}) {
            entry.witnesses = {"restriction of the Phi family with mu = (1,3,2)"};
        } else {
            entry.witnesses = {"factor swap of (3,5)"};
        }
        out.push_back(std::move(entry));
    }
    return out;
}

namespace {

// h^0 of O(a l + b m) on the surface: on F1 valid for b >= a >= 0, on the
// quadric for a, b >= 0.
long long factor_sections(Surface s, int a, int b) {
    if (s == Surface::F1) return (a + 1) * (b + 1) - a * (a + 1) / 2;
    return (a + 1) * (b + 1);
}

std::array<long long, 3> embedding_mu(Surface s, std::pair<int, int> a, std::pair<int, int> b) {
    if (s == Surface::F1)
        return {static_cast<long long>(a.first) * (2 * b.first - a.first),
                static_cast<long long>(a.second) * (2 * b.second - a.second),
                -static_cast<long long>(a.first) * a.second +
                    static_cast<long long>(a.first) * b.second +
                    static_cast<long long>(a.second) * b.first};
    return {2ll * a.first * b.first, 2ll * a.second * b.second,
            static_cast<long long>(a.first) * b.second +
                static_cast<long long>(a.second) * b.first};
}

}  // namespace

std::vector<EmbeddingCandidate> embedding_candidates(Surface s) {
    // anticanonical octic: a1 + a2 = 2 and b1 + b2 = 3 on F1, = 2 on Q
    const int b_total = s == Surface::F1 ? 3 : 2;

    std::vector<EmbeddingCandidate> out;
    for (int a1 = 0; a1 <= 2; ++a1) {
        const int a2 = 2 - a1;
        for (int b1 = 0; b1 <= b_total; ++b1) {
            const int b2 = b_total - b1;
            EmbeddingCandidate cand;
            cand.surface = s;
            cand.a = {a1, a2};
            cand.b = {b1, b2};
            cand.mu = embedding_mu(s, cand.a, cand.b);

            if (s == Surface::F1 && (b1 < a1 || b2 < a2)) {
                cand.status = Status::cited(
                    rules::fixed_line_component,
                    std::string("factor ") + (b1 < a1 ? "1" : "2"));
            } else if (factor_sections(s, a1, b1) < 3 || factor_sections(s, a2, b2) < 3) {
                cand.status = Status::cited(
                    rules::degenerate_factor_map,
                    std::string("factor ") + (factor_sections(s, a1, b1) < 3 ? "1" : "2"));
            } else if (s == Surface::Q && ((a1 == 0 || b1 == 0) && (a2 == 0 || b2 == 0))) {
                // both factor maps composed with a ruling: the octic is the
                // complete intersection of the two conic preimages
                cand.status = Status::decomposable("O(2eta1) (+) O(2eta2)",
                                                   rules::complete_intersection_splitting);
            } else if (s == Surface::Q && cand.a == std::pair<int, int>{1, 1} &&
                       cand.b == std::pair<int, int>{1, 1}) {
                cand.status = Status::cited(rules::quadric_projection);
            } else {
                cand.status = Status::admissible("mu = (" + std::to_string(cand.mu[0]) + "," +
                                                 std::to_string(cand.mu[1]) + "," +
                                                 std::to_string(cand.mu[2]) + ")");
            }
            out.push_back(std::move(cand));
        }
    }
    return out;
}

namespace {

std::array<long long, 3> dual_twist_mu_of(std::pair<int, int> alpha,
                                          std::array<long long, 3> mu) {
    const auto data = make_rank2({Variety::Phi, alpha.first, alpha.second},
                                 class_from_mu(mu[0], mu[1], mu[2]));
    const auto dt = dual_twist_eta(data);
    const auto m = mu_triple(dt.c2);
    return {to_longlong(m[0]), to_longlong(m[1]), to_longlong(m[2])};
}

PhiRow make_phi_row(std::string label, std::pair<int, int> alpha,
                    std::array<long long, 3> mu) {
    PhiRow row;
    row.label = std::move(label);
    row.alpha = alpha;
    row.mu = mu;
    row.restricted_beta = {mu[0] + mu[2], mu[1] + mu[2]};
    row.degree = Int(mu[0]) + mu[1] + 2 * Int(mu[2]);
    return row;
}

// All mu >= 0 whose restriction (mu1 + mu3, mu2 + mu3) is the given F-side
// beta pair.
std::vector<std::array<long long, 3>> mu_candidates(std::pair<long long, long long> beta) {
    std::vector<std::array<long long, 3>> out;
    for (long long mu3 = 0; mu3 <= std::min(beta.first, beta.second); ++mu3)
        out.push_back({beta.first - mu3, beta.second - mu3, mu3});
    return out;
}

}  // namespace

std::vector<PhiRow> classify_phi() {
    std::vector<PhiRow> rows;

    // gamma1 = 0: the F-side class is the line class, c2 = h2^2; the single
    // lift is gamma2 = eta2^2 and the zero locus is a plane.
    for (const auto& mu : mu_candidates(solve_beta({0, 0}, {0, 0}).front())) {
        auto row = make_phi_row("plane", {0, 0}, mu);
        row.status = Status::admissible(
            "sheaf attached to a plane via the codimension-2 correspondence",
            "zero locus a plane");
        rows.push_back(std::move(row));
    }

    // intermediate first Chern classes: lift the admissible F cases L and Q;
    // in the Q family the dual hyperplane twist must again have non-negative
    // coefficients, which kills Q' and Q''
    for (const auto& f_case : intermediate_table_f()) {
        if (f_case.status.kind != Resolution::Admissible) continue;
        std::vector<PhiRow> branch;
        for (const auto& mu : mu_candidates(f_case.beta)) {
            std::string label(1, f_case.label);
            if (f_case.label == 'Q') label = mu[2] == 1 ? "Q" : (mu[2] == 0 ? "Q'" : "Q''");
            auto row = make_phi_row(label, f_case.alpha, mu);
            row.dual_twist_mu = dual_twist_mu_of(row.alpha, mu);
            const auto& dm = *row.dual_twist_mu;
            if (dm[0] < 0 || dm[1] < 0 || dm[2] < 0) {
                const int k = dm[0] < 0 ? 1 : (dm[1] < 0 ? 2 : 3);
                row.status = Status::negative_intersection(
                    "mu" + std::to_string(k) + " of c2(G^(dual)(eta)) = " +
                    std::to_string(dm[static_cast<std::size_t>(k - 1)]));
            } else {
                row.status = Status::admissible(f_case.label == 'L'
                                                    ? "pi2^*Omega^1(2eta2)"
                                                    : "pi1^*Omega^1(2eta1+eta2)",
                                                f_case.label == 'L'
                                                    ? "zero locus a plane"
                                                    : "zero locus a quartic surface");
            }
            branch.push_back(std::move(row));
        }
        std::sort(branch.begin(), branch.end(),
                  [](const PhiRow& x, const PhiRow& y) { return x.label < y.label; });
        for (auto& row : branch) rows.push_back(std::move(row));
    }

    // gamma1 = 2 eta: lift the Ulrich solutions (canonical orientation);
    // realizations come from the octic embedding enumeration
    for (const auto& entry : ulrich_beta_f()) {
        if (entry.beta.first > entry.beta.second) continue;  // factor swap
        for (const auto& mu : mu_candidates(entry.beta)) {
            auto row = make_phi_row("", {2, 2}, mu);
            if (mu == std::array<long long, 3>{1, 3, 2}) {
                row.status = Status::admissible(
                    "rank-2 family with general section an F1 octic",
                    "realized by the F1 embedding with (a,b) = ((1,1),(1,2))");
            } else if (mu == std::array<long long, 3>{0, 0, 4}) {
                row.status = Status::decomposable("O(2eta1) (+) O(2eta2)",
                                                  rules::complete_intersection_splitting);
            } else if (mu == std::array<long long, 3>{2, 2, 2}) {
                row.status = Status::cited(rules::quadric_projection);
            } else {
                row.status = Status::cited(rules::octic_embedding_exhaustion);
            }
            rows.push_back(std::move(row));
        }
    }

    return rows;
}

std::vector<UpperBoundRow> upper_bound_elimination() {
    static const std::pair<int, int> alphas[] = {{0, 3}, {1, 3}, {2, 3},
                                                 {0, 4}, {1, 4}, {2, 4}, {2, 2}};
    std::vector<UpperBoundRow> rows;
    for (const auto& alpha : alphas) {
        UpperBoundRow row;
        row.alpha = alpha;
        row.chi_dual_twist = 12 - 3 * (Int(alpha.first) + alpha.second);
        if (alpha.second <= 2) {
            row.status = Status::admissible("", "equality case of the bound (Ulrich range)");
        } else if (row.chi_dual_twist != 0) {
            row.status = Status::cited(rules::chi_dual_twist,
                                       "chi(E^(dual)(h)) = " + row.chi_dual_twist.str());
        } else {
            const auto betas = solve_beta(alpha, {0, 0});
            if (betas.empty()) {
                const Int num = c1c2_value(alpha.first, alpha.second) -
                                Int(alpha.first) * hc2_value(alpha.first, alpha.second, 0);
                row.status = Status::no_integer_solution(
                    std::to_string(alpha.second - alpha.first) + " beta2 = " + num.str() +
                    " has no integer solution");
            } else {
                row.forced_beta = betas.front();
                row.status = Status::cited(rules::four_points,
                                           "forced beta = " + fmt_pair(betas.front().first,
                                                                       betas.front().second));
            }
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<SummaryEntry> classification_summary(Variety v) {
    std::vector<SummaryEntry> out;
    if (v == Variety::F) {
        {
            SummaryEntry e{{0, 0}, {}, false};
            // c1 = 0 forces a pure codimension-2 zero locus with hc2 = 1
            const auto beta = solve_beta({0, 0}, {0, 0}).front();
            e.classes.push_back({class_from_beta(beta.first, beta.second), "a line",
                                 {"sheaf attached to a line via the codimension-2 "
                                  "correspondence"}});
            out.push_back(std::move(e));
        }
        for (const auto& row : intermediate_table_f()) {
            if (row.status.kind != Resolution::Admissible) continue;
            SummaryEntry e{row.alpha, {}, false};
            e.classes.push_back({class_from_beta(row.beta.first, row.beta.second),
                                 row.label == 'L' ? "a line"
                                                  : "a quartic curve of arithmetic genus 0 "
                                                    "(possibly reducible)",
                                 {row.status.witness}});
            out.push_back(std::move(e));
        }
        {
            SummaryEntry e{{2, 2}, {}, true};
            for (const auto& entry : ulrich_beta_f()) {
                if (entry.beta.first > entry.beta.second) continue;  // factor swap
                e.classes.push_back({class_from_beta(entry.beta.first, entry.beta.second),
                                     "a smooth elliptic normal curve of degree 8",
                                     entry.witnesses});
            }
            out.push_back(std::move(e));
        }
    } else {
        for (const auto& row : classify_phi()) {
            if (row.status.kind != Resolution::Admissible) continue;
            SummaryEntry e{row.alpha, {}, row.alpha == std::pair<int, int>{2, 2}};
            std::string locus;
            if (row.alpha == std::pair<int, int>{0, 0} ||
                row.alpha == std::pair<int, int>{0, 1})
                locus = "a plane";
            else if (row.alpha == std::pair<int, int>{1, 2})
                locus = "a quartic surface (possibly reducible)";
            else
                locus = "a del Pezzo octic, the blow-up of P2 at a point";
            e.classes.push_back(
                {class_from_mu(row.mu[0], row.mu[1], row.mu[2]), locus, {row.status.witness}});
            out.push_back(std::move(e));
        }
    }
    return out;
}

}  // namespace sextic
