#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sextic/chern.hpp"
#include "sextic/chow.hpp"

namespace sextic {

/// How a classification candidate is resolved.  Arithmetic eliminations
/// (negative intersection numbers, unsolvable integer systems) are computed
/// here; geometric eliminations are recorded as declarative cited rules whose
/// arithmetic preconditions the engine checks but whose geometry it does not
/// re-derive.
enum class Resolution {
    Admissible,
    NegativeIntersection,
    NoIntegerSolution,
    CitedRule,
    Decomposable,
};

struct CitedRule {
    std::string_view id;
    std::string_view statement;
};

namespace rules {
extern const CitedRule globally_generated_section;
extern const CitedRule pencil_resolution;
extern const CitedRule double_line;
extern const CitedRule four_points;
extern const CitedRule quadric_projection;
extern const CitedRule degenerate_factor_map;
extern const CitedRule fixed_line_component;
extern const CitedRule octic_embedding_exhaustion;
extern const CitedRule chi_dual_twist;
extern const CitedRule line_pencil_splitting;
extern const CitedRule vanishing_extension_group;
extern const CitedRule complete_intersection_splitting;
}  // namespace rules

struct Status {
    Resolution kind = Resolution::Admissible;
    std::string witness;   // admissible witness or decomposable splitting
    std::string detail;    // arithmetic detail of the resolution
    std::string rule_id;   // nonempty for cited rules
    std::string citation;  // statement of the cited rule

    static Status admissible(std::string witness, std::string detail = "");
    static Status negative_intersection(std::string detail);
    static Status no_integer_solution(std::string detail);
    static Status cited(const CitedRule& rule, std::string detail = "");
    static Status decomposable(std::string splitting, const CitedRule& rule,
                               std::string detail = "");
};

std::string_view resolution_name(Resolution r);

/// Integer solutions (beta1, beta2) with 0 <= beta_i <= hc2 of
///   beta1 + beta2 = hc2(alpha, e),   alpha1 beta1 + alpha2 beta2 = c1c2(alpha)
/// where e = 1 exactly when delta = alpha.  Balanced solutions come first,
/// then decreasing beta1.  Admissible divisorial parts are
/// (0,0), (0,1), (0,2), (1,0), (2,0).
std::vector<std::pair<long long, long long>> solve_beta(std::pair<int, int> alpha,
                                                        std::pair<int, int> delta);

/// One candidate with nonzero divisorial part D: the zero locus decomposes as
/// E u D and [E] = c2 - c1 D + D^2.
struct DivisorialRow {
    std::pair<int, int> alpha;
    std::pair<int, int> delta;
    int e = 0;
    Int hc2;
    Int c1c2;
    std::pair<long long, long long> beta;
    ChowClass e_class = ChowClass::zero(Variety::F);
    Status status;
};

/// The nine candidates on F with divisorial part, all eliminated: a general
/// section of one of these bundles must vanish in pure codimension 2.
std::vector<DivisorialRow> divisorial_case_table();

/// Search for twists where the splitting-lift argument on Phi breaks down:
/// tuples (a2, b1, b2, t) with 0 <= a2 <= 2, |b1 - b2| <= 2,
/// min(b1, b2) <= 0, b_i <= 2 and t <= -1 such that
/// h^1(F, O((t+b1) h1 + (t+b2-a2) h2)) != 0.  The unique hit is (1,2,0,-1).
struct SplitSearchHit {
    int a2 = 0, b1 = 0, b2 = 0, t = 0;
    friend bool operator==(const SplitSearchHit&, const SplitSearchHit&) = default;
};

std::vector<SplitSearchHit> split_obstruction_search(int t_min = -12);

/// The five intermediate candidates L, M, N, P, Q on F (D = 0, e = 0).
struct CaseRowF {
    char label = '?';
    std::pair<int, int> alpha;
    std::pair<long long, long long> beta;
    Int degree;
    Int genus;
    std::pair<long long, long long> dual_alpha;  // data of E^(dual)(h)
    std::pair<long long, long long> dual_beta;
    Status status;
};

std::vector<CaseRowF> intermediate_table_f();

/// c2 solutions for c1 = 2h: beta1 + beta2 = 8 and, since the zero locus is
/// an elliptic curve whose restricted |h_i| has dimension >= 2, beta_i >= 3.
struct UlrichBetaEntry {
    std::pair<long long, long long> beta;
    std::vector<std::string> witnesses;
};

std::vector<UlrichBetaEntry> ulrich_beta_f();

/// Anticanonical octic embeddings of F1 (blow-up of P2) and of the smooth
/// quadric into Phi, enumerated by the bidegrees of the two factor maps.
enum class Surface { F1, Q };

struct EmbeddingCandidate {
    Surface surface = Surface::F1;
    std::pair<int, int> a;
    std::pair<int, int> b;
    std::array<long long, 3> mu{};
    Status status;
};

std::vector<EmbeddingCandidate> embedding_candidates(Surface s);

/// One rank-2 candidate on Phi: gamma1 = alpha1 eta1 + alpha2 eta2 and
/// gamma2 with coefficients mu; its restriction to F has
/// beta = (mu1 + mu3, mu2 + mu3).
struct PhiRow {
    std::string label;  // "plane", "L", "Q", "Q'", "Q''" or empty
    std::pair<int, int> alpha;
    std::array<long long, 3> mu{};
    std::pair<long long, long long> restricted_beta;
    Int degree;
    std::optional<std::array<long long, 3>> dual_twist_mu;  // where the pairing applies
    Status status;
};

std::vector<PhiRow> classify_phi();

/// Exclusion of first Chern classes with alpha2 in {3, 4}: the Euler
/// characteristic chi(E^(dual)(h)) = 12 - 3(alpha1 + alpha2) must vanish,
/// and the survivors (1,3) and (0,4) die arithmetically resp. by a cited
/// rule.  The equality case (2,2) is listed for contrast.
struct UpperBoundRow {
    std::pair<int, int> alpha;
    Int chi_dual_twist;
    std::optional<std::pair<long long, long long>> forced_beta;
    Status status;
};

std::vector<UpperBoundRow> upper_bound_elimination();

/// The final classification: admissible first Chern classes with their c2
/// values, witnesses and zero-locus descriptions.
struct SummaryClass {
    ChowClass c2;
    std::string zero_locus;
    std::vector<std::string> witnesses;
};

struct SummaryEntry {
    std::pair<int, int> alpha;
    std::vector<SummaryClass> classes;
    bool ulrich = false;
};

std::vector<SummaryEntry> classification_summary(Variety v);

}  // namespace sextic
