#pragma once

#include <string_view>

namespace sextic {

/// The two del Pezzo sextics: the flag threefold F in P7 and the Segre
/// fourfold Phi = P2 x P2 in P8. Both have degree 6 and Picard rank 2.
enum class Variety { F, Phi };

constexpr int dimension(Variety v) { return v == Variety::F ? 3 : 4; }

/// k with omega = O(k * hyperplane): -2 on F, -3 on Phi.
constexpr int canonical_twist(Variety v) { return v == Variety::F ? -2 : -3; }

constexpr std::string_view variety_name(Variety v) { return v == Variety::F ? "F" : "Phi"; }

/// Names of the two Picard generators ("h1","h2" on F, "eta1","eta2" on Phi).
constexpr std::string_view generator_name(Variety v, int which) {
    if (v == Variety::F) return which == 0 ? "h1" : "h2";
    return which == 0 ? "eta1" : "eta2";
}

}  // namespace sextic
