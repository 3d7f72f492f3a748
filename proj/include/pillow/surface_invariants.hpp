#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>

#include "pillow/report.hpp"

namespace pillow {

/// Intersection numbers of a smooth projective surface S with hyperplane
/// class H and canonical class K.
struct SurfaceClasses {
    std::int64_t d = 0;      ///< degree, H^2
    std::int64_t kh = 0;     ///< K.H
    std::int64_t k2 = 0;     ///< K^2
    std::int64_t euler = 0;  ///< topological Euler number e(S)
    std::string label;
    std::optional<std::int64_t> ambient_dim;  ///< metadata only; never used in formulas

    /// Genus of a smooth hyperplane section: 2g(H) - 2 = H^2 + KH.
    std::int64_t sectional_genus() const { return (d + kh) / 2 + 1; }

    /// Throws InvalidParameter if d < 1, d + kh is odd, or g(H) < 0.
    void validate() const;
};

/// Degree, nodes, cusps and turning points of a general branch curve.
struct BranchCharacters {
    std::int64_t b = 0;
    std::int64_t n = 0;
    std::int64_t k = 0;
    std::int64_t t = 0;

    friend bool operator==(const BranchCharacters&, const BranchCharacters&) = default;
};

/// Ramification curve R = K + 3H and residual R0 = -2K + (b-6)H as
/// coefficients in the (K, H) basis, with their intersection number.
struct RamificationClasses {
    std::pair<std::int64_t, std::int64_t> r_class{1, 3};
    std::pair<std::int64_t, std::int64_t> r0_class{-2, 0};
    std::int64_t r_dot_r0 = 0;
};

/// b = 3d + KH, then nodes, cusps and turning points in exact arithmetic.
/// Throws NonIntegralNodeCount for odd b and NegativeCharacter if any
/// character is negative.
BranchCharacters branch_characters(const SurfaceClasses& s);

/// Builds R and R0 for the given surface and intersects them using the
/// intersection form [[K^2, KH], [KH, H^2]].
RamificationClasses ramification_classes(const SurfaceClasses& s);

/// Checks, for c against s:
///   two_n_plus_three_k   2n+3k = 3d + b^2 - 3b - e(S)
///   two_n_plus_two_k     2n+2k = -2K^2 + (b-12)KH + (3b-18)d
///   r_dot_r0             R.R0 = 2(n+k)
///   hurwitz              2g(H) - 2 = -2d + b
Report verify_character_identities(const SurfaceClasses& s, const BranchCharacters& c);

// Surface families. Each throws InvalidParameter outside its domain.

/// r-th Veronese embedding of the plane, r >= 1.
SurfaceClasses veronese(std::int64_t r);
/// P^1 x P^1 embedded by type (1, r), r >= 1.
SurfaceClasses scroll_p1p1(std::int64_t r);
/// Del Pezzo surface of degree 3..9.
SurfaceClasses del_pezzo(std::int64_t degree);
/// K3 surface of degree 2g-2 in P^g, g >= 3.
SurfaceClasses k3(std::int64_t g);

}  // namespace pillow
