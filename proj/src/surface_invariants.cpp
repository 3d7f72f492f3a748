#include "pillow/surface_invariants.hpp"

#include "pillow/checked.hpp"
#include "pillow/errors.hpp"

namespace pillow {

using checked::add;
using checked::mul;
using checked::sub;

void SurfaceClasses::validate() const {
    if (d < 1) throw InvalidParameter("surface degree must be >= 1, got " + std::to_string(d));
    if ((d + kh) % 2 != 0)
        throw InvalidParameter("H^2 + KH must be even (it equals 2g(H) - 2)");
    if (sectional_genus() < 0) throw InvalidParameter("sectional genus is negative");
}

BranchCharacters branch_characters(const SurfaceClasses& s) {
    BranchCharacters c;
    c.b = add(mul(3, s.d), s.kh);
    // b = 2d + (d + KH), so an odd b is exactly a parity violation of H^2 + KH;
    // report it as the node formula failing.
    if (c.b % 2 != 0)
        throw NonIntegralNodeCount("branch degree b = " + std::to_string(c.b) +
                                   " is odd, so b^2/2 is not an integer");
    s.validate();
    // n = -3K^2 + e(S) + 24d + b^2/2 - 15b
    c.n = sub(add(add(add(mul(-3, s.k2), s.euler), mul(24, s.d)), mul(c.b, c.b) / 2), mul(15, c.b));
    // k = 2K^2 - e(S) - 15d + 9b
    c.k = add(sub(sub(mul(2, s.k2), s.euler), mul(15, s.d)), mul(9, c.b));
    // t = e(S) - 3d + 2b
    c.t = add(sub(s.euler, mul(3, s.d)), mul(2, c.b));

    if (c.b < 0) throw NegativeCharacter("b", c.b);
    if (c.n < 0) throw NegativeCharacter("n", c.n);
    if (c.k < 0) throw NegativeCharacter("k", c.k);
    if (c.t < 0) throw NegativeCharacter("t", c.t);
    return c;
}

RamificationClasses ramification_classes(const SurfaceClasses& s) {
    RamificationClasses rc;
    const auto b = add(mul(3, s.d), s.kh);
    rc.r_class = {1, 3};
    rc.r0_class = {-2, sub(b, 6)};
    // (x K + y H) . (u K + v H) = xu K^2 + (xv + yu) KH + yv H^2
    const auto [x, y] = rc.r_class;
    const auto [u, v] = rc.r0_class;
    rc.r_dot_r0 = add(add(mul(x, u, s.k2), mul(add(mul(x, v), mul(y, u)), s.kh)), mul(y, v, s.d));
    return rc;
}

Report verify_character_identities(const SurfaceClasses& s, const BranchCharacters& c) {
    Report r;
    const auto b = c.b;
    r.add("two_n_plus_three_k", add(mul(2, c.n), mul(3, c.k)),
          sub(sub(add(mul(3, s.d), mul(b, b)), mul(3, b)), s.euler));
    r.add("two_n_plus_two_k", add(mul(2, c.n), mul(2, c.k)),
          add(add(mul(-2, s.k2), mul(sub(b, 12), s.kh)), mul(sub(mul(3, b), 18), s.d)));
    r.add("r_dot_r0", ramification_classes(s).r_dot_r0, mul(2, add(c.n, c.k)));
    r.add("hurwitz", add(s.d, s.kh), add(mul(-2, s.d), b));
    return r;
}

SurfaceClasses veronese(std::int64_t r) {
    if (r < 1) throw InvalidParameter("veronese: r must be >= 1");
    return SurfaceClasses{mul(r, r), mul(-3, r), 9, 3, "veronese r=" + std::to_string(r),
                          mul(r, add(r, 3)) / 2};
}

SurfaceClasses scroll_p1p1(std::int64_t r) {
    if (r < 1) throw InvalidParameter("scroll: r must be >= 1");
    return SurfaceClasses{mul(2, r), sub(mul(-2, r), 2), 8, 4, "scroll r=" + std::to_string(r),
                          add(mul(2, r), 1)};
}

SurfaceClasses del_pezzo(std::int64_t degree) {
    if (degree < 3 || degree > 9) throw InvalidParameter("del_pezzo: degree must be in [3, 9]");
    return SurfaceClasses{degree, -degree, degree, 12 - degree,
                          "del_pezzo d=" + std::to_string(degree), degree};
}

SurfaceClasses k3(std::int64_t g) {
    if (g < 3) throw InvalidParameter("k3: g must be >= 3");
    return SurfaceClasses{sub(mul(2, g), 2), 0, 0, 24, "k3 g=" + std::to_string(g), g};
}

}  // namespace pillow
