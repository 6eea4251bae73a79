#pragma once

/**
 * @file filling.hpp
 * @brief Extension of boundary involutions across Dehn fillings, and the
 *        boundary data of the involution on V(2,2;-1).
 *
 * Every framed torus uses column vectors over the ordered basis
 * (fiber, section). Two slope families carry an extension criterion:
 *
 *   (1,2): filling-torus meridian (-2,1), gluing [[0,1],[1,2]]
 *   (x,1): filling-torus meridian (1,0),  gluing [[-1,x],[0,1]]
 *
 * In both, (0,1) is the vector the extending map must reverse whenever it
 * preserves the meridian, and vice versa. An involution A of the filling
 * torus boundary extends iff A v_fix = e v_fix and A v_flip = -e v_flip
 * for some sign e. The admissible outer-boundary actions are G A G^-1.
 *
 * A slope (m,l) is glued in as the Seifert pair (l,m): (1,2) <-> (2,1),
 * (x,1) <-> (1,x).
 */

#include "seifert/errors.hpp"
#include "seifert/numeric.hpp"
#include "seifert/torus_mcg.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace seifert {

/// Coprime (m, l) modulo global sign; stored with l >= 0, and m > 0 when l = 0.
class FillingSlope {
public:
    FillingSlope(Integer m, Integer l) : m_(std::move(m)), l_(std::move(l))
    {
        if (m_ == 0 && l_ == 0) throw PreconditionError("filling slope (0,0) is not a slope");
        if (gcd(m_, l_) != 1)
            throw PreconditionError("filling slope (" + m_.str() + "," + l_.str() + ") is not primitive");
        if (l_ < 0 || (l_ == 0 && m_ < 0)) {
            m_ = -m_;
            l_ = -l_;
        }
    }

    const Integer& m() const noexcept { return m_; }
    const Integer& l() const noexcept { return l_; }

    std::string str() const { return "(" + m_.str() + "," + l_.str() + ")"; }

    friend bool operator==(const FillingSlope&, const FillingSlope&) = default;
    friend bool operator<(const FillingSlope& x, const FillingSlope& y)
    {
        return x.m_ != y.m_ ? x.m_ < y.m_ : x.l_ < y.l_;
    }

private:
    Integer m_;
    Integer l_;
};

enum class SlopeFamily { OneTwo, XOne };

/// Throws UnsupportedSlope outside (1,2) and (x,1).
inline SlopeFamily slope_family(const FillingSlope& s)
{
    if (s.m() == 1 && s.l() == 2) return SlopeFamily::OneTwo;
    if (s.l() == 1) return SlopeFamily::XOne;
    throw UnsupportedSlope("no extension criterion for filling slope " + s.str() +
                           "; supported families are (1,2) and (x,1)");
}

struct FillingFrame {
    IntVector2 meridian;
    IntVector2 flip;
    IntMatrix2 gluing; ///< H1(boundary of filling torus) -> H1(boundary of the drilled piece)
};

inline FillingFrame induced_filling_frame(const FillingSlope& s)
{
    switch (slope_family(s)) {
    case SlopeFamily::OneTwo:
        return {{-2, 1}, {0, 1}, {0, 1, 1, 2}};
    case SlopeFamily::XOne:
        return {{1, 0}, {0, 1}, {-1, s.m(), 0, 1}};
    }
    throw UnsupportedSlope("unreachable");
}

struct ExtensionConstraint {
    IntVector2 v_fix;  ///< preserved up to the sign e
    IntVector2 v_flip; ///< negated up to the sign e
};

namespace detail {

/// Solves A P = P diag(e, -e) over Q for the column matrix P = [v_fix | v_flip].
inline std::optional<IntMatrix2> solve_with_sign(const ExtensionConstraint& c, int e)
{
    const Integer det = c.v_fix.x * c.v_flip.y - c.v_flip.x * c.v_fix.y;
    if (det == 0) return std::nullopt;

    // P = [[p, r], [q, s]], P^-1 = (1/det) [[s, -r], [-q, p]]
    const Rational p(c.v_fix.x), q(c.v_fix.y), r(c.v_flip.x), s(c.v_flip.y);
    const Rational inv_det = Rational(1) / Rational(det);
    const Rational pi_a = s * inv_det, pi_b = -r * inv_det, pi_c = -q * inv_det, pi_d = p * inv_det;
    // P D with D = diag(e, -e)
    const Rational pd_a = p * e, pd_b = -r * e, pd_c = q * e, pd_d = -s * e;

    const std::array<Rational, 4> a{pd_a * pi_a + pd_b * pi_c, pd_a * pi_b + pd_b * pi_d,
                                    pd_c * pi_a + pd_d * pi_c, pd_c * pi_b + pd_d * pi_d};
    for (const auto& v : a)
        if (!is_integral(v)) return std::nullopt;
    IntMatrix2 m{numerator(a[0]), numerator(a[1]), numerator(a[2]), numerator(a[3])};
    if (!is_unimodular(m)) return std::nullopt;
    return m;
}

inline void push_unique(std::vector<IntMatrix2>& out, const IntMatrix2& m)
{
    if (std::find(out.begin(), out.end(), m) == out.end()) out.push_back(m);
}

} // namespace detail

/// All A in GL2(Z) with A v_fix = e v_fix and A v_flip = -e v_flip for some
/// e in {+1, -1}; the e = +1 solution (if any) comes first.
inline std::vector<IntMatrix2> solve_boundary_involutions(const ExtensionConstraint& c)
{
    std::vector<IntMatrix2> out;
    for (int e : {1, -1})
        if (auto m = detail::solve_with_sign(c, e)) detail::push_unique(out, *m);
    return out;
}

/// G A G^-1: the action of A seen through the gluing G.
inline IntMatrix2 transport_through_gluing(const IntMatrix2& a, const IntMatrix2& g)
{
    return g * a * mat_inv(g);
}

inline ExtensionConstraint constraint_for(const FillingSlope& s)
{
    const FillingFrame f = induced_filling_frame(s);
    return {f.meridian, f.flip};
}

/// The outer-boundary actions that extend across the filling: the solved
/// filling-torus involutions transported through the gluing matrix.
inline std::vector<IntMatrix2> extension_condition(const FillingSlope& s)
{
    const FillingFrame f = induced_filling_frame(s);
    std::vector<IntMatrix2> out;
    for (const auto& a : solve_boundary_involutions({f.meridian, f.flip}))
        detail::push_unique(out, transport_through_gluing(a, f.gluing));
    return out;
}

inline bool check_extends(const IntMatrix2& boundary_action, const FillingSlope& s)
{
    const auto allowed = extension_condition(s);
    return std::find(allowed.begin(), allowed.end(), boundary_action) != allowed.end();
}

// ---------------------------------------------------------------------------
// V(2,2;-1)

/// One drilled fiber of the block: the involution's action on its boundary
/// torus and the slope it is refilled with.
struct DrilledTorus {
    IntMatrix2 action;
    FillingSlope filling;
};

struct PsiBoundaryData {
    std::array<DrilledTorus, 3> inner;
    IntMatrix2 outer; ///< action on the outer boundary torus
};

/// Canonical data: fibers reversed, twists +1, -2, +1 around the three
/// drilled fibers, identity on the base of the outer torus.
inline PsiBoundaryData psi_boundary_data()
{
    return {{{
                {{-1, 1, 0, 1}, FillingSlope(1, 2)},
                {{-1, -2, 0, 1}, FillingSlope(-1, 1)},
                {{-1, 1, 0, 1}, FillingSlope(1, 2)},
            }},
            {-1, 0, 0, 1}};
}

struct V221Report {
    bool involutions = false;        ///< every inner and the outer action squares to I
    bool assignment_found = false;   ///< some permutation of the fillings makes every action extend
    std::array<std::optional<FillingSlope>, 3> assignment; ///< matrix index -> filling, when found
    bool outer_fiber_reversing = false; ///< outer action is [[-1,t],[0,1]]
    bool twist_balanced = false;     ///< inner twists sum to the outer twist
    bool block_shape = false;        ///< fillings are {(1,2),(1,2),(x,1)}

    bool passed() const
    {
        return involutions && assignment_found && outer_fiber_reversing && twist_balanced && block_shape;
    }
};

namespace detail {

inline bool extends_safely(const IntMatrix2& a, const FillingSlope& s)
{
    try {
        return check_extends(a, s);
    } catch (const UnsupportedSlope&) {
        return false;
    }
}

inline bool fiber_reversing_base_fixing(const IntMatrix2& m)
{
    return m.a == -1 && m.c == 0 && m.d == 1;
}

} // namespace detail

/// Checks the block data. The assignment of fillings to drilled fibers is
/// searched over all 3! orders and the first satisfying one is reported.
inline V221Report verify_v221_construction(const PsiBoundaryData& data = psi_boundary_data())
{
    V221Report r;

    r.involutions = is_involution(data.outer);
    for (const auto& t : data.inner) r.involutions = r.involutions && is_involution(t.action);

    std::array<std::size_t, 3> perm{0, 1, 2};
    do {
        bool ok = true;
        for (std::size_t i = 0; i < 3 && ok; ++i)
            ok = detail::extends_safely(data.inner[i].action, data.inner[perm[i]].filling);
        if (ok) {
            r.assignment_found = true;
            for (std::size_t i = 0; i < 3; ++i) r.assignment[i] = data.inner[perm[i]].filling;
            break;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    r.outer_fiber_reversing = detail::fiber_reversing_base_fixing(data.outer);

    Integer twist = 0;
    for (const auto& t : data.inner) twist += t.action.b;
    r.twist_balanced = twist == data.outer.b;

    std::size_t one_two = 0, x_one = 0;
    for (const auto& t : data.inner) {
        if (t.filling == FillingSlope(1, 2))
            ++one_two;
        else if (t.filling.l() == 1)
            ++x_one;
    }
    r.block_shape = one_two == 2 && x_one == 1;
    return r;
}

// ---------------------------------------------------------------------------
// Homology of the outer boundary curve.
//
// Base of the block: a disc with three holes. In additive notation
// alpha = -(alpha_1 + alpha_2 + alpha_3), and t is the fiber. A boundary
// action [[a,b],[c,d]] on torus i sends t -> a t + c alpha_i and
// alpha_i -> b t + d alpha_i.

struct HomologyClass {
    std::array<Integer, 3> alpha; ///< coefficients of alpha_1..alpha_3
    Integer t;                    ///< fiber exponent

    friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

struct OuterPushforward {
    HomologyClass image;           ///< f_*(alpha)
    std::optional<int> alpha_sign; ///< s with f_*(alpha) = s * alpha, when image is a multiple of alpha
    std::optional<int> fiber_sign; ///< s with f_*(t) = s * t on every torus, when consistent
};

inline OuterPushforward pushforward_outer_boundary(std::span<const IntMatrix2, 3> actions)
{
    OuterPushforward r;
    r.image.t = 0;
    for (std::size_t i = 0; i < 3; ++i) {
        r.image.alpha[i] = -actions[i].d;
        r.image.t -= actions[i].b;
    }
    if (r.image.t == 0) {
        const Integer& c0 = r.image.alpha[0];
        const bool uniform = c0 == r.image.alpha[1] && c0 == r.image.alpha[2];
        if (uniform && (c0 == 1 || c0 == -1)) r.alpha_sign = c0 == -1 ? 1 : -1; // alpha = -(sum)
    }
    bool consistent = true;
    for (const auto& a : actions) consistent = consistent && a.c == 0 && a.a == actions[0].a;
    if (consistent && (actions[0].a == 1 || actions[0].a == -1)) r.fiber_sign = actions[0].a.convert_to<int>();
    return r;
}

struct HomologyIdentityReport {
    bool fiber_reversed = false;
    std::array<IntMatrix2, 3> actions;
    OuterPushforward pushforward;
    int expected_alpha_sign = 0; ///< -1 when fibers are preserved, +1 when reversed
    bool passed = false;
};

/// Applies the per-torus images forced by the (1,2), (1,2), (-1,1) filling
/// conditions and checks f_*(alpha) = alpha^-1 (fiber preserved) or
/// alpha (fiber reversed), with zero net fiber exponent.
inline HomologyIdentityReport boundary_homology_identity(bool fiber_reversed)
{
    HomologyIdentityReport r;
    r.fiber_reversed = fiber_reversed;
    const Integer fiber_entry = fiber_reversed ? -1 : 1;
    const std::array<FillingSlope, 3> fillings{FillingSlope(1, 2), FillingSlope(1, 2), FillingSlope(-1, 1)};
    for (std::size_t i = 0; i < 3; ++i) {
        for (const auto& m : extension_condition(fillings[i]))
            if (m.a == fiber_entry) r.actions[i] = m;
    }
    r.pushforward = pushforward_outer_boundary(r.actions);
    r.expected_alpha_sign = fiber_reversed ? 1 : -1;
    r.passed = r.pushforward.image.t == 0 && r.pushforward.alpha_sign == r.expected_alpha_sign &&
               r.pushforward.fiber_sign == (fiber_reversed ? -1 : 1);
    return r;
}

} // namespace seifert
