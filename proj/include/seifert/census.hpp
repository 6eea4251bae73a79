#pragma once

/**
 * @file census.hpp
 * @brief Fiber-preserving, orientation-reversing involutions up to
 *        conjugacy, via the factorization f = psi o g.
 *
 * psi is the involution that reverses every fiber and is the identity on
 * the base; it is assembled from one V(2,2;-1) block per pair of order-2
 * fibers. g is a fiber-preserving involution whose base action is one of
 * the surface classes. The census is limited to genus-0 bases with two or
 * four order-2 fibers, where g's action on the marked points fixes either
 * none or two of them.
 */

#include "seifert/admissibility.hpp"
#include "seifert/errors.hpp"
#include "seifert/filling.hpp"
#include "seifert/invariants.hpp"
#include "seifert/surface_involutions.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace seifert {

// ---------------------------------------------------------------------------
// psi descriptors

struct PsiBlock {
    std::array<std::size_t, 2> fibers; ///< indices into the normalized exceptional list
    PsiBoundaryData data;
};

struct PsiDescriptor {
    SeifertInvariants manifold; ///< normalized
    std::vector<PsiBlock> blocks;
};

/// Pairs fibers (0,1), (2,3), ... and gives each pair the canonical block data.
inline PsiDescriptor make_psi_descriptor(const SeifertInvariants& m)
{
    if (!check_admissible(m).admissible)
        throw PreconditionError("make_psi_descriptor: " + print_seifert(m) + " is not admissible");
    PsiDescriptor d;
    d.manifold = normalize(m);
    const std::size_t n = d.manifold.exceptional.size();
    for (std::size_t i = 0; i + 1 < n; i += 2) d.blocks.push_back({{i, i + 1}, psi_boundary_data()});
    return d;
}

/// Descriptor-level consistency: a perfect matching of the order-2 fibers,
/// every block verifies, outer twists cancel over the base, and the block
/// fillings reassemble to the manifold.
inline bool verify_psi_descriptor(const PsiDescriptor& d)
{
    const std::size_t n = d.manifold.exceptional.size();
    if (d.blocks.size() * 2 != n) return false;

    std::vector<bool> seen(n, false);
    for (const auto& blk : d.blocks)
        for (std::size_t f : blk.fibers) {
            if (f >= n || seen[f]) return false;
            seen[f] = true;
        }

    Integer outer_twist = 0;
    SeifertInvariants reassembled;
    reassembled.base = d.manifold.base;
    for (const auto& blk : d.blocks) {
        if (!verify_v221_construction(blk.data).passed()) return false;
        outer_twist += blk.data.outer.b;
        // slope (m,l) is the Seifert pair (l,m)
        for (const auto& t : blk.data.inner) reassembled.exceptional.push_back({t.filling.l(), t.filling.m()});
    }
    if (outer_twist != 0) return false;

    auto key = [](const SeifertInvariants& s) {
        SeifertInvariants k = normalize(s);
        std::sort(k.exceptional.begin(), k.exceptional.end(), [](const auto& x, const auto& y) {
            return x.q != y.q ? x.q < y.q : x.p < y.p;
        });
        return k;
    };
    return key(reassembled) == key(d.manifold);
}

namespace detail {

/// Conjugation by the shear [[1,k],[0,1]] (fixes the fiber class).
inline IntMatrix2 shear_conjugate(const IntMatrix2& a, const Integer& k)
{
    const IntMatrix2 s{1, k, 0, 1};
    return s * a * IntMatrix2{1, -k, 0, 1};
}

/// Twists the block's (x,1) torus and its outer torus by k. The outer
/// torus is glued trivially into the product piece, so a compensating -k
/// must be applied to another block.
inline bool twist_block(PsiBlock& blk, const Integer& k)
{
    for (auto& t : blk.data.inner) {
        if (t.filling.l() != 1) continue;
        t.action = shear_conjugate(t.action, k);
        t.filling = FillingSlope(t.filling.m() + k * t.filling.l(), t.filling.l());
        blk.data.outer = shear_conjugate(blk.data.outer, k);
        return true;
    }
    return false;
}

} // namespace detail

/// Random fiber-preserving re-framings applied to a psi descriptor: moving
/// a twist between two blocks (a Dehn twist along an annulus joining their
/// outer tori) and re-pairing the order-2 fibers. Returns true iff every
/// trial still verifies. Deterministic in `seed`.
inline bool psi_is_conjugacy_class_check(const PsiDescriptor& d, std::int64_t trials, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> twist(-4, 4);
    for (std::int64_t trial = 0; trial < trials; ++trial) {
        PsiDescriptor moved = d;
        const std::size_t nb = moved.blocks.size();

        if (nb >= 2) {
            std::uniform_int_distribution<std::size_t> pick(0, nb - 1);
            const std::size_t i = pick(rng);
            std::size_t j = pick(rng);
            while (j == i) j = pick(rng);
            const Integer k = twist(rng);
            if (!detail::twist_block(moved.blocks[i], k) || !detail::twist_block(moved.blocks[j], -k)) return false;
        }

        std::vector<std::size_t> labels(moved.manifold.exceptional.size());
        std::iota(labels.begin(), labels.end(), std::size_t{0});
        std::shuffle(labels.begin(), labels.end(), rng);
        for (std::size_t b = 0; b < nb; ++b) moved.blocks[b].fibers = {labels[2 * b], labels[2 * b + 1]};

        if (!verify_psi_descriptor(moved)) return false;
    }
    return true;
}

inline bool psi_is_conjugacy_class_check(const SeifertInvariants& m, std::int64_t trials, std::uint64_t seed)
{
    return psi_is_conjugacy_class_check(make_psi_descriptor(m), trials, seed);
}

// ---------------------------------------------------------------------------
// census

/// Orientation of the fibers under g (f = psi o g reverses them iff g keeps them).
enum class FiberOrientation { Preserved, Reversed };

inline std::string to_string(FiberOrientation f)
{
    return f == FiberOrientation::Preserved ? "preserved" : "reversed";
}

struct FactorizationRecord {
    FiberOrientation fiber_orientation = FiberOrientation::Preserved;
    SurfaceInvolutionClass surface_class;
    std::int64_t fixed_boundary_count = 0; ///< marked (order-2) points fixed by g's base action

    friend bool operator==(const FactorizationRecord&, const FactorizationRecord&) = default;
};

struct CensusReport {
    SeifertInvariants manifold;
    std::vector<FactorizationRecord> records;
    std::int64_t count = 0;
};

/// True when g and psi cannot commute: g keeps fiber orientation, preserves
/// the base orientation, and fixes a critical fiber whose V(2,2;-1) partner
/// it moves. Every psi pairs the order-2 fibers, so with an odd number of
/// fixed marked points one fixed fiber is always separated from its
/// partner.
inline bool commutation_obstruction(const FactorizationRecord& rec)
{
    return rec.fiber_orientation == FiberOrientation::Preserved &&
           orientation_preserving(rec.surface_class.kind) && rec.fixed_boundary_count % 2 != 0;
}

inline CensusReport enumerate_factorizations(const SeifertInvariants& m)
{
    const AdmissibilityReport adm = check_admissible(m);
    if (!adm.admissible) throw PreconditionError("census: " + print_seifert(m) + " is not admissible");
    const SeifertInvariants nm = normalize(m);
    if (nm.base.genus != 0)
        throw OutOfScope("census: only genus-0 bases are classified; got genus " + nm.base.genus.str());
    const std::int64_t n = static_cast<std::int64_t>(nm.exceptional.size());
    if (n == 0) throw PreconditionError("census: " + print_seifert(m) + " is a trivial product S1 x S");
    if (n > 4) throw OutOfScope("census: marked-point model covers n = 2 and n = 4 only; got n = " + std::to_string(n));

    CensusReport rep;
    rep.manifold = nm;
    auto emit = [&](FiberOrientation fo, const SurfaceInvolutionClass& c) {
        for (std::int64_t fixed : {0, 2}) {
            if (fixed > n) continue;
            FactorizationRecord rec{fo, c, fixed};
            if (!commutation_obstruction(rec)) rep.records.push_back(rec);
        }
    };
    // g = id on the base is psi itself, not a new class.
    for (const auto& c : classes_for_genus(0, OrientationFilter::Preserving))
        if (c.kind != InvolutionKind::Id && survives_free_exclusion(c)) emit(FiberOrientation::Preserved, c);
    for (const auto& c : classes_for_genus(0, OrientationFilter::Reversing)) emit(FiberOrientation::Reversed, c);

    rep.count = static_cast<std::int64_t>(rep.records.size());
    return rep;
}

// ---------------------------------------------------------------------------
// orientable base-space double cover

struct LiftReport {
    SeifertInvariants cover;
    Rational chi_orb_base;
    Rational chi_orb_cover;
    Rational euler_base;
    Rational euler_cover;
    bool chi_doubles = false;
    bool euler_doubles = false;
    AdmissibilityReport cover_admissibility;
};

/// Non-orientable genus k base -> orientable genus k-1 base; each
/// exceptional pair appears twice, b doubles.
inline LiftReport lift_to_double_cover(const SeifertInvariants& m)
{
    if (m.base.orientable) throw PreconditionError("lift_to_double_cover: base is already orientable");
    if (m.base.genus < 1) throw PreconditionError("lift_to_double_cover: non-orientable genus must be >= 1");

    LiftReport r;
    r.cover.base = {m.base.genus - 1, true};
    for (const auto& e : m.exceptional) {
        r.cover.exceptional.push_back(e);
        r.cover.exceptional.push_back(e);
    }
    r.cover.b = 2 * m.b;

    r.chi_orb_base = orbifold_euler_characteristic(m);
    r.chi_orb_cover = orbifold_euler_characteristic(r.cover);
    r.euler_base = euler_number(m);
    r.euler_cover = euler_number(r.cover);
    r.chi_doubles = r.chi_orb_cover == 2 * r.chi_orb_base;
    r.euler_doubles = r.euler_cover == 2 * r.euler_base;
    r.cover_admissibility = check_admissible(r.cover);
    return r;
}

} // namespace seifert
