#pragma once

// Conjugacy classes of involutions on the closed orientable genus-g surface.
//
//   preserving: id, spit(g,r) for 0 <= r <= floor(g/2), rot (g odd)
//   reversing:  refl(g,r) for 0 <= r <= floor(g/2), anti(g,r) for 0 <= r <= g
//
// 4 + 2g classes in total.

#include "seifert/errors.hpp"
#include "seifert/torus_mcg.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace seifert {

enum class InvolutionKind { Id, Spit, Rot, Refl, Anti };

inline std::string to_string(InvolutionKind k)
{
    switch (k) {
    case InvolutionKind::Id: return "id";
    case InvolutionKind::Spit: return "spit";
    case InvolutionKind::Rot: return "rot";
    case InvolutionKind::Refl: return "refl";
    case InvolutionKind::Anti: return "anti";
    }
    return "?";
}

struct SurfaceInvolutionClass {
    InvolutionKind kind = InvolutionKind::Id;
    std::int64_t g = 0;
    std::int64_t r = 0; ///< unused (0) for id and rot

    friend bool operator==(const SurfaceInvolutionClass&, const SurfaceInvolutionClass&) = default;
};

inline std::string to_string(const SurfaceInvolutionClass& c)
{
    switch (c.kind) {
    case InvolutionKind::Id:
    case InvolutionKind::Rot: return to_string(c.kind);
    default: break;
    }
    return to_string(c.kind) + "_{" + std::to_string(c.g) + "," + std::to_string(c.r) + "}";
}

inline bool is_valid(const SurfaceInvolutionClass& c)
{
    if (c.g < 0 || c.r < 0) return false;
    switch (c.kind) {
    case InvolutionKind::Id: return c.r == 0;
    case InvolutionKind::Rot: return c.r == 0 && c.g % 2 == 1;
    case InvolutionKind::Spit:
    case InvolutionKind::Refl: return c.r <= c.g / 2;
    case InvolutionKind::Anti: return c.r <= c.g;
    }
    return false;
}

inline bool orientation_preserving(InvolutionKind k)
{
    return k == InvolutionKind::Id || k == InvolutionKind::Spit || k == InvolutionKind::Rot;
}

enum class OrientationFilter { All, Preserving, Reversing };

inline std::vector<SurfaceInvolutionClass> classes_for_genus(std::int64_t g,
                                                            OrientationFilter filter = OrientationFilter::All)
{
    if (g < 0) throw PreconditionError("classes_for_genus: genus must be non-negative");
    std::vector<SurfaceInvolutionClass> out;
    const bool preserving = filter != OrientationFilter::Reversing;
    const bool reversing = filter != OrientationFilter::Preserving;
    if (preserving) {
        out.push_back({InvolutionKind::Id, g, 0});
        for (std::int64_t r = 0; r <= g / 2; ++r) out.push_back({InvolutionKind::Spit, g, r});
        if (g % 2 == 1) out.push_back({InvolutionKind::Rot, g, 0});
    }
    if (reversing) {
        for (std::int64_t r = 0; r <= g / 2; ++r) out.push_back({InvolutionKind::Refl, g, r});
        for (std::int64_t r = 0; r <= g; ++r) out.push_back({InvolutionKind::Anti, g, r});
    }
    return out;
}

struct ClassCounts {
    std::int64_t preserving = 0;
    std::int64_t reversing = 0;
    std::int64_t total = 0;

    friend bool operator==(const ClassCounts&, const ClassCounts&) = default;
};

/// Counts read off the explicit list.
inline ClassCounts count_classes(std::int64_t g)
{
    ClassCounts c;
    c.preserving = static_cast<std::int64_t>(classes_for_genus(g, OrientationFilter::Preserving).size());
    c.reversing = static_cast<std::int64_t>(classes_for_genus(g, OrientationFilter::Reversing).size());
    c.total = c.preserving + c.reversing;
    return c;
}

/// Closed forms 2 + ceil(g/2), 2 + g + floor(g/2), 4 + 2g.
inline ClassCounts closed_form_counts(std::int64_t g)
{
    return {2 + (g + 1) / 2, 2 + g + g / 2, 4 + 2 * g};
}

struct FixedPointData {
    bool entire_surface = false; ///< the identity: fixed set is not 0- or 1-dimensional
    std::int64_t isolated_points = 0;
    std::int64_t circles = 0;

    bool free() const { return !entire_surface && isolated_points == 0 && circles == 0; }

    friend bool operator==(const FixedPointData&, const FixedPointData&) = default;
};

/// spit(g,r) fixes 2(g-2r)+2 points: the quotient has genus r, so
/// Riemann-Hurwitz gives 2-2g = 2(2-2r) - k.
inline FixedPointData fixed_point_data(const SurfaceInvolutionClass& c)
{
    if (!is_valid(c)) throw PreconditionError("fixed_point_data: invalid class " + to_string(c));
    switch (c.kind) {
    case InvolutionKind::Id: return {true, 0, 0};
    case InvolutionKind::Spit: return {false, 2 * (c.g - 2 * c.r) + 2, 0};
    case InvolutionKind::Rot: return {false, 0, 0};
    case InvolutionKind::Refl: return {false, 0, c.g - 2 * c.r + 1};
    case InvolutionKind::Anti: return {false, 0, c.r};
    }
    return {};
}

/// Orientation-reversing genus-1 classes, by their action on H1(T).
inline InvolutionClassLabel induced_torus_action(const SurfaceInvolutionClass& c)
{
    if (c.g != 1 || orientation_preserving(c.kind) || !is_valid(c))
        throw PreconditionError("induced_torus_action: needs an orientation-reversing genus-1 class, got " +
                                to_string(c));
    if (c.kind == InvolutionKind::Anti && c.r == 1) return InvolutionClassLabel::AntiType;
    return InvolutionClassLabel::ReflType;
}

/// False exactly for the fixed-point-free classes rot and anti(g,0).
inline bool survives_free_exclusion(const SurfaceInvolutionClass& c)
{
    if (c.kind == InvolutionKind::Rot) return false;
    if (c.kind == InvolutionKind::Anti && c.r == 0) return false;
    return true;
}

} // namespace seifert
