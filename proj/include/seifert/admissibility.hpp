#pragma once

// Which orientable-base Seifert manifolds admit a fiber-preserving,
// orientation-reversing involution, and where they sit in the geometry
// case list.

#include "seifert/errors.hpp"
#include "seifert/invariants.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace seifert {

enum class Violation {
    NonzeroEuler,
    OrderGreaterThanTwo,
    OddCount,
    WrongBTerm,
    FixedPointFreeOnly, // reserved: never produced for orientable bases
};

inline std::string to_string(Violation v)
{
    switch (v) {
    case Violation::NonzeroEuler: return "NonzeroEuler";
    case Violation::OrderGreaterThanTwo: return "OrderGreaterThanTwo";
    case Violation::OddCount: return "OddCount";
    case Violation::WrongBTerm: return "WrongBTerm";
    case Violation::FixedPointFreeOnly: return "FixedPointFreeOnly";
    }
    return "?";
}

enum class CaseLabel { C1a, C1b, C2a, C2b, C3a, C3b, C3c };

inline std::string to_string(CaseLabel c)
{
    static constexpr const char* names[] = {"1a", "1b", "2a", "2b", "3a", "3b", "3c"};
    return names[static_cast<int>(c)];
}

struct AdmissibilityReport {
    bool admissible = false;
    std::vector<Violation> violations;
    std::optional<CaseLabel> case_label;
    GeometryType geometry = GeometryType::Other;
};

namespace detail {

inline std::vector<Violation> admissibility_violations(const SeifertInvariants& m)
{
    const SeifertInvariants nm = normalize(m);
    std::vector<Violation> out;

    if (euler_number(nm) != 0) out.push_back(Violation::NonzeroEuler);

    const bool all_order_two = std::all_of(nm.exceptional.begin(), nm.exceptional.end(),
                                           [](const ExceptionalPair& e) { return e.q == 2; });
    if (!all_order_two) out.push_back(Violation::OrderGreaterThanTwo);

    const Integer n = order_two_count(nm);
    if (n % 2 != 0) out.push_back(Violation::OddCount);

    // b = -n/2 is a statement about a descriptor whose critical fibers all
    // have order 2; with higher-order fibers present the target is undefined
    // and OrderGreaterThanTwo already carries the diagnosis.
    if (all_order_two && Rational(nm.b) != -Rational(n, 2)) out.push_back(Violation::WrongBTerm);

    return out;
}

inline CaseLabel case_for(const Integer& genus, const Integer& n, const Rational& chi_orb)
{
    if (chi_orb > 0) return n == 0 ? CaseLabel::C1a : CaseLabel::C1b;
    if (chi_orb == 0) return genus == 0 ? CaseLabel::C2a : CaseLabel::C2b;
    if (genus >= 2) return CaseLabel::C3a;
    return genus == 1 ? CaseLabel::C3b : CaseLabel::C3c;
}

} // namespace detail

/// Admissibility plus geometry. Geometry is only assigned to admissible
/// orientable-base descriptors; everything else is Other.
inline GeometryType geometry(const SeifertInvariants& m)
{
    if (!m.base.orientable || !detail::admissibility_violations(m).empty()) return GeometryType::Other;
    return geometry_from_chi(orbifold_euler_characteristic(m));
}

/// Evaluates every condition on normalize(m); violations are accumulated,
/// not short-circuited.
inline AdmissibilityReport check_admissible(const SeifertInvariants& m)
{
    if (!m.base.orientable)
        throw PreconditionError("check_admissible: non-orientable base; use lift_to_double_cover and check the cover");

    AdmissibilityReport r;
    r.violations = detail::admissibility_violations(m);
    r.admissible = r.violations.empty();
    if (r.admissible) {
        const SeifertInvariants nm = normalize(m);
        const Rational chi = orbifold_euler_characteristic(nm);
        r.geometry = geometry_from_chi(chi);
        r.case_label = detail::case_for(nm.base.genus, order_two_count(nm), chi);
    }
    return r;
}

/// True iff fixed-point-free orientation-reversing involutions are ruled
/// out, i.e. m is not a trivial product (g,o1|) after normalization.
inline bool exclude_fixed_point_free(const SeifertInvariants& m)
{
    const SeifertInvariants nm = normalize(m);
    return !(nm.exceptional.empty() && nm.b == 0);
}

inline CaseLabel classify_case(const SeifertInvariants& m)
{
    const AdmissibilityReport r = check_admissible(m);
    if (!r.admissible)
        throw PreconditionError("classify_case: " + print_seifert(m) + " is not admissible");
    return *r.case_label;
}

/// The admissible normal form (g,o1|(2,1)^n,(1,-n/2)).
inline SeifertInvariants admissible_descriptor(const Integer& genus, const Integer& n)
{
    SeifertInvariants m;
    m.base = {genus, true};
    for (Integer i = 0; i < n; ++i) m.exceptional.push_back({2, 1});
    m.b = -(n / 2);
    return m;
}

/// All normalized admissible descriptors with genus <= g_max and
/// n <= n_max, ordered by (genus, n).
inline std::vector<SeifertInvariants> enumerate_admissible(std::int64_t g_max, std::int64_t n_max)
{
    if (g_max < 0 || n_max < 0) throw PreconditionError("enumerate_admissible: bounds must be non-negative");
    std::vector<SeifertInvariants> out;
    for (std::int64_t g = 0; g <= g_max; ++g)
        for (std::int64_t n = 0; n <= n_max; n += 2) out.push_back(admissible_descriptor(g, n));
    return out;
}

} // namespace seifert
