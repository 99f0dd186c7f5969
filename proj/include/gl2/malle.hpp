// malle.hpp: Malle indices, a(G) = 1/ind(G), inertia exponents, and the
// exponent report for any of the supported representations.
#pragma once

#include <cstdint>

#include "gl2/exact.hpp"
#include "gl2/group.hpp"
#include "gl2/permrep.hpp"

namespace gl2 {

struct ExponentReport {
    uint32_t ell;
    PermKind kind;
    GroupTag group;
    uint64_t degree;
    uint64_t malle_ind;        // min index over nonidentity elements
    Rational malle_a;          // 1 / malle_ind
    uint64_t inertia_ind;      // index of the transvection [[1,1],[0,1]]
    Rational lower_exponent;   // 1 / (2 * inertia_ind)
    Gl2Element witness;        // class representative attaining malle_ind
};

// Minimum of element_index over nonidentity elements. The index is a class
// function, so the search runs over conjugacy class representatives; for
// PGL2 representations the GL2 representatives cover every class of the
// quotient. Ties go to the earliest class in canonical order.
std::pair<uint64_t, Gl2Element> malle_index(const PermAction& rep);

// element_index of the transvection: the exponent k with p^k dividing the
// field discriminant at a tamely ramified prime p.
uint64_t inertia_exponent(const PermAction& rep);

ExponentReport exponent_report(PrimeEll ell, PermKind kind, GroupTag group);
ExponentReport exponent_report(const PermAction& rep);

// Canonical key order: ell, kind, group, degree, malle_ind, malle_a,
// inertia_ind, lower_exponent, witness.
Json report_json(const ExponentReport& r);

} // namespace gl2
