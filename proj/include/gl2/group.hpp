// group.hpp: exact arithmetic in GL2(F_ell). Elements, conjugacy invariants,
// full enumeration, and one representative per conjugacy class.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace gl2 {

// A prime modulus ell. Bounded below 2^15 so that 2x2 matrix work stays in
// machine words; big integers live in the curve and family modules.
struct PrimeEll {
    uint32_t value;

    explicit PrimeEll(uint32_t v);

    friend bool operator==(PrimeEll a, PrimeEll b) { return a.value == b.value; }
    friend bool operator!=(PrimeEll a, PrimeEll b) { return a.value != b.value; }
};

enum class DiscClass { zero, nonzero_square, nonsquare };

std::string to_string(DiscClass c);

// trace/det/disc/u classify an element up to the coarse data the
// surjectivity test and the class search need.
struct ElementInvariants {
    uint32_t trace;
    uint32_t det;
    uint32_t disc;   // trace^2 - 4 det
    uint32_t u;      // trace^2 / det
    DiscClass disc_class;
};

// An invertible 2x2 matrix over F_ell, entries in canonical range [0, ell-1].
// Row-major: [[a, b], [c, d]].
struct Gl2Element {
    uint32_t ell;
    uint32_t a, b, c, d;

    Gl2Element(PrimeEll l, int64_t a, int64_t b, int64_t c, int64_t d);

    static Gl2Element identity(PrimeEll l);
    // [[1,1],[0,1]]: the transvection generating the canonical subgroup of
    // order ell; tame inertia acts through its conjugates.
    static Gl2Element inertia_generator(PrimeEll l);
    // [[1,0],[0,-1]]: fixes ell-1 vectors and pairs the rest; attains the
    // minimal index in the natural representation.
    static Gl2Element reflection(PrimeEll l);

    uint32_t det() const;
    uint32_t trace() const;
    bool is_identity() const { return a == 1 && b == 0 && c == 0 && d == 1; }
    bool is_scalar() const { return b == 0 && c == 0 && a == d; }

    friend bool operator==(const Gl2Element& m, const Gl2Element& n) {
        return m.ell == n.ell && m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }

    // packs (a,b,c,d) into one key; usable as dense index when ell^4 is small
    uint64_t pack() const;
};

// Order of GL2(F_ell): (ell^2 - 1)(ell^2 - ell).
uint64_t gl2_order(PrimeEll l);

// Order of PGL2(F_ell): ell(ell^2 - 1).
uint64_t pgl2_order(PrimeEll l);

// Matrix product mod ell. Throws std::invalid_argument on modulus mismatch.
Gl2Element gl2_mul(const Gl2Element& m, const Gl2Element& n);

Gl2Element gl2_inverse(const Gl2Element& m);

ElementInvariants invariants_of(const Gl2Element& m);

// Whether x is a square in F_ell (0 counts as a square).
bool is_square_in_fl(uint32_t x, PrimeEll l);

// Scales m so its first nonzero entry (row-major) is 1: the canonical
// representative of m's class in PGL2(F_ell).
Gl2Element projective_canonical(const Gl2Element& m);

// Multiplicative order of m in GL2(F_ell).
uint64_t element_order(const Gl2Element& m);

// Order of the image of m in PGL2(F_ell).
uint64_t projective_order(const Gl2Element& m);

// All invertible matrices, row-major scan of (a,b,c,d).
std::vector<Gl2Element> enumerate_gl2(PrimeEll l);

// Canonical representatives of PGL2(F_ell), row-major scan restricted to
// canonical forms.
std::vector<Gl2Element> enumerate_pgl2(PrimeEll l);

struct ConjClass {
    Gl2Element rep;
    uint64_t size;
};

// One representative per conjugacy class of GL2(F_ell), in canonical order:
// central diag(a,a); non-semisimple [[a,1],[0,a]]; split semisimple
// diag(a,b) with a < b; non-split semisimple, the companion matrix of each
// irreducible x^2 - tx + n ordered by (t, n). Sizes sum to gl2_order(ell).
std::vector<ConjClass> conjugacy_class_reps(PrimeEll l);

} // namespace gl2
