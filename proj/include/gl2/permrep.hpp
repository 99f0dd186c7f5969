// permrep.hpp: faithful transitive permutation representations of GL2(F_ell)
// and PGL2(F_ell), with orbit counting and element indices.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gl2/group.hpp"

namespace gl2 {

enum class PermKind { natural, projective, regular, coset };
enum class GroupTag { GL2, PGL2 };

std::string to_string(PermKind k);
std::string to_string(GroupTag g);
PermKind perm_kind_from_string(const std::string& s);
GroupTag group_tag_from_string(const std::string& s);

// Image of one group element: a dense permutation of {0, ..., degree-1}.
struct Perm {
    std::vector<uint32_t> images;

    size_t degree() const { return images.size(); }
    bool is_identity() const;
    friend bool operator==(const Perm& p, const Perm& q) { return p.images == q.images; }
};

// A concrete transitive action together with its canonical point labels.
//
// Point labels:
//   natural     vectors (x, y) != (0, 0), row-major; index = x*ell + y - 1
//   projective  [1 : t] for t = 0..ell-1 at index t, then [0 : 1] at index ell
//   regular     group elements in enumeration order (left multiplication)
//   coset       left cosets gH, identity coset first, then first appearance
//
// Immutable after construction; safe to share across threads.
struct PermAction {
    PrimeEll ell;
    PermKind kind;
    GroupTag group;
    uint64_t degree;

    // regular / coset internals
    std::vector<Gl2Element> labels;       // regular: all elements; coset: coset reps
    std::vector<int32_t> element_index;   // pack() -> enumeration index
    std::vector<int32_t> coset_of;        // enumeration index -> coset label

    int32_t index_of(const Gl2Element& m) const;
};

// Throws std::invalid_argument for a kind/group pair that is not a faithful
// action (natural needs GL2, projective needs PGL2).
PermAction build_rep(PrimeEll ell, PermKind kind, GroupTag group);

// Coset action on G/H for a subgroup given by an element list. Throws
// std::domain_error if the list is not closed under product and inverse, or
// if the action has a nontrivial kernel.
PermAction build_coset_rep(PrimeEll ell, GroupTag group, const std::vector<Gl2Element>& subgroup);

Perm act(const PermAction& rep, const Gl2Element& m);

// Number of cycles, counting fixed points as 1-cycles.
uint64_t orbit_count(const Perm& p);

// degree - orbit_count(act(rep, m)). For regular actions of degree > 10^4
// this uses the free-action identity ind = d - d / order(m) instead of
// materializing the permutation.
uint64_t element_index(const PermAction& rep, const Gl2Element& m);

// (cycle length, multiplicity), ascending by length.
std::vector<std::pair<uint64_t, uint64_t>> cycle_type(const Perm& p);

inline uint32_t natural_point_index(PrimeEll l, uint32_t x, uint32_t y) {
    return x * l.value + y - 1;
}

} // namespace gl2
