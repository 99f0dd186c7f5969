#include "gl2/permrep.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <unordered_set>

#include "gl2/modarith.hpp"

namespace gl2 {

std::string to_string(PermKind k) {
    switch (k) {
        case PermKind::natural: return "natural";
        case PermKind::projective: return "projective";
        case PermKind::regular: return "regular";
        case PermKind::coset: return "coset";
    }
    return "?";
}

std::string to_string(GroupTag g) { return g == GroupTag::GL2 ? "GL2" : "PGL2"; }

PermKind perm_kind_from_string(const std::string& s) {
    if (s == "natural") return PermKind::natural;
    if (s == "projective") return PermKind::projective;
    if (s == "regular") return PermKind::regular;
    if (s == "coset") return PermKind::coset;
    throw std::invalid_argument("unknown representation kind: " + s);
}

GroupTag group_tag_from_string(const std::string& s) {
    if (s == "GL2" || s == "gl2") return GroupTag::GL2;
    if (s == "PGL2" || s == "pgl2") return GroupTag::PGL2;
    throw std::invalid_argument("unknown group tag: " + s);
}

bool Perm::is_identity() const {
    for (uint32_t i = 0; i < images.size(); ++i)
        if (images[i] != i) return false;
    return true;
}

namespace {

// generators of GL2(F_ell): the two standard transvections plus diag(g, 1)
// for a primitive root g. Their images generate PGL2.
std::vector<Gl2Element> standard_generators(PrimeEll l) {
    std::vector<Gl2Element> gens;
    gens.push_back(Gl2Element(l, 1, 1, 0, 1));
    gens.push_back(Gl2Element(l, 1, 0, 1, 1));
    if (l.value > 2) {
        uint32_t g = 2;
        while (true) {
            uint64_t k = 1, p = g % l.value;
            while (p != 1) { p = p * g % l.value; ++k; }
            if (k == l.value - 1) break;
            ++g;
        }
        gens.push_back(Gl2Element(l, g, 0, 0, 1));
    }
    return gens;
}

void check_transitive(const PermAction& rep) {
    std::vector<Perm> gens;
    for (const auto& g : standard_generators(rep.ell)) gens.push_back(act(rep, g));
    std::vector<char> seen(rep.degree, 0);
    std::vector<uint32_t> stack{0};
    seen[0] = 1;
    uint64_t found = 1;
    while (!stack.empty()) {
        uint32_t v = stack.back();
        stack.pop_back();
        for (const auto& p : gens) {
            uint32_t w = p.images[v];
            if (!seen[w]) { seen[w] = 1; ++found; stack.push_back(w); }
        }
    }
    if (found != rep.degree) throw std::logic_error("permrep: action is not transitive");
}

void build_element_table(PermAction& rep) {
    const uint64_t q = rep.ell.value;
    const uint64_t span = q * q * q * q;
    if (span > (1ull << 26))
        throw std::invalid_argument("permrep: ell too large for an enumerated representation");
    rep.element_index.assign(span, -1);
    for (size_t i = 0; i < rep.labels.size(); ++i)
        rep.element_index[rep.labels[i].pack()] = static_cast<int32_t>(i);
}

} // namespace

int32_t PermAction::index_of(const Gl2Element& m) const {
    int32_t i = element_index[m.pack()];
    if (i < 0) throw std::logic_error("permrep: element not in enumeration");
    return i;
}

PermAction build_rep(PrimeEll ell, PermKind kind, GroupTag group) {
    const uint64_t q = ell.value;
    PermAction rep{ell, kind, group, 0, {}, {}, {}};
    switch (kind) {
        case PermKind::natural:
            if (group != GroupTag::GL2)
                throw std::invalid_argument("natural representation requires group GL2");
            rep.degree = q * q - 1;
            break;
        case PermKind::projective:
            if (group != GroupTag::PGL2)
                throw std::invalid_argument("projective representation requires group PGL2");
            rep.degree = q + 1;
            break;
        case PermKind::regular:
            rep.labels = group == GroupTag::GL2 ? enumerate_gl2(ell) : enumerate_pgl2(ell);
            rep.degree = rep.labels.size();
            build_element_table(rep);
            break;
        case PermKind::coset:
            throw std::invalid_argument("coset representations need a subgroup; use build_coset_rep");
    }
    check_transitive(rep);
    return rep;
}

PermAction build_coset_rep(PrimeEll ell, GroupTag group, const std::vector<Gl2Element>& subgroup) {
    PermAction rep{ell, PermKind::coset, group, 0, {}, {}, {}};
    std::vector<Gl2Element> all = group == GroupTag::GL2 ? enumerate_gl2(ell) : enumerate_pgl2(ell);
    rep.labels = all;  // temporarily: full enumeration for the table
    build_element_table(rep);

    auto canon = [&](const Gl2Element& m) {
        return group == GroupTag::PGL2 ? projective_canonical(m) : m;
    };

    // normalize the subgroup list and verify closure
    std::vector<Gl2Element> H;
    std::unordered_set<uint64_t> members;
    for (const auto& h : subgroup) {
        if (h.ell != ell.value) throw std::invalid_argument("coset subgroup: modulus mismatch");
        Gl2Element ch = canon(h);
        if (members.insert(ch.pack()).second) H.push_back(ch);
    }
    if (H.empty() || !members.count(Gl2Element::identity(ell).pack()))
        throw std::domain_error("coset subgroup: closure violation (missing identity)");
    for (const auto& h1 : H) {
        if (!members.count(canon(gl2_inverse(h1)).pack()))
            throw std::domain_error("coset subgroup: closure violation (inverse missing)");
        for (const auto& h2 : H)
            if (!members.count(canon(gl2_mul(h1, h2)).pack()))
                throw std::domain_error("coset subgroup: closure violation (product escapes)");
    }

    // partition into left cosets gH; identity coset gets label 0
    rep.coset_of.assign(all.size(), -1);
    std::vector<Gl2Element> reps;
    auto sweep = [&](const Gl2Element& g) {
        int32_t label = static_cast<int32_t>(reps.size());
        reps.push_back(g);
        for (const auto& h : H) rep.coset_of[rep.index_of(canon(gl2_mul(g, h)))] = label;
    };
    sweep(Gl2Element::identity(ell));
    for (size_t i = 0; i < all.size(); ++i)
        if (rep.coset_of[i] < 0) sweep(all[i]);

    rep.degree = reps.size();
    // element_index still maps the full enumeration; coset_of projects it
    rep.labels = std::move(reps);

    // faithfulness: the kernel is normal, so checking one representative per
    // conjugacy class suffices
    for (const auto& cls : conjugacy_class_reps(ell)) {
        Gl2Element m = canon(cls.rep);
        if (m.is_identity() || (group == GroupTag::PGL2 && m.is_scalar())) continue;
        if (act(rep, m).is_identity())
            throw std::domain_error("coset action is not faithful (nontrivial core)");
    }
    check_transitive(rep);
    return rep;
}

Perm act(const PermAction& rep, const Gl2Element& m) {
    if (m.ell != rep.ell.value) throw std::invalid_argument("act: modulus mismatch");
    const uint64_t q = rep.ell.value;
    Perm p;
    p.images.resize(rep.degree);
    switch (rep.kind) {
        case PermKind::natural: {
            for (uint32_t x = 0; x < q; ++x)
                for (uint32_t y = (x == 0 ? 1u : 0u); y < q; ++y) {
                    uint32_t nx = static_cast<uint32_t>((static_cast<uint64_t>(m.a) * x + static_cast<uint64_t>(m.b) * y) % q);
                    uint32_t ny = static_cast<uint32_t>((static_cast<uint64_t>(m.c) * x + static_cast<uint64_t>(m.d) * y) % q);
                    p.images[natural_point_index(rep.ell, x, y)] = natural_point_index(rep.ell, nx, ny);
                }
            break;
        }
        case PermKind::projective: {
            auto image = [&](uint32_t x, uint32_t y) -> uint32_t {
                uint32_t nx = static_cast<uint32_t>((static_cast<uint64_t>(m.a) * x + static_cast<uint64_t>(m.b) * y) % q);
                uint32_t ny = static_cast<uint32_t>((static_cast<uint64_t>(m.c) * x + static_cast<uint64_t>(m.d) * y) % q);
                if (nx == 0) return static_cast<uint32_t>(q);  // [0:1]
                return static_cast<uint32_t>(ny * invmod(nx, q) % q);
            };
            for (uint32_t t = 0; t < q; ++t) p.images[t] = image(1, t);
            p.images[q] = image(0, 1);
            break;
        }
        case PermKind::regular: {
            Gl2Element g = rep.group == GroupTag::PGL2 ? projective_canonical(m) : m;
            for (size_t i = 0; i < rep.labels.size(); ++i) {
                Gl2Element im = gl2_mul(g, rep.labels[i]);
                if (rep.group == GroupTag::PGL2) im = projective_canonical(im);
                p.images[i] = static_cast<uint32_t>(rep.index_of(im));
            }
            break;
        }
        case PermKind::coset: {
            Gl2Element g = rep.group == GroupTag::PGL2 ? projective_canonical(m) : m;
            for (size_t i = 0; i < rep.labels.size(); ++i) {
                Gl2Element im = gl2_mul(g, rep.labels[i]);
                if (rep.group == GroupTag::PGL2) im = projective_canonical(im);
                p.images[i] = static_cast<uint32_t>(rep.coset_of[rep.index_of(im)]);
            }
            break;
        }
    }
    return p;
}

uint64_t orbit_count(const Perm& p) {
    std::vector<char> seen(p.images.size(), 0);
    uint64_t orbits = 0;
    for (uint32_t i = 0; i < p.images.size(); ++i) {
        if (seen[i]) continue;
        ++orbits;
        uint32_t j = i;
        while (!seen[j]) { seen[j] = 1; j = p.images[j]; }
    }
    return orbits;
}

uint64_t element_index(const PermAction& rep, const Gl2Element& m) {
    if (rep.kind == PermKind::regular && rep.degree > 10000) {
        // left multiplication is free: every cycle has length order(m)
        uint64_t ord = rep.group == GroupTag::GL2 ? element_order(m) : projective_order(m);
        if (rep.degree % ord != 0) throw std::logic_error("element_index: order does not divide degree");
        return rep.degree - rep.degree / ord;
    }
    return rep.degree - orbit_count(act(rep, m));
}

std::vector<std::pair<uint64_t, uint64_t>> cycle_type(const Perm& p) {
    std::map<uint64_t, uint64_t> hist;
    std::vector<char> seen(p.images.size(), 0);
    for (uint32_t i = 0; i < p.images.size(); ++i) {
        if (seen[i]) continue;
        uint64_t len = 0;
        uint32_t j = i;
        while (!seen[j]) { seen[j] = 1; j = p.images[j]; ++len; }
        ++hist[len];
    }
    return {hist.begin(), hist.end()};
}

} // namespace gl2
