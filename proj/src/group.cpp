#include "gl2/group.hpp"

#include <stdexcept>

#include "gl2/modarith.hpp"

namespace gl2 {

PrimeEll::PrimeEll(uint32_t v) : value(v) {
    if (v < 2 || !is_prime_u64(v))
        throw std::invalid_argument("PrimeEll: " + std::to_string(v) + " is not prime");
    if (v >= (1u << 15))
        throw std::invalid_argument("PrimeEll: modulus must be below 2^15");
}

std::string to_string(DiscClass c) {
    switch (c) {
        case DiscClass::zero: return "zero";
        case DiscClass::nonzero_square: return "nonzero-square";
        case DiscClass::nonsquare: return "nonsquare";
    }
    return "?";
}

namespace {

uint32_t reduce(int64_t x, uint32_t ell) {
    int64_t r = x % static_cast<int64_t>(ell);
    if (r < 0) r += ell;
    return static_cast<uint32_t>(r);
}

} // namespace

Gl2Element::Gl2Element(PrimeEll l, int64_t a_, int64_t b_, int64_t c_, int64_t d_)
    : ell(l.value),
      a(reduce(a_, l.value)),
      b(reduce(b_, l.value)),
      c(reduce(c_, l.value)),
      d(reduce(d_, l.value)) {
    if (det() == 0) throw std::invalid_argument("Gl2Element: matrix is singular mod ell");
}

Gl2Element Gl2Element::identity(PrimeEll l) { return {l, 1, 0, 0, 1}; }
Gl2Element Gl2Element::inertia_generator(PrimeEll l) { return {l, 1, 1, 0, 1}; }
Gl2Element Gl2Element::reflection(PrimeEll l) { return {l, 1, 0, 0, -1}; }

uint32_t Gl2Element::det() const {
    uint64_t pos = static_cast<uint64_t>(a) * d % ell;
    uint64_t neg = static_cast<uint64_t>(b) * c % ell;
    return static_cast<uint32_t>((pos + ell - neg) % ell);
}

uint32_t Gl2Element::trace() const { return (a + d) % ell; }

uint64_t Gl2Element::pack() const {
    uint64_t e = ell;
    return ((static_cast<uint64_t>(a) * e + b) * e + c) * e + d;
}

uint64_t gl2_order(PrimeEll l) {
    uint64_t q = l.value;
    return (q * q - 1) * (q * q - q);
}

uint64_t pgl2_order(PrimeEll l) {
    uint64_t q = l.value;
    return q * (q * q - 1);
}

Gl2Element gl2_mul(const Gl2Element& m, const Gl2Element& n) {
    if (m.ell != n.ell) throw std::invalid_argument("gl2_mul: modulus mismatch");
    uint64_t e = m.ell;
    PrimeEll l(m.ell);
    return {l,
            static_cast<int64_t>((static_cast<uint64_t>(m.a) * n.a + static_cast<uint64_t>(m.b) * n.c) % e),
            static_cast<int64_t>((static_cast<uint64_t>(m.a) * n.b + static_cast<uint64_t>(m.b) * n.d) % e),
            static_cast<int64_t>((static_cast<uint64_t>(m.c) * n.a + static_cast<uint64_t>(m.d) * n.c) % e),
            static_cast<int64_t>((static_cast<uint64_t>(m.c) * n.b + static_cast<uint64_t>(m.d) * n.d) % e)};
}

Gl2Element gl2_inverse(const Gl2Element& m) {
    uint64_t idet = invmod(m.det(), m.ell);
    PrimeEll l(m.ell);
    auto mul = [&](uint32_t x) { return static_cast<int64_t>(x * idet % m.ell); };
    return {l, mul(m.d), mul((m.ell - m.b) % m.ell), mul((m.ell - m.c) % m.ell), mul(m.a)};
}

bool is_square_in_fl(uint32_t x, PrimeEll l) {
    x %= l.value;
    if (x == 0) return true;
    if (l.value == 2) return true;
    return legendre(x, l.value) == 1;
}

ElementInvariants invariants_of(const Gl2Element& m) {
    uint32_t ell = m.ell;
    uint32_t tr = m.trace();
    uint32_t det = m.det();
    uint64_t tr2 = static_cast<uint64_t>(tr) * tr % ell;
    uint32_t disc = static_cast<uint32_t>((tr2 + ell - (4ull * det) % ell) % ell);
    uint32_t u = static_cast<uint32_t>(tr2 * invmod(det, ell) % ell);
    DiscClass dc;
    if (disc == 0) dc = DiscClass::zero;
    else dc = is_square_in_fl(disc, PrimeEll(ell)) ? DiscClass::nonzero_square : DiscClass::nonsquare;
    return {tr, det, disc, u, dc};
}

Gl2Element projective_canonical(const Gl2Element& m) {
    uint32_t first = m.a ? m.a : (m.b ? m.b : (m.c ? m.c : m.d));
    uint64_t s = invmod(first, m.ell);
    PrimeEll l(m.ell);
    return {l,
            static_cast<int64_t>(m.a * s % m.ell), static_cast<int64_t>(m.b * s % m.ell),
            static_cast<int64_t>(m.c * s % m.ell), static_cast<int64_t>(m.d * s % m.ell)};
}

uint64_t element_order(const Gl2Element& m) {
    Gl2Element p = m;
    uint64_t k = 1;
    const uint64_t cap = gl2_order(PrimeEll(m.ell)) + 1;
    while (!p.is_identity()) {
        p = gl2_mul(p, m);
        if (++k > cap) throw std::logic_error("element_order: did not terminate");
    }
    return k;
}

uint64_t projective_order(const Gl2Element& m) {
    Gl2Element p = m;
    uint64_t k = 1;
    const uint64_t cap = gl2_order(PrimeEll(m.ell)) + 1;
    while (!p.is_scalar()) {
        p = gl2_mul(p, m);
        if (++k > cap) throw std::logic_error("projective_order: did not terminate");
    }
    return k;
}

std::vector<Gl2Element> enumerate_gl2(PrimeEll l) {
    const uint32_t q = l.value;
    std::vector<Gl2Element> out;
    out.reserve(gl2_order(l));
    for (uint32_t a = 0; a < q; ++a)
        for (uint32_t b = 0; b < q; ++b)
            for (uint32_t c = 0; c < q; ++c)
                for (uint32_t d = 0; d < q; ++d) {
                    if ((static_cast<uint64_t>(a) * d + q - static_cast<uint64_t>(b) * c % q) % q == 0) continue;
                    out.emplace_back(l, a, b, c, d);
                }
    return out;
}

std::vector<Gl2Element> enumerate_pgl2(PrimeEll l) {
    const uint32_t q = l.value;
    std::vector<Gl2Element> out;
    out.reserve(pgl2_order(l));
    for (uint32_t a = 0; a < q; ++a)
        for (uint32_t b = 0; b < q; ++b)
            for (uint32_t c = 0; c < q; ++c)
                for (uint32_t d = 0; d < q; ++d) {
                    uint32_t first = a ? a : (b ? b : (c ? c : d));
                    if (first != 1) continue;
                    if ((static_cast<uint64_t>(a) * d + q - static_cast<uint64_t>(b) * c % q) % q == 0) continue;
                    out.emplace_back(l, a, b, c, d);
                }
    return out;
}

std::vector<ConjClass> conjugacy_class_reps(PrimeEll l) {
    const uint32_t q = l.value;
    std::vector<ConjClass> out;

    // central: diag(a,a), class size 1
    for (uint32_t a = 1; a < q; ++a)
        out.push_back({Gl2Element(l, a, 0, 0, a), 1});

    // non-semisimple: [[a,1],[0,a]], class size q^2 - 1
    for (uint32_t a = 1; a < q; ++a)
        out.push_back({Gl2Element(l, a, 1, 0, a), static_cast<uint64_t>(q) * q - 1});

    // split semisimple: diag(a,b), a < b, class size q(q+1)
    for (uint32_t a = 1; a < q; ++a)
        for (uint32_t b = a + 1; b < q; ++b)
            out.push_back({Gl2Element(l, a, 0, 0, b), static_cast<uint64_t>(q) * (q + 1)});

    // non-split semisimple: companion matrix of x^2 - tx + n with no root in
    // F_ell, one class per (t, n), class size q(q-1). The root-free test also
    // covers ell = 2, where the Euler criterion degenerates.
    for (uint32_t t = 0; t < q; ++t)
        for (uint32_t n = 1; n < q; ++n) {
            bool has_root = false;
            for (uint32_t x = 0; x < q && !has_root; ++x) {
                uint64_t v = (static_cast<uint64_t>(x) * x + n + static_cast<uint64_t>(q - t) * x) % q;
                if (v == 0) has_root = true;
            }
            if (has_root) continue;
            out.push_back({Gl2Element(l, 0, static_cast<int64_t>(q - n) % q, 1, t),
                           static_cast<uint64_t>(q) * (q - 1)});
        }

    return out;
}

} // namespace gl2
