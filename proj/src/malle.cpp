#include "gl2/malle.hpp"

#include <limits>
#include <stdexcept>

namespace gl2 {

std::pair<uint64_t, Gl2Element> malle_index(const PermAction& rep) {
    uint64_t best = std::numeric_limits<uint64_t>::max();
    Gl2Element witness = Gl2Element::identity(rep.ell);
    for (const auto& cls : conjugacy_class_reps(rep.ell)) {
        uint64_t ind = element_index(rep, cls.rep);
        if (ind == 0) continue;  // acts trivially: identity, or a scalar seen by PGL2
        if (ind < best) {
            best = ind;
            witness = cls.rep;
        }
    }
    if (best == std::numeric_limits<uint64_t>::max())
        throw std::logic_error("malle_index: no nonidentity element found");
    return {best, witness};
}

uint64_t inertia_exponent(const PermAction& rep) {
    return element_index(rep, Gl2Element::inertia_generator(rep.ell));
}

ExponentReport exponent_report(const PermAction& rep) {
    auto [ind, witness] = malle_index(rep);
    uint64_t k = inertia_exponent(rep);
    return ExponentReport{
        .ell = rep.ell.value,
        .kind = rep.kind,
        .group = rep.group,
        .degree = rep.degree,
        .malle_ind = ind,
        .malle_a = unit_fraction(ind),
        .inertia_ind = k,
        .lower_exponent = unit_fraction(2 * k),
        .witness = witness,
    };
}

ExponentReport exponent_report(PrimeEll ell, PermKind kind, GroupTag group) {
    return exponent_report(build_rep(ell, kind, group));
}

Json report_json(const ExponentReport& r) {
    Json j = Json::object();
    j["ell"] = r.ell;
    j["kind"] = to_string(r.kind);
    j["group"] = to_string(r.group);
    j["degree"] = r.degree;
    j["malle_ind"] = r.malle_ind;
    j["malle_a"] = rat_json(r.malle_a);
    j["inertia_ind"] = r.inertia_ind;
    j["lower_exponent"] = rat_json(r.lower_exponent);
    j["witness"] = Json{{"a", r.witness.a}, {"b", r.witness.b}, {"c", r.witness.c}, {"d", r.witness.d}};
    return j;
}

} // namespace gl2
