#include "domvar/problem.hpp"

namespace domvar {

std::string_view to_string(Variant v) {
    switch (v) {
    case Variant::DS: return "ds";
    case Variant::EDS: return "eds";
    case Variant::IDS: return "ids";
    case Variant::DC: return "dc";
    case Variant::TDS: return "tds";
    case Variant::THDS: return "thds";
    }
    return "?";
}

std::optional<Variant> parse_variant(std::string_view token) {
    for (Variant v : {Variant::DS, Variant::EDS, Variant::IDS, Variant::DC, Variant::TDS, Variant::THDS})
        if (token == to_string(v)) return v;
    return std::nullopt;
}

int effective_threshold(Variant v, int r) {
    if (v == Variant::TDS) return 1;
    if (v == Variant::THDS) return r;
    return 0;
}

bool operator==(const DomInstance &a, const DomInstance &b) {
    return a.graph == b.graph && a.modulator.kind == b.modulator.kind &&
           a.modulator.vertices == b.modulator.vertices && a.variant == b.variant && a.budget == b.budget &&
           a.threshold == b.threshold && a.comments == b.comments;
}

std::string_view to_string(Status s) { return s == Status::Feasible ? "FEASIBLE" : "INFEASIBLE"; }

} // namespace domvar
