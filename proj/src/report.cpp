#include "fibercert/report.hpp"

#include <sstream>

namespace fibercert {

OrderedJson poly_to_json(const LaurentPoly& f) {
    OrderedJson j;
    j["offset"] = f.is_zero() ? 0 : f.offset();
    std::vector<std::string> coeffs;
    for (const auto& c : f.coeffs())
        coeffs.push_back(c.get_str());
    j["coeffs"] = coeffs;
    return j;
}

LaurentPoly poly_from_json(const OrderedJson& j, Ring ring) {
    std::vector<mpz_class> coeffs;
    for (const auto& c : j.at("coeffs"))
        coeffs.emplace_back(c.get<std::string>());
    return LaurentPoly::from_coeffs(ring, j.at("offset").get<long>(), std::move(coeffs));
}

namespace {

std::vector<std::string> image_names(const Hom& hom) {
    std::vector<std::string> names;
    for (int x : hom.images)
        names.push_back(hom.target->element_names[static_cast<std::size_t>(x)]);
    return names;
}

const char* route_name(DeltaRoute r) { return r == DeltaRoute::WadaZ ? "wada-Z" : "smith-Fp"; }

} // namespace

OrderedJson alex_to_json(const AlexPolys& polys, const Hom& hom) {
    OrderedJson j;
    j["group"] = hom.target->name;
    j["images"] = image_names(hom);
    j["image_indices"] = hom.images;
    j["div"] = polys.div;
    j["delta0"] = poly_to_json(polys.delta0);
    j["delta1"] = poly_to_json(polys.delta1);
    if (polys.delta2.is_zero())
        j["delta2"] = nullptr;
    else
        j["delta2"] = poly_to_json(polys.delta2);
    j["route"] = route_name(polys.route);
    j["ring"] = polys.ring.str();
    if (polys.pivot_generator >= 0)
        j["pivot"] = polys.pivot_generator;
    else
        j["pivot"] = nullptr;
    return j;
}

OrderedJson verdict_entry_to_json(const PropertyMVerdict& v) {
    OrderedJson j;
    j["group"] = v.hom.target->name;
    j["order"] = v.hom.target->order;
    j["images"] = image_names(v.hom);
    j["image_indices"] = v.hom.images;
    j["div"] = v.div;
    if (v.degree)
        j["degree"] = *v.degree;
    else
        j["degree"] = nullptr;
    j["expected_degree"] = v.expected_degree;
    j["monic"] = v.monic;
    j["pass"] = v.pass;
    j["evidence"] = v.evidence == Evidence::ZExact ? "Z-exact" : "Fp-only";
    j["delta1"] = v.polys.delta1.str();
    j["alex"] = alex_to_json(v.polys, v.hom);
    if (!v.note.empty())
        j["note"] = v.note;
    if (!v.mod_p.empty()) {
        OrderedJson arr = OrderedJson::array();
        for (const auto& c : v.mod_p) {
            OrderedJson cj;
            cj["p"] = c.p;
            cj["gate"] = c.gate;
            cj["equal"] = c.equal;
            cj["degree_drop"] = c.degree_drop;
            arr.push_back(cj);
        }
        j["mod_p"] = arr;
    }
    return j;
}

std::string verdict_name(VerdictType t) {
    switch (t) {
    case VerdictType::NotFibered:
        return "NotFibered";
    case VerdictType::ConsistentUpTo:
        return "ConsistentUpTo";
    default:
        return "Degenerate";
    }
}

OrderedJson report_to_json(const CertReport& report) {
    OrderedJson j;
    j["schema"] = kReportSchema;
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    j["budget"] = {{"max_order", report.budget.max_order},
                   {"primes", report.budget.primes},
                   {"time_limit_ms", report.budget.time_limit_ms}};
    j["input"] = {{"label", report.label},
                  {"generators", report.num_generators},
                  {"relators", report.num_relators},
                  {"phi", report.phi_values},
                  {"b3", report.b3}};
    OrderedJson v;
    v["type"] = verdict_name(report.verdict.type);
    if (report.verdict.type == VerdictType::ConsistentUpTo) {
        v["max_order"] = report.verdict.max_order;
    }
    v["quotient_count"] = report.verdict.quotient_count;
    if (report.verdict.witness)
        v["witness"] = verdict_entry_to_json(*report.verdict.witness);
    if (!report.verdict.reason.empty())
        v["reason"] = report.verdict.reason;
    j["verdict"] = v;
    if (report.inferred_norm)
        j["inferred_norm"] = *report.inferred_norm;
    else
        j["inferred_norm"] = nullptr;
    j["truncated"] = report.truncated;
    OrderedJson ledger = OrderedJson::array();
    for (const auto& entry : report.ledger)
        ledger.push_back(verdict_entry_to_json(entry));
    j["ledger"] = ledger;
    return j;
}

namespace {

Ring ring_from_name(const std::string& name) {
    if (name == "Z")
        return ring_z();
    if (name.size() > 1 && name[0] == 'F')
        return ring_fp(std::stol(name.substr(1)));
    throw InputError("unknown ring tag " + name);
}

GroupPtr group_by_name(const std::string& name, int order) {
    for (const auto& g : catalog(std::min(64, std::max(1, order))))
        if (g->name == name)
            return g;
    throw InputError("group " + name + " not in catalog");
}

PropertyMVerdict verdict_entry_from_json(const OrderedJson& j) {
    PropertyMVerdict v;
    GroupPtr g = group_by_name(j.at("group").get<std::string>(), j.at("order").get<int>());
    Presentation free_pres; // no relators: enough to rebuild the hom object
    free_pres.num_generators = static_cast<int>(j.at("image_indices").size());
    v.hom = Hom(g, free_pres, j.at("image_indices").get<std::vector<int>>());
    v.div = j.at("div").get<long>();
    if (!j.at("degree").is_null())
        v.degree = j.at("degree").get<long>();
    v.expected_degree = j.at("expected_degree").get<long>();
    v.monic = j.at("monic").get<bool>();
    v.pass = j.at("pass").get<bool>();
    v.evidence = j.at("evidence").get<std::string>() == "Z-exact" ? Evidence::ZExact
                                                                  : Evidence::FpOnly;
    if (j.contains("note"))
        v.note = j.at("note").get<std::string>();
    const OrderedJson& a = j.at("alex");
    Ring ring = ring_from_name(a.at("ring").get<std::string>());
    v.polys.ring = ring;
    v.polys.div = a.at("div").get<long>();
    v.polys.route = a.at("route").get<std::string>() == "wada-Z" ? DeltaRoute::WadaZ
                                                                 : DeltaRoute::SmithFp;
    v.polys.pivot_generator = a.at("pivot").is_null() ? -1 : a.at("pivot").get<int>();
    v.polys.delta0 = poly_from_json(a.at("delta0"), ring);
    v.polys.delta1 = poly_from_json(a.at("delta1"), ring);
    if (!a.at("delta2").is_null())
        v.polys.delta2 = poly_from_json(a.at("delta2"), ring);
    else
        v.polys.delta2 = LaurentPoly::zero(ring);
    if (j.contains("mod_p"))
        for (const auto& cj : j.at("mod_p")) {
            ModPConsistency c;
            c.p = cj.at("p").get<long>();
            c.gate = cj.at("gate").get<bool>();
            c.equal = cj.at("equal").get<bool>();
            c.degree_drop = cj.at("degree_drop").get<bool>();
            v.mod_p.push_back(c);
        }
    v.delta_zero = v.polys.delta1.is_zero();
    return v;
}

} // namespace

CertReport report_from_json(const OrderedJson& j) {
    if (j.at("schema").get<std::string>() != kReportSchema)
        throw InputError("unknown report schema");
    CertReport r;
    r.budget.max_order = j.at("budget").at("max_order").get<int>();
    r.budget.primes = j.at("budget").at("primes").get<std::vector<long>>();
    r.budget.time_limit_ms = j.at("budget").at("time_limit_ms").get<long>();
    r.label = j.at("input").at("label").get<std::string>();
    r.num_generators = j.at("input").at("generators").get<int>();
    r.num_relators = j.at("input").at("relators").get<int>();
    r.phi_values = j.at("input").at("phi").get<std::vector<long>>();
    r.b3 = j.at("input").at("b3").get<int>();
    const OrderedJson& v = j.at("verdict");
    std::string type = v.at("type").get<std::string>();
    r.verdict.type = type == "NotFibered"       ? VerdictType::NotFibered
                     : type == "ConsistentUpTo" ? VerdictType::ConsistentUpTo
                                                : VerdictType::Degenerate;
    if (v.contains("max_order"))
        r.verdict.max_order = v.at("max_order").get<int>();
    r.verdict.quotient_count = v.at("quotient_count").get<long>();
    if (v.contains("witness"))
        r.verdict.witness = verdict_entry_from_json(v.at("witness"));
    if (v.contains("reason"))
        r.verdict.reason = v.at("reason").get<std::string>();
    if (!j.at("inferred_norm").is_null())
        r.inferred_norm = j.at("inferred_norm").get<long>();
    r.truncated = j.at("truncated").get<bool>();
    for (const auto& entry : j.at("ledger"))
        r.ledger.push_back(verdict_entry_from_json(entry));
    return r;
}

std::string alex_to_text(const AlexPolys& polys, const Hom& hom) {
    std::ostringstream out;
    out << "group " << hom.target->name << "  images = [";
    auto names = image_names(hom);
    for (std::size_t i = 0; i < names.size(); ++i)
        out << (i ? ", " : "") << names[i];
    out << "]  div = " << polys.div << "  route = " << route_name(polys.route) << "\n";
    out << "  Δ0 = " << polys.delta0.str() << "\n";
    out << "  Δ1 = " << polys.delta1.str();
    if (!polys.delta1.is_zero()) {
        out << " (" << (polys.delta1.is_monic() ? "monic" : "not monic") << ", deg "
            << *polys.delta1.deg_span() << ")";
    } else {
        out << " (zero, deg -inf)";
    }
    out << "\n";
    if (!polys.delta2.is_zero())
        out << "  Δ2 = " << polys.delta2.str() << "\n";
    return out.str();
}

std::string report_to_text(const CertReport& report) {
    std::ostringstream out;
    out << "certify " << (report.label.empty() ? "<unnamed>" : report.label) << ": ";
    switch (report.verdict.type) {
    case VerdictType::NotFibered: {
        const auto& w = *report.verdict.witness;
        out << "NOT FIBERED\n";
        out << "  witness: group " << w.hom.target->name << ", Δ1 = " << w.polys.delta1.str()
            << ", ";
        if (w.degree)
            out << "deg " << *w.degree;
        else
            out << "deg -inf";
        out << " vs expected " << w.expected_degree << ", "
            << (w.monic ? "monic" : "not monic") << "\n";
        if (!w.note.empty())
            out << "  note: " << w.note << "\n";
        break;
    }
    case VerdictType::ConsistentUpTo:
        out << "consistent with fibering up to quotient order " << report.verdict.max_order
            << " (" << report.verdict.quotient_count << " quotients checked)\n";
        if (report.inferred_norm)
            out << "  inferred Thurston norm: " << *report.inferred_norm << "\n";
        break;
    case VerdictType::Degenerate:
        out << "DEGENERATE: " << report.verdict.reason << "\n";
        break;
    }
    for (const auto& v : report.ledger) {
        out << "  [" << (v.pass ? "pass" : "FAIL") << "] " << v.hom.target->name << " |G|="
            << v.hom.target->order << " div=" << v.div << " deg=";
        if (v.degree)
            out << *v.degree;
        else
            out << "-inf";
        out << "/" << v.expected_degree << " Δ1=" << v.polys.delta1.str() << " ("
            << (v.evidence == Evidence::ZExact ? "Z-exact" : "Fp-only") << ")\n";
    }
    return out.str();
}

int verdict_exit_code(const CertReport& report) {
    switch (report.verdict.type) {
    case VerdictType::ConsistentUpTo:
        return 0;
    case VerdictType::NotFibered:
        return 3;
    default:
        return 4;
    }
}

} // namespace fibercert
