#include "fibercert/certify.hpp"

#include <chrono>

#include "fibercert/mapping_torus.hpp"
#include "fibercert/util.hpp"

namespace fibercert {

void Budget::validate() const {
    if (max_order < 1 || max_order > 64)
        throw InputError("max_order must be in 1..64");
    for (long p : primes)
        if (!is_prime(p))
            throw InputError("configured prime " + std::to_string(p) + " is not prime");
    if (time_limit_ms < 0)
        throw InputError("time limit must be nonnegative");
    if (jobs < 1)
        throw InputError("jobs must be at least 1");
}

PropertyMVerdict check_property_m(const AlexPolys& alex, long norm, const ManifoldMeta& meta,
                                  const Hom& hom) {
    if (norm < 0)
        throw InputError("Thurston norm must be nonnegative");
    PropertyMVerdict v;
    v.hom = hom;
    v.div = alex.div;
    v.polys = alex;
    v.evidence = alex.ring.is_fp() ? Evidence::FpOnly : Evidence::ZExact;
    v.expected_degree = hom.target->order * norm + (1 + meta.b3) * alex.div;
    if (alex.delta1.is_zero()) {
        v.delta_zero = true;
        v.monic = false;
        v.pass = false;
        v.note = "delta1 = 0: degree criterion fails; N is not prime or not a "
                 "3-manifold group presentation";
        return v;
    }
    v.degree = alex.delta1.deg_span();
    v.monic = alex.delta1.is_monic();
    v.pass = v.monic && *v.degree == v.expected_degree;
    return v;
}

namespace {

bool excluded_presentation(const Presentation& pres) {
    // S^1 x D^2 (solid torus) and S^1 x S^2 presentations: a single
    // generator and no relators. The degree formula fails there by design.
    return pres.num_generators == 1 && pres.relators.empty();
}

struct QuotientJob {
    GroupPtr group;
    Hom hom;
};

PropertyMVerdict evaluate_quotient(const Presentation& pres, const PhiClass& phi,
                                   const ManifoldMeta& meta, const Budget& budget,
                                   const Hom& hom, long norm) {
    TwistedSetup setup{pres, phi, hom, ring_z(), meta};
    DeltaBundle bundle = compute_delta_bundle(setup, budget.primes);
    PropertyMVerdict v;
    if (bundle.z.ok()) {
        v = check_property_m(*bundle.z.polys, norm, meta, hom);
        for (const ModPConsistency& c : bundle.consistency) {
            if (c.gate && !c.equal)
                throw InternalError("route disagreement at p = " + std::to_string(c.p));
            v.mod_p.push_back(c);
        }
        return v;
    }
    // Deficiency != 1: F_p-only evidence. Monicness is automatic over a
    // field, so the checkable content is nonvanishing plus the degree; a
    // span below the expected degree is decisive (a monic integral
    // polynomial of the right degree cannot lose span mod p).
    if (budget.primes.empty())
        throw InputError("Z route unavailable and no primes configured: " +
                         bundle.z.unavailable_reason);
    AlexPolys reported;
    bool any_zero = false;
    std::optional<long> min_deg, max_deg;
    for (std::size_t k = 0; k < bundle.fp.size(); ++k) {
        const AlexPolys& polys = bundle.fp[k];
        if (k == 0 || (polys.delta1.is_zero() && !reported.delta1.is_zero()))
            reported = polys;
        if (polys.delta1.is_zero()) {
            any_zero = true;
            continue;
        }
        long span = *polys.delta1.deg_span();
        min_deg = min_deg ? std::min(*min_deg, span) : span;
        max_deg = max_deg ? std::max(*max_deg, span) : span;
        if (span < reported.delta1.deg_span().value_or(span + 1))
            reported = polys;
    }
    v.hom = hom;
    v.div = reported.div;
    v.polys = reported;
    v.evidence = Evidence::FpOnly;
    v.expected_degree = hom.target->order * norm + (1 + meta.b3) * reported.div;
    if (any_zero) {
        v.delta_zero = true;
        v.pass = false;
        v.note = "delta1 = 0 over some F_p";
        return v;
    }
    v.monic = true; // over a field; integral monicness is NOT certified
    v.degree = min_deg;
    v.pass = min_deg == max_deg && *min_deg == v.expected_degree;
    if (!v.pass && min_deg && *min_deg < v.expected_degree)
        v.note = "degree drop mod p: decisive against integral monicness";
    return v;
}

} // namespace

std::optional<long> infer_norm(const std::vector<PropertyMVerdict>& ledger, int b3,
                               std::pair<std::size_t, std::size_t>* conflict) {
    std::optional<long> x;
    std::size_t x_from = 0;
    for (std::size_t i = 0; i < ledger.size(); ++i) {
        const PropertyMVerdict& v = ledger[i];
        if (!v.degree)
            continue;
        long order = v.hom.target->order;
        long num = *v.degree - (1 + b3) * v.div;
        if (num % order != 0 || num / order < 0) {
            if (conflict)
                *conflict = {i, i};
            return std::nullopt;
        }
        long xi = num / order;
        if (!x) {
            x = xi;
            x_from = i;
        } else if (*x != xi) {
            if (conflict)
                *conflict = {x_from, i};
            return std::nullopt;
        }
    }
    return x;
}

CertReport certify(const Presentation& pres, const PhiClass& phi, const ManifoldMeta& meta,
                   const Budget& budget) {
    pres.validate();
    validate_phi(pres, phi);
    meta.validate();
    budget.validate();
    if (!phi.nontrivial())
        throw InputError("certify needs a nontrivial phi");
    if (excluded_presentation(pres))
        throw ExcludedInputError("input presents S^1 x D^2 or S^1 x S^2, which the degree "
                                 "criterion excludes");

    CertReport report;
    report.budget = budget;
    report.label = meta.label.empty() ? pres.label : meta.label;
    report.num_generators = pres.num_generators;
    report.num_relators = static_cast<int>(pres.relators.size());
    report.phi_values = phi.values();
    report.b3 = meta.b3;

    const auto start = std::chrono::steady_clock::now();
    auto out_of_time = [&]() {
        if (budget.time_limit_ms <= 0)
            return false;
        auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
        return elapsed > budget.time_limit_ms;
    };

    // Establish the norm from the hint or the trivial quotient.
    Hom triv = trivial_hom(pres);
    TwistedSetup triv_setup{pres, phi, triv, ring_z(), meta};
    DeltaOutcome triv_delta = compute_delta(triv_setup);
    long norm = 0;
    if (meta.norm_hint) {
        norm = *meta.norm_hint;
    } else {
        if (!triv_delta.ok()) {
            report.verdict = {VerdictType::Degenerate, std::nullopt, 0, 0,
                              "cannot infer the norm: " + triv_delta.unavailable_reason +
                                  "; pass an explicit norm"};
            return report;
        }
        if (triv_delta.polys->delta1.is_zero()) {
            PropertyMVerdict witness = check_property_m(*triv_delta.polys, 0, meta, triv);
            report.ledger.push_back(witness);
            report.verdict = {VerdictType::NotFibered, witness, 0, 1, ""};
            return report;
        }
        long deg = *triv_delta.polys->delta1.deg_span();
        norm = deg - (1 + meta.b3) * triv_delta.polys->div;
        if (norm < 0) {
            // No nonnegative norm can satisfy the trivial quotient: the
            // degree formula is infeasible, which is decisive.
            PropertyMVerdict witness = check_property_m(*triv_delta.polys, 0, meta, triv);
            witness.note = "trivial-quotient degree below (1+b3)*div: no admissible norm";
            report.ledger.push_back(witness);
            report.verdict = {VerdictType::NotFibered, witness, 0, 1, ""};
            return report;
        }
    }

    std::vector<GroupPtr> groups = catalog(budget.max_order);
    long quotient_count = 0;
    std::string degenerate_reason;

    for (const GroupPtr& group : groups) {
        if (out_of_time()) {
            report.truncated = true;
            break;
        }
        std::vector<Hom> homs;
        if (group->order == 1) {
            homs.push_back(triv);
        } else {
            // Non-surjective homs are subsumed: Delta for alpha with image
            // H is a power of Delta for the surjection onto H, which the
            // catalog reaches directly.
            homs = enumerate_homs(pres, group, /*surjective_only=*/true);
        }
        if (homs.empty())
            continue;
        auto verdicts = parallel_map<PropertyMVerdict>(
            homs.size(), budget.jobs, [&](std::size_t i) {
                return evaluate_quotient(pres, phi, meta, budget, homs[i], norm);
            });
        for (auto& v : verdicts) {
            report.ledger.push_back(v);
            ++quotient_count;
            if (!v.pass) {
                bool decisive = v.evidence == Evidence::ZExact ||
                                (v.degree && *v.degree < v.expected_degree) || v.delta_zero;
                if (decisive) {
                    report.verdict = {VerdictType::NotFibered, v, 0, quotient_count, ""};
                    return report;
                }
                if (degenerate_reason.empty())
                    degenerate_reason = "F_p-only failure at group " + v.hom.target->name +
                                        " without a decisive witness";
            }
        }
        if (out_of_time()) {
            report.truncated = true;
            break;
        }
    }

    report.inferred_norm = infer_norm(report.ledger, meta.b3);
    if (report.truncated) {
        report.verdict = {VerdictType::Degenerate, std::nullopt, 0, quotient_count,
                          "time limit exceeded; partial ledger only"};
    } else if (!degenerate_reason.empty()) {
        report.verdict = {VerdictType::Degenerate, std::nullopt, 0, quotient_count,
                          degenerate_reason};
    } else {
        report.verdict = {VerdictType::ConsistentUpTo, std::nullopt, budget.max_order,
                          quotient_count, ""};
    }
    return report;
}

OracleSummary run_oracle(const OracleConfig& config) {
    OracleSummary summary;
    std::mt19937_64 rng(config.seed);
    std::vector<FreeAutomorphism> autos;
    std::vector<int> ranks;
    for (int i = 0; i < config.count; ++i) {
        int rank = 1 + i % config.max_rank;
        ranks.push_back(rank);
        autos.push_back(
            random_free_automorphism(rank, 12, static_cast<std::size_t>(config.max_image_len),
                                     rng));
    }
    auto results = parallel_map<OracleInstanceResult>(
        autos.size(), config.budget.jobs, [&](std::size_t i) {
            MappingTorusResult torus = mapping_torus(autos[i]);
            torus.pres.label = "mapping-torus-" + std::to_string(i);
            ManifoldMeta meta;
            meta.b3 = 0;
            meta.closed = false;
            meta.label = torus.pres.label;
            Budget inner = config.budget;
            inner.jobs = 1; // parallelism lives at the instance level here
            OracleInstanceResult r;
            r.seed = config.seed;
            r.rank = ranks[i];
            r.report = certify(torus.pres, torus.phi, meta, inner);
            return r;
        });
    for (auto& r : results) {
        if (r.report.verdict.type == VerdictType::NotFibered)
            ++summary.not_fibered_count;
        if (r.report.verdict.type == VerdictType::ConsistentUpTo)
            ++summary.consistent_count;
        summary.instances.push_back(std::move(r));
    }
    return summary;
}

} // namespace fibercert
