#ifndef FIBERCERT_CERTIFY_HPP
#define FIBERCERT_CERTIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "fibercert/twisted.hpp"

namespace fibercert {

enum class Evidence { ZExact, FpOnly };

// One ledger row: the monicness + degree check of a single finite quotient
// against expected degree |G| * norm + (1 + b3) * div.
struct PropertyMVerdict {
    Hom hom;
    long div = 1;
    bool monic = false;
    std::optional<long> degree; // nullopt encodes delta1 = 0
    long expected_degree = 0;
    bool pass = false;
    Evidence evidence = Evidence::ZExact;
    bool delta_zero = false;
    std::string note;
    AlexPolys polys;                       // Z-route polys when available
    std::vector<ModPConsistency> mod_p;    // per configured prime
};

struct Budget {
    int max_order = 12;
    std::vector<long> primes = {2, 3, 5};
    long time_limit_ms = 0; // 0 = unlimited
    int jobs = 1;

    void validate() const;
};

enum class VerdictType { NotFibered, ConsistentUpTo, Degenerate };

struct CertVerdict {
    VerdictType type = VerdictType::Degenerate;
    std::optional<PropertyMVerdict> witness; // NotFibered only
    int max_order = 0;                       // ConsistentUpTo only
    long quotient_count = 0;
    std::string reason; // Degenerate only
};

struct CertReport {
    CertVerdict verdict;
    std::optional<long> inferred_norm;
    std::vector<PropertyMVerdict> ledger;
    bool truncated = false;
    Budget budget;
    std::string label;
    int num_generators = 0;
    int num_relators = 0;
    std::vector<long> phi_values;
    int b3 = 0;
};

// Verdict for one quotient given the norm. Zero delta1 short-circuits to
// failure and additionally flags possible non-primeness. Throws on
// negative norm.
PropertyMVerdict check_property_m(const AlexPolys& alex, long norm, const ManifoldMeta& meta,
                                  const Hom& hom);

// Walks catalog(max_order) x conjugacy-deduplicated surjections in
// canonical order. The norm is the hint when given and otherwise inferred
// from the trivial quotient. The first Z-exact failure (or decisive
// mod-p degree drop, when the Z route is unavailable) stops the scan with
// a NotFibered witness; surviving every quotient yields
// ConsistentUpTo(max_order). F_p-only failures that are not decisive
// degrade the verdict to Degenerate, never to NotFibered. Throws
// ExcludedInputError on S^1 x D^2 / S^1 x S^2 style inputs.
CertReport certify(const Presentation& pres, const PhiClass& phi, const ManifoldMeta& meta,
                   const Budget& budget);

// The unique nonnegative x with degree = |G| x + (1+b3) div across all
// (passing) entries, or nullopt with the first conflicting pair reported.
std::optional<long> infer_norm(const std::vector<PropertyMVerdict>& ledger, int b3,
                               std::pair<std::size_t, std::size_t>* conflict = nullptr);

// Seeded mapping-torus soundness run: random monodromies are fibered by
// construction, so certify must never answer NotFibered on them.
struct OracleConfig {
    int count = 50;
    int max_rank = 3;
    int max_image_len = 6;
    unsigned long seed = 1;
    Budget budget;
};

struct OracleInstanceResult {
    unsigned long seed = 0;
    int rank = 0;
    CertReport report;
};

struct OracleSummary {
    std::vector<OracleInstanceResult> instances;
    int not_fibered_count = 0; // any nonzero value is a soundness violation
    int consistent_count = 0;
};

OracleSummary run_oracle(const OracleConfig& config);

} // namespace fibercert

#endif
