#ifndef FIBERCERT_CORPUS_HPP
#define FIBERCERT_CORPUS_HPP

#include <optional>
#include <string>
#include <vector>

#include "fibercert/certify.hpp"
#include "fibercert/report.hpp"

namespace fibercert {

// One knot/manifold entry: inline PD code, inline presentation, or a file
// reference, with optional ground truth for cross-checking verdicts.
struct CorpusEntry {
    std::string name;
    std::optional<std::string> pd_json;   // serialized PD array
    std::optional<std::string> pres_text; // presentation file text
    std::optional<std::string> file;      // path to .pd / .pres
    std::optional<long> known_genus;
    std::optional<bool> known_fibered;
};

std::vector<CorpusEntry> load_corpus(const std::string& path);

struct CorpusRow {
    std::string name;
    std::string delta1;  // trivial quotient, or "n/a"
    std::string verdict; // ConsistentUpTo / NotFibered / Degenerate / excluded / error
    std::optional<long> inferred_norm;
    std::optional<long> known_norm; // 2g - 1 when genus known and positive
    bool agreement = true;          // verdict and norm consistent with ground truth
    bool soundness_violation = false; // known fibered but certified NotFibered
    std::string error;
    std::optional<CertReport> report;
};

struct CorpusSummary {
    std::vector<CorpusRow> rows;
    bool any_soundness_violation = false;
    bool any_error = false;
};

CorpusSummary run_corpus(const std::vector<CorpusEntry>& entries, const Budget& budget,
                         const std::string& base_dir = "");

OrderedJson corpus_to_json(const CorpusSummary& summary);
std::string corpus_to_text(const CorpusSummary& summary);

} // namespace fibercert

#endif
