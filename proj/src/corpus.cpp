#include "fibercert/corpus.hpp"

#include <fstream>
#include <iomanip>
#include <sstream>

#include "fibercert/pd.hpp"

namespace fibercert {

namespace {

using nlohmann::json;

CorpusEntry entry_from_json(const json& j) {
    CorpusEntry e;
    e.name = j.at("name").get<std::string>();
    if (j.contains("pd"))
        e.pd_json = j.at("pd").dump();
    if (j.contains("pres"))
        e.pres_text = j.at("pres").get<std::string>();
    if (j.contains("file"))
        e.file = j.at("file").get<std::string>();
    if (j.contains("known_genus"))
        e.known_genus = j.at("known_genus").get<long>();
    if (j.contains("known_fibered"))
        e.known_fibered = j.at("known_fibered").get<bool>();
    if (!e.pd_json && !e.pres_text && !e.file)
        throw InputError("corpus entry '" + e.name + "' has no pd, pres, or file");
    return e;
}

std::vector<CorpusEntry> corpus_from_csv(std::istream& in) {
    std::vector<CorpusEntry> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#')
            continue;
        std::vector<std::string> fields;
        std::istringstream ls(line);
        std::string f;
        while (std::getline(ls, f, ','))
            fields.push_back(f);
        if (lineno == 1 && !fields.empty() && fields[0] == "name")
            continue; // header
        if (fields.size() < 2)
            throw ParseError("corpus CSV needs name,file[,genus[,fibered]]", lineno);
        CorpusEntry e;
        e.name = fields[0];
        e.file = fields[1];
        if (fields.size() > 2 && !fields[2].empty())
            e.known_genus = std::stol(fields[2]);
        if (fields.size() > 3 && !fields[3].empty())
            e.known_fibered = fields[3] == "true" || fields[3] == "1";
        out.push_back(std::move(e));
    }
    return out;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct LoadedInput {
    Presentation pres;
    PhiClass phi;
    ManifoldMeta meta;
};

LoadedInput load_entry(const CorpusEntry& e, const std::string& base_dir) {
    LoadedInput li;
    if (e.pd_json) {
        WirtingerResult w = wirtinger(parse_pd_json(*e.pd_json));
        li.pres = std::move(w.pres);
        li.phi = std::move(w.phi);
    } else if (e.pres_text) {
        PresentationFile pf = parse_presentation(*e.pres_text);
        li.pres = std::move(pf.pres);
        li.phi = pf.phi ? *pf.phi : infer_phi(li.pres);
        li.meta.b3 = pf.b3;
        li.meta.closed = pf.closed;
    } else {
        std::string path = *e.file;
        if (!base_dir.empty() && path.front() != '/')
            path = base_dir + "/" + path;
        if (ends_with(path, ".pd")) {
            WirtingerResult w = wirtinger(load_pd_file(path));
            li.pres = std::move(w.pres);
            li.phi = std::move(w.phi);
        } else {
            PresentationFile pf = load_presentation_file(path);
            li.pres = std::move(pf.pres);
            li.phi = pf.phi ? *pf.phi : infer_phi(li.pres);
            li.meta.b3 = pf.b3;
            li.meta.closed = pf.closed;
        }
    }
    li.pres.label = e.name;
    li.meta.label = e.name;
    return li;
}

} // namespace

std::vector<CorpusEntry> load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open corpus file: " + path);
    if (ends_with(path, ".csv"))
        return corpus_from_csv(in);
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid corpus JSON: ") + e.what());
    }
    const json* arr = &j;
    if (j.is_object() && j.contains("entries"))
        arr = &j.at("entries");
    if (!arr->is_array())
        throw InputError("corpus must be an array of entries");
    std::vector<CorpusEntry> out;
    for (const auto& ej : *arr)
        out.push_back(entry_from_json(ej));
    return out;
}

CorpusSummary run_corpus(const std::vector<CorpusEntry>& entries, const Budget& budget,
                         const std::string& base_dir) {
    CorpusSummary summary;
    for (const CorpusEntry& e : entries) {
        CorpusRow row;
        row.name = e.name;
        if (e.known_genus && *e.known_genus > 0)
            row.known_norm = 2 * *e.known_genus - 1;
        try {
            LoadedInput li = load_entry(e, base_dir);
            // Trivial-quotient Delta_1 for the table.
            TwistedSetup setup{li.pres, li.phi, trivial_hom(li.pres), ring_z(), li.meta};
            DeltaOutcome triv = compute_delta(setup);
            row.delta1 = triv.ok() ? triv.polys->delta1.str() : "unavailable-over-Z";
            CertReport report = certify(li.pres, li.phi, li.meta, budget);
            row.verdict = verdict_name(report.verdict.type);
            row.inferred_norm = report.inferred_norm;
            if (e.known_fibered && *e.known_fibered &&
                report.verdict.type == VerdictType::NotFibered) {
                row.soundness_violation = true;
                row.agreement = false;
                summary.any_soundness_violation = true;
            }
            if (e.known_fibered && !*e.known_fibered &&
                report.verdict.type == VerdictType::ConsistentUpTo)
                row.agreement = false; // non-fibered slipped through this budget
            if (row.known_norm && row.inferred_norm && *row.known_norm != *row.inferred_norm)
                row.agreement = false;
            row.report = std::move(report);
        } catch (const ExcludedInputError&) {
            row.delta1 = "n/a";
            row.verdict = "n/a";
        } catch (const InputError& err) {
            row.verdict = "error";
            row.error = err.what();
            summary.any_error = true;
        }
        summary.rows.push_back(std::move(row));
    }
    return summary;
}

OrderedJson corpus_to_json(const CorpusSummary& summary) {
    OrderedJson j;
    j["schema"] = "fibercert-corpus/1";
    j["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    OrderedJson rows = OrderedJson::array();
    for (const auto& r : summary.rows) {
        OrderedJson rj;
        rj["name"] = r.name;
        rj["delta1"] = r.delta1;
        rj["verdict"] = r.verdict;
        rj["inferred_norm"] = r.inferred_norm ? OrderedJson(*r.inferred_norm) : OrderedJson(nullptr);
        rj["known_norm"] = r.known_norm ? OrderedJson(*r.known_norm) : OrderedJson(nullptr);
        rj["agreement"] = r.agreement;
        if (r.soundness_violation)
            rj["soundness_violation"] = true;
        if (!r.error.empty())
            rj["error"] = r.error;
        if (r.report)
            rj["report"] = report_to_json(*r.report);
        rows.push_back(rj);
    }
    j["rows"] = rows;
    j["any_soundness_violation"] = summary.any_soundness_violation;
    j["any_error"] = summary.any_error;
    return j;
}

std::string corpus_to_text(const CorpusSummary& summary) {
    std::ostringstream out;
    out << std::left << std::setw(12) << "name" << std::setw(24) << "delta1 (trivial)"
        << std::setw(18) << "verdict" << std::setw(8) << "norm" << std::setw(8) << "2g-1"
        << "agree\n";
    for (const auto& r : summary.rows) {
        out << std::left << std::setw(12) << r.name << std::setw(24) << r.delta1 << std::setw(18)
            << r.verdict << std::setw(8)
            << (r.inferred_norm ? std::to_string(*r.inferred_norm) : "-") << std::setw(8)
            << (r.known_norm ? std::to_string(*r.known_norm) : "-")
            << (r.agreement ? "yes" : "NO") << "\n";
        if (!r.error.empty())
            out << "    error: " << r.error << "\n";
    }
    if (summary.any_soundness_violation)
        out << "SOUNDNESS VIOLATION: a known-fibered entry was certified NotFibered\n";
    return out.str();
}

} // namespace fibercert
