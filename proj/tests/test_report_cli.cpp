#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "fibercert/corpus.hpp"
#include "fibercert/pd.hpp"
#include "fibercert/report.hpp"

using namespace fibercert;

namespace {

const char* kTrefoilPD = "[[1,4,2,5],[3,6,4,1],[5,2,6,3]]";
const char* k52PD = "[[1,4,2,5],[3,8,4,9],[5,10,6,1],[9,6,10,7],[7,2,8,3]]";

CertReport sample_report(const char* pd, int max_order) {
    WirtingerResult w = wirtinger(parse_pd_json(pd));
    ManifoldMeta meta;
    meta.label = "sample";
    Budget budget;
    budget.max_order = max_order;
    return certify(w.pres, w.phi, meta, budget);
}

int run_cli(const std::string& args, std::string* output = nullptr) {
    std::string cmd = std::string(FIBERCERT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[512];
    while (std::size_t n = fread(buf, 1, sizeof buf, pipe))
        out.append(buf, n);
    int status = pclose(pipe);
    if (output)
        *output = out;
    return WEXITSTATUS(status);
}

std::string data_path(const std::string& name) {
    return std::string(FIBERCERT_DATA_DIR) + "/" + name;
}

} // namespace

TEST_SUITE_BEGIN("report");

TEST_CASE("report JSON round-trips") {
    for (auto [pd, order] : {std::pair{kTrefoilPD, 6}, std::pair{k52PD, 6}}) {
        CertReport r = sample_report(pd, order);
        OrderedJson j = report_to_json(r);
        CertReport back = report_from_json(j);
        CHECK(report_to_json(back).dump() == j.dump());
    }
}

TEST_CASE("polynomial JSON form") {
    LaurentPoly f = LaurentPoly::from_coeffs(ring_z(), -2, {mpz_class(2), mpz_class(0), mpz_class(-3)});
    OrderedJson j = poly_to_json(f);
    CHECK(j["offset"] == -2);
    CHECK(poly_from_json(j, ring_z()) == f);
}

TEST_CASE("exit codes are a function of the verdict") {
    CertReport consistent = sample_report(kTrefoilPD, 4);
    CHECK(verdict_exit_code(consistent) == 0);
    CertReport not_fibered = sample_report(k52PD, 4);
    CHECK(verdict_exit_code(not_fibered) == 3);
}

TEST_CASE("corpus run on the bundled corpus") {
    auto entries = load_corpus(data_path("corpus.json"));
    REQUIRE(entries.size() == 5);
    Budget budget;
    budget.max_order = 6;
    CorpusSummary s = run_corpus(entries, budget, FIBERCERT_DATA_DIR);
    REQUIRE(s.rows.size() == 5);
    CHECK(s.rows[0].verdict == "n/a"); // unknot is excluded input
    CHECK(s.rows[1].verdict == "ConsistentUpTo");
    CHECK(s.rows[2].verdict == "ConsistentUpTo");
    CHECK(s.rows[3].verdict == "NotFibered");
    CHECK(s.rows[4].verdict == "NotFibered");
    CHECK_FALSE(s.any_soundness_violation);
    CHECK_FALSE(s.any_error);
    for (const auto& row : s.rows)
        CHECK(row.agreement);
    // empty corpus: empty table, no errors
    CorpusSummary empty = run_corpus({}, budget);
    CHECK(empty.rows.empty());
    CHECK_FALSE(empty.any_error);
}

TEST_CASE("corpus CSV loader") {
    std::string tmp = "/tmp/fibercert_corpus_test.csv";
    {
        std::ofstream f(tmp);
        f << "name,file,genus,fibered\n";
        f << "trefoil," << data_path("trefoil.pd") << ",1,true\n";
        f << "5_2," << data_path("5_2.pd") << ",1,false\n";
    }
    auto entries = load_corpus(tmp);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].name == "trefoil");
    CHECK(*entries[0].known_genus == 1);
    CHECK(*entries[1].known_fibered == false);
    std::remove(tmp.c_str());
}

TEST_CASE("time limit truncates without a verdict upgrade") {
    WirtingerResult w = wirtinger(parse_pd_json(kTrefoilPD));
    ManifoldMeta meta;
    Budget budget;
    budget.max_order = 24;
    budget.time_limit_ms = 1; // catalog construction alone exceeds this
    CertReport r = certify(w.pres, w.phi, meta, budget);
    CHECK(r.truncated);
    CHECK(r.verdict.type == VerdictType::Degenerate);
    CHECK(verdict_exit_code(r) == 4);
}

TEST_CASE("corpus soundness flag flips the exit path") {
    // a lying corpus entry: 5_2 marked fibered
    CorpusEntry lie;
    lie.name = "5_2-lie";
    lie.pd_json = k52PD;
    lie.known_fibered = true;
    Budget budget;
    budget.max_order = 4;
    CorpusSummary s = run_corpus({lie}, budget);
    CHECK(s.any_soundness_violation);
    CHECK(s.rows[0].soundness_violation);
}

TEST_SUITE_END();

TEST_SUITE_BEGIN("cli");

TEST_CASE("compute prints the normalized polynomial") {
    std::string out;
    int code = run_cli("compute " + data_path("trefoil.pd"), &out);
    CHECK(code == 0);
    CHECK(out.find("t^2 - t + 1") != std::string::npos);
    CHECK(out.find("monic, deg 2") != std::string::npos);
}

TEST_CASE("certify exit codes") {
    CHECK(run_cli("certify " + data_path("trefoil.pd") + " --max-order 6") == 0);
    CHECK(run_cli("certify " + data_path("5_2.pd") + " --max-order 6") == 3);
    CHECK(run_cli("certify " + data_path("unknot.pd")) == 2); // excluded input
}

TEST_CASE("malformed input exits 2 and names the edge") {
    std::string tmp = "/tmp/fibercert_bad_pd_test.json";
    {
        std::ofstream f(tmp);
        f << "[[1,1,2,2],[3,4,4,3],[1,2,3,4]]";
    }
    std::string out;
    int code = run_cli("compute " + tmp, &out);
    CHECK(code == 2);
    CHECK(out.find("edge") != std::string::npos);
    std::remove(tmp.c_str());
}

TEST_CASE("json output parses and round-trips") {
    std::string out;
    int code = run_cli("certify " + data_path("fig8.pd") + " --max-order 4 --format json", &out);
    CHECK(code == 0);
    OrderedJson j = OrderedJson::parse(out);
    CHECK(j["schema"] == "fibercert-report/1");
    CertReport r = report_from_json(j);
    CHECK(report_to_json(r).dump() == j.dump());
}

TEST_SUITE_END();
