#include "fibercert/pd.hpp"

#include <fstream>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "fibercert/errors.hpp"

namespace fibercert {

namespace {

using nlohmann::json;

PDCode pd_from_json_value(const json& j) {
    const json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("pd"))
            throw InputError("PD object is missing the \"pd\" key");
        arr = &j.at("pd");
    }
    if (!arr->is_array())
        throw InputError("PD code must be an array of 4-tuples");
    PDCode pd;
    for (const auto& row : *arr) {
        if (!row.is_array() || row.size() != 4)
            throw InputError("PD crossing must be a 4-tuple of edge labels");
        std::array<int, 4> c{};
        for (int k = 0; k < 4; ++k) {
            if (!row[static_cast<std::size_t>(k)].is_number_integer())
                throw InputError("PD edge labels must be integers");
            c[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k)].get<int>();
        }
        pd.crossings.push_back(c);
    }
    validate_pd(pd);
    return pd;
}

} // namespace

void validate_pd(const PDCode& pd) {
    const int n2 = pd.num_edges();
    std::vector<int> count(static_cast<std::size_t>(n2) + 1, 0);
    for (const auto& c : pd.crossings)
        for (int e : c) {
            if (e < 1 || e > n2)
                throw InputError("PD edge label " + std::to_string(e) + " out of range 1.." +
                                 std::to_string(n2));
            ++count[static_cast<std::size_t>(e)];
        }
    for (int e = 1; e <= n2; ++e)
        if (count[static_cast<std::size_t>(e)] != 2)
            throw InputError("PD edge " + std::to_string(e) + " appears " +
                             std::to_string(count[static_cast<std::size_t>(e)]) +
                             " times, expected 2");
}

PDCode parse_pd_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid PD JSON: ") + e.what());
    }
    return pd_from_json_value(j);
}

PDCode load_pd_file(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw InputError("cannot open PD file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_pd_json(buf.str());
}

namespace {

struct CrossingInfo {
    int under_in, under_out; // edges
    int over_a, over_b;      // over-strand edges, oriented over_a -> over_b
    int sign;                // +1 when the over-strand runs ccw-adjacent
};

CrossingInfo classify(const std::array<int, 4>& c, int n2) {
    auto succ = [n2](int e) { return e % n2 + 1; };
    CrossingInfo info{};
    info.under_in = c[0];
    info.under_out = c[2];
    if (info.under_out != succ(info.under_in))
        throw InputError("PD crossing (" + std::to_string(c[0]) + "," + std::to_string(c[1]) +
                         "," + std::to_string(c[2]) + "," + std::to_string(c[3]) +
                         "): third entry must follow the first along the orientation");
    if (c[3] == succ(c[1])) {
        info.over_a = c[1];
        info.over_b = c[3];
        info.sign = +1;
    } else if (c[1] == succ(c[3])) {
        info.over_a = c[3];
        info.over_b = c[1];
        info.sign = -1;
    } else {
        throw InputError("PD crossing over-strand edges " + std::to_string(c[1]) + "," +
                         std::to_string(c[3]) + " are not consecutive");
    }
    return info;
}

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void merge(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

} // namespace

PDCode mirror(const PDCode& pd) {
    const int n2 = pd.num_edges();
    PDCode out;
    for (const auto& c : pd.crossings) {
        CrossingInfo info = classify(c, n2);
        // Switch the crossing: the over-strand becomes the under-strand.
        // Rotating the counterclockwise listing to start at the old
        // incoming over-edge does exactly that.
        if (info.sign > 0)
            out.crossings.push_back({c[1], c[2], c[3], c[0]});
        else
            out.crossings.push_back({c[3], c[0], c[1], c[2]});
    }
    return out;
}

WirtingerResult wirtinger(const PDCode& pd) {
    validate_pd(pd);
    WirtingerResult out;
    if (pd.crossings.empty()) {
        // 0-crossing unknot diagram: a single meridian, no relations.
        out.pres.num_generators = 1;
        out.pres.label = "unknot";
        out.phi = PhiClass({1});
        out.num_arcs = 1;
        return out;
    }
    const int n2 = pd.num_edges();

    std::vector<CrossingInfo> info;
    info.reserve(pd.crossings.size());
    for (const auto& c : pd.crossings)
        info.push_back(classify(c, n2));

    // Arcs are over-strands: edges glued across each crossing they pass over.
    UnionFind uf(n2 + 1);
    for (const auto& ci : info)
        uf.merge(ci.over_a, ci.over_b);

    std::vector<int> arc_of(static_cast<std::size_t>(n2) + 1, -1);
    int num_arcs = 0;
    for (int e = 1; e <= n2; ++e) {
        int root = uf.find(e);
        if (arc_of[static_cast<std::size_t>(root)] == -1)
            arc_of[static_cast<std::size_t>(root)] = num_arcs++;
        arc_of[static_cast<std::size_t>(e)] = arc_of[static_cast<std::size_t>(root)];
    }
    out.num_arcs = num_arcs;
    out.pres.num_generators = num_arcs;

    // One conjugation relator per crossing; drop the final one (any single
    // Wirtinger relator is a consequence of the others).
    for (std::size_t k = 0; k + 1 < info.size(); ++k) {
        const CrossingInfo& ci = info[k];
        int in_arc = arc_of[static_cast<std::size_t>(ci.under_in)];
        int out_arc = arc_of[static_cast<std::size_t>(ci.under_out)];
        int over_arc = arc_of[static_cast<std::size_t>(ci.over_a)];
        Word over = Word::gen(over_arc, ci.sign);
        Word rel = over * Word::gen(in_arc) * over.inverse() * Word::gen(out_arc, -1);
        if (!rel.empty())
            out.pres.relators.push_back(std::move(rel));
    }
    out.phi = PhiClass(std::vector<long>(static_cast<std::size_t>(num_arcs), 1));
    validate_phi(out.pres, out.phi);
    return out;
}

} // namespace fibercert
