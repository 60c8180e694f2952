#include "fibercert/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "fibercert/errors.hpp"
#include "fibercert/util.hpp"

namespace fibercert {

void FiniteGroup::validate() const {
    const int n = order;
    if (n <= 0 || table.size() != static_cast<std::size_t>(n) * n)
        throw InputError("group table has wrong size");
    for (int a = 0; a < n; ++a) {
        if (mul(0, a) != a || mul(a, 0) != a)
            throw InputError("element 0 is not a two-sided identity");
        std::vector<bool> seen_row(static_cast<std::size_t>(n), false),
            seen_col(static_cast<std::size_t>(n), false);
        for (int b = 0; b < n; ++b) {
            int ab = mul(a, b), ba = mul(b, a);
            if (ab < 0 || ab >= n || ba < 0 || ba >= n)
                throw InputError("group table entry out of range");
            if (seen_row[static_cast<std::size_t>(ab)] || seen_col[static_cast<std::size_t>(ba)])
                throw InputError("group table row/column is not a permutation");
            seen_row[static_cast<std::size_t>(ab)] = true;
            seen_col[static_cast<std::size_t>(ba)] = true;
        }
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                    throw InputError("group table is not associative");
    for (int a = 0; a < n; ++a)
        if (mul(a, inv(a)) != 0 || mul(inv(a), a) != 0)
            throw InputError("inverse table is wrong");
}

namespace {

void finish_group(FiniteGroup& g) {
    const int n = g.order;
    g.inverse.assign(static_cast<std::size_t>(n), -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mul(a, b) == 0)
                g.inverse[static_cast<std::size_t>(a)] = b;
    // Derived series from the table.
    std::vector<int> cur(static_cast<std::size_t>(n));
    std::iota(cur.begin(), cur.end(), 0);
    int length = 0;
    while (cur.size() > 1) {
        std::vector<int> next = derived_subgroup(g, cur);
        if (next.size() == cur.size()) {
            g.solvable = false;
            g.derived_length = -1;
            return;
        }
        cur = std::move(next);
        ++length;
    }
    g.solvable = true;
    g.derived_length = length;
}

std::string cycle_notation(const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    std::ostringstream out;
    bool any = false;
    for (int s = 0; s < n; ++s) {
        if (used[static_cast<std::size_t>(s)] || perm[static_cast<std::size_t>(s)] == s)
            continue;
        any = true;
        out << "(";
        int x = s;
        bool first = true;
        while (!used[static_cast<std::size_t>(x)]) {
            used[static_cast<std::size_t>(x)] = true;
            if (!first)
                out << " ";
            out << x + 1;
            first = false;
            x = perm[static_cast<std::size_t>(x)];
        }
        out << ")";
    }
    return any ? out.str() : "()";
}

FiniteGroup permutation_group(std::vector<std::vector<int>> perms, const std::string& name) {
    std::sort(perms.begin(), perms.end()); // identity sorts first
    FiniteGroup g;
    g.order = static_cast<int>(perms.size());
    g.name = name;
    g.table.assign(static_cast<std::size_t>(g.order) * g.order, -1);
    std::map<std::vector<int>, int> index;
    for (int i = 0; i < g.order; ++i) {
        index[perms[static_cast<std::size_t>(i)]] = i;
        g.element_names.push_back(cycle_notation(perms[static_cast<std::size_t>(i)]));
    }
    const std::size_t n = perms[0].size();
    for (int a = 0; a < g.order; ++a)
        for (int b = 0; b < g.order; ++b) {
            std::vector<int> prod(n);
            for (std::size_t i = 0; i < n; ++i)
                prod[i] = perms[static_cast<std::size_t>(a)]
                               [static_cast<std::size_t>(perms[static_cast<std::size_t>(b)][i])];
            g.table[static_cast<std::size_t>(a) * g.order + b] = index.at(prod);
        }
    finish_group(g);
    return g;
}

std::vector<std::vector<int>> all_permutations(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
}

bool is_even(const std::vector<int>& perm) {
    int transpositions = 0;
    std::vector<bool> used(perm.size(), false);
    for (std::size_t s = 0; s < perm.size(); ++s) {
        if (used[s])
            continue;
        int len = 0;
        std::size_t x = s;
        while (!used[x]) {
            used[x] = true;
            x = static_cast<std::size_t>(perm[x]);
            ++len;
        }
        transpositions += len - 1;
    }
    return transpositions % 2 == 0;
}

} // namespace

FiniteGroup cyclic_group(int n) {
    if (n < 1)
        throw InputError("cyclic group order must be positive");
    FiniteGroup g;
    g.order = n;
    g.name = "Z/" + std::to_string(n);
    g.table.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
    for (int a = 0; a < n; ++a)
        g.element_names.push_back(std::to_string(a));
    finish_group(g);
    return g;
}

FiniteGroup dihedral_group(int n) {
    if (n < 2)
        throw InputError("dihedral group needs n >= 2");
    FiniteGroup g;
    g.order = 2 * n;
    g.name = "D" + std::to_string(n);
    g.table.resize(static_cast<std::size_t>(g.order) * g.order);
    // Element i + n*e is r^i s^e with s r s = r^-1.
    auto idx = [n](int i, int e) { return ((i % n) + n) % n + n * e; };
    for (int i = 0; i < n; ++i)
        for (int e = 0; e < 2; ++e)
            for (int j = 0; j < n; ++j)
                for (int f = 0; f < 2; ++f) {
                    int a = idx(i, e), b = idx(j, f);
                    int k = e == 0 ? i + j : i - j;
                    g.table[static_cast<std::size_t>(a) * g.order + b] = idx(k, e ^ f);
                }
    for (int e = 0; e < 2; ++e)
        for (int i = 0; i < n; ++i) {
            std::string nm;
            if (i == 0 && e == 0)
                nm = "e";
            else {
                if (i == 1)
                    nm = "r";
                else if (i > 1)
                    nm = "r" + std::to_string(i);
                if (e == 1)
                    nm += "s";
            }
            g.element_names.push_back(nm);
        }
    finish_group(g);
    return g;
}

FiniteGroup symmetric_group(int n) {
    if (n < 2 || n > 5)
        throw InputError("symmetric group supported for 2 <= n <= 5");
    return permutation_group(all_permutations(n), "S" + std::to_string(n));
}

FiniteGroup alternating_group(int n) {
    if (n < 3 || n > 5)
        throw InputError("alternating group supported for 3 <= n <= 5");
    std::vector<std::vector<int>> perms;
    for (auto& p : all_permutations(n))
        if (is_even(p))
            perms.push_back(p);
    return permutation_group(std::move(perms), "A" + std::to_string(n));
}

FiniteGroup semidirect_cyclic(int q, int p) {
    if (!is_prime(q) || !is_prime(p) || p == 2 || (q - 1) % p != 0)
        throw InputError("semidirect_cyclic needs primes with odd p | q-1");
    // Smallest multiplicative residue of order exactly p.
    int a = 0;
    for (int cand = 2; cand < q; ++cand) {
        long x = 1;
        int ord = 0;
        do {
            x = (x * cand) % q;
            ++ord;
        } while (x != 1);
        if (ord == p) {
            a = cand;
            break;
        }
    }
    if (a == 0)
        throw InternalError("no residue of order p mod q");
    std::vector<long> apow(static_cast<std::size_t>(p));
    apow[0] = 1;
    for (int y = 1; y < p; ++y)
        apow[static_cast<std::size_t>(y)] = (apow[static_cast<std::size_t>(y - 1)] * a) % q;

    FiniteGroup g;
    g.order = p * q;
    g.name = "Z/" + std::to_string(q) + ":Z/" + std::to_string(p);
    g.table.resize(static_cast<std::size_t>(g.order) * g.order);
    auto idx = [p](int x, int y) { return x * p + y; };
    // (x1,y1)(x2,y2) = (x1 + a^y1 x2, y1 + y2)
    for (int x1 = 0; x1 < q; ++x1)
        for (int y1 = 0; y1 < p; ++y1)
            for (int x2 = 0; x2 < q; ++x2)
                for (int y2 = 0; y2 < p; ++y2) {
                    int x = static_cast<int>((x1 + apow[static_cast<std::size_t>(y1)] * x2) % q);
                    int y = (y1 + y2) % p;
                    g.table[static_cast<std::size_t>(idx(x1, y1)) * g.order + idx(x2, y2)] =
                        idx(x, y);
                }
    for (int x = 0; x < q; ++x)
        for (int y = 0; y < p; ++y)
            g.element_names.push_back("(" + std::to_string(x) + "," + std::to_string(y) + ")");
    finish_group(g);
    return g;
}

std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens) {
    std::vector<bool> in(static_cast<std::size_t>(g.order), false);
    in[0] = true;
    std::vector<int> queue = {0};
    for (int x : gens)
        if (!in[static_cast<std::size_t>(x)]) {
            in[static_cast<std::size_t>(x)] = true;
            queue.push_back(x);
        }
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int x : gens) {
            int y = g.mul(queue[head], x);
            if (!in[static_cast<std::size_t>(y)]) {
                in[static_cast<std::size_t>(y)] = true;
                queue.push_back(y);
            }
            y = g.mul(queue[head], g.inv(x));
            if (!in[static_cast<std::size_t>(y)]) {
                in[static_cast<std::size_t>(y)] = true;
                queue.push_back(y);
            }
        }
    std::sort(queue.begin(), queue.end());
    return queue;
}

bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems) {
    std::vector<bool> in(static_cast<std::size_t>(g.order), false);
    for (int x : elems) {
        if (x < 0 || x >= g.order)
            return false;
        in[static_cast<std::size_t>(x)] = true;
    }
    if (!in[0])
        return false;
    for (int x : elems)
        for (int y : elems)
            if (!in[static_cast<std::size_t>(g.mul(x, y))])
                return false;
    return true;
}

std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g) {
    // Closure of every subset would be exponential; closing under join of
    // cyclic subgroups reaches everything at these orders.
    std::set<std::vector<int>> found;
    found.insert(subgroup_closure(g, {}));
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> current(found.begin(), found.end());
        for (const auto& h : current)
            for (int x = 0; x < g.order; ++x) {
                std::vector<int> gens = h;
                gens.push_back(x);
                auto closed = subgroup_closure(g, gens);
                if (found.insert(closed).second)
                    grew = true;
            }
    }
    return {found.begin(), found.end()};
}

std::vector<int> derived_subgroup(const FiniteGroup& g, const std::vector<int>& elems) {
    std::vector<int> comms;
    for (int a : elems)
        for (int b : elems)
            comms.push_back(g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b))));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    return subgroup_closure(g, comms);
}

namespace {

// Greedy generating set: add any element outside the running closure.
std::vector<int> generating_set(const FiniteGroup& g) {
    std::vector<int> gens;
    std::vector<int> closed = subgroup_closure(g, gens);
    while (static_cast<int>(closed.size()) < g.order) {
        for (int x = 0; x < g.order; ++x)
            if (!std::binary_search(closed.begin(), closed.end(), x)) {
                gens.push_back(x);
                break;
            }
        closed = subgroup_closure(g, gens);
    }
    return gens;
}

bool extend_iso(const FiniteGroup& a, const FiniteGroup& b, const std::vector<int>& gens,
                std::vector<int>& images, std::size_t depth,
                const std::vector<int>& orders_a, const std::vector<int>& orders_b) {
    if (depth == gens.size()) {
        // Build the full map generated by gens -> images and verify it is a
        // bijective homomorphism.
        std::vector<int> map(static_cast<std::size_t>(a.order), -1);
        map[0] = 0;
        std::vector<int> frontier = {0};
        std::vector<std::pair<int, int>> pairs;
        for (std::size_t i = 0; i < gens.size(); ++i)
            pairs.push_back({gens[i], images[i]});
        for (std::size_t head = 0; head < frontier.size(); ++head) {
            int x = frontier[head];
            for (auto [ga, gb] : pairs) {
                int xa = a.mul(x, ga);
                int xb = b.mul(map[static_cast<std::size_t>(x)], gb);
                if (map[static_cast<std::size_t>(xa)] == -1) {
                    map[static_cast<std::size_t>(xa)] = xb;
                    frontier.push_back(xa);
                } else if (map[static_cast<std::size_t>(xa)] != xb) {
                    return false;
                }
            }
        }
        std::vector<bool> hit(static_cast<std::size_t>(b.order), false);
        for (int x = 0; x < a.order; ++x) {
            if (map[static_cast<std::size_t>(x)] < 0 ||
                hit[static_cast<std::size_t>(map[static_cast<std::size_t>(x)])])
                return false;
            hit[static_cast<std::size_t>(map[static_cast<std::size_t>(x)])] = true;
        }
        for (int x = 0; x < a.order; ++x)
            for (int y = 0; y < a.order; ++y)
                if (map[static_cast<std::size_t>(a.mul(x, y))] !=
                    b.mul(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]))
                    return false;
        return true;
    }
    int ga = gens[depth];
    for (int gb = 0; gb < b.order; ++gb) {
        if (orders_a[static_cast<std::size_t>(ga)] != orders_b[static_cast<std::size_t>(gb)])
            continue;
        images[depth] = gb;
        if (extend_iso(a, b, gens, images, depth + 1, orders_a, orders_b))
            return true;
    }
    return false;
}

std::vector<int> element_orders(const FiniteGroup& g) {
    std::vector<int> orders(static_cast<std::size_t>(g.order));
    for (int x = 0; x < g.order; ++x) {
        int y = x, n = 1;
        while (y != 0) {
            y = g.mul(y, x);
            ++n;
        }
        orders[static_cast<std::size_t>(x)] = n;
    }
    return orders;
}

} // namespace

bool tables_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.order != b.order)
        return false;
    auto oa = element_orders(a), ob = element_orders(b);
    {
        auto sa = oa, sb = ob;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return false;
    }
    std::vector<int> gens = generating_set(a);
    std::vector<int> images(gens.size(), -1);
    return extend_iso(a, b, gens, images, 0, oa, ob);
}

std::vector<GroupPtr> catalog(int max_order) {
    if (max_order < 1)
        throw InputError("catalog needs max_order >= 1");
    if (max_order > 64)
        throw InputError("catalog refuses orders above 64");

    // Family priority decides which of two isomorphic tables survives.
    std::vector<std::pair<int, FiniteGroup>> candidates;
    for (int n = 1; n <= max_order; ++n)
        candidates.push_back({0, cyclic_group(n)});
    for (int n = 3; n <= 5; ++n) {
        int fact = 1;
        for (int i = 2; i <= n; ++i)
            fact *= i;
        if (fact <= max_order)
            candidates.push_back({1, symmetric_group(n)});
    }
    for (int n = 4; n <= 5; ++n) {
        int half = 1;
        for (int i = 2; i <= n; ++i)
            half *= i;
        half /= 2;
        if (half <= max_order)
            candidates.push_back({2, alternating_group(n)});
    }
    for (int n = 2; 2 * n <= max_order; ++n)
        candidates.push_back({3, dihedral_group(n)});
    for (int q = 3; q <= max_order; ++q) {
        if (!is_prime(q))
            continue;
        for (int p = 3; p * q <= max_order; ++p)
            if (is_prime(p) && (q - 1) % p == 0)
                candidates.push_back({4, semidirect_cyclic(q, p)});
    }

    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const auto& x, const auto& y) {
                         return std::tuple(x.second.order, x.first, x.second.name) <
                                std::tuple(y.second.order, y.first, y.second.name);
                     });
    std::vector<FiniteGroup> kept;
    for (auto& [prio, g] : candidates) {
        bool dup = false;
        for (const auto& k : kept)
            if (k.order == g.order && tables_isomorphic(k, g)) {
                dup = true;
                break;
            }
        if (!dup)
            kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end(), [](const FiniteGroup& x, const FiniteGroup& y) {
        return std::tuple(x.order, x.name) < std::tuple(y.order, y.name);
    });
    std::vector<GroupPtr> out;
    out.reserve(kept.size());
    for (auto& g : kept)
        out.push_back(std::make_shared<const FiniteGroup>(std::move(g)));
    return out;
}

DoubleCosetDecomp double_cosets(const FiniteGroup& g, const std::vector<int>& c,
                                const std::vector<int>& h) {
    if (!is_subgroup(g, c))
        throw InputError("C is not a subgroup");
    if (!is_subgroup(g, h))
        throw InputError("H is not a subgroup");
    DoubleCosetDecomp out;
    std::vector<bool> seen(static_cast<std::size_t>(g.order), false);
    for (int x = 0; x < g.order; ++x) {
        if (seen[static_cast<std::size_t>(x)])
            continue;
        long size = 0;
        for (int ci : c)
            for (int hi : h) {
                int y = g.mul(g.mul(ci, x), hi);
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = true;
                    ++size;
                }
            }
        out.representatives.push_back(x);
        out.coset_sizes.push_back(size);
    }
    return out;
}

} // namespace fibercert
