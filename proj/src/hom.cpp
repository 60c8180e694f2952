#include "fibercert/hom.hpp"

#include <algorithm>
#include <set>

#include "fibercert/errors.hpp"
#include "fibercert/util.hpp"

namespace fibercert {

namespace {

int eval_word(const FiniteGroup& g, const std::vector<int>& images, const Word& w) {
    int acc = 0;
    for (const Letter& l : w.letters()) {
        int x = images[static_cast<std::size_t>(l.gen)];
        acc = g.mul(acc, l.sign > 0 ? x : g.inv(x));
    }
    return acc;
}

bool images_surjective(const FiniteGroup& g, const std::vector<int>& images) {
    return static_cast<int>(subgroup_closure(g, images).size()) == g.order;
}

} // namespace

Hom::Hom(GroupPtr target_, const Presentation& pres, std::vector<int> images_)
    : target(std::move(target_)), images(std::move(images_)) {
    if (static_cast<int>(images.size()) != pres.num_generators)
        throw InputError("hom needs one image per generator");
    for (int x : images)
        if (x < 0 || x >= target->order)
            throw InputError("hom image out of range");
    for (const Word& r : pres.relators)
        if (eval_word(*target, images, r) != 0)
            throw InputError("images do not respect a relator");
    surjective = images_surjective(*target, images);
}

int Hom::eval(const Word& w) const { return eval_word(*target, images, w); }

Hom trivial_hom(const Presentation& pres) {
    auto triv = std::make_shared<const FiniteGroup>(cyclic_group(1));
    return Hom(triv, pres, std::vector<int>(static_cast<std::size_t>(pres.num_generators), 0));
}

std::vector<int> canonical_conjugate(const FiniteGroup& g, const std::vector<int>& images) {
    std::vector<int> best = images;
    std::vector<int> cand(images.size());
    for (int c = 0; c < g.order; ++c) {
        for (std::size_t i = 0; i < images.size(); ++i)
            cand[i] = g.conj(c, images[i]);
        if (cand < best)
            best = cand;
    }
    return best;
}

std::vector<Hom> enumerate_homs(const Presentation& pres, const GroupPtr& g,
                                bool surjective_only, bool dedupe) {
    const int k = pres.num_generators;
    const FiniteGroup& grp = *g;

    // Relators become checkable once their highest generator is assigned.
    std::vector<std::vector<const Word*>> ready(static_cast<std::size_t>(k));
    for (const Word& r : pres.relators) {
        int m = r.max_gen();
        if (m >= 0)
            ready[static_cast<std::size_t>(m)].push_back(&r);
    }

    std::vector<int> images(static_cast<std::size_t>(k), 0);
    std::vector<std::vector<int>> found;
    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == k) {
            found.push_back(images);
            return;
        }
        for (int x = 0; x < grp.order; ++x) {
            images[static_cast<std::size_t>(depth)] = x;
            bool ok = true;
            for (const Word* r : ready[static_cast<std::size_t>(depth)])
                if (eval_word(grp, images, *r) != 0) {
                    ok = false;
                    break;
                }
            if (ok)
                self(self, depth + 1);
        }
        images[static_cast<std::size_t>(depth)] = 0;
    };
    rec(rec, 0);

    std::vector<Hom> out;
    std::set<std::vector<int>> reps;
    for (auto& ims : found) {
        if (surjective_only && !images_surjective(grp, ims))
            continue;
        if (dedupe) {
            auto canon = canonical_conjugate(grp, ims);
            if (!reps.insert(canon).second)
                continue;
            out.emplace_back(g, pres, canon);
        } else {
            out.emplace_back(g, pres, ims);
        }
    }
    if (dedupe)
        std::sort(out.begin(), out.end(),
                  [](const Hom& a, const Hom& b) { return a.images < b.images; });
    return out;
}

long div_phi_alpha([[maybe_unused]] const Presentation& pres, const PhiClass& phi,
                   const Hom& alpha) {
    // The relators never matter here: phi kills them, so the cycle lattice
    // of the image's Schreier graph already is phi(ker alpha).
    if (!phi.nontrivial())
        throw InputError("div phi_alpha needs a nontrivial phi");
    const FiniteGroup& g = *alpha.target;
    std::vector<int> image = subgroup_closure(g, alpha.images);
    std::vector<int> pos(static_cast<std::size_t>(g.order), -1);
    for (std::size_t i = 0; i < image.size(); ++i)
        pos[static_cast<std::size_t>(image[i])] = static_cast<int>(i);

    const std::size_t n = image.size();
    std::vector<bool> visited(n, false);
    std::vector<long> potential(n, 0);
    std::vector<int> queue;
    queue.reserve(n);
    std::size_t id0 = static_cast<std::size_t>(pos[0]);
    visited[id0] = true;
    potential[id0] = 0;
    queue.push_back(static_cast<int>(id0));

    long div = 0;
    const auto& vals = phi.values();
    for (std::size_t head = 0; head < queue.size(); ++head) {
        std::size_t u = static_cast<std::size_t>(queue[head]);
        int gu = image[u];
        for (std::size_t j = 0; j < alpha.images.size(); ++j) {
            int gv = g.mul(gu, alpha.images[j]);
            std::size_t v = static_cast<std::size_t>(pos[static_cast<std::size_t>(gv)]);
            long w = vals[j];
            if (!visited[v]) {
                visited[v] = true;
                potential[v] = potential[u] + w;
                queue.push_back(static_cast<int>(v));
            } else {
                long defect = potential[u] + w - potential[v];
                div = gcd_long(div, defect);
            }
        }
    }
    if (div == 0)
        throw InternalError("phi restricted to ker(alpha) is trivial; impossible for "
                            "nontrivial phi and finite image");
    return div;
}

bool image_equal(const std::vector<Word>& generator_map, const Hom& beta) {
    const FiniteGroup& g = *beta.target;
    std::vector<int> through;
    through.reserve(generator_map.size());
    for (const Word& w : generator_map)
        through.push_back(beta.eval(w));
    return subgroup_closure(g, through) == subgroup_closure(g, beta.images);
}

} // namespace fibercert
