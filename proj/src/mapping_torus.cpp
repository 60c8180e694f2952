#include "fibercert/mapping_torus.hpp"

#include "fibercert/errors.hpp"

namespace fibercert {

namespace {

Word substitute(const Word& w, const std::vector<Word>& images) {
    Word out;
    for (const Letter& l : w.letters()) {
        const Word& img = images[static_cast<std::size_t>(l.gen)];
        out = out * (l.sign > 0 ? img : img.inverse());
    }
    return out;
}

} // namespace

FreeAutomorphism::FreeAutomorphism(int rank, std::vector<Word> images,
                                   std::vector<Word> inverse_images)
    : rank_(rank), images_(std::move(images)), inverse_images_(std::move(inverse_images)) {
    if (rank_ <= 0)
        throw InputError("automorphism rank must be positive");
    if (images_.size() != static_cast<std::size_t>(rank_) ||
        inverse_images_.size() != static_cast<std::size_t>(rank_))
        throw InputError("automorphism needs one image per generator");
    for (const Word& w : images_)
        if (w.max_gen() >= rank_)
            throw InputError("automorphism image uses out-of-range generator");
    for (const Word& w : inverse_images_)
        if (w.max_gen() >= rank_)
            throw InputError("automorphism inverse image uses out-of-range generator");
    for (int i = 0; i < rank_; ++i) {
        Word x = Word::gen(i);
        if (substitute(images_[static_cast<std::size_t>(i)], inverse_images_) != x ||
            substitute(inverse_images_[static_cast<std::size_t>(i)], images_) != x)
            throw InputError("claimed inverse does not invert the automorphism on generator " +
                             std::to_string(i));
    }
}

FreeAutomorphism FreeAutomorphism::identity(int rank) {
    std::vector<Word> ims;
    for (int i = 0; i < rank; ++i)
        ims.push_back(Word::gen(i));
    return FreeAutomorphism(rank, ims, ims);
}

FreeAutomorphism FreeAutomorphism::swap_gens(int rank, int i, int j) {
    auto ims = identity(rank).images();
    std::swap(ims[static_cast<std::size_t>(i)], ims[static_cast<std::size_t>(j)]);
    return FreeAutomorphism(rank, ims, ims);
}

FreeAutomorphism FreeAutomorphism::invert_gen(int rank, int i) {
    auto ims = identity(rank).images();
    ims[static_cast<std::size_t>(i)] = Word::gen(i, -1);
    return FreeAutomorphism(rank, ims, ims);
}

FreeAutomorphism FreeAutomorphism::right_multiply(int rank, int i, int j) {
    if (i == j)
        throw InputError("right_multiply needs distinct generators");
    auto ims = identity(rank).images();
    auto inv = ims;
    ims[static_cast<std::size_t>(i)] = Word::gen(i) * Word::gen(j);
    inv[static_cast<std::size_t>(i)] = Word::gen(i) * Word::gen(j, -1);
    return FreeAutomorphism(rank, ims, inv);
}

Word FreeAutomorphism::apply(const Word& w) const { return substitute(w, images_); }
Word FreeAutomorphism::apply_inverse(const Word& w) const { return substitute(w, inverse_images_); }

FreeAutomorphism FreeAutomorphism::inverse() const {
    return FreeAutomorphism(rank_, inverse_images_, images_);
}

FreeAutomorphism FreeAutomorphism::compose(const FreeAutomorphism& other) const {
    if (rank_ != other.rank_)
        throw InputError("cannot compose automorphisms of different ranks");
    std::vector<Word> ims, inv;
    for (int i = 0; i < rank_; ++i) {
        ims.push_back(apply(other.images_[static_cast<std::size_t>(i)]));
        inv.push_back(other.apply_inverse(inverse_images_[static_cast<std::size_t>(i)]));
    }
    return FreeAutomorphism(rank_, std::move(ims), std::move(inv));
}

std::vector<std::vector<long>> FreeAutomorphism::abelianized() const {
    std::vector<std::vector<long>> m(static_cast<std::size_t>(rank_),
                                     std::vector<long>(static_cast<std::size_t>(rank_), 0));
    for (int i = 0; i < rank_; ++i)
        for (const Letter& l : images_[static_cast<std::size_t>(i)].letters())
            m[static_cast<std::size_t>(l.gen)][static_cast<std::size_t>(i)] += l.sign;
    return m;
}

FreeAutomorphism random_free_automorphism(int rank, int moves, std::size_t max_image_len,
                                          std::mt19937_64& rng) {
    FreeAutomorphism h = FreeAutomorphism::identity(rank);
    std::uniform_int_distribution<int> kind_dist(0, rank > 1 ? 2 : 0);
    std::uniform_int_distribution<int> gen_dist(0, rank - 1);
    for (int m = 0; m < moves; ++m) {
        int kind = kind_dist(rng);
        FreeAutomorphism move = FreeAutomorphism::identity(rank);
        if (kind == 0) {
            move = FreeAutomorphism::invert_gen(rank, gen_dist(rng));
        } else if (kind == 1) {
            int i = gen_dist(rng), j = gen_dist(rng);
            if (i == j)
                continue;
            move = FreeAutomorphism::swap_gens(rank, i, j);
        } else {
            int i = gen_dist(rng), j = gen_dist(rng);
            if (i == j)
                continue;
            move = FreeAutomorphism::right_multiply(rank, i, j);
        }
        FreeAutomorphism next = move.compose(h);
        bool ok = true;
        for (const Word& w : next.images())
            if (w.length() > max_image_len)
                ok = false;
        for (const Word& w : next.inverse_images())
            if (w.length() > max_image_len)
                ok = false;
        if (ok)
            h = std::move(next);
    }
    return h;
}

MappingTorusResult mapping_torus(const FreeAutomorphism& h) {
    const int k = h.rank();
    MappingTorusResult out;
    out.pres.num_generators = k + 1;
    out.stable_generator = k;
    Word t = Word::gen(k);
    for (int i = 0; i < k; ++i) {
        Word rel = t * Word::gen(i) * t.inverse() * h.images()[static_cast<std::size_t>(i)].inverse();
        if (!rel.empty())
            out.pres.relators.push_back(std::move(rel));
    }
    std::vector<long> phi(static_cast<std::size_t>(k + 1), 0);
    phi[static_cast<std::size_t>(k)] = 1;
    out.phi = PhiClass(std::move(phi));
    validate_phi(out.pres, out.phi);
    return out;
}

} // namespace fibercert
