#ifndef FIBERCERT_MAPPING_TORUS_HPP
#define FIBERCERT_MAPPING_TORUS_HPP

#include <random>
#include <vector>

#include "fibercert/presentation.hpp"

namespace fibercert {

// Automorphism of a free group, stored together with a verified inverse:
// construction checks that the two compose to the identity on every
// generator, so invalid monodromies are rejected up front.
class FreeAutomorphism {
  public:
    FreeAutomorphism(int rank, std::vector<Word> images, std::vector<Word> inverse_images);

    static FreeAutomorphism identity(int rank);
    // Nielsen generators (each comes with its obvious inverse).
    static FreeAutomorphism swap_gens(int rank, int i, int j);
    static FreeAutomorphism invert_gen(int rank, int i);
    static FreeAutomorphism right_multiply(int rank, int i, int j); // x_i -> x_i x_j

    int rank() const { return rank_; }
    const std::vector<Word>& images() const { return images_; }
    const std::vector<Word>& inverse_images() const { return inverse_images_; }

    Word apply(const Word& w) const;
    Word apply_inverse(const Word& w) const;
    FreeAutomorphism inverse() const;
    // (a.compose(b))(w) = a(b(w))
    FreeAutomorphism compose(const FreeAutomorphism& other) const;

    std::vector<std::vector<long>> abelianized() const; // rank x rank matrix

  private:
    int rank_;
    std::vector<Word> images_;
    std::vector<Word> inverse_images_;
};

// Random composition of Nielsen moves; moves that would push an image past
// max_image_len letters are skipped, keeping oracle instances desk-sized.
FreeAutomorphism random_free_automorphism(int rank, int moves, std::size_t max_image_len,
                                          std::mt19937_64& rng);

struct MappingTorusResult {
    Presentation pres; // <x_1..x_k, t | t x_i t^-1 = h(x_i)>
    PhiClass phi;      // phi(x_i) = 0, phi(t) = 1
    int stable_generator;
};

MappingTorusResult mapping_torus(const FreeAutomorphism& h);

} // namespace fibercert

#endif
