#ifndef FIBERCERT_HOM_HPP
#define FIBERCERT_HOM_HPP

#include <vector>

#include "fibercert/group.hpp"
#include "fibercert/presentation.hpp"

namespace fibercert {

// Homomorphism from a presented group to a finite group, stored by the
// generator images. Construction re-checks that every relator maps to the
// identity and computes surjectivity by closure.
struct Hom {
    GroupPtr target;
    std::vector<int> images;
    bool surjective = false;

    Hom() = default;
    Hom(GroupPtr target, const Presentation& pres, std::vector<int> images);

    int eval(const Word& w) const;
};

Hom trivial_hom(const Presentation& pres);

// All homomorphisms pres -> G in deterministic order. With dedupe set, one
// representative per orbit of post-composition by inner automorphisms is
// kept (the lexicographically smallest conjugate image tuple); Delta only
// depends on that orbit, so this is the certification granularity.
std::vector<Hom> enumerate_homs(const Presentation& pres, const GroupPtr& g,
                                bool surjective_only, bool dedupe = true);

// Smallest conjugate of an image tuple under the inner action.
std::vector<int> canonical_conjugate(const FiniteGroup& g, const std::vector<int>& images);

// Divisibility div phi_alpha = [Z : phi(ker alpha)], computed on the
// Schreier graph of im(alpha): potentials are assigned along a BFS spanning
// tree from the identity and div is the gcd of the absolute cycle defects
// of the non-tree edges. Relators never contribute (phi kills them), which
// is why the graph of the image group suffices.
long div_phi_alpha(const Presentation& pres, const PhiClass& phi, const Hom& alpha);

// im{A -> B -> G} == im{B -> G} for a generator map A -> B given by one
// B-word per A-generator. Caller asserts the map sends relators of A into
// the normal closure of B's relators.
bool image_equal(const std::vector<Word>& generator_map, const Hom& beta);

} // namespace fibercert

#endif
