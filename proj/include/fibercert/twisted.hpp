#ifndef FIBERCERT_TWISTED_HPP
#define FIBERCERT_TWISTED_HPP

#include <optional>
#include <string>

#include "fibercert/fox.hpp"
#include "fibercert/hom.hpp"
#include "fibercert/poly_matrix.hpp"
#include "fibercert/presentation.hpp"

namespace fibercert {

// Topological context the presentation came from. closed <=> b3 = 1 for
// oriented 3-manifolds; builders set b3 = 0 (knot exteriors and mapping
// tori of surfaces with boundary).
struct ManifoldMeta {
    int b3 = 0;
    bool closed = false;
    std::optional<long> norm_hint; // ||phi||_T when known
    std::string label;

    void validate() const;
};

struct TwistedSetup {
    Presentation pres;
    PhiClass phi;
    Hom alpha;
    Ring ring;
    ManifoldMeta meta;
};

enum class DeltaRoute { WadaZ, SmithFp };

// The polynomials Delta_0, Delta_1, Delta_2 of one (presentation, phi,
// alpha, ring) setup, unit-normalized. delta0 is (1 - t^div)^[G:im alpha]
// (the regular module splits into [G:im] copies over the image; the index
// is 1 for the surjections certification uses). delta2 follows the
// (1 - t^div)^b3 law when delta1 != 0 and stays the zero polynomial
// otherwise (the law says nothing in that case). Degrees >= 3 are always 1
// and never stored.
struct AlexPolys {
    LaurentPoly delta0, delta1, delta2;
    long div = 1;
    DeltaRoute route = DeltaRoute::WadaZ;
    int pivot_generator = -1; // -1 on the Smith route
    Ring ring;
};

// compute_delta result: either polynomials or an explicit
// unavailable-over-Z signal (deficiency != 1, where the square Wada matrix
// does not exist). Callers fall back to the F_p route.
struct DeltaOutcome {
    std::optional<AlexPolys> polys;
    std::string unavailable_reason;
    bool ok() const { return polys.has_value(); }
};

// |G| x |G| block of the alpha (x) phi representation: left multiplication
// by alpha(w) on the regular module, scaled by t^phi(w). Multiplicative in w.
PolyMatrix tensor_block(const TwistedSetup& setup, const Word& w);

// Linear extension of tensor_block to group-ring elements.
PolyMatrix tensor_of_fox(const TwistedSetup& setup, const FoxElement& e);

// Block matrix of Fox derivatives: (|relators|*|G|) x (|gens|*|G|), block
// (i,j) = tensor applied to d(r_i)/d(x_j). This presents the boundary map
// C_2 -> C_1 of the twisted chain complex of the presentation 2-complex.
PolyMatrix fox_matrix(const TwistedSetup& setup);

// Stacked column of blocks tensor(x_j) - I: the boundary C_1 -> C_0.
PolyMatrix boundary_one(const TwistedSetup& setup);

// Delta computation.
//
// Integer ring (route wada-Z): pick the first generator with phi != 0,
// delete its column block from the Fox matrix (square exactly when the
// deficiency is 1), and use
//     delta1 = det(M_pivot) * delta0 / det(tensor(x_pivot) - I),
// an exact division; failure of exactness means a bug or a non-manifold
// presentation and raises InternalError.
//
// F_p (route smith-Fp): the ground-truth route. With M the Fox matrix and
// N the boundary column, H_1 = ker(N) / rowspace(M) sits in
// 0 -> H_1 -> coker(M) -> rowspace(N) -> 0 with free right-hand term, so
// its order is the product of the invariant factors of M when
// rank(M) + rank(N) = gens*|G| (else Delta_1 = 0). H_0's order comes from
// the Smith form of N and is checked against the 1 - t^div law.
DeltaOutcome compute_delta(const TwistedSetup& setup);

// Mod-p comparison of the two routes.
struct ModPConsistency {
    long p = 0;
    bool gate = false;        // p divides neither extreme coefficient of delta1^Z
    bool equal = false;       // normalized reduction == F_p-route delta1
    bool degree_drop = false; // span shrank under reduction (expected when !gate)
    std::optional<long> deg_z, deg_p;
};
ModPConsistency delta_mod_p_consistency(const TwistedSetup& setup_z, long p);
// Same check with the Z-route result already in hand.
ModPConsistency delta_mod_p_consistency(const TwistedSetup& setup_z, const AlexPolys& z_polys,
                                        long p);

// One-pass evaluation of the Z route plus every configured prime, sharing
// the Fox matrix (built over Z once, reduced mod p per prime). This is the
// certification hot path.
struct DeltaBundle {
    DeltaOutcome z;
    std::vector<AlexPolys> fp;                 // one per prime, same order
    std::vector<ModPConsistency> consistency;  // empty when Z unavailable
};
DeltaBundle compute_delta_bundle(const TwistedSetup& setup_z, const std::vector<long>& primes);

// Lemma-level rank law over F_p: deg Delta_1 equals the F_p-dimension of
// the torsion module, recomputed here by plain numeric linear algebra on
// t-power truncations (independent of the polynomial Smith code).
bool rank_check(const TwistedSetup& setup_fp);

} // namespace fibercert

#endif
