#include "fibercert/twisted.hpp"

#include <algorithm>

#include "fibercert/errors.hpp"
#include "fibercert/util.hpp"

namespace fibercert {

ModPConsistency compare_mod_p(const LaurentPoly& delta1_z, const LaurentPoly& delta1_fp, long p);

void ManifoldMeta::validate() const {
    if (b3 != 0 && b3 != 1)
        throw InputError("b3 must be 0 or 1");
    if (closed != (b3 == 1))
        throw InputError("oriented 3-manifold convention violated: closed <=> b3 = 1");
    if (norm_hint && *norm_hint < 0)
        throw InputError("Thurston norm hint must be nonnegative");
}

PolyMatrix tensor_block(const TwistedSetup& setup, const Word& w) {
    const FiniteGroup& g = *setup.alpha.target;
    const int n = g.order;
    PolyMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), setup.ring);
    int gw = setup.alpha.eval(w);
    LaurentPoly mono = LaurentPoly::monomial(setup.ring, 1, setup.phi(w));
    for (int h = 0; h < n; ++h)
        m.at(static_cast<std::size_t>(g.mul(gw, h)), static_cast<std::size_t>(h)) = mono;
    return m;
}

PolyMatrix tensor_of_fox(const TwistedSetup& setup, const FoxElement& e) {
    const FiniteGroup& g = *setup.alpha.target;
    const int n = g.order;
    PolyMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n), setup.ring);
    for (const auto& [w, c] : e.terms()) {
        int gw = setup.alpha.eval(w);
        LaurentPoly mono = LaurentPoly::monomial(setup.ring, c, setup.phi(w));
        for (int h = 0; h < n; ++h)
            m.at(static_cast<std::size_t>(g.mul(gw, h)), static_cast<std::size_t>(h)) += mono;
    }
    return m;
}

PolyMatrix fox_matrix(const TwistedSetup& setup) {
    const int n = setup.alpha.target->order;
    const std::size_t r = setup.pres.relators.size();
    const std::size_t g = static_cast<std::size_t>(setup.pres.num_generators);
    PolyMatrix m(r * static_cast<std::size_t>(n), g * static_cast<std::size_t>(n), setup.ring);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < g; ++j) {
            FoxElement d = fox_derivative(setup.pres.relators[i], static_cast<int>(j));
            if (d.is_zero())
                continue;
            PolyMatrix block = tensor_of_fox(setup, d);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    const LaurentPoly& e = block.at(static_cast<std::size_t>(a),
                                                    static_cast<std::size_t>(b));
                    if (!e.is_zero())
                        m.at(i * static_cast<std::size_t>(n) + static_cast<std::size_t>(a),
                             j * static_cast<std::size_t>(n) + static_cast<std::size_t>(b)) = e;
                }
        }
    return m;
}

PolyMatrix boundary_one(const TwistedSetup& setup) {
    const int n = setup.alpha.target->order;
    const std::size_t g = static_cast<std::size_t>(setup.pres.num_generators);
    PolyMatrix m(g * static_cast<std::size_t>(n), static_cast<std::size_t>(n), setup.ring);
    PolyMatrix eye = PolyMatrix::identity(static_cast<std::size_t>(n), setup.ring);
    for (std::size_t j = 0; j < g; ++j) {
        PolyMatrix block = tensor_block(setup, Word::gen(static_cast<int>(j))) - eye;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                const LaurentPoly& e =
                    block.at(static_cast<std::size_t>(a), static_cast<std::size_t>(b));
                if (!e.is_zero())
                    m.at(j * static_cast<std::size_t>(n) + static_cast<std::size_t>(a),
                         static_cast<std::size_t>(b)) = e;
            }
    }
    return m;
}

namespace {

LaurentPoly one_minus_t_pow(Ring ring, long d) {
    return LaurentPoly::one(ring) - LaurentPoly::monomial(ring, 1, d);
}

void validate_setup(const TwistedSetup& setup) {
    setup.pres.validate();
    validate_phi(setup.pres, setup.phi);
    if (!setup.phi.nontrivial())
        throw InputError("compute_delta needs a nontrivial phi");
    setup.meta.validate();
    if (static_cast<int>(setup.alpha.images.size()) != setup.pres.num_generators)
        throw InputError("alpha does not match the presentation");
}

int pivot_generator(const TwistedSetup& setup) {
    for (int j = 0; j < setup.pres.num_generators; ++j)
        if (setup.phi.values()[static_cast<std::size_t>(j)] != 0)
            return j;
    throw InputError("phi vanishes on all generators");
}

// [G : im alpha]. The regular module decomposes into this many copies of
// the image's regular module, so H_0 and H_2 orders come with this power.
unsigned long image_index(const TwistedSetup& setup) {
    return static_cast<unsigned long>(setup.alpha.target->order) /
           subgroup_closure(*setup.alpha.target, setup.alpha.images).size();
}

AlexPolys compute_delta_wada_z(const TwistedSetup& setup, long div, const PolyMatrix& m) {
    const int n = setup.alpha.target->order;
    const unsigned long index = image_index(setup);
    AlexPolys out;
    out.ring = setup.ring;
    out.route = DeltaRoute::WadaZ;
    out.div = div;
    out.delta0 = one_minus_t_pow(setup.ring, div).pow(index).normalized();
    out.pivot_generator = pivot_generator(setup);

    PolyMatrix reduced = m.without_col_range(
        static_cast<std::size_t>(out.pivot_generator) * static_cast<std::size_t>(n),
        static_cast<std::size_t>(n));
    LaurentPoly d = det_fraction_free(reduced);
    if (d.is_zero()) {
        out.delta1 = LaurentPoly::zero(setup.ring);
        return out;
    }
    PolyMatrix pm = tensor_block(setup, Word::gen(out.pivot_generator)) -
                    PolyMatrix::identity(static_cast<std::size_t>(n), setup.ring);
    LaurentPoly p = det_fraction_free(pm);
    if (p.is_zero())
        throw InternalError("det(tensor(pivot) - I) vanished despite phi(pivot) != 0");
    auto q = LaurentPoly::exact_div(d * out.delta0, p);
    if (!q)
        throw InternalError("Wada quotient not divisible: bug or non-manifold presentation");
    out.delta1 = q->normalized();
    if (!out.delta1.is_zero())
        out.delta2 = setup.meta.b3 == 1 ? out.delta0 : LaurentPoly::one(setup.ring);
    return out;
}

AlexPolys compute_delta_smith_fp(const TwistedSetup& setup, long div, const PolyMatrix& m,
                                 const PolyMatrix& nmat) {
    const int n = setup.alpha.target->order;
    const std::size_t c1_rank =
        static_cast<std::size_t>(setup.pres.num_generators) * static_cast<std::size_t>(n);
    const unsigned long index = image_index(setup);
    AlexPolys out;
    out.ring = setup.ring;
    out.route = DeltaRoute::SmithFp;
    out.div = div;
    out.delta0 = one_minus_t_pow(setup.ring, div).pow(index).normalized();
    out.pivot_generator = -1;

    auto factors_m = smith_diagonal(m);
    auto factors_n = smith_diagonal(nmat);
    std::size_t rank_m = 0, rank_n = 0;
    for (const auto& f : factors_m)
        if (!f.is_zero())
            ++rank_m;
    for (const auto& f : factors_n)
        if (!f.is_zero())
            ++rank_n;

    // H_0 law: the order of coker(boundary_one) must be (1 - t^div)^index.
    if (rank_n != static_cast<std::size_t>(n))
        throw InternalError("H_0 is not torsion; impossible for nontrivial phi");
    LaurentPoly h0 = LaurentPoly::one(setup.ring);
    for (const auto& f : factors_n)
        h0 *= f;
    if (h0.normalized() != out.delta0.normalized())
        throw InternalError("Smith-route H_0 order disagrees with the 1 - t^div law");

    // 0 -> H_1 -> coker(fox_matrix) -> rowspace(boundary_one) -> 0 with free
    // cokernel image, so H_1 is torsion iff the ranks fill C_1, and then its
    // order is the product of the invariant factors.
    if (rank_m + rank_n != c1_rank) {
        out.delta1 = LaurentPoly::zero(setup.ring);
        return out;
    }
    LaurentPoly h1 = LaurentPoly::one(setup.ring);
    for (const auto& f : factors_m)
        if (!f.is_zero())
            h1 *= f;
    out.delta1 = h1.normalized();
    if (!out.delta1.is_zero())
        out.delta2 = setup.meta.b3 == 1 ? out.delta0 : LaurentPoly::one(setup.ring);
    return out;
}

} // namespace

DeltaOutcome compute_delta(const TwistedSetup& setup) {
    validate_setup(setup);
    long div = div_phi_alpha(setup.pres, setup.phi, setup.alpha);
    DeltaOutcome out;
    if (setup.ring.is_fp()) {
        out.polys = compute_delta_smith_fp(setup, div, fox_matrix(setup), boundary_one(setup));
        return out;
    }
    if (setup.pres.deficiency() != 1) {
        out.unavailable_reason =
            "Z route needs a deficiency-1 presentation (got deficiency " +
            std::to_string(setup.pres.deficiency()) + "); use the F_p route";
        return out;
    }
    out.polys = compute_delta_wada_z(setup, div, fox_matrix(setup));
    return out;
}

DeltaBundle compute_delta_bundle(const TwistedSetup& setup_z, const std::vector<long>& primes) {
    if (setup_z.ring.is_fp())
        throw InputError("compute_delta_bundle starts from the Z setup");
    validate_setup(setup_z);
    long div = div_phi_alpha(setup_z.pres, setup_z.phi, setup_z.alpha);
    PolyMatrix m = fox_matrix(setup_z);

    DeltaBundle bundle;
    if (setup_z.pres.deficiency() == 1) {
        bundle.z.polys = compute_delta_wada_z(setup_z, div, m);
    } else {
        bundle.z.unavailable_reason =
            "Z route needs a deficiency-1 presentation (got deficiency " +
            std::to_string(setup_z.pres.deficiency()) + "); use the F_p route";
    }
    if (primes.empty())
        return bundle;

    PolyMatrix nmat = boundary_one(setup_z);
    for (long p : primes) {
        TwistedSetup fp_setup = setup_z;
        fp_setup.ring = ring_fp(p);
        bundle.fp.push_back(compute_delta_smith_fp(fp_setup, div, m.reduced_mod(p),
                                                   nmat.reduced_mod(p)));
    }
    if (bundle.z.ok())
        for (std::size_t k = 0; k < primes.size(); ++k)
            bundle.consistency.push_back(
                compare_mod_p(bundle.z.polys->delta1, bundle.fp[k].delta1, primes[k]));
    return bundle;
}

ModPConsistency delta_mod_p_consistency(const TwistedSetup& setup_z, long p) {
    if (setup_z.ring.is_fp())
        throw InputError("delta_mod_p_consistency starts from the Z setup");
    DeltaOutcome z = compute_delta(setup_z);
    if (!z.ok())
        throw InputError("Z route unavailable: " + z.unavailable_reason);
    return delta_mod_p_consistency(setup_z, *z.polys, p);
}

ModPConsistency compare_mod_p(const LaurentPoly& delta1_z, const LaurentPoly& delta1_fp, long p) {
    ModPConsistency out;
    out.p = p;
    out.deg_z = delta1_z.deg_span();
    out.deg_p = delta1_fp.deg_span();
    if (delta1_z.is_zero()) {
        out.gate = false;
        out.equal = delta1_fp.is_zero();
        out.degree_drop = false;
        return out;
    }
    out.gate = delta1_z.leading() % p != 0 && delta1_z.trailing() % p != 0;
    LaurentPoly reduced = delta1_z.reduced_mod(p);
    out.equal = reduced.is_zero() ? delta1_fp.is_zero()
                                  : reduced.normalized() == delta1_fp.normalized();
    out.degree_drop = !out.deg_p || *out.deg_p < *out.deg_z;
    return out;
}

ModPConsistency delta_mod_p_consistency(const TwistedSetup& setup_z, const AlexPolys& z_polys,
                                        long p) {
    if (setup_z.ring.is_fp())
        throw InputError("delta_mod_p_consistency starts from the Z setup");
    if (!is_prime(p))
        throw InputError("p must be prime");
    TwistedSetup fp = setup_z;
    fp.ring = ring_fp(p);
    AlexPolys fpres = *compute_delta(fp).polys;
    return compare_mod_p(z_polys.delta1, fpres.delta1, p);
}

namespace {

// Plain Gaussian elimination rank over F_p (int rows, small p).
std::size_t fp_rank(std::vector<std::vector<int>>& rows, long p) {
    if (rows.empty())
        return 0;
    const std::size_t cols = rows[0].size();
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
        std::size_t sel = rows.size();
        for (std::size_t i = rank; i < rows.size(); ++i)
            if (rows[i][col] != 0) {
                sel = i;
                break;
            }
        if (sel == rows.size())
            continue;
        std::swap(rows[rank], rows[sel]);
        long inv = inverse_mod(rows[rank][col], p);
        for (std::size_t j = col; j < cols; ++j)
            rows[rank][j] = static_cast<int>((rows[rank][j] * inv) % p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == rank || rows[i][col] == 0)
                continue;
            long f = rows[i][col];
            for (std::size_t j = col; j < cols; ++j) {
                rows[i][j] = static_cast<int>((rows[i][j] - f * rows[rank][j]) % p);
                if (rows[i][j] < 0)
                    rows[i][j] += p;
            }
        }
        ++rank;
    }
    return rank;
}

struct TruncationWindow {
    long b;      // coefficient window: exponents -b..b
    long extra;  // generator shifts may overshoot by this much
};

// F_p-dimension of (ker(N) cap V_B) / (rowspace(M) cap V_B) where V_B is
// the coefficient window. Rowspace shifts are generated over the widened
// window B+E and intersected with V_B exactly via
// dim(W cap V_B) = dim W + dim V_B - dim(W + V_B).
long truncated_quotient_dim(const TwistedSetup& setup, const PolyMatrix& m, const PolyMatrix& nmat,
                            TruncationWindow win) {
    const long p = setup.ring.p;
    const long b = win.b, e = win.extra;
    const std::size_t a = m.cols(); // rank of C_1
    const long width_inner = 2 * b + 1;
    const long width_outer = 2 * (b + e) + 1;

    auto inner_col = [&](std::size_t i, long d) {
        return i * static_cast<std::size_t>(width_inner) + static_cast<std::size_t>(d + b);
    };
    auto outer_col = [&](std::size_t i, long d) {
        return i * static_cast<std::size_t>(width_outer) + static_cast<std::size_t>(d + b + e);
    };

    // ker(N) within the inner window: exact nullspace of the coefficient map.
    long nlo = 0, nhi = 0;
    for (std::size_t i = 0; i < nmat.rows(); ++i)
        for (std::size_t j = 0; j < nmat.cols(); ++j)
            if (!nmat.at(i, j).is_zero()) {
                nlo = std::min(nlo, nmat.at(i, j).lowest_exp());
                nhi = std::max(nhi, nmat.at(i, j).highest_exp());
            }
    const long out_lo = -b + nlo, out_hi = b + nhi;
    std::vector<std::vector<int>> constraint(
        nmat.cols() * static_cast<std::size_t>(out_hi - out_lo + 1),
        std::vector<int>(a * static_cast<std::size_t>(width_inner), 0));
    for (std::size_t i = 0; i < a; ++i)
        for (std::size_t c = 0; c < nmat.cols(); ++c) {
            const LaurentPoly& f = nmat.at(i, c);
            if (f.is_zero())
                continue;
            for (long d = -b; d <= b; ++d)
                for (long ex = f.lowest_exp(); ex <= f.highest_exp(); ++ex) {
                    long coef = mpz_class(f.coeff_at(ex) % p).get_si();
                    if (coef == 0)
                        continue;
                    if (coef < 0)
                        coef += p;
                    std::size_t row = c * static_cast<std::size_t>(out_hi - out_lo + 1) +
                                      static_cast<std::size_t>(d + ex - out_lo);
                    constraint[row][inner_col(i, d)] =
                        static_cast<int>((constraint[row][inner_col(i, d)] + coef) % p);
                }
        }
    long ker_dim = static_cast<long>(a) * width_inner -
                   static_cast<long>(fp_rank(constraint, p));

    // Rowspace generators over the widened window, t-reduced per row so the
    // Laurent rowspace is represented faithfully.
    std::vector<std::vector<int>> wrows;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        long rlo = 0, rhi = 0;
        bool nonzero = false;
        for (std::size_t j = 0; j < a; ++j)
            if (!m.at(r, j).is_zero()) {
                long lo = m.at(r, j).lowest_exp(), hi = m.at(r, j).highest_exp();
                if (!nonzero) {
                    rlo = lo;
                    rhi = hi;
                    nonzero = true;
                } else {
                    rlo = std::min(rlo, lo);
                    rhi = std::max(rhi, hi);
                }
            }
        if (!nonzero)
            continue;
        for (long s = -(b + e) - rlo; s + rhi <= b + e; ++s) {
            std::vector<int> row(a * static_cast<std::size_t>(width_outer), 0);
            for (std::size_t j = 0; j < a; ++j) {
                const LaurentPoly& f = m.at(r, j);
                if (f.is_zero())
                    continue;
                for (long ex = f.lowest_exp(); ex <= f.highest_exp(); ++ex) {
                    long coef = mpz_class(f.coeff_at(ex) % p).get_si();
                    if (coef < 0)
                        coef += p;
                    if (coef != 0)
                        row[outer_col(j, ex + s)] = static_cast<int>(coef);
                }
            }
            wrows.push_back(std::move(row));
        }
    }
    std::vector<std::vector<int>> wcopy = wrows;
    long w_rank = static_cast<long>(fp_rank(wcopy, p));

    // dim(W + V_B) within the outer window.
    std::vector<std::vector<int>> stacked = std::move(wrows);
    for (std::size_t i = 0; i < a; ++i)
        for (long d = -b; d <= b; ++d) {
            std::vector<int> unit(a * static_cast<std::size_t>(width_outer), 0);
            unit[outer_col(i, d)] = 1;
            stacked.push_back(std::move(unit));
        }
    long sum_rank = static_cast<long>(fp_rank(stacked, p));
    long w_cap_v = w_rank + static_cast<long>(a) * width_inner - sum_rank;
    return ker_dim - w_cap_v;
}

} // namespace

bool rank_check(const TwistedSetup& setup_fp) {
    if (!setup_fp.ring.is_fp())
        throw InputError("rank_check needs an F_p setup");
    AlexPolys polys = *compute_delta(setup_fp).polys;

    PolyMatrix m = fox_matrix(setup_fp);
    PolyMatrix nmat = boundary_one(setup_fp);

    long max_span = 1;
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m.at(i, j).is_zero())
                max_span = std::max(max_span, *m.at(i, j).deg_span());
    long expected = polys.delta1.is_zero() ? 0 : *polys.delta1.deg_span();

    long b = expected + 2 * max_span + 4;
    long dim1 = truncated_quotient_dim(setup_fp, m, nmat, {b, b});
    long dim2 = truncated_quotient_dim(setup_fp, m, nmat, {b + 2, b});
    long dim3 = truncated_quotient_dim(setup_fp, m, nmat, {b, b + 2});
    if (polys.delta1.is_zero())
        return dim2 > dim1; // free part keeps growing with the window
    return dim1 == dim2 && dim1 == dim3 && dim1 == expected;
}

} // namespace fibercert
