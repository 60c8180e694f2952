#include "fibercert/poly_matrix.hpp"

#include <algorithm>
#include <tuple>

namespace fibercert {

PolyMatrix PolyMatrix::identity(std::size_t n, Ring ring) {
    PolyMatrix m(n, n, ring);
    for (std::size_t i = 0; i < n; ++i)
        m.at(i, i) = LaurentPoly::one(ring);
    return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.cols_ != b.rows_)
        throw std::invalid_argument("matrix product dimension mismatch");
    if (!(a.ring_ == b.ring_))
        throw InternalError("matrix product ring mismatch");
    PolyMatrix c(a.rows_, b.cols_, a.ring_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const LaurentPoly& aik = a.at(i, k);
            if (aik.is_zero())
                continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero())
                    continue;
                c.at(i, j) += aik * b.at(k, j);
            }
        }
    return c;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw std::invalid_argument("matrix difference dimension mismatch");
    PolyMatrix c(a.rows_, a.cols_, a.ring_);
    for (std::size_t i = 0; i < a.entries_.size(); ++i)
        c.entries_[i] = a.entries_[i] - b.entries_[i];
    return c;
}

bool PolyMatrix::is_zero() const {
    return std::all_of(entries_.begin(), entries_.end(),
                       [](const LaurentPoly& e) { return e.is_zero(); });
}

PolyMatrix PolyMatrix::without_col_range(std::size_t first, std::size_t count) const {
    if (first + count > cols_)
        throw std::invalid_argument("column range out of bounds");
    PolyMatrix m(rows_, cols_ - count, ring_);
    for (std::size_t i = 0; i < rows_; ++i) {
        std::size_t jj = 0;
        for (std::size_t j = 0; j < cols_; ++j) {
            if (j >= first && j < first + count)
                continue;
            m.at(i, jj++) = at(i, j);
        }
    }
    return m;
}

PolyMatrix PolyMatrix::reduced_mod(long p) const {
    PolyMatrix m(rows_, cols_, ring_fp(p));
    for (std::size_t i = 0; i < entries_.size(); ++i)
        m.entries_[i] = entries_[i].reduced_mod(p);
    return m;
}

namespace {

// Pivot preference: fewest terms, then smallest span, then position.
// Sparsity-first keeps fill-in low on the permutation-block matrices the
// twisted chain complexes produce.
std::tuple<std::size_t, long, std::size_t, std::size_t> pivot_key(const LaurentPoly& f,
                                                                  std::size_t i, std::size_t j) {
    return {f.term_count(), *f.deg_span(), i, j};
}

} // namespace

LaurentPoly det_fraction_free(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    const Ring ring = m.ring();
    if (n == 0)
        return LaurentPoly::one(ring);

    std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = m.at(i, j);

    int sign = 1;
    LaurentPoly prev = LaurentPoly::one(ring);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        // Full pivot search over the trailing submatrix.
        std::size_t pi = n, pj = n;
        std::tuple<std::size_t, long, std::size_t, std::size_t> best{};
        for (std::size_t i = k; i < n; ++i)
            for (std::size_t j = k; j < n; ++j) {
                if (a[i][j].is_zero())
                    continue;
                auto key = pivot_key(a[i][j], i, j);
                if (pi == n || key < best) {
                    best = key;
                    pi = i;
                    pj = j;
                }
            }
        if (pi == n)
            return LaurentPoly::zero(ring);
        if (pi != k) {
            std::swap(a[pi], a[k]);
            sign = -sign;
        }
        if (pj != k) {
            for (std::size_t i = k; i < n; ++i)
                std::swap(a[i][pj], a[i][k]);
            sign = -sign;
        }
        // a[i][j] <- (a[k][k] a[i][j] - a[i][k] a[k][j]) / prev, exact by
        // Sylvester's identity: each entry stays a bordered minor of m.
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                LaurentPoly num = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                auto q = LaurentPoly::exact_div(num, prev);
                if (!q)
                    throw InternalError("fraction-free elimination: inexact division");
                a[i][j] = std::move(*q);
            }
            a[i][k] = LaurentPoly::zero(ring);
        }
        prev = a[k][k];
    }
    LaurentPoly det = a[n - 1][n - 1];
    if (sign < 0)
        det = -det;
    return det;
}

std::vector<LaurentPoly> smith_diagonal(const PolyMatrix& m) {
    if (!m.ring().is_fp())
        throw InputError("smith_diagonal is supported over F_p only");
    const std::size_t rows = m.rows(), cols = m.cols();
    const Ring ring = m.ring();
    const std::size_t bound = std::min(rows, cols);
    std::vector<LaurentPoly> diag(bound, LaurentPoly::zero(ring));
    if (bound == 0)
        return diag;

    // Shift each row into the polynomial cone: multiplying a row by the
    // unit t^k changes nothing over the Laurent ring, and the final
    // normalization strips t-content from the factors again.
    std::vector<std::vector<LaurentPoly>> a(rows, std::vector<LaurentPoly>(cols));
    for (std::size_t i = 0; i < rows; ++i) {
        long min_off = 0;
        bool nonzero = false;
        for (std::size_t j = 0; j < cols; ++j)
            if (!m.at(i, j).is_zero()) {
                long off = m.at(i, j).lowest_exp();
                min_off = nonzero ? std::min(min_off, off) : off;
                nonzero = true;
            }
        for (std::size_t j = 0; j < cols; ++j)
            a[i][j] = nonzero ? m.at(i, j).shifted(-min_off) : m.at(i, j);
    }

    // Pivot on the smallest polynomial degree (highest exponent: the rows
    // were shifted into the cone), matching the Euclidean descent below.
    auto find_pivot = [&](std::size_t s, std::size_t& pi, std::size_t& pj) -> bool {
        pi = rows;
        pj = cols;
        long best_deg = 0;
        for (std::size_t i = s; i < rows; ++i)
            for (std::size_t j = s; j < cols; ++j) {
                if (a[i][j].is_zero())
                    continue;
                long d = a[i][j].highest_exp();
                if (pi == rows || d < best_deg) {
                    best_deg = d;
                    pi = i;
                    pj = j;
                }
            }
        return pi != rows;
    };

    std::size_t s = 0;
    while (s < bound) {
        std::size_t pi, pj;
        if (!find_pivot(s, pi, pj))
            break; // remaining block is zero
        std::swap(a[pi], a[s]);
        if (pj != s)
            for (std::size_t i = s; i < rows; ++i)
                std::swap(a[i][pj], a[i][s]);

        const bool unit_pivot = a[s][s].highest_exp() == 0;
        bool clean = true;
        // Clear column s below the pivot.
        for (std::size_t i = s + 1; i < rows; ++i) {
            if (a[i][s].is_zero())
                continue;
            auto qr = divmod_fp(a[i][s], a[s][s]);
            for (std::size_t j = s; j < cols; ++j)
                if (!qr.quotient.is_zero() && !a[s][j].is_zero())
                    a[i][j] -= qr.quotient * a[s][j];
            if (!a[i][s].is_zero())
                clean = false; // remainder became the new smaller entry
        }
        if (!clean)
            continue; // re-select pivot (degree strictly dropped)
        // Clear row s right of the pivot.
        for (std::size_t j = s + 1; j < cols; ++j) {
            if (a[s][j].is_zero())
                continue;
            auto qr = divmod_fp(a[s][j], a[s][s]);
            for (std::size_t i = s; i < rows; ++i)
                if (!qr.quotient.is_zero() && !a[i][s].is_zero())
                    a[i][j] -= qr.quotient * a[i][s];
            if (!a[s][j].is_zero())
                clean = false;
        }
        if (!clean)
            continue;
        // Enforce divisibility: the pivot must divide the trailing block
        // (a unit pivot trivially does).
        bool divisible = true;
        if (!unit_pivot)
            for (std::size_t i = s + 1; i < rows && divisible; ++i)
                for (std::size_t j = s + 1; j < cols && divisible; ++j) {
                    if (a[i][j].is_zero())
                        continue;
                    if (!divmod_fp(a[i][j], a[s][s]).remainder.is_zero()) {
                        // Folding row i into row s re-exposes the offending
                        // entry to the Euclidean steps above.
                        for (std::size_t j2 = s; j2 < cols; ++j2)
                            a[s][j2] += a[i][j2];
                        divisible = false;
                    }
                }
        if (!divisible)
            continue;
        diag[s] = a[s][s].normalized();
        ++s;
    }
    return diag;
}

} // namespace fibercert
