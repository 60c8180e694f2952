#ifndef FIBERCERT_POLY_MATRIX_HPP
#define FIBERCERT_POLY_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "fibercert/laurent.hpp"

namespace fibercert {

// Dense matrix of Laurent polynomials sharing one ring tag.
class PolyMatrix {
  public:
    PolyMatrix() = default;
    PolyMatrix(std::size_t rows, std::size_t cols, Ring ring)
        : rows_(rows), cols_(cols), ring_(ring),
          entries_(rows * cols, LaurentPoly::zero(ring)) {}

    static PolyMatrix identity(std::size_t n, Ring ring);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Ring ring() const { return ring_; }

    LaurentPoly& at(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const LaurentPoly& at(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
    friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
    bool operator==(const PolyMatrix&) const = default;

    bool is_zero() const;
    PolyMatrix without_col_range(std::size_t first, std::size_t count) const;
    PolyMatrix reduced_mod(long p) const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    Ring ring_{};
    std::vector<LaurentPoly> entries_;
};

// Exact determinant by fraction-free (Bareiss) elimination with full
// pivoting; over Z no rational intermediates appear, every intermediate
// entry is a minor of the input. 0x0 determinant is 1.
LaurentPoly det_fraction_free(const PolyMatrix& m);

// Invariant factors d_1 | d_2 | ... of a matrix over F_p[t], monic,
// zero-padded to min(rows, cols). The product of the nonzero factors is the
// gcd of the rank-sized minors; for a presentation matrix of a torsion
// module this is the module order.
std::vector<LaurentPoly> smith_diagonal(const PolyMatrix& m);

} // namespace fibercert

#endif
