#ifndef FIBERCERT_TEST_HELPERS_HPP
#define FIBERCERT_TEST_HELPERS_HPP

#include <random>

#include "fibercert/laurent.hpp"
#include "fibercert/poly_matrix.hpp"
#include "fibercert/word.hpp"

namespace fibercert::testing {

inline Word random_word(std::mt19937_64& rng, int num_gens, std::size_t max_len) {
    std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
    std::uniform_int_distribution<int> gen_dist(0, num_gens - 1);
    std::uniform_int_distribution<int> sign_dist(0, 1);
    std::vector<Letter> letters;
    std::size_t len = len_dist(rng);
    for (std::size_t i = 0; i < len; ++i)
        letters.push_back({gen_dist(rng), sign_dist(rng) ? 1 : -1});
    return Word::from_letters(std::move(letters));
}

inline LaurentPoly random_poly(std::mt19937_64& rng, Ring ring, long max_span, long coeff_bound,
                               long offset_range = 0) {
    std::uniform_int_distribution<long> span_dist(0, max_span);
    std::uniform_int_distribution<long> coeff_dist(-coeff_bound, coeff_bound);
    std::uniform_int_distribution<long> off_dist(-offset_range, offset_range);
    long span = span_dist(rng);
    std::vector<mpz_class> coeffs;
    for (long i = 0; i <= span; ++i)
        coeffs.emplace_back(coeff_dist(rng));
    return LaurentPoly::from_coeffs(ring, off_dist(rng), std::move(coeffs));
}

// First-row cofactor expansion; the independent reference for the
// fraction-free determinant.
inline LaurentPoly det_cofactor(const PolyMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("cofactor det needs a square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return LaurentPoly::one(m.ring());
    if (n == 1)
        return m.at(0, 0);
    LaurentPoly det = LaurentPoly::zero(m.ring());
    for (std::size_t j = 0; j < n; ++j) {
        if (m.at(0, j).is_zero())
            continue;
        PolyMatrix minor(n - 1, n - 1, m.ring());
        for (std::size_t i = 1; i < n; ++i) {
            std::size_t jj = 0;
            for (std::size_t k = 0; k < n; ++k) {
                if (k == j)
                    continue;
                minor.at(i - 1, jj++) = m.at(i, k);
            }
        }
        LaurentPoly term = m.at(0, j) * det_cofactor(minor);
        det = (j % 2 == 0) ? det + term : det - term;
    }
    return det;
}

} // namespace fibercert::testing

#endif
