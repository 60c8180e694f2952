#ifndef FIBERCERT_FOX_HPP
#define FIBERCERT_FOX_HPP

#include <gmpxx.h>

#include <map>
#include <string>

#include "fibercert/word.hpp"

namespace fibercert {

// Element of the integral group ring of a free group: a finite Z-linear
// combination of freely reduced words. Terms with equal words are merged
// and zero coefficients dropped.
class FoxElement {
  public:
    FoxElement() = default;
    static FoxElement zero() { return {}; }
    static FoxElement one() { return of_word(Word()); }
    static FoxElement of_word(const Word& w, mpz_class coeff = 1);

    void add_term(const Word& w, const mpz_class& coeff);
    const std::map<Word, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    friend FoxElement operator+(const FoxElement& a, const FoxElement& b);
    friend FoxElement operator-(const FoxElement& a, const FoxElement& b);
    friend FoxElement operator*(const FoxElement& a, const FoxElement& b);
    FoxElement operator-() const;
    FoxElement& operator+=(const FoxElement& o) { return *this = *this + o; }
    FoxElement& operator-=(const FoxElement& o) { return *this = *this - o; }

    bool operator==(const FoxElement&) const = default;
    std::string str() const;

  private:
    std::map<Word, mpz_class> terms_;
};

// Free derivative d(w)/d(x_j). Satisfies d(x_j)/d(x_j) = 1,
// d(x_j^-1)/d(x_j) = -x_j^-1, d(y)/d(x_j) = 0 for y != x_j, and the product
// rule d(uv) = du + u.dv.
FoxElement fox_derivative(const Word& w, int j);

} // namespace fibercert

#endif
