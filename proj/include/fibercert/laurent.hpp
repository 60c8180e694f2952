#ifndef FIBERCERT_LAURENT_HPP
#define FIBERCERT_LAURENT_HPP

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "fibercert/errors.hpp"

namespace fibercert {

// Coefficient ring tag: p == 0 means the integers, otherwise F_p (p prime).
struct Ring {
    long p = 0;
    bool is_fp() const { return p != 0; }
    bool operator==(const Ring&) const = default;
    std::string str() const { return p == 0 ? "Z" : "F" + std::to_string(p); }
};

inline Ring ring_z() { return Ring{0}; }
inline Ring ring_fp(long p) { return Ring{p}; }

// Exact Laurent polynomial sum c_i t^(offset+i) over Z or F_p.
//
// Storage invariant: the coefficient vector is empty (the zero polynomial)
// or has nonzero first and last entries; over F_p all entries lie in [0,p).
// Two polynomials are unit-equivalent when they differ by +-t^k (over Z) or
// c*t^k (over F_p); normalized() picks the canonical representative of that
// class: lowest exponent 0 and positive (Z) resp. monic (F_p) top coefficient.
class LaurentPoly {
  public:
    LaurentPoly() = default; // zero over Z
    explicit LaurentPoly(Ring r) : ring_(r) {}

    static LaurentPoly zero(Ring r) { return LaurentPoly(r); }
    static LaurentPoly one(Ring r) { return monomial(r, 1, 0); }
    static LaurentPoly t(Ring r) { return monomial(r, 1, 1); }
    static LaurentPoly monomial(Ring r, mpz_class c, long exp);
    // Builds from an explicit coefficient run; trims and reduces mod p.
    static LaurentPoly from_coeffs(Ring r, long offset, std::vector<mpz_class> coeffs);

    Ring ring() const { return ring_; }
    bool is_zero() const { return coeffs_.empty(); }
    long lowest_exp() const;  // requires nonzero
    long highest_exp() const; // requires nonzero
    const mpz_class& leading() const;  // coefficient of highest power
    const mpz_class& trailing() const; // coefficient of lowest power
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    long offset() const { return offset_; }
    mpz_class coeff_at(long exp) const;
    std::size_t term_count() const;

    // highest minus lowest exponent; nullopt is the -infinity sentinel (f = 0).
    std::optional<long> deg_span() const;
    // top coefficient is a unit of the ring; undefined (throws) for f = 0.
    bool is_monic() const;

    LaurentPoly normalized() const;
    LaurentPoly shifted(long k) const; // f * t^k
    LaurentPoly pow(unsigned long n) const;
    LaurentPoly reduced_mod(long p) const; // Z -> F_p coefficient reduction

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    bool operator==(const LaurentPoly&) const = default;

    // Exact quotient f/g, or nullopt when g does not divide f (a first-class
    // outcome, consumed by fallback logic). Throws on g = 0.
    static std::optional<LaurentPoly> exact_div(const LaurentPoly& f, const LaurentPoly& g);

    // Descending-power text form, e.g. "2*t^2 - 3*t + 2".
    std::string str() const;

  private:
    Ring ring_{};
    long offset_ = 0;
    std::vector<mpz_class> coeffs_;

    void trim();
    void reduce_coeffs();
    static void check_same_ring(const LaurentPoly& a, const LaurentPoly& b);
};

// f and g are equal up to multiplication by a unit of R[t^+-1].
inline bool unit_eq(const LaurentPoly& f, const LaurentPoly& g) {
    return f.normalized() == g.normalized();
}

// Monic gcd in F_p[t] up to units; gcd(f, 0) = normalized f. Z input is
// unsupported by design (the Z-side pipeline never needs gcds of minors).
LaurentPoly gcd_univariate(const LaurentPoly& f, const LaurentPoly& g);

// Division with remainder over F_p: f = q*g + r, deg r < deg g (polynomial
// parts; offsets handled so that q,r are exact Laurent identities).
struct FpDivMod {
    LaurentPoly quotient;
    LaurentPoly remainder;
};
FpDivMod divmod_fp(const LaurentPoly& f, const LaurentPoly& g);

} // namespace fibercert

#endif
