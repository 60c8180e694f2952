#include "fibercert/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace fibercert {

void LaurentPoly::check_same_ring(const LaurentPoly& a, const LaurentPoly& b) {
    if (!(a.ring_ == b.ring_))
        throw InternalError("ring mismatch: " + a.ring_.str() + " vs " + b.ring_.str());
}

void LaurentPoly::reduce_coeffs() {
    if (!ring_.is_fp())
        return;
    mpz_class p(ring_.p);
    for (auto& c : coeffs_) {
        c %= p;
        if (c < 0)
            c += p;
    }
}

void LaurentPoly::trim() {
    std::size_t lo = 0, hi = coeffs_.size();
    while (lo < hi && coeffs_[lo] == 0)
        ++lo;
    while (hi > lo && coeffs_[hi - 1] == 0)
        --hi;
    if (lo == hi) {
        coeffs_.clear();
        offset_ = 0;
        return;
    }
    if (lo > 0 || hi < coeffs_.size()) {
        std::vector<mpz_class> kept(coeffs_.begin() + lo, coeffs_.begin() + hi);
        coeffs_ = std::move(kept);
        offset_ += static_cast<long>(lo);
    }
}

LaurentPoly LaurentPoly::monomial(Ring r, mpz_class c, long exp) {
    LaurentPoly f(r);
    f.offset_ = exp;
    f.coeffs_ = {std::move(c)};
    f.reduce_coeffs();
    f.trim();
    return f;
}

LaurentPoly LaurentPoly::from_coeffs(Ring r, long offset, std::vector<mpz_class> coeffs) {
    LaurentPoly f(r);
    f.offset_ = offset;
    f.coeffs_ = std::move(coeffs);
    f.reduce_coeffs();
    f.trim();
    return f;
}

long LaurentPoly::lowest_exp() const {
    if (is_zero())
        throw std::invalid_argument("lowest_exp of zero polynomial");
    return offset_;
}

long LaurentPoly::highest_exp() const {
    if (is_zero())
        throw std::invalid_argument("highest_exp of zero polynomial");
    return offset_ + static_cast<long>(coeffs_.size()) - 1;
}

const mpz_class& LaurentPoly::leading() const {
    if (is_zero())
        throw std::invalid_argument("leading coefficient of zero polynomial");
    return coeffs_.back();
}

const mpz_class& LaurentPoly::trailing() const {
    if (is_zero())
        throw std::invalid_argument("trailing coefficient of zero polynomial");
    return coeffs_.front();
}

mpz_class LaurentPoly::coeff_at(long exp) const {
    long idx = exp - offset_;
    if (idx < 0 || idx >= static_cast<long>(coeffs_.size()))
        return 0;
    return coeffs_[static_cast<std::size_t>(idx)];
}

std::size_t LaurentPoly::term_count() const {
    std::size_t n = 0;
    for (const auto& c : coeffs_)
        if (c != 0)
            ++n;
    return n;
}

std::optional<long> LaurentPoly::deg_span() const {
    if (is_zero())
        return std::nullopt;
    return static_cast<long>(coeffs_.size()) - 1;
}

bool LaurentPoly::is_monic() const {
    if (is_zero())
        throw std::invalid_argument("monicness undefined for the zero polynomial");
    if (ring_.is_fp())
        return true; // every nonzero element of F_p is a unit
    return leading() == 1 || leading() == -1;
}

LaurentPoly LaurentPoly::normalized() const {
    if (is_zero())
        return *this;
    LaurentPoly f = *this;
    f.offset_ = 0;
    if (ring_.is_fp()) {
        if (f.coeffs_.back() != 1) {
            mpz_class inv;
            mpz_class p(ring_.p);
            if (mpz_invert(inv.get_mpz_t(), f.coeffs_.back().get_mpz_t(), p.get_mpz_t()) == 0)
                throw InternalError("non-invertible leading coefficient mod p");
            for (auto& c : f.coeffs_) {
                c *= inv;
                c %= p;
            }
        }
    } else if (f.coeffs_.back() < 0) {
        for (auto& c : f.coeffs_)
            c = -c;
    }
    return f;
}

LaurentPoly LaurentPoly::shifted(long k) const {
    LaurentPoly f = *this;
    if (!f.is_zero())
        f.offset_ += k;
    return f;
}

LaurentPoly LaurentPoly::pow(unsigned long n) const {
    LaurentPoly acc = one(ring_);
    LaurentPoly base = *this;
    while (n > 0) {
        if (n & 1)
            acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

LaurentPoly LaurentPoly::reduced_mod(long p) const {
    if (ring_.is_fp())
        throw InternalError("reduced_mod expects an integer-ring polynomial");
    return from_coeffs(ring_fp(p), offset_, coeffs_);
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly f = *this;
    for (auto& c : f.coeffs_)
        c = -c;
    f.reduce_coeffs();
    return f;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly::check_same_ring(a, b);
    if (a.is_zero())
        return b;
    if (b.is_zero())
        return a;
    long lo = std::min(a.offset_, b.offset_);
    long hi = std::max(a.offset_ + static_cast<long>(a.coeffs_.size()),
                       b.offset_ + static_cast<long>(b.coeffs_.size()));
    LaurentPoly f(a.ring_);
    f.offset_ = lo;
    f.coeffs_.assign(static_cast<std::size_t>(hi - lo), mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        f.coeffs_[static_cast<std::size_t>(a.offset_ - lo) + i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i)
        f.coeffs_[static_cast<std::size_t>(b.offset_ - lo) + i] += b.coeffs_[i];
    f.reduce_coeffs();
    f.trim();
    return f;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    return a + (-b);
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly::check_same_ring(a, b);
    LaurentPoly f(a.ring_);
    if (a.is_zero() || b.is_zero())
        return f;
    f.offset_ = a.offset_ + b.offset_;
    f.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
    // mpz_addmul avoids a temporary per product; this loop dominates the
    // determinant kernels.
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0)
            continue;
        const mpz_srcptr ai = a.coeffs_[i].get_mpz_t();
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0)
                continue;
            mpz_addmul(f.coeffs_[i + j].get_mpz_t(), ai, b.coeffs_[j].get_mpz_t());
        }
    }
    f.reduce_coeffs();
    f.trim();
    return f;
}

std::optional<LaurentPoly> LaurentPoly::exact_div(const LaurentPoly& f, const LaurentPoly& g) {
    check_same_ring(f, g);
    if (g.is_zero())
        throw std::invalid_argument("division by the zero polynomial");
    if (f.is_zero())
        return zero(f.ring_);

    // Work on polynomial parts; the offset difference rides along as t^k.
    long shift = f.offset_ - g.offset_;
    std::vector<mpz_class> rem = f.coeffs_;
    const std::vector<mpz_class>& div = g.coeffs_;
    if (rem.size() < div.size())
        return std::nullopt;
    std::vector<mpz_class> quot(rem.size() - div.size() + 1, mpz_class(0));

    const bool fp = f.ring_.is_fp();
    mpz_class p(f.ring_.p);
    mpz_class lead_inv;
    if (fp) {
        if (mpz_invert(lead_inv.get_mpz_t(), div.back().get_mpz_t(), p.get_mpz_t()) == 0)
            throw InternalError("non-invertible divisor leading coefficient mod p");
    }

    for (std::size_t step = quot.size(); step-- > 0;) {
        mpz_class& top = rem[step + div.size() - 1];
        if (top == 0)
            continue;
        mpz_class q;
        if (fp) {
            q = (top * lead_inv) % p;
        } else {
            mpz_class r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), top.get_mpz_t(), div.back().get_mpz_t());
            if (r != 0)
                return std::nullopt;
        }
        quot[step] = q;
        for (std::size_t i = 0; i < div.size(); ++i) {
            mpz_submul(rem[step + i].get_mpz_t(), q.get_mpz_t(), div[i].get_mpz_t());
            if (fp) {
                rem[step + i] %= p;
                if (rem[step + i] < 0)
                    rem[step + i] += p;
            }
        }
    }
    for (const auto& c : rem)
        if (c != 0)
            return std::nullopt;
    return from_coeffs(f.ring_, shift, std::move(quot));
}

FpDivMod divmod_fp(const LaurentPoly& f, const LaurentPoly& g) {
    if (!f.ring().is_fp() || !(f.ring() == g.ring()))
        throw InternalError("divmod_fp requires matching F_p rings");
    if (g.is_zero())
        throw std::invalid_argument("division by the zero polynomial");
    if (f.is_zero())
        return {LaurentPoly::zero(f.ring()), LaurentPoly::zero(f.ring())};
    if (f.offset() < 0 || g.offset() < 0)
        throw InternalError("divmod_fp expects polynomial-cone inputs (offset >= 0)");

    // Expand the offsets: division with remainder is a statement about
    // polynomial degree, not about the stored coefficient run.
    std::vector<mpz_class> rem(static_cast<std::size_t>(f.offset()), mpz_class(0));
    rem.insert(rem.end(), f.coeffs().begin(), f.coeffs().end());
    std::vector<mpz_class> div(static_cast<std::size_t>(g.offset()), mpz_class(0));
    div.insert(div.end(), g.coeffs().begin(), g.coeffs().end());

    if (rem.size() < div.size())
        return {LaurentPoly::zero(f.ring()), f};
    std::vector<mpz_class> quot(rem.size() - div.size() + 1, mpz_class(0));

    mpz_class p(f.ring().p);
    mpz_class lead_inv;
    mpz_invert(lead_inv.get_mpz_t(), div.back().get_mpz_t(), p.get_mpz_t());

    for (std::size_t step = quot.size(); step-- > 0;) {
        mpz_class& top = rem[step + div.size() - 1];
        if (top == 0)
            continue;
        mpz_class q = (top * lead_inv) % p;
        quot[step] = q;
        for (std::size_t i = 0; i < div.size(); ++i) {
            mpz_submul(rem[step + i].get_mpz_t(), q.get_mpz_t(), div[i].get_mpz_t());
            rem[step + i] %= p;
            if (rem[step + i] < 0)
                rem[step + i] += p;
        }
    }
    return {LaurentPoly::from_coeffs(f.ring(), 0, std::move(quot)),
            LaurentPoly::from_coeffs(f.ring(), 0, std::move(rem))};
}

LaurentPoly gcd_univariate(const LaurentPoly& f, const LaurentPoly& g) {
    if (!f.ring().is_fp())
        throw InputError("gcd_univariate is supported over F_p only");
    if (!(f.ring() == g.ring()))
        throw InternalError("gcd_univariate: ring mismatch");
    LaurentPoly a = f.normalized();
    LaurentPoly b = g.normalized();
    while (!b.is_zero()) {
        LaurentPoly r = divmod_fp(a, b).remainder;
        a = std::move(b);
        b = r.normalized();
    }
    return a.normalized();
}

std::string LaurentPoly::str() const {
    if (is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = coeffs_.size(); k-- > 0;) {
        const mpz_class& c = coeffs_[k];
        if (c == 0)
            continue;
        long exp = offset_ + static_cast<long>(k);
        mpz_class abs_c = c >= 0 ? c : mpz_class(-c);
        if (first) {
            if (c < 0)
                out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        bool unit_coeff = (abs_c == 1);
        if (exp == 0) {
            out << abs_c.get_str();
        } else {
            if (!unit_coeff)
                out << abs_c.get_str() << "*";
            out << "t";
            if (exp != 1)
                out << "^" << exp;
        }
    }
    return out.str();
}

} // namespace fibercert
