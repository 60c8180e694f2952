#include "fibercert/fox.hpp"

#include <sstream>

namespace fibercert {

FoxElement FoxElement::of_word(const Word& w, mpz_class coeff) {
    FoxElement e;
    e.add_term(w, coeff);
    return e;
}

void FoxElement::add_term(const Word& w, const mpz_class& coeff) {
    if (coeff == 0)
        return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, coeff);
    } else {
        it->second += coeff;
        if (it->second == 0)
            terms_.erase(it);
    }
}

FoxElement operator+(const FoxElement& a, const FoxElement& b) {
    FoxElement out = a;
    for (const auto& [w, c] : b.terms_)
        out.add_term(w, c);
    return out;
}

FoxElement operator-(const FoxElement& a, const FoxElement& b) {
    FoxElement out = a;
    for (const auto& [w, c] : b.terms_)
        out.add_term(w, -c);
    return out;
}

FoxElement operator*(const FoxElement& a, const FoxElement& b) {
    FoxElement out;
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_)
            out.add_term(wa * wb, ca * cb);
    return out;
}

FoxElement FoxElement::operator-() const {
    FoxElement out;
    for (const auto& [w, c] : terms_)
        out.terms_.emplace(w, -c);
    return out;
}

std::string FoxElement::str() const {
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first)
            out << (c > 0 ? " + " : " - ");
        else if (c < 0)
            out << "-";
        first = false;
        mpz_class a = abs(c);
        std::string ws = w.empty() ? "1" : w.str();
        if (a == 1)
            out << ws;
        else if (w.empty())
            out << a.get_str();
        else
            out << a.get_str() << "*" << ws;
    }
    return out.str();
}

FoxElement fox_derivative(const Word& w, int j) {
    // Scan left to right with the product rule: the letter at position i
    // contributes prefix * d(letter)/d(x_j).
    FoxElement out;
    std::vector<Letter> prefix;
    prefix.reserve(w.length());
    for (const Letter& l : w.letters()) {
        if (l.gen == j) {
            if (l.sign > 0) {
                out.add_term(Word::from_letters(prefix), 1);
            } else {
                auto with_inv = prefix;
                with_inv.push_back({j, -1});
                out.add_term(Word::from_letters(std::move(with_inv)), -1);
            }
        }
        prefix.push_back(l);
    }
    return out;
}

} // namespace fibercert
