#include "fibercert/word.hpp"

#include <algorithm>

#include "fibercert/errors.hpp"

namespace fibercert {

void Word::reduce() {
    std::vector<Letter> out;
    out.reserve(letters_.size());
    for (const Letter& l : letters_) {
        if (!out.empty() && out.back().gen == l.gen && out.back().sign == -l.sign)
            out.pop_back();
        else
            out.push_back(l);
    }
    letters_ = std::move(out);
}

Word Word::gen(int index, int sign) {
    Word w;
    w.letters_ = {Letter{index, sign}};
    return w;
}

Word Word::from_letters(std::vector<Letter> letters) {
    Word w;
    w.letters_ = std::move(letters);
    w.reduce();
    return w;
}

namespace {

// Generator letters in presentation order: x, y, z, then a..w. Small
// presentations read the way the literature writes them ("xyxYXY").
constexpr char kAlphabet[] = "xyzabcdefghijklmnopqrstuvw";

int letter_index(char lower) {
    if (lower >= 'x')
        return lower - 'x';
    return lower - 'a' + 3;
}

} // namespace

Word Word::parse(std::string_view text) {
    std::vector<Letter> letters;
    int col = 0;
    for (char c : text) {
        ++col;
        if (c == ' ' || c == '\t')
            continue;
        if (c >= 'a' && c <= 'z')
            letters.push_back({letter_index(c), +1});
        else if (c >= 'A' && c <= 'Z')
            letters.push_back({letter_index(static_cast<char>(c - 'A' + 'a')), -1});
        else
            throw ParseError(std::string("invalid word character '") + c + "'", 0, col);
    }
    return from_letters(std::move(letters));
}

std::string Word::str() const {
    std::string s;
    s.reserve(letters_.size());
    for (const Letter& l : letters_) {
        if (l.gen >= 26)
            throw InputError("word text form supports at most 26 generators");
        char c = kAlphabet[l.gen];
        s.push_back(l.sign > 0 ? c : static_cast<char>(c - 'a' + 'A'));
    }
    return s;
}

int Word::max_gen() const {
    int m = -1;
    for (const Letter& l : letters_)
        m = std::max(m, l.gen);
    return m;
}

Word Word::inverse() const {
    Word w;
    w.letters_.reserve(letters_.size());
    for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
        w.letters_.push_back({it->gen, -it->sign});
    return w; // reversal of a reduced word is reduced
}

Word operator*(const Word& a, const Word& b) {
    std::vector<Letter> letters = a.letters_;
    letters.insert(letters.end(), b.letters_.begin(), b.letters_.end());
    return Word::from_letters(std::move(letters));
}

Word Word::conjugated_by(const Word& g) const {
    return g * (*this) * g.inverse();
}

} // namespace fibercert
