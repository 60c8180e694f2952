#ifndef FIBERCERT_WORD_HPP
#define FIBERCERT_WORD_HPP

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace fibercert {

struct Letter {
    int gen;  // 0-based generator index
    int sign; // +1 or -1
    auto operator<=>(const Letter&) const = default;
};

// Freely reduced word in a free group. Reduction happens on construction,
// so no value ever carries an adjacent x x^-1 pair.
class Word {
  public:
    Word() = default;
    static Word gen(int index, int sign = 1);
    static Word from_letters(std::vector<Letter> letters); // reduces

    // Text form: lowercase letter = generator (a=0..z=25), uppercase = its
    // inverse; e.g. "xyX". Throws ParseError with the offending column.
    static Word parse(std::string_view text);
    std::string str() const; // requires all generator indices < 26

    bool empty() const { return letters_.empty(); }
    std::size_t length() const { return letters_.size(); }
    const std::vector<Letter>& letters() const { return letters_; }
    int max_gen() const; // largest generator index, -1 for the empty word

    Word inverse() const;
    friend Word operator*(const Word& a, const Word& b); // concatenate + reduce
    Word conjugated_by(const Word& g) const;             // g w g^-1

    bool operator==(const Word&) const = default;
    auto operator<=>(const Word&) const = default;

  private:
    std::vector<Letter> letters_;
    void reduce();
};

} // namespace fibercert

#endif
