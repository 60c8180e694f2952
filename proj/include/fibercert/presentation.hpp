#ifndef FIBERCERT_PRESENTATION_HPP
#define FIBERCERT_PRESENTATION_HPP

#include <optional>
#include <string>
#include <vector>

#include "fibercert/word.hpp"

namespace fibercert {

// Finite group presentation. Relators are freely reduced and non-empty;
// every generator index is < num_generators.
struct Presentation {
    int num_generators = 0;
    std::vector<Word> relators;
    std::string label;

    int deficiency() const { return num_generators - static_cast<int>(relators.size()); }
    void validate() const; // throws InputError on bad generator indices
};

// A class phi in Hom(pi, Z), stored by its values on the generators.
class PhiClass {
  public:
    PhiClass() = default;
    explicit PhiClass(std::vector<long> values) : values_(std::move(values)) {}

    const std::vector<long>& values() const { return values_; }
    long operator()(const Word& w) const; // signed sum along the letters
    bool nontrivial() const;
    // gcd over generators of |phi(g_j)| equals 1
    bool primitive() const;

    bool operator==(const PhiClass&) const = default;

  private:
    std::vector<long> values_;
};

// Throws unless phi kills every relator and matches the generator count.
void validate_phi(const Presentation& pres, const PhiClass& phi);

// Recovers phi from the abelianized relator matrix when its integer kernel
// has rank one (the knot-exterior / fibered-class situation); throws
// InputError otherwise. The representative is primitive with its first
// nonzero value positive.
PhiClass infer_phi(const Presentation& pres);

// Text file format:
//   gens: 3
//   rel: cacB
//   rel: abaC
//   phi: 1 1 1          (optional; inferred when absent)
//   label: trefoil      (optional)
//   b3: 0               (optional, default 0)
//   closed: false       (optional, default false)
// Blank lines and '#' comments are skipped.
struct PresentationFile {
    Presentation pres;
    std::optional<PhiClass> phi;
    int b3 = 0;
    bool closed = false;
};

PresentationFile parse_presentation(const std::string& text);
PresentationFile load_presentation_file(const std::string& path);
std::string presentation_to_text(const Presentation& pres, const PhiClass& phi);

} // namespace fibercert

#endif
