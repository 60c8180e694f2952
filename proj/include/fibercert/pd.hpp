#ifndef FIBERCERT_PD_HPP
#define FIBERCERT_PD_HPP

#include <array>
#include <string>
#include <vector>

#include "fibercert/presentation.hpp"

namespace fibercert {

// Planar diagram code of a knot. Each crossing lists its four edge labels
// counterclockwise starting from the incoming under-edge; edges are
// numbered 1..2n along the orientation, so the outgoing under-edge is the
// cyclic successor of the incoming one. See docs/formats.md for the sign
// convention.
struct PDCode {
    std::vector<std::array<int, 4>> crossings;
    int num_edges() const { return 2 * static_cast<int>(crossings.size()); }
};

PDCode parse_pd_json(const std::string& text);
PDCode load_pd_file(const std::string& path);

// Throws InputError naming the offending edge when a label does not appear
// exactly twice.
void validate_pd(const PDCode& pd);

// Same shadow with every crossing switched.
PDCode mirror(const PDCode& pd);

struct WirtingerResult {
    Presentation pres;
    PhiClass phi; // +1 on every arc meridian
    int num_arcs = 0;
};

// Wirtinger presentation of the knot group: one generator per arc (maximal
// over-strand), one conjugation relator per crossing with the last
// crossing's relator dropped, so the deficiency is 1.
WirtingerResult wirtinger(const PDCode& pd);

} // namespace fibercert

#endif
