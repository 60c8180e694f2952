#ifndef FIBERCERT_GROUP_HPP
#define FIBERCERT_GROUP_HPP

#include <memory>
#include <string>
#include <vector>

namespace fibercert {

// Finite group stored by its multiplication table. Element 0 is the
// identity. name/element_names feed reports; solvable/derived_length are
// computed from the table.
struct FiniteGroup {
    int order = 1;
    std::vector<int> table; // row-major: table[a*order + b] = a*b
    std::vector<int> inverse;
    std::string name;
    std::vector<std::string> element_names;
    bool solvable = true;
    int derived_length = 0; // -1 when not solvable

    int mul(int a, int b) const { return table[static_cast<std::size_t>(a) * order + b]; }
    int inv(int a) const { return inverse[static_cast<std::size_t>(a)]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); } // g x g^-1

    // Identity, closure, full associativity (the catalog caps order at 64,
    // so the cubic check is cheap).
    void validate() const;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

// Builders. Element 0 is always the identity; element naming follows the
// family: residues for cyclic, cycle notation for (sub)groups of S_n,
// r^i s^e words for dihedral, pairs for the semidirect products.
FiniteGroup cyclic_group(int n);
FiniteGroup dihedral_group(int n);   // order 2n, n >= 2
FiniteGroup symmetric_group(int n);  // n >= 2
FiniteGroup alternating_group(int n);
FiniteGroup semidirect_cyclic(int q, int p); // Z/q x| Z/p, p odd prime dividing q-1

// Subgroup generated by a set of elements (sorted element list).
std::vector<int> subgroup_closure(const FiniteGroup& g, const std::vector<int>& gens);
bool is_subgroup(const FiniteGroup& g, const std::vector<int>& elems);
std::vector<std::vector<int>> all_subgroups(const FiniteGroup& g); // order <= ~24 only

std::vector<int> derived_subgroup(const FiniteGroup& g, const std::vector<int>& elems);

// True when the two multiplication tables define isomorphic groups
// (backtracking over generator images; fine for order <= 64).
bool tables_isomorphic(const FiniteGroup& a, const FiniteGroup& b);

// Deterministic catalog of quotient targets: cyclic Z/n, dihedral D_n
// (n >= 2, D_3 yields to the isomorphic S_3), symmetric S_n, alternating
// A_n, and semidirect Z/q x| Z/p for odd primes p | q-1; isomorphic
// duplicates are removed and the list is sorted by (order, name).
// Orders above 64 are refused: the regular representation would produce
// |G| x |G| polynomial blocks past desk scale.
std::vector<GroupPtr> catalog(int max_order);

struct DoubleCosetDecomp {
    std::vector<int> representatives;
    std::vector<long> coset_sizes; // |C g_i H|, same indexing
    int k() const { return static_cast<int>(representatives.size()); }
};

// Decomposition of G into double cosets C\G/H; representatives are the
// smallest element indices, in increasing order.
DoubleCosetDecomp double_cosets(const FiniteGroup& g, const std::vector<int>& c,
                                const std::vector<int>& h);

} // namespace fibercert

#endif
