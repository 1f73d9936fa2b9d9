#ifndef WITTLAB_GROUPS_HPP
#define WITTLAB_GROUPS_HPP

#include "wittlab/bigint.hpp"
#include "wittlab/perm.hpp"

namespace wittlab {
namespace grp {

// Finite abelian group type as an invariant-factor chain d_1 | d_2 | ...
struct AbelianType {
    std::vector<long> factors; // ascending divisibility, every entry > 1

    static AbelianType from_orders(std::vector<long> orders); // normalizes any list of cyclic orders
    long order() const;
    bool operator==(const AbelianType& o) const { return factors == o.factors; }
    std::string to_string() const;
};

// subgroup generated by all elements of p-power order (equivalently by the
// Sylow p-subgroups); normal, with prime-to-p quotient, minimal such
PermGroup quasi_p_part(const PermGroup& G, uint32_t p);

PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& seeds);
PermGroup commutator_subgroup(const PermGroup& G);
bool is_perfect(const PermGroup& G);
AbelianType abelianization(const PermGroup& G);
AbelianType abelian_invariants(const PermGroup& A); // A must be abelian

// minimal normal subgroup decomposed as m copies of a simple group S
struct MinimalNormal {
    PermGroup subgroup;
    long simple_order = 1;
    int multiplicity = 1;
    bool simple_abelian = false;
    bool simple_perfect = false;
};
std::vector<MinimalNormal> minimal_normal_subgroups(const PermGroup& G);

struct MinGenResult {
    int d = 0;
    std::vector<Perm> generating_set;
};
// smallest k <= cap_k with a k-element generating set; CapExceeded if none
MinGenResult min_generators(const PermGroup& G, int cap_k);

PermGroup heisenberg(uint32_t p, int m, size_t cap = kDefaultOrderCap);
// product of Heisenberg groups over Z/p^{m_i} for the cyclic factors of A
PermGroup heisenberg_product(uint32_t p, const AbelianType& A, size_t cap = kDefaultOrderCap);

struct Semidirect {
    PermGroup group;     // on the set H x G
    GroupHom embed_h;    // H -> group
    GroupHom embed_g;    // G -> group, a section of the projection
    GroupHom projection; // group -> G, kernel H x {e}
};
// action: for each generator of G, the images of H's generators under the
// corresponding automorphism of H
Semidirect semidirect(const PermGroup& H, const PermGroup& G,
                      const std::vector<std::vector<Perm>>& action);
// conjugation action inside a common overgroup: both H and G sit in Gamma
Semidirect semidirect_conjugation(const PermGroup& H, const PermGroup& G);

struct Quotient {
    PermGroup group;     // left-coset action of G, faithful since N is normal
    GroupHom projection; // G -> group, kernel N
};
Quotient quotient_group(const PermGroup& G, const PermGroup& N);

PermGroup direct_power(const PermGroup& H, int l, size_t cap = kDefaultOrderCap);
PermGroup direct_product(const PermGroup& A, const PermGroup& B, size_t cap = kDefaultOrderCap);

std::vector<PermGroup> all_normal_subgroups(const PermGroup& G); // includes 1 and G
std::vector<PermGroup> all_subgroups(const PermGroup& G);        // includes 1 and G

bool is_isomorphic(const PermGroup& A, const PermGroup& B);

} // namespace grp
} // namespace wittlab

#endif
