#ifndef WITTLAB_PATCHSIM_HPP
#define WITTLAB_PATCHSIM_HPP

#include "wittlab/groups.hpp"

namespace wittlab {
namespace patch {

// Finite set with a group action: the fiber-functor stand-in for a cover.
// The action is given on generators and extends to a homomorphism into the
// symmetric group of the point set (verified at construction).
class GSet {
  public:
    GSet(grp::PermGroup group, int points, std::vector<grp::Perm> generator_action);

    static GSet regular(const grp::PermGroup& G); // G acting on itself by left translation
    // G acting on the left cosets of a subgroup K
    static GSet cosets(const grp::PermGroup& G, const grp::PermGroup& K);
    static GSet trivial(const grp::PermGroup& G, int points); // all points fixed

    const grp::PermGroup& group() const { return group_; }
    int points() const { return points_; }
    const std::vector<grp::Perm>& generator_action() const { return gen_act_; }

    grp::Perm act(const grp::Perm& g) const; // the permutation of the points by g
    int apply(const grp::Perm& g, int point) const;

    std::vector<std::vector<int>> orbits() const;
    bool transitive() const;
    grp::PermGroup stabilizer(int point) const;

    GSet disjoint_union(const GSet& other) const;

  private:
    grp::PermGroup group_;
    int points_;
    std::vector<grp::Perm> gen_act_; // one point permutation per group generator
};

// Ind_G^Gamma X = (Gamma x X)/~ with (gamma, x) ~ (gamma g^{-1}, g x):
// pairs (coset representative, point), Gamma acting through the coset table.
GSet induce(const grp::PermGroup& gamma, const grp::PermGroup& G, const GSet& X);

struct QuotientCover {
    GSet quotient;                 // (Gamma/H)-set on the H-orbits
    grp::GroupHom gamma_to_q;      // Gamma -> Gamma/H
    std::vector<int> point_to_orbit;
};

// W/H for H normal in Gamma: points are the H-orbits, Gamma/H acts
QuotientCover quotient_action(const GSet& W, const grp::PermGroup& H);

// transport an action along a homomorphism f: G -> Q
GSet pullback(const GSet& X_over_Q, const grp::GroupHom& f);

// orbit multisets match with orbitwise-conjugate point stabilizers
bool is_isomorphic_gsets(const GSet& X, const GSet& Y);

// Patching data: two transitive covers over the two sides of the patch and
// the subgroups that stabilize their identity components. The glued cover is
// connected iff those subgroups generate Gamma.
struct PatchDiagram {
    grp::PermGroup gamma;
    grp::PermGroup G; // acting subgroup on the X side
    grp::PermGroup H; // acting subgroup on the Y side
    GSet x_cover;     // transitive G-set
    GSet y_cover;     // transitive H-set
    int base_x = 0;   // identified base points over the patch locus
    int base_y = 0;
};

struct PatchComponents {
    int components = 0;
    grp::PermGroup generated; // <G, H> inside Gamma
};

PatchComponents patch_components(const PatchDiagram& d);

} // namespace patch
} // namespace wittlab

#endif
