#ifndef WITTLAB_CURVES_HPP
#define WITTLAB_CURVES_HPP

#include <string>
#include <vector>

#include "wittlab/bigint.hpp"
#include "wittlab/groups.hpp"

namespace wittlab {
namespace curves {

// Ramification data of a degree-N cover: each branch point carries the full
// fiber partition (indices summing to N; unramified points may be omitted as
// trailing 1s but the listed ones must sum to N).
struct BranchPoint {
    std::vector<long> ram_indices;
};

struct RamificationProfile {
    long degree = 1;  // N
    long base_genus = 0;
    std::vector<BranchPoint> branch_points;

    long ramification_divisor_degree() const; // sum of (e_P - 1)
};

// exact tame Riemann-Hurwitz genus; WildRamification if p divides some e_P,
// NonIntegralGenus if the profile is inconsistent
long tame_hurwitz_genus(const RamificationProfile& rp, uint32_t p);

// the same Riemann-Hurwitz count as an unchecked rational, for bound-style
// profiles that deliberately omit part of the ramification
BigRat hurwitz_genus_rational(const RamificationProfile& rp, uint32_t p);

// The explicit abelian cover family u^{p^n} - u = y^{p^n+1} with Galois group
// (Z/p)^n, totally (and tamely) ramified over the p^n finite branch points of
// the u-line.
struct ASWCoverSpec {
    uint32_t p = 2;
    int n = 1;

    long cover_degree() const; // p^n + 1, the degree over the u-line
    std::string equation() const;
    std::string galois_group() const; // "(Z/p)^n"
    RamificationProfile finite_branch_profile() const; // omits u = infinity
};

struct EtaleCertificate {
    // d/du (u^{p^n} - u - y^{p^n+1}) = p^n u^{p^n - 1} - 1 = -1 in char p
    std::string derivative;           // "-1"
    bool unit_derivative = false;     // so the cover is etale away from y = infinity
    bool totally_ramified_at_y0 = false; // after translating the totally ramified point to 0
};

struct Lemma67Bound {
    BigRat bound;          // p^n (p^n - 2) / 2
    BigInt genus_at_least; // ceil of the bound (genus is an integer)
    EtaleCertificate certificate;
};

Lemma67Bound lemma67_bound(uint32_t p, int n);

struct GenusChoice {
    int d = 0;     // minimal generator count of H^l
    long genus = 0; // smallest g >= 2 with 2g > d
};

// smallest usable genus for an etale H^l-cover source: g >= 2 and 2g
// exceeding the generator count of H^l
GenusChoice genus_needed_for(const grp::PermGroup& H, int l, uint32_t p);

// smallest n with p^n (p^n - 2)/2 >= target
int choose_lemma67_parameters(const BigInt& target_genus, uint32_t p);

} // namespace curves
} // namespace wittlab

#endif
