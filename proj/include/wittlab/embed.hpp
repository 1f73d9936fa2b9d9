#ifndef WITTLAB_EMBED_HPP
#define WITTLAB_EMBED_HPP

#include <optional>

#include "wittlab/groups.hpp"

namespace wittlab {
namespace embed {

// Finite data of an embedding problem: a surjection alpha from Gamma onto G
// with kernel H, plus an optional splitting. The profinite source is never
// represented; the reductions only ever touch this finite data.
struct EmbeddingProblem {
    grp::PermGroup gamma;
    grp::PermGroup quotient; // G
    grp::GroupHom alpha;     // gamma ->> quotient
    grp::PermGroup kernel;   // H = ker(alpha)
    std::optional<grp::GroupHom> split_witness; // section G -> gamma

    static EmbeddingProblem make(const grp::PermGroup& gamma, const grp::GroupHom& alpha,
                                 std::optional<grp::GroupHom> section = std::nullopt);
    // alpha = projection Gamma -> Gamma/H for a normal subgroup H
    static EmbeddingProblem from_normal(const grp::PermGroup& gamma, const grp::PermGroup& H);
};

enum class KernelCase {
    QuasiPPerfect = 1, // H perfect and generated by its p-Sylows
    AbelianP = 2,      // H elementary abelian p
    PrimeToP = 3,      // gcd(|H|, p) = 1
};

const char* kernel_case_name(KernelCase c);

// classification of a minimal normal kernel; NotMinimalNormal if H is not a
// minimal normal subgroup of gamma, exactly one case holds otherwise
KernelCase classify_kernel(const grp::PermGroup& H, const grp::PermGroup& gamma, uint32_t p);

struct SplitifyResult {
    EmbeddingProblem split_problem; // Gamma' = H x| Gp ->> Gp, with its section
    grp::GroupHom beta;             // Gamma' ->> Gamma, (h, g) -> h g
};

// replace the problem by a split one with the same kernel, using a subgroup
// Gp of Gamma that alpha maps onto G
SplitifyResult splitify(const EmbeddingProblem& ep, const grp::PermGroup& Gp);

// Binary reduction tree of the induction on |H|: an internal node picks the
// smallest proper nontrivial Gamma-normal subgroup H1 of H (ties by
// lexicographically least element set) and splits into the quotient problem
// (Gamma/H1 -> G, kernel H/H1) and the sub problem (Gamma -> Gamma/H1,
// kernel H1); every leaf kernel is minimal normal and classified.
struct ReductionNode {
    EmbeddingProblem problem;
    std::optional<KernelCase> leaf_case;  // engaged iff this is a leaf
    size_t h1_order = 0;                  // for internal nodes
    std::vector<ReductionNode> children;  // quotient problem first, then sub problem

    bool is_leaf() const { return leaf_case.has_value(); }
};

struct ReductionTree {
    ReductionNode root;
    int depth = 0;
    std::vector<KernelCase> leaf_cases;
    BigInt leaf_kernel_order_product = 1; // equals |H| (trivial kernel: empty product)
};

ReductionTree reduction_tree(const EmbeddingProblem& ep, uint32_t p);

// Raynaud-Harbater criterion at genus g with r >= 1 punctures: G is a
// quotient of the fundamental group iff d(G/p(G)) <= 2g + r - 1.
struct AbhyankarResult {
    bool ok = false;
    size_t quotient_order = 0;
    long bound = 0;
    int d = -1;                            // d(G/p(G)) when <= bound
    std::vector<grp::Perm> certificate;    // generating set of the quotient, when ok
    grp::PermGroup quotient;               // G/p(G) as a coset-action group
};

AbhyankarResult abhyankar_quotient_check(const grp::PermGroup& G, uint32_t p, long genus,
                                         long punctures);

} // namespace embed
} // namespace wittlab

#endif
