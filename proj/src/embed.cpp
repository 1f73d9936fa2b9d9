#include "wittlab/embed.hpp"

#include <algorithm>
#include <set>

#include "wittlab/fq.hpp"

namespace wittlab {
namespace embed {

using grp::GroupHom;
using grp::Perm;
using grp::PermGroup;

const char* kernel_case_name(KernelCase c) {
    switch (c) {
        case KernelCase::QuasiPPerfect: return "Case1";
        case KernelCase::AbelianP: return "Case2";
        case KernelCase::PrimeToP: return "Case3";
    }
    return "?";
}

EmbeddingProblem EmbeddingProblem::make(const PermGroup& gamma, const GroupHom& alpha,
                                        std::optional<GroupHom> section) {
    require(alpha.domain().same_set(gamma), ErrorKind::InvalidArgument,
            "alpha must be defined on gamma");
    require(alpha.is_surjective(), ErrorKind::NotSurjective, "alpha must be onto G");
    PermGroup H = alpha.kernel();
    if (section) {
        require(section->domain().same_set(alpha.codomain()) &&
                    section->codomain().same_set(gamma),
                ErrorKind::InvalidArgument, "section must map G into gamma");
        for (const auto& g : alpha.codomain().elements())
            require(alpha((*section)(g)) == g, ErrorKind::InvalidArgument,
                    "section is not a right inverse of alpha");
    }
    return EmbeddingProblem{gamma, alpha.codomain(), alpha, H, std::move(section)};
}

EmbeddingProblem EmbeddingProblem::from_normal(const PermGroup& gamma, const PermGroup& H) {
    auto q = grp::quotient_group(gamma, H);
    return EmbeddingProblem{gamma, q.group, q.projection, H, std::nullopt};
}

namespace {

// proper nontrivial gamma-normal subgroups of H, via normal closures of
// single elements (every such subgroup contains one of these)
std::vector<PermGroup> gamma_normal_inside(const PermGroup& H, const PermGroup& gamma) {
    std::vector<PermGroup> out;
    std::set<std::vector<Perm>> seen;
    for (const auto& x : H.elements()) {
        if (x.is_identity()) continue;
        PermGroup N = grp::normal_closure(gamma, {x});
        if (N.order() >= H.order() || !N.is_subgroup_of(H)) continue;
        if (seen.insert(N.elements()).second) out.push_back(N);
    }
    return out;
}

} // namespace

KernelCase classify_kernel(const PermGroup& H, const PermGroup& gamma, uint32_t p) {
    require(H.order() > 1, ErrorKind::NotMinimalNormal, "kernel is trivial");
    require(H.is_normal_in(gamma), ErrorKind::NotMinimalNormal, "kernel is not normal");
    require(gamma_normal_inside(H, gamma).empty(), ErrorKind::NotMinimalNormal,
            "kernel is not a minimal normal subgroup");

    bool case1 = grp::is_perfect(H) && grp::quasi_p_part(H, p).order() == H.order();
    bool case2 = false;
    if (H.is_abelian()) {
        case2 = true;
        for (const auto& e : H.elements())
            if (!e.is_identity() && e.order() != (long)p) case2 = false;
    }
    bool case3 = H.order() % p != 0;
    int hits = (case1 ? 1 : 0) + (case2 ? 1 : 0) + (case3 ? 1 : 0);
    require(hits == 1, ErrorKind::InvalidArgument,
            "kernel trichotomy failed; minimal normal structure violated");
    if (case1) return KernelCase::QuasiPPerfect;
    if (case2) return KernelCase::AbelianP;
    return KernelCase::PrimeToP;
}

SplitifyResult splitify(const EmbeddingProblem& ep, const PermGroup& Gp) {
    require(Gp.is_subgroup_of(ep.gamma), ErrorKind::NotSubgroup,
            "Gp must be a subgroup of gamma");
    std::vector<Perm> image_gens;
    for (const auto& g : Gp.generators()) image_gens.push_back(ep.alpha(g));
    PermGroup restricted_image =
        grp::subgroup_generated(ep.quotient.degree(), image_gens, ep.quotient.order_cap());
    require(restricted_image.order() == ep.quotient.order(), ErrorKind::NotSurjectiveOnGp,
            "alpha restricted to Gp is not onto G");

    grp::Semidirect sd = grp::semidirect_conjugation(ep.kernel, Gp);
    // beta: (h, g) -> h g, defined by where the product's generators go
    std::vector<Perm> beta_images;
    for (const auto& h : ep.kernel.generators()) beta_images.push_back(h);
    for (const auto& g : Gp.generators()) beta_images.push_back(g);
    GroupHom beta = GroupHom::from_generator_images(sd.group, ep.gamma, beta_images);
    require(beta.is_surjective(), ErrorKind::NotSurjective,
            "beta failed to surject; H * Gp should cover gamma");

    EmbeddingProblem split{sd.group, Gp, sd.projection, sd.embed_h.image(), sd.embed_g};
    return SplitifyResult{std::move(split), std::move(beta)};
}

namespace {

ReductionNode build_tree(const EmbeddingProblem& ep, uint32_t p, int depth, int& max_depth,
                         std::vector<KernelCase>& leaves, BigInt& kernel_product) {
    max_depth = std::max(max_depth, depth);
    ReductionNode node{ep, std::nullopt, 0, {}};
    if (ep.kernel.order() == 1) return node; // nothing to solve; leafless root

    auto candidates = gamma_normal_inside(ep.kernel, ep.gamma);
    if (candidates.empty()) {
        KernelCase c = classify_kernel(ep.kernel, ep.gamma, p);
        node.leaf_case = c;
        leaves.push_back(c);
        kernel_product *= (long)ep.kernel.order();
        return node;
    }
    std::sort(candidates.begin(), candidates.end(), [](const PermGroup& a, const PermGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    const PermGroup& H1 = candidates.front();
    node.h1_order = H1.order();

    // quotient problem: Gamma/H1 -> G with kernel H/H1
    auto q = grp::quotient_group(ep.gamma, H1);
    std::vector<Perm> a1_images;
    for (const auto& g : ep.gamma.generators()) a1_images.push_back(ep.alpha(g));
    GroupHom alpha1 = GroupHom::from_generator_images(q.group, ep.quotient, a1_images);
    EmbeddingProblem child1 = EmbeddingProblem::make(q.group, alpha1);

    // sub problem: Gamma -> Gamma/H1 with kernel H1
    EmbeddingProblem child2 = EmbeddingProblem::make(ep.gamma, q.projection);

    node.children.push_back(build_tree(child1, p, depth + 1, max_depth, leaves, kernel_product));
    node.children.push_back(build_tree(child2, p, depth + 1, max_depth, leaves, kernel_product));
    return node;
}

} // namespace

ReductionTree reduction_tree(const EmbeddingProblem& ep, uint32_t p) {
    require(is_prime_u32(p), ErrorKind::CompositeP, "p must be prime");
    int max_depth = 0;
    std::vector<KernelCase> leaves;
    BigInt product = 1;
    ReductionNode root = build_tree(ep, p, 0, max_depth, leaves, product);
    return ReductionTree{std::move(root), max_depth, std::move(leaves), std::move(product)};
}

AbhyankarResult abhyankar_quotient_check(const PermGroup& G, uint32_t p, long genus,
                                         long punctures) {
    require(is_prime_u32(p), ErrorKind::CompositeP, "p must be prime");
    require(genus >= 0, ErrorKind::InvalidArgument, "genus must be >= 0");
    require(punctures >= 1, ErrorKind::InvalidArgument, "need at least one puncture");
    AbhyankarResult res;
    res.bound = 2 * genus + punctures - 1;
    PermGroup pg = grp::quasi_p_part(G, p);
    res.quotient = grp::quotient_group(G, pg).group;
    res.quotient_order = res.quotient.order();
    try {
        auto mg = grp::min_generators(res.quotient, (int)res.bound);
        res.d = mg.d;
        res.certificate = mg.generating_set;
        res.ok = true;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::CapExceeded) throw;
        res.ok = false; // exhaustive search up to the bound found nothing
    }
    return res;
}

} // namespace embed
} // namespace wittlab
