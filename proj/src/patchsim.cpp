#include "wittlab/patchsim.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace wittlab {
namespace patch {

using grp::GroupHom;
using grp::Perm;
using grp::PermGroup;

GSet::GSet(PermGroup group, int points, std::vector<Perm> generator_action)
    : group_(std::move(group)), points_(points), gen_act_(std::move(generator_action)) {
    require(points_ >= 1, ErrorKind::InvalidArgument, "point set must be nonempty");
    require(gen_act_.size() == group_.generators().size(), ErrorKind::ActionNotHomomorphic,
            "one point permutation needed per generator");
    for (const auto& a : gen_act_)
        require(a.degree() == points_, ErrorKind::ActionNotHomomorphic,
                "action permutation degree mismatch");
    // the generator assignment must extend to a homomorphism group -> Sym(points)
    PermGroup sym_target(points_, gen_act_, group_.order() * (size_t)points_ + 1);
    require(GroupHom::try_from_generator_images(group_, sym_target, gen_act_).has_value(),
            ErrorKind::ActionNotHomomorphic, "action does not respect the group relations");
}

GSet GSet::regular(const PermGroup& G) {
    const auto& elems = G.elements();
    std::vector<Perm> action;
    for (const auto& g : G.generators()) {
        std::vector<uint16_t> img(elems.size());
        for (size_t i = 0; i < elems.size(); ++i)
            img[i] = (uint16_t)G.element_index(g * elems[i]);
        action.push_back(Perm(std::move(img)));
    }
    return GSet(G, (int)elems.size(), std::move(action));
}

GSet GSet::cosets(const PermGroup& G, const PermGroup& K) {
    require(K.is_subgroup_of(G), ErrorKind::NotSubgroup, "K must be a subgroup of G");
    const auto& elems = G.elements();
    std::vector<int> coset(elems.size(), -1);
    std::vector<int> reps;
    for (size_t i = 0; i < elems.size(); ++i) {
        if (coset[i] >= 0) continue;
        int id = (int)reps.size();
        reps.push_back((int)i);
        for (const auto& k : K.elements())
            coset[(size_t)G.element_index(elems[i] * k)] = id;
    }
    std::vector<Perm> action;
    for (const auto& g : G.generators()) {
        std::vector<uint16_t> img(reps.size());
        for (size_t c = 0; c < reps.size(); ++c)
            img[c] = (uint16_t)coset[(size_t)G.element_index(g * elems[(size_t)reps[c]])];
        action.push_back(Perm(std::move(img)));
    }
    return GSet(G, (int)reps.size(), std::move(action));
}

GSet GSet::trivial(const PermGroup& G, int points) {
    std::vector<Perm> action(G.generators().size(), Perm::identity(points));
    return GSet(G, points, std::move(action));
}

Perm GSet::act(const Perm& g) const {
    Perm r = Perm::identity(points_);
    for (int gi : group_.word_for(g)) r = r * gen_act_[(size_t)gi];
    return r;
}

int GSet::apply(const Perm& g, int point) const { return act(g).apply((uint16_t)point); }

std::vector<std::vector<int>> GSet::orbits() const {
    std::vector<int> orbit(points_, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < points_; ++s) {
        if (orbit[(size_t)s] >= 0) continue;
        int id = (int)out.size();
        out.push_back({});
        std::vector<int> queue{s};
        orbit[(size_t)s] = id;
        while (!queue.empty()) {
            int cur = queue.back();
            queue.pop_back();
            out[(size_t)id].push_back(cur);
            for (const auto& a : gen_act_) {
                int nxt = a.apply((uint16_t)cur);
                if (orbit[(size_t)nxt] < 0) {
                    orbit[(size_t)nxt] = id;
                    queue.push_back(nxt);
                }
            }
        }
        std::sort(out[(size_t)id].begin(), out[(size_t)id].end());
    }
    return out;
}

bool GSet::transitive() const { return orbits().size() == 1; }

PermGroup GSet::stabilizer(int point) const {
    std::vector<Perm> stab;
    for (const auto& g : group_.elements())
        if (apply(g, point) == point) stab.push_back(g);
    auto gens = small_generating_set(group_.degree(), stab);
    return PermGroup(group_.degree(), gens, group_.order_cap());
}

GSet GSet::disjoint_union(const GSet& other) const {
    require(group_.same_set(other.group_), ErrorKind::GroupMismatch,
            "disjoint union needs one acting group");
    int total = points_ + other.points_;
    std::vector<Perm> action;
    for (size_t gi = 0; gi < gen_act_.size(); ++gi) {
        std::vector<uint16_t> img((size_t)total);
        for (int i = 0; i < points_; ++i) img[(size_t)i] = gen_act_[gi].apply((uint16_t)i);
        for (int i = 0; i < other.points_; ++i)
            img[(size_t)(points_ + i)] =
                (uint16_t)(points_ + other.gen_act_[gi].apply((uint16_t)i));
        action.push_back(Perm(std::move(img)));
    }
    return GSet(group_, total, std::move(action));
}

GSet induce(const PermGroup& gamma, const PermGroup& G, const GSet& X) {
    require(G.is_subgroup_of(gamma), ErrorKind::NotSubgroup, "G must be a subgroup of gamma");
    require(X.group().same_set(G), ErrorKind::GroupMismatch, "X must be a G-set");
    const auto& elems = gamma.elements();
    // left cosets gamma G; reps are the least elements
    std::vector<int> coset(elems.size(), -1);
    std::vector<int> reps;
    std::vector<Perm> rep_perm;
    for (size_t i = 0; i < elems.size(); ++i) {
        if (coset[i] >= 0) continue;
        int id = (int)reps.size();
        reps.push_back((int)i);
        rep_perm.push_back(elems[i]);
        for (const auto& k : G.elements())
            coset[(size_t)gamma.element_index(elems[i] * k)] = id;
    }
    int t = (int)reps.size();
    int n = X.points();
    int total = t * n;
    // gamma * rep_i = rep_j * g with g in G
    std::vector<Perm> action;
    for (const auto& g : gamma.generators()) {
        std::vector<uint16_t> img((size_t)total);
        for (int i = 0; i < t; ++i) {
            Perm moved = g * rep_perm[(size_t)i];
            int j = coset[(size_t)gamma.element_index(moved)];
            Perm inside = rep_perm[(size_t)j].inverse() * moved;
            Perm xact = X.act(inside);
            for (int x = 0; x < n; ++x)
                img[(size_t)(i * n + x)] = (uint16_t)(j * n + xact.apply((uint16_t)x));
        }
        action.push_back(Perm(std::move(img)));
    }
    return GSet(gamma, total, std::move(action));
}

QuotientCover quotient_action(const GSet& W, const PermGroup& H) {
    const PermGroup& gamma = W.group();
    require(H.is_subgroup_of(gamma), ErrorKind::NotSubgroup, "H must be a subgroup of gamma");
    require(H.is_normal_in(gamma), ErrorKind::NotNormal, "H must be normal in gamma");
    // H-orbits of the points
    std::vector<int> orbit(W.points(), -1);
    int norb = 0;
    for (int s = 0; s < W.points(); ++s) {
        if (orbit[(size_t)s] >= 0) continue;
        int id = norb++;
        std::vector<int> queue{s};
        orbit[(size_t)s] = id;
        while (!queue.empty()) {
            int cur = queue.back();
            queue.pop_back();
            for (const auto& h : H.generators()) {
                int nxt = W.apply(h, cur);
                if (orbit[(size_t)nxt] < 0) {
                    orbit[(size_t)nxt] = id;
                    queue.push_back(nxt);
                }
            }
        }
    }
    auto q = grp::quotient_group(gamma, H);
    // the quotient group generators are aligned with gamma's generators
    std::vector<Perm> action;
    for (size_t gi = 0; gi < gamma.generators().size(); ++gi) {
        std::vector<uint16_t> img((size_t)norb, 0);
        std::vector<bool> set((size_t)norb, false);
        for (int pt = 0; pt < W.points(); ++pt) {
            int src = orbit[(size_t)pt];
            int dst = orbit[(size_t)W.apply(gamma.generators()[gi], pt)];
            if (!set[(size_t)src]) {
                img[(size_t)src] = (uint16_t)dst;
                set[(size_t)src] = true;
            } else {
                require(img[(size_t)src] == (uint16_t)dst, ErrorKind::NotNormal,
                        "quotient action is not well defined");
            }
        }
        action.push_back(Perm(std::move(img)));
    }
    // express the action through Q's own generator list
    GSet qset(q.group, norb, std::move(action));
    QuotientCover out{std::move(qset), q.projection, orbit};
    return out;
}

GSet pullback(const GSet& X_over_Q, const GroupHom& f) {
    require(f.codomain().same_set(X_over_Q.group()), ErrorKind::GroupMismatch,
            "hom codomain must act on X");
    std::vector<Perm> action;
    for (const auto& g : f.domain().generators()) action.push_back(X_over_Q.act(f(g)));
    return GSet(f.domain(), X_over_Q.points(), std::move(action));
}

namespace {

// canonical tag of the conjugacy class of a subgroup: the least sorted
// element list among its conjugates
std::vector<Perm> conjugacy_tag(const PermGroup& ambient, const PermGroup& sub) {
    std::vector<Perm> best = sub.elements();
    for (const auto& g : ambient.elements()) {
        std::vector<Perm> conj;
        conj.reserve(sub.order());
        for (const auto& s : sub.elements()) conj.push_back(s.conjugated_by(g));
        std::sort(conj.begin(), conj.end());
        if (conj < best) best = conj;
    }
    return best;
}

} // namespace

bool is_isomorphic_gsets(const GSet& X, const GSet& Y) {
    require(X.group().same_set(Y.group()), ErrorKind::GroupMismatch,
            "G-set comparison needs one acting group");
    if (X.points() != Y.points()) return false;
    auto ox = X.orbits(), oy = Y.orbits();
    if (ox.size() != oy.size()) return false;
    // multiset of (orbit size, stabilizer conjugacy class tag)
    using Tag = std::pair<size_t, std::vector<Perm>>;
    std::multiset<Tag> tx, ty;
    for (const auto& o : ox)
        tx.emplace(o.size(), conjugacy_tag(X.group(), X.stabilizer(o.front())));
    for (const auto& o : oy)
        ty.emplace(o.size(), conjugacy_tag(Y.group(), Y.stabilizer(o.front())));
    return tx == ty;
}

PatchComponents patch_components(const PatchDiagram& d) {
    require(d.G.is_subgroup_of(d.gamma) && d.H.is_subgroup_of(d.gamma), ErrorKind::NotSubgroup,
            "patch sides must sit inside gamma");
    require(d.x_cover.group().same_set(d.G) && d.y_cover.group().same_set(d.H),
            ErrorKind::GroupMismatch, "covers must be acted on by their own sides");
    require(d.x_cover.transitive() && d.y_cover.transitive(), ErrorKind::NotTransitive,
            "patching needs irreducible covers on both sides");
    // with both covers irreducible, the identity components of the induced
    // covers are stabilized exactly by G and H; the glued cover has
    // [gamma : <G, H>] components
    std::vector<Perm> gens = d.G.generators();
    for (const auto& h : d.H.generators()) gens.push_back(h);
    PermGroup J = grp::subgroup_generated(d.gamma.degree(), gens, d.gamma.order_cap());
    require(J.is_subgroup_of(d.gamma), ErrorKind::NotSubgroup, "sides generate outside gamma");
    PatchComponents out;
    out.generated = J;
    out.components = (int)(d.gamma.order() / J.order());
    return out;
}

} // namespace patch
} // namespace wittlab
