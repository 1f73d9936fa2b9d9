#include "wittlab/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "wittlab/fq.hpp"

namespace wittlab {
namespace grp {

// ---------------------------------------------------------------------------
// abelian types
// ---------------------------------------------------------------------------

AbelianType AbelianType::from_orders(std::vector<long> orders) {
    // split every order into prime powers, then rebuild the divisibility chain
    std::map<long, std::vector<long>> by_prime; // prime -> exponents (descending later)
    for (long d : orders) {
        require(d >= 1, ErrorKind::InvalidArgument, "cyclic order must be >= 1");
        long rest = d;
        for (long q = 2; q * q <= rest; ++q) {
            if (rest % q) continue;
            long pw = 1;
            while (rest % q == 0) {
                rest /= q;
                pw *= q;
            }
            by_prime[q].push_back(pw);
        }
        if (rest > 1) by_prime[rest].push_back(rest);
    }
    size_t chain_len = 0;
    for (auto& [q, pws] : by_prime) {
        std::sort(pws.begin(), pws.end(), std::greater<long>());
        chain_len = std::max(chain_len, pws.size());
    }
    std::vector<long> chain(chain_len, 1); // chain[0] is the largest factor
    for (auto& [q, pws] : by_prime)
        for (size_t i = 0; i < pws.size(); ++i) chain[i] *= pws[i];
    std::reverse(chain.begin(), chain.end()); // ascending divisibility
    AbelianType t;
    for (long d : chain)
        if (d > 1) t.factors.push_back(d);
    return t;
}

long AbelianType::order() const {
    long o = 1;
    for (long d : factors) o *= d;
    return o;
}

std::string AbelianType::to_string() const {
    if (factors.empty()) return "1";
    std::ostringstream os;
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) os << " x ";
        os << "Z/" << factors[i];
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// quasi-p part, commutators, abelianization
// ---------------------------------------------------------------------------

namespace {

bool is_p_power(long n, uint32_t p) {
    while (n % (long)p == 0) n /= (long)p;
    return n == 1;
}

} // namespace

PermGroup quasi_p_part(const PermGroup& G, uint32_t p) {
    require(is_prime_u32(p), ErrorKind::CompositeP, "p must be prime");
    std::vector<Perm> p_elements;
    for (const auto& e : G.elements())
        if (!e.is_identity() && is_p_power(e.order(), p)) p_elements.push_back(e);
    auto gens = small_generating_set(G.degree(), p_elements, G.order());
    return PermGroup(G.degree(), gens, G.order_cap());
}

PermGroup normal_closure(const PermGroup& G, const std::vector<Perm>& seeds) {
    std::vector<Perm> gens;
    for (const auto& s : seeds)
        if (!s.is_identity()) gens.push_back(s);
    PermGroup S = PermGroup(G.degree(), gens, G.order_cap());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<Perm> found;
        for (const auto& g : G.generators())
            for (const auto& h : gens) {
                Perm c = h.conjugated_by(g);
                if (!S.contains(c)) found.push_back(c);
            }
        for (const auto& c : found) {
            if (S.contains(c)) continue;
            gens.push_back(c);
            S = PermGroup(G.degree(), gens, G.order_cap());
            grew = true;
        }
    }
    return S;
}

PermGroup commutator_subgroup(const PermGroup& G) {
    std::vector<Perm> comms;
    const auto& gens = G.generators();
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = 0; j < gens.size(); ++j) {
            Perm c = gens[i].inverse() * gens[j].inverse() * gens[i] * gens[j];
            if (!c.is_identity()) comms.push_back(c);
        }
    return normal_closure(G, comms);
}

bool is_perfect(const PermGroup& G) { return commutator_subgroup(G).order() == G.order(); }

AbelianType abelian_invariants(const PermGroup& A) {
    require(A.is_abelian(), ErrorKind::InvalidArgument, "group is not abelian");
    std::vector<long> desc;
    PermGroup cur = A;
    while (cur.order() > 1) {
        // an element of maximal order spans a direct factor in a finite abelian group
        Perm best = cur.identity();
        long best_ord = 1;
        for (const auto& e : cur.elements()) {
            long o = e.order();
            if (o > best_ord) {
                best_ord = o;
                best = e;
            }
        }
        desc.push_back(best_ord);
        PermGroup cyc = subgroup_generated(cur.degree(), {best}, cur.order_cap());
        cur = quotient_group(cur, cyc).group;
    }
    return AbelianType::from_orders(desc);
}

AbelianType abelianization(const PermGroup& G) {
    PermGroup comm = commutator_subgroup(G);
    return abelian_invariants(quotient_group(G, comm).group);
}

// ---------------------------------------------------------------------------
// minimal normal subgroups
// ---------------------------------------------------------------------------

namespace {

// minimal normal subgroups as element sets (no decomposition): the minimal
// elements among the normal closures of single nontrivial elements
std::vector<PermGroup> minimal_normal_sets(const PermGroup& G) {
    const auto& elems = G.elements();
    auto classes = G.conjugacy_classes();
    std::vector<PermGroup> closures;
    std::set<std::vector<Perm>> seen;
    for (const auto& cls : classes) {
        const Perm& rep = elems[(size_t)cls.front()];
        if (rep.is_identity()) continue;
        PermGroup N = normal_closure(G, {rep});
        if (seen.insert(N.elements()).second) closures.push_back(N);
    }
    std::vector<PermGroup> minimal;
    for (const auto& N : closures) {
        bool is_min = true;
        for (const auto& M : closures) {
            if (M.order() >= N.order() || !M.is_subgroup_of(N)) continue;
            is_min = false;
            break;
        }
        if (is_min) minimal.push_back(N);
    }
    std::sort(minimal.begin(), minimal.end(), [](const PermGroup& a, const PermGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return minimal;
}

bool is_simple_group(const PermGroup& S) {
    if (S.order() == 1) return false;
    auto mns = minimal_normal_sets(S);
    return mns.size() == 1 && mns[0].order() == S.order();
}

} // namespace

std::vector<MinimalNormal> minimal_normal_subgroups(const PermGroup& G) {
    std::vector<MinimalNormal> out;
    for (const auto& H : minimal_normal_sets(G)) {
        MinimalNormal mn;
        mn.subgroup = H;
        if (H.is_abelian()) {
            // characteristically simple abelian: elementary abelian q-group
            long q = H.elements()[1].order(); // any nontrivial element
            long m = 0, o = (long)H.order();
            while (o > 1) {
                require(o % q == 0, ErrorKind::InvalidArgument,
                        "minimal normal subgroup is not characteristically simple");
                o /= q;
                ++m;
            }
            for (const auto& e : H.elements())
                require(e.is_identity() || e.order() == q, ErrorKind::InvalidArgument,
                        "minimal normal subgroup is not elementary abelian");
            mn.simple_order = q;
            mn.multiplicity = (int)m;
            mn.simple_abelian = true;
            mn.simple_perfect = false;
        } else {
            // S^m with S nonabelian simple: the factors are the minimal
            // normal subgroups of H itself
            auto factors = minimal_normal_sets(H);
            require(!factors.empty(), ErrorKind::InvalidArgument, "no factors found");
            long so = (long)factors[0].order();
            long total = 1;
            for (const auto& f : factors) {
                require((long)f.order() == so, ErrorKind::InvalidArgument,
                        "socle factors of unequal order");
                require(is_simple_group(f), ErrorKind::InvalidArgument,
                        "socle factor is not simple");
                total *= so;
            }
            require(total == (long)H.order(), ErrorKind::InvalidArgument,
                    "socle decomposition does not fill the subgroup");
            mn.simple_order = so;
            mn.multiplicity = (int)factors.size();
            mn.simple_abelian = false;
            mn.simple_perfect = is_perfect(factors[0]);
        }
        out.push_back(std::move(mn));
    }
    return out;
}

// ---------------------------------------------------------------------------
// minimal generator count
// ---------------------------------------------------------------------------

namespace {

struct MinGenSearch {
    const PermGroup& G;
    size_t target;
    long max_elem_order;
    bool abelian;
    std::vector<Perm> chosen;
    std::vector<Perm> found;

    // each new generator multiplies the span order by at least 2, and in an
    // abelian group by at most the maximal element order
    bool reachable(size_t span_order, int slots_left) const {
        double r = (double)span_order;
        double step = abelian ? (double)max_elem_order : (double)target;
        for (int s = 0; s < slots_left; ++s) {
            if (r >= (double)target) break;
            r *= step;
        }
        return r >= (double)target;
    }

    bool extend(const PermGroup& span, size_t next_start, int slots_left) {
        if (slots_left == 0) {
            if (span.order() == target) {
                found = chosen;
                return true;
            }
            return false;
        }
        if (!reachable(span.order(), slots_left)) return false;
        const auto& elems = G.elements();
        for (size_t i = next_start; i < elems.size(); ++i) {
            const Perm& cand = elems[i];
            if (cand.is_identity() || span.contains(cand)) continue;
            chosen.push_back(cand);
            PermGroup bigger(G.degree(), chosen, G.order_cap());
            if (extend(bigger, i + 1, slots_left - 1)) return true;
            chosen.pop_back();
        }
        return false;
    }
};

} // namespace

MinGenResult min_generators(const PermGroup& G, int cap_k) {
    require(cap_k >= 0, ErrorKind::InvalidArgument, "cap must be >= 0");
    if (G.order() == 1) return {0, {}};
    long max_ord = 1;
    for (const auto& e : G.elements()) max_ord = std::max(max_ord, e.order());
    bool abelian = G.is_abelian();
    const auto& elems = G.elements();
    auto classes = G.conjugacy_classes();
    for (int k = 1; k <= cap_k; ++k) {
        MinGenSearch search{G, G.order(), max_ord, abelian, {}, {}};
        if (!search.reachable(1, k)) continue;
        // first generator ranges over conjugacy class representatives only:
        // generating sets map to generating sets under conjugation
        for (const auto& cls : classes) {
            const Perm& rep = elems[(size_t)cls.front()];
            if (rep.is_identity()) continue;
            search.chosen = {rep};
            PermGroup span = subgroup_generated(G.degree(), {rep}, G.order_cap());
            if (search.extend(span, 0, k - 1)) return {k, search.found};
            search.chosen.clear();
        }
    }
    raise(ErrorKind::CapExceeded,
          "no generating set of size <= " + std::to_string(cap_k));
}

// ---------------------------------------------------------------------------
// Heisenberg groups
// ---------------------------------------------------------------------------

PermGroup heisenberg(uint32_t p, int m, size_t cap) {
    require(is_prime_u32(p), ErrorKind::CompositeP, "p must be prime");
    require(m >= 1, ErrorKind::InvalidArgument, "m must be >= 1");
    uint64_t pm = 1;
    for (int i = 0; i < m; ++i) pm *= p;
    uint64_t order = pm * pm * pm;
    require(order <= cap && order <= 65535, ErrorKind::CapExceeded,
            "Heisenberg group order exceeds cap");
    // elements (a,b,c) of the unitriangular group over Z/p^m, multiplication
    // (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a b'); generators are the two
    // elementary matrices, acting by right multiplication on the element set
    auto idx = [&](uint64_t a, uint64_t b, uint64_t c) { return a + pm * (b + pm * c); };
    auto right_mult = [&](uint64_t a2, uint64_t b2, uint64_t c2) {
        std::vector<uint16_t> img(order);
        for (uint64_t a = 0; a < pm; ++a)
            for (uint64_t b = 0; b < pm; ++b)
                for (uint64_t c = 0; c < pm; ++c)
                    img[idx(a, b, c)] =
                        (uint16_t)idx((a + a2) % pm, (b + b2) % pm, (c + c2 + a * b2) % pm);
        return Perm(std::move(img));
    };
    return PermGroup((int)order, {right_mult(1, 0, 0), right_mult(0, 1, 0)}, cap);
}

namespace {

PermGroup block_sum(const std::vector<PermGroup>& parts, size_t cap) {
    int degree = 0;
    uint64_t order = 1;
    for (const auto& g : parts) {
        degree += g.degree();
        order *= g.order();
        require(order <= cap, ErrorKind::CapExceeded, "direct product order exceeds cap");
    }
    std::vector<Perm> gens;
    int offset = 0;
    for (const auto& g : parts) {
        for (const auto& gen : g.generators()) {
            std::vector<uint16_t> img((size_t)degree);
            std::iota(img.begin(), img.end(), 0);
            for (int i = 0; i < g.degree(); ++i)
                img[(size_t)(offset + i)] = (uint16_t)(offset + gen.apply((uint16_t)i));
            gens.push_back(Perm(std::move(img)));
        }
        offset += g.degree();
    }
    return PermGroup(degree, gens, cap);
}

} // namespace

PermGroup heisenberg_product(uint32_t p, const AbelianType& A, size_t cap) {
    require(!A.factors.empty(), ErrorKind::InvalidArgument, "abelian type must be nontrivial");
    std::vector<PermGroup> parts;
    for (long d : A.factors) {
        int m = 0;
        long rest = d;
        while (rest % (long)p == 0) {
            rest /= (long)p;
            ++m;
        }
        require(rest == 1 && m >= 1, ErrorKind::InvalidArgument,
                "abelian type must consist of p-power orders");
        parts.push_back(heisenberg(p, m, cap));
    }
    return block_sum(parts, cap);
}

PermGroup direct_power(const PermGroup& H, int l, size_t cap) {
    require(l >= 1, ErrorKind::InvalidArgument, "power must be >= 1");
    std::vector<PermGroup> parts((size_t)l, H);
    return block_sum(parts, cap);
}

PermGroup direct_product(const PermGroup& A, const PermGroup& B, size_t cap) {
    return block_sum({A, B}, cap);
}

// ---------------------------------------------------------------------------
// semidirect products
// ---------------------------------------------------------------------------

namespace {

// automorphism of H stored as the images of H's generators
struct Auto {
    std::vector<Perm> gen_images;
};

Perm apply_auto(const PermGroup& H, const Auto& a, const Perm& h) {
    Perm img = H.identity();
    for (int gi : H.word_for(h)) img = img * a.gen_images[(size_t)gi];
    return img;
}

Auto compose_autos(const PermGroup& H, const Auto& first_applied_last,
                   const Auto& applied_first) {
    // (f o g): apply g, then f
    Auto r;
    for (const auto& img : applied_first.gen_images)
        r.gen_images.push_back(apply_auto(H, first_applied_last, img));
    return r;
}

} // namespace

Semidirect semidirect(const PermGroup& H, const PermGroup& G,
                      const std::vector<std::vector<Perm>>& action) {
    require(action.size() == G.generators().size(), ErrorKind::ActionNotHomomorphic,
            "one automorphism needed per generator of G");
    // validate each generator automorphism
    std::vector<Auto> gen_autos;
    for (const auto& images : action) {
        auto hom = GroupHom::try_from_generator_images(H, H, images);
        require(hom.has_value() && hom->is_surjective(), ErrorKind::ActionNotHomomorphic,
                "generator action is not an automorphism of H");
        gen_autos.push_back(Auto{images});
    }
    // extend to all of G along BFS words and verify phi(x*g) = phi(x) o phi(g)
    Auto id_auto{H.generators()};
    std::unordered_map<Perm, Auto, PermHash> phi;
    phi.emplace(G.identity(), id_auto);
    for (const auto& x : G.elements()) {
        if (phi.count(x)) continue;
        Auto a = id_auto;
        for (int gi : G.word_for(x)) a = compose_autos(H, a, gen_autos[(size_t)gi]);
        phi.emplace(x, std::move(a));
    }
    for (const auto& x : G.elements()) {
        const Auto& ax = phi.at(x);
        for (size_t gi = 0; gi < G.generators().size(); ++gi) {
            const Auto& lhs = phi.at(x * G.generators()[gi]);
            Auto rhs = compose_autos(H, ax, gen_autos[gi]);
            for (size_t t = 0; t < lhs.gen_images.size(); ++t)
                require(lhs.gen_images[t] == rhs.gen_images[t], ErrorKind::ActionNotHomomorphic,
                        "action does not respect products in G");
        }
    }

    uint64_t order = (uint64_t)H.order() * G.order();
    require(order <= H.order_cap() && order <= 65535, ErrorKind::OrderCapExceeded,
            "semidirect product order exceeds cap");
    size_t nh = H.order(), ng = G.order();
    auto pair_idx = [&](int hi, int gi) { return (size_t)hi * ng + (size_t)gi; };

    // left multiplication by (a, e): (h, g) -> (a h, g)
    std::vector<Perm> gens;
    std::vector<Perm> embed_h_images, embed_g_images;
    for (const auto& a : H.generators()) {
        std::vector<uint16_t> img(nh * ng);
        for (size_t hi = 0; hi < nh; ++hi) {
            int tgt = H.element_index(a * H.elements()[hi]);
            for (size_t gi = 0; gi < ng; ++gi)
                img[pair_idx((int)hi, (int)gi)] = (uint16_t)pair_idx(tgt, (int)gi);
        }
        gens.push_back(Perm(std::move(img)));
        embed_h_images.push_back(gens.back());
    }
    // left multiplication by (e, b): (h, g) -> (phi(b)(h), b g)
    for (size_t bi = 0; bi < G.generators().size(); ++bi) {
        const Perm& b = G.generators()[bi];
        std::vector<uint16_t> img(nh * ng);
        std::vector<int> hmap(nh);
        for (size_t hi = 0; hi < nh; ++hi)
            hmap[hi] = H.element_index(apply_auto(H, gen_autos[bi], H.elements()[hi]));
        for (size_t gi = 0; gi < ng; ++gi) {
            int tgt_g = G.element_index(b * G.elements()[gi]);
            for (size_t hi = 0; hi < nh; ++hi)
                img[pair_idx((int)hi, (int)gi)] = (uint16_t)pair_idx(hmap[hi], tgt_g);
        }
        gens.push_back(Perm(std::move(img)));
        embed_g_images.push_back(gens.back());
    }

    PermGroup product((int)(nh * ng), gens, H.order_cap());
    Semidirect sd{product,
                  GroupHom::from_generator_images(H, product, embed_h_images),
                  GroupHom::from_generator_images(G, product, embed_g_images),
                  GroupHom::from_generator_images(
                      product, G,
                      [&] {
                          std::vector<Perm> proj;
                          for (size_t i = 0; i < H.generators().size(); ++i)
                              proj.push_back(G.identity());
                          for (const auto& b : G.generators()) proj.push_back(b);
                          return proj;
                      }())};
    return sd;
}

Semidirect semidirect_conjugation(const PermGroup& H, const PermGroup& G) {
    require(H.degree() == G.degree(), ErrorKind::GroupMismatch,
            "conjugation action needs a common ambient group");
    std::vector<std::vector<Perm>> action;
    for (const auto& g : G.generators()) {
        std::vector<Perm> images;
        for (const auto& h : H.generators()) images.push_back(h.conjugated_by(g));
        action.push_back(std::move(images));
    }
    return semidirect(H, G, action);
}

// ---------------------------------------------------------------------------
// quotients
// ---------------------------------------------------------------------------

Quotient quotient_group(const PermGroup& G, const PermGroup& N) {
    require(N.is_subgroup_of(G), ErrorKind::NotSubgroup, "N is not a subgroup of G");
    require(N.is_normal_in(G), ErrorKind::NotNormal, "N is not normal in G");
    const auto& elems = G.elements();
    std::vector<int> coset(elems.size(), -1);
    std::vector<int> coset_rep; // element index of each coset representative
    for (size_t i = 0; i < elems.size(); ++i) {
        if (coset[i] >= 0) continue;
        int id = (int)coset_rep.size();
        coset_rep.push_back((int)i);
        for (const auto& n : N.elements()) {
            int j = G.element_index(elems[i] * n);
            coset[(size_t)j] = id;
        }
    }
    int ncosets = (int)coset_rep.size();
    std::vector<Perm> qgens;
    for (const auto& g : G.generators()) {
        std::vector<uint16_t> img((size_t)ncosets);
        for (int c = 0; c < ncosets; ++c) {
            int j = G.element_index(g * elems[(size_t)coset_rep[(size_t)c]]);
            img[(size_t)c] = (uint16_t)coset[(size_t)j];
        }
        qgens.push_back(Perm(std::move(img)));
    }
    PermGroup Q(std::max(1, ncosets), qgens, G.order_cap());
    GroupHom proj = GroupHom::from_generator_images(G, Q, qgens);
    return {Q, proj};
}

// ---------------------------------------------------------------------------
// subgroup lattices
// ---------------------------------------------------------------------------

std::vector<PermGroup> all_normal_subgroups(const PermGroup& G) {
    // every normal subgroup is a join of normal closures of single elements
    const auto& elems = G.elements();
    auto classes = G.conjugacy_classes();
    std::set<std::vector<Perm>> seen;
    std::vector<PermGroup> out;
    auto push = [&](const PermGroup& N) {
        if (seen.insert(N.elements()).second) {
            out.push_back(N);
            return true;
        }
        return false;
    };
    push(PermGroup::trivial(G.degree()));
    std::vector<PermGroup> atoms;
    for (const auto& cls : classes) {
        const Perm& rep = elems[(size_t)cls.front()];
        if (rep.is_identity()) continue;
        PermGroup N = normal_closure(G, {rep});
        if (push(N)) atoms.push_back(N);
    }
    // close under joins (the product of two normal subgroups is their join)
    for (size_t head = 0; head < out.size(); ++head) {
        for (const auto& a : atoms) {
            std::vector<Perm> gens = out[head].generators();
            for (const auto& g : a.generators()) gens.push_back(g);
            PermGroup join(G.degree(), gens, G.order_cap());
            push(join);
        }
    }
    std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return out;
}

std::vector<PermGroup> all_subgroups(const PermGroup& G) {
    std::set<std::vector<Perm>> seen;
    std::vector<PermGroup> out;
    auto push = [&](const PermGroup& N) {
        if (seen.insert(N.elements()).second) {
            out.push_back(N);
            return true;
        }
        return false;
    };
    push(PermGroup::trivial(G.degree()));
    std::vector<PermGroup> atoms;
    for (const auto& e : G.elements()) {
        if (e.is_identity()) continue;
        PermGroup C = subgroup_generated(G.degree(), {e}, G.order_cap());
        if (push(C)) atoms.push_back(C);
    }
    for (size_t head = 0; head < out.size(); ++head) {
        for (const auto& a : atoms) {
            std::vector<Perm> gens = out[head].generators();
            for (const auto& g : a.generators()) gens.push_back(g);
            PermGroup join(G.degree(), gens, G.order_cap());
            push(join);
        }
    }
    std::sort(out.begin(), out.end(), [](const PermGroup& a, const PermGroup& b) {
        if (a.order() != b.order()) return a.order() < b.order();
        return a.elements() < b.elements();
    });
    return out;
}

// ---------------------------------------------------------------------------
// isomorphism testing (desk scale)
// ---------------------------------------------------------------------------

namespace {

bool try_iso_assign(const PermGroup& A_regen, const PermGroup& B,
                    std::vector<Perm>& images, size_t pos,
                    const std::vector<std::vector<Perm>>& candidates) {
    if (pos == images.size()) {
        auto hom = GroupHom::try_from_generator_images(A_regen, B, images);
        return hom.has_value() && hom->image().order() == B.order();
    }
    for (const auto& cand : candidates[pos]) {
        images[pos] = cand;
        if (try_iso_assign(A_regen, B, images, pos + 1, candidates)) return true;
    }
    return false;
}

} // namespace

bool is_isomorphic(const PermGroup& A, const PermGroup& B) {
    if (A.order() != B.order()) return false;
    if (A.element_order_multiset() != B.element_order_multiset()) return false;
    bool aab = A.is_abelian(), bab = B.is_abelian();
    if (aab != bab) return false;
    if (aab) return abelian_invariants(A) == abelian_invariants(B);

    std::vector<Perm> agens = small_generating_set(A.degree(), A.elements());
    PermGroup A_regen = subgroup_generated(A.degree(), agens, A.order_cap());
    // class-size profile per element, for candidate pruning
    auto class_size_of = [](const PermGroup& G) {
        std::unordered_map<Perm, size_t, PermHash> sz;
        for (const auto& cls : G.conjugacy_classes())
            for (int i : cls) sz[G.elements()[(size_t)i]] = cls.size();
        return sz;
    };
    auto asz = class_size_of(A);
    auto bsz = class_size_of(B);
    std::vector<std::vector<Perm>> candidates;
    for (const auto& a : agens) {
        std::vector<Perm> c;
        for (const auto& b : B.elements())
            if (b.order() == a.order() && bsz[b] == asz[a]) c.push_back(b);
        if (c.empty()) return false;
        candidates.push_back(std::move(c));
    }
    std::vector<Perm> images(agens.size(), B.identity());
    return try_iso_assign(A_regen, B, images, 0, candidates);
}

} // namespace grp
} // namespace wittlab
