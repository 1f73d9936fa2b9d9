#ifndef WITTLAB_TESTS_CORPUS_HPP
#define WITTLAB_TESTS_CORPUS_HPP

// Named finite groups for the test corpus, all as permutation groups.

#include <functional>
#include <string>
#include <vector>

#include "wittlab/groups.hpp"

namespace corpus {

using wittlab::grp::Perm;
using wittlab::grp::PermGroup;

inline PermGroup cyclic(int n) {
    if (n <= 1) return PermGroup::trivial(1);
    std::vector<uint16_t> cyc((size_t)n);
    for (int i = 0; i < n; ++i) cyc[(size_t)i] = (uint16_t)((i + 1) % n);
    return PermGroup(n, {Perm(cyc)});
}

inline PermGroup sym(int n) {
    if (n <= 1) return PermGroup::trivial(1);
    std::vector<uint16_t> cyc((size_t)n), tr((size_t)n);
    for (int i = 0; i < n; ++i) {
        cyc[(size_t)i] = (uint16_t)((i + 1) % n);
        tr[(size_t)i] = (uint16_t)i;
    }
    std::swap(tr[0], tr[1]);
    if (n == 2) return PermGroup(n, {Perm(tr)});
    return PermGroup(n, {Perm(cyc), Perm(tr)});
}

inline PermGroup alt(int n) {
    if (n <= 2) return PermGroup::trivial(std::max(1, n));
    std::vector<Perm> gens;
    for (int k = 2; k < n; ++k) {
        std::vector<uint16_t> v((size_t)n);
        for (int i = 0; i < n; ++i) v[(size_t)i] = (uint16_t)i;
        v[0] = 1;
        v[1] = (uint16_t)k;
        v[(size_t)k] = 0;
        gens.push_back(Perm(v));
    }
    return PermGroup(n, gens);
}

inline PermGroup dihedral(int n) {
    // symmetries of the n-gon, order 2n, n >= 3
    std::vector<uint16_t> rot((size_t)n), refl((size_t)n);
    for (int i = 0; i < n; ++i) {
        rot[(size_t)i] = (uint16_t)((i + 1) % n);
        refl[(size_t)i] = (uint16_t)((n - i) % n);
    }
    return PermGroup(n, {Perm(rot), Perm(refl)});
}

// regular representation of a group given by a multiplication function on
// indices 0..order-1 with identity 0
inline PermGroup from_mult_table(int order, const std::function<int(int, int)>& mul) {
    std::vector<Perm> gens;
    for (int g = 1; g < order; ++g) {
        std::vector<uint16_t> img((size_t)order);
        for (int x = 0; x < order; ++x) img[(size_t)x] = (uint16_t)mul(g, x);
        gens.push_back(Perm(img));
    }
    auto small = wittlab::grp::small_generating_set(order, PermGroup(order, gens).elements());
    return PermGroup(order, small);
}

inline PermGroup quaternion8() {
    // elements 2u + s: units 1,i,j,k with sign s
    // unit multiplication with signs
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{+1, +1, +1, +1},
                                   {+1, -1, +1, -1},
                                   {+1, -1, -1, +1},
                                   {+1, +1, -1, -1}};
    auto mul = [&](int a, int b) {
        int ua = a >> 1, sa = a & 1, ub = b >> 1, sb = b & 1;
        int u = unit[ua][ub];
        int s = (sa ^ sb) ^ (sign[ua][ub] < 0 ? 1 : 0);
        return (u << 1) | s;
    };
    return from_mult_table(8, mul);
}

inline PermGroup sl23() {
    // SL(2,3) on the 8 nonzero vectors of F_3^2
    std::vector<std::pair<int, int>> pts;
    for (int x = 0; x < 3; ++x)
        for (int y = 0; y < 3; ++y)
            if (x || y) pts.emplace_back(x, y);
    auto idx = [&](int x, int y) {
        for (size_t i = 0; i < pts.size(); ++i)
            if (pts[i] == std::make_pair(x, y)) return (int)i;
        return -1;
    };
    auto mat_perm = [&](int a, int b, int c, int d) {
        std::vector<uint16_t> img(8);
        for (size_t i = 0; i < pts.size(); ++i) {
            int x = pts[i].first, y = pts[i].second;
            img[i] = (uint16_t)idx(((a * x + b * y) % 3 + 3) % 3, ((c * x + d * y) % 3 + 3) % 3);
        }
        return Perm(img);
    };
    return PermGroup(8, {mat_perm(1, 1, 0, 1), mat_perm(0, -1, 1, 0)});
}

inline PermGroup frobenius20() {
    // Z/5 x| Z/4 on 5 points
    std::vector<uint16_t> five{1, 2, 3, 4, 0};
    std::vector<uint16_t> four{0, 2, 4, 1, 3}; // x -> 2x mod 5
    return PermGroup(5, {Perm(five), Perm(four)});
}

inline PermGroup abelian(const std::vector<int>& orders) {
    PermGroup acc = PermGroup::trivial(1);
    bool first = true;
    for (int n : orders) {
        PermGroup c = cyclic(n);
        acc = first ? c : wittlab::grp::direct_product(acc, c);
        first = false;
    }
    return acc;
}

struct Named {
    std::string name;
    PermGroup group;
};

// groups of order <= 200 exercising all three kernel cases and a spread of
// normal structure
inline std::vector<Named> order200_corpus() {
    std::vector<Named> out;
    out.push_back({"Z1", PermGroup::trivial(1)});
    for (int n : {2, 3, 4, 5, 6, 8, 9, 12, 27}) out.push_back({"Z" + std::to_string(n), cyclic(n)});
    out.push_back({"V4", abelian({2, 2})});
    out.push_back({"Z2xZ4", abelian({2, 4})});
    out.push_back({"E8", abelian({2, 2, 2})});
    out.push_back({"E9", abelian({3, 3})});
    out.push_back({"Z6xZ2", abelian({6, 2})});
    for (int n : {3, 4, 5, 6, 7}) out.push_back({"D" + std::to_string(n), dihedral(n)});
    out.push_back({"S3", sym(3)});
    out.push_back({"S4", sym(4)});
    out.push_back({"S5", sym(5)});
    out.push_back({"A4", alt(4)});
    out.push_back({"A5", alt(5)});
    out.push_back({"Q8", quaternion8()});
    out.push_back({"SL23", sl23()});
    out.push_back({"F20", frobenius20()});
    out.push_back({"Heis3", wittlab::grp::heisenberg(3, 1)});
    out.push_back({"S3xZ4", wittlab::grp::direct_product(sym(3), cyclic(4))});
    out.push_back({"A4xZ2", wittlab::grp::direct_product(alt(4), cyclic(2))});
    out.push_back({"A5xZ2", wittlab::grp::direct_product(alt(5), cyclic(2))});
    out.push_back({"S3xS3", wittlab::grp::direct_product(sym(3), sym(3))});
    out.push_back({"E27", abelian({3, 3, 3})});
    out.push_back({"A4xS3", wittlab::grp::direct_product(alt(4), sym(3))});
    out.push_back({"F20xZ4", wittlab::grp::direct_product(frobenius20(), cyclic(4))});
    out.push_back({"SL23xZ2", wittlab::grp::direct_product(sl23(), cyclic(2))});
    return out;
}

// groups of order <= 100 whose full subgroup lattice stays desk-sized
inline std::vector<Named> order100_corpus() {
    std::vector<Named> out;
    for (int n : {1, 2, 3, 4, 6, 8, 12}) out.push_back({"Z" + std::to_string(n), cyclic(n)});
    out.push_back({"V4", abelian({2, 2})});
    out.push_back({"E8", abelian({2, 2, 2})});
    out.push_back({"Z2xZ4", abelian({2, 4})});
    for (int n : {3, 4, 5, 6}) out.push_back({"D" + std::to_string(n), dihedral(n)});
    out.push_back({"S4", sym(4)});
    out.push_back({"A4", alt(4)});
    out.push_back({"A5", alt(5)});
    out.push_back({"Q8", quaternion8()});
    out.push_back({"SL23", sl23()});
    out.push_back({"F20", frobenius20()});
    out.push_back({"Heis3", wittlab::grp::heisenberg(3, 1)});
    out.push_back({"S3xZ3", wittlab::grp::direct_product(sym(3), cyclic(3))});
    out.push_back({"E27", abelian({3, 3, 3})});
    out.push_back({"F20xZ4", wittlab::grp::direct_product(frobenius20(), cyclic(4))});
    return out;
}

} // namespace corpus

#endif
