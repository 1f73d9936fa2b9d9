#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "wittlab/ring.hpp"
#include "wittlab/witt.hpp"

using namespace wittlab;
using namespace wittlab::witt;

namespace {

WittVector<FqElem> fp_vec(const FqPtr& F, std::initializer_list<long long> comps) {
    std::vector<FqElem> v;
    for (long long c : comps) v.push_back(F->from_int(c));
    return WittVector<FqElem>(std::move(v));
}

std::vector<uint32_t> comps_of(const WittVector<FqElem>& v) {
    std::vector<uint32_t> out;
    for (int i = 0; i < v.length(); ++i) out.push_back((uint32_t)v[i].index());
    return out;
}

} // namespace

TEST_CASE("structure polynomials: known closed forms as cross-checks") {
    SUBCASE("p=2, n=1: S_1 = X_1 + Y_1") {
        auto c = StructureCache::get(2, 1);
        ZMPoly expect = ZMPoly::variable(2, 0) + ZMPoly::variable(2, 1);
        CHECK(c->sum_z(0) == expect);
    }
    SUBCASE("p=2, n=2: S_2 = X_2 + Y_2 - X_1 Y_1 over the integers") {
        auto c = StructureCache::get(2, 2);
        ZMPoly expect = ZMPoly::variable(4, 1) + ZMPoly::variable(4, 3) -
                        ZMPoly::variable(4, 0) * ZMPoly::variable(4, 2);
        CHECK(c->sum_z(1) == expect);
        // verify the ghost identity by integer evaluation on all pairs in {0..3}^2
        for (long x1 = 0; x1 < 4; ++x1)
            for (long x2 = 0; x2 < 4; ++x2)
                for (long y1 = 0; y1 < 4; ++y1)
                    for (long y2 = 0; y2 < 4; ++y2) {
                        std::vector<BigInt> xs{x1, x2, y1, y2};
                        BigInt s1 = c->sum_z(0).eval(xs), s2 = c->sum_z(1).eval(xs);
                        // w_2(S) = S_1^2 + 2 S_2 must equal w_2(X) + w_2(Y)
                        CHECK(s1 * s1 + 2 * s2 ==
                              BigInt(x1 * x1 + 2 * x2 + y1 * y1 + 2 * y2));
                    }
    }
    SUBCASE("p=3, n=2: S_2 = X_2 + Y_2 - X_1^2 Y_1 - X_1 Y_1^2, all integral") {
        auto c = StructureCache::get(3, 2);
        ZMPoly x1 = ZMPoly::variable(4, 0), x2 = ZMPoly::variable(4, 1);
        ZMPoly y1 = ZMPoly::variable(4, 2), y2 = ZMPoly::variable(4, 3);
        CHECK(c->sum_z(1) == x2 + y2 - x1 * x1 * y1 - x1 * y1 * y1);
    }
    SUBCASE("negation: component-wise for odd p, genuinely solved for p=2") {
        auto c3 = StructureCache::get(3, 3);
        for (int i = 0; i < 3; ++i)
            CHECK(c3->neg_z(i) == ZMPoly::variable(3, i).scaled(BigInt(-1)));
        auto c2 = StructureCache::get(2, 2);
        // N_2 = -X_2 - X_1^2 over Z
        ZMPoly x1 = ZMPoly::variable(2, 0), x2 = ZMPoly::variable(2, 1);
        CHECK(c2->neg_z(1) == x2.scaled(BigInt(-1)) - x1 * x1);
    }
    SUBCASE("composite p is rejected") {
        CHECK_THROWS_AS(StructureCache::get(6, 2), Error);
    }
}

TEST_CASE("ghost identity holds for every structure polynomial, small (p,n)") {
    // w_i(S(X,Y)) = w_i(X) + w_i(Y) and likewise for products, by integer
    // evaluation on deterministic tuples
    std::mt19937 rng(42);
    std::uniform_int_distribution<long> pick(0, 8);
    for (uint32_t p : {2u, 3u, 5u}) {
        for (int n : {1, 2, 3}) {
            auto c = StructureCache::get(p, n);
            for (int trial = 0; trial < 40; ++trial) {
                std::vector<BigInt> xs(2 * (size_t)n);
                for (auto& v : xs) v = pick(rng);
                std::vector<BigInt> xonly(xs.begin(), xs.begin() + n);
                std::vector<BigInt> yonly(xs.begin() + n, xs.end());
                auto wx = oracle::ghost_forward(p, xonly);
                auto wy = oracle::ghost_forward(p, yonly);
                std::vector<BigInt> svals, mvals;
                for (int i = 0; i < n; ++i) {
                    svals.push_back(c->sum_z(i).eval(xs));
                    mvals.push_back(c->prod_z(i).eval(xs));
                }
                auto ws = oracle::ghost_forward(p, svals);
                auto wm = oracle::ghost_forward(p, mvals);
                for (int i = 0; i < n; ++i) {
                    CHECK(ws[(size_t)i] == wx[(size_t)i] + wy[(size_t)i]);
                    CHECK(wm[(size_t)i] == wx[(size_t)i] * wy[(size_t)i]);
                }
            }
        }
    }
}

TEST_CASE("ring identities and the Z/p^n model") {
    SUBCASE("u + 0 = u and u * 1 = u") {
        auto F = Fq::make(3, 1);
        auto u = fp_vec(F, {2, 1, 2});
        CHECK(witt_add(u, WittVector<FqElem>::zero(3, F->one())) == u);
        CHECK(witt_mul(u, WittVector<FqElem>::one(3, F->one())) == u);
    }
    SUBCASE("(1,0) + (1,0) = (0,1) in W_2(F_2), via the ghost oracle and Z/4") {
        auto F = Fq::make(2, 1);
        auto one = fp_vec(F, {1, 0});
        auto s = witt_add(one, one);
        CHECK(comps_of(s) == std::vector<uint32_t>{0, 1});
        CHECK(oracle::ghost_op(2, oracle::GhostOp::Add, {1, 0}, {1, 0}) ==
              std::vector<uint32_t>{0, 1});
    }
    SUBCASE("27-fold sum of (1,0,0) vanishes in W_3(F_3)") {
        auto F = Fq::make(3, 1);
        auto one = WittVector<FqElem>::one(3, F->one());
        auto acc = WittVector<FqElem>::zero(3, F->one());
        for (int i = 0; i < 27; ++i) {
            acc = witt_add(acc, one);
            if (i != 26) CHECK(!acc.is_zero());
        }
        CHECK(acc.is_zero());
    }
    SUBCASE("W_n(F_p) is Z/p^n: the additive orbit of 1 enumerates everything") {
        for (uint32_t p : {2u, 3u, 5u}) {
            for (int n : {1, 2, 3}) {
                auto F = Fq::make(p, 1);
                auto one = WittVector<FqElem>::one(n, F->one());
                std::vector<WittVector<FqElem>> orbit;
                auto acc = WittVector<FqElem>::zero(n, F->one());
                long pn = 1;
                for (int i = 0; i < n; ++i) pn *= (long)p;
                for (long k = 0; k < pn; ++k) {
                    orbit.push_back(acc);
                    acc = witt_add(acc, one);
                }
                CHECK(acc.is_zero()); // p^n * 1 = 0
                // all p^n elements distinct
                for (size_t i = 0; i < orbit.size(); ++i)
                    for (size_t j = i + 1; j < orbit.size(); ++j) CHECK(orbit[i] != orbit[j]);
                // addition matches index addition mod p^n
                std::mt19937 rng(7 + p + (uint32_t)n);
                std::uniform_int_distribution<long> pick(0, pn - 1);
                for (int trial = 0; trial < 50; ++trial) {
                    long a = pick(rng), b = pick(rng);
                    CHECK(witt_add(orbit[(size_t)a], orbit[(size_t)b]) ==
                          orbit[(size_t)((a + b) % pn)]);
                }
            }
        }
    }
}

TEST_CASE("ghost oracle equivalence, exhaustive over W_n(F_p) with lifts in {0..p^2-1}") {
    // every pair of vectors, with the integer lift of each component rotated
    // deterministically through the allowed lift set
    for (uint32_t p : {2u, 3u}) {
        for (int n : {1, 2, 3}) {
            auto F = Fq::make(p, 1);
            long pn = 1;
            for (int i = 0; i < n; ++i) pn *= (long)p;
            int lift_step = 0;
            for (long a = 0; a < pn; ++a) {
                for (long b = 0; b < pn; ++b) {
                    std::vector<BigInt> la((size_t)n), lb((size_t)n);
                    std::vector<FqElem> ca, cb;
                    long ta = a, tb = b;
                    for (int i = 0; i < n; ++i) {
                        long base_a = ta % (long)p, base_b = tb % (long)p;
                        ta /= (long)p;
                        tb /= (long)p;
                        // lift = residue + p * k with k cycling through 0..p-1
                        long ka = (lift_step++) % (long)p, kb = (lift_step++) % (long)p;
                        la[(size_t)i] = base_a + (long)p * ka;
                        lb[(size_t)i] = base_b + (long)p * kb;
                        ca.push_back(F->from_int(base_a));
                        cb.push_back(F->from_int(base_b));
                    }
                    WittVector<FqElem> u(ca), v(cb);
                    CHECK(comps_of(witt_add(u, v)) ==
                          oracle::ghost_op(p, oracle::GhostOp::Add, la, lb));
                    CHECK(comps_of(witt_mul(u, v)) ==
                          oracle::ghost_op(p, oracle::GhostOp::Mul, la, lb));
                    CHECK(comps_of(witt_neg(u)) ==
                          oracle::ghost_op(p, oracle::GhostOp::Neg, la, {}));
                }
            }
        }
    }
}

TEST_CASE("longer lengths: W_4(F_2) and W_5(F_2) are cyclic of the right order") {
    auto F = Fq::make(2, 1);
    for (int n : {4, 5}) {
        auto one = WittVector<FqElem>::one(n, F->one());
        auto acc = WittVector<FqElem>::zero(n, F->one());
        long pn = 1 << n;
        for (long k = 0; k < pn; ++k) {
            if (k) CHECK(!acc.is_zero());
            acc = witt_add(acc, one);
        }
        CHECK(acc.is_zero());
    }
}

TEST_CASE("Frobenius") {
    auto F4 = Fq::make(2, 2);
    SUBCASE("F(0) = 0 and F(1) = 1") {
        auto z = WittVector<FqElem>::zero(3, F4->one());
        auto o = WittVector<FqElem>::one(3, F4->one());
        CHECK(frobenius(z) == z);
        CHECK(frobenius(o) == o);
    }
    SUBCASE("F(x, 0) = (x^p, 0) over polynomial components") {
        auto F2 = Fq::make(2, 1);
        auto A = CoordinateRing::make(F2, Poly::constant(F2, F2->one()));
        asw::WV u({A->x(), A->zero()});
        auto fu = frobenius(u);
        CHECK(fu[0] == A->x_pow(2));
        CHECK(fu[1].is_zero());
    }
    SUBCASE("additivity on 1000 random pairs in W_3(F_4)") {
        std::mt19937 rng(99);
        std::uniform_int_distribution<uint64_t> pick(0, 3);
        for (int trial = 0; trial < 1000; ++trial) {
            std::vector<FqElem> a, b;
            for (int i = 0; i < 3; ++i) {
                a.push_back(F4->element(pick(rng)));
                b.push_back(F4->element(pick(rng)));
            }
            WittVector<FqElem> u(a), v(b);
            CHECK(frobenius(witt_add(u, v)) == witt_add(frobenius(u), frobenius(v)));
        }
    }
    SUBCASE("F = p-th power mod the V-image, exhaustively on W_2(F_2), W_2(F_3)") {
        // F(u) and the Witt-ring power u^p differ by a vector with first
        // component zero, i.e. an element of V(W_1)
        for (uint32_t p : {2u, 3u}) {
            auto F = Fq::make(p, 1);
            for (uint64_t i = 0; i < p * p; ++i) {
                std::vector<FqElem> comps{F->element(i % p), F->element(i / p)};
                WittVector<FqElem> u(comps);
                auto upow = u;
                for (uint32_t k = 1; k < p; ++k) upow = witt_mul(upow, u);
                auto diff = witt_sub(frobenius(u), upow);
                CHECK(diff[0].is_zero());
                // and on W_1 they agree on the nose
                WittVector<FqElem> u1({F->element(i % p)});
                auto u1pow = u1;
                for (uint32_t k = 1; k < p; ++k) u1pow = witt_mul(u1pow, u1);
                CHECK(frobenius(u1) == u1pow);
            }
        }
    }
}

TEST_CASE("Verschiebung") {
    auto F4 = Fq::make(2, 2);
    SUBCASE("V(a) = (0, a) and V(0) = 0") {
        for (uint64_t i = 0; i < 4; ++i) {
            WittVector<FqElem> u({F4->element(i)});
            auto v = verschiebung(u);
            CHECK(v.length() == 2);
            CHECK(v[0].is_zero());
            CHECK(v[1] == F4->element(i));
        }
        CHECK(verschiebung(WittVector<FqElem>::zero(2, F4->one())).is_zero());
    }
    SUBCASE("additivity, exhaustively W_1(F_4) -> W_2(F_4)") {
        for (uint64_t i = 0; i < 4; ++i)
            for (uint64_t j = 0; j < 4; ++j) {
                WittVector<FqElem> u({F4->element(i)}), v({F4->element(j)});
                CHECK(verschiebung(witt_add(u, v)) ==
                      witt_add(verschiebung(u), verschiebung(v)));
            }
    }
    SUBCASE("F o V = V o F on W_2(F_4) components") {
        for (uint64_t i = 0; i < 4; ++i)
            for (uint64_t j = 0; j < 4; ++j) {
                WittVector<FqElem> u({F4->element(i), F4->element(j)});
                CHECK(frobenius(verschiebung(u)) == verschiebung(frobenius(u)));
            }
    }
}

TEST_CASE("the operator P = F - Id") {
    SUBCASE("P(0) = 0") {
        auto F = Fq::make(5, 1);
        CHECK(p_map(WittVector<FqElem>::zero(2, F->one())).is_zero());
    }
    SUBCASE("length 1 over F_p[x]: P(x) = x^p - x") {
        for (uint32_t p : {2u, 3u, 5u}) {
            auto F = Fq::make(p, 1);
            auto A = CoordinateRing::make(F, Poly::constant(F, F->one()));
            asw::WV u({A->x()});
            CHECK(p_map(u)[0] == A->x_pow((int)p) - A->x());
        }
    }
    SUBCASE("P additive, exhaustively on W_2(F_2): 16 pairs") {
        auto F = Fq::make(2, 1);
        for (uint64_t a = 0; a < 4; ++a)
            for (uint64_t b = 0; b < 4; ++b) {
                WittVector<FqElem> u({F->element(a % 2), F->element(a / 2)});
                WittVector<FqElem> v({F->element(b % 2), F->element(b / 2)});
                CHECK(p_map(witt_add(u, v)) == witt_add(p_map(u), p_map(v)));
            }
    }
    SUBCASE("P o V = V o P, exhaustively W_1(F_4) -> W_2(F_4)") {
        auto F4 = Fq::make(2, 2);
        for (uint64_t i = 0; i < 4; ++i) {
            WittVector<FqElem> u({F4->element(i)});
            CHECK(p_map(verschiebung(u)) == verschiebung(p_map(u)));
        }
    }
}

TEST_CASE("errors: length and ring mismatches") {
    auto F = Fq::make(2, 1);
    auto u = fp_vec(F, {1, 0});
    auto v = fp_vec(F, {1});
    CHECK_THROWS_AS(witt_add(u, v), Error);
    auto F9 = Fq::make(3, 2);
    WittVector<FqElem> w({F9->one(), F9->zero()});
    try {
        witt_add(u, w);
        CHECK(false);
    } catch (const Error& e) {
        // characteristic differs, caught as a ring mismatch before evaluation
        CHECK((e.kind() == ErrorKind::RingMismatch || e.kind() == ErrorKind::FieldMismatch));
    }
}
