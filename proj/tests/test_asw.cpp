#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "wittlab/asw.hpp"

using namespace wittlab;
using namespace wittlab::asw;

namespace {

RingPtr affine_line(uint32_t p, uint32_t m = 1, Mode mode = Mode::Geometric) {
    auto F = Fq::make(p, m);
    return CoordinateRing::make(F, Poly::constant(F, F->one()), mode);
}

RingPtr g_m(uint32_t p, Mode mode = Mode::Geometric) {
    auto F = Fq::make(p, 1);
    return CoordinateRing::make(F, Poly::x(F), mode);
}

RingElem random_window_elem(const RingPtr& ring, std::mt19937& rng, int d) {
    auto field = ring->field();
    std::uniform_int_distribution<uint64_t> coef(0, field->q() - 1);
    RingElem acc = ring->from_constant(field->element(coef(rng)));
    for (int j = 1; j <= d; ++j)
        acc = acc + ring->x_pow(j) * ring->from_constant(field->element(coef(rng)));
    for (size_t i = 0; i < ring->roots().size(); ++i)
        for (int j = 1; j <= d; ++j)
            acc = acc + ring->inv_linear_pow(i, j) * ring->from_constant(field->element(coef(rng)));
    return acc;
}

WV random_window_vector(const RingPtr& ring, std::mt19937& rng, int n, int d) {
    std::vector<RingElem> comps;
    for (int i = 0; i < n; ++i) comps.push_back(random_window_elem(ring, rng, d));
    return WV(std::move(comps));
}

bool component_reduced(const RingPtr& ring, const RingElem& a) {
    PartialFraction pf = PartialFraction::from(a);
    uint32_t p = ring->field()->p();
    for (const auto& [j, c] : pf.poly)
        if (j % (int)p == 0) return false;
    for (const auto& pm : pf.poles)
        for (const auto& [j, c] : pm)
            if (j % (int)p == 0) return false;
    if (ring->mode() == Mode::Geometric && !pf.constant.is_zero()) return false;
    return true;
}

} // namespace

TEST_CASE("reduce_representative worked examples") {
    SUBCASE("n=1, p=2, A=F_2[x]: x^2 reduces to x") {
        auto A = affine_line(2);
        WV w({A->x_pow(2)});
        CHECK(reduce_representative(w, A, Window{4})[0] == A->x());
    }
    SUBCASE("n=1, p=3, A=F_3[x,1/x]: x^-3 reduces to x^-1") {
        auto A = g_m(3);
        WV w({A->inv_linear_pow(0, 3)});
        CHECK(reduce_representative(w, A, Window{4})[0] == A->inv_linear_pow(0, 1));
    }
    SUBCASE("P-images reduce to zero (geometric, A=F_2[x], n <= 2)") {
        auto A = affine_line(2);
        std::mt19937 rng(5);
        for (int n : {1, 2}) {
            for (int trial = 0; trial < 50; ++trial) {
                WV v = random_window_vector(A, rng, n, 2);
                WV z = reduce_representative(witt::p_map(v), A, Window{4});
                CHECK(z.is_zero());
            }
        }
    }
}

TEST_CASE("reduce is idempotent and produces reduced components") {
    std::mt19937 rng(17);
    for (auto ring : {affine_line(2), affine_line(3), g_m(3), affine_line(2, 2)}) {
        for (int n : {1, 2}) {
            for (int trial = 0; trial < 60; ++trial) {
                WV w = random_window_vector(ring, rng, n, 3);
                WV r = reduce_representative(w, ring, Window{3});
                for (int i = 0; i < n; ++i) CHECK(component_reduced(ring, r[i]));
                CHECK(reduce_representative(r, ring, Window{3}) == r);
            }
        }
    }
}

TEST_CASE("reduce(w + P(v)) = reduce(w), 1000 random pairs per configuration") {
    struct Config {
        RingPtr ring;
        int n, d;
    };
    std::vector<Config> configs{{affine_line(2), 1, 4}, {affine_line(2), 2, 4},
                                {affine_line(3), 1, 6}, {affine_line(3), 2, 3},
                                {g_m(2), 1, 4},         {affine_line(2, 2), 1, 3}};
    for (const auto& cfg : configs) {
        std::mt19937 rng(1000 + cfg.n + cfg.d);
        for (int trial = 0; trial < 1000; ++trial) {
            WV w = random_window_vector(cfg.ring, rng, cfg.n, cfg.d);
            WV v = random_window_vector(cfg.ring, rng, cfg.n,
                                        cfg.d / (int)cfg.ring->field()->p());
            WV sum = witt::witt_add(w, witt::p_map(v));
            CHECK(reduce_representative(sum, cfg.ring, Window{cfg.d}) ==
                  reduce_representative(w, cfg.ring, Window{cfg.d}));
        }
    }
}

TEST_CASE("reduced-form uniqueness against the level-1 linear oracle") {
    // inequivalence of distinct reduced vectors = the class count equals the
    // count of reduced window vectors; rank comparison does it
    for (auto [pp, d] : {std::pair<uint32_t, int>{2, 6}, {3, 6}}) {
        auto ring = affine_line(pp);
        oracle::Level1Oracle lin(ring, d);
        auto cs = cokernel_basis(ring, 1, Window{d});
        CHECK((int)cs.exponents.size() == lin.quotient_rank);
        for (int e : cs.exponents) CHECK(e == 1);
    }
    // same check on the doubly punctured line at p=3
    auto ring = g_m(3);
    oracle::Level1Oracle lin(ring, 4);
    auto cs = cokernel_basis(ring, 1, Window{4});
    CHECK((int)cs.exponents.size() == lin.quotient_rank);
}

TEST_CASE("cokernel examples") {
    SUBCASE("A=F_2[x], geometric, n=1, d=4: (Z/2)^2 with generators x, x^3") {
        auto cs = cokernel_basis(affine_line(2), 1, Window{4});
        CHECK(cs.exponents == std::vector<int>{1, 1});
        CHECK(cs.generator_names == std::vector<std::string>{"x", "x^3"});
        // brute-force F_2 linear algebra agrees
        oracle::Level1Oracle lin(affine_line(2), 4);
        CHECK(lin.quotient_rank == 2);
    }
    SUBCASE("A=F_p[x], geometric, n=1: rank d - floor(d/p) for p in {2,3,5}, d <= 12") {
        for (uint32_t p : {2u, 3u, 5u}) {
            auto ring = affine_line(p);
            for (int d = 1; d <= 12; ++d) {
                auto cs = cokernel_basis(ring, 1, Window{d});
                int expect = d - d / (int)p;
                CHECK((int)cs.exponents.size() == expect);
                oracle::Level1Oracle lin(ring, d);
                CHECK(lin.quotient_rank == expect);
                // generators are exactly the x^j with p not dividing j
                int k = 0;
                for (int j = 1; j <= d; ++j) {
                    if (j % (int)p == 0) continue;
                    std::string expect_name = j == 1 ? "x" : "x^" + std::to_string(j);
                    CHECK(cs.generator_names[(size_t)k++] == expect_name);
                }
            }
        }
    }
    SUBCASE("A=F_2[x], arithmetic, n=1, d=2: (Z/2)^2 with the constant surviving") {
        auto ring = affine_line(2, 1, Mode::Arithmetic);
        auto cs = cokernel_basis(ring, 1, Window{2});
        CHECK(cs.exponents == std::vector<int>{1, 1});
        // one generator is the constant 1, one is x
        bool has_const = false, has_x = false;
        for (const auto& nm : cs.generator_names) {
            if (nm == "1") has_const = true;
            if (nm == "x") has_x = true;
        }
        CHECK(has_const);
        CHECK(has_x);
        // oracle: dimension 3 window (1, x, x^2), image spanned by P(1)=0, P(x)=x^2+x
        oracle::Level1Oracle lin(ring, 2);
        CHECK(lin.quotient_rank == 2);
    }
}

TEST_CASE("level-2 cokernel structure against the brute-force oracle") {
    SUBCASE("A=F_p[x], geometric, n=2, p in {2,3}, d <= 4") {
        for (uint32_t p : {2u, 3u}) {
            auto ring = affine_line(p);
            for (int d = 1; d <= 4; ++d) {
                CAPTURE(p);
                CAPTURE(d);
                auto cs = cokernel_basis(ring, 2, Window{d});
                oracle::Level2Oracle level2(ring, d);
                CHECK(cs.exponents == level2.structure());
            }
        }
    }
    SUBCASE("punctured line and extension field, small windows") {
        {
            auto ring = g_m(2);
            auto cs = cokernel_basis(ring, 2, Window{2});
            oracle::Level2Oracle level2(ring, 2);
            CHECK(cs.exponents == level2.structure());
        }
        {
            auto ring = affine_line(2, 2);
            auto cs = cokernel_basis(ring, 2, Window{2});
            oracle::Level2Oracle level2(ring, 2);
            CHECK(cs.exponents == level2.structure());
        }
        {
            auto ring = affine_line(2, 1, Mode::Arithmetic);
            auto cs = cokernel_basis(ring, 2, Window{2});
            oracle::Level2Oracle level2(ring, 2);
            CHECK(cs.exponents == level2.structure());
        }
        {
            // two finite punctures: h = x(x-1) over F_2
            auto F = Fq::make(2, 1);
            Poly x = Poly::x(F);
            auto ring = CoordinateRing::make(
                F, x * (x - Poly::constant(F, F->one())), Mode::Geometric);
            auto cs = cokernel_basis(ring, 2, Window{2});
            oracle::Level2Oracle level2(ring, 2);
            CHECK(cs.exponents == level2.structure());
        }
    }
    SUBCASE("arithmetic mode over the extension field F_4, level 1") {
        auto ring = affine_line(2, 2, Mode::Arithmetic);
        auto cs = cokernel_basis(ring, 1, Window{2});
        oracle::Level1Oracle lin(ring, 2);
        CHECK((int)cs.exponents.size() == lin.quotient_rank);
        // window monomial x (2 basis coefficients) + the constants summand:
        // P is index-2 on the F_4 constants, contributing one Z/2
        CHECK(lin.quotient_rank == 3);
    }
}

TEST_CASE("truncation monotonicity: windows embed") {
    auto ring = affine_line(3);
    auto small = cokernel_basis(ring, 2, Window{2});
    auto large = cokernel_basis(ring, 2, Window{4});
    // every generator of the small window appears among the large window's
    CHECK(small.exponents.size() <= large.exponents.size());
    for (const auto& nm : small.generator_names)
        CHECK(std::find(large.generator_names.begin(), large.generator_names.end(), nm) !=
              large.generator_names.end());
    // and the small-window generators remain independent at the large window:
    // the class count grows exactly by the new generators
    BigInt expect = 1;
    for (int e : large.exponents) expect *= big_pow(BigInt(3), (unsigned long)e);
    CHECK(large.order() == expect);
}

TEST_CASE("arithmetic mode has exactly one extra Z/p^n summand for A = F_q[x]") {
    for (uint32_t p : {2u, 3u}) {
        for (int n : {1, 2}) {
            auto geo = cokernel_basis(affine_line(p), n, Window{3});
            auto ari = cokernel_basis(affine_line(p, 1, Mode::Arithmetic), n, Window{3});
            CHECK(ari.exponents.size() == geo.exponents.size() + 1);
            // the extra summand is a full Z/p^n
            std::multiset<int> g(geo.exponents.begin(), geo.exponents.end());
            std::multiset<int> a(ari.exponents.begin(), ari.exponents.end());
            g.insert(n);
            CHECK(g == a);
        }
    }
}

TEST_CASE("verschiebung embedding check") {
    SUBCASE("n=1, A=F_2[x], d=3: V(x) = (0,x) reduced and nonzero at level 2") {
        auto ring = affine_line(2);
        auto rep = verschiebung_embedding_check(ring, 1, Window{3});
        CHECK(rep.descent_violations.empty());
        CHECK(rep.injective_on_generators);
        for (const auto& im : rep.generator_images) CHECK(im.nonzero);
        // explicit: V([x]) reduces to itself, and the independent level-2
        // oracle also sees a nonzero class
        WV vx = witt::verschiebung(WV({ring->x()}));
        CHECK(reduce_representative(vx, ring, Window{3}) == vx);
        oracle::Level2Oracle level2(ring, 3);
        CHECK(!level2.is_zero_class(vx));
        CHECK(level2.is_zero_class(WV::zero(2, ring->zero())));
    }
    SUBCASE("V(0) = 0") {
        auto ring = affine_line(3);
        WV z = WV::zero(1, ring->zero());
        CHECK(witt::verschiebung(z).is_zero());
    }
    SUBCASE("level-1 generators map to independent level-2 classes, A=F_3[x], d=4") {
        auto rep = verschiebung_embedding_check(affine_line(3), 1, Window{4});
        CHECK(rep.descent_violations.empty());
        CHECK(rep.injective_on_generators);
        CHECK(rep.generator_images.size() == 3); // x, x^2, x^4
    }
}

TEST_CASE("cover counts") {
    SUBCASE("A=F_2[x], geometric, n=1, d=1: total 2, surjective 1") {
        auto cc = count_cyclic_covers(affine_line(2), 1, Window{1});
        CHECK(cc.total == 2);
        CHECK(cc.surjective == 1);
    }
    SUBCASE("degenerate constants-only window: total 1, surjective 0") {
        auto cc = count_cyclic_covers(affine_line(2), 1, Window{0});
        CHECK(cc.total == 1);
        CHECK(cc.surjective == 0);
    }
    SUBCASE("A=F_3[x], geometric, n=2, d=1: total 9, surjective 6") {
        auto cc = count_cyclic_covers(affine_line(3), 2, Window{1});
        CHECK(cc.total == 9);
        CHECK(cc.surjective == 6);
        // the lone generator (x, 0) has order 9
        auto cs = cokernel_basis(affine_line(3), 2, Window{1});
        CHECK(cs.exponents == std::vector<int>{2});
    }
}

TEST_CASE("abelianization report") {
    SUBCASE("affine line: rank 0; and the 2g + r - 1 formula") {
        auto rep = abelianization_report(0, affine_line(5), 1, Window{2});
        CHECK(rep.prime_to_p_rank == 0);
        CHECK(rep.punctures == 1);
        auto rep2 = abelianization_report(1, g_m(5), 1, Window{2});
        CHECK(rep2.punctures == 2);
        CHECK(rep2.prime_to_p_rank == 3);
    }
    SUBCASE("G_m: rank 1 with p-part from F_q[x, 1/x]") {
        auto rep = abelianization_report(0, g_m(3), 2, Window{2});
        CHECK(rep.prime_to_p_rank == 1);
        CHECK(rep.p_part.size() == 2);
        // levels 1 and 2 present with the pole generators included
        CHECK(rep.p_part[0].n == 1);
        CHECK(rep.p_part[1].n == 2);
        CHECK(rep.p_part[0].exponents.size() == 4); // x, x^2, x^-1, x^-2 at p=3, d=2
    }
}

TEST_CASE("window bound violations abort loudly") {
    auto ring = affine_line(2);
    // a degree-40 component cannot sit in the working window for n=1, d=4
    WV w({ring->x_pow(40)});
    CHECK_THROWS_AS(reduce_representative(w, ring, Window{4}), Error);
    try {
        reduce_representative(w, ring, Window{4});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotInWindow);
    }
}

TEST_CASE("modulus choice does not change cokernel shape (open-question probe)") {
    // same field F_4 under two different irreducible moduli
    auto F4a = Fq::make(2, 2);
    auto F4b = Fq::make_with_modulus(2, 2, {1, 1}); // only one irreducible exists for m=2
    // for F_16 there are several; compare w^4+w+1 against w^4+w^3+1
    auto F16a = Fq::make(2, 4);
    auto F16b = Fq::make_with_modulus(2, 4, {1, 0, 0, 1});
    for (auto F : {F16a, F16b}) {
        auto ring = CoordinateRing::make(F, Poly::constant(F, F->one()), Mode::Geometric);
        auto cs = cokernel_basis(ring, 1, Window{3});
        CHECK(cs.exponents == std::vector<int>(8, 1)); // (d - floor(d/p)) * m = 2 * 4
    }
    (void)F4a;
    (void)F4b;
}
