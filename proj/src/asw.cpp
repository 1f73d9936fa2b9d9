#include "wittlab/asw.hpp"

#include <algorithm>
#include <sstream>

namespace wittlab {
namespace asw {

// ---------------------------------------------------------------------------
// partial fractions
// ---------------------------------------------------------------------------

PartialFraction PartialFraction::from(const RingElem& a) {
    const auto& ring = a.ring();
    const auto& field = ring->field();
    PartialFraction pf;
    pf.ring = ring;
    pf.constant = field->zero();
    pf.poles.resize(ring->roots().size());

    Poly num = a.num();
    int k = a.denom_exp();
    Poly x = Poly::x(field);
    // peel the top pole order at every puncture, then divide by h and repeat
    while (k > 0) {
        for (size_t i = 0; i < ring->roots().size(); ++i) {
            Poly lin = x - Poly::constant(field, ring->roots()[i]);
            Poly g = ring->h().exact_div(lin);
            FqElem c = num.eval(ring->roots()[i]) * g.eval(ring->roots()[i]).pow((uint64_t)k).inv();
            if (!c.is_zero()) {
                pf.poles[i][k] = c;
                num = num - g.pow((uint64_t)k) * Poly::constant(field, c);
            }
        }
        num = num.exact_div(ring->h());
        --k;
    }
    for (int j = 1; j <= num.degree(); ++j) {
        FqElem c = num.coeff(j);
        if (!c.is_zero()) pf.poly[j] = c;
    }
    if (num.degree() >= 0) pf.constant = num.coeff(0);
    return pf;
}

RingElem PartialFraction::to_ring_elem() const {
    RingElem acc = ring->from_constant(constant);
    for (const auto& [j, c] : poly)
        acc = acc + ring->x_pow(j) * ring->from_constant(c);
    for (size_t i = 0; i < poles.size(); ++i)
        for (const auto& [j, c] : poles[i])
            acc = acc + ring->inv_linear_pow(i, j) * ring->from_constant(c);
    return acc;
}

int PartialFraction::max_degree() const {
    return poly.empty() ? 0 : poly.rbegin()->first;
}

int PartialFraction::max_pole() const {
    int m = 0;
    for (const auto& pm : poles)
        if (!pm.empty()) m = std::max(m, pm.rbegin()->first);
    return m;
}

// ---------------------------------------------------------------------------
// window monomials
// ---------------------------------------------------------------------------

RingElem Monomial::realize(const RingPtr& ring, const FqElem& coef) const {
    switch (kind) {
        case Kind::Constant: return ring->from_constant(coef);
        case Kind::Power: return ring->x_pow(j) * ring->from_constant(coef);
        case Kind::Pole: return ring->inv_linear_pow(root_idx, j) * ring->from_constant(coef);
    }
    raise(ErrorKind::InvalidArgument, "bad monomial kind");
}

std::string Monomial::name(const RingPtr& ring, const FqElem& coef) const {
    std::ostringstream os;
    if (!coef.is_one() || kind == Kind::Constant) {
        std::string cs = coef.to_string();
        if (cs.find('+') != std::string::npos) cs = "(" + cs + ")";
        os << cs;
        if (kind != Kind::Constant) os << "*";
    }
    if (kind == Kind::Power) {
        os << "x";
        if (j > 1) os << "^" << j;
    } else if (kind == Kind::Pole) {
        const FqElem& r = ring->roots()[root_idx];
        if (r.is_zero())
            os << "x^-" << j;
        else
            os << "(x-" << r.to_string() << ")^-" << j;
    }
    return os.str();
}

std::vector<Monomial> window_monomials(const RingPtr& ring, Window win) {
    std::vector<Monomial> out;
    for (int j = 1; j <= win.d; ++j)
        out.push_back(Monomial{Monomial::Kind::Power, j, 0});
    for (size_t i = 0; i < ring->roots().size(); ++i)
        for (int j = 1; j <= win.d; ++j)
            out.push_back(Monomial{Monomial::Kind::Pole, j, i});
    return out;
}

std::vector<Monomial> reduced_window_monomials(const RingPtr& ring, Window win) {
    uint32_t p = ring->field()->p();
    std::vector<Monomial> out;
    for (const auto& mo : window_monomials(ring, win))
        if (mo.j % (int)p != 0) out.push_back(mo);
    return out;
}

// ---------------------------------------------------------------------------
// reduction
// ---------------------------------------------------------------------------

namespace {

struct Offender {
    enum class What { None, Power, Pole, Constant } what = What::None;
    int exp = 0;     // the offending p*j
    size_t root = 0; // for poles
    FqElem coef;
};

Offender find_offender(const PartialFraction& pf, const RingPtr& ring) {
    uint32_t p = ring->field()->p();
    Offender off;
    // highest p-power degree first, then poles in root order, then the constant
    for (auto it = pf.poly.rbegin(); it != pf.poly.rend(); ++it) {
        if (it->first % (int)p == 0) {
            off.what = Offender::What::Power;
            off.exp = it->first;
            off.coef = it->second;
            return off;
        }
    }
    for (size_t i = 0; i < pf.poles.size(); ++i) {
        for (auto it = pf.poles[i].rbegin(); it != pf.poles[i].rend(); ++it) {
            if (it->first % (int)p == 0) {
                off.what = Offender::What::Pole;
                off.exp = it->first;
                off.root = i;
                off.coef = it->second;
                return off;
            }
        }
    }
    if (ring->mode() == Mode::Geometric && !pf.constant.is_zero()) {
        off.what = Offender::What::Constant;
        off.coef = pf.constant;
    }
    return off;
}

} // namespace

WV reduce_representative(const WV& w_in, const RingPtr& ring, Window win) {
    require(w_in[0].ring()->same_ring(*ring), ErrorKind::RingMismatch,
            "vector over a different coordinate ring");
    int n = w_in.length();
    uint32_t p = ring->field()->p();
    int bound = std::max(1, n * win.d * (int)p);
    WV w = w_in;
    for (int i = 0; i < n; ++i) {
        for (;;) {
            PartialFraction pf = PartialFraction::from(w[i]);
            require(pf.max_degree() <= bound && pf.max_pole() <= bound, ErrorKind::NotInWindow,
                    "component left the working window " + std::to_string(bound));
            Offender off = find_offender(pf, ring);
            if (off.what == Offender::What::None) break;
            if (off.what == Offender::What::Constant) {
                w = witt_sub(w, WV::single(n, i, ring->from_constant(off.coef)));
                continue;
            }
            int j = off.exp / (int)p;
            FqElem root_coef = off.coef.frobenius_root();
            RingElem base = off.what == Offender::What::Power
                                ? ring->x_pow(j)
                                : ring->inv_linear_pow(off.root, j);
            RingElem g = base * ring->from_constant(root_coef);
            w = witt_sub(w, witt::p_map(WV::single(n, i, g)));
        }
    }
    return w;
}

// ---------------------------------------------------------------------------
// zero test
// ---------------------------------------------------------------------------

ZeroTester::ZeroTester(RingPtr ring, int n, Window win)
    : ring_(std::move(ring)), n_(n), win_(win) {
    if (ring_->mode() == Mode::Arithmetic) {
        // P(W_n(F_q)) enumerated once; q^n is desk-sized
        const auto& field = ring_->field();
        uint64_t q = field->q();
        uint64_t count = 1;
        for (int i = 0; i < n_; ++i) count *= q;
        for (uint64_t code = 0; code < count; ++code) {
            uint64_t c = code;
            std::vector<FqElem> comps;
            for (int i = 0; i < n_; ++i) {
                comps.push_back(field->element(c % q));
                c /= q;
            }
            auto pv = witt::p_map(witt::WittVector<FqElem>(std::move(comps)));
            std::vector<uint64_t> key;
            for (int i = 0; i < n_; ++i) key.push_back(pv[i].index());
            p_image_constants_.insert(std::move(key));
        }
    }
}

bool ZeroTester::is_zero(const WV& w) const {
    WV r = reduce_representative(w, ring_, win_);
    if (ring_->mode() == Mode::Geometric) return r.is_zero();
    std::vector<uint64_t> key;
    for (int i = 0; i < n_; ++i) {
        PartialFraction pf = PartialFraction::from(r[i]);
        if (!pf.is_constant()) return false;
        key.push_back(pf.constant.index());
    }
    return p_image_constants_.count(key) > 0;
}

// ---------------------------------------------------------------------------
// cokernel structure
// ---------------------------------------------------------------------------

BigInt CokernelStructure::order() const {
    BigInt t = 1;
    for (int e : exponents) t *= big_pow(BigInt(p), (unsigned long)e);
    return t;
}

BigInt CokernelStructure::order_killed_by(int e) const {
    BigInt t = 1;
    for (int ei : exponents) t *= big_pow(BigInt(p), (unsigned long)std::min(ei, e));
    return t;
}

std::vector<BigInt> CokernelStructure::invariant_factors() const {
    std::vector<BigInt> out;
    for (int e : exponents) out.push_back(big_pow(BigInt(p), (unsigned long)e));
    return out;
}

namespace {

// p-fold sum with intermediate reduction, to keep components in the window
WV scaled_by_p(const WV& v, const RingPtr& ring, Window win) {
    WV acc = v;
    for (uint32_t i = 1; i < ring->field()->p(); ++i)
        acc = reduce_representative(witt::witt_add(acc, v), ring, win);
    return acc;
}

FqElem arithmetic_constant_generator(const FqPtr& field) {
    // any constant with nonzero absolute trace generates the constants summand
    for (uint64_t i = 1; i < field->q(); ++i) {
        FqElem c = field->element(i);
        if (!c.trace_to_prime().is_zero()) return c;
    }
    raise(ErrorKind::InvalidArgument, "trace form degenerate"); // unreachable
}

} // namespace

CokernelStructure cokernel_basis(const RingPtr& ring, int n, Window win) {
    require(n >= 1, ErrorKind::InvalidArgument, "level must be >= 1");
    require(win.d >= 0, ErrorKind::InvalidArgument, "window must be >= 0");
    const auto& field = ring->field();
    uint32_t p = field->p();

    struct Gen {
        WV rep;
        std::string name;
        int exponent;
    };
    std::vector<Gen> gens;

    ZeroTester zero(ring, n, win);
    auto order_exponent = [&](const WV& g) {
        WV acc = reduce_representative(g, ring, win);
        int e = 0;
        while (!zero.is_zero(acc)) {
            acc = scaled_by_p(acc, ring, win);
            ++e;
            require(e <= n, ErrorKind::IntegralityViolation,
                    "cokernel class not killed by p^n"); // would be a reduction bug
        }
        return e;
    };

    for (const auto& mono : reduced_window_monomials(ring, win)) {
        for (uint32_t t = 0; t < field->m(); ++t) {
            // F_p-basis element w^t
            uint64_t idx = 1;
            for (uint32_t s = 0; s < t; ++s) idx *= p;
            FqElem b = field->element(idx);
            WV g = WV::single(n, 0, mono.realize(ring, b));
            int e = order_exponent(g);
            if (e > 0)
                gens.push_back({reduce_representative(g, ring, win), mono.name(ring, b), e});
        }
    }
    if (ring->mode() == Mode::Arithmetic) {
        FqElem c = arithmetic_constant_generator(field);
        WV g = WV::single(n, 0, ring->from_constant(c));
        int e = order_exponent(g);
        if (e > 0) {
            Monomial cm{Monomial::Kind::Constant, 0, 0};
            gens.push_back({reduce_representative(g, ring, win), cm.name(ring, c), e});
        }
    }

    std::stable_sort(gens.begin(), gens.end(),
                     [](const Gen& a, const Gen& b) { return a.exponent > b.exponent; });

    CokernelStructure cs;
    cs.p = p;
    cs.n = n;
    cs.d = win.d;
    for (auto& g : gens) {
        cs.exponents.push_back(g.exponent);
        cs.generators.push_back(g.rep);
        cs.generator_names.push_back(g.name);
    }
    return cs;
}

// ---------------------------------------------------------------------------
// Verschiebung descent
// ---------------------------------------------------------------------------

VerschiebungReport verschiebung_embedding_check(const RingPtr& ring, int n, Window win) {
    VerschiebungReport rep;
    rep.n = n;
    rep.d = win.d;
    const auto& field = ring->field();

    // descent: reduce then shift agrees with shift then reduce, for every
    // window monomial embedded at every level
    for (const auto& mono : window_monomials(ring, win)) {
        for (uint32_t t = 0; t < field->m(); ++t) {
            uint64_t idx = 1;
            for (uint32_t s = 0; s < t; ++s) idx *= field->p();
            FqElem b = field->element(idx);
            for (int pos = 0; pos < n; ++pos) {
                WV w = WV::single(n, pos, mono.realize(ring, b));
                WV lhs = reduce_representative(witt::verschiebung(w), ring, win);
                WV rhs = reduce_representative(
                    witt::verschiebung(reduce_representative(w, ring, win)), ring, win);
                if (lhs != rhs)
                    rep.descent_violations.push_back(mono.name(ring, b) + " at level " +
                                                     std::to_string(pos + 1));
            }
        }
    }

    CokernelStructure level_n = cokernel_basis(ring, n, win);
    ZeroTester zero_up(ring, n + 1, win);
    std::vector<WV> images;
    for (size_t i = 0; i < level_n.generators.size(); ++i) {
        WV img = reduce_representative(witt::verschiebung(level_n.generators[i]), ring, win);
        VerschiebungReport::Image entry;
        entry.generator = level_n.generator_names[i];
        entry.nonzero = !zero_up.is_zero(img);
        std::ostringstream os;
        os << "(";
        for (int c = 0; c < img.length(); ++c) {
            if (c) os << ",";
            os << img[c].to_string();
        }
        os << ")";
        entry.image = os.str();
        rep.generator_images.push_back(entry);
        images.push_back(img);
    }
    bool inj = true;
    for (size_t i = 0; i < images.size() && inj; ++i) {
        if (!rep.generator_images[i].nonzero) inj = false;
        for (size_t j = i + 1; j < images.size() && inj; ++j)
            if (zero_up.is_zero(witt::witt_sub(images[i], images[j]))) inj = false;
    }
    rep.injective_on_generators = inj;
    return rep;
}

// ---------------------------------------------------------------------------
// cover counts and the abelianization report
// ---------------------------------------------------------------------------

CoverCount count_cyclic_covers(const RingPtr& ring, int n, Window win) {
    CokernelStructure cs = cokernel_basis(ring, n, win);
    CoverCount cc;
    cc.total = cs.order();
    cc.surjective = cs.order() - cs.order_killed_by(n - 1);
    return cc;
}

AbelianizationReport abelianization_report(long genus, const RingPtr& ring, int n, Window win) {
    require(genus >= 0, ErrorKind::InvalidArgument, "genus must be >= 0");
    AbelianizationReport rep;
    rep.genus = genus;
    rep.punctures = ring->punctures();
    rep.prime_to_p_rank = 2 * genus + rep.punctures - 1;
    for (int level = 1; level <= n; ++level)
        rep.p_part.push_back(cokernel_basis(ring, level, win));
    return rep;
}

} // namespace asw
} // namespace wittlab
