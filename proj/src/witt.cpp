#include "wittlab/witt.hpp"

#include <mutex>

#include "wittlab/fq.hpp"

namespace wittlab {
namespace witt {

ZMPoly ZMPoly::constant(int nvars, BigInt c) {
    ZMPoly r(nvars);
    if (c != 0) r.terms_.emplace(Exps((size_t)nvars, 0), std::move(c));
    return r;
}

ZMPoly ZMPoly::variable(int nvars, int idx) {
    ZMPoly r(nvars);
    Exps e((size_t)nvars, 0);
    e[(size_t)idx] = 1;
    r.terms_.emplace(std::move(e), BigInt(1));
    return r;
}

void ZMPoly::add_term(Exps e, BigInt c) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        if (c != 0) terms_.emplace(std::move(e), std::move(c));
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

ZMPoly ZMPoly::operator+(const ZMPoly& o) const {
    ZMPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
}

ZMPoly ZMPoly::operator-(const ZMPoly& o) const {
    ZMPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
    return r;
}

ZMPoly ZMPoly::operator*(const ZMPoly& o) const {
    ZMPoly r(nvars_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exps e = e1;
            for (size_t i = 0; i < e.size(); ++i) e[i] = (uint16_t)(e[i] + e2[i]);
            r.add_term(std::move(e), c1 * c2);
        }
    }
    return r;
}

ZMPoly ZMPoly::pow(unsigned long e) const {
    ZMPoly r = constant(nvars_, 1);
    ZMPoly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        if (e >>= 1) b = b * b;
    }
    return r;
}

ZMPoly ZMPoly::scaled(const BigInt& c) const {
    ZMPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
    return r;
}

ZMPoly ZMPoly::exact_div_scalar(const BigInt& c) const {
    ZMPoly r(nvars_);
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, exact_div(k, c));
    return r;
}

BigInt ZMPoly::eval(const std::vector<BigInt>& xs) const {
    require((int)xs.size() == nvars_, ErrorKind::InvalidArgument, "evaluation arity mismatch");
    BigInt acc = 0;
    for (const auto& [e, c] : terms_) {
        BigInt t = c;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) t *= big_pow(xs[i], e[i]);
        acc += t;
    }
    return acc;
}

ModPoly ModPoly::reduce(const ZMPoly& z, uint32_t p) {
    ModPoly r;
    r.nvars = z.nvars();
    for (const auto& [e, c] : z.terms()) {
        BigInt rc = c % (long)p;
        if (rc < 0) rc += (long)p;
        uint32_t coef = (uint32_t)rc.get_ui();
        if (coef == 0) continue;
        Term t;
        t.coef = coef;
        for (size_t i = 0; i < e.size(); ++i)
            if (e[i]) t.factors.emplace_back((uint16_t)i, e[i]);
        r.terms.push_back(std::move(t));
    }
    return r;
}

ZMPoly StructureCache::ghost(uint32_t p, int nvars, int i) {
    // w_i(Z_0..Z_i) = sum_{j<=i} p^j Z_j^{p^{i-j}}
    ZMPoly acc(nvars);
    for (int j = 0; j <= i; ++j) {
        unsigned long fr = 1;
        for (int t = 0; t < i - j; ++t) fr *= p;
        ZMPoly term = ZMPoly::variable(nvars, j).pow(fr).scaled(big_pow(BigInt(p), (unsigned long)j));
        acc = acc + term;
    }
    return acc;
}

namespace {

// solve w_i(S_0..S_i) = target_i for S_i, one level at a time; only exact
// divisions by p^i occur, anything else is a construction bug and aborts
std::vector<ZMPoly> ghost_solve(uint32_t p, int n, const std::vector<ZMPoly>& targets) {
    std::vector<ZMPoly> s;
    s.reserve((size_t)n);
    for (int i = 0; i < n; ++i) {
        ZMPoly rhs = targets[(size_t)i];
        for (int j = 0; j < i; ++j) {
            unsigned long fr = 1;
            for (int t = 0; t < i - j; ++t) fr *= p;
            rhs = rhs - s[(size_t)j].pow(fr).scaled(big_pow(BigInt(p), (unsigned long)j));
        }
        s.push_back(rhs.exact_div_scalar(big_pow(BigInt(p), (unsigned long)i)));
    }
    return s;
}

std::mutex g_cache_mutex;
std::map<std::pair<uint32_t, int>, CachePtr> g_cache;

} // namespace

StructureCache::StructureCache(uint32_t p, int n) : p_(p), n_(n) {
    int nv2 = 2 * n;
    // ghost targets: w_i(X) + w_i(Y), w_i(X) * w_i(Y), -w_i(X)
    std::vector<ZMPoly> sum_t, prod_t, neg_t;
    for (int i = 0; i < n; ++i) {
        ZMPoly wx(nv2), wy(nv2);
        for (int j = 0; j <= i; ++j) {
            unsigned long fr = 1;
            for (int t = 0; t < i - j; ++t) fr *= p;
            BigInt pj = big_pow(BigInt(p), (unsigned long)j);
            wx = wx + ZMPoly::variable(nv2, j).pow(fr).scaled(pj);
            wy = wy + ZMPoly::variable(nv2, n + j).pow(fr).scaled(pj);
        }
        sum_t.push_back(wx + wy);
        prod_t.push_back(wx * wy);
        neg_t.push_back(ghost(p, n, i).scaled(BigInt(-1)));
    }
    sum_z_ = ghost_solve(p, n, sum_t);
    prod_z_ = ghost_solve(p, n, prod_t);
    neg_z_ = ghost_solve(p, n, neg_t);
    for (int i = 0; i < n; ++i) {
        sum_p_.push_back(ModPoly::reduce(sum_z_[(size_t)i], p));
        prod_p_.push_back(ModPoly::reduce(prod_z_[(size_t)i], p));
        neg_p_.push_back(ModPoly::reduce(neg_z_[(size_t)i], p));
    }
}

CachePtr StructureCache::get(uint32_t p, int n) {
    require(is_prime_u32(p), ErrorKind::CompositeP, "Witt prime must be prime");
    require(n >= 1, ErrorKind::InvalidArgument, "Witt length must be >= 1");
    {
        std::lock_guard<std::mutex> lock(g_cache_mutex);
        auto it = g_cache.find({p, n});
        if (it != g_cache.end()) return it->second;
    }
    CachePtr built(new StructureCache(p, n));
    std::lock_guard<std::mutex> lock(g_cache_mutex);
    auto [it, inserted] = g_cache.emplace(std::make_pair(p, n), built);
    if (!inserted) return it->second; // someone else won the race; keep theirs
    return built;
}

} // namespace witt
} // namespace wittlab
