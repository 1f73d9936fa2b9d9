#ifndef WITTLAB_WITT_HPP
#define WITTLAB_WITT_HPP

#include <concepts>
#include <cstdint>
#include <map>
#include <memory>
#include <vector>

#include "wittlab/bigint.hpp"

namespace wittlab {
namespace witt {

// ---------------------------------------------------------------------------
// Integral multivariate polynomials (sparse), the substrate for the Witt
// structure constants. Exponent vectors have fixed length; terms are kept in
// a map so every traversal is deterministic.
// ---------------------------------------------------------------------------
class ZMPoly {
  public:
    using Exps = std::vector<uint16_t>;

    explicit ZMPoly(int nvars) : nvars_(nvars) {}

    static ZMPoly constant(int nvars, BigInt c);
    static ZMPoly variable(int nvars, int idx);

    int nvars() const { return nvars_; }
    const std::map<Exps, BigInt>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    ZMPoly operator+(const ZMPoly& o) const;
    ZMPoly operator-(const ZMPoly& o) const;
    ZMPoly operator*(const ZMPoly& o) const;
    bool operator==(const ZMPoly& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }

    ZMPoly pow(unsigned long e) const;
    ZMPoly scaled(const BigInt& c) const;
    ZMPoly exact_div_scalar(const BigInt& c) const; // IntegralityViolation on remainder

    // evaluate over the integers
    BigInt eval(const std::vector<BigInt>& xs) const;

    void add_term(Exps e, BigInt c);

  private:
    int nvars_;
    std::map<Exps, BigInt> terms_;
};

// mod-p reduction of a structure polynomial, flattened for evaluation
struct ModPoly {
    struct Term {
        std::vector<std::pair<uint16_t, uint16_t>> factors; // (variable, exponent), exponent >= 1
        uint32_t coef;                                      // in [1, p)
    };
    int nvars = 0;
    std::vector<Term> terms;

    static ModPoly reduce(const ZMPoly& z, uint32_t p);
};

// ---------------------------------------------------------------------------
// Structure polynomials for W_n: sums, products and negation, solved
// recursively from the ghost identities over the integers. Construction only
// ever divides by powers of p and aborts on any remainder. Instances are
// immutable and memoized per (p, n).
// ---------------------------------------------------------------------------
class StructureCache {
  public:
    static std::shared_ptr<const StructureCache> get(uint32_t p, int n);

    uint32_t p() const { return p_; }
    int n() const { return n_; }

    // 0-indexed level i < n; sum/prod polys live in 2n variables
    // (X_0..X_{n-1}, Y_0..Y_{n-1}), neg polys in n variables.
    const ZMPoly& sum_z(int i) const { return sum_z_[(size_t)i]; }
    const ZMPoly& prod_z(int i) const { return prod_z_[(size_t)i]; }
    const ZMPoly& neg_z(int i) const { return neg_z_[(size_t)i]; }
    const ModPoly& sum_modp(int i) const { return sum_p_[(size_t)i]; }
    const ModPoly& prod_modp(int i) const { return prod_p_[(size_t)i]; }
    const ModPoly& neg_modp(int i) const { return neg_p_[(size_t)i]; }

    // ghost polynomial w_i in its own i+1 variables: sum_j p^j Z_j^{p^{i-j}}
    static ZMPoly ghost(uint32_t p, int nvars, int i);

  private:
    StructureCache(uint32_t p, int n);

    uint32_t p_;
    int n_;
    std::vector<ZMPoly> sum_z_, prod_z_, neg_z_;
    std::vector<ModPoly> sum_p_, prod_p_, neg_p_;
};

using CachePtr = std::shared_ptr<const StructureCache>;

// ---------------------------------------------------------------------------
// Witt vectors over any coefficient ring of characteristic p supplied by the
// algebra layer (field elements or coordinate-ring elements).
// ---------------------------------------------------------------------------
template <typename T>
concept CharPRing = requires(const T& a, const T& b, long long c, uint64_t e) {
    { a + b } -> std::convertible_to<T>;
    { a * b } -> std::convertible_to<T>;
    { -a } -> std::convertible_to<T>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.pow(e) } -> std::convertible_to<T>;
    { a.characteristic() } -> std::convertible_to<uint32_t>;
    { a.scalar(c) } -> std::convertible_to<T>;
    { a.compatible_with(b) } -> std::convertible_to<bool>;
};

template <CharPRing T>
class WittVector {
  public:
    WittVector(std::vector<T> comps) : c_(std::move(comps)) {
        require(!c_.empty(), ErrorKind::InvalidArgument, "Witt vector needs length >= 1");
        for (size_t i = 1; i < c_.size(); ++i)
            require(c_[0].compatible_with(c_[i]), ErrorKind::RingMismatch,
                    "Witt components from different rings");
    }

    static WittVector zero(int n, const T& witness) {
        return WittVector(std::vector<T>((size_t)n, witness.scalar(0)));
    }
    static WittVector one(int n, const T& witness) {
        std::vector<T> v((size_t)n, witness.scalar(0));
        v[0] = witness.scalar(1);
        return WittVector(std::move(v));
    }
    // a placed at position pos (0-indexed), zeros elsewhere; V^pos of [a]
    static WittVector single(int n, int pos, const T& a) {
        std::vector<T> v((size_t)n, a.scalar(0));
        v[(size_t)pos] = a;
        return WittVector(std::move(v));
    }

    int length() const { return (int)c_.size(); }
    uint32_t prime() const { return c_[0].characteristic(); }
    const T& operator[](int i) const { return c_[(size_t)i]; }
    const std::vector<T>& components() const { return c_; }

    bool is_zero() const {
        for (const auto& a : c_)
            if (!a.is_zero()) return false;
        return true;
    }

    bool operator==(const WittVector& o) const {
        if (length() != o.length()) return false;
        for (int i = 0; i < length(); ++i)
            if (!(c_[(size_t)i] == o.c_[(size_t)i])) return false;
        return true;
    }
    bool operator!=(const WittVector& o) const { return !(*this == o); }

  private:
    std::vector<T> c_;
};

namespace detail {

// evaluate a reduced structure polynomial on component values
template <CharPRing T>
T eval_modpoly(const ModPoly& poly, const std::vector<const T*>& vals, const T& witness) {
    T acc = witness.scalar(0);
    std::vector<std::map<uint16_t, T>> powers((size_t)poly.nvars);
    for (const auto& term : poly.terms) {
        bool vanished = false;
        for (const auto& [v, e] : term.factors) {
            if (vals[v]->is_zero()) {
                vanished = true;
                break;
            }
        }
        if (vanished) continue;
        T t = witness.scalar((long long)term.coef);
        for (const auto& [v, e] : term.factors) {
            auto& cache = powers[v];
            auto it = cache.find(e);
            if (it == cache.end()) it = cache.emplace(e, vals[v]->pow(e)).first;
            t = t * it->second;
        }
        acc = acc + t;
    }
    return acc;
}

template <CharPRing T>
void check_pair(const WittVector<T>& u, const WittVector<T>& v) {
    require(u.length() == v.length(), ErrorKind::LengthMismatch,
            "Witt vectors of different lengths");
    require(u[0].compatible_with(v[0]), ErrorKind::RingMismatch,
            "Witt vectors over different rings");
}

} // namespace detail

template <CharPRing T>
WittVector<T> witt_add(const WittVector<T>& u, const WittVector<T>& v) {
    detail::check_pair(u, v);
    int n = u.length();
    auto cache = StructureCache::get(u.prime(), n);
    std::vector<const T*> vals((size_t)(2 * n));
    for (int i = 0; i < n; ++i) {
        vals[(size_t)i] = &u[i];
        vals[(size_t)(n + i)] = &v[i];
    }
    std::vector<T> out;
    out.reserve((size_t)n);
    for (int i = 0; i < n; ++i)
        out.push_back(detail::eval_modpoly(cache->sum_modp(i), vals, u[0]));
    return WittVector<T>(std::move(out));
}

template <CharPRing T>
WittVector<T> witt_mul(const WittVector<T>& u, const WittVector<T>& v) {
    detail::check_pair(u, v);
    int n = u.length();
    auto cache = StructureCache::get(u.prime(), n);
    std::vector<const T*> vals((size_t)(2 * n));
    for (int i = 0; i < n; ++i) {
        vals[(size_t)i] = &u[i];
        vals[(size_t)(n + i)] = &v[i];
    }
    std::vector<T> out;
    out.reserve((size_t)n);
    for (int i = 0; i < n; ++i)
        out.push_back(detail::eval_modpoly(cache->prod_modp(i), vals, u[0]));
    return WittVector<T>(std::move(out));
}

template <CharPRing T>
WittVector<T> witt_neg(const WittVector<T>& u) {
    int n = u.length();
    auto cache = StructureCache::get(u.prime(), n);
    std::vector<const T*> vals((size_t)n);
    for (int i = 0; i < n; ++i) vals[(size_t)i] = &u[i];
    std::vector<T> out;
    out.reserve((size_t)n);
    for (int i = 0; i < n; ++i)
        out.push_back(detail::eval_modpoly(cache->neg_modp(i), vals, u[0]));
    return WittVector<T>(std::move(out));
}

template <CharPRing T>
WittVector<T> witt_sub(const WittVector<T>& u, const WittVector<T>& v) {
    return witt_add(u, witt_neg(v));
}

// component-wise p-th power; a ring endomorphism in characteristic p
template <CharPRing T>
WittVector<T> frobenius(const WittVector<T>& u) {
    std::vector<T> out;
    out.reserve((size_t)u.length());
    for (int i = 0; i < u.length(); ++i) out.push_back(u[i].pow(u.prime()));
    return WittVector<T>(std::move(out));
}

// (a_0,..,a_{n-1}) -> (0, a_0,..,a_{n-1}), length n+1
template <CharPRing T>
WittVector<T> verschiebung(const WittVector<T>& u) {
    std::vector<T> out;
    out.reserve((size_t)u.length() + 1);
    out.push_back(u[0].scalar(0));
    for (int i = 0; i < u.length(); ++i) out.push_back(u[i]);
    return WittVector<T>(std::move(out));
}

// the Artin-Schreier-Witt operator P = F - Id
template <CharPRing T>
WittVector<T> p_map(const WittVector<T>& u) {
    return witt_sub(frobenius(u), u);
}

// n-fold addition u + u + ... (k times), k >= 0
template <CharPRing T>
WittVector<T> witt_smul(long long k, const WittVector<T>& u) {
    WittVector<T> acc = WittVector<T>::zero(u.length(), u[0]);
    bool negate = k < 0;
    if (negate) k = -k;
    for (long long i = 0; i < k; ++i) acc = witt_add(acc, u);
    return negate ? witt_neg(acc) : acc;
}

} // namespace witt
} // namespace wittlab

#endif
