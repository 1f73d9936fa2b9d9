#include "wittlab/fq.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace wittlab {

bool is_prime_u32(uint32_t n) {
    if (n < 2) return false;
    for (uint32_t d = 2; (uint64_t)d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

// ---- dense polynomial helpers over Z/p, used only for modulus selection ----

using PVec = std::vector<uint32_t>; // coefficient vector, c[i] is the x^i coefficient

void ptrim(PVec& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmulmod(const PVec& a, const PVec& b, const PVec& f, uint32_t p) {
    // f monic; result = a*b mod f
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> acc(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            acc[i + j] = (acc[i + j] + (uint64_t)a[i] * b[j]) % p;
    }
    size_t m = f.size() - 1;
    for (size_t d = acc.size(); d-- > m;) {
        uint64_t c = acc[d] % p;
        if (!c) continue;
        acc[d] = 0;
        for (size_t j = 0; j < m; ++j)
            acc[d - m + j] = (acc[d - m + j] + c * (p - f[j] % p)) % p;
    }
    PVec r(m, 0);
    for (size_t i = 0; i < m && i < acc.size(); ++i) r[i] = (uint32_t)(acc[i] % p);
    ptrim(r);
    return r;
}

PVec ppowmod(PVec base, uint64_t e, const PVec& f, uint32_t p) {
    PVec r{1};
    while (e) {
        if (e & 1) r = pmulmod(r, base, f, p);
        base = pmulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

PVec pgcd(PVec a, PVec b, uint32_t p) {
    ptrim(a);
    ptrim(b);
    while (!b.empty()) {
        // a mod b
        uint32_t lead = b.back();
        // lead^{-1} mod p
        uint64_t inv = 1, base = lead, e = p - 2;
        while (e) {
            if (e & 1) inv = inv * base % p;
            base = base * base % p;
            e >>= 1;
        }
        while (a.size() >= b.size() && !a.empty()) {
            uint64_t c = (uint64_t)a.back() * inv % p;
            size_t shift = a.size() - b.size();
            for (size_t i = 0; i < b.size(); ++i)
                a[shift + i] = (uint32_t)((a[shift + i] + c * (p - b[i] % p)) % p);
            ptrim(a);
        }
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const PVec& f, uint32_t p) {
    // f monic of degree m: irreducible iff x^{p^m} = x mod f and
    // gcd(x^{p^{m/l}} - x, f) = 1 for every prime l | m
    size_t m = f.size() - 1;
    if (m == 0) return false;
    if (m == 1) return true;
    PVec x{0, 1};
    // frob_k = x^{p^k} mod f, by k successive p-th powers
    auto frob = [&](size_t k) {
        PVec t = x;
        for (size_t i = 0; i < k; ++i) t = ppowmod(t, p, f, p);
        return t;
    };
    PVec top = frob(m);
    if (top != x) return false;
    for (size_t l = 2; l <= m; ++l) {
        if (m % l != 0) continue;
        bool lp = true;
        for (size_t d = 2; d * d <= l; ++d)
            if (l % d == 0) { lp = false; break; }
        if (!lp) continue;
        PVec t = frob(m / l); // x^{p^{m/l}} - x
        PVec diff = t;
        if (diff.size() < 2) diff.resize(2, 0);
        diff[1] = (diff[1] + p - 1) % p;
        ptrim(diff);
        PVec g = pgcd(diff, f, p);
        if (g.size() != 1) return false;
    }
    return true;
}

PVec canonical_modulus(uint32_t p, uint32_t m) {
    if (m == 1) return PVec{0, 1}; // x; the prime field needs no real modulus
    // enumerate monic f = x^m + sum c_i x^i by ascending integer encoding of (c_0..c_{m-1})
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) q *= p;
    for (uint64_t enc = 0; enc < q; ++enc) {
        PVec f(m + 1, 0);
        uint64_t e = enc;
        for (uint32_t i = 0; i < m; ++i) {
            f[i] = (uint32_t)(e % p);
            e /= p;
        }
        f[m] = 1;
        if (is_irreducible(f, p)) return f;
    }
    raise(ErrorKind::InvalidArgument, "no irreducible modulus found"); // unreachable
}

// Precomputed canonical moduli (low coefficients c_0..c_{m-1}) for the fields
// the test suite leans on; make() consults this table before enumerating.
struct ModulusEntry {
    uint32_t p, m;
    std::vector<uint32_t> low;
};
const ModulusEntry kShippedModuli[] = {
    {2, 2, {1, 1}},       // w^2 + w + 1
    {2, 3, {1, 1, 0}},    // w^3 + w + 1
    {2, 4, {1, 1, 0, 0}}, // w^4 + w + 1
    {3, 2, {1, 0}},       // w^2 + 1
    {3, 3, {1, 2, 0}},    // w^3 + 2w + 1
    {5, 2, {2, 0}},       // w^2 + 2
    {7, 2, {1, 0}},       // w^2 + 1
    {2, 5, {1, 0, 1, 0, 0}},
};

const std::vector<uint32_t>* shipped_modulus(uint32_t p, uint32_t m) {
    for (const auto& e : kShippedModuli)
        if (e.p == p && e.m == m) return &e.low;
    return nullptr;
}

std::mutex g_registry_mutex;
std::map<std::pair<uint32_t, uint32_t>, std::shared_ptr<const Fq>> g_registry;

} // namespace

Fq::Fq(uint32_t p, uint32_t m, std::vector<uint32_t> modulus_low)
    : p_(p), m_(m), modulus_low_(std::move(modulus_low)) {
    q_ = 1;
    for (uint32_t i = 0; i < m_; ++i) q_ *= p_;
    // reduction rows x^{m+i} mod f for schoolbook products
    if (m_ >= 2) {
        xpow_red_.resize(m_ - 1);
        std::vector<uint32_t> cur(m_, 0); // x^m mod f = -modulus_low
        for (uint32_t j = 0; j < m_; ++j) cur[j] = (p_ - modulus_low_[j] % p_) % p_;
        xpow_red_[0] = cur;
        for (uint32_t i = 1; i + 1 < m_; ++i) {
            // multiply cur by x and reduce
            std::vector<uint32_t> nxt(m_, 0);
            uint32_t top = cur[m_ - 1];
            for (uint32_t j = m_ - 1; j >= 1; --j) nxt[j] = cur[j - 1];
            nxt[0] = 0;
            if (top) {
                for (uint32_t j = 0; j < m_; ++j)
                    nxt[j] = (uint32_t)((nxt[j] + (uint64_t)top * xpow_red_[0][j]) % p_);
            }
            xpow_red_[i] = nxt;
            cur = nxt;
        }
    }
}

std::shared_ptr<const Fq> Fq::make(uint32_t p, uint32_t m) {
    require(is_prime_u32(p), ErrorKind::CompositeP, "field characteristic must be prime");
    require(m >= 1, ErrorKind::InvalidArgument, "extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < m; ++i) {
        q *= p;
        require(q <= 65536, ErrorKind::InvalidArgument, "field size capped at 2^16");
    }
    std::lock_guard<std::mutex> lock(g_registry_mutex);
    auto key = std::make_pair(p, m);
    auto it = g_registry.find(key);
    if (it != g_registry.end()) return it->second;
    std::vector<uint32_t> low;
    if (const auto* shipped = shipped_modulus(p, m)) {
        low = *shipped;
    } else {
        PVec f = canonical_modulus(p, m);
        low.assign(f.begin(), f.end() - 1);
    }
    auto field = std::shared_ptr<const Fq>(new Fq(p, m, std::move(low)));
    g_registry.emplace(key, field);
    return field;
}

std::shared_ptr<const Fq> Fq::make_with_modulus(uint32_t p, uint32_t m,
                                                std::vector<uint32_t> modulus_low) {
    require(is_prime_u32(p), ErrorKind::CompositeP, "field characteristic must be prime");
    require(m >= 1, ErrorKind::InvalidArgument, "extension degree must be >= 1");
    require(modulus_low.size() == m, ErrorKind::InvalidArgument, "modulus must have degree m");
    for (auto& c : modulus_low) c %= p;
    PVec f = modulus_low;
    f.push_back(1);
    require(is_irreducible(f, p), ErrorKind::InvalidArgument, "modulus is reducible");
    return std::shared_ptr<const Fq>(new Fq(p, m, std::move(modulus_low)));
}

bool Fq::same_field(const Fq& other) const {
    if (this == &other) return true;
    return p_ == other.p_ && m_ == other.m_ && modulus_low_ == other.modulus_low_;
}

FqElem Fq::zero() const { return FqElem(shared_from_this(), std::vector<uint32_t>(m_, 0)); }

FqElem Fq::one() const { return from_int(1); }

FqElem Fq::from_int(long long v) const {
    long long r = v % (long long)p_;
    if (r < 0) r += p_;
    std::vector<uint32_t> c(m_, 0);
    c[0] = (uint32_t)r;
    return FqElem(shared_from_this(), std::move(c));
}

FqElem Fq::gen() const {
    require(m_ >= 2, ErrorKind::InvalidArgument, "prime field has no generator symbol");
    std::vector<uint32_t> c(m_, 0);
    c[1] = 1;
    return FqElem(shared_from_this(), std::move(c));
}

FqElem Fq::element(uint64_t index) const {
    require(index < q_, ErrorKind::InvalidArgument, "element index out of range");
    std::vector<uint32_t> c(m_, 0);
    for (uint32_t i = 0; i < m_; ++i) {
        c[i] = (uint32_t)(index % p_);
        index /= p_;
    }
    return FqElem(shared_from_this(), std::move(c));
}

FqElem Fq::from_coeffs(std::vector<uint32_t> c) const {
    require(c.size() == m_, ErrorKind::InvalidArgument, "coefficient count mismatch");
    for (auto& x : c) x %= p_;
    return FqElem(shared_from_this(), std::move(c));
}

std::string Fq::describe() const {
    std::ostringstream os;
    os << "F(" << p_ << "," << m_ << ")";
    return os.str();
}

FqElem::FqElem(FqPtr field, std::vector<uint32_t> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {}

void FqElem::check_same(const FqElem& o) const {
    require(field_ && o.field_ && field_->same_field(*o.field_), ErrorKind::FieldMismatch,
            "elements live in different fields");
}

bool FqElem::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](uint32_t x) { return x == 0; });
}

bool FqElem::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](uint32_t x) { return x == 0; });
}

uint64_t FqElem::index() const {
    uint64_t idx = 0, mult = 1;
    for (uint32_t i = 0; i < c_.size(); ++i) {
        idx += c_[i] * mult;
        mult *= field_->p();
    }
    return idx;
}

FqElem FqElem::operator+(const FqElem& o) const {
    check_same(o);
    std::vector<uint32_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = (c_[i] + o.c_[i]) % field_->p();
    return FqElem(field_, std::move(r));
}

FqElem FqElem::operator-() const {
    std::vector<uint32_t> r(c_.size());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = (field_->p() - c_[i]) % field_->p();
    return FqElem(field_, std::move(r));
}

FqElem FqElem::operator-(const FqElem& o) const { return *this + (-o); }

FqElem FqElem::operator*(const FqElem& o) const {
    check_same(o);
    uint32_t p = field_->p(), m = field_->m();
    if (m == 1)
        return FqElem(field_, {(uint32_t)((uint64_t)c_[0] * o.c_[0] % p)});
    std::vector<uint64_t> acc(2 * m - 1, 0);
    for (uint32_t i = 0; i < m; ++i) {
        if (!c_[i]) continue;
        for (uint32_t j = 0; j < m; ++j)
            acc[i + j] = (acc[i + j] + (uint64_t)c_[i] * o.c_[j]) % p;
    }
    std::vector<uint32_t> r(m, 0);
    for (uint32_t i = 0; i < m; ++i) r[i] = (uint32_t)acc[i];
    for (uint32_t d = m; d < 2 * m - 1; ++d) {
        uint64_t c = acc[d];
        if (!c) continue;
        const auto& row = field_->xpow_red_[d - m];
        for (uint32_t j = 0; j < m; ++j)
            r[j] = (uint32_t)((r[j] + c * row[j]) % p);
    }
    return FqElem(field_, std::move(r));
}

bool FqElem::operator==(const FqElem& o) const {
    check_same(o);
    return c_ == o.c_;
}

bool FqElem::operator<(const FqElem& o) const {
    check_same(o);
    return c_ < o.c_;
}

FqElem FqElem::pow(uint64_t e) const {
    FqElem r = field_->one();
    FqElem b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

FqElem FqElem::inv() const {
    require(!is_zero(), ErrorKind::DivisionByZero, "inversion of zero");
    return pow(field_->q() - 2);
}

FqElem FqElem::frobenius() const { return pow(field_->p()); }

FqElem FqElem::frobenius_root() const {
    // Frobenius is bijective on F_q, and a^{p^m} = a, so a^{p^{m-1}} is the root.
    uint64_t e = 1;
    for (uint32_t i = 0; i + 1 < field_->m(); ++i) e *= field_->p();
    return pow(e);
}

FqElem FqElem::trace_to_prime() const {
    FqElem acc = *this;
    FqElem t = *this;
    for (uint32_t i = 1; i < field_->m(); ++i) {
        t = t.frobenius();
        acc = acc + t;
    }
    return acc;
}

uint32_t FqElem::characteristic() const { return field_->p(); }

bool FqElem::compatible_with(const FqElem& o) const {
    return field_ && o.field_ && field_->same_field(*o.field_);
}

std::string FqElem::to_string() const {
    if (field_->m() == 1) return std::to_string(c_[0]);
    std::ostringstream os;
    bool first = true;
    for (uint32_t i = field_->m(); i-- > 0;) {
        if (!c_[i]) continue;
        if (!first) os << "+";
        first = false;
        if (i == 0) {
            os << c_[i];
        } else {
            if (c_[i] != 1) os << c_[i] << "*";
            os << "w";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

} // namespace wittlab
