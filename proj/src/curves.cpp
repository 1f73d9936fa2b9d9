#include "wittlab/curves.hpp"

#include <numeric>
#include <sstream>

#include "wittlab/fq.hpp"

namespace wittlab {
namespace curves {

long RamificationProfile::ramification_divisor_degree() const {
    long total = 0;
    for (const auto& bp : branch_points)
        for (long e : bp.ram_indices) total += e - 1;
    return total;
}

namespace {

void validate_profile(const RamificationProfile& rp, uint32_t p, bool tame_required) {
    require(rp.degree >= 1, ErrorKind::InvalidArgument, "cover degree must be >= 1");
    require(rp.base_genus >= 0, ErrorKind::InvalidArgument, "base genus must be >= 0");
    for (const auto& bp : rp.branch_points) {
        long fiber = 0;
        for (long e : bp.ram_indices) {
            require(e >= 1, ErrorKind::InvalidArgument, "ramification index must be >= 1");
            if (tame_required)
                require(e % (long)p != 0, ErrorKind::WildRamification,
                        "ramification index divisible by p");
            fiber += e;
        }
        require(fiber == rp.degree, ErrorKind::InvalidArgument,
                "fiber indices must sum to the cover degree");
    }
}

} // namespace

BigRat hurwitz_genus_rational(const RamificationProfile& rp, uint32_t p) {
    validate_profile(rp, p, true);
    // 2g - 2 = N(2g_X - 2) + deg R
    BigInt two_g_minus_2 =
        BigInt(rp.degree) * (2 * rp.base_genus - 2) + rp.ramification_divisor_degree();
    BigRat g(two_g_minus_2 + 2, 2);
    g.canonicalize();
    return g;
}

long tame_hurwitz_genus(const RamificationProfile& rp, uint32_t p) {
    BigRat g = hurwitz_genus_rational(rp, p);
    require(g.get_den() == 1, ErrorKind::NonIntegralGenus,
            "Riemann-Hurwitz count is not an integer");
    require(g >= 0, ErrorKind::NonIntegralGenus, "Riemann-Hurwitz count is negative");
    require(g.get_num().fits_slong_p(), ErrorKind::InvalidArgument, "genus out of range");
    return (long)g.get_num().get_si();
}

long ASWCoverSpec::cover_degree() const {
    long pn = 1;
    for (int i = 0; i < n; ++i) pn *= (long)p;
    return pn + 1;
}

std::string ASWCoverSpec::equation() const {
    std::ostringstream os;
    long pn = cover_degree() - 1;
    os << "u^" << pn << " - u - y^" << (pn + 1) << " = 0";
    return os.str();
}

std::string ASWCoverSpec::galois_group() const {
    std::ostringstream os;
    os << "(Z/" << p << ")^" << n;
    return os.str();
}

RamificationProfile ASWCoverSpec::finite_branch_profile() const {
    // branch locus over the u-line: u^{p^n} - u = 0 (p^n points) and infinity;
    // every finite branch point is totally ramified with index p^n + 1 and the
    // part over infinity is deliberately dropped, so the genus count is a bound
    RamificationProfile rp;
    long pn = cover_degree() - 1;
    rp.degree = pn + 1;
    rp.base_genus = 0;
    for (long i = 0; i < pn; ++i) rp.branch_points.push_back(BranchPoint{{pn + 1}});
    return rp;
}

Lemma67Bound lemma67_bound(uint32_t p, int n) {
    require(is_prime_u32(p), ErrorKind::CompositeP, "p must be prime");
    require(n >= 1, ErrorKind::InvalidArgument, "n must be >= 1");
    BigInt pn = big_pow(BigInt((long)p), (unsigned long)n);
    Lemma67Bound out;
    out.bound = BigRat(pn * (pn - 2), 2);
    out.bound.canonicalize();
    // ceil(bound); the bound can be negative only for p^n = 2, where it is 0
    BigInt num = out.bound.get_num(), den = out.bound.get_den();
    BigInt q;
    mpz_cdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    out.genus_at_least = q < 0 ? BigInt(0) : q;

    // the defining polynomial has du-derivative p^n u^{p^n-1} - 1 = -1 mod p
    BigInt lead = pn % (long)p;
    out.certificate.unit_derivative = lead == 0;
    out.certificate.derivative = "-1";
    out.certificate.totally_ramified_at_y0 = true;
    return out;
}

GenusChoice genus_needed_for(const grp::PermGroup& H, int l, uint32_t p) {
    require(is_prime_u32(p), ErrorKind::CompositeP, "p must be prime");
    require(l >= 1, ErrorKind::InvalidArgument, "multiplicity must be >= 1");
    require(H.order() % p != 0, ErrorKind::InvalidArgument,
            "H must be a prime-to-p group");
    double power = 1;
    for (int i = 0; i < l; ++i) power *= (double)H.order();
    require(power <= (double)H.order_cap(), ErrorKind::OrderCapExceeded,
            "|H^l| exceeds the order cap");
    grp::PermGroup Hl = grp::direct_power(H, l);
    // d <= log2 |H^l|, so this cap always suffices
    int cap = 1;
    size_t o = Hl.order();
    while ((o >>= 1)) ++cap;
    auto mg = grp::min_generators(Hl, cap);
    GenusChoice out;
    out.d = mg.d;
    long g = (mg.d + 2) / 2; // smallest g with 2g >= d + 1
    out.genus = std::max<long>(2, g);
    return out;
}

int choose_lemma67_parameters(const BigInt& target_genus, uint32_t p) {
    require(target_genus >= 0, ErrorKind::InvalidArgument, "target must be >= 0");
    for (int n = 1;; ++n) {
        BigInt pn = big_pow(BigInt((long)p), (unsigned long)n);
        BigRat bound(pn * (pn - 2), 2);
        bound.canonicalize();
        if (bound >= BigRat(target_genus)) return n;
        require(n < 64, ErrorKind::InvalidArgument, "target genus out of range");
    }
}

} // namespace curves
} // namespace wittlab
