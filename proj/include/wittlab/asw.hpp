#ifndef WITTLAB_ASW_HPP
#define WITTLAB_ASW_HPP

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wittlab/ring.hpp"
#include "wittlab/witt.hpp"

namespace wittlab {
namespace asw {

using WV = witt::WittVector<RingElem>;

// Degree/pole truncation of A. Win(d) is spanned by the constant, x^j and
// (x-r_i)^{-j} for 1 <= j <= d; P maps Win(floor(d/p)) into Win(d) term by
// term, which is what makes the truncated quotient well-posed. d = 0 is the
// degenerate constants-only window.
struct Window {
    int d = 1;
};

// Partial-fraction normal form of an element of A: constant + polynomial part
// + principal parts at the punctures.
struct PartialFraction {
    RingPtr ring;
    FqElem constant;
    std::map<int, FqElem> poly;                    // degree >= 1 -> coefficient
    std::vector<std::map<int, FqElem>> poles;      // per root: pole order >= 1 -> coefficient

    static PartialFraction from(const RingElem& a);
    RingElem to_ring_elem() const;

    int max_degree() const;   // 0 if no polynomial part
    int max_pole() const;     // 0 if no pole part
    bool is_constant() const { return poly.empty() && max_pole() == 0; }
};

// A single term of the window basis.
struct Monomial {
    enum class Kind { Constant, Power, Pole } kind = Kind::Constant;
    int j = 0;           // exponent (Power) or pole order (Pole)
    size_t root_idx = 0; // which puncture (Pole)

    RingElem realize(const RingPtr& ring, const FqElem& coef) const;
    std::string name(const RingPtr& ring, const FqElem& coef) const;
};

// window basis monomials excluding the constant, in canonical order
std::vector<Monomial> window_monomials(const RingPtr& ring, Window win);
// the subset with exponent prime to p (the reduced representatives)
std::vector<Monomial> reduced_window_monomials(const RingPtr& ring, Window win);

// Canonical coset representative mod P(W_n(A)) (and mod the constant vectors
// in geometric mode): eliminates every c*x^{pj} and c*(x-r_i)^{-pj} term by
// subtracting P(V^{i-1}([frobenius_root(c) * u^j])), which only touches
// positions >= i. Raises NotInWindow if an intermediate component leaves the
// working window n*d*p.
WV reduce_representative(const WV& w, const RingPtr& ring, Window win);

// class-membership test for zero in the truncated quotient
class ZeroTester {
  public:
    ZeroTester(RingPtr ring, int n, Window win);
    bool is_zero(const WV& w) const;

  private:
    RingPtr ring_;
    int n_;
    Window win_;
    std::set<std::vector<uint64_t>> p_image_constants_; // arithmetic mode only
};

// The truncated quotient presented as a direct sum of cyclic p-groups
// generated by the reduced window monomials.
struct CokernelStructure {
    uint32_t p = 0;
    int n = 0;
    int d = 0;
    std::vector<int> exponents;            // descending; cyclic orders p^{e_i}
    std::vector<WV> generators;            // reduced representatives, aligned with exponents
    std::vector<std::string> generator_names;

    BigInt order() const;                       // product of the cyclic orders
    BigInt order_killed_by(int e) const;        // product of p^{min(e_i, e)}
    std::vector<BigInt> invariant_factors() const;
};

CokernelStructure cokernel_basis(const RingPtr& ring, int n, Window win);

// Lemma-3.3-square probe: does V descend to the truncated quotients, and do
// the level-n generators stay independent and nonzero at level n+1?
struct VerschiebungReport {
    int n = 0;
    int d = 0;
    std::vector<std::string> descent_violations; // expected empty
    struct Image {
        std::string generator;
        std::string image;
        bool nonzero = false;
    };
    std::vector<Image> generator_images;
    bool injective_on_generators = false;
};

VerschiebungReport verschiebung_embedding_check(const RingPtr& ring, int n, Window win);

// |Hom(-, Z/p^n)| within the window: total class count and the number of
// order-exactly-p^n classes (the Z/p^n-covers with conductor in the window).
struct CoverCount {
    BigInt total;
    BigInt surjective;
};

CoverCount count_cyclic_covers(const RingPtr& ring, int n, Window win);

// prime-to-p free abelian rank 2g + r - 1 plus the p-part cokernels at every
// level up to n
struct AbelianizationReport {
    long genus = 0;
    int punctures = 0;
    long prime_to_p_rank = 0;
    std::vector<CokernelStructure> p_part; // levels 1..n
};

AbelianizationReport abelianization_report(long genus, const RingPtr& ring, int n, Window win);

} // namespace asw
} // namespace wittlab

#endif
