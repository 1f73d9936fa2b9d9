#ifndef WITTLAB_FQ_HPP
#define WITTLAB_FQ_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "wittlab/error.hpp"

namespace wittlab {

class FqElem;

// The finite field F_q, q = p^m, as an immutable shared context. Elements are
// coefficient vectors over the prime field with respect to a fixed monic
// irreducible modulus of degree m. Construction without an explicit modulus
// picks the canonical one (least integer encoding sum c_i p^i among monic
// irreducibles), so runs are reproducible; a small table of precomputed
// canonical moduli is shipped for the common fields and cross-checked against
// the enumeration in the tests.
class Fq : public std::enable_shared_from_this<Fq> {
  public:
    // canonical modulus; memoized, so two calls share one context
    static std::shared_ptr<const Fq> make(uint32_t p, uint32_t m);
    // explicit monic modulus, given by its low coefficients c_0..c_{m-1}
    static std::shared_ptr<const Fq> make_with_modulus(uint32_t p, uint32_t m,
                                                       std::vector<uint32_t> modulus_low);

    uint32_t p() const { return p_; }
    uint32_t m() const { return m_; }
    uint64_t q() const { return q_; }
    const std::vector<uint32_t>& modulus_low() const { return modulus_low_; }

    FqElem zero() const;
    FqElem one() const;
    FqElem from_int(long long v) const;      // v mod p, embedded in the prime field
    FqElem gen() const;                      // the class of w (requires m >= 2)
    FqElem element(uint64_t index) const;    // index = sum c_i p^i, 0 <= index < q
    FqElem from_coeffs(std::vector<uint32_t> c) const;

    bool same_field(const Fq& other) const;

    std::string describe() const; // "F(p,m)"

  private:
    Fq(uint32_t p, uint32_t m, std::vector<uint32_t> modulus_low);

    friend class FqElem;

    uint32_t p_;
    uint32_t m_;
    uint64_t q_;
    std::vector<uint32_t> modulus_low_;            // c_0..c_{m-1} of the monic modulus
    std::vector<std::vector<uint32_t>> xpow_red_;  // x^{m+i} mod modulus, i = 0..m-2
};

using FqPtr = std::shared_ptr<const Fq>;

class FqElem {
  public:
    FqElem() = default;
    FqElem(FqPtr field, std::vector<uint32_t> coeffs);

    const FqPtr& field() const { return field_; }
    const std::vector<uint32_t>& coeffs() const { return c_; }

    bool is_zero() const;
    bool is_one() const;
    uint64_t index() const; // sum c_i p^i

    FqElem operator+(const FqElem& o) const;
    FqElem operator-(const FqElem& o) const;
    FqElem operator*(const FqElem& o) const;
    FqElem operator-() const;
    bool operator==(const FqElem& o) const;
    bool operator!=(const FqElem& o) const { return !(*this == o); }
    bool operator<(const FqElem& o) const; // lexicographic on coefficients; for canonical ordering

    FqElem inv() const;            // DivisionByZero on 0
    FqElem pow(uint64_t e) const;
    FqElem frobenius() const;      // a^p
    FqElem frobenius_root() const; // unique r with r^p = a
    FqElem trace_to_prime() const; // sum of a^{p^i}, lands in the prime field

    // ring-traits used by the Witt machinery
    uint32_t characteristic() const;
    FqElem scalar(long long c) const { return field_->from_int(c); }
    bool compatible_with(const FqElem& o) const;

    std::string to_string() const;

  private:
    void check_same(const FqElem& o) const;

    FqPtr field_;
    std::vector<uint32_t> c_;
};

bool is_prime_u32(uint32_t n);

} // namespace wittlab

#endif
