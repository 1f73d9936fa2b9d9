#ifndef WITTLAB_RING_HPP
#define WITTLAB_RING_HPP

#include <memory>
#include <string>
#include <vector>

#include "wittlab/poly.hpp"

namespace wittlab {

class RingElem;

// Quotienting convention for the Artin-Schreier-Witt cokernel. Geometric mode
// additionally kills the constant Witt vectors, emulating an algebraically
// closed base where P is onto the constants; arithmetic mode keeps them.
enum class Mode { Geometric, Arithmetic };

// The coordinate ring A = F_q[x, 1/h] of P^1 minus the roots of h and
// infinity. h must be squarefree and split over F_q (checked at construction,
// by collecting rational roots); h constant means the affine line.
class CoordinateRing : public std::enable_shared_from_this<CoordinateRing> {
  public:
    static std::shared_ptr<const CoordinateRing> make(FqPtr field, Poly h,
                                                      Mode mode = Mode::Geometric);

    const FqPtr& field() const { return field_; }
    const Poly& h() const { return h_; }                   // monic, or 1 for the affine line
    const std::vector<FqElem>& roots() const { return roots_; }
    Mode mode() const { return mode_; }
    int punctures_finite() const { return (int)roots_.size(); }  // s = deg h
    int punctures() const { return (int)roots_.size() + 1; }     // r = s + 1, counting infinity

    RingElem zero() const;
    RingElem one() const;
    RingElem from_int(long long v) const;
    RingElem from_constant(const FqElem& c) const;
    RingElem from_poly(const Poly& f) const;
    RingElem x() const;
    RingElem x_pow(int j) const;                   // x^j, j >= 0
    RingElem inv_linear_pow(size_t root_idx, int j) const; // (x - r_i)^{-j}, j >= 1

    bool same_ring(const CoordinateRing& o) const;
    std::string describe() const; // ring descriptor text, re-parsable by the CLI

  private:
    CoordinateRing(FqPtr field, Poly h, std::vector<FqElem> roots, Mode mode);

    FqPtr field_;
    Poly h_;
    std::vector<FqElem> roots_;
    Mode mode_;
};

using RingPtr = std::shared_ptr<const CoordinateRing>;

// Element of A in normal form num / h^k with k = 0 or h not dividing num.
class RingElem {
  public:
    RingElem() : num_(nullptr), k_(0) {}
    RingElem(RingPtr ring, Poly num, int k);

    const RingPtr& ring() const { return ring_; }
    const Poly& num() const { return num_; }
    int denom_exp() const { return k_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return k_ == 0 && num_.degree() <= 0; }
    FqElem constant_value() const; // requires is_constant()

    RingElem operator+(const RingElem& o) const;
    RingElem operator-(const RingElem& o) const;
    RingElem operator*(const RingElem& o) const;
    RingElem operator-() const;
    bool operator==(const RingElem& o) const;
    bool operator!=(const RingElem& o) const { return !(*this == o); }

    RingElem pow(uint64_t e) const;
    RingElem inv() const; // unit check: num must be a constant times a product of (x - r_i)

    // ring-traits used by the Witt machinery
    uint32_t characteristic() const { return ring_->field()->p(); }
    RingElem scalar(long long c) const { return ring_->from_int(c); }
    bool compatible_with(const RingElem& o) const;

    std::string to_string() const;

  private:
    void normalize();
    void check_same(const RingElem& o) const;

    RingPtr ring_;
    Poly num_;
    int k_;
};

} // namespace wittlab

#endif
