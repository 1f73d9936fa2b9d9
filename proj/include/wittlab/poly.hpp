#ifndef WITTLAB_POLY_HPP
#define WITTLAB_POLY_HPP

#include <string>
#include <vector>

#include "wittlab/fq.hpp"

namespace wittlab {

// Dense univariate polynomial over F_q with trailing zeros stripped.
// degree() is -1 for the zero polynomial (the "-infinity" sentinel).
class Poly {
  public:
    explicit Poly(FqPtr field) : field_(std::move(field)) {}
    Poly(FqPtr field, std::vector<FqElem> coeffs);

    static Poly zero(const FqPtr& field) { return Poly(field); }
    static Poly constant(const FqPtr& field, const FqElem& c);
    static Poly x(const FqPtr& field); // the monomial x
    static Poly monomial(const FqPtr& field, const FqElem& c, int deg);

    const FqPtr& field() const { return field_; }
    int degree() const { return (int)c_.size() - 1; }
    bool is_zero() const { return c_.empty(); }
    FqElem coeff(int i) const; // zero beyond the degree
    const std::vector<FqElem>& coeffs() const { return c_; }
    FqElem leading() const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const FqElem& c) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const;
    bool operator!=(const Poly& o) const { return !(*this == o); }

    Poly pow(uint64_t e) const;
    FqElem eval(const FqElem& at) const;
    Poly derivative() const;
    Poly monic() const;

    // division with remainder; divisor must be nonzero
    std::pair<Poly, Poly> divrem(const Poly& d) const;
    bool divisible_by(const Poly& d) const;
    Poly exact_div(const Poly& d) const; // raises InvalidArgument on nonzero remainder

    static Poly gcd(Poly a, Poly b); // monic gcd

    std::string to_string(const std::string& var = "x") const;

  private:
    void trim();
    void check_same(const Poly& o) const;

    FqPtr field_;
    std::vector<FqElem> c_;
};

} // namespace wittlab

#endif
