#include "wittlab/poly.hpp"

#include <sstream>

namespace wittlab {

Poly::Poly(FqPtr field, std::vector<FqElem> coeffs)
    : field_(std::move(field)), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        require(c.field()->same_field(*field_), ErrorKind::FieldMismatch,
                "polynomial coefficient from wrong field");
    trim();
}

void Poly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
    require(field_->same_field(*o.field_), ErrorKind::FieldMismatch,
            "polynomials over different fields");
}

Poly Poly::constant(const FqPtr& field, const FqElem& c) {
    return Poly(field, std::vector<FqElem>{c});
}

Poly Poly::x(const FqPtr& field) {
    return Poly(field, {field->zero(), field->one()});
}

Poly Poly::monomial(const FqPtr& field, const FqElem& c, int deg) {
    require(deg >= 0, ErrorKind::InvalidArgument, "monomial degree must be >= 0");
    std::vector<FqElem> v((size_t)deg + 1, field->zero());
    v[(size_t)deg] = c;
    return Poly(field, std::move(v));
}

FqElem Poly::coeff(int i) const {
    if (i < 0 || i >= (int)c_.size()) return field_->zero();
    return c_[(size_t)i];
}

FqElem Poly::leading() const {
    require(!c_.empty(), ErrorKind::InvalidArgument, "zero polynomial has no leading coefficient");
    return c_.back();
}

Poly Poly::operator+(const Poly& o) const {
    check_same(o);
    std::vector<FqElem> r(std::max(c_.size(), o.c_.size()), field_->zero());
    for (size_t i = 0; i < r.size(); ++i) r[i] = coeff((int)i) + o.coeff((int)i);
    return Poly(field_, std::move(r));
}

Poly Poly::operator-() const {
    std::vector<FqElem> r(c_.size(), field_->zero());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
    return Poly(field_, std::move(r));
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::operator*(const Poly& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<FqElem> r(c_.size() + o.c_.size() - 1, field_->zero());
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i].is_zero()) continue;
        for (size_t j = 0; j < o.c_.size(); ++j)
            r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return Poly(field_, std::move(r));
}

Poly Poly::operator*(const FqElem& c) const {
    std::vector<FqElem> r(c_.size(), field_->zero());
    for (size_t i = 0; i < c_.size(); ++i) r[i] = c_[i] * c;
    return Poly(field_, std::move(r));
}

bool Poly::operator==(const Poly& o) const {
    check_same(o);
    if (c_.size() != o.c_.size()) return false;
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != o.c_[i]) return false;
    return true;
}

Poly Poly::pow(uint64_t e) const {
    Poly r = constant(field_, field_->one());
    Poly b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

FqElem Poly::eval(const FqElem& at) const {
    FqElem acc = field_->zero();
    for (size_t i = c_.size(); i-- > 0;) acc = acc * at + c_[i];
    return acc;
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly(field_);
    std::vector<FqElem> r(c_.size() - 1, field_->zero());
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * field_->from_int((long long)i);
    return Poly(field_, std::move(r));
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inv();
}

std::pair<Poly, Poly> Poly::divrem(const Poly& d) const {
    check_same(d);
    require(!d.is_zero(), ErrorKind::DivisionByZero, "polynomial division by zero");
    Poly rem = *this;
    if (degree() < d.degree()) return {Poly(field_), rem};
    std::vector<FqElem> q((size_t)(degree() - d.degree()) + 1, field_->zero());
    FqElem lead_inv = d.leading().inv();
    while (!rem.is_zero() && rem.degree() >= d.degree()) {
        int shift = rem.degree() - d.degree();
        FqElem c = rem.leading() * lead_inv;
        q[(size_t)shift] = c;
        rem = rem - Poly::monomial(field_, c, shift) * d;
    }
    return {Poly(field_, std::move(q)), rem};
}

bool Poly::divisible_by(const Poly& d) const { return divrem(d).second.is_zero(); }

Poly Poly::exact_div(const Poly& d) const {
    auto [q, r] = divrem(d);
    require(r.is_zero(), ErrorKind::InvalidArgument, "inexact polynomial division");
    return q;
}

Poly Poly::gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a.divrem(b).second;
        a = b;
        b = r;
    }
    return a.monic();
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    bool prime_field = field_->m() == 1;
    for (size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << "+";
        first = false;
        std::string cs = c_[i].to_string();
        if (i == 0) {
            os << cs;
            continue;
        }
        if (!c_[i].is_one()) {
            if (prime_field)
                os << cs << "*";
            else
                os << "(" << cs << ")*";
        }
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

} // namespace wittlab
