#include "wittlab/ring.hpp"

#include <algorithm>
#include <sstream>

namespace wittlab {

CoordinateRing::CoordinateRing(FqPtr field, Poly h, std::vector<FqElem> roots, Mode mode)
    : field_(std::move(field)), h_(std::move(h)), roots_(std::move(roots)), mode_(mode) {}

std::shared_ptr<const CoordinateRing> CoordinateRing::make(FqPtr field, Poly h, Mode mode) {
    require(field != nullptr, ErrorKind::InvalidArgument, "null field");
    require(h.field()->same_field(*field), ErrorKind::FieldMismatch, "h over wrong field");
    require(!h.is_zero(), ErrorKind::InvalidArgument, "h must be nonzero");
    h = h.monic();
    std::vector<FqElem> roots;
    if (h.degree() > 0) {
        for (uint64_t i = 0; i < field->q(); ++i) {
            FqElem r = field->element(i);
            if (h.eval(r).is_zero()) roots.push_back(r);
        }
        // split and squarefree together say h is exactly the product of x - r_i
        // over distinct rational roots
        Poly prod = Poly::constant(field, field->one());
        Poly x = Poly::x(field);
        for (const auto& r : roots) prod = prod * (x - Poly::constant(field, r));
        require((int)roots.size() == h.degree() && prod == h, ErrorKind::InvalidArgument,
                "h must be squarefree and split over F_q");
        std::sort(roots.begin(), roots.end(),
                  [](const FqElem& a, const FqElem& b) { return a.index() < b.index(); });
    }
    return std::shared_ptr<const CoordinateRing>(
        new CoordinateRing(std::move(field), std::move(h), std::move(roots), mode));
}

bool CoordinateRing::same_ring(const CoordinateRing& o) const {
    if (this == &o) return true;
    return field_->same_field(*o.field_) && h_ == o.h_;
}

RingElem CoordinateRing::zero() const { return RingElem(shared_from_this(), Poly(field_), 0); }

RingElem CoordinateRing::one() const { return from_int(1); }

RingElem CoordinateRing::from_int(long long v) const {
    return RingElem(shared_from_this(), Poly::constant(field_, field_->from_int(v)), 0);
}

RingElem CoordinateRing::from_constant(const FqElem& c) const {
    return RingElem(shared_from_this(), Poly::constant(field_, c), 0);
}

RingElem CoordinateRing::from_poly(const Poly& f) const {
    return RingElem(shared_from_this(), f, 0);
}

RingElem CoordinateRing::x() const { return RingElem(shared_from_this(), Poly::x(field_), 0); }

RingElem CoordinateRing::x_pow(int j) const {
    return RingElem(shared_from_this(), Poly::monomial(field_, field_->one(), j), 0);
}

RingElem CoordinateRing::inv_linear_pow(size_t root_idx, int j) const {
    require(root_idx < roots_.size(), ErrorKind::InvalidArgument, "root index out of range");
    require(j >= 1, ErrorKind::InvalidArgument, "pole order must be >= 1");
    // (x - r_i)^{-j} = g_i^j / h^j with g_i = h / (x - r_i)
    Poly lin = Poly::x(field_) - Poly::constant(field_, roots_[root_idx]);
    Poly g = h_.exact_div(lin);
    return RingElem(shared_from_this(), g.pow((uint64_t)j), j);
}

std::string CoordinateRing::describe() const {
    std::ostringstream os;
    os << field_->describe() << "[x,1/" << (h_.degree() <= 0 ? "1" : h_.to_string()) << "]";
    return os.str();
}

RingElem::RingElem(RingPtr ring, Poly num, int k)
    : ring_(std::move(ring)), num_(std::move(num)), k_(k) {
    require(k_ >= 0, ErrorKind::InvalidArgument, "denominator exponent must be >= 0");
    require(num_.field()->same_field(*ring_->field()), ErrorKind::FieldMismatch,
            "numerator over wrong field");
    normalize();
}

void RingElem::normalize() {
    if (num_.is_zero()) {
        k_ = 0;
        return;
    }
    if (ring_->h().degree() <= 0) {
        k_ = 0; // affine line: h = 1
        return;
    }
    while (k_ > 0 && num_.divisible_by(ring_->h())) {
        num_ = num_.exact_div(ring_->h());
        --k_;
    }
}

void RingElem::check_same(const RingElem& o) const {
    require(ring_ && o.ring_ && ring_->same_ring(*o.ring_), ErrorKind::RingMismatch,
            "elements from different coordinate rings");
}

FqElem RingElem::constant_value() const {
    require(is_constant(), ErrorKind::InvalidArgument, "element is not constant");
    return num_.is_zero() ? ring_->field()->zero() : num_.coeff(0);
}

RingElem RingElem::operator+(const RingElem& o) const {
    check_same(o);
    int k = std::max(k_, o.k_);
    Poly a = num_ * ring_->h().pow((uint64_t)(k - k_));
    Poly b = o.num_ * ring_->h().pow((uint64_t)(k - o.k_));
    return RingElem(ring_, a + b, k);
}

RingElem RingElem::operator-() const { return RingElem(ring_, -num_, k_); }

RingElem RingElem::operator-(const RingElem& o) const { return *this + (-o); }

RingElem RingElem::operator*(const RingElem& o) const {
    check_same(o);
    return RingElem(ring_, num_ * o.num_, k_ + o.k_);
}

bool RingElem::operator==(const RingElem& o) const {
    check_same(o);
    return k_ == o.k_ && num_ == o.num_;
}

RingElem RingElem::pow(uint64_t e) const {
    RingElem r = ring_->one();
    RingElem b = *this;
    while (e) {
        if (e & 1) r = r * b;
        b = b * b;
        e >>= 1;
    }
    return r;
}

RingElem RingElem::inv() const {
    require(!is_zero(), ErrorKind::DivisionByZero, "inversion of zero");
    const auto& field = ring_->field();
    Poly x = Poly::x(field);
    Poly residual = num_;
    std::vector<int> mult(ring_->roots().size(), 0);
    for (size_t i = 0; i < ring_->roots().size(); ++i) {
        Poly lin = x - Poly::constant(field, ring_->roots()[i]);
        while (residual.divisible_by(lin)) {
            residual = residual.exact_div(lin);
            ++mult[i];
        }
    }
    require(residual.degree() == 0, ErrorKind::InvalidArgument,
            "element is not a unit of the coordinate ring");
    // 1 / (c * prod (x-r_i)^{a_i} / h^k) = h^k * prod (x-r_i)^{M-a_i} / (c * h^M)
    int M = 0;
    for (int a : mult) M = std::max(M, a);
    Poly numerator = ring_->h().pow((uint64_t)k_) * Poly::constant(field, residual.coeff(0).inv());
    for (size_t i = 0; i < mult.size(); ++i) {
        Poly lin = x - Poly::constant(field, ring_->roots()[i]);
        numerator = numerator * lin.pow((uint64_t)(M - mult[i]));
    }
    return RingElem(ring_, numerator, M);
}

bool RingElem::compatible_with(const RingElem& o) const {
    return ring_ && o.ring_ && ring_->same_ring(*o.ring_);
}

std::string RingElem::to_string() const {
    if (k_ == 0) return num_.to_string();
    std::ostringstream os;
    os << "(" << num_.to_string() << ")/(" << ring_->h().to_string() << ")";
    if (k_ > 1) os << "^" << k_;
    return os.str();
}

} // namespace wittlab
