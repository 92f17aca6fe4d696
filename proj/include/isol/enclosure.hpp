#ifndef ISOL_ENCLOSURE_HPP
#define ISOL_ENCLOSURE_HPP

#include "isol/dyadic.hpp"

namespace isol {

// Closed interval [lo, hi] of exact dyadics. Arithmetic rounds lo down and
// hi up at a caller-supplied working precision (binary digits), so every
// result encloses the exact pointwise outcomes.
class RealEnclosure {
public:
    static constexpr unsigned kDefaultPrec = 128;

    RealEnclosure() = default;  // [0,0]
    RealEnclosure(Dyadic point) : lo_(point), hi_(std::move(point)) {}  // NOLINT
    RealEnclosure(Dyadic lo, Dyadic hi);

    const Dyadic& lo() const { return lo_; }
    const Dyadic& hi() const { return hi_; }

    Dyadic width() const { return hi_ - lo_; }
    Dyadic mid() const { return Dyadic::midpoint(lo_, hi_); }
    bool is_point() const { return lo_ == hi_; }
    bool contains(const Dyadic& x) const { return lo_ <= x && x <= hi_; }
    bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
    bool contains(const RealEnclosure& o) const { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool strictly_contains(const RealEnclosure& o) const { return lo_ < o.lo_ && o.hi_ < hi_; }
    bool disjoint(const RealEnclosure& o) const { return hi_ < o.lo_ || o.hi_ < lo_; }

    // Definite order: true only when every point of *this relates to every
    // point of o as stated.
    bool definitely_lt(const RealEnclosure& o) const { return hi_ < o.lo_; }
    bool definitely_le(const RealEnclosure& o) const { return hi_ <= o.lo_; }

    int sign_lb() const { return lo_.sign(); }
    int sign_ub() const { return hi_.sign(); }

    RealEnclosure round(unsigned prec) const;
    RealEnclosure abs() const;
    RealEnclosure operator-() const { return RealEnclosure(-hi_, -lo_); }

    static RealEnclosure hull(const RealEnclosure& a, const RealEnclosure& b);
    static RealEnclosure intersect(const RealEnclosure& a, const RealEnclosure& b);  // throws DomainError if empty

private:
    Dyadic lo_, hi_;
};

RealEnclosure enc_add(const RealEnclosure& a, const RealEnclosure& b, unsigned prec = RealEnclosure::kDefaultPrec);
RealEnclosure enc_sub(const RealEnclosure& a, const RealEnclosure& b, unsigned prec = RealEnclosure::kDefaultPrec);
RealEnclosure enc_mul(const RealEnclosure& a, const RealEnclosure& b, unsigned prec = RealEnclosure::kDefaultPrec);
RealEnclosure enc_div(const RealEnclosure& a, const RealEnclosure& b, unsigned prec = RealEnclosure::kDefaultPrec);
RealEnclosure enc_square(const RealEnclosure& a, unsigned prec = RealEnclosure::kDefaultPrec);

// 1/x, x not containing zero.
RealEnclosure enc_recip(const RealEnclosure& a, unsigned prec = RealEnclosure::kDefaultPrec);

// sqrt over [max(lo,0), hi]; domain error if hi < 0.
RealEnclosure enc_sqrt(const RealEnclosure& a, unsigned prec = RealEnclosure::kDefaultPrec);
RealEnclosure enc_ln(const RealEnclosure& a, unsigned prec = RealEnclosure::kDefaultPrec);
RealEnclosure enc_log2(const RealEnclosure& a, unsigned prec = RealEnclosure::kDefaultPrec);
RealEnclosure enc_asinh(const RealEnclosure& a, unsigned prec = RealEnclosure::kDefaultPrec);
RealEnclosure enc_pi(unsigned prec = RealEnclosure::kDefaultPrec);
RealEnclosure enc_ln2(unsigned prec = RealEnclosure::kDefaultPrec);
RealEnclosure enc_sqrt3(unsigned prec = RealEnclosure::kDefaultPrec);

// Integer power by repeated squaring (n >= 0).
RealEnclosure enc_pow(const RealEnclosure& a, unsigned n, unsigned prec = RealEnclosure::kDefaultPrec);

// Round-to-nearest quotient for heuristic iteration; not enclosure-sound.
Dyadic dyadic_div_approx(const Dyadic& a, const Dyadic& b, unsigned prec);

// Axis-aligned rectangle in C.
struct ComplexEnclosure {
    RealEnclosure re;
    RealEnclosure im;

    ComplexEnclosure() = default;
    ComplexEnclosure(RealEnclosure r, RealEnclosure i) : re(std::move(r)), im(std::move(i)) {}
    ComplexEnclosure(const DyadicComplex& z) : re(z.re), im(z.im) {}  // NOLINT

    DyadicComplex mid() const { return {re.mid(), im.mid()}; }
    bool contains(const DyadicComplex& z) const { return re.contains(z.re) && im.contains(z.im); }
    bool contains(const ComplexEnclosure& o) const { return re.contains(o.re) && im.contains(o.im); }
    bool strictly_contains(const ComplexEnclosure& o) const {
        return re.strictly_contains(o.re) && im.strictly_contains(o.im);
    }
    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    ComplexEnclosure conj() const { return {re, -im}; }
};

ComplexEnclosure cenc_add(const ComplexEnclosure& a, const ComplexEnclosure& b, unsigned prec = RealEnclosure::kDefaultPrec);
ComplexEnclosure cenc_sub(const ComplexEnclosure& a, const ComplexEnclosure& b, unsigned prec = RealEnclosure::kDefaultPrec);
ComplexEnclosure cenc_mul(const ComplexEnclosure& a, const ComplexEnclosure& b, unsigned prec = RealEnclosure::kDefaultPrec);
ComplexEnclosure cenc_div(const ComplexEnclosure& a, const ComplexEnclosure& b, unsigned prec = RealEnclosure::kDefaultPrec);
RealEnclosure cenc_abs2(const ComplexEnclosure& a, unsigned prec = RealEnclosure::kDefaultPrec);
RealEnclosure cenc_abs(const ComplexEnclosure& a, unsigned prec = RealEnclosure::kDefaultPrec);
ComplexEnclosure cenc_intersect(const ComplexEnclosure& a, const ComplexEnclosure& b);

}  // namespace isol

#endif
