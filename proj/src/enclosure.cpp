#include "isol/enclosure.hpp"

#include <mpfr.h>

#include <algorithm>

#include "isol/errors.hpp"

namespace isol {

namespace {

// RAII mpfr_t at a fixed precision.
class Mpf {
public:
    explicit Mpf(unsigned prec) { mpfr_init2(x_, std::max(prec, 2u)); }
    ~Mpf() { mpfr_clear(x_); }
    Mpf(const Mpf&) = delete;
    Mpf& operator=(const Mpf&) = delete;
    mpfr_ptr get() { return x_; }

private:
    mpfr_t x_;
};

// Exact: a dyadic always fits when the precision covers its mantissa.
void set_from_dyadic(mpfr_ptr out, const Dyadic& d) {
    mpfr_set_prec(out, std::max<mpfr_prec_t>(2, static_cast<mpfr_prec_t>(
        mpz_sizeinbase(d.mantissa().get_mpz_t(), 2))));
    mpfr_set_z(out, d.mantissa().get_mpz_t(), MPFR_RNDN);
    mpfr_mul_2si(out, out, static_cast<long>(d.exponent()), MPFR_RNDN);
}

Dyadic dyadic_from_mpfr(mpfr_srcptr x) {
    if (mpfr_zero_p(x)) return Dyadic();
    if (!mpfr_number_p(x)) throw ResourceError("mpfr overflow in enclosure op");
    mpz_class m;
    mpfr_exp_t e = mpfr_get_z_2exp(m.get_mpz_t(), x);
    return Dyadic(m, static_cast<std::int64_t>(e));
}

using Unary = int (*)(mpfr_ptr, mpfr_srcptr, mpfr_rnd_t);

Dyadic unary_rounded(Unary f, const Dyadic& x, unsigned prec, mpfr_rnd_t rnd) {
    Mpf in(8), out(prec);
    set_from_dyadic(in.get(), x);
    f(out.get(), in.get(), rnd);
    return dyadic_from_mpfr(out.get());
}

Dyadic div_rounded(const Dyadic& a, const Dyadic& b, unsigned prec, mpfr_rnd_t rnd) {
    Mpf fa(8), fb(8), out(prec);
    set_from_dyadic(fa.get(), a);
    set_from_dyadic(fb.get(), b);
    mpfr_div(out.get(), fa.get(), fb.get(), rnd);
    return dyadic_from_mpfr(out.get());
}

}  // namespace

RealEnclosure::RealEnclosure(Dyadic lo, Dyadic hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    if (lo_ > hi_) throw DomainError("enclosure bounds out of order");
}

RealEnclosure RealEnclosure::round(unsigned prec) const {
    return RealEnclosure(lo_.round_down(prec), hi_.round_up(prec));
}

RealEnclosure RealEnclosure::abs() const {
    if (lo_.sign() >= 0) return *this;
    if (hi_.sign() <= 0) return -*this;
    return RealEnclosure(Dyadic(0), Dyadic::max(-lo_, hi_));
}

RealEnclosure RealEnclosure::hull(const RealEnclosure& a, const RealEnclosure& b) {
    return RealEnclosure(Dyadic::min(a.lo_, b.lo_), Dyadic::max(a.hi_, b.hi_));
}

RealEnclosure RealEnclosure::intersect(const RealEnclosure& a, const RealEnclosure& b) {
    Dyadic lo = Dyadic::max(a.lo_, b.lo_);
    Dyadic hi = Dyadic::min(a.hi_, b.hi_);
    if (lo > hi) throw DomainError("empty enclosure intersection");
    return RealEnclosure(lo, hi);
}

RealEnclosure enc_add(const RealEnclosure& a, const RealEnclosure& b, unsigned prec) {
    return RealEnclosure((a.lo() + b.lo()).round_down(prec), (a.hi() + b.hi()).round_up(prec));
}

RealEnclosure enc_sub(const RealEnclosure& a, const RealEnclosure& b, unsigned prec) {
    return RealEnclosure((a.lo() - b.hi()).round_down(prec), (a.hi() - b.lo()).round_up(prec));
}

RealEnclosure enc_mul(const RealEnclosure& a, const RealEnclosure& b, unsigned prec) {
    Dyadic c[4] = {a.lo() * b.lo(), a.lo() * b.hi(), a.hi() * b.lo(), a.hi() * b.hi()};
    Dyadic lo = c[0], hi = c[0];
    for (int i = 1; i < 4; ++i) {
        if (c[i] < lo) lo = c[i];
        if (c[i] > hi) hi = c[i];
    }
    return RealEnclosure(lo.round_down(prec), hi.round_up(prec));
}

RealEnclosure enc_square(const RealEnclosure& a, unsigned prec) {
    RealEnclosure m = a.abs();
    return RealEnclosure((m.lo() * m.lo()).round_down(prec), (m.hi() * m.hi()).round_up(prec));
}

RealEnclosure enc_div(const RealEnclosure& a, const RealEnclosure& b, unsigned prec) {
    if (b.contains_zero()) throw DomainError("division by enclosure containing zero");
    Dyadic lo, hi;
    bool first = true;
    for (const Dyadic* n : {&a.lo(), &a.hi()}) {
        for (const Dyadic* d : {&b.lo(), &b.hi()}) {
            Dyadic down = div_rounded(*n, *d, prec, MPFR_RNDD);
            Dyadic up = div_rounded(*n, *d, prec, MPFR_RNDU);
            if (first) {
                lo = down;
                hi = up;
                first = false;
            } else {
                if (down < lo) lo = down;
                if (up > hi) hi = up;
            }
        }
    }
    return RealEnclosure(lo, hi);
}

RealEnclosure enc_recip(const RealEnclosure& a, unsigned prec) {
    return enc_div(RealEnclosure(Dyadic(1)), a, prec);
}

RealEnclosure enc_sqrt(const RealEnclosure& a, unsigned prec) {
    if (a.hi().sign() < 0) throw DomainError("sqrt of negative enclosure");
    Dyadic lo = a.lo().sign() < 0 ? Dyadic() : unary_rounded(mpfr_sqrt, a.lo(), prec, MPFR_RNDD);
    Dyadic hi = unary_rounded(mpfr_sqrt, a.hi(), prec, MPFR_RNDU);
    if (lo.sign() < 0) lo = Dyadic();  // sqrt rounding never goes negative, keep invariant anyway
    return RealEnclosure(lo, hi);
}

RealEnclosure enc_ln(const RealEnclosure& a, unsigned prec) {
    if (a.lo().sign() <= 0) throw DomainError("ln of enclosure reaching zero");
    return RealEnclosure(unary_rounded(mpfr_log, a.lo(), prec, MPFR_RNDD),
                         unary_rounded(mpfr_log, a.hi(), prec, MPFR_RNDU));
}

RealEnclosure enc_log2(const RealEnclosure& a, unsigned prec) {
    if (a.lo().sign() <= 0) throw DomainError("log2 of enclosure reaching zero");
    return RealEnclosure(unary_rounded(mpfr_log2, a.lo(), prec, MPFR_RNDD),
                         unary_rounded(mpfr_log2, a.hi(), prec, MPFR_RNDU));
}

RealEnclosure enc_asinh(const RealEnclosure& a, unsigned prec) {
    return RealEnclosure(unary_rounded(mpfr_asinh, a.lo(), prec, MPFR_RNDD),
                         unary_rounded(mpfr_asinh, a.hi(), prec, MPFR_RNDU));
}

RealEnclosure enc_pi(unsigned prec) {
    Mpf lo(prec), hi(prec);
    mpfr_const_pi(lo.get(), MPFR_RNDD);
    mpfr_const_pi(hi.get(), MPFR_RNDU);
    return RealEnclosure(dyadic_from_mpfr(lo.get()), dyadic_from_mpfr(hi.get()));
}

RealEnclosure enc_ln2(unsigned prec) {
    Mpf lo(prec), hi(prec);
    mpfr_const_log2(lo.get(), MPFR_RNDD);
    mpfr_const_log2(hi.get(), MPFR_RNDU);
    return RealEnclosure(dyadic_from_mpfr(lo.get()), dyadic_from_mpfr(hi.get()));
}

RealEnclosure enc_sqrt3(unsigned prec) {
    return enc_sqrt(RealEnclosure(Dyadic(3)), prec);
}

RealEnclosure enc_pow(const RealEnclosure& a, unsigned n, unsigned prec) {
    RealEnclosure acc{Dyadic(1)};
    RealEnclosure base = a;
    while (n > 0) {
        if (n & 1u) acc = enc_mul(acc, base, prec);
        base = enc_square(base, prec);
        n >>= 1u;
    }
    return acc;
}

Dyadic dyadic_div_approx(const Dyadic& a, const Dyadic& b, unsigned prec) {
    return div_rounded(a, b, prec, MPFR_RNDN);
}

ComplexEnclosure cenc_add(const ComplexEnclosure& a, const ComplexEnclosure& b, unsigned prec) {
    return {enc_add(a.re, b.re, prec), enc_add(a.im, b.im, prec)};
}

ComplexEnclosure cenc_sub(const ComplexEnclosure& a, const ComplexEnclosure& b, unsigned prec) {
    return {enc_sub(a.re, b.re, prec), enc_sub(a.im, b.im, prec)};
}

ComplexEnclosure cenc_mul(const ComplexEnclosure& a, const ComplexEnclosure& b, unsigned prec) {
    return {enc_sub(enc_mul(a.re, b.re, prec), enc_mul(a.im, b.im, prec), prec),
            enc_add(enc_mul(a.re, b.im, prec), enc_mul(a.im, b.re, prec), prec)};
}

ComplexEnclosure cenc_div(const ComplexEnclosure& a, const ComplexEnclosure& b, unsigned prec) {
    RealEnclosure n = cenc_abs2(b, prec);
    if (n.contains_zero()) throw DomainError("complex division by enclosure containing zero");
    ComplexEnclosure num = cenc_mul(a, b.conj(), prec);
    return {enc_div(num.re, n, prec), enc_div(num.im, n, prec)};
}

RealEnclosure cenc_abs2(const ComplexEnclosure& a, unsigned prec) {
    return enc_add(enc_square(a.re, prec), enc_square(a.im, prec), prec);
}

RealEnclosure cenc_abs(const ComplexEnclosure& a, unsigned prec) {
    return enc_sqrt(cenc_abs2(a, prec), prec);
}

ComplexEnclosure cenc_intersect(const ComplexEnclosure& a, const ComplexEnclosure& b) {
    return {RealEnclosure::intersect(a.re, b.re), RealEnclosure::intersect(a.im, b.im)};
}

}  // namespace isol
