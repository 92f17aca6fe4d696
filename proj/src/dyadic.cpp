#include "isol/dyadic.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "isol/errors.hpp"

namespace isol {

namespace {

constexpr std::int64_t kExpLimit = std::int64_t(1) << 48;

void check_exp(std::int64_t e) {
    if (e > kExpLimit || e < -kExpLimit)
        throw ResourceError("dyadic exponent out of range");
}

}  // namespace

void Dyadic::normalize() {
    if (mant_ == 0) {
        exp_ = 0;
        return;
    }
    mp_bitcnt_t tz = mpz_scan1(mant_.get_mpz_t(), 0);
    if (tz > 0) {
        mant_ >>= tz;
        exp_ += static_cast<std::int64_t>(tz);
    }
    check_exp(exp_);
}

Dyadic Dyadic::operator-() const {
    Dyadic r;
    r.mant_ = -mant_;
    r.exp_ = exp_;
    return r;
}

Dyadic Dyadic::abs() const {
    return sign() < 0 ? -*this : *this;
}

Dyadic Dyadic::mul_pow2(std::int64_t k) const {
    if (is_zero()) return Dyadic();
    Dyadic r;
    r.mant_ = mant_;
    r.exp_ = exp_ + k;
    check_exp(r.exp_);
    return r;
}

Dyadic operator+(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::int64_t e = std::min(a.exp_, b.exp_);
    check_exp(e);
    mpz_class ma = a.mant_ << static_cast<unsigned long>(a.exp_ - e);
    mpz_class mb = b.mant_ << static_cast<unsigned long>(b.exp_ - e);
    return Dyadic(ma + mb, e);
}

Dyadic operator-(const Dyadic& a, const Dyadic& b) {
    return a + (-b);
}

Dyadic operator*(const Dyadic& a, const Dyadic& b) {
    if (a.is_zero() || b.is_zero()) return Dyadic();
    return Dyadic(a.mant_ * b.mant_, a.exp_ + b.exp_);
}

int Dyadic::cmp(const Dyadic& a, const Dyadic& b) {
    int sa = a.sign(), sb = b.sign();
    if (sa != sb) return sa < sb ? -1 : 1;
    if (sa == 0) return 0;
    // Same nonzero sign: compare magnitudes via log2 windows first.
    std::int64_t la_hi = a.log2_ub(), lb_hi = b.log2_ub();
    if (la_hi < lb_hi - 1 || lb_hi < la_hi - 1) {
        // Windows [l-1, l] are disjoint, magnitude order is decided.
        int mag = la_hi < lb_hi ? -1 : 1;
        return sa > 0 ? mag : -mag;
    }
    std::int64_t e = std::min(a.exp_, b.exp_);
    mpz_class ma = a.mant_ << static_cast<unsigned long>(a.exp_ - e);
    mpz_class mb = b.mant_ << static_cast<unsigned long>(b.exp_ - e);
    return ::cmp(ma, mb) < 0 ? -1 : (ma == mb ? 0 : 1);
}

double Dyadic::to_double() const {
    if (is_zero()) return 0.0;
    // Keep only the top 64 bits of the mantissa for the conversion.
    size_t bits = mpz_sizeinbase(mant_.get_mpz_t(), 2);
    if (bits <= 62) {
        double m = mant_.get_d();
        return std::ldexp(m, static_cast<int>(exp_));
    }
    mpz_class top = mant_ >> static_cast<unsigned long>(bits - 62);
    return std::ldexp(top.get_d(), static_cast<int>(exp_ + static_cast<std::int64_t>(bits) - 62));
}

Dyadic Dyadic::round_down(unsigned bits) const {
    if (is_zero()) return *this;
    size_t have = mpz_sizeinbase(mant_.get_mpz_t(), 2);
    if (have <= bits) return *this;
    unsigned long drop = static_cast<unsigned long>(have - bits);
    mpz_class q;
    mpz_fdiv_q_2exp(q.get_mpz_t(), mant_.get_mpz_t(), drop);  // floor shift
    return Dyadic(q, exp_ + static_cast<std::int64_t>(drop));
}

Dyadic Dyadic::round_up(unsigned bits) const {
    return -((-*this).round_down(bits));
}

std::int64_t Dyadic::log2_ub() const {
    if (is_zero()) return 0;
    return exp_ + static_cast<std::int64_t>(mpz_sizeinbase(mant_.get_mpz_t(), 2));
}

std::string Dyadic::to_string() const {
    std::ostringstream os;
    os << mant_.get_str() << "*2^" << exp_;
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Dyadic& d) {
    return os << d.to_string();
}

}  // namespace isol
