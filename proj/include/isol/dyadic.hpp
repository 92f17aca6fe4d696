#ifndef ISOL_DYADIC_HPP
#define ISOL_DYADIC_HPP

#include <cstdint>
#include <iosfwd>
#include <string>

#include <gmpxx.h>

namespace isol {

// Exact binary rational m * 2^e with arbitrary-precision mantissa.
// Canonical form: mantissa odd, or zero with exponent 0.
// Addition, subtraction, multiplication and halving are exact and total.
class Dyadic {
public:
    Dyadic() : mant_(0), exp_(0) {}
    Dyadic(long v) : mant_(v), exp_(0) { normalize(); }  // NOLINT(google-explicit-constructor)
    Dyadic(mpz_class m, std::int64_t e) : mant_(std::move(m)), exp_(e) { normalize(); }

    const mpz_class& mantissa() const { return mant_; }
    std::int64_t exponent() const { return exp_; }

    bool is_zero() const { return mant_ == 0; }
    int sign() const { return sgn(mant_); }

    Dyadic operator-() const;
    Dyadic abs() const;
    Dyadic half() const { return mul_pow2(-1); }
    Dyadic twice() const { return mul_pow2(1); }
    Dyadic mul_pow2(std::int64_t k) const;
    Dyadic square() const { return *this * *this; }

    friend Dyadic operator+(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator-(const Dyadic& a, const Dyadic& b);
    friend Dyadic operator*(const Dyadic& a, const Dyadic& b);
    Dyadic& operator+=(const Dyadic& o) { *this = *this + o; return *this; }
    Dyadic& operator-=(const Dyadic& o) { *this = *this - o; return *this; }
    Dyadic& operator*=(const Dyadic& o) { *this = *this * o; return *this; }

    // Sign of a-b without materializing huge intermediate shifts when
    // magnitudes differ wildly.
    static int cmp(const Dyadic& a, const Dyadic& b);

    friend bool operator==(const Dyadic& a, const Dyadic& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) != 0; }
    friend bool operator<(const Dyadic& a, const Dyadic& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const Dyadic& a, const Dyadic& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const Dyadic& a, const Dyadic& b) { return cmp(a, b) >= 0; }

    static Dyadic midpoint(const Dyadic& a, const Dyadic& b) { return (a + b).half(); }
    static Dyadic pow2(std::int64_t k) { return Dyadic(1).mul_pow2(k); }
    static Dyadic min(const Dyadic& a, const Dyadic& b) { return a <= b ? a : b; }
    static Dyadic max(const Dyadic& a, const Dyadic& b) { return a >= b ? a : b; }

    // Nearest double (may over/underflow to +-inf/0 for extreme exponents).
    double to_double() const;

    // Round to at most `bits` mantissa bits, toward -inf / +inf.
    Dyadic round_down(unsigned bits) const;
    Dyadic round_up(unsigned bits) const;

    // ceil(log2 |x|); 0 for x == 0 by convention.
    std::int64_t log2_ub() const;

    std::string to_string() const;  // "m*2^e"

private:
    void normalize();

    mpz_class mant_;
    std::int64_t exp_;
};

std::ostream& operator<<(std::ostream& os, const Dyadic& d);

struct DyadicComplex {
    Dyadic re;
    Dyadic im;

    DyadicComplex() = default;
    DyadicComplex(Dyadic r, Dyadic i) : re(std::move(r)), im(std::move(i)) {}

    bool is_real() const { return im.is_zero(); }
    DyadicComplex conj() const { return {re, -im}; }
    Dyadic abs2() const { return re * re + im * im; }

    friend DyadicComplex operator+(const DyadicComplex& a, const DyadicComplex& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend DyadicComplex operator-(const DyadicComplex& a, const DyadicComplex& b) {
        return {a.re - b.re, a.im - b.im};
    }
    friend DyadicComplex operator*(const DyadicComplex& a, const DyadicComplex& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend bool operator==(const DyadicComplex& a, const DyadicComplex& b) {
        return a.re == b.re && a.im == b.im;
    }
};

}  // namespace isol

#endif
