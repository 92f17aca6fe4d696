#ifndef ISOL_POLYNOMIAL_HPP
#define ISOL_POLYNOMIAL_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "isol/dyadic.hpp"
#include "isol/enclosure.hpp"

namespace isol {

// Univariate polynomial with exact integer coefficients, ascending order.
// The zero polynomial has degree() == -1 and is rejected by predicate paths.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<mpz_class> coeffs);

    // Text format: ascending coefficients as decimal integers, e.g. "-2 0 1".
    static IntPolynomial parse(const std::string& line);
    std::string format() const;

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& operator[](size_t i) const { return coeffs_[i]; }
    const mpz_class& leading() const { return coeffs_.back(); }

    mpz_class height() const;
    mpz_class two_norm_sq() const;
    // Smallest L with height < 2^L; recomputed, never cached.
    std::int64_t bit_height() const;

    IntPolynomial derivative() const;
    mpz_class content() const;            // nonnegative; 0 only for the zero polynomial
    IntPolynomial primitive_part() const; // sign-preserving

    Dyadic eval(const Dyadic& x) const;
    DyadicComplex eval(const DyadicComplex& z) const;
    int sign_at(const Dyadic& x) const { return eval(x).sign(); }

    RealEnclosure eval_enclosure(const RealEnclosure& x, unsigned prec) const;
    ComplexEnclosure eval_enclosure(const ComplexEnclosure& z, unsigned prec) const;

    friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
    friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
    IntPolynomial operator-() const;
    IntPolynomial scaled(const mpz_class& k) const;

    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void trim();
    std::vector<mpz_class> coeffs_;
};

// Polynomial with exact dyadic coefficients (integer polynomials composed
// with dyadic affine maps land here).
class DyadicPolynomial {
public:
    DyadicPolynomial() = default;
    explicit DyadicPolynomial(std::vector<Dyadic> coeffs);

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Dyadic>& coeffs() const { return coeffs_; }
    const Dyadic& operator[](size_t i) const { return coeffs_[i]; }

    Dyadic eval(const Dyadic& x) const;
    DyadicPolynomial derivative() const;

    // (q, s) with q integer and this == q * 2^-s.
    std::pair<IntPolynomial, std::int64_t> clear_denominators() const;

private:
    void trim();
    std::vector<Dyadic> coeffs_;
};

// q(x) = p(x + c), exact.
DyadicPolynomial taylor_shift(const IntPolynomial& p, const Dyadic& c);
DyadicPolynomial taylor_shift(const DyadicPolynomial& p, const Dyadic& c);

// Adjacent sign flips after deleting zeros.
unsigned sign_variations(const std::vector<int>& signs);

// Descartes count for the open interval (a,b): sign variations of the
// Moebius-transformed coefficient sequence, computed exactly over scaled
// integers. Requires a < b.
unsigned mobius_variation(const IntPolynomial& p, const Dyadic& a, const Dyadic& b);

// Signed-remainder sequence p0=p, p1=p', p_i = -rem(p_{i-2}, p_{i-1}),
// realized over the integers by primitive pseudo-remainders whose signs
// match the rational chain pointwise.
class SturmChain {
public:
    explicit SturmChain(const IntPolynomial& p);

    const std::vector<IntPolynomial>& polys() const { return polys_; }
    unsigned variations_at(const Dyadic& x) const;

    // Exact count of distinct real roots in (a, b]. Requires a < b.
    unsigned count_roots_halfopen(const Dyadic& a, const Dyadic& b) const;
    // Exact count in the open interval (a, b).
    unsigned count_roots_open(const Dyadic& a, const Dyadic& b) const;

private:
    std::vector<IntPolynomial> polys_;
};

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b);
// Exact quotient a / b; throws DomainError if b does not divide a over Z.
IntPolynomial poly_div_exact(const IntPolynomial& a, const IntPolynomial& b);
// Primitive polynomial with the same distinct roots as p.
IntPolynomial square_free_part(const IntPolynomial& p);
mpz_class resultant(const IntPolynomial& a, const IntPolynomial& b);
// Subresultant-based discriminant with the standard normalization
// (-1)^(d(d-1)/2) * Res(p, p') / lead(p).
mpz_class discriminant(const IntPolynomial& p);
// True iff gcd(p, p') is constant. Requires degree >= 1.
bool square_free_check(const IntPolynomial& p);

struct NormsAndBounds {
    mpz_class two_norm_sq;
    mpz_class height;
    std::int64_t L = 0;
    Dyadic root_bound;  // 2^L
};
NormsAndBounds norms_and_bounds(const IntPolynomial& p);

// Real and imaginary parts of p restricted to the line base + dir*s
// as polynomials in the real parameter s, exact.
std::pair<DyadicPolynomial, DyadicPolynomial> line_restriction(
    const IntPolynomial& p, const DyadicComplex& base, const DyadicComplex& dir);

}  // namespace isol

#endif
