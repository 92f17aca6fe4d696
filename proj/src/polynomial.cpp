#include "isol/polynomial.hpp"

#include <algorithm>
#include <sstream>

#include "isol/errors.hpp"

namespace isol {

void IntPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial::IntPolynomial(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

IntPolynomial IntPolynomial::parse(const std::string& line) {
    std::istringstream is(line);
    std::vector<mpz_class> c;
    std::string tok;
    while (is >> tok) c.emplace_back(tok);
    if (c.empty()) throw DomainError("empty polynomial text");
    return IntPolynomial(std::move(c));
}

std::string IntPolynomial::format() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ' ';
        os << coeffs_[i].get_str();
    }
    return os.str();
}

mpz_class IntPolynomial::height() const {
    mpz_class h = 0;
    for (const auto& c : coeffs_) {
        mpz_class a = ::abs(c);
        if (a > h) h = a;
    }
    return h;
}

mpz_class IntPolynomial::two_norm_sq() const {
    mpz_class s = 0;
    for (const auto& c : coeffs_) s += c * c;
    return s;
}

std::int64_t IntPolynomial::bit_height() const {
    mpz_class h = height();
    if (h == 0) return 0;
    return static_cast<std::int64_t>(mpz_sizeinbase(h.get_mpz_t(), 2));
}

IntPolynomial IntPolynomial::derivative() const {
    if (degree() < 1) return IntPolynomial();
    std::vector<mpz_class> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return IntPolynomial(std::move(d));
}

mpz_class IntPolynomial::content() const {
    mpz_class g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return *this;
    mpz_class g = content();  // positive, so signs are preserved
    std::vector<mpz_class> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] / g;
    return IntPolynomial(std::move(c));
}

Dyadic IntPolynomial::eval(const Dyadic& x) const {
    Dyadic acc;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + Dyadic(coeffs_[i], 0);
    return acc;
}

DyadicComplex IntPolynomial::eval(const DyadicComplex& z) const {
    DyadicComplex acc;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = acc * z;
        acc.re += Dyadic(coeffs_[i], 0);
    }
    return acc;
}

RealEnclosure IntPolynomial::eval_enclosure(const RealEnclosure& x, unsigned prec) const {
    RealEnclosure acc;
    for (size_t i = coeffs_.size(); i-- > 0;)
        acc = enc_add(enc_mul(acc, x, prec), RealEnclosure{Dyadic(coeffs_[i], 0)}, prec);
    return acc;
}

ComplexEnclosure IntPolynomial::eval_enclosure(const ComplexEnclosure& z, unsigned prec) const {
    ComplexEnclosure acc;
    for (size_t i = coeffs_.size(); i-- > 0;) {
        acc = cenc_mul(acc, z, prec);
        acc.re = enc_add(acc.re, RealEnclosure{Dyadic(coeffs_[i], 0)}, prec);
    }
    return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), mpz_class(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
    return a + (-b);
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return IntPolynomial();
    std::vector<mpz_class> c(a.coeffs_.size() + b.coeffs_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.coeffs_.size(); ++i)
        for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
    return scaled(mpz_class(-1));
}

IntPolynomial IntPolynomial::scaled(const mpz_class& k) const {
    std::vector<mpz_class> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] * k;
    return IntPolynomial(std::move(c));
}

void DyadicPolynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

DyadicPolynomial::DyadicPolynomial(std::vector<Dyadic> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
}

Dyadic DyadicPolynomial::eval(const Dyadic& x) const {
    Dyadic acc;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

DyadicPolynomial DyadicPolynomial::derivative() const {
    if (degree() < 1) return DyadicPolynomial();
    std::vector<Dyadic> d(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * Dyadic(static_cast<long>(i));
    return DyadicPolynomial(std::move(d));
}

std::pair<IntPolynomial, std::int64_t> DyadicPolynomial::clear_denominators() const {
    std::int64_t s = 0;
    for (const auto& c : coeffs_)
        if (!c.is_zero() && c.exponent() < -s) s = -c.exponent();
    std::vector<mpz_class> out(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        std::int64_t sh = coeffs_[i].exponent() + s;  // >= 0
        out[i] = coeffs_[i].mantissa() << static_cast<unsigned long>(sh);
    }
    return {IntPolynomial(std::move(out)), s};
}

namespace {

DyadicPolynomial shift_dyadic(std::vector<Dyadic> a, const Dyadic& c) {
    if (a.empty()) return DyadicPolynomial();
    size_t d = a.size() - 1;
    for (size_t i = 0; i < d; ++i)
        for (size_t j = d - 1; j + 1 > i; --j) a[j] += c * a[j + 1];
    return DyadicPolynomial(std::move(a));
}

}  // namespace

DyadicPolynomial taylor_shift(const IntPolynomial& p, const Dyadic& c) {
    std::vector<Dyadic> a(p.coeffs().size());
    for (size_t i = 0; i < a.size(); ++i) a[i] = Dyadic(p.coeffs()[i], 0);
    return shift_dyadic(std::move(a), c);
}

DyadicPolynomial taylor_shift(const DyadicPolynomial& p, const Dyadic& c) {
    return shift_dyadic(p.coeffs(), c);
}

unsigned sign_variations(const std::vector<int>& signs) {
    unsigned v = 0;
    int prev = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++v;
        prev = s;
    }
    return v;
}

unsigned mobius_variation(const IntPolynomial& p, const Dyadic& a, const Dyadic& b) {
    if (!(a < b)) throw DomainError("mobius_variation requires a < b");
    if (p.is_zero()) throw DomainError("mobius_variation of zero polynomial");
    // Under x -> (b x + a)/(x + 1), which maps (0, inf) onto (a, b), the
    // numerator polynomial is sum_i g_i (b-a)^i x^i (x+1)^(d-i) with
    // g(y) = p(a + y). Variations are invariant under the positive scaling
    // that clears the dyadic denominators.
    DyadicPolynomial g = taylor_shift(p, a);
    size_t d = static_cast<size_t>(p.degree());
    Dyadic w = b - a;
    std::vector<Dyadic> r(d + 1);
    Dyadic wp(1);
    for (size_t i = 0; i <= d; ++i) {
        Dyadic gi = (i < g.coeffs().size()) ? g.coeffs()[i] : Dyadic(0);
        Dyadic term = gi * wp;
        if (!term.is_zero()) {
            size_t m = d - i;
            mpz_class binom = 1;
            for (size_t j = 0; j <= m; ++j) {
                r[i + j] += term * Dyadic(binom, 0);
                if (j < m) binom = binom * static_cast<unsigned long>(m - j) / static_cast<unsigned long>(j + 1);
            }
        }
        wp *= w;
    }
    std::vector<int> signs(r.size());
    for (size_t i = 0; i < r.size(); ++i) signs[i] = r[i].sign();
    return sign_variations(signs);
}

namespace {

// lc(g)^(deg f - deg g + 1) * f mod g over Z.
IntPolynomial pseudo_rem(const IntPolynomial& f, const IntPolynomial& g) {
    std::vector<mpz_class> r = f.coeffs();
    const auto& gc = g.coeffs();
    int dg = g.degree();
    const mpz_class& lg = g.leading();
    int k = f.degree() - dg + 1;
    while (static_cast<int>(r.size()) - 1 >= dg && k > 0) {
        int dr = static_cast<int>(r.size()) - 1;
        mpz_class top = r.back();
        for (auto& c : r) c *= lg;
        for (int i = 0; i <= dg; ++i) r[dr - dg + i] -= top * gc[i];
        while (!r.empty() && r.back() == 0) r.pop_back();
        --k;
    }
    while (k-- > 0)
        for (auto& c : r) c *= lg;
    return IntPolynomial(std::move(r));
}

}  // namespace

SturmChain::SturmChain(const IntPolynomial& p) {
    if (p.degree() < 1) throw DomainError("sturm_chain requires degree >= 1");
    polys_.push_back(p.primitive_part());
    polys_.push_back(p.derivative().primitive_part());
    while (polys_.back().degree() >= 1) {
        const IntPolynomial& f = polys_[polys_.size() - 2];
        const IntPolynomial& g = polys_.back();
        IntPolynomial r = pseudo_rem(f, g);
        if (r.is_zero()) break;
        // prem = lc(g)^(delta+1) * rem(f,g); adjust so the stored element is
        // a positive multiple of -rem(f,g), as in the rational chain.
        int delta = f.degree() - g.degree();
        bool flip = (g.leading() < 0) && ((delta + 1) % 2 == 1);
        IntPolynomial next = (-r).primitive_part();
        if (flip) next = -next;
        polys_.push_back(std::move(next));
    }
    if (polys_.back().degree() != 0)
        throw DomainError("sturm_chain requires a square-free polynomial");
}

unsigned SturmChain::variations_at(const Dyadic& x) const {
    std::vector<int> signs(polys_.size());
    for (size_t i = 0; i < polys_.size(); ++i) signs[i] = polys_[i].sign_at(x);
    return sign_variations(signs);
}

unsigned SturmChain::count_roots_halfopen(const Dyadic& a, const Dyadic& b) const {
    if (!(a < b)) throw DomainError("count_roots requires a < b");
    return variations_at(a) - variations_at(b);
}

unsigned SturmChain::count_roots_open(const Dyadic& a, const Dyadic& b) const {
    unsigned n = count_roots_halfopen(a, b);
    if (polys_[0].sign_at(b) == 0) --n;
    return n;
}

IntPolynomial poly_gcd(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    IntPolynomial f = a.primitive_part(), g = b.primitive_part();
    if (f.degree() < g.degree()) std::swap(f, g);
    while (!g.is_zero()) {
        IntPolynomial r = pseudo_rem(f, g).primitive_part();
        f = std::move(g);
        g = std::move(r);
    }
    if (f.leading() < 0) return -f;
    return f;
}

IntPolynomial poly_div_exact(const IntPolynomial& a, const IntPolynomial& b) {
    if (b.is_zero()) throw DomainError("division by zero polynomial");
    if (a.is_zero()) return IntPolynomial();
    int dq = a.degree() - b.degree();
    if (dq < 0) throw DomainError("inexact polynomial division");
    std::vector<mpz_class> r = a.coeffs();
    std::vector<mpz_class> q(static_cast<size_t>(dq) + 1);
    const auto& bc = b.coeffs();
    for (int i = dq; i >= 0; --i) {
        mpz_class c = r[static_cast<size_t>(i + b.degree())];
        if (c % b.leading() != 0) throw DomainError("inexact polynomial division");
        c /= b.leading();
        q[static_cast<size_t>(i)] = c;
        for (size_t j = 0; j < bc.size(); ++j) r[static_cast<size_t>(i) + j] -= c * bc[j];
    }
    for (const auto& c : r)
        if (c != 0) throw DomainError("inexact polynomial division");
    return IntPolynomial(std::move(q));
}

IntPolynomial square_free_part(const IntPolynomial& p) {
    if (p.degree() < 1) return p.primitive_part();
    IntPolynomial g = poly_gcd(p, p.derivative());
    if (g.degree() == 0) return p.primitive_part();
    return poly_div_exact(p.primitive_part(), g).primitive_part();
}

mpz_class resultant(const IntPolynomial& a, const IntPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return 0;
    auto pow_z = [](const mpz_class& base, unsigned long e) {
        mpz_class r;
        mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
        return r;
    };
    if (a.degree() == 0) return pow_z(a.leading(), static_cast<unsigned long>(b.degree()));
    if (b.degree() == 0) return pow_z(b.leading(), static_cast<unsigned long>(a.degree()));

    // Subresultant PRS (Cohen, Alg. 3.3.7).
    IntPolynomial A = a, B = b;
    int s = 1;
    if (A.degree() < B.degree()) {
        if ((A.degree() % 2 == 1) && (B.degree() % 2 == 1)) s = -s;
        std::swap(A, B);
    }
    mpz_class ca = A.content(), cb = B.content();
    A = A.primitive_part();
    B = B.primitive_part();
    mpz_class t = pow_z(ca, static_cast<unsigned long>(B.degree())) *
                  pow_z(cb, static_cast<unsigned long>(A.degree()));
    mpz_class g = 1, h = 1;
    while (true) {
        int delta = A.degree() - B.degree();
        if ((A.degree() % 2 == 1) && (B.degree() % 2 == 1)) s = -s;
        IntPolynomial R = pseudo_rem(A, B);
        A = B;
        mpz_class div = g * pow_z(h, static_cast<unsigned long>(delta));
        std::vector<mpz_class> rc = R.coeffs();
        for (auto& c : rc) c /= div;
        B = IntPolynomial(std::move(rc));
        if (B.is_zero()) return 0;  // common factor of positive degree
        g = A.leading();
        if (delta >= 1) {
            mpz_class gp = pow_z(g, static_cast<unsigned long>(delta));
            h = (delta == 1) ? gp : mpz_class(gp / pow_z(h, static_cast<unsigned long>(delta - 1)));
        }
        if (B.degree() == 0) {
            mpz_class num = pow_z(B.leading(), static_cast<unsigned long>(A.degree()));
            h = (A.degree() == 1) ? num : mpz_class(num / pow_z(h, static_cast<unsigned long>(A.degree() - 1)));
            return s * t * h;
        }
    }
}

mpz_class discriminant(const IntPolynomial& p) {
    if (p.degree() < 1) throw DomainError("discriminant requires degree >= 1");
    mpz_class res = resultant(p, p.derivative());
    mpz_class d = res / p.leading();
    int dd = p.degree();
    if ((static_cast<long>(dd) * (dd - 1) / 2) % 2 == 1) d = -d;
    return d;
}

bool square_free_check(const IntPolynomial& p) {
    if (p.degree() < 1) throw DomainError("square_free_check requires degree >= 1");
    return poly_gcd(p, p.derivative()).degree() == 0;
}

NormsAndBounds norms_and_bounds(const IntPolynomial& p) {
    if (p.degree() < 0) throw DomainError("norms of zero polynomial");
    NormsAndBounds nb;
    nb.two_norm_sq = p.two_norm_sq();
    nb.height = p.height();
    nb.L = p.bit_height();
    nb.root_bound = Dyadic::pow2(nb.L);
    return nb;
}

std::pair<DyadicPolynomial, DyadicPolynomial> line_restriction(
    const IntPolynomial& p, const DyadicComplex& base, const DyadicComplex& dir) {
    // Horner over polynomials in the real line parameter s with complex
    // dyadic coefficients: acc(s) <- acc(s) * (base + dir*s) + c_i.
    std::vector<DyadicComplex> acc;
    for (size_t i = p.coeffs().size(); i-- > 0;) {
        std::vector<DyadicComplex> next(acc.size() + 1);
        for (size_t j = 0; j < acc.size(); ++j) {
            next[j] = next[j] + acc[j] * base;
            next[j + 1] = next[j + 1] + acc[j] * dir;
        }
        next[0].re += Dyadic(p.coeffs()[i], 0);
        acc = std::move(next);
    }
    std::vector<Dyadic> re(acc.size()), im(acc.size());
    for (size_t i = 0; i < acc.size(); ++i) {
        re[i] = acc[i].re;
        im[i] = acc[i].im;
    }
    return {DyadicPolynomial(std::move(re)), DyadicPolynomial(std::move(im))};
}

}  // namespace isol
