#include "isol/roots.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <optional>

#include "isol/errors.hpp"

namespace isol {

namespace {

constexpr unsigned kMaxPrec = 1u << 17;
constexpr int kMaxRounds = 200;

// Rounded complex arithmetic for the Aberth iteration. Heuristic only: the
// certification below is what makes the results rigorous.
struct AC {
    Dyadic re, im;
};

AC ac_round(const AC& z, unsigned prec) {
    return {z.re.round_down(prec), z.im.round_down(prec)};
}

AC ac_add(const AC& a, const AC& b, unsigned prec) {
    return ac_round({a.re + b.re, a.im + b.im}, prec);
}

AC ac_sub(const AC& a, const AC& b, unsigned prec) {
    return ac_round({a.re - b.re, a.im - b.im}, prec);
}

AC ac_mul(const AC& a, const AC& b, unsigned prec) {
    return ac_round({a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}, prec);
}

AC ac_div(const AC& a, const AC& b, unsigned prec) {
    Dyadic n = b.re * b.re + b.im * b.im;
    if (n.is_zero()) return {Dyadic(0), Dyadic(0)};
    return {dyadic_div_approx(a.re * b.re + a.im * b.im, n, prec),
            dyadic_div_approx(a.im * b.re - a.re * b.im, n, prec)};
}

double ac_abs2(const AC& z) {
    return (z.re * z.re + z.im * z.im).to_double();
}

struct Rec {
    bool is_real = false;
    bool exact = false;
    // real non-exact roots: the open isolating interval (rlo, rhi)
    Dyadic rlo, rhi;
    int sign_lo = 0;
    ComplexEnclosure box;
    int partner = -1;
    unsigned prec = 256;
};

Dyadic box_radius(const ComplexEnclosure& b) {
    return Dyadic::max(b.re.width(), b.im.width()).half();
}

ComplexEnclosure real_box(const Dyadic& lo, const Dyadic& hi) {
    return {RealEnclosure{lo, hi}, RealEnclosure{Dyadic(0)}};
}

// Exact dyadic range of |u - v|^2 for u in a, v in b.
RealEnclosure box_dist2(const ComplexEnclosure& a, const ComplexEnclosure& b) {
    auto axis = [](const RealEnclosure& x, const RealEnclosure& y) {
        Dyadic lo = x.lo() - y.hi();
        Dyadic hi = x.hi() - y.lo();
        Dyadic mlo(0);
        if (lo.sign() > 0)
            mlo = lo * lo;
        else if (hi.sign() < 0)
            mlo = hi * hi;
        Dyadic mhi = Dyadic::max(lo * lo, hi * hi);
        return RealEnclosure(mlo, mhi);
    };
    RealEnclosure dx = axis(a.re, b.re);
    RealEnclosure dy = axis(a.im, b.im);
    return RealEnclosure(dx.lo() + dy.lo(), dx.hi() + dy.hi());
}

}  // namespace

struct RootSet::Impl {
    IntPolynomial p;
    IntPolynomial dp;
    SturmChain chain;
    std::vector<Rec> recs;
    size_t realk = 0;
    mutable std::mutex mu;

    explicit Impl(const IntPolynomial& poly) : p(poly), dp(poly.derivative()), chain(poly) {}

    // ---- real roots -------------------------------------------------------

    unsigned count_open(const Dyadic& a, const Dyadic& b) const {
        unsigned n = chain.count_roots_halfopen(a, b);
        if (p.sign_at(b) == 0) --n;
        return n;
    }

    void isolate_real(const Dyadic& eps) {
        std::int64_t L = p.bit_height();
        Dyadic B = Dyadic::pow2(L);
        struct Item {
            Dyadic a, b;
            unsigned cnt;
        };
        std::vector<Item> work{{-B, B, count_open(-B, B)}};
        int guard = 0;
        while (!work.empty()) {
            if (++guard > 200000) throw ResourceError("real root isolation did not converge");
            Item it = work.back();
            work.pop_back();
            if (it.cnt == 0) continue;
            if (it.cnt == 1) {
                Rec r;
                r.is_real = true;
                r.rlo = it.a;
                r.rhi = it.b;
                r.sign_lo = p.sign_at(it.a);
                refine_real_interval(r, eps);
                recs.push_back(std::move(r));
                continue;
            }
            Dyadic m = Dyadic::midpoint(it.a, it.b);
            if (p.sign_at(m) == 0) {
                Rec r;
                r.is_real = true;
                r.exact = true;
                r.rlo = r.rhi = m;
                r.box = real_box(m, m);
                recs.push_back(std::move(r));
            }
            work.push_back({it.a, m, count_open(it.a, m)});
            work.push_back({m, it.b, count_open(m, it.b)});
        }
        std::sort(recs.begin(), recs.end(),
                  [](const Rec& x, const Rec& y) { return x.rlo < y.rlo; });
        realk = recs.size();
    }

    // Bisect the isolating interval, converting to an exact record when a
    // midpoint hits the root.
    void refine_real_interval(Rec& r, const Dyadic& eps) const {
        if (r.exact) return;
        if (r.sign_lo == 0) throw ResourceError("isolating interval endpoint is a root");
        while (r.rhi - r.rlo > eps.twice()) {
            Dyadic m = Dyadic::midpoint(r.rlo, r.rhi);
            int s = p.sign_at(m);
            if (s == 0) {
                r.exact = true;
                r.rlo = r.rhi = m;
                break;
            }
            if (s == r.sign_lo)
                r.rlo = m;
            else
                r.rhi = m;
        }
        r.box = real_box(r.rlo, r.rhi);
    }

    // ---- complex roots ----------------------------------------------------

    void find_complex(const Dyadic& eps) {
        size_t d = static_cast<size_t>(p.degree());
        size_t m2 = d - realk;
        if (m2 == 0) return;
        for (unsigned prec = 192; prec <= kMaxPrec; prec *= 2) {
            std::vector<Rec> out;
            if (try_complex(prec, eps, out)) {
                for (auto& r : out) recs.push_back(std::move(r));
                return;
            }
        }
        throw ResourceError("complex root certification failed at maximal precision");
    }

    bool try_complex(unsigned prec, const Dyadic& eps, std::vector<Rec>& out) const {
        size_t d = static_cast<size_t>(p.degree());
        std::vector<AC> z = aberth(prec);
        if (z.empty()) return false;
        // Discard the realk approximations closest to the real axis.
        std::vector<size_t> idx(d);
        for (size_t i = 0; i < d; ++i) idx[i] = i;
        std::sort(idx.begin(), idx.end(), [&](size_t a, size_t b) {
            return (z[a].im * z[a].im).to_double() < (z[b].im * z[b].im).to_double();
        });
        std::vector<AC> cand;
        for (size_t i = realk; i < d; ++i) cand.push_back(z[idx[i]]);
        std::vector<AC> upper;
        for (const AC& c : cand)
            if (c.im.sign() > 0) upper.push_back(c);
        if (upper.size() * 2 != cand.size()) return false;

        for (const AC& c : upper) {
            // Initial radius: a fraction of the distance to everything else,
            // including the conjugate partner below the axis.
            Dyadic sep2 = (c.im * c.im).mul_pow2(2);
            for (const AC& o : cand) {
                Dyadic q = (c.re - o.re).square() + (c.im - o.im).square();
                if (!q.is_zero() && q < sep2) sep2 = q;
            }
            for (const Rec& rr : recs) {
                Dyadic q = (c.re - rr.box.re.mid()).square() + c.im.square();
                if (q < sep2) sep2 = q;
            }
            if (sep2.sign() <= 0) return false;
            Dyadic r0 = Dyadic::pow2((sep2.log2_ub() >> 1) - 4);
            std::optional<ComplexEnclosure> box = certify(c, r0, prec);
            if (!box) return false;
            Rec r;
            r.prec = prec;
            r.box = *box;
            contract_to(r, eps);
            snap_exact(r);
            Rec conj;
            conj.prec = prec;
            conj.exact = r.exact;
            conj.box = r.box.conj();
            out.push_back(std::move(r));
            out.push_back(std::move(conj));
        }
        // Certified boxes must be pairwise disjoint and stay off the axis.
        for (const Rec& r : out)
            if (r.box.im.contains_zero()) return false;
        for (size_t i = 0; i < out.size(); ++i)
            for (size_t j = i + 1; j < out.size(); ++j)
                if (box_dist2(out[i].box, out[j].box).lo().sign() <= 0) return false;
        return true;
    }

    std::vector<AC> aberth(unsigned prec) const {
        size_t d = static_cast<size_t>(p.degree());
        double h = p.height().get_d(), lc = std::abs(p.leading().get_d());
        double R = 1.0 + h / lc;
        std::vector<AC> z(d);
        for (size_t j = 0; j < d; ++j) {
            double th = 2.0 * 3.14159265358979 * (static_cast<double>(j) + 0.25) /
                            static_cast<double>(d) +
                        0.42;
            auto dy = [prec](double v) {
                return Dyadic(mpz_class(static_cast<long>(v * 4294967296.0)), -32).round_down(prec);
            };
            z[j] = {dy(R * std::cos(th)), dy(R * std::sin(th))};
        }
        auto eval_ac = [&](const IntPolynomial& q, const AC& x) {
            AC acc{Dyadic(0), Dyadic(0)};
            for (size_t i = q.coeffs().size(); i-- > 0;) {
                acc = ac_mul(acc, x, prec);
                acc.re = (acc.re + Dyadic(q.coeffs()[i], 0)).round_down(prec);
            }
            return acc;
        };
        int iters = 80 + 14 * static_cast<int>(d);
        double tol = std::pow(2.0, -0.45 * static_cast<double>(prec));
        for (int it = 0; it < iters; ++it) {
            double worst = 0.0;
            for (size_t j = 0; j < d; ++j) {
                AC pv = eval_ac(p, z[j]);
                AC dv = eval_ac(dp, z[j]);
                if (ac_abs2(dv) == 0.0) {
                    z[j].re += Dyadic(mpz_class(1), -20);
                    worst = 1.0;
                    continue;
                }
                AC alpha = ac_div(pv, dv, prec);
                AC s{Dyadic(0), Dyadic(0)};
                for (size_t k = 0; k < d; ++k) {
                    if (k == j) continue;
                    AC diff = ac_sub(z[j], z[k], prec);
                    if (ac_abs2(diff) == 0.0) {
                        diff.re += Dyadic(mpz_class(1), -20);
                    }
                    s = ac_add(s, ac_div({Dyadic(1), Dyadic(0)}, diff, prec), prec);
                }
                AC denom = ac_sub({Dyadic(1), Dyadic(0)}, ac_mul(alpha, s, prec), prec);
                AC w = ac_abs2(denom) == 0.0 ? alpha : ac_div(alpha, denom, prec);
                z[j] = ac_sub(z[j], w, prec);
                double rel = std::sqrt(ac_abs2(w)) / (1.0 + std::sqrt(ac_abs2(z[j])));
                worst = std::max(worst, rel);
            }
            if (worst < tol) break;
        }
        return z;
    }

    // Krawczyk test on the square box around c with radius r0; returns a
    // certified (possibly contracted) box on success.
    std::optional<ComplexEnclosure> certify(const AC& c, const Dyadic& r0, unsigned prec) const {
        Dyadic rad = r0;
        if (rad.sign() <= 0) return std::nullopt;
        for (int shrink = 0; shrink < 4; ++shrink) {
            ComplexEnclosure X{RealEnclosure{(c.re - rad).round_down(prec), (c.re + rad).round_up(prec)},
                               RealEnclosure{(c.im - rad).round_down(prec), (c.im + rad).round_up(prec)}};
            std::optional<ComplexEnclosure> k = krawczyk(X, prec);
            if (k && X.strictly_contains(*k)) return cenc_intersect(*k, X);
            rad = rad.half();
        }
        return std::nullopt;
    }

    std::optional<ComplexEnclosure> krawczyk(const ComplexEnclosure& X, unsigned prec) const {
        DyadicComplex m = X.mid();
        ComplexEnclosure pm = p.eval_enclosure(ComplexEnclosure(m), prec);
        ComplexEnclosure dm = dp.eval_enclosure(ComplexEnclosure(m), prec);
        RealEnclosure dn = cenc_abs2(dm, prec);
        if (dn.contains_zero()) return std::nullopt;
        ComplexEnclosure one{RealEnclosure{Dyadic(1)}, RealEnclosure{Dyadic(0)}};
        ComplexEnclosure Y = cenc_div(one, dm, prec);
        ComplexEnclosure dX = dp.eval_enclosure(X, prec);
        ComplexEnclosure t = cenc_sub(one, cenc_mul(Y, dX, prec), prec);
        ComplexEnclosure shift = cenc_sub(X, ComplexEnclosure(m), prec);
        ComplexEnclosure K = cenc_add(
            cenc_sub(ComplexEnclosure(m), cenc_mul(Y, pm, prec), prec),
            cenc_mul(t, shift, prec), prec);
        return K;
    }

    void contract_to(Rec& r, const Dyadic& eps) const {
        int stall = 0;
        while (box_radius(r.box) > eps) {
            std::optional<ComplexEnclosure> k = krawczyk(r.box, r.prec);
            bool progressed = false;
            if (k) {
                try {
                    ComplexEnclosure nx = cenc_intersect(*k, r.box);
                    if (box_radius(nx) < box_radius(r.box)) progressed = true;
                    r.box = nx;
                } catch (const DomainError&) {
                    throw ResourceError("root refinement lost its enclosure");
                }
            }
            if (!progressed) {
                if (r.prec >= kMaxPrec) throw ResourceError("root refinement exceeded maximal precision");
                r.prec *= 2;
                if (++stall > 64) throw ResourceError("root refinement stalled");
            }
        }
    }

    void snap_exact(Rec& r) const {
        if (r.exact) return;
        DyadicComplex m = r.box.mid();
        for (int bits = 0; bits <= 8; ++bits) {
            auto snap = [&](const Dyadic& x) {
                // nearest multiple of 2^-bits
                Dyadic scaled = x.mul_pow2(bits);
                mpz_class fl;
                std::int64_t e = scaled.exponent();
                if (e >= 0) {
                    fl = scaled.mantissa() << static_cast<unsigned long>(e);
                } else {
                    mpz_fdiv_q_2exp(fl.get_mpz_t(), scaled.mantissa().get_mpz_t(),
                                    static_cast<unsigned long>(-e));
                }
                return Dyadic(fl, -bits);
            };
            for (int dr = 0; dr <= 1; ++dr) {
                for (int di = 0; di <= 1; ++di) {
                    DyadicComplex cand{snap(m.re) + Dyadic(dr).mul_pow2(-bits),
                                       snap(m.im) + Dyadic(di).mul_pow2(-bits)};
                    if (!r.box.contains(cand)) continue;
                    DyadicComplex v = p.eval(cand);
                    if (v.re.is_zero() && v.im.is_zero()) {
                        r.exact = true;
                        r.box = ComplexEnclosure{RealEnclosure{cand.re}, RealEnclosure{cand.im}};
                        return;
                    }
                }
            }
        }
    }

    // ---- shared refinement entry points (mutex held by callers) -----------

    void refine_locked(size_t i, const Dyadic& eps) {
        Rec& r = recs[i];
        if (r.exact) return;
        if (box_radius(r.box) <= eps) return;
        if (r.is_real) {
            refine_real_interval(r, eps);
        } else {
            contract_to(r, eps);
            snap_exact(r);
            int pi = r.partner;
            if (pi >= 0) {
                recs[static_cast<size_t>(pi)].box = r.box.conj();
                recs[static_cast<size_t>(pi)].exact = r.exact;
            }
        }
    }

    void separate_pairs() {
        // Shrink enclosures until all closed boxes are pairwise disjoint.
        for (int round = 0; round < kMaxRounds; ++round) {
            bool ok = true;
            for (size_t i = 0; i < recs.size() && ok; ++i)
                for (size_t j = i + 1; j < recs.size() && ok; ++j)
                    if (box_dist2(recs[i].box, recs[j].box).lo().sign() <= 0) ok = false;
            if (ok) return;
            for (size_t i = 0; i < recs.size(); ++i)
                refine_locked(i, box_radius(recs[i].box).half());
        }
        throw ResourceError("could not separate root enclosures");
    }

    int side_of_line(size_t i, const Dyadic& g, bool vertical) {
        Rec& r = recs[i];
        for (int round = 0; round < kMaxRounds; ++round) {
            const RealEnclosure& coord = vertical ? r.box.re : r.box.im;
            if (r.exact) {
                const Dyadic& v = vertical ? r.box.re.lo() : r.box.im.lo();
                return Dyadic::cmp(v, g);
            }
            if (r.is_real && !vertical) return -g.sign();  // Im == 0 exactly
            if (r.is_real && vertical) {
                // open interval (rlo, rhi)
                if (g <= r.rlo) return 1;
                if (g >= r.rhi) return -1;
                if (p.sign_at(g) == 0) {
                    r.exact = true;
                    r.rlo = r.rhi = g;
                    r.box = real_box(g, g);
                    return 0;
                }
                refine_real_interval(r, (r.rhi - r.rlo).mul_pow2(-3));
                continue;
            }
            if (coord.lo() > g) return 1;
            if (coord.hi() < g) return -1;
            if (round % 3 == 2 && on_line(r, g, vertical)) return 0;
            refine_locked(i, box_radius(r.box).half());
        }
        throw ResourceError("boundary side query did not resolve");
    }

    // Does the (unique) root in r.box lie exactly on the line?
    bool on_line(const Rec& r, const Dyadic& g, bool vertical) const {
        DyadicComplex base = vertical ? DyadicComplex{g, Dyadic(0)} : DyadicComplex{Dyadic(0), g};
        DyadicComplex dir = vertical ? DyadicComplex{Dyadic(0), Dyadic(1)} : DyadicComplex{Dyadic(1), Dyadic(0)};
        auto [reP, imP] = line_restriction(p, base, dir);
        IntPolynomial U = reP.clear_denominators().first;
        IntPolynomial V = imP.clear_denominators().first;
        IntPolynomial w = V.is_zero() ? U : (U.is_zero() ? V : poly_gcd(U, V));
        if (w.degree() < 1) return false;
        IntPolynomial ws = square_free_part(w);
        if (ws.degree() < 1) return false;
        const RealEnclosure& window = vertical ? r.box.im : r.box.re;
        SturmChain wc(ws);
        unsigned cnt = wc.count_roots_halfopen(window.lo(), window.hi());
        if (ws.sign_at(window.lo()) == 0) ++cnt;
        return cnt > 0;
    }
};

RootSet RootSet::approximate_roots(const IntPolynomial& p, const Dyadic& eps) {
    if (p.degree() < 1) throw DomainError("approximate_roots requires degree >= 1");
    if (eps.sign() <= 0) throw DomainError("approximate_roots requires eps > 0");
    RootSet rs;
    rs.impl_ = std::make_shared<Impl>(p);  // SturmChain ctor rejects non-square-free input
    Impl& im = *rs.impl_;
    im.isolate_real(eps);
    im.find_complex(eps);
    // order: real ascending (already), then conjugate pairs sorted by center
    std::vector<Rec> cplx(im.recs.begin() + static_cast<long>(im.realk), im.recs.end());
    im.recs.resize(im.realk);
    std::sort(cplx.begin(), cplx.end(), [](const Rec& a, const Rec& b) {
        int c = Dyadic::cmp(a.box.re.lo(), b.box.re.lo());
        if (c != 0) return c < 0;
        return Dyadic::cmp(a.box.im.lo(), b.box.im.lo()) > 0;  // +Im first
    });
    for (auto& r : cplx) im.recs.push_back(std::move(r));
    for (size_t i = im.realk; i < im.recs.size(); ++i) {
        // pair each +Im root with the following mirrored record
        if (im.recs[i].partner >= 0) continue;
        for (size_t j = i + 1; j < im.recs.size(); ++j) {
            if (im.recs[j].partner >= 0) continue;
            if (im.recs[j].box.re.lo() == im.recs[i].box.re.lo() &&
                im.recs[j].box.im.lo() == (-im.recs[i].box.im).lo() &&
                im.recs[j].box.im.hi() == (-im.recs[i].box.im).hi()) {
                im.recs[i].partner = static_cast<int>(j);
                im.recs[j].partner = static_cast<int>(i);
                break;
            }
        }
        if (im.recs[i].partner < 0) throw ResourceError("conjugate pairing failed");
    }
    im.separate_pairs();
    return rs;
}

const IntPolynomial& RootSet::polynomial() const { return impl_->p; }
size_t RootSet::size() const { return impl_->recs.size(); }
size_t RootSet::real_count() const { return impl_->realk; }

CertifiedRoot RootSet::root(size_t i) const {
    std::lock_guard<std::mutex> lk(impl_->mu);
    const Rec& r = impl_->recs.at(i);
    CertifiedRoot out;
    out.center = r.box.mid();
    out.radius = box_radius(r.box);
    out.is_real = r.is_real;
    out.exact = r.exact;
    return out;
}

ComplexEnclosure RootSet::box(size_t i) const {
    std::lock_guard<std::mutex> lk(impl_->mu);
    return impl_->recs.at(i).box;
}

int RootSet::partner(size_t i) const { return impl_->recs.at(i).partner; }

void RootSet::refine(size_t i, const Dyadic& eps) const {
    std::lock_guard<std::mutex> lk(impl_->mu);
    impl_->refine_locked(i, eps);
}

void RootSet::refine_all(const Dyadic& eps) const {
    std::lock_guard<std::mutex> lk(impl_->mu);
    for (size_t i = 0; i < impl_->recs.size(); ++i) impl_->refine_locked(i, eps);
}

RealEnclosure RootSet::separation(size_t i, unsigned prec) const {
    std::lock_guard<std::mutex> lk(impl_->mu);
    RealEnclosure best;
    bool first = true;
    for (size_t j = 0; j < impl_->recs.size(); ++j) {
        if (j == i) continue;
        RealEnclosure d2 = box_dist2(impl_->recs[i].box, impl_->recs[j].box);
        RealEnclosure d = enc_sqrt(d2, prec);
        if (first) {
            best = d;
            first = false;
        } else {
            best = RealEnclosure(Dyadic::min(best.lo(), d.lo()), Dyadic::min(best.hi(), d.hi()));
        }
    }
    if (first) throw DomainError("separation needs at least two roots");
    return best;
}

RealEnclosure RootSet::dist2_to_point(size_t i, const DyadicComplex& x) const {
    std::lock_guard<std::mutex> lk(impl_->mu);
    return box_dist2(impl_->recs.at(i).box, ComplexEnclosure(x));
}

RealEnclosure RootSet::dist2_to_box(size_t i, const ComplexEnclosure& X) const {
    std::lock_guard<std::mutex> lk(impl_->mu);
    return box_dist2(impl_->recs.at(i).box, X);
}

int RootSet::side_of_vertical(size_t i, const Dyadic& g) const {
    std::lock_guard<std::mutex> lk(impl_->mu);
    return impl_->side_of_line(i, g, true);
}

int RootSet::side_of_horizontal(size_t i, const Dyadic& g) const {
    std::lock_guard<std::mutex> lk(impl_->mu);
    return impl_->side_of_line(i, g, false);
}

std::pair<RealEnclosure, RealEnclosure> dist_and_dist2(
    const RootSet& rs, const DyadicComplex& x, bool restrict_real, unsigned prec) {
    std::vector<Dyadic> los, his;
    for (size_t i = 0; i < rs.size(); ++i) {
        if (restrict_real && !rs.root(i).is_real) continue;
        RealEnclosure d = enc_sqrt(rs.dist2_to_point(i, x), prec);
        los.push_back(d.lo());
        his.push_back(d.hi());
    }
    if (los.size() < 2) throw DomainError("dist_and_dist2 needs at least two eligible roots");
    std::sort(los.begin(), los.end());
    std::sort(his.begin(), his.end());
    // smallest / second-smallest are monotone symmetric functions, so the
    // coordinatewise sorted values bound them
    return {RealEnclosure(los[0], his[0]), RealEnclosure(los[1], his[1])};
}

namespace {

struct Cand {
    const RootSet* rs;
    size_t local;
    size_t global;
};

// Mirror tie: both roots real, x real, and the reflection p(2x - y) shares
// both roots with p. Decided exactly through a gcd over Z.
bool mirror_tie(const RootSet& rs, size_t i, size_t j, const DyadicComplex& x) {
    if (!x.im.is_zero()) return false;
    CertifiedRoot a = rs.root(i), b = rs.root(j);
    if (!a.is_real || !b.is_real) return false;
    Dyadic two_x = x.re.twice();
    DyadicPolynomial shifted = taylor_shift(rs.polynomial(), two_x);
    std::vector<Dyadic> refl = shifted.coeffs();
    for (size_t k = 1; k < refl.size(); k += 2) refl[k] = -refl[k];
    IntPolynomial Q = DyadicPolynomial(std::move(refl)).clear_denominators().first;
    IntPolynomial g = poly_gcd(rs.polynomial(), Q);
    if (g.degree() < 1) return false;
    auto on_g = [&](const ComplexEnclosure& box) {
        SturmChain gc(square_free_part(g));
        unsigned c = gc.count_roots_halfopen(box.re.lo(), box.re.hi());
        if (g.sign_at(box.re.lo()) == 0) ++c;
        return c > 0;
    };
    if (!on_g(rs.box(i)) || !on_g(rs.box(j))) return false;
    // reflected enclosure of i must meet j's enclosure
    RealEnclosure ri = rs.box(i).re, rj = rs.box(j).re;
    RealEnclosure refl_i(two_x - ri.hi(), two_x - ri.lo());
    return !refl_i.disjoint(rj);
}

size_t cell_index_impl(const std::vector<const RootSet*>& sets, const DyadicComplex& x) {
    std::vector<Cand> cands;
    size_t g = 0;
    for (const RootSet* rs : sets)
        for (size_t i = 0; i < rs->size(); ++i) cands.push_back({rs, i, g++});
    if (cands.empty()) throw DomainError("cell_index over empty root universe");

    for (int round = 0; round < kMaxRounds; ++round) {
        std::vector<RealEnclosure> d2(cands.size());
        for (size_t i = 0; i < cands.size(); ++i)
            d2[i] = cands[i].rs->dist2_to_point(cands[i].local, x);
        size_t best = 0;
        for (size_t i = 1; i < cands.size(); ++i)
            if (d2[i].lo() < d2[best].lo()) best = i;
        std::vector<size_t> overlap;
        for (size_t i = 0; i < cands.size(); ++i)
            if (i != best && !(d2[best].hi() < d2[i].lo())) overlap.push_back(i);
        if (overlap.empty()) return cands[best].global;

        bool all_tied = true;
        for (size_t o : overlap) {
            const Cand& a = cands[best];
            const Cand& b = cands[o];
            bool tied = false;
            if (a.rs == b.rs) {
                // conjugate pair seen from the real axis
                if (x.im.is_zero() && a.rs->partner(a.local) == static_cast<int>(b.local)) tied = true;
                else if (mirror_tie(*a.rs, a.local, b.local, x)) tied = true;
            }
            if (!tied) {
                all_tied = false;
                break;
            }
        }
        if (all_tied) {
            size_t win = cands[best].global;
            for (size_t o : overlap) win = std::min(win, cands[o].global);
            return win;
        }
        // refine the contenders and retry
        Dyadic eps = enc_sqrt(d2[best], 64).hi().mul_pow2(-4 - round);
        if (eps.sign() <= 0) eps = Dyadic(mpz_class(1), -(64 + 8 * round));
        cands[best].rs->refine(cands[best].local, eps);
        for (size_t o : overlap) cands[o].rs->refine(cands[o].local, eps);
    }
    throw ResourceError("cell_index comparison did not resolve");
}

}  // namespace

size_t cell_index(const RootSet& rs, const DyadicComplex& x) {
    return cell_index_impl({&rs}, x);
}

size_t cell_index_combined(const RootSet& rs_p, const RootSet& rs_dp, const DyadicComplex& x) {
    return cell_index_impl({&rs_p, &rs_dp}, x);
}

std::vector<std::pair<size_t, size_t>> build_graph(const RootSet& rs, GraphKind kind) {
    std::vector<std::pair<size_t, size_t>> edges;
    switch (kind) {
        case GraphKind::RealChain: {
            size_t k = rs.real_count();
            for (size_t i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
            break;
        }
        case GraphKind::ConjugatePairs: {
            for (size_t i = 0; i < rs.size(); ++i) {
                int pt = rs.partner(i);
                if (pt > static_cast<int>(i)) edges.emplace_back(i, static_cast<size_t>(pt));
            }
            break;
        }
        case GraphKind::NearestNeighbor: {
            for (size_t i = 0; i < rs.size(); ++i) {
                if (rs.size() < 2) break;
                size_t best = i == 0 ? 1 : 0;
                for (int round = 0;; ++round) {
                    if (round >= kMaxRounds) throw ResourceError("nearest neighbor did not resolve");
                    std::vector<RealEnclosure> d2(rs.size());
                    best = i == 0 ? 1 : 0;
                    for (size_t j = 0; j < rs.size(); ++j) {
                        if (j == i) continue;
                        d2[j] = rs.dist2_to_box(j, rs.box(i));
                        if (j != best && d2[j].lo() < d2[best].lo()) best = j;
                    }
                    std::vector<size_t> overlap;
                    for (size_t j = 0; j < rs.size(); ++j)
                        if (j != i && j != best && !(d2[best].hi() < d2[j].lo())) overlap.push_back(j);
                    if (overlap.empty()) break;
                    // ties pick the lowest index once contenders are within
                    // a 2^-24 relative window
                    Dyadic slack = d2[best].hi() - d2[best].lo();
                    bool tight = slack <= d2[best].hi().mul_pow2(-24);
                    for (size_t o : overlap)
                        if ((d2[o].hi() - d2[o].lo()) > d2[o].hi().mul_pow2(-24)) tight = false;
                    if (tight) {
                        for (size_t o : overlap) best = std::min(best, o);
                        break;
                    }
                    Dyadic eps = box_radius(rs.box(i)).half();
                    rs.refine(i, eps);
                    rs.refine(best, box_radius(rs.box(best)).half());
                    for (size_t o : overlap) rs.refine(o, box_radius(rs.box(o)).half());
                }
                edges.emplace_back(i, best);
            }
            break;
        }
    }
    return edges;
}

}  // namespace isol
