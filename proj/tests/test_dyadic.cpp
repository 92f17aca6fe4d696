#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "isol/dyadic.hpp"
#include "isol/enclosure.hpp"
#include "isol/errors.hpp"

using namespace isol;

namespace {

Dyadic rand_dyadic(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> mant(-(1L << 20), 1L << 20);
    std::uniform_int_distribution<int> ex(-12, 12);
    return Dyadic(mant(rng), ex(rng));
}

}  // namespace

TEST_CASE("canonical form") {
    Dyadic a(mpz_class(4), -2);
    CHECK(a.mantissa() == 1);
    CHECK(a.exponent() == 0);

    Dyadic z(mpz_class(0), 57);
    CHECK(z.is_zero());
    CHECK(z.exponent() == 0);

    // Normalizing twice equals normalizing once.
    Dyadic again(a.mantissa(), a.exponent());
    CHECK(again == a);
    CHECK(again.mantissa() == a.mantissa());
    CHECK(again.exponent() == a.exponent());
}

TEST_CASE("exact arithmetic") {
    Dyadic half(mpz_class(1), -1), quarter(mpz_class(1), -2);
    Dyadic s = half + quarter;
    CHECK(s.mantissa() == 3);
    CHECK(s.exponent() == -2);

    Dyadic a(mpz_class(3), -1), b(5);
    Dyadic p = a * b;
    CHECK(p.mantissa() == 15);
    CHECK(p.exponent() == -1);

    CHECK(Dyadic(7) - Dyadic(7) == Dyadic(0));
    CHECK(Dyadic(3).half() == Dyadic(mpz_class(3), -1));
    CHECK(Dyadic::midpoint(Dyadic(1), Dyadic(2)) == Dyadic(mpz_class(3), -1));
}

TEST_CASE("comparisons across exponent gaps") {
    Dyadic big(mpz_class(1), 400);
    Dyadic small(mpz_class(1), -400);
    CHECK(small < big);
    CHECK(-big < small);
    CHECK(Dyadic::cmp(big, big) == 0);
    CHECK(Dyadic(mpz_class(3), 1) > Dyadic(5));
}

TEST_CASE("halving then doubling is the identity") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 200; ++t) {
        Dyadic x = rand_dyadic(rng);
        Dyadic y = x;
        int k = t % 40;
        for (int i = 0; i < k; ++i) y = y.half();
        for (int i = 0; i < k; ++i) y = y.twice();
        CHECK(y == x);
    }
}

TEST_CASE("rounding is directed") {
    Dyadic x(mpz_class(0xBEEF), -7);
    Dyadic d = x.round_down(8), u = x.round_up(8);
    CHECK(d <= x);
    CHECK(x <= u);
    CHECK((-x).round_down(8) == -u);
}

TEST_CASE("enclosure basic ops") {
    RealEnclosure a{Dyadic(1), Dyadic(2)};
    RealEnclosure b{Dyadic(3), Dyadic(4)};
    RealEnclosure s = enc_add(a, b);
    CHECK(s.lo() == Dyadic(4));
    CHECK(s.hi() == Dyadic(6));

    RealEnclosure m = enc_mul(RealEnclosure{Dyadic(-1), Dyadic(1)}, RealEnclosure{Dyadic(2)});
    CHECK(m.lo() == Dyadic(-2));
    CHECK(m.hi() == Dyadic(2));

    RealEnclosure q = enc_div(RealEnclosure{Dyadic(1)}, RealEnclosure{Dyadic(2)});
    CHECK(q.contains(Dyadic(mpz_class(1), -1)));
    CHECK(q.width() == Dyadic(0));  // exactly representable

    CHECK_THROWS_AS(enc_div(a, RealEnclosure{Dyadic(-1), Dyadic(1)}, 64), DomainError);
}

TEST_CASE("enclosure soundness on random triples") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 10000; ++t) {
        Dyadic x = rand_dyadic(rng), y = rand_dyadic(rng);
        RealEnclosure ex{x}, ey{y};
        unsigned prec = 24 + (t % 3) * 40;
        CHECK(enc_add(ex, ey, prec).contains(x + y));
        CHECK(enc_sub(ex, ey, prec).contains(x - y));
        CHECK(enc_mul(ex, ey, prec).contains(x * y));
        if (!y.is_zero()) {
            RealEnclosure q = enc_div(ex, ey, prec);
            // exact rational x/y lies inside: check q.lo*y <= x <= q.hi*y (sign-adjusted)
            if (y.sign() > 0) {
                CHECK(q.lo() * y <= x);
                CHECK(x <= q.hi() * y);
            } else {
                CHECK(q.lo() * y >= x);
                CHECK(x >= q.hi() * y);
            }
        }
    }
}

TEST_CASE("sqrt and transcendental enclosures") {
    RealEnclosure r2 = enc_sqrt(RealEnclosure{Dyadic(2)}, 96);
    CHECK(r2.lo() * r2.lo() <= Dyadic(2));
    CHECK(r2.hi() * r2.hi() >= Dyadic(2));
    CHECK(r2.width() < Dyadic(mpz_class(1), -80));

    RealEnclosure pi = enc_pi(96);
    // pi is bracketed by the 32-bit truncation and its successor
    CHECK(Dyadic(mpz_class(0x3243F6A88), -32) < pi.lo());
    CHECK(pi.hi() < Dyadic(mpz_class(0x3243F6A89), -32));
    CHECK(enc_ln(RealEnclosure{Dyadic(1)}, 64).contains(Dyadic(0)));
    CHECK(enc_asinh(RealEnclosure{Dyadic(0)}, 64).contains(Dyadic(0)));
    CHECK_THROWS_AS(enc_ln(RealEnclosure{Dyadic(0), Dyadic(1)}, 64), DomainError);
}

TEST_CASE("complex enclosure arithmetic") {
    ComplexEnclosure i{RealEnclosure{Dyadic(0)}, RealEnclosure{Dyadic(1)}};
    ComplexEnclosure sq = cenc_mul(i, i);
    CHECK(sq.re.contains(Dyadic(-1)));
    CHECK(sq.im.contains(Dyadic(0)));

    ComplexEnclosure z{RealEnclosure{Dyadic(3)}, RealEnclosure{Dyadic(4)}};
    CHECK(cenc_abs2(z).contains(Dyadic(25)));
    RealEnclosure a = cenc_abs(z, 80);
    CHECK(a.contains(Dyadic(5)));

    ComplexEnclosure q = cenc_div(z, z, 80);
    CHECK(q.re.contains(Dyadic(1)));
    CHECK(q.im.contains(Dyadic(0)));
}
