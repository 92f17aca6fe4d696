#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "isol/errors.hpp"
#include "isol/polynomial.hpp"

using namespace isol;

namespace {

IntPolynomial poly(std::initializer_list<long> asc) {
    std::vector<mpz_class> c;
    for (long v : asc) c.emplace_back(v);
    return IntPolynomial(std::move(c));
}

IntPolynomial from_roots(const std::vector<long>& roots, long lead = 1) {
    IntPolynomial p = poly({lead});
    for (long r : roots) p = p * poly({-r, 1});
    return p;
}

IntPolynomial rand_poly(std::mt19937_64& rng, int deg, long height) {
    std::uniform_int_distribution<long> co(-height, height);
    std::vector<mpz_class> c(deg + 1);
    for (auto& x : c) x = co(rng);
    while (c.back() == 0) c.back() = co(rng);
    return IntPolynomial(std::move(c));
}

}  // namespace

TEST_CASE("parse and format") {
    IntPolynomial p = IntPolynomial::parse("-2 0 1");
    CHECK(p.degree() == 2);
    CHECK(p[0] == -2);
    CHECK(p[2] == 1);
    CHECK(p.format() == "-2 0 1");
    CHECK(IntPolynomial::parse(p.format()) == p);
}

TEST_CASE("evaluation") {
    IntPolynomial p = poly({-2, 0, 1});  // x^2 - 2
    CHECK(p.eval(Dyadic(1)) == Dyadic(-1));
    CHECK(p.eval(Dyadic(0)) == Dyadic(-2));

    IntPolynomial q = poly({1, -3, 0, 2});  // 2x^3 - 3x + 1
    CHECK(q.eval(Dyadic(mpz_class(1), -1)) == Dyadic(mpz_class(-1), -2));

    DyadicComplex i{Dyadic(0), Dyadic(1)};
    IntPolynomial c = poly({1, 0, 1});  // x^2 + 1
    DyadicComplex v = c.eval(i);
    CHECK(v.re.is_zero());
    CHECK(v.im.is_zero());

    ComplexEnclosure box = c.eval_enclosure(ComplexEnclosure(i), 64);
    CHECK(box.contains(DyadicComplex{Dyadic(0), Dyadic(0)}));

    IntPolynomial x = poly({0, 1});
    DyadicComplex z{Dyadic(3), Dyadic(4)};
    CHECK(x.eval(z) == z);

    Dyadic three_halves(mpz_class(3), -1);
    CHECK(p.eval(three_halves) == Dyadic(mpz_class(1), -2));  // 2.25 - 2
}

TEST_CASE("derivative") {
    CHECK(poly({-2, 0, 1}).derivative() == poly({0, 2}));
    CHECK(poly({5}).derivative().is_zero());
    CHECK(poly({1, -3, 0, 2}).derivative() == poly({-3, 0, 6}));
}

TEST_CASE("taylor shift") {
    DyadicPolynomial s = taylor_shift(poly({0, 0, 1}), Dyadic(1));
    REQUIRE(s.degree() == 2);
    CHECK(s[0] == Dyadic(1));
    CHECK(s[1] == Dyadic(2));
    CHECK(s[2] == Dyadic(1));

    DyadicPolynomial t = taylor_shift(poly({0, 1}), Dyadic(3));
    CHECK(t[0] == Dyadic(3));
    CHECK(t[1] == Dyadic(1));

    DyadicPolynomial u = taylor_shift(poly({1, -3, 2}), Dyadic(1));  // 2x^2-3x+1 at x+1
    CHECK(u.degree() == 2);
    CHECK(u[0] == Dyadic(0));
    CHECK(u[1] == Dyadic(1));
    CHECK(u[2] == Dyadic(2));
}

TEST_CASE("taylor shift round trip") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> mant(-64, 64);
    for (int t = 0; t < 100; ++t) {
        IntPolynomial p = rand_poly(rng, 1 + t % 9, 50);
        Dyadic c(mant(rng), -(t % 5));
        DyadicPolynomial back = taylor_shift(taylor_shift(p, c), -c);
        REQUIRE(back.degree() == p.degree());
        for (int i = 0; i <= p.degree(); ++i)
            CHECK(back[static_cast<size_t>(i)] == Dyadic(p[static_cast<size_t>(i)], 0));
    }
}

TEST_CASE("sign variations") {
    CHECK(sign_variations({1, -1, 1}) == 2);
    CHECK(sign_variations({-1, 0, 1}) == 1);
    CHECK(sign_variations({0, 0, 0}) == 0);
}

TEST_CASE("mobius variation") {
    CHECK(mobius_variation(poly({-2, 0, 1}), Dyadic(0), Dyadic(2)) == 1);
    CHECK(mobius_variation(poly({1, 0, 1}), Dyadic(0), Dyadic(1)) == 0);
    CHECK(mobius_variation(poly({-5, 1}), Dyadic(0), Dyadic(1)) == 0);
    CHECK(mobius_variation(poly({-1, 0, 1}), Dyadic(-2), Dyadic(2)) >= 2);
    // dyadic endpoints
    CHECK(mobius_variation(poly({-2, 0, 1}), Dyadic(1), Dyadic(mpz_class(3), -1)) == 1);
}

TEST_CASE("sturm chain structure") {
    SturmChain c1(poly({-1, 0, 1}));
    REQUIRE(c1.polys().size() == 3);
    CHECK(c1.polys()[0] == poly({-1, 0, 1}));
    CHECK(c1.polys()[1] == poly({0, 1}));  // primitive part of 2x
    CHECK(c1.polys()[2].degree() == 0);
    CHECK(c1.polys()[2].leading() > 0);

    SturmChain c2(poly({-2, 0, 1}));
    CHECK(c2.polys().size() == 3);
    CHECK(c2.polys()[2].leading() > 0);

    SturmChain c3(poly({0, 1}));
    CHECK(c3.polys().size() == 2);

    CHECK_THROWS_AS(SturmChain(poly({1, -2, 1})), DomainError);  // (x-1)^2
}

TEST_CASE("sturm counts") {
    SturmChain a(poly({-1, 0, 1}));
    CHECK(a.count_roots_halfopen(Dyadic(-2), Dyadic(2)) == 2);
    CHECK(a.variations_at(Dyadic(-2)) == 2);
    CHECK(a.variations_at(Dyadic(2)) == 0);

    SturmChain b(poly({-2, 0, 1}));
    CHECK(b.count_roots_halfopen(Dyadic(0), Dyadic(2)) == 1);

    SturmChain c(poly({1, 0, 1}));
    CHECK(c.count_roots_halfopen(Dyadic(-2), Dyadic(2)) == 0);

    // boundary roots: (a,b] includes b, excludes a
    CHECK(a.count_roots_halfopen(Dyadic(0), Dyadic(1)) == 1);
    CHECK(a.count_roots_halfopen(Dyadic(1), Dyadic(2)) == 0);
    CHECK(a.count_roots_open(Dyadic(0), Dyadic(1)) == 0);
    CHECK(a.count_roots_open(Dyadic(-1), Dyadic(1)) == 0);
}

TEST_CASE("sturm counts vs constructed roots") {
    struct Case {
        IntPolynomial p;
        std::vector<long> roots;
    };
    std::vector<Case> cases = {
        {from_roots({1, 2, 3}), {1, 2, 3}},
        {from_roots({-3, 1, 2}, -1), {-3, 1, 2}},
        {from_roots({-5, -1, 0, 4}, 3), {-5, -1, 0, 4}},
        {poly({2, -3, 1}) * poly({4, 1}), {-4, 1, 2}},
    };
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<long> pt(-12, 12);
    for (const auto& cs : cases) {
        SturmChain chain(cs.p);
        for (int t = 0; t < 50; ++t) {
            long a = pt(rng), b = pt(rng);
            if (a == b) continue;
            if (a > b) std::swap(a, b);
            unsigned expect = 0;
            for (long r : cs.roots)
                if (a < r && r <= b) ++expect;
            CHECK(chain.count_roots_halfopen(Dyadic(a), Dyadic(b)) == expect);
        }
    }
}

TEST_CASE("discriminant") {
    CHECK(discriminant(poly({-2, 0, 1})) == 8);
    CHECK(discriminant(poly({1, 0, 1})) == -4);
    CHECK(discriminant(poly({-1, 0, 1})) == 4);
    CHECK(discriminant(poly({1, -2, 1})) == 0);
    CHECK(discriminant(from_roots({1, 2, 3})) == 4);  // gaps 1,2,1 squared
    CHECK(discriminant(poly({0, 1})) == 1);
}

TEST_CASE("discriminant nonzero iff square free") {
    std::mt19937_64 rng(23);
    for (int t = 0; t < 120; ++t) {
        IntPolynomial p = rand_poly(rng, 2 + t % 6, 9);
        if (t % 4 == 0) p = p * p;  // engineered square
        if (p.degree() < 1) continue;
        CHECK((discriminant(p) != 0) == square_free_check(p));
    }
}

TEST_CASE("square free check") {
    CHECK(square_free_check(poly({-1, 0, 1})));
    CHECK_FALSE(square_free_check(poly({1, -2, 1})));
    CHECK(square_free_check(poly({0, -1, 0, 1})));
}

TEST_CASE("norms and bounds") {
    NormsAndBounds nb = norms_and_bounds(poly({-2, 0, 1}));
    CHECK(nb.two_norm_sq == 5);
    CHECK(nb.height == 2);
    CHECK(nb.L == 2);
    CHECK(nb.root_bound == Dyadic(4));

    nb = norms_and_bounds(poly({1, 0, 1}));
    CHECK(nb.two_norm_sq == 2);
    CHECK(nb.height == 1);
    CHECK(nb.L == 1);
    CHECK(nb.root_bound == Dyadic(2));

    nb = norms_and_bounds(poly({0, 1}));
    CHECK(nb.two_norm_sq == 1);
    CHECK(nb.root_bound == Dyadic(2));
}

TEST_CASE("gcd and resultant") {
    IntPolynomial g = poly_gcd(from_roots({1, 2}) * poly({3}), from_roots({2, 5}));
    CHECK(g == poly({-2, 1}));
    CHECK(resultant(poly({-1, 0, 1}), poly({0, 1})) == -1);
    CHECK(resultant(poly({-2, 0, 1}), poly({0, 2})) == -8);
}

TEST_CASE("line restriction") {
    // p(iy) for p = x^2+1 is 1 - y^2, purely real
    auto [re, im] = line_restriction(poly({1, 0, 1}), DyadicComplex{Dyadic(0), Dyadic(0)},
                                     DyadicComplex{Dyadic(0), Dyadic(1)});
    REQUIRE(re.degree() == 2);
    CHECK(re[0] == Dyadic(1));
    CHECK(re[2] == Dyadic(-1));
    CHECK(im.is_zero());

    // p(1 + iy) for p = x^2: 1 - y^2 + 2iy
    auto [re2, im2] = line_restriction(poly({0, 0, 1}), DyadicComplex{Dyadic(1), Dyadic(0)},
                                       DyadicComplex{Dyadic(0), Dyadic(1)});
    CHECK(re2[0] == Dyadic(1));
    CHECK(re2[2] == Dyadic(-1));
    CHECK(im2[1] == Dyadic(2));
}

TEST_CASE("clear denominators") {
    DyadicPolynomial q = taylor_shift(poly({-2, 0, 4}), Dyadic(mpz_class(1), -1));
    auto [z, s] = q.clear_denominators();
    CHECK(s >= 0);
    for (int i = 0; i <= z.degree(); ++i)
        CHECK(Dyadic(z[static_cast<size_t>(i)], -s) == q[static_cast<size_t>(i)]);
}
