#include <random>

#include "doctest.h"
#include "skyrcert/cheb.hpp"

using namespace skyr;

TEST_SUITE("cheb") {

TEST_CASE("eval of single basis terms") {
    CHECK(ChebSeries::basis(2).eval(rat(3, 4)) == rat(1, 8));  // 2(3/4)^2 - 1
    CHECK(ChebSeries::basis(5).eval(rat(1, 2)) == rat(1, 2));  // cos(5 pi/3)
    CHECK(ChebSeries::basis(0).eval(rat(-1)) == 1);
    CHECK(ChebSeries::basis(7).eval(rat(1)) == 1);
    CHECK(ChebSeries::basis(7).eval(rat(-1)) == -1);
}

TEST_CASE("eval outside the unit interval is rejected") {
    CHECK_THROWS_AS(ChebSeries::basis(3).eval(rat(3, 2)), DomainError);
    CHECK_THROWS_AS(ChebSeries::basis(3).eval(rat(-2)), DomainError);
}

TEST_CASE("derivative recurrence") {
    CHECK(ChebSeries::basis(1).derivative() == ChebSeries::basis(0));
    CHECK(ChebSeries::basis(2).derivative() == ChebSeries::basis(1, rat(4)));
    CHECK(ChebSeries::basis(3).derivative().eval(rat(1)) == 9);  // T_n'(1) = n^2
    for (long n = 1; n <= 12; ++n) {
        CHECK(ChebSeries::basis(n).derivative().eval(rat(1)) == n * n);
        Rational at_m1 = ChebSeries::basis(n).derivative().eval(rat(-1));
        CHECK(at_m1 == (n % 2 == 0 ? rat(-n * n) : rat(n * n)));
    }
}

TEST_CASE("derivative matches analytic derivative for monomials") {
    // x^k as a Chebyshev series, then derivative, compared against k x^{k-1}
    for (int k = 0; k <= 10; ++k) {
        std::vector<Rational> mono(k + 1, Rational(0));
        mono[k] = 1;
        ChebSeries s = ChebSeries::from_power(PowerPoly(mono));
        ChebSeries ds = s.derivative();
        for (long j = -4; j <= 4; ++j) {
            Rational x = rat(j, 5);
            Rational expect = k == 0 ? Rational(0) : Rational(k) * pow_int(x, k - 1);
            CHECK(ds.eval(x) == expect);
        }
    }
}

TEST_CASE("norm bound triple") {
    ChebSeries t3 = ChebSeries::basis(3);
    NormBoundTriple nb = t3.norm_bounds();
    CHECK(nb.f_bound == 1);
    CHECK(nb.df_bound == 9);
    CHECK(nb.d2f_bound == 24);  // 9*8/3
    // df bound attained at the endpoints
    CHECK(abs(t3.derivative().eval(rat(1))) == nb.df_bound);
}

TEST_CASE("norm bound soundness at random points") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> num(-64, 64);
    ChebSeries f = ChebSeries({rat(1, 3), rat(-2, 7), rat(5, 11), rat(0), rat(7, 13), rat(-1, 9)});
    NormBoundTriple nb = f.norm_bounds();
    ChebSeries df = f.derivative();
    for (int t = 0; t < 1000; ++t) {
        Rational x = rat(num(rng), 64);
        CHECK(abs(f.eval(x)) <= nb.f_bound);
        CHECK(abs(df.eval(x)) <= nb.df_bound);
    }
}

TEST_CASE("power conversion round trip") {
    std::mt19937 rng(1234);
    std::uniform_int_distribution<long> num(-50, 50);
    std::uniform_int_distribution<long> den(1, 20);
    for (int t = 0; t < 40; ++t) {
        std::vector<Rational> c;
        for (int i = 0; i <= 12; ++i) c.push_back(rat(num(rng), den(rng)));
        PowerPoly p(c);
        CHECK(ChebSeries::from_power(p).to_power() == p);
        ChebSeries s(c);
        CHECK(ChebSeries::from_power(s.to_power()) == s);
    }
}

TEST_CASE("series and polynomial products agree with pointwise products") {
    ChebSeries a({rat(1, 2), rat(-1, 3), rat(2, 5)});
    ChebSeries b({rat(3), rat(0), rat(0), rat(-1, 7)});
    ChebSeries ab = a * b;
    PowerPoly pa = a.to_power(), pb = b.to_power();
    PowerPoly pab = pa * pb;
    for (long j = -6; j <= 6; ++j) {
        Rational x = rat(j, 6);
        CHECK(ab.eval(x) == a.eval(x) * b.eval(x));
        CHECK(pab.eval(x) == pa.eval(x) * pb.eval(x));
    }
}

TEST_CASE("polynomial division") {
    PowerPoly p = PowerPoly::from_ints({-1, 0, 1});  // x^2 - 1
    PowerPoly q = p.divide_exact(one_minus_x(), "test");
    CHECK(q == PowerPoly::from_ints({-1, -1}));  // -(1+x)
    auto [quot, rem] = PowerPoly::from_ints({1, 1, 1}).divide(one_plus_x());
    CHECK(!rem.is_zero());
    CHECK_THROWS_AS(PowerPoly::from_ints({1, 1, 1}).divide_exact(one_plus_x(), "test"),
                    CancellationFailure);
}

TEST_CASE("antiderivative and unit-interval integral") {
    PowerPoly p = PowerPoly::from_ints({3, 0, 6});  // 3 + 6x^2
    CHECK(p.antiderivative() == PowerPoly({rat(0), rat(3), rat(0), rat(2)}));
    CHECK(p.integrate_unit() == rat(10));  // 6 + 4
    CHECK(PowerPoly::from_ints({0, 5}).integrate_unit() == 0);
}

TEST_CASE("power of a polynomial") {
    PowerPoly p = one_plus_x().pow(5);
    CHECK(p.degree() == 5);
    CHECK(p.coeff(2) == 10);
    CHECK(p.eval(rat(1)) == 32);
}

}  // TEST_SUITE
