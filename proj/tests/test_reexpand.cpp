#include <random>

#include "doctest.h"
#include "skyrcert/reexpand.hpp"

using namespace skyr;

TEST_SUITE("reexpand") {

TEST_CASE("x^2 on three nodes gives (T_0 + T_2)/2") {
    auto f = [](const Rational& x) -> Rational { return x * x; };
    ChebSeries s = reexpand(f, 2, {rat(-1, 2), rat(0), rat(1, 2)});
    CHECK(s.coeff(0) == rat(1, 2));
    CHECK(s.coeff(1) == 0);
    CHECK(s.coeff(2) == rat(1, 2));
}

TEST_CASE("interpolation identity at every node") {
    std::mt19937 rng(5150);
    std::uniform_int_distribution<long> num(-30, 30);
    std::uniform_int_distribution<long> den(1, 9);
    for (int t = 0; t < 25; ++t) {
        std::vector<Rational> c;
        for (int i = 0; i <= 9; ++i) c.push_back(rat(num(rng), den(rng)));
        PowerPoly p(c);
        long d = p.degree() < 0 ? 0 : p.degree();
        auto nodes = uniform_nodes(d + 3);  // overdetermined by 3
        auto f = [&](const Rational& x) -> Rational { return p.eval(x); };
        ChebSeries s = reexpand(f, d, nodes);
        for (const auto& x : nodes) CHECK(s.eval(x) == p.eval(x));
        CHECK(s.to_power() == p);
    }
}

TEST_CASE("overdetermined inconsistency is detected") {
    // cubic sampled with a claimed degree of 2
    auto f = [](const Rational& x) -> Rational { return x * x * x; };
    CHECK_THROWS_AS(reexpand(f, 2, uniform_nodes(5)), InconsistentOverdetermined);
}

TEST_CASE("duplicate nodes are rejected") {
    auto f = [](const Rational& x) -> Rational { return x; };
    std::vector<Rational> nodes = {rat(0), rat(1, 2), rat(0)};
    CHECK_THROWS_AS(reexpand(f, 2, nodes), SingularSystem);
}

TEST_CASE("too few nodes or out-of-range nodes are rejected") {
    auto f = [](const Rational& x) -> Rational { return x; };
    CHECK_THROWS_AS(reexpand(f, 3, uniform_nodes(2)), DomainError);
    std::vector<Rational> bad = {rat(0), rat(1, 2), rat(3, 2)};
    CHECK_THROWS_AS(reexpand(f, 2, bad), DomainError);
}

TEST_CASE("monomial basis variant") {
    auto f = [](const Rational& x) -> Rational { return (1 + x) * (1 + x) * (2 - x); };
    PowerPoly p = reexpand_monomial(f, 3, uniform_nodes(3));
    CHECK(p == one_plus_x() * one_plus_x() * PowerPoly::from_ints({2, -1}));
}

TEST_CASE("uniform node family") {
    auto nodes = uniform_nodes(4);
    REQUIRE(nodes.size() == 5);
    CHECK(nodes.front() == rat(-1, 2));
    CHECK(nodes.back() == rat(1, 2));
    CHECK(nodes[1] == rat(-1, 4));
}

}  // TEST_SUITE
