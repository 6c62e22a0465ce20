#include <random>

#include "doctest.h"
#include "skyrcert/interval.hpp"

using namespace skyr;

namespace {

// Deterministic rational sampler for the fuzz suites.
struct RatGen {
    std::mt19937 rng;
    explicit RatGen(unsigned seed) : rng(seed) {}
    Rational next(long num_range = 1000, long den_range = 60) {
        std::uniform_int_distribution<long> num(-num_range, num_range);
        std::uniform_int_distribution<long> den(1, den_range);
        return rat(num(rng), den(rng));
    }
    RatInterval next_interval() {
        Rational a = next(), b = next();
        return a <= b ? RatInterval(a, b) : RatInterval(b, a);
    }
    // A point inside I: lo + t (hi - lo) with t in [0,1].
    Rational inside(const RatInterval& i) {
        std::uniform_int_distribution<long> t(0, 64);
        return i.lo + Rational(t(rng), 64) * i.width();
    }
};

}  // namespace

TEST_SUITE("interval") {

TEST_CASE("addition endpoint formula") {
    RatInterval r = interval_binop(IntervalOp::add, {rat(1), rat(2)}, {rat(3), rat(4)});
    CHECK(r == RatInterval(rat(4), rat(6)));
}

TEST_CASE("multiplication takes min/max of products") {
    RatInterval r = interval_binop(IntervalOp::mul, {rat(1), rat(2)}, {rat(-1), rat(3)});
    CHECK(r == RatInterval(rat(-2), rat(6)));
}

TEST_CASE("division multiplies by the reciprocal interval") {
    RatInterval r = interval_binop(IntervalOp::div, {rat(1), rat(2)}, {rat(2), rat(4)});
    CHECK(r == RatInterval(rat(1, 4), rat(1)));
}

TEST_CASE("division by interval containing zero fails") {
    CHECK_THROWS_AS(interval_binop(IntervalOp::div, RatInterval(rat(1), rat(2)),
                                   RatInterval(rat(-1), rat(1))),
                    DivisionByIntervalContainingZero);
    // strictly positive or strictly negative divisors are fine
    CHECK_NOTHROW(RatInterval(rat(1), rat(2)) / RatInterval(rat(-3), rat(-1)));
}

TEST_CASE("subtraction") {
    RatInterval r = RatInterval(rat(1), rat(2)) - RatInterval(rat(3), rat(4));
    CHECK(r == RatInterval(rat(-3), rat(-1)));
}

TEST_CASE("hull") {
    CHECK(interval_hull({rat(0), rat(1)}, {rat(2), rat(3)}) == RatInterval(rat(0), rat(3)));
    CHECK(interval_hull({rat(0), rat(2)}, {rat(1), rat(3)}) == RatInterval(rat(0), rat(3)));
    CHECK(interval_hull({rat(1), rat(1)}, {rat(1), rat(1)}) == RatInterval(rat(1), rat(1)));
}

TEST_CASE("scalar embedding: degenerate operands give degenerate results") {
    Rational a = rat(3, 7), b = rat(-5, 3);
    for (auto op : {IntervalOp::add, IntervalOp::sub, IntervalOp::mul, IntervalOp::div}) {
        RatInterval r = interval_binop(op, RatInterval(a), RatInterval(b));
        CHECK(r.is_point());
        Rational expect = op == IntervalOp::add   ? Rational(a + b)
                          : op == IntervalOp::sub ? Rational(a - b)
                          : op == IntervalOp::mul ? Rational(a * b)
                                                  : Rational(a / b);
        CHECK(r.lo == expect);
    }
}

TEST_CASE("inclusion fuzz: x op y lands in the interval result") {
    RatGen gen(20260810);
    int checked = 0;
    while (checked < 10000) {
        RatInterval i = gen.next_interval(), j = gen.next_interval();
        Rational x = gen.inside(i), y = gen.inside(j);
        for (auto op : {IntervalOp::add, IntervalOp::sub, IntervalOp::mul, IntervalOp::div}) {
            if (op == IntervalOp::div && j.contains_zero()) continue;
            RatInterval r = interval_binop(op, i, j);
            Rational v = op == IntervalOp::add   ? Rational(x + y)
                         : op == IntervalOp::sub ? Rational(x - y)
                         : op == IntervalOp::mul ? Rational(x * y)
                                                 : Rational(x / y);
            REQUIRE(r.contains(v));
            ++checked;
        }
    }
    CHECK(checked >= 10000);
}

TEST_CASE("inclusion monotonicity under operand widening") {
    RatGen gen(7);
    for (int t = 0; t < 500; ++t) {
        RatInterval i = gen.next_interval(), j = gen.next_interval();
        RatInterval iw(i.lo - rat(1, 9), i.hi + rat(2, 7));
        RatInterval jw(j.lo - rat(3, 11), j.hi + rat(1, 13));
        for (auto op : {IntervalOp::add, IntervalOp::sub, IntervalOp::mul}) {
            CHECK(interval_binop(op, iw, jw).contains(interval_binop(op, i, j)));
        }
        if (!jw.contains_zero()) {
            CHECK(interval_binop(IntervalOp::div, iw, jw)
                      .contains(interval_binop(IntervalOp::div, i, j)));
        }
    }
}

TEST_CASE("exactness: endpoints are exact expressions in input endpoints") {
    RatInterval i(rat(-3, 7), rat(5, 11)), j(rat(2, 9), rat(13, 4));
    RatInterval sum = i + j;
    CHECK(sum.lo == i.lo + j.lo);
    CHECK(sum.hi == i.hi + j.hi);
    RatInterval prod = i * j;
    CHECK(prod.lo == rat_min(rat_min(i.lo * j.lo, i.lo * j.hi), rat_min(i.hi * j.lo, i.hi * j.hi)));
    CHECK(prod.hi == rat_max(rat_max(i.lo * j.lo, i.lo * j.hi), rat_max(i.hi * j.lo, i.hi * j.hi)));
}

TEST_CASE("tight powers") {
    RatInterval sym(rat(-1), rat(1));
    CHECK(pow_tight(sym, 2) == RatInterval(rat(0), rat(1)));
    CHECK(pow_tight(sym, 3) == RatInterval(rat(-1), rat(1)));
    CHECK(pow_tight({rat(-2), rat(1)}, 4) == RatInterval(rat(0), rat(16)));
    CHECK(pow_tight({rat(1, 2), rat(2)}, 2) == RatInterval(rat(1, 4), rat(4)));
    CHECK(pow_tight({rat(-2), rat(-1, 2)}, 2) == RatInterval(rat(1, 4), rat(4)));
    CHECK(pow_tight({rat(-2), rat(3)}, 0) == RatInterval(rat(1), rat(1)));
}

TEST_CASE("squared comparison helper") {
    CHECK(sum_sq_le(rat(1, 2), rat(7, 10), rat(1)));
    CHECK_FALSE(sum_sq_le(rat(1), rat(1), rat(1)));
    CHECK(sum_sq_le(rat(3), rat(4), rat(5)));
}

TEST_CASE("rational parse and print round trip") {
    CHECK(rat_str(rat_parse("13039/72146")) == "13039/72146");
    CHECK(rat_str(rat_parse("-437/24")) == "-437/24");
    CHECK(rat_parse("10/20") == rat(1, 2));
    CHECK(rat_str(rat_parse("5")) == "5");
    CHECK_THROWS_AS(rat_parse("abc"), DomainError);
}

}  // TEST_SUITE
