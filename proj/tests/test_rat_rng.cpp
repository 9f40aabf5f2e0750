#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdint>

#include "orelab/errors.hpp"
#include "orelab/rat.hpp"
#include "orelab/rng.hpp"

using namespace orelab;

TEST_CASE("rationals normalize to lowest terms with positive denominator") {
    CHECK(Rat(6, 4).str() == "3/2");
    CHECK(Rat(6, 4).num() == 3);
    CHECK(Rat(6, 4).den() == 2);
    CHECK(Rat(-2, -4).str() == "1/2");
    CHECK(Rat(2, -4).num() == -1);
    CHECK(Rat(2, -4).den() == 2);
    CHECK(Rat(0, 7).is_zero());
    CHECK(Rat(0, 7).str() == "0");
    CHECK(Rat(5).is_integer());
    CHECK(Rat(5).str() == "5");
    CHECK(Rat(-12, 3) == Rat(-4));
}

TEST_CASE("rational arithmetic is exact") {
    CHECK(Rat(1, 3) + Rat(1, 6) == Rat(1, 2));
    CHECK(Rat(1, 2) - Rat(1, 3) == Rat(1, 6));
    CHECK(Rat(2, 3) * Rat(3, 4) == Rat(1, 2));
    CHECK(Rat(1, 2) / Rat(1, 3) == Rat(3, 2));
    CHECK(-Rat(3, 2) == Rat(-3, 2));
    CHECK(Rat(1, 3) < Rat(1, 2));
    CHECK(!(Rat(1, 2) < Rat(1, 3)));
    CHECK(Rat(-1, 2) < Rat(1, 3));
    CHECK(Rat(7, 3) != Rat(7, 4));
}

TEST_CASE("rational parse accepts p and p/q and rejects junk") {
    CHECK(Rat::parse("-9/12") == Rat(-3, 4));
    CHECK(Rat::parse("7").is_integer());
    CHECK(Rat::parse("0").is_zero());
    // parse/str roundtrip
    for (const Rat& r : {Rat(3, 7), Rat(-5, 2), Rat(11), Rat(0)})
        CHECK(Rat::parse(r.str()) == r);
    CHECK_THROWS_AS(Rat::parse(""), ValidationError);
    CHECK_THROWS_AS(Rat::parse("1/"), ValidationError);
    CHECK_THROWS_AS(Rat::parse("a/b"), ValidationError);
    CHECK_THROWS_AS(Rat::parse("1/0"), Error);
}

TEST_CASE("division by zero and int64 overflow are reported, not wrapped") {
    CHECK_THROWS_AS(Rat(1) / Rat(0), ValidationError);
    const std::int64_t big = std::int64_t{1} << 62;
    CHECK_THROWS_AS(Rat(big) * Rat(big), OverflowError);
    CHECK_THROWS_AS(Rat(INT64_MAX) + Rat(INT64_MAX), OverflowError);
    // products that cancel back under the limit still work
    CHECK(Rat(big, 3) * Rat(3, big) == Rat(1));
}

TEST_CASE("rng streams are deterministic per seed") {
    Rng a(1);
    CHECK(a.next() == 10451216379200822465ull);
    CHECK(a.next() == 13757245211066428519ull);
    CHECK(a.next() == 17911839290282890590ull);
    CHECK(Rng(2).next() == 10905525725756348110ull);

    Rng b(99), c(99);
    for (int i = 0; i < 200; ++i) CHECK(b.next() == c.next());
}

TEST_CASE("rng bounded draws stay in range") {
    Rng r(7);
    for (int i = 0; i < 500; ++i) {
        CHECK(r.below(10) < 10);
        CHECK(r.below(1) == 0);
        std::int64_t v = r.range(-3, 3);
        CHECK(v >= -3);
        CHECK(v <= 3);
    }
    CHECK(r.below(0) == 0);
}
