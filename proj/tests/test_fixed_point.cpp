#include "doctest.h"

#include "bamsim/core/fixed_point.hpp"
#include "bamsim/workload/rng.hpp"

using namespace bamsim;

TEST_CASE("bandwidth quantizes to 0.1 Mbps") {
    CHECK(mbps(435.4).ticks() == 4354);
    CHECK(mbps(248.8).ticks() == 2488);
    CHECK(mbps(622.0).ticks() == 6220);
    CHECK(mbps(0.05).ticks() == 1);  // rounds to nearest tick
}

TEST_CASE("formatting is fixed-digit") {
    CHECK(mbps(248.8).str() == "248.8");
    CHECK(mbps(5.0).str() == "5.0");
    CHECK(seconds(0.0).str() == "0.000");
    CHECK(seconds(1.05).str() == "1.050");
    CHECK(seconds(300.001).str() == "300.001");
    CHECK(Bandwidth::from_ticks(-12).str() == "-1.2");
}

TEST_CASE("strict parsing") {
    CHECK(Bandwidth::parse("248.8")->ticks() == 2488);
    CHECK(Bandwidth::parse("5")->ticks() == 50);
    CHECK(Seconds::parse("1.05")->ticks() == 1050);
    CHECK(Seconds::parse("1.050")->ticks() == 1050);
    CHECK(!Bandwidth::parse(""));
    CHECK(!Bandwidth::parse("1.25"));   // too many fractional digits
    CHECK(!Bandwidth::parse("1."));
    CHECK(!Bandwidth::parse(".5"));
    CHECK(!Bandwidth::parse("1,5"));
    CHECK(!Seconds::parse("1.0500"));
    CHECK(!Bandwidth::parse("12a"));
}

TEST_CASE("format/parse round-trip over random ticks") {
    SplitMix64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        const auto ticks = static_cast<std::int64_t>(rng.next_below(10'000'000));
        const Bandwidth b = Bandwidth::from_ticks(ticks);
        REQUIRE(Bandwidth::parse(b.str()));
        CHECK(Bandwidth::parse(b.str())->ticks() == ticks);
        const Seconds s = Seconds::from_ticks(ticks);
        REQUIRE(Seconds::parse(s.str()));
        CHECK(Seconds::parse(s.str())->ticks() == ticks);
    }
}

TEST_CASE("exact comparisons at constraint boundaries") {
    CHECK(mbps(248.8) + mbps(5.0) > mbps(248.8));
    CHECK(mbps(100.0) + mbps(148.8) == mbps(248.8));
    CHECK(mbps(622.0) - mbps(435.4) == mbps(186.6));
}
