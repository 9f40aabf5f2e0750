#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>
#include <string>

#include "orelab/catalog.hpp"
#include "orelab/errors.hpp"

using namespace orelab;

TEST_CASE("the catalog carries eleven named instances") {
    const auto& all = catalog();
    CHECK(all.size() == 11);
    std::set<std::string> names;
    for (const CatalogEntry& e : all) {
        CHECK(!e.name.empty());
        CHECK(!e.headline.empty());
        CHECK(!e.expects.empty());
        names.insert(e.name);
    }
    CHECK(names.size() == all.size()); // unique names
    CHECK(find_entry("zn2") != nullptr);
    CHECK(find_entry("tri4_negate") != nullptr);
    CHECK(find_entry("no_such_ring") == nullptr);
}

TEST_CASE("every pinned expectation holds") {
    Config cfg;
    for (const CatalogEntry& e : catalog()) {
        EntryReport rep = run_entry(e, cfg);
        CAPTURE(e.name);
        CHECK(rep.ok);
        for (const CheckLine& line : rep.lines) {
            CAPTURE(line.check);
            CAPTURE(line.detail);
            CHECK(line.ok);
        }
        CHECK(rep.roundtrip.rows.size() == 13);
        CHECK(rep.name == e.name);
        // the readable and machine forms agree on the outcome
        CHECK(rep.str().find("!!") == std::string::npos);
        CHECK(rep.to_json().at("ok").get<bool>());
    }
}

TEST_CASE("instances rebuild identically") {
    Config cfg;
    const CatalogEntry* e = find_entry("tri4_negate");
    REQUIRE(e != nullptr);
    auto a = e->instantiate(cfg);
    auto b = e->instantiate(cfg);
    CHECK(a->descriptor() == b->descriptor());
    CHECK(a->ring()->descriptor() == e->ring);
    CHECK(a->sigma().descriptor() == e->sigma);
    CHECK(a->delta().descriptor() == e->delta);
}

TEST_CASE("a tampered expectation is caught, not smoothed over") {
    Config cfg;
    CatalogEntry bent = *find_entry("zn2");
    bool flipped = false;
    for (Expectation& x : bent.expects)
        if (x.check == "reduced") {
            x.expected = VerdictKind::Fails;
            flipped = true;
        }
    REQUIRE(flipped);
    EntryReport rep = run_entry(bent, cfg);
    CHECK(!rep.ok);
    CHECK(rep.str().find("!!") != std::string::npos);

    // tampering with a pinned witness part is also caught
    CatalogEntry bent2 = *find_entry("zn4");
    for (Expectation& x : bent2.expects)
        if (x.check == "reduced" && x.witness)
            (*x.witness)[0].second = "3";
    CHECK(!run_entry(bent2, cfg).ok);
}

TEST_CASE("unknown checks are rejected loudly") {
    Config cfg;
    CatalogEntry bent = *find_entry("zn2");
    Expectation bogus;
    bogus.check = "lemma-perpetual-motion";
    bogus.expected = VerdictKind::Holds;
    bent.expects.push_back(bogus);
    CHECK_THROWS_AS(run_entry(bent, cfg), ValidationError);
}
