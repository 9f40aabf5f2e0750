#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <string>
#include <vector>

#include "orelab/catalog.hpp"
#include "orelab/errors.hpp"
#include "orelab/properties.hpp"
#include "orelab/ring.hpp"
#include "orelab/verdict.hpp"

using namespace orelab;

namespace {

QdPtr entry_qd(const std::string& name) {
    const CatalogEntry* e = find_entry(name);
    REQUIRE(e != nullptr);
    return e->instantiate(Config{});
}

Verdict run(const QdPtr& qd, const std::string& prop) {
    return run_property(prop, qd->ring(), qd, Config{});
}

std::string first_part(const Verdict& v) {
    REQUIRE(v.witness.has_value());
    REQUIRE(!v.witness->parts.empty());
    return v.witness->parts[0].second;
}

} // namespace

TEST_CASE("the property table is fixed") {
    const std::vector<std::string> want = {
        "reduced",       "abelian",    "semiprime", "baer",
        "quasi-baer",    "pq-baer-right", "pq-baer-left", "pp-right",
        "rigid",         "c-sigma",    "compatible", "skew-armendariz",
        "stable"};
    CHECK(property_names() == want);
}

TEST_CASE("field-like rings certify everything") {
    auto z2 = entry_qd("zn2");
    for (const std::string& p : property_names()) {
        Verdict v = run(z2, p);
        if (p == "skew-armendariz") {
            CHECK(v.kind == VerdictKind::HoldsBounded);
            REQUIRE(v.bounds.has_value());
            CHECK(*v.bounds->scanned == 262144);
            CHECK(*v.bounds->deg_bound == 8);
        } else {
            CHECK(v.kind == VerdictKind::Holds);
        }
        CHECK(v.property == p);
    }
}

TEST_CASE("zn4 fails exactly the nilpotent-sensitive properties") {
    auto z4 = entry_qd("zn4");
    const std::map<std::string, VerdictKind> want = {
        {"reduced", VerdictKind::Fails},
        {"abelian", VerdictKind::Holds},
        {"semiprime", VerdictKind::Fails},
        {"baer", VerdictKind::Fails},
        {"quasi-baer", VerdictKind::Fails},
        {"pq-baer-right", VerdictKind::Fails},
        {"pq-baer-left", VerdictKind::Fails},
        {"pp-right", VerdictKind::Fails},
        {"rigid", VerdictKind::Fails},
        {"c-sigma", VerdictKind::Holds},
        {"compatible", VerdictKind::Holds},
        {"skew-armendariz", VerdictKind::HoldsBounded},
        {"stable", VerdictKind::Holds},
    };
    for (const auto& [prop, kind] : want) CHECK(run(z4, prop).kind == kind);
    CHECK(first_part(run(z4, "reduced")) == "2");
    CHECK(first_part(run(z4, "rigid")) == "2");
    Verdict baer = run(z4, "baer");
    REQUIRE(baer.witness.has_value());
    CHECK(baer.witness->parts.size() == 2); // a failing subset x0, x1
}

TEST_CASE("the two triangular instances separate map-dependent properties") {
    auto idq = entry_qd("t2f2_id");
    auto inner = entry_qd("t2f2_inner");

    // ring-only rows agree between the two instances
    for (const char* p : {"reduced", "semiprime", "abelian"})
        CHECK(run(idq, p).kind == run(inner, p).kind);
    CHECK(run(idq, "reduced").kind == VerdictKind::Fails);
    CHECK(first_part(run(idq, "reduced")) == "(0, 1, 0)");
    for (const char* p : {"baer", "quasi-baer", "pq-baer-right",
                          "pq-baer-left", "pp-right"})
        CHECK(run(idq, p).kind == VerdictKind::Holds);

    // the identity instance is compatible and stable, the inner one is not
    CHECK(run(idq, "compatible").kind == VerdictKind::Holds);
    CHECK(run(idq, "stable").kind == VerdictKind::Holds);
    Verdict comp = run(inner, "compatible");
    CHECK(comp.kind == VerdictKind::Fails);
    const std::vector<std::pair<std::string, std::string>> comp_want = {
        {"a", "(1, 0, 0)"}, {"b", "(0, 0, 1)"}};
    CHECK(comp.witness->parts == comp_want);
    Verdict st = run(inner, "stable");
    CHECK(st.kind == VerdictKind::Fails);
    CHECK(first_part(st) == "(1, 0, 0)");

    // both fail skew-armendariz with the same classical counterexample
    for (const auto& qd : {idq, inner}) {
        Verdict arm = run(qd, "skew-armendariz");
        CHECK(arm.kind == VerdictKind::Fails);
        REQUIRE(arm.witness.has_value());
        CHECK(arm.witness->parts.size() == 4);
        CHECK(arm.witness->parts[0].second ==
              "{(1, 0, 0)} + {(0, 1, 0)} x");
        CHECK(arm.witness->parts[1].second ==
              "{(0, 0, 1)} + {(0, 1, 0)} x");
    }
}

TEST_CASE("sign-twisted trivial extension: pq-baer fails with a shared list") {
    auto tri = entry_qd("tri4_negate");
    Verdict pq = run(tri, "pq-baer-right");
    CHECK(pq.kind == VerdictKind::Fails);
    CHECK(first_part(pq) == "(0, 1)");
    CHECK(pq.all_witnesses.size() == 7);
    bool has20 = false;
    for (const Witness& w : pq.all_witnesses)
        if (w.parts.size() == 1 && w.parts[0].second == "(2, 0)") has20 = true;
    CHECK(has20);
    CHECK(run(tri, "abelian").kind == VerdictKind::Holds);
    CHECK(run(tri, "c-sigma").kind == VerdictKind::Holds);
    CHECK(run(tri, "compatible").kind == VerdictKind::Holds);
    CHECK(run(tri, "stable").kind == VerdictKind::Holds);
    Verdict arm = run(tri, "skew-armendariz");
    CHECK(arm.kind == VerdictKind::Fails);
    CHECK(arm.witness->parts[0].second == "{(2, 0)} + {(0, 1)} x");
}

TEST_CASE("sampled backends stay honest about what they saw") {
    auto zp = entry_qd("z2poly_eval0");
    Verdict red = run(zp, "reduced");
    CHECK(red.kind == VerdictKind::Inconclusive);
    CHECK(red.note == "no nilpotent in the sampled stream; no closed form applies");
    CHECK(run(zp, "abelian").kind == VerdictKind::Holds); // commutative
    CHECK(run(zp, "baer").kind == VerdictKind::Inconclusive);
    Verdict cs = run(zp, "c-sigma");
    CHECK(cs.kind == VerdictKind::Fails);
    CHECK(cs.witness->parts[0].second == "1");
    CHECK(cs.witness->parts[1].second == "t");
    CHECK(run(zp, "compatible").kind == VerdictKind::Fails);
    CHECK(run(zp, "stable").kind == VerdictKind::Holds);

    auto g = entry_qd("gauss_conj");
    Verdict rig = run(g, "rigid");
    CHECK(rig.kind == VerdictKind::Inconclusive);
    REQUIRE(rig.bounds.has_value());
    CHECK(*rig.bounds->samples == 2000);
    CHECK(*rig.bounds->seed == 1);
    CHECK(run(g, "abelian").kind == VerdictKind::Holds); // field, closed form

    auto ts = entry_qd("tsum_square");
    CHECK(run(ts, "stable").kind == VerdictKind::Holds); // closed form
    Verdict sp = run(ts, "semiprime");
    CHECK(sp.kind == VerdictKind::Fails);
    CHECK(sp.witness->note == "a != 0 and aRa = 0, componentwise");
}

TEST_CASE("every failing witness replays from its text form") {
    Config cfg;
    int replayed = 0;
    for (const CatalogEntry& e : catalog()) {
        QdPtr qd = e.instantiate(cfg);
        for (const std::string& p : property_names()) {
            Verdict v = run_property(p, qd->ring(), qd, cfg);
            if (v.kind != VerdictKind::Fails) continue;
            CAPTURE(e.name);
            CAPTURE(p);
            CHECK(replay_witness(v, qd->ring(), qd, cfg));
            ++replayed;
        }
    }
    CHECK(replayed >= 30);
}

TEST_CASE("tampered witnesses are rejected on replay") {
    auto z4 = entry_qd("zn4");
    Verdict v = run(z4, "reduced");
    REQUIRE(v.kind == VerdictKind::Fails);
    Verdict bent = v;
    bent.witness->parts[0].second = "1"; // 1 squares to 1, not 0
    CHECK(!replay_witness(bent, z4->ring(), z4, Config{}));

    auto tri = entry_qd("tri4_negate");
    Verdict arm = run(tri, "skew-armendariz");
    Verdict bent2 = arm;
    bent2.witness->parts[0].second = "{(1, 0)} + {(0, 1)} x";
    CHECK(!replay_witness(bent2, tri->ring(), tri, Config{}));
}

TEST_CASE("dispatch rejects unknown names and missing maps") {
    auto z4 = entry_qd("zn4");
    CHECK_THROWS_AS(run_property("frobenius", z4->ring(), z4, Config{}),
                    ValidationError);
    CHECK_THROWS_AS(run_property("compatible", z4->ring(), nullptr, Config{}),
                    ValidationError);
    CHECK_THROWS_AS(run_property("stable", z4->ring(), nullptr, Config{}),
                    ValidationError);
    // ring-only properties run without a map pair
    CHECK(run_property("reduced", z4->ring(), nullptr, Config{}).kind ==
          VerdictKind::Fails);
}

TEST_CASE("verdicts serialize deterministically and roundtrip") {
    auto tri = entry_qd("tri4_negate");
    Verdict v = run(tri, "pq-baer-right");
    auto j = v.to_json();
    CHECK(j.dump() == run(tri, "pq-baer-right").to_json().dump());
    Verdict back = Verdict::from_json(j);
    CHECK(back.kind == v.kind);
    CHECK(back.property == v.property);
    CHECK(back.subject == v.subject);
    CHECK(back.witness->parts == v.witness->parts);
    CHECK(back.all_witnesses.size() == v.all_witnesses.size());
    CHECK(back.to_json() == j);

    CHECK(to_string(VerdictKind::HoldsBounded) == "holds-bounded");
    CHECK(verdict_kind_from("holds-bounded") == VerdictKind::HoldsBounded);
    CHECK_THROWS_AS(verdict_kind_from("perhaps"), ValidationError);
}

TEST_CASE("armendariz degree bounds are steerable") {
    auto z2 = entry_qd("zn2");
    Config c2;
    c2.deg_bound = 2;
    Verdict v = is_skew_armendariz(z2, c2);
    CHECK(v.kind == VerdictKind::HoldsBounded);
    CHECK(*v.bounds->deg_bound == 2);
    CHECK(*v.bounds->scanned == 64);

    Config small;
    small.scan_cap = 10;
    Verdict auto_pick = is_skew_armendariz(z2, small);
    CHECK(*auto_pick.bounds->deg_bound == 0);
    CHECK(*auto_pick.bounds->scanned == 4);

    Config forced = small;
    forced.deg_bound = 8;
    CHECK_THROWS_AS(is_skew_armendariz(z2, forced), CapError);
}
