#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>
#include <vector>

#include "orelab/catalog.hpp"
#include "orelab/errors.hpp"
#include "orelab/maps.hpp"
#include "orelab/ore_poly.hpp"
#include "orelab/theorem_lab.hpp"

using namespace orelab;

namespace {

QdPtr entry_qd(const std::string& name) {
    const CatalogEntry* e = find_entry(name);
    REQUIRE(e != nullptr);
    return e->instantiate(Config{});
}

} // namespace

TEST_CASE("stability lemma: stable generated annihilators kill every f map") {
    Config cfg;
    struct Row {
        const char* name;
        std::uint64_t scanned;
        const char* note_head;
    };
    for (const Row& row : {Row{"t2f2_id", 5184, "8 of 8"},
                           Row{"t2f2_inner", 2592, "5 of 8"},
                           Row{"tri4_negate", 10368, "9 of 16"},
                           Row{"zn4", 648, "3 of 4"}}) {
        Verdict v = lemma_stability(entry_qd(row.name), 6, cfg);
        CAPTURE(row.name);
        CHECK(v.kind == VerdictKind::HoldsBounded);
        REQUIRE(v.bounds.has_value());
        CHECK(*v.bounds->scanned == row.scanned);
        CHECK(*v.bounds->j_max == 6);
        CHECK(v.note.rfind(row.note_head, 0) == 0);
    }
    Verdict ts = lemma_stability(entry_qd("tsum_square"), 6, cfg);
    CHECK(ts.kind == VerdictKind::Inconclusive);
    CHECK(ts.note == "needs an enumerable backend");
}

TEST_CASE("compatibility lemma: ab = 0 propagates through every f map") {
    Config cfg;
    Verdict t2 = lemma_compat_f(entry_qd("t2f2_id"), 4, cfg);
    CHECK(t2.kind == VerdictKind::HoldsBounded);
    CHECK(*t2.bounds->pairs == 26);

    Verdict tri = lemma_compat_f(entry_qd("tri4_negate"), 4, cfg);
    CHECK(tri.kind == VerdictKind::HoldsBounded);
    CHECK(*tri.bounds->pairs == 56);

    // not compatible: the lemma is vacuous, and says so
    Verdict inner = lemma_compat_f(entry_qd("t2f2_inner"), 4, cfg);
    CHECK(inner.kind == VerdictKind::Inconclusive);
    CHECK(inner.note.find("vacuous") != std::string::npos);

    // sampled backends report bounded pair evidence without certifying
    Verdict g = lemma_compat_f(entry_qd("gauss_conj"), 4, cfg);
    CHECK(g.kind == VerdictKind::Inconclusive);
    CHECK(*g.bounds->pairs == 124);
    Verdict irt = lemma_compat_f(entry_qd("int_rat_tri_halve"), 4, cfg);
    CHECK(irt.kind == VerdictKind::Inconclusive);
    CHECK(*irt.bounds->pairs == 208);
}

TEST_CASE("rigidity is reduced plus the c-sigma condition") {
    Config cfg;
    auto tri = entry_qd("tri4_negate");
    Verdict eq = lemma_rigid_equivalence(tri->ring(), tri->sigma(), cfg);
    CHECK(eq.kind == VerdictKind::Holds);
    CHECK(eq.note ==
          "equivalence consistent (rigid: fails, c-sigma: holds, "
          "reduced: fails)");

    for (const char* name : {"zn2", "zn3", "zn4", "zn2_zn2", "t2f2_id"}) {
        Verdict v = lemma_rigid_sweep(entry_qd(name)->ring(), cfg);
        CAPTURE(name);
        CHECK(v.kind == VerdictKind::Holds);
    }
    // 16 elements is past the endomorphism enumeration cap
    CHECK_THROWS_AS(lemma_rigid_sweep(tri->ring(), cfg), CapError);
}

TEST_CASE("the coefficient cascade of a twisted product, expanded by hand") {
    // delta = 0 here, so x a = sigma(a) x and
    // (c0 + c1 x)(b0 + b1 x) = c0 b0 + (c0 b1 + c1 sigma(b0)) x
    //                          + c1 sigma(b1) x^2
    auto qd = entry_qd("tri4_negate");
    const auto& r = *qd->ring();
    CHECK(qd->delta().is_zero_map());
    CtxPtr ctx = make_context(qd->ring(), qd);
    Elem c0 = r.parse("(1, 1)");
    Elem c1 = r.parse("(0, 1)");
    SkewPoly p(ctx, {c0, c1});
    for (std::uint32_t bi = 0; bi < r.size(); ++bi)
        for (std::uint32_t a0 = 0; a0 < r.size(); ++a0)
            for (std::uint32_t a1 = 0; a1 < r.size(); ++a1) {
                Elem b{bi};
                Elem b0 = r.mul(b, Elem{a0});
                Elem b1 = r.mul(b, Elem{a1});
                SkewPoly got = p.mul(SkewPoly(ctx, {b0, b1}));
                Elem s0 = qd->sigma()(b0);
                Elem s1 = qd->sigma()(b1);
                SkewPoly want(
                    ctx, {r.mul(c0, b0),
                          r.add(r.mul(c0, b1), r.mul(c1, s0)),
                          r.mul(c1, s1)});
                CHECK(got == want);
            }
}

TEST_CASE("the constructive witness behind the forward transfer") {
    Config cfg;
    auto qd = entry_qd("t2f2_id");
    const auto& r = *qd->ring();
    CtxPtr ctx = make_context(qd->ring(), qd);

    SkewPoly p = parse_skew_poly(ctx, "{#4} + {#1} x");
    PqBaerWitness w = build_pq_baer_witness(p, 2, 2, cfg);
    CHECK(w.ok());
    REQUIRE(w.e_parts.size() == 2);
    CHECK(r.format(w.e_parts[0]) == "(0, 0, 0)");
    CHECK(r.format(w.e_parts[1]) == "(1, 0, 0)");
    CHECK(r.is_zero(w.e)); // (1,0,0) * 0
    CHECK(w.ann_members == 1);
    CHECK(w.expected == 1);
    CHECK(w.str().find("claim 1") != std::string::npos);
    CHECK(w.str().find("claim 2") != std::string::npos);

    // the zero polynomial: every e_i is 1, the annihilator is everything
    PqBaerWitness w0 = build_pq_baer_witness(SkewPoly::zero(ctx), 1, 1, cfg);
    CHECK(w0.ok());
    CHECK(w0.e == r.one());
    CHECK(w0.ann_members == 64); // 8^(deg_phi + 1)
    CHECK(w0.expected == 64);

    // a coefficient whose annihilator has no idempotent generator
    auto tri = entry_qd("tri4_negate");
    CtxPtr tctx = make_context(tri->ring(), tri);
    SkewPoly bad = parse_skew_poly(tctx, "{(2, 0)}");
    try {
        build_pq_baer_witness(bad, 1, 1, cfg);
        FAIL("expected a hypothesis failure");
    } catch (const HypothesisError& e) {
        CHECK(e.hypothesis == "pq-baer-right");
        CHECK(std::string(e.what()).find("no idempotent generator") !=
              std::string::npos);
    }
}

TEST_CASE("forward transfer certifies bounded annihilator generation") {
    Config cfg;
    Verdict z2 = ore_pq_baer_bounded(entry_qd("zn2"), cfg);
    CHECK(z2.kind == VerdictKind::HoldsBounded);
    CHECK(*z2.bounds->scanned == 4);

    Verdict t2 = ore_pq_baer_bounded(entry_qd("t2f2_id"), cfg);
    CHECK(t2.kind == VerdictKind::HoldsBounded);
    CHECK(*t2.bounds->scanned == 64);
    CHECK(*t2.bounds->deg_p == 1);
    CHECK(*t2.bounds->deg_phi == 2);
}

TEST_CASE("forward transfer refuses instances that fail a hypothesis") {
    Config cfg;
    struct Case {
        const char* name;
        const char* hypothesis;
    };
    for (const Case& c : {Case{"tri4_negate", "pq-baer-right"},
                          Case{"t2f2_inner", "stable"},
                          Case{"z2poly_eval0", "c-sigma"}}) {
        CAPTURE(c.name);
        try {
            ore_pq_baer_bounded(entry_qd(c.name), cfg);
            FAIL("expected a hypothesis failure");
        } catch (const HypothesisError& e) {
            CHECK(e.hypothesis == c.hypothesis);
        }
    }
    // undecided hypotheses block without throwing
    Verdict ts = ore_pq_baer_bounded(entry_qd("tsum_square"), cfg);
    CHECK(ts.kind == VerdictKind::Inconclusive);
    CHECK(ts.note.find("pq-baer-right undecided") != std::string::npos);
}

TEST_CASE("converse extraction recovers base annihilators from the top") {
    Config cfg;
    Verdict t2 = converse_extraction(entry_qd("t2f2_id"), cfg);
    CHECK(t2.kind == VerdictKind::HoldsBounded);
    CHECK(*t2.bounds->scanned == 8);

    Verdict z4 = converse_extraction(entry_qd("zn4"), cfg);
    CHECK(z4.kind == VerdictKind::HoldsBounded);
    CHECK(*z4.bounds->scanned == 4);

    Verdict g = converse_extraction(entry_qd("gauss_conj"), cfg);
    CHECK(g.kind == VerdictKind::Inconclusive);
}

TEST_CASE("round trips assemble rows, branch, forward and converse") {
    Config cfg;
    HypothesisReport zn2 = theorem_roundtrip(entry_qd("zn2"), cfg);
    CHECK(zn2.rows.size() == 13);
    CHECK(zn2.branch == "iii");
    CHECK(zn2.branch_level == "certified");
    REQUIRE(zn2.forward.has_value());
    CHECK(zn2.forward->kind == VerdictKind::HoldsBounded);
    REQUIRE(zn2.converse.has_value());
    CHECK(zn2.converse->kind == VerdictKind::HoldsBounded);
    CHECK(zn2.forward_blocked.empty());

    HypothesisReport tri = theorem_roundtrip(entry_qd("tri4_negate"), cfg);
    CHECK(tri.rows.size() == 13);
    CHECK(tri.branch == "ii");
    CHECK(tri.branch_level == "certified");
    CHECK(!tri.forward.has_value());
    CHECK(tri.forward_blocked.find("hypothesis pq-baer-right failed") !=
          std::string::npos);
    CHECK(tri.converse->kind == VerdictKind::HoldsBounded);

    HypothesisReport z4 = theorem_roundtrip(entry_qd("zn4"), cfg);
    CHECK(z4.branch == "i");
    CHECK(z4.branch_level == "bounded");

    // serialization carries the whole shape
    auto j = zn2.to_json();
    CHECK(j.at("rows").size() == 13);
    CHECK(j.at("branch") == "iii");
    CHECK(j.dump() == theorem_roundtrip(entry_qd("zn2"), cfg).to_json().dump());
    CHECK(zn2.str().find("branch") != std::string::npos);
}
