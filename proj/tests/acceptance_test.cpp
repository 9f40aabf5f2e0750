// Acceptance gate: one line per criterion, nonzero exit on any failure.
// Each criterion re-derives its claim from the public API; nothing here
// trusts the unit suite.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <exception>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "orelab/annihilators.hpp"
#include "orelab/catalog.hpp"
#include "orelab/cli.hpp"
#include "orelab/errors.hpp"
#include "orelab/maps.hpp"
#include "orelab/ore_poly.hpp"
#include "orelab/properties.hpp"
#include "orelab/ring.hpp"
#include "orelab/rng.hpp"
#include "orelab/theorem_lab.hpp"

using namespace orelab;

namespace {

struct Tally {
    int failures = 0;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& what) {
        if (!ok) {
            ++failures;
            notes.push_back(what);
        }
    }
};

QdPtr entry_qd(const std::string& name) {
    const CatalogEntry* e = find_entry(name);
    if (!e) throw ValidationError("missing catalog entry " + name);
    return e->instantiate(Config{});
}

SkewPoly random_poly(const CtxPtr& ctx, Rng& rng, int max_deg) {
    const auto& r = *ctx->ring;
    std::vector<Elem> cs;
    int deg = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_deg) + 1));
    for (int k = 0; k <= deg; ++k)
        cs.push_back(r.enumerable()
                         ? Elem{static_cast<std::uint32_t>(rng.below(r.size()))}
                         : r.sample(rng, 4));
    return SkewPoly(ctx, std::move(cs));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

// 1. Every catalog pin reruns clean, including the documented worked
//    examples, within the time budget.
void criterion1(Tally& t) {
    auto t0 = std::chrono::steady_clock::now();
    Config cfg;

    for (const CatalogEntry& e : catalog()) {
        EntryReport rep = run_entry(e, cfg);
        t.require(rep.ok, "catalog entry " + e.name + " has a mismatch");
    }

    // the evaluation-at-zero instance refutes C_sigma with f = 1 + t, g = t
    auto zp = entry_qd("z2poly_eval0");
    Verdict cs;
    cs.kind = VerdictKind::Fails;
    cs.property = "c-sigma";
    cs.witness = Witness{{{"a", "[1,1]"}, {"b", "[0,1]"}}, ""};
    t.require(replay_witness(cs, zp->ring(), zp, cfg),
              "documented c-sigma witness does not replay");
    try {
        ore_pq_baer_bounded(zp, cfg);
        t.require(false, "eval0 forward transfer was not blocked");
    } catch (const HypothesisError& e) {
        t.require(e.hypothesis == "c-sigma",
                  "eval0 forward transfer blocked on the wrong hypothesis");
    }

    // the sign twist keeps compatibility (256 exhaustive pairs) but loses
    // skew-armendariz on the documented pair, whose cross term is (0, 2)
    auto tri = entry_qd("tri4_negate");
    const auto& trr = *tri->ring();
    t.require(run_property("compatible", tri->ring(), tri, cfg).kind ==
                  VerdictKind::Holds,
              "tri4 compatibility is not certified");
    Verdict arm;
    arm.kind = VerdictKind::Fails;
    arm.property = "skew-armendariz";
    arm.witness = Witness{{{"p", "{(2, 0)} + {(2, 1)} x"},
                           {"q", "{(2, 0)} + {(2, 1)} x"},
                           {"i", "1"},
                           {"j", "0"}},
                          ""};
    t.require(replay_witness(arm, tri->ring(), tri, cfg),
              "documented armendariz witness does not replay");
    Elem cross = trr.mul(trr.parse("(2, 1)"), tri->sigma()(trr.parse("(2, 0)")));
    t.require(trr.format(cross) == "(0, 2)",
              "armendariz cross term a1 sigma(b0) is not (0, 2)");

    // the integer-by-rational pair ring: rigid fails at (0, 1), C_sigma
    // stays open after at least 2000 sampled pairs, idempotents are known
    auto irt = entry_qd("int_rat_tri_halve");
    Verdict rig = run_property("rigid", irt->ring(), irt, cfg);
    t.require(rig.kind == VerdictKind::Fails && rig.witness &&
                  rig.witness->parts[0].second == "(0, 1)",
              "int_rat_tri rigidity witness is not (0, 1)");
    Verdict ics = run_property("c-sigma", irt->ring(), irt, cfg);
    t.require(ics.kind == VerdictKind::Inconclusive && ics.bounds &&
                  ics.bounds->pairs && *ics.bounds->pairs >= 2000,
              "int_rat_tri C_sigma did not sample enough pairs");
    auto idems = irt->ring()->known_idempotents();
    t.require(idems && idems->size() == 2 &&
                  irt->ring()->format((*idems)[0]) == "(0, 0)" &&
                  irt->ring()->format((*idems)[1]) == "(1, 0)",
              "int_rat_tri idempotents are not {(0, 0), (1, 0)}");

    // conjugation on the gaussian rationals survives sampled rigidity
    auto g = entry_qd("gauss_conj");
    Verdict grig = run_property("rigid", g->ring(), g, cfg);
    t.require(grig.kind == VerdictKind::Inconclusive && grig.bounds &&
                  grig.bounds->samples && *grig.bounds->samples >= 2000,
              "gauss rigidity did not sample enough elements");

    t.require(seconds_since(t0) <= 60.0, "catalog rerun exceeded 60 s");
}

// 2. The recurrence and the word-expansion oracle agree on every f map.
void criterion2(Tally& t) {
    for (const char* name : {"tri4_negate", "t2f2_id", "t2f2_inner"}) {
        auto qd = entry_qd(name);
        const auto& r = *qd->ring();
        for (std::uint32_t j = 0; j <= 8; ++j)
            for (std::uint32_t i = 0; i <= j; ++i)
                for (std::uint32_t k = 0; k < r.size(); ++k)
                    t.require(qd->f(i, j, Elem{k}) ==
                                  qd->f_oracle(i, j, Elem{k}),
                              std::string("f mismatch on ") + name);
    }
    auto g = entry_qd("gauss_conj");
    Config cfg;
    auto elems = element_stream(*g->ring(), 100, cfg);
    for (std::uint32_t j = 0; j <= 8; ++j)
        for (std::uint32_t i = 0; i <= j; ++i)
            for (const Elem& e : elems)
                t.require(g->f(i, j, e) == g->f_oracle(i, j, e),
                          "f mismatch on gauss_conj");
}

// 3. Skew multiplication passes random associativity/distributivity on
//    every instance and reduces to convolution under the identity twist.
void criterion3(Tally& t) {
    for (const CatalogEntry& e : catalog()) {
        QdPtr qd = e.instantiate(Config{});
        CtxPtr ctx = make_context(qd->ring(), qd);
        Rng rng(2026);
        for (int trial = 0; trial < 500; ++trial) {
            SkewPoly p = random_poly(ctx, rng, 3);
            SkewPoly q = random_poly(ctx, rng, 3);
            SkewPoly w = random_poly(ctx, rng, 3);
            t.require(p.mul(q).mul(w) == p.mul(q.mul(w)),
                      "associativity failed on " + e.name);
            t.require(p.mul(q.add(w)) == p.mul(q).add(p.mul(w)),
                      "left distributivity failed on " + e.name);
            t.require(p.add(q).mul(w) == p.mul(w).add(q.mul(w)),
                      "right distributivity failed on " + e.name);
        }
    }

    // identity twist over F2[t]: the product is plain convolution
    Config cfg;
    RingPtr f2t = entry_qd("z2poly_eval0")->ring();
    Endo id = make_endo(f2t, nlohmann::json{{"kind", "identity"}}, cfg);
    Derivation zero =
        make_derivation(f2t, id, nlohmann::json{{"kind", "zero"}}, cfg);
    QdPtr qd = QuasiDerivation::make(f2t, id, zero, cfg);
    CtxPtr ctx = make_context(f2t, qd);
    Rng rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        SkewPoly p = random_poly(ctx, rng, 3);
        SkewPoly q = random_poly(ctx, rng, 3);
        SkewPoly got = p.mul(q);
        if (p.is_zero() || q.is_zero()) {
            t.require(got.is_zero(), "zero product has coefficients");
            continue;
        }
        std::vector<Elem> want(
            static_cast<std::size_t>(p.degree() + q.degree()) + 1,
            f2t->zero());
        for (int i = 0; i <= p.degree(); ++i)
            for (int j = 0; j <= q.degree(); ++j) {
                auto& slot = want[static_cast<std::size_t>(i + j)];
                slot = f2t->add(
                    slot, f2t->mul(p.coeff(static_cast<std::size_t>(i)),
                                   q.coeff(static_cast<std::size_t>(j))));
            }
        t.require(got == SkewPoly(ctx, want),
                  "identity twist is not convolution");
    }
}

// 4. The standalone lemmas find zero violations across the catalog.
void criterion4(Tally& t) {
    Config cfg;
    for (const char* name : {"tri4_negate", "t2f2_id", "t2f2_inner"}) {
        Verdict v = lemma_stability(entry_qd(name), 6, cfg);
        t.require(v.kind != VerdictKind::Fails,
                  std::string("stability lemma violated on ") + name);
    }
    for (const CatalogEntry& e : catalog()) {
        QdPtr qd = e.instantiate(cfg);
        if (qd->ring()->enumerable() && qd->ring()->size() <= cfg.endo_cap) {
            Verdict sweep = lemma_rigid_sweep(qd->ring(), cfg);
            t.require(sweep.kind == VerdictKind::Holds,
                      "rigidity equivalence violated on " + e.name);
        }
        if (run_property("compatible", qd->ring(), qd, cfg).kind ==
            VerdictKind::Holds) {
            Verdict v = lemma_compat_f(qd, 4, cfg);
            t.require(v.kind != VerdictKind::Fails,
                      "compatibility lemma violated on " + e.name);
        }
    }
}

// 5. The forward transfer on the triangular instance: every polynomial of
//    degree <= 1 gets a left semicentral idempotent generating its bounded
//    right annihilator, within the time budget.
void criterion5(Tally& t) {
    auto t0 = std::chrono::steady_clock::now();
    Config cfg;
    cfg.deg_p = 1;
    cfg.deg_phi = 2;
    auto qd = entry_qd("t2f2_id");
    const RingPtr& r = qd->ring();
    CtxPtr ctx = make_context(r, qd);

    Verdict fwd = ore_pq_baer_bounded(qd, cfg);
    t.require(fwd.kind == VerdictKind::HoldsBounded &&
                  fwd.bounds && *fwd.bounds->scanned == 64,
              "forward transfer did not certify all 64 polynomials");

    IdempotentProfile prof = idempotent_profile(r);
    const std::uint64_t total = 64; // 8^2 coefficient tuples of degree <= 1
    for (std::uint64_t k = 0; k < total; ++k) {
        SkewPoly p = tuple_poly(ctx, k, 2);
        PqBaerWitness w = build_pq_baer_witness(p, 2, 2, cfg);
        t.require(w.ok(), "witness claims failed at tuple " +
                              std::to_string(k));
        bool left_semi =
            std::find(prof.left_semicentral.begin(),
                      prof.left_semicentral.end(),
                      w.e.idx()) != prof.left_semicentral.end();
        t.require(left_semi, "witness idempotent is not left semicentral");

        // eR equals the intersection of the coefficient annihilators
        IndexSet inter(r->size());
        for (std::uint32_t i = 0; i < r->size(); ++i) inter.set(i);
        for (int i = 0; i <= p.degree(); ++i)
            inter = inter.intersect(
                right_ann_principal(r, p.coeff(static_cast<std::size_t>(i)))
                    .members);
        t.require(right_ideal_of(r, w.e).members == inter,
                  "eR differs from the annihilator intersection at tuple " +
                      std::to_string(k));
    }
    t.require(seconds_since(t0) <= 120.0,
              "forward transfer audit exceeded 120 s");
}

// 6. Converse direction on the same instance: degree-zero extraction of
//    the bounded top annihilator recovers r(aR) exactly, per element.
void criterion6(Tally& t) {
    Config cfg;
    auto qd = entry_qd("t2f2_id");
    const RingPtr& r = qd->ring();
    CtxPtr ctx = make_context(r, qd);

    Verdict conv = converse_extraction(qd, cfg);
    t.require(conv.kind == VerdictKind::HoldsBounded,
              "converse extraction is not bounded-certified");

    for (std::uint32_t a = 0; a < r->size(); ++a) {
        AnnSet base = right_ann_principal(r, Elem{a});
        auto members = bounded_right_ann(SkewPoly::constant(ctx, Elem{a}),
                                         PrincipalKind::ore, 2, 2, cfg);
        std::set<std::uint32_t> constants;
        for (const SkewPoly& phi : members)
            constants.insert(r->index(phi.coeff(0)));
        std::set<std::uint32_t> want;
        for (std::uint32_t i : base.members.indices()) want.insert(i);
        t.require(constants == want,
                  "constant coefficients differ from r(aR) at a = " +
                      r->format(Elem{a}));
        std::uint64_t expect = 1;
        for (int i = 0; i < 3; ++i) expect *= base.size();
        t.require(members.size() == expect,
                  "bounded annihilator size is not |r(aR)|^3 at a = " +
                      r->format(Elem{a}));
    }
}

// 7. The refutation side: the sign-twisted extension fails right p.q.-Baer
//    at (2, 0), whose annihilator has no idempotent generator, and both
//    semicentral families intersect to the central idempotents everywhere.
void criterion7(Tally& t) {
    Config cfg;
    auto tri = entry_qd("tri4_negate");
    const RingPtr& r = tri->ring();

    Verdict pq = is_pq_baer_right(r, cfg);
    bool has20 = false;
    for (const Witness& w : pq.all_witnesses)
        if (!w.parts.empty() && w.parts[0].second == "(2, 0)") has20 = true;
    t.require(pq.kind == VerdictKind::Fails && has20,
              "pq-baer refutation does not list (2, 0)");

    AnnSet ann = right_ann_principal(r, r->parse("(2, 0)"));
    std::vector<std::string> got;
    for (const Elem& e : ann.elements()) got.push_back(r->format(e));
    t.require(got == std::vector<std::string>{"(0, 0)", "(0, 2)", "(2, 0)",
                                              "(2, 2)"},
              "r((2, 0) R) is not the expected four elements");
    t.require(!idempotent_generator_right(ann).has_value(),
              "r((2, 0) R) unexpectedly has an idempotent generator");

    for (const CatalogEntry& e : catalog()) {
        RingPtr ring = e.instantiate(cfg)->ring();
        if (!ring->enumerable()) continue;
        IdempotentProfile p = idempotent_profile(ring);
        std::vector<std::uint32_t> both;
        std::set_intersection(p.left_semicentral.begin(),
                              p.left_semicentral.end(),
                              p.right_semicentral.begin(),
                              p.right_semicentral.end(),
                              std::back_inserter(both));
        t.require(both == p.central,
                  "semicentral intersection is not central on " + e.name);
    }
}

// 8. Identical seeds produce byte-identical machine reports.
void criterion8(Tally& t) {
    auto run = [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = run_cli(args, out, err);
        return std::make_pair(code, out.str());
    };
    for (const char* name : {"tri4_negate", "gauss_conj",
                             "int_rat_tri_halve"}) {
        std::vector<std::string> args = {"report", "--name", name,
                                         "--format", "machine", "--seed",
                                         "11", "--samples", "500"};
        auto a = run(args);
        auto b = run(args);
        t.require(a.first == 0 && a.second == b.second && !a.second.empty(),
                  std::string("report replay differs on ") + name);
    }
    std::vector<std::string> paper_args = {"paper", "--name", "zn4",
                                           "--format", "machine"};
    auto a = run(paper_args);
    auto b = run(paper_args);
    t.require(a.second == b.second && !a.second.empty(),
              "paper replay differs on zn4");
}

} // namespace

int main() {
    struct Criterion {
        const char* label;
        std::function<void(Tally&)> fn;
    };
    const std::vector<Criterion> criteria = {
        {"catalog pins and worked examples rerun clean in 60 s", criterion1},
        {"f maps agree with the word-expansion oracle through j = 8",
         criterion2},
        {"skew products pass random laws and the convolution oracle",
         criterion3},
        {"standalone lemmas find zero violations", criterion4},
        {"forward transfer audited per polynomial in 120 s", criterion5},
        {"converse extraction recovers base annihilators exactly",
         criterion6},
        {"refutation side pins the failing generator and its annihilator",
         criterion7},
        {"machine reports replay byte for byte under fixed seeds",
         criterion8},
    };

    int failed = 0;
    for (std::size_t k = 0; k < criteria.size(); ++k) {
        Tally t;
        try {
            criteria[k].fn(t);
        } catch (const std::exception& e) {
            t.require(false, std::string("unexpected exception: ") + e.what());
        }
        if (t.failures == 0) {
            std::printf("PASS: %zu - %s\n", k + 1, criteria[k].label);
        } else {
            ++failed;
            std::printf("FAIL: %zu - %s\n", k + 1, criteria[k].label);
            int shown = 0;
            for (const std::string& n : t.notes) {
                if (shown++ == 5) {
                    std::printf("      ... %d more\n",
                                t.failures - shown + 1);
                    break;
                }
                std::printf("      %s\n", n.c_str());
            }
        }
    }
    return failed ? 1 : 0;
}
