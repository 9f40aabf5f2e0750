#include "orelab/catalog.hpp"

#include <sstream>

#include "orelab/errors.hpp"
#include "orelab/properties.hpp"

namespace orelab {

namespace {

using K = VerdictKind;

Expectation pin(std::string check, K expected, std::string anchor = "") {
    Expectation e;
    e.check = std::move(check);
    e.expected = expected;
    e.anchor = std::move(anchor);
    return e;
}

Expectation pin_w(std::string check, K expected, WitnessParts witness,
                  std::string anchor = "") {
    Expectation e = pin(std::move(check), expected, std::move(anchor));
    e.witness = std::move(witness);
    return e;
}

// The Z/2, Z/3 and Z/2 x Z/2 entries share the fully certified shape:
// reduced commutative rings where identity data keeps every row at holds.
std::vector<Expectation> certified_rows() {
    return {
        pin("reduced", K::Holds),
        pin("abelian", K::Holds),
        pin("semiprime", K::Holds),
        pin("baer", K::Holds),
        pin("quasi-baer", K::Holds),
        pin("pq-baer-right", K::Holds),
        pin("pq-baer-left", K::Holds),
        pin("pp-right", K::Holds),
        pin("rigid", K::Holds),
        pin("c-sigma", K::Holds),
        pin("compatible", K::Holds),
        pin("skew-armendariz", K::HoldsBounded),
        pin("stable", K::Holds),
        pin("lemma-rigid-sweep", K::Holds,
            "every endomorphism lands on the same side of rigid vs "
            "reduced + c-sigma"),
    };
}

CatalogEntry zn2_entry() {
    CatalogEntry e;
    e.name = "zn2";
    e.headline =
        "Z/2: a field, so every hypothesis certifies and the skew "
        "extension with identity data is the ordinary polynomial ring";
    e.ring = nlohmann::json::parse(R"({"kind":"zn","n":2})");
    e.sigma = nlohmann::json::parse(R"({"kind":"identity"})");
    e.delta = nlohmann::json::parse(R"({"kind":"zero"})");
    e.expects = certified_rows();
    e.branch = "iii";
    e.branch_level = "certified";
    e.forward = K::HoldsBounded;
    e.converse = K::HoldsBounded;
    return e;
}

CatalogEntry zn3_entry() {
    CatalogEntry e = zn2_entry();
    e.name = "zn3";
    e.headline = "Z/3: the certified field story in odd characteristic";
    e.ring = nlohmann::json::parse(R"({"kind":"zn","n":3})");
    return e;
}

CatalogEntry zn4_entry() {
    CatalogEntry e;
    e.name = "zn4";
    e.headline =
        "Z/4: the zero divisor 2 breaks reducedness and every Baer-style "
        "property, so the forward transfer is blocked at its first gate";
    e.ring = nlohmann::json::parse(R"({"kind":"zn","n":4})");
    e.sigma = nlohmann::json::parse(R"({"kind":"identity"})");
    e.delta = nlohmann::json::parse(R"({"kind":"zero"})");
    e.expects = {
        pin_w("reduced", K::Fails, {{"a", "2"}}),
        pin("abelian", K::Holds),
        pin_w("semiprime", K::Fails, {{"a", "2"}}),
        pin_w("baer", K::Fails, {{"x0", "0"}, {"x1", "2"}},
              "r({0, 2}) = {0, 2} has no idempotent generator"),
        pin_w("quasi-baer", K::Fails, {{"x0", "0"}, {"x1", "2"}}),
        pin_w("pq-baer-right", K::Fails, {{"a", "2"}}),
        pin_w("pq-baer-left", K::Fails, {{"a", "2"}}),
        pin_w("pp-right", K::Fails, {{"a", "2"}}),
        pin_w("rigid", K::Fails, {{"a", "2"}}),
        pin("c-sigma", K::Holds),
        pin("compatible", K::Holds),
        pin("skew-armendariz", K::HoldsBounded,
            "an ordinary commutative polynomial ring splits zero products "
            "coefficientwise up to the scanned degree"),
        pin("stable", K::Holds),
        pin("lemma-stability", K::HoldsBounded),
        pin("lemma-rigid-sweep", K::Holds),
    };
    e.branch = "i";
    e.branch_level = "bounded";
    e.forward_blocked = "pq-baer-right";
    e.converse = K::HoldsBounded;
    return e;
}

CatalogEntry zn2_zn2_entry() {
    CatalogEntry e;
    e.name = "zn2_zn2";
    e.headline =
        "Z/2 x Z/2: reduced commutative product ring; identity data is "
        "rigid, so the equivalence runs on the certified branch";
    e.ring = nlohmann::json::parse(
        R"({"kind":"sum","left":{"kind":"zn","n":2},"right":{"kind":"zn","n":2}})");
    e.sigma = nlohmann::json::parse(R"({"kind":"identity"})");
    e.delta = nlohmann::json::parse(R"({"kind":"zero"})");
    e.expects = certified_rows();
    e.branch = "iii";
    e.branch_level = "certified";
    e.forward = K::HoldsBounded;
    e.converse = K::HoldsBounded;
    return e;
}

CatalogEntry t2f2_id_entry() {
    CatalogEntry e;
    e.name = "t2f2_id";
    e.headline =
        "upper triangular 2x2 over F2 with identity data: right pq-Baer "
        "holds and transfers, yet no sufficient branch applies because "
        "degree-one splitting already fails";
    e.ring = nlohmann::json::parse(R"({"kind":"ut2","base":{"kind":"zn","n":2}})");
    e.sigma = nlohmann::json::parse(R"({"kind":"identity"})");
    e.delta = nlohmann::json::parse(R"({"kind":"zero"})");
    Expectation arm = pin_w(
        "skew-armendariz", K::Fails,
        {{"p", "{(1, 0, 0)} + {(0, 1, 0)} x"},
         {"q", "{(0, 0, 1)} + {(0, 1, 0)} x"},
         {"i", "0"},
         {"j", "1"}},
        "the classical triangular counterexample: pq = 0 while the "
        "constant-times-x monomial survives");
    Witness doc;
    doc.parts = {{"p", "{(1, 0, 0)} + {(0, 1, 0)} x"},
                 {"q", "{(0, 0, 1)} + {(0, 1, 0)} x"},
                 {"i", "0"},
                 {"j", "1"}};
    arm.documented = doc;
    e.expects = {
        pin_w("reduced", K::Fails, {{"a", "(0, 1, 0)"}},
              "the strictly upper triangular unit squares to zero"),
        pin_w("abelian", K::Fails, {{"e", "(0, 0, 1)"}, {"r", "(0, 1, 0)"}}),
        pin_w("semiprime", K::Fails, {{"a", "(0, 1, 0)"}}),
        pin("baer", K::Holds),
        pin("quasi-baer", K::Holds),
        pin("pq-baer-right", K::Holds,
            "all eight annihilators r(aR) are idempotent-generated"),
        pin("pq-baer-left", K::Holds),
        pin("pp-right", K::Holds),
        pin_w("rigid", K::Fails, {{"a", "(0, 1, 0)"}}),
        pin("c-sigma", K::Holds),
        pin("compatible", K::Holds),
        arm,
        pin("stable", K::Holds),
        pin("lemma-stability", K::HoldsBounded),
        pin("lemma-compat-f", K::HoldsBounded),
        pin("lemma-rigid-sweep", K::Holds),
    };
    e.branch = "none";
    e.forward = K::HoldsBounded;
    e.converse = K::HoldsBounded;
    return e;
}

CatalogEntry t2f2_inner_entry() {
    CatalogEntry e;
    e.name = "t2f2_inner";
    e.headline =
        "the same triangular ring with the inner derivation by the "
        "strictly upper unit: one semicentral ideal is not delta-stable, "
        "which blocks the transfer argument";
    e.ring = nlohmann::json::parse(R"({"kind":"ut2","base":{"kind":"zn","n":2}})");
    e.sigma = nlohmann::json::parse(R"({"kind":"identity"})");
    e.delta = nlohmann::json::parse(R"x({"kind":"inner","d":"(0, 1, 0)"})x");
    e.expects = {
        pin_w("reduced", K::Fails, {{"a", "(0, 1, 0)"}}),
        pin_w("abelian", K::Fails, {{"e", "(0, 0, 1)"}, {"r", "(0, 1, 0)"}}),
        pin_w("semiprime", K::Fails, {{"a", "(0, 1, 0)"}}),
        pin("baer", K::Holds),
        pin("quasi-baer", K::Holds),
        pin("pq-baer-right", K::Holds),
        pin("pq-baer-left", K::Holds),
        pin("pp-right", K::Holds),
        pin_w("rigid", K::Fails, {{"a", "(0, 1, 0)"}}),
        pin("c-sigma", K::Holds),
        pin_w("compatible", K::Fails, {{"a", "(1, 0, 0)"}, {"b", "(0, 0, 1)"}},
              "ab = 0 yet a delta(b) != 0 for two diagonal idempotents"),
        pin("skew-armendariz", K::Fails),
        pin_w("stable", K::Fails, {{"e", "(1, 0, 0)"}, {"r", "(1, 0, 0)"}},
              "delta pushes Re out of itself at a left semicentral e"),
        pin("lemma-stability", K::HoldsBounded,
            "the unstable generators are skipped by hypothesis and the "
            "stable ones still satisfy the conclusion"),
        pin("lemma-compat-f", K::Inconclusive,
            "vacuous: the ring is not compatible to begin with"),
    };
    e.branch = "none";
    e.forward_blocked = "stable";
    e.converse = K::HoldsBounded;
    return e;
}

CatalogEntry tri4_negate_entry() {
    CatalogEntry e;
    e.name = "tri4_negate";
    e.headline =
        "trivial extension of Z/4 by itself with the sign-flip "
        "automorphism: abelian and sigma-stable, but seven principal "
        "annihilators have no idempotent generator";
    e.ring = nlohmann::json::parse(R"({"kind":"tri2","base":{"kind":"zn","n":4}})");
    e.sigma = nlohmann::json::parse(R"({"kind":"negate_offdiag"})");
    e.delta = nlohmann::json::parse(R"({"kind":"zero"})");
    Expectation pq = pin_w("pq-baer-right", K::Fails, {{"a", "(0, 1)"}},
                           "r((0,1)R) = 2Z/4 x Z/4 is not generated by an "
                           "idempotent; (2,0) fails the same way");
    pq.among = WitnessParts{{"a", "(2, 0)"}};
    Expectation arm = pin_w("skew-armendariz", K::Fails,
                            {{"p", "{(2, 0)} + {(0, 1)} x"},
                             {"q", "{(2, 0)} + {(0, 1)} x"},
                             {"i", "0"},
                             {"j", "1"}},
                            "the square of (2,0) + (0,1)x vanishes while "
                            "its lowest cross monomial does not");
    Witness doc;
    doc.parts = {{"p", "{(2, 0)} + {(2, 1)} x"},
                 {"q", "{(2, 0)} + {(2, 1)} x"},
                 {"i", "1"},
                 {"j", "0"}};
    doc.note = "a1 sigma(b0) = (0, 2)";
    arm.documented = doc;
    e.expects = {
        pin_w("reduced", K::Fails, {{"a", "(0, 1)"}}),
        pin("abelian", K::Holds, "every idempotent of the extension is central"),
        pin_w("semiprime", K::Fails, {{"a", "(0, 1)"}}),
        pin("baer", K::Fails),
        pin("quasi-baer", K::Fails),
        pq,
        pin("pq-baer-left", K::Fails),
        pin("pp-right", K::Fails),
        pin_w("rigid", K::Fails, {{"a", "(0, 1)"}}),
        pin("c-sigma", K::Holds,
            "the sign flip keeps annihilation: a sigma(b) = 0 forces ab = 0"),
        pin("compatible", K::Holds),
        arm,
        pin("stable", K::Holds),
        pin("lemma-stability", K::HoldsBounded),
        pin("lemma-compat-f", K::HoldsBounded),
    };
    e.branch = "ii";
    e.branch_level = "certified";
    e.forward_blocked = "pq-baer-right";
    e.converse = K::HoldsBounded;
    return e;
}

CatalogEntry tsum_square_entry() {
    CatalogEntry e;
    e.name = "tsum_square";
    e.headline =
        "product of the triangular F2 ring with F2[t] under the identity "
        "times t -> t^2 twist: stability certifies componentwise while "
        "enumerative checks stay honestly out of reach";
    e.ring = nlohmann::json::parse(
        R"({"kind":"sum","left":{"kind":"ut2","base":{"kind":"zn","n":2}},"right":{"kind":"poly","base":{"kind":"zn","n":2},"var":"t"}})");
    e.sigma = nlohmann::json::parse(
        R"({"kind":"componentwise","left":{"kind":"identity"},"right":{"kind":"square_var"}})");
    e.delta = nlohmann::json::parse(R"({"kind":"zero"})");
    e.expects = {
        pin_w("reduced", K::Fails, {{"a", "((0, 1, 0), 0)"}},
              "the nilpotent of the left summand survives in the product"),
        pin_w("abelian", K::Fails,
              {{"e", "((0, 0, 1), 0)"}, {"r", "((0, 1, 0), 0)"}}),
        pin_w("semiprime", K::Fails, {{"a", "((0, 1, 0), 0)"}},
              "decided componentwise even though the ring is not enumerable"),
        pin("baer", K::Inconclusive),
        pin("quasi-baer", K::Inconclusive),
        pin("pq-baer-right", K::Inconclusive),
        pin("pq-baer-left", K::Inconclusive),
        pin("pp-right", K::Inconclusive),
        pin_w("rigid", K::Fails, {{"a", "((0, 1, 0), 0)"}}),
        pin("c-sigma", K::Inconclusive),
        pin("compatible", K::Inconclusive),
        pin("skew-armendariz", K::Inconclusive),
        pin("stable", K::Holds,
            "closed-form idempotent inventory: sigma(e)e = sigma(e) and "
            "delta(e)e = delta(e) for each left semicentral e"),
        pin("lemma-stability", K::Inconclusive),
    };
    e.branch = "none";
    e.forward = K::Inconclusive;
    e.converse = K::Inconclusive;
    return e;
}

CatalogEntry z2poly_eval0_entry() {
    CatalogEntry e;
    e.name = "z2poly_eval0";
    e.headline =
        "F2[t] with evaluation at zero: sigma kills t, so a sigma(b) = 0 "
        "stops implying ab = 0 and the compatibility gate closes the "
        "transfer";
    e.ring = nlohmann::json::parse(
        R"({"kind":"poly","base":{"kind":"zn","n":2},"var":"t"})");
    e.sigma = nlohmann::json::parse(R"({"kind":"eval0"})");
    e.delta = nlohmann::json::parse(R"({"kind":"zero"})");
    Expectation cs = pin_w("c-sigma", K::Fails, {{"a", "1"}, {"b", "t"}},
                           "1 kills sigma(t) = 0 but certainly not t");
    Witness doc;
    doc.parts = {{"a", "[1,1]"}, {"b", "[0,1]"}};
    doc.note = "1 + t against t";
    cs.documented = doc;
    e.expects = {
        pin("reduced", K::Inconclusive,
            "a domain: sampling finds no nilpotent and no closed form applies"),
        pin("abelian", K::Holds),
        pin("semiprime", K::Inconclusive),
        pin("baer", K::Inconclusive),
        pin("quasi-baer", K::Inconclusive),
        pin("pq-baer-right", K::Inconclusive),
        pin("pq-baer-left", K::Inconclusive),
        pin("pp-right", K::Inconclusive),
        pin_w("rigid", K::Fails, {{"a", "t"}}, "t sigma(t) = 0 at nonzero t"),
        cs,
        pin_w("compatible", K::Fails, {{"a", "1"}, {"b", "t"}}),
        pin("skew-armendariz", K::Inconclusive),
        pin("stable", K::Holds),
    };
    e.branch = "none";
    e.forward_blocked = "c-sigma";
    e.converse = K::Inconclusive;
    return e;
}

CatalogEntry int_rat_tri_halve_entry() {
    CatalogEntry e;
    e.name = "int_rat_tri_halve";
    e.headline =
        "triangular pairs over (Z, Q) with the halving twist: a nilpotent "
        "off-diagonal and exact rational arithmetic underneath";
    e.ring = nlohmann::json::parse(R"({"kind":"int_rat_tri"})");
    e.sigma = nlohmann::json::parse(R"({"kind":"halve_offdiag"})");
    e.delta = nlohmann::json::parse(R"({"kind":"zero"})");
    e.expects = {
        pin_w("reduced", K::Fails, {{"a", "(0, 1)"}}),
        pin("abelian", K::Holds),
        pin_w("semiprime", K::Fails, {{"a", "(0, 1)"}},
              "commutative, so a^2 = 0 already gives aRa = 0"),
        pin("baer", K::Inconclusive),
        pin("quasi-baer", K::Inconclusive),
        pin("pq-baer-right", K::Inconclusive),
        pin("pq-baer-left", K::Inconclusive),
        pin("pp-right", K::Inconclusive),
        pin_w("rigid", K::Fails, {{"a", "(0, 1)"}}),
        pin("c-sigma", K::Inconclusive),
        pin("compatible", K::Inconclusive),
        pin("skew-armendariz", K::Inconclusive),
        pin("stable", K::Holds),
        pin("lemma-compat-f", K::Inconclusive,
            "hypothesis and conclusion both only sampled"),
    };
    e.branch = "none";
    e.forward = K::Inconclusive;
    e.converse = K::Inconclusive;
    return e;
}

CatalogEntry gauss_conj_entry() {
    CatalogEntry e;
    e.name = "gauss_conj";
    e.headline =
        "Gaussian pairs with conjugation and delta = id - conj: a domain "
        "backend where sampling finds nothing and the verdicts say so";
    e.ring = nlohmann::json::parse(R"({"kind":"gauss"})");
    e.sigma = nlohmann::json::parse(R"({"kind":"conj"})");
    e.delta = nlohmann::json::parse(R"({"kind":"conj_diff"})");
    e.expects = {
        pin("reduced", K::Inconclusive),
        pin("abelian", K::Holds),
        pin("semiprime", K::Inconclusive),
        pin("baer", K::Inconclusive),
        pin("quasi-baer", K::Inconclusive),
        pin("pq-baer-right", K::Inconclusive),
        pin("pq-baer-left", K::Inconclusive),
        pin("pp-right", K::Inconclusive),
        pin("rigid", K::Inconclusive,
            "a sigma(a) = |a|^2 never vanishes off zero, but the scan "
            "cannot certify a domain"),
        pin("c-sigma", K::Inconclusive),
        pin("compatible", K::Inconclusive),
        pin("skew-armendariz", K::Inconclusive),
        pin("stable", K::Holds),
        pin("lemma-compat-f", K::Inconclusive),
    };
    e.branch = "none";
    e.forward = K::Inconclusive;
    e.converse = K::Inconclusive;
    return e;
}

bool parts_equal(const WitnessParts& a, const WitnessParts& b) {
    return a == b;
}

// Looks for `want` among the verdict's first witness and the overflow list.
bool parts_among(const Verdict& v, const WitnessParts& want) {
    if (v.witness && parts_equal(v.witness->parts, want)) return true;
    for (const auto& w : v.all_witnesses)
        if (parts_equal(w.parts, want)) return true;
    return false;
}

Verdict run_check(const std::string& check, const QdPtr& qd,
                  const HypothesisReport& rt, const Config& cfg) {
    if (check == "lemma-stability") return lemma_stability(qd, 6, cfg);
    if (check == "lemma-compat-f") return lemma_compat_f(qd, 6, cfg);
    if (check == "lemma-rigid-sweep") return lemma_rigid_sweep(qd->ring(), cfg);
    for (const auto& row : rt.rows)
        if (row.property == check) return row;
    throw ValidationError("catalog expectation names unknown check '" + check +
                          "'");
}

}  // namespace

QdPtr CatalogEntry::instantiate(const Config& cfg) const {
    RingPtr r = build_ring(ring, cfg);
    Endo s = make_endo(r, sigma, cfg);
    Derivation d = make_derivation(r, s, delta, cfg);
    return QuasiDerivation::make(r, s, d, cfg);
}

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = {
        zn2_entry(),        zn3_entry(),
        zn4_entry(),        zn2_zn2_entry(),
        t2f2_id_entry(),    t2f2_inner_entry(),
        tri4_negate_entry(), tsum_square_entry(),
        z2poly_eval0_entry(), int_rat_tri_halve_entry(),
        gauss_conj_entry(),
    };
    return entries;
}

const CatalogEntry* find_entry(const std::string& name) {
    for (const auto& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

EntryReport run_entry(const CatalogEntry& entry, const Config& cfg) {
    EntryReport rep;
    rep.name = entry.name;
    QdPtr qd = entry.instantiate(cfg);
    rep.roundtrip = theorem_roundtrip(qd, cfg);

    for (const auto& ex : entry.expects) {
        Verdict v = run_check(ex.check, qd, rep.roundtrip, cfg);
        CheckLine line;
        line.check = ex.check;
        line.ok = (v.kind == ex.expected);
        std::string why;
        if (!line.ok)
            why = "kind " + to_string(v.kind) + " is off the pinned " +
                  to_string(ex.expected);
        if (ex.witness) {
            bool match = v.witness && parts_equal(v.witness->parts, *ex.witness);
            if (!match) {
                line.ok = false;
                why += (why.empty() ? "" : "; ") + std::string("witness drifted");
            }
        }
        if (ex.among && !parts_among(v, *ex.among)) {
            line.ok = false;
            why += (why.empty() ? "" : "; ") +
                   std::string("pinned witness missing from the reported set");
        }
        if (ex.documented) {
            Verdict probe;
            probe.kind = K::Fails;
            probe.property = ex.check;
            probe.subject = entry.name;
            probe.witness = *ex.documented;
            if (!replay_witness(probe, qd->ring(), qd, cfg)) {
                line.ok = false;
                why += (why.empty() ? "" : "; ") +
                       std::string("documented witness does not replay");
            }
        }
        line.detail = line.ok ? v.str() : why + " | got: " + v.str();
        if (!line.ok) rep.ok = false;
        rep.lines.push_back(std::move(line));
    }

    {
        CheckLine line;
        line.check = "branch";
        bool lv = entry.branch == "none" ||
                  rep.roundtrip.branch_level == entry.branch_level;
        line.ok = (rep.roundtrip.branch == entry.branch) && lv;
        line.detail = rep.roundtrip.branch +
                      (rep.roundtrip.branch_level.empty()
                           ? ""
                           : " (" + rep.roundtrip.branch_level + ")") +
                      (line.ok ? "" : " | pinned: " + entry.branch);
        if (!line.ok) rep.ok = false;
        rep.lines.push_back(std::move(line));
    }
    {
        CheckLine line;
        line.check = "forward";
        if (!entry.forward_blocked.empty()) {
            const std::string marker =
                "hypothesis " + entry.forward_blocked + " failed";
            line.ok = !rep.roundtrip.forward &&
                      rep.roundtrip.forward_blocked.find(marker) !=
                          std::string::npos;
            line.detail = line.ok ? "blocked: " + rep.roundtrip.forward_blocked
                                  : "pinned block on " + entry.forward_blocked +
                                        " | got: " +
                                        (rep.roundtrip.forward
                                             ? rep.roundtrip.forward->str()
                                             : rep.roundtrip.forward_blocked);
        } else {
            line.ok = rep.roundtrip.forward &&
                      rep.roundtrip.forward->kind == *entry.forward;
            line.detail = rep.roundtrip.forward
                              ? rep.roundtrip.forward->str()
                              : "blocked: " + rep.roundtrip.forward_blocked;
            if (!line.ok)
                line.detail += " | pinned: " + to_string(*entry.forward);
        }
        if (!line.ok) rep.ok = false;
        rep.lines.push_back(std::move(line));
    }
    {
        CheckLine line;
        line.check = "converse";
        line.ok = rep.roundtrip.converse &&
                  rep.roundtrip.converse->kind == entry.converse;
        line.detail = rep.roundtrip.converse ? rep.roundtrip.converse->str()
                                             : "missing";
        if (!line.ok) line.detail += " | pinned: " + to_string(entry.converse);
        if (!line.ok) rep.ok = false;
        rep.lines.push_back(std::move(line));
    }
    return rep;
}

nlohmann::json EntryReport::to_json() const {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto& l : lines)
        checks.push_back({{"check", l.check}, {"ok", l.ok}, {"detail", l.detail}});
    return {{"name", name},
            {"ok", ok},
            {"checks", checks},
            {"roundtrip", roundtrip.to_json()}};
}

std::string EntryReport::str() const {
    std::ostringstream os;
    std::size_t good = 0;
    for (const auto& l : lines)
        if (l.ok) ++good;
    os << name << ": " << good << "/" << lines.size() << " checks on their pins"
       << (ok ? "" : "  <-- MISMATCH") << "\n";
    for (const auto& l : lines)
        os << (l.ok ? "  ok  " : "  !!  ") << l.check << ": " << l.detail
           << "\n";
    return os.str();
}

}  // namespace orelab
