#include "orelab/theorem_lab.hpp"

#include <algorithm>

#include "orelab/annihilators.hpp"
#include "orelab/errors.hpp"
#include "orelab/properties.hpp"
#include "orelab/rng.hpp"

namespace orelab {

namespace {

Verdict lemma_base(const QdPtr& qd, std::string name) {
    Verdict v;
    v.property = std::move(name);
    v.subject = qd->ring()->label() + " with " + qd->label();
    return v;
}

// Definitional stability of Re under one map (image table given).
bool left_ideal_stable(const RingPtr& ring, std::uint32_t e,
                       const Endo& sigma, const Derivation& delta) {
    const std::uint32_t n = ring->size();
    for (std::uint32_t r = 0; r < n; ++r) {
        std::uint32_t re = ring->muli(r, e);
        std::uint32_t s = sigma.apply_index(re);
        if (ring->muli(s, e) != s) return false;
        std::uint32_t d = delta.apply_index(re);
        if (ring->muli(d, e) != d) return false;
    }
    return true;
}

} // namespace

Verdict lemma_stability(const QdPtr& qd, std::uint32_t j_max,
                        const Config& cfg) {
    (void)cfg;
    Verdict v = lemma_base(qd, "lemma-stability");
    const RingPtr& ring = qd->ring();
    if (!ring->enumerable()) {
        v.kind = VerdictKind::Inconclusive;
        v.note = "needs an enumerable backend";
        return v;
    }
    const std::uint32_t n = ring->size();
    qd->ensure(j_max);
    auto profile = idempotent_profile(ring);
    std::uint32_t eligible = 0, no_generator = 0, not_semicentral = 0,
                  unstable = 0;
    std::uint64_t checked = 0;
    for (std::uint32_t c = 0; c < n; ++c) {
        AnnSet T = right_ann_principal(ring, ring->element(c));
        auto gen = idempotent_generator_right(T);
        if (!gen) {
            ++no_generator;
            continue;
        }
        std::uint32_t e = *gen;
        if (std::find(profile.left_semicentral.begin(),
                      profile.left_semicentral.end(),
                      e) == profile.left_semicentral.end()) {
            ++not_semicentral; // cannot happen for a two-sided r(cR)
            continue;
        }
        if (!left_ideal_stable(ring, e, qd->sigma(), qd->delta())) {
            ++unstable;
            continue;
        }
        ++eligible;
        auto members = T.members.indices();
        for (std::uint32_t a = 0; a < n; ++a) {
            for (std::uint32_t b : members) {
                std::uint32_t u = ring->muli(a, b);
                for (std::uint32_t j = 1; j <= j_max; ++j) {
                    for (std::uint32_t k = 0; k <= j; ++k) {
                        ++checked;
                        if (ring->muli(c, qd->f_index(k, j, u)) == 0)
                            continue;
                        v.kind = VerdictKind::Fails;
                        Witness w;
                        w.parts.emplace_back("c", ring->format(ring->element(c)));
                        w.parts.emplace_back("a", ring->format(ring->element(a)));
                        w.parts.emplace_back("b", ring->format(ring->element(b)));
                        w.note = "c f_" + std::to_string(k) + "^" +
                                 std::to_string(j) + "(ab) != 0";
                        v.witness = std::move(w);
                        return v;
                    }
                }
            }
        }
    }
    if (eligible == 0) {
        v.kind = VerdictKind::Inconclusive;
        v.note = "no c met the hypotheses (" + std::to_string(no_generator) +
                 " without idempotent generator, " + std::to_string(unstable) +
                 " with unstable Re)";
        return v;
    }
    v.kind = VerdictKind::HoldsBounded;
    Bounds b;
    b.j_max = static_cast<int>(j_max);
    b.scanned = checked;
    v.bounds = b;
    v.note = std::to_string(eligible) + " of " + std::to_string(n) +
             " elements c met the hypotheses (skipped: " +
             std::to_string(no_generator) + " without idempotent generator, " +
             std::to_string(unstable) + " unstable";
    if (not_semicentral)
        v.note += ", " + std::to_string(not_semicentral) + " not semicentral";
    v.note += ")";
    return v;
}

Verdict lemma_compat_f(const QdPtr& qd, std::uint32_t j_max,
                       const Config& cfg) {
    Verdict v = lemma_base(qd, "lemma-compat-f");
    const RingPtr& ring = qd->ring();
    Verdict compat = is_compatible(qd, cfg);
    if (compat.fails()) {
        v.kind = VerdictKind::Inconclusive;
        v.note = "hypothesis fails, the implication is vacuous here [" +
                 compat.witness->str() + "]";
        return v;
    }
    auto conclusion_holds = [&](const Elem& a, const Elem& b,
                                std::string* why) {
        for (std::uint32_t j = 1; j <= j_max; ++j)
            for (std::uint32_t i = 0; i <= j; ++i)
                if (!ring->is_zero(ring->mul(a, qd->f(i, j, b)))) {
                    *why = "ab = 0 but a f_" + std::to_string(i) + "^" +
                           std::to_string(j) + "(b) != 0";
                    return false;
                }
        return true;
    };
    if (ring->enumerable()) {
        const std::uint32_t n = ring->size();
        qd->ensure(j_max);
        std::uint64_t pairs = 0;
        for (std::uint32_t a = 0; a < n; ++a) {
            for (std::uint32_t b = 0; b < n; ++b) {
                if (ring->muli(a, b) != 0) continue;
                ++pairs;
                std::string why;
                if (conclusion_holds(ring->element(a), ring->element(b), &why))
                    continue;
                v.kind = VerdictKind::Fails;
                Witness w;
                w.parts.emplace_back("a", ring->format(ring->element(a)));
                w.parts.emplace_back("b", ring->format(ring->element(b)));
                w.note = why;
                v.witness = std::move(w);
                return v;
            }
        }
        v.kind = VerdictKind::HoldsBounded;
        Bounds bd;
        bd.j_max = static_cast<int>(j_max);
        bd.pairs = pairs;
        v.bounds = bd;
        v.note = "compatibility certified; every zero pair keeps all "
                 "a f_i^j(b) at zero";
        return v;
    }
    // Sampled backend: the hypothesis itself is only sampled, so the best
    // outcome is Inconclusive, but a violating pair would still be real.
    auto stream = element_stream(*ring, cfg.samples, cfg);
    std::uint64_t pairs = 0;
    for (std::uint64_t k = 0; k < cfg.samples; ++k) {
        auto [i, j] = diag_pair(k);
        if (i >= stream.size() || j >= stream.size()) continue;
        const Elem &a = stream[i], &b = stream[j];
        if (!ring->is_zero(ring->mul(a, b))) continue;
        ++pairs;
        std::string why;
        if (conclusion_holds(a, b, &why)) continue;
        v.kind = VerdictKind::Fails;
        Witness w;
        w.parts.emplace_back("a", ring->format(a));
        w.parts.emplace_back("b", ring->format(b));
        w.note = why + " (compatibility was only sampled)";
        v.witness = std::move(w);
        return v;
    }
    v.kind = VerdictKind::Inconclusive;
    Bounds bd;
    bd.j_max = static_cast<int>(j_max);
    bd.pairs = pairs;
    bd.seed = cfg.seed;
    v.bounds = bd;
    v.note = "hypothesis and conclusion both only sampled (" +
             std::to_string(pairs) + " zero pairs seen)";
    return v;
}

Verdict lemma_rigid_equivalence(const RingPtr& ring, const Endo& sigma,
                                const Config& cfg) {
    Verdict v;
    v.property = "lemma-rigid-equivalence";
    v.subject = ring->label() + " with sigma=" + sigma.label();
    Verdict rig = is_sigma_rigid(ring, sigma, cfg);
    Verdict cs = is_c_sigma(ring, sigma, cfg);
    Verdict red = is_reduced(ring, cfg);
    auto undecided = [](const Verdict& x) {
        return x.kind == VerdictKind::Inconclusive;
    };
    std::string sides = "rigid: " + to_string(rig.kind) +
                        ", c-sigma: " + to_string(cs.kind) +
                        ", reduced: " + to_string(red.kind);
    if (undecided(rig) || undecided(cs) || undecided(red)) {
        v.kind = VerdictKind::Inconclusive;
        v.note = "a side is undecided (" + sides + ")";
        return v;
    }
    bool lhs = rig.holds();
    bool rhs = cs.holds() && red.holds();
    if (lhs == rhs) {
        v.kind = VerdictKind::Holds;
        v.note = "equivalence consistent (" + sides + ")";
        return v;
    }
    // A genuine mismatch disproves the lemma; surface the failing side.
    v.kind = VerdictKind::Fails;
    v.note = "equivalence broken (" + sides + ")";
    if (rig.witness)
        v.witness = rig.witness;
    else if (cs.witness)
        v.witness = cs.witness;
    else if (red.witness)
        v.witness = red.witness;
    return v;
}

Verdict lemma_rigid_sweep(const RingPtr& ring, const Config& cfg) {
    Verdict v;
    v.property = "lemma-rigid-sweep";
    v.subject = ring->label();
    auto endos = enumerate_endos(ring, cfg);
    std::uint32_t holds = 0;
    for (const Endo& sigma : endos) {
        Verdict one = lemma_rigid_equivalence(ring, sigma, cfg);
        if (one.kind == VerdictKind::Holds) {
            ++holds;
            continue;
        }
        one.property = v.property;
        one.note = "endomorphism " + sigma.label() + ": " + one.note;
        return one;
    }
    v.kind = VerdictKind::Holds;
    v.note = "equivalence consistent for all " + std::to_string(holds) +
             " endomorphisms";
    return v;
}

std::string PqBaerWitness::str() const {
    std::string out = "p = " + p.str() + "\n";
    const RingPtr& ring = p.ctx()->ring;
    out += "e_i = [";
    for (std::size_t i = 0; i < e_parts.size(); ++i)
        out += (i ? ", " : "") + ring->format(e_parts[i]);
    out += "], e = " + ring->format(e) + "\n";
    out += std::string("claim 1 (p phi e = 0): ") +
           (claim1_ok ? "ok" : "FAILED") + "\n";
    out += "claim 2 (bounded r_S(pS) = eS): " +
           std::string(claim2_ok ? "ok" : "FAILED") + ", members " +
           std::to_string(ann_members) + ", expected " +
           std::to_string(expected);
    std::string b = bounds.str();
    if (!b.empty()) out += " {" + b + "}";
    return out;
}

PqBaerWitness build_pq_baer_witness(const SkewPoly& p, std::uint32_t deg_phi,
                                    std::uint32_t deg_mult,
                                    const Config& cfg) {
    const CtxPtr& ctx = p.ctx();
    const RingPtr& ring = ctx->ring;
    if (!ring->enumerable())
        throw BackendError("the witness construction needs an enumerable "
                           "ring");
    PqBaerWitness w{p, {}, ring->one(), false, false, 0, 0, {}};
    for (int i = 0; i <= p.degree(); ++i) {
        AnnSet T = right_ann_principal(ring, p.coeff(i));
        auto gen = idempotent_generator_right(T);
        if (!gen)
            throw HypothesisError("pq-baer-right",
                                  T.generator +
                                      " has no idempotent generator");
        w.e_parts.push_back(ring->element(*gen));
    }
    // e = e_n e_{n-1} ... e_0.
    for (auto it = w.e_parts.rbegin(); it != w.e_parts.rend(); ++it)
        w.e = ring->mul(w.e, *it);

    const std::uint32_t n = ring->size();
    SkewPoly ec = SkewPoly::constant(ctx, w.e);
    w.claim1_ok = true;
    for (std::uint32_t k = 0; k <= deg_mult && w.claim1_ok; ++k)
        for (std::uint32_t r = 0; r < n; ++r) {
            SkewPoly m = SkewPoly::monomial(ctx, ring->element(r), k);
            if (!p.mul(m).mul(ec).is_zero()) {
                w.claim1_ok = false;
                break;
            }
        }
    // Random full phi beyond the monomial sweep.
    Rng rng(cfg.seed);
    constexpr std::uint32_t random_phis = 200;
    for (std::uint32_t t = 0; t < random_phis && w.claim1_ok; ++t) {
        std::vector<Elem> coeffs;
        for (std::uint32_t k = 0; k <= deg_phi; ++k)
            coeffs.push_back(
                ring->element(static_cast<std::uint32_t>(rng.below(n))));
        if (!p.mul(SkewPoly(ctx, std::move(coeffs))).mul(ec).is_zero())
            w.claim1_ok = false;
    }

    auto ann = bounded_right_ann(p, PrincipalKind::ore, deg_phi, deg_mult,
                                 cfg);
    w.ann_members = ann.size();
    w.expected = 1;
    std::uint32_t eR = right_ideal_of(ring, w.e).size();
    for (std::uint32_t k = 0; k <= deg_phi; ++k) w.expected *= eR;
    w.claim2_ok = w.ann_members == w.expected;
    for (const SkewPoly& phi : ann) {
        for (int k = 0; k <= phi.degree(); ++k) {
            Elem c = phi.coeff(k);
            if (ring->mul(w.e, c) != c) w.claim2_ok = false;
        }
    }
    w.bounds.deg_phi = static_cast<int>(deg_phi);
    w.bounds.samples = random_phis;
    w.bounds.seed = cfg.seed;
    w.bounds.note = "multipliers r x^k, k <= " + std::to_string(deg_mult);
    return w;
}

Verdict ore_pq_baer_bounded(const QdPtr& qd, const Config& cfg) {
    const RingPtr& ring = qd->ring();
    Verdict v = lemma_base(qd, "ore-pq-baer");
    struct Gate {
        const char* name;
        Verdict verdict;
    };
    Gate gates[] = {{"pq-baer-right", is_pq_baer_right(ring, cfg)},
                    {"stable", is_stable(qd, cfg)},
                    {"c-sigma", is_c_sigma(ring, qd->sigma(), cfg)}};
    for (const Gate& g : gates)
        if (g.verdict.fails())
            throw HypothesisError(g.name, g.verdict.witness
                                              ? g.verdict.witness->str()
                                              : g.verdict.note);
    for (const Gate& g : gates)
        if (!g.verdict.holds()) {
            v.kind = VerdictKind::Inconclusive;
            v.note = std::string("hypothesis ") + g.name +
                     " undecided on this backend";
            return v;
        }
    // All hypotheses certified (so the ring is enumerable); check the
    // conclusion for every p up to the degree bound.
    auto ctx = make_context(ring, qd);
    const std::uint32_t n = ring->size();
    const std::uint32_t width = static_cast<std::uint32_t>(cfg.deg_p) + 1;
    std::uint64_t cand = 1;
    for (std::uint32_t i = 0; i < width; ++i) {
        cand *= n;
        if (cand > cfg.scan_cap)
            throw CapError("p sweep exceeds the scan cap on " +
                           ring->label());
    }
    const auto deg_phi = static_cast<std::uint32_t>(cfg.deg_phi);
    for (std::uint64_t t = 0; t < cand; ++t) {
        SkewPoly p = tuple_poly(ctx, t, width);
        PqBaerWitness w = build_pq_baer_witness(p, deg_phi, deg_phi, cfg);
        if (w.ok()) continue;
        v.kind = VerdictKind::Fails;
        Witness wit;
        wit.parts.emplace_back("p", p.str());
        wit.parts.emplace_back("e", ring->format(w.e));
        wit.note = std::string(w.claim1_ok ? "claim 2" : "claim 1") +
                   " failed: r_S(pS) != eS at the scanned degrees";
        v.witness = std::move(wit);
        return v;
    }
    v.kind = VerdictKind::HoldsBounded;
    Bounds b;
    b.deg_p = cfg.deg_p;
    b.deg_phi = cfg.deg_phi;
    b.scanned = cand;
    v.bounds = b;
    v.note = "r_S(pS) = e_p S for every p (hypotheses certified, "
             "conclusion checked to the degree bounds)";
    return v;
}

Verdict converse_extraction(const QdPtr& qd, const Config& cfg) {
    const RingPtr& ring = qd->ring();
    Verdict v = lemma_base(qd, "converse-extraction");
    if (!ring->enumerable()) {
        v.kind = VerdictKind::Inconclusive;
        v.note = "needs an enumerable backend";
        return v;
    }
    auto ctx = make_context(ring, qd);
    const std::uint32_t n = ring->size();
    const auto deg_phi = static_cast<std::uint32_t>(cfg.deg_phi);
    for (std::uint32_t a = 0; a < n; ++a) {
        Elem ea = ring->element(a);
        AnnSet T = right_ann_principal(ring, ea);
        auto members = bounded_right_ann(SkewPoly::constant(ctx, ea),
                                         PrincipalKind::ore, deg_phi,
                                         deg_phi, cfg);
        IndexSet constants(n);
        for (const SkewPoly& phi : members)
            constants.set(ring->index(phi.coeff(0)));
        // Unconditional direction: a (r x^0) phi = 0 already forces the
        // constant coefficient into r_R(aR).
        if (!constants.subset_of(T.members))
            throw MismatchError("a bounded member of r_S(aS) has a constant "
                                "coefficient outside r_R(aR); this cannot "
                                "happen");
        if (T.members.subset_of(constants)) continue;
        for (std::uint32_t b : T.members.indices()) {
            if (constants.test(b)) continue;
            v.kind = VerdictKind::Fails;
            Witness w;
            w.parts.emplace_back("a", ring->format(ea));
            w.parts.emplace_back("b", ring->format(ring->element(b)));
            w.note = "b lies in r_R(aR) but no bounded member of r_S(aS) "
                     "has constant coefficient b";
            v.witness = std::move(w);
            return v;
        }
    }
    v.kind = VerdictKind::HoldsBounded;
    Bounds b;
    b.deg_phi = cfg.deg_phi;
    b.scanned = n;
    v.bounds = b;
    v.note = "constant coefficients of the bounded r_S(aS) recover r_R(aR) "
             "for every a";
    return v;
}

nlohmann::json HypothesisReport::to_json() const {
    nlohmann::json j;
    j["subject"] = subject;
    j["rows"] = nlohmann::json::array();
    for (const Verdict& r : rows) j["rows"].push_back(r.to_json());
    j["branch"] = branch;
    if (!branch_level.empty()) j["branch_level"] = branch_level;
    if (!branch_detail.empty()) j["branch_detail"] = branch_detail;
    if (forward) j["forward"] = forward->to_json();
    if (!forward_blocked.empty()) j["forward_blocked"] = forward_blocked;
    if (converse) j["converse"] = converse->to_json();
    return j;
}

std::string HypothesisReport::str() const {
    std::string out = subject + "\nhypotheses:\n";
    for (const Verdict& r : rows) out += "  " + r.str() + "\n";
    out += "branch: " + branch;
    if (!branch_level.empty()) out += " (" + branch_level + ")";
    if (!branch_detail.empty()) out += " -- " + branch_detail;
    out += "\n";
    out += "forward:  ";
    if (forward)
        out += forward->str();
    else
        out += "blocked: " + forward_blocked;
    out += "\nconverse: ";
    out += converse ? converse->str() : std::string("not run");
    return out;
}

HypothesisReport theorem_roundtrip(const QdPtr& qd, const Config& cfg) {
    const RingPtr& ring = qd->ring();
    HypothesisReport rep;
    rep.subject = ring->label() + " with " + qd->label();
    for (const std::string& name : property_names())
        rep.rows.push_back(run_property(name, ring, qd, cfg));
    auto row = [&](const std::string& name) -> const Verdict& {
        for (const Verdict& r : rep.rows)
            if (r.property == name) return r;
        throw ValidationError("missing row " + name);
    };

    const Verdict& rigid = row("rigid");
    const Verdict& cs = row("c-sigma");
    const Verdict& arm = row("skew-armendariz");
    if (rigid.holds()) {
        rep.branch = "iii";
        rep.branch_level = "certified";
        rep.branch_detail = "sigma-rigid";
    } else if ((arm.kind == VerdictKind::Holds ||
                arm.kind == VerdictKind::HoldsBounded) &&
               cs.holds()) {
        rep.branch = "i";
        rep.branch_level = arm.kind == VerdictKind::HoldsBounded
                               ? "bounded"
                               : "certified";
        rep.branch_detail = "skew-armendariz + c-sigma";
    } else if (ring->enumerable() && cs.holds()) {
        // Branch (ii): every left semicentral idempotent is central and
        // Re is sigma-stable for central e.
        auto prof = idempotent_profile(ring);
        bool sl_eq_b = prof.left_semicentral == prof.central;
        bool sigma_stable = true;
        for (std::uint32_t e : prof.central) {
            std::uint32_t se = qd->sigma().apply_index(e);
            if (ring->muli(se, e) != se) sigma_stable = false;
        }
        if (sl_eq_b && sigma_stable) {
            rep.branch = "ii";
            rep.branch_level = "certified";
            rep.branch_detail =
                "left semicentral = central, sigma-stable + c-sigma";
        }
    }
    if (rep.branch.empty()) {
        rep.branch = "none";
        rep.branch_detail = "no sufficient branch established";
    }

    try {
        rep.forward = ore_pq_baer_bounded(qd, cfg);
    } catch (const HypothesisError& e) {
        rep.forward_blocked = e.what();
    }
    rep.converse = converse_extraction(qd, cfg);
    return rep;
}

} // namespace orelab
