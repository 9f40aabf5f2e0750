#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "orelab/config.hpp"
#include "orelab/maps.hpp"
#include "orelab/ore_poly.hpp"
#include "orelab/ring.hpp"
#include "orelab/verdict.hpp"

namespace orelab {

// Mechanical desk-scale checks of the transfer machinery between R and
// S = R[x; sigma, delta]. Each standalone lemma check comes back as a
// Verdict whose property field names the statement.

// For every c whose r(cR) has an idempotent generator e (automatically
// left semicentral, r(cR) being two-sided) with Re (sigma,delta)-stable:
// a in R and b in r(cR) force c sigma(ab) = c delta(ab) = 0 and
// c f_k^j(ab) = 0 for all k <= j <= j_max.
Verdict lemma_stability(const QdPtr& qd, std::uint32_t j_max = 6,
                        const Config& cfg = {});

// (sigma,delta)-compatibility forces: ab = 0 implies a f_i^j(b) = 0.
// Vacuous (Inconclusive) when the ring is not compatible to begin with.
Verdict lemma_compat_f(const QdPtr& qd, std::uint32_t j_max = 6,
                       const Config& cfg = {});

// sigma-rigid is equivalent to reduced plus the C_sigma condition; the
// three verdicts must land on consistent sides.
Verdict lemma_rigid_equivalence(const RingPtr& ring, const Endo& sigma,
                                const Config& cfg = {});
// The same equivalence swept over every endomorphism of a small ring.
Verdict lemma_rigid_sweep(const RingPtr& ring, const Config& cfg = {});

// The constructive core of the forward transfer. For p = sum c_i x^i
// pick idempotent generators r(c_i R) = e_i R and set e = e_n ... e_0;
// then r_S(pS) = eS, verified boundedly from both sides:
// claim 1: p (r x^k) e = 0 for all r and k <= deg_mult, plus random phi;
// claim 2: every bounded member of r_S(pS) has coefficients in eR, and
//          the member count matches |eR|^(deg_phi + 1) exactly.
struct PqBaerWitness {
    SkewPoly p;
    std::vector<Elem> e_parts; // e_i in ascending coefficient order
    Elem e;                    // e_n e_{n-1} ... e_0
    bool claim1_ok = false;
    bool claim2_ok = false;
    std::uint64_t ann_members = 0;
    std::uint64_t expected = 0;
    Bounds bounds;

    bool ok() const { return claim1_ok && claim2_ok; }
    std::string str() const;
};

// Throws HypothesisError when some r(c_i R) lacks an idempotent
// generator (the ring fails right p.q.-Baer at that coefficient).
PqBaerWitness build_pq_baer_witness(const SkewPoly& p, std::uint32_t deg_phi,
                                    std::uint32_t deg_mult,
                                    const Config& cfg = {});

// Forward transfer at desk scale: gates the hypotheses in order
// (pq-baer-right, stable, c-sigma; a failing gate throws
// HypothesisError), then certifies r_S(pS) = eS for every p of degree
// <= cfg.deg_p with phi scanned to cfg.deg_phi.
Verdict ore_pq_baer_bounded(const QdPtr& qd, const Config& cfg = {});

// Converse extraction: constant coefficients of bounded members of
// r_S(aS) always land inside r_R(aR) (asserted, unconditional); the two
// sets agree exactly when the converse hypotheses hold.
Verdict converse_extraction(const QdPtr& qd, const Config& cfg = {});

// The full round trip for one (R, sigma, delta): hypothesis rows, which
// sufficient branch applies, forward transfer, converse extraction.
//
// Branches: (i) skew-armendariz + c-sigma; (ii) every left semicentral
// idempotent central + sigma(Re) <= Re for central e + c-sigma;
// (iii) sigma-rigid.
struct HypothesisReport {
    std::string subject;
    std::vector<Verdict> rows;
    std::string branch;       // "i", "ii", "iii" or "none"
    std::string branch_level; // "certified", "bounded" or ""
    std::string branch_detail;
    std::optional<Verdict> forward;
    std::string forward_blocked; // HypothesisError text when gated out
    std::optional<Verdict> converse;

    nlohmann::json to_json() const;
    std::string str() const;
};

HypothesisReport theorem_roundtrip(const QdPtr& qd, const Config& cfg = {});

} // namespace orelab
