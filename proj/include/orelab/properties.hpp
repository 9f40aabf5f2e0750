#pragma once

#include <string>
#include <vector>

#include "orelab/config.hpp"
#include "orelab/maps.hpp"
#include "orelab/ring.hpp"
#include "orelab/verdict.hpp"

namespace orelab {

// Ring-only properties. Enumerable backends scan exhaustively and may
// certify Holds; sampled backends can certify Fails (the witness is
// exact) and otherwise stay Inconclusive unless a closed form applies.
Verdict is_reduced(const RingPtr& ring, const Config& cfg = {});
Verdict is_abelian(const RingPtr& ring, const Config& cfg = {});
Verdict is_semiprime(const RingPtr& ring, const Config& cfg = {});
Verdict is_baer(const RingPtr& ring, const Config& cfg = {});
Verdict is_quasi_baer(const RingPtr& ring, const Config& cfg = {});
// The right (left) versions quantify over principal right (left) ideals;
// these collect every failing generator, not just the first.
Verdict is_pq_baer_right(const RingPtr& ring, const Config& cfg = {});
Verdict is_pq_baer_left(const RingPtr& ring, const Config& cfg = {});
Verdict is_pp_right(const RingPtr& ring, const Config& cfg = {});

// Properties of a single endomorphism.
Verdict is_sigma_rigid(const RingPtr& ring, const Endo& sigma,
                       const Config& cfg = {});
Verdict is_c_sigma(const RingPtr& ring, const Endo& sigma,
                   const Config& cfg = {});

// Properties of the full (sigma, delta) pair.
Verdict is_compatible(const QdPtr& qd, const Config& cfg = {});
// Bounded by polynomial degree even on enumerable rings, so the best
// positive outcome is HoldsBounded. cfg.deg_bound >= 0 forces the bound,
// otherwise the largest bound fitting cfg.scan_cap is chosen.
Verdict is_skew_armendariz(const QdPtr& qd, const Config& cfg = {});
// Re closed under sigma and delta for every left semicentral idempotent.
Verdict is_stable(const QdPtr& qd, const Config& cfg = {});

const std::vector<std::string>& property_names();

// Dispatch by property name; qd may be null for ring-only properties and
// is required for the map-dependent ones.
Verdict run_property(const std::string& name, const RingPtr& ring,
                     const QdPtr& qd, const Config& cfg = {});

// Re-derives a Fails verdict from its formatted witness parts alone;
// true when the counterexample still checks out.
bool replay_witness(const Verdict& v, const RingPtr& ring, const QdPtr& qd,
                    const Config& cfg = {});

} // namespace orelab
