#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orelab/config.hpp"
#include "orelab/index_set.hpp"
#include "orelab/ring.hpp"

namespace orelab {

// An annihilator (or ideal) of an enumerable ring as an explicit index
// set, tagged with the text of what generated it.
struct AnnSet {
    RingPtr ring;
    std::string generator; // human-readable, e.g. "r(#5 R)"
    IndexSet members;

    bool contains(const Elem& e) const { return members.test(ring->index(e)); }
    std::uint32_t size() const { return members.count(); }
    std::vector<Elem> elements() const;
};

// r({a...}) = { x : a x = 0 for every listed a }; always a right ideal.
AnnSet right_ann(const RingPtr& ring, const std::vector<Elem>& gens);
// l({a...}) = { x : x a = 0 for every listed a }; always a left ideal.
AnnSet left_ann(const RingPtr& ring, const std::vector<Elem>& gens);

// r(aR) = { x : a r x = 0 for all r }. The result is checked to be a
// two-sided ideal; a failure means corrupted tables, not bad input.
AnnSet right_ann_principal(const RingPtr& ring, const Elem& a);
// l(Ra) = { x : x r a = 0 for all r }.
AnnSet left_ann_principal(const RingPtr& ring, const Elem& a);

AnnSet right_ideal_of(const RingPtr& ring, const Elem& e);  // eR
AnnSet left_ideal_of(const RingPtr& ring, const Elem& e);   // Re

// Exhaustive idempotent inventory of an enumerable ring. Construction
// asserts S_l(R) intersect S_r(R) == B(R) (an identity, so a mismatch
// again means corrupted tables).
struct IdempotentProfile {
    std::vector<std::uint32_t> idempotents;
    std::vector<std::uint32_t> left_semicentral;  // re == ere for all r
    std::vector<std::uint32_t> right_semicentral; // er == ere for all r
    std::vector<std::uint32_t> central;           // er == re for all r
};
IdempotentProfile idempotent_profile(const RingPtr& ring);

// Smallest-index idempotent e with eR == T.members (resp. Re), if any.
std::optional<std::uint32_t> idempotent_generator_right(const AnnSet& T);
std::optional<std::uint32_t> idempotent_generator_left(const AnnSet& T);

// Which annihilators seed the lattice closure.
enum class ClosureKind { element, principal };

// All distinct r(a) (or r(aR)) for a in R, closed under intersection.
// Sorted and deduplicated; throws CapError past cfg.closure_cap members.
std::vector<IndexSet> ann_lattice_closure(const RingPtr& ring,
                                          ClosureKind kind,
                                          const Config& cfg = {});

} // namespace orelab
