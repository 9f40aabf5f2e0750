#include "orelab/annihilators.hpp"

#include <algorithm>
#include <set>

#include "orelab/errors.hpp"
#include "orelab/scan.hpp"

namespace orelab {

namespace {

std::uint32_t require_enumerable(const RingPtr& ring, const char* what) {
    if (!ring) throw ValidationError("null ring");
    if (!ring->enumerable())
        throw BackendError(std::string(what) + " needs an enumerable ring, " +
                           ring->label() + " is sampled");
    return ring->size();
}

IndexSet from_hits(std::uint32_t n, const std::vector<std::uint64_t>& hits) {
    IndexSet s(n);
    for (std::uint64_t i : hits) s.set(static_cast<std::uint32_t>(i));
    return s;
}

// x stays in the set under left and right multiplication by everything.
void assert_two_sided(const RingPtr& ring, const IndexSet& s,
                      const std::string& label) {
    const std::uint32_t n = ring->size();
    for (std::uint32_t x : s.indices()) {
        for (std::uint32_t r = 0; r < n; ++r) {
            if (!s.test(ring->muli(r, x)) || !s.test(ring->muli(x, r)))
                throw NotIdealError(label + " is not two-sided in " +
                                    ring->label());
        }
    }
}

} // namespace

std::vector<Elem> AnnSet::elements() const {
    std::vector<Elem> out;
    for (std::uint32_t i : members.indices()) out.push_back(ring->element(i));
    return out;
}

AnnSet right_ann(const RingPtr& ring, const std::vector<Elem>& gens) {
    const std::uint32_t n = require_enumerable(ring, "right_ann");
    std::vector<std::uint32_t> gi;
    gi.reserve(gens.size());
    for (const Elem& g : gens) gi.push_back(ring->index(g));
    auto hits = scan::collect(n, [&](std::uint64_t x) {
        for (std::uint32_t a : gi)
            if (ring->muli(a, static_cast<std::uint32_t>(x)) != 0) return false;
        return true;
    });
    std::string label = "r({";
    for (std::size_t k = 0; k < gens.size(); ++k)
        label += (k ? ", " : "") + ring->format(gens[k]);
    label += "})";
    return {ring, label, from_hits(n, hits)};
}

AnnSet left_ann(const RingPtr& ring, const std::vector<Elem>& gens) {
    const std::uint32_t n = require_enumerable(ring, "left_ann");
    std::vector<std::uint32_t> gi;
    gi.reserve(gens.size());
    for (const Elem& g : gens) gi.push_back(ring->index(g));
    auto hits = scan::collect(n, [&](std::uint64_t x) {
        for (std::uint32_t a : gi)
            if (ring->muli(static_cast<std::uint32_t>(x), a) != 0) return false;
        return true;
    });
    std::string label = "l({";
    for (std::size_t k = 0; k < gens.size(); ++k)
        label += (k ? ", " : "") + ring->format(gens[k]);
    label += "})";
    return {ring, label, from_hits(n, hits)};
}

AnnSet right_ann_principal(const RingPtr& ring, const Elem& a) {
    const std::uint32_t n = require_enumerable(ring, "right_ann_principal");
    const std::uint32_t ai = ring->index(a);
    // aR as distinct indices first; the x scan then runs over that orbit.
    std::vector<std::uint32_t> orbit;
    {
        std::vector<bool> seen(n, false);
        for (std::uint32_t r = 0; r < n; ++r) {
            std::uint32_t ar = ring->muli(ai, r);
            if (!seen[ar]) {
                seen[ar] = true;
                orbit.push_back(ar);
            }
        }
    }
    auto hits = scan::collect(n, [&](std::uint64_t x) {
        for (std::uint32_t ar : orbit)
            if (ring->muli(ar, static_cast<std::uint32_t>(x)) != 0) return false;
        return true;
    });
    AnnSet out{ring, "r(" + ring->format(a) + " R)", from_hits(n, hits)};
    assert_two_sided(ring, out.members, out.generator);
    return out;
}

AnnSet left_ann_principal(const RingPtr& ring, const Elem& a) {
    const std::uint32_t n = require_enumerable(ring, "left_ann_principal");
    const std::uint32_t ai = ring->index(a);
    std::vector<std::uint32_t> orbit;
    {
        std::vector<bool> seen(n, false);
        for (std::uint32_t r = 0; r < n; ++r) {
            std::uint32_t ra = ring->muli(r, ai);
            if (!seen[ra]) {
                seen[ra] = true;
                orbit.push_back(ra);
            }
        }
    }
    auto hits = scan::collect(n, [&](std::uint64_t x) {
        for (std::uint32_t ra : orbit)
            if (ring->muli(static_cast<std::uint32_t>(x), ra) != 0) return false;
        return true;
    });
    AnnSet out{ring, "l(R " + ring->format(a) + ")", from_hits(n, hits)};
    assert_two_sided(ring, out.members, out.generator);
    return out;
}

AnnSet right_ideal_of(const RingPtr& ring, const Elem& e) {
    const std::uint32_t n = require_enumerable(ring, "right_ideal_of");
    const std::uint32_t ei = ring->index(e);
    IndexSet s(n);
    for (std::uint32_t r = 0; r < n; ++r) s.set(ring->muli(ei, r));
    return {ring, ring->format(e) + " R", s};
}

AnnSet left_ideal_of(const RingPtr& ring, const Elem& e) {
    const std::uint32_t n = require_enumerable(ring, "left_ideal_of");
    const std::uint32_t ei = ring->index(e);
    IndexSet s(n);
    for (std::uint32_t r = 0; r < n; ++r) s.set(ring->muli(r, ei));
    return {ring, "R " + ring->format(e), s};
}

IdempotentProfile idempotent_profile(const RingPtr& ring) {
    const std::uint32_t n = require_enumerable(ring, "idempotent_profile");
    IdempotentProfile p;
    for (std::uint32_t e = 0; e < n; ++e) {
        if (ring->muli(e, e) != e) continue;
        p.idempotents.push_back(e);
        bool left = true, right = true;
        for (std::uint32_t r = 0; r < n && (left || right); ++r) {
            std::uint32_t ere = ring->muli(e, ring->muli(r, e));
            if (ring->muli(r, e) != ere) left = false;
            if (ring->muli(e, r) != ere) right = false;
        }
        bool cen = true;
        for (std::uint32_t r = 0; r < n && cen; ++r)
            if (ring->muli(e, r) != ring->muli(r, e)) cen = false;
        if (left) p.left_semicentral.push_back(e);
        if (right) p.right_semicentral.push_back(e);
        if (cen) p.central.push_back(e);
    }
    std::vector<std::uint32_t> both;
    std::set_intersection(p.left_semicentral.begin(), p.left_semicentral.end(),
                          p.right_semicentral.begin(),
                          p.right_semicentral.end(), std::back_inserter(both));
    if (both != p.central)
        throw MismatchError("semicentral intersection disagrees with the "
                            "central idempotents in " + ring->label());
    return p;
}

namespace {

std::optional<std::uint32_t> generator_from(
    const AnnSet& T, const std::vector<std::uint32_t>& idems, bool right) {
    const RingPtr& ring = T.ring;
    const std::uint32_t n = ring->size();
    for (std::uint32_t e : idems) {
        IndexSet ideal(n);
        for (std::uint32_t r = 0; r < n; ++r)
            ideal.set(right ? ring->muli(e, r) : ring->muli(r, e));
        if (ideal == T.members) return e;
    }
    return std::nullopt;
}

} // namespace

std::optional<std::uint32_t> idempotent_generator_right(const AnnSet& T) {
    return generator_from(T, idempotent_profile(T.ring).idempotents, true);
}

std::optional<std::uint32_t> idempotent_generator_left(const AnnSet& T) {
    return generator_from(T, idempotent_profile(T.ring).idempotents, false);
}

std::vector<IndexSet> ann_lattice_closure(const RingPtr& ring,
                                          ClosureKind kind,
                                          const Config& cfg) {
    const std::uint32_t n = require_enumerable(ring, "ann_lattice_closure");
    std::set<IndexSet> closed;
    auto guard = [&] {
        if (closed.size() > cfg.closure_cap)
            throw CapError("annihilator lattice of " + ring->label() +
                           " exceeded the closure cap");
    };
    for (std::uint32_t a = 0; a < n; ++a) {
        Elem ea = ring->element(a);
        closed.insert(kind == ClosureKind::element
                          ? right_ann(ring, {ea}).members
                          : right_ann_principal(ring, ea).members);
        guard();
    }
    // Intersections of annihilators are annihilators of unions, so the
    // seeds already nearly close; one worklist pass per new member.
    std::vector<IndexSet> work(closed.begin(), closed.end());
    while (!work.empty()) {
        IndexSet cur = std::move(work.back());
        work.pop_back();
        for (const IndexSet& other : std::vector<IndexSet>(closed.begin(),
                                                           closed.end())) {
            IndexSet meet = cur.intersect(other);
            if (closed.insert(meet).second) {
                guard();
                work.push_back(std::move(meet));
            }
        }
    }
    return {closed.begin(), closed.end()};
}

} // namespace orelab
