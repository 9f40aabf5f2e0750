#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <string>
#include <vector>

#include "orelab/annihilators.hpp"
#include "orelab/catalog.hpp"
#include "orelab/errors.hpp"
#include "orelab/ring.hpp"

using namespace orelab;

namespace {

RingPtr entry_ring(const std::string& name) {
    const CatalogEntry* e = find_entry(name);
    REQUIRE(e != nullptr);
    return e->instantiate(Config{})->ring();
}

std::vector<std::string> names(const AnnSet& a) {
    std::vector<std::string> out;
    for (const Elem& e : a.elements()) out.push_back(a.ring->format(e));
    return out;
}

} // namespace

TEST_CASE("right annihilators of the corner idempotents") {
    auto r = entry_ring("t2f2_id");
    Elem e22 = r->parse("(0, 0, 1)");
    Elem e11 = r->parse("(1, 0, 0)");

    AnnSet plain = right_ann(r, {e22});
    CHECK(plain.generator == "r({(0, 0, 1)})");
    CHECK(names(plain) == std::vector<std::string>{"(0, 0, 0)", "(0, 1, 0)",
                                                   "(1, 0, 0)", "(1, 1, 0)"});

    // r(e R) coincides with r({e}) for an idempotent e
    AnnSet principal = right_ann_principal(r, e22);
    CHECK(principal.generator == "r((0, 0, 1) R)");
    CHECK(principal.members == plain.members);
    CHECK(principal.size() == 4);
    CHECK(principal.contains(e11));
    CHECK(!principal.contains(e22));

    // and it is generated by the opposite corner idempotent
    auto gen = idempotent_generator_right(principal);
    REQUIRE(gen.has_value());
    CHECK(r->format(Elem{*gen}) == "(1, 0, 0)");
    CHECK(right_ideal_of(r, Elem{*gen}).members == principal.members);

    CHECK(names(left_ann_principal(r, e22)) ==
          std::vector<std::string>{"(0, 0, 0)"});
    CHECK(names(right_ann_principal(r, e11)) ==
          std::vector<std::string>{"(0, 0, 0)"});
    CHECK(right_ann(r, {}).size() == r->size()); // empty generator set
}

TEST_CASE("annihilators are one-sided ideals by construction") {
    auto r = entry_ring("t2f2_id");
    for (std::uint32_t k = 0; k < r->size(); ++k) {
        AnnSet ra = right_ann_principal(r, Elem{k});
        // closed under right multiplication and addition
        for (const Elem& x : ra.elements()) {
            for (std::uint32_t m = 0; m < r->size(); ++m)
                CHECK(ra.contains(r->mul(x, Elem{m})));
            for (const Elem& y : ra.elements())
                CHECK(ra.contains(r->add(x, y)));
        }
    }
}

TEST_CASE("a non-generated annihilator in zn4") {
    auto z4 = entry_ring("zn4");
    AnnSet a = right_ann_principal(z4, z4->parse("2"));
    CHECK(names(a) == std::vector<std::string>{"0", "2"});
    CHECK(!idempotent_generator_right(a).has_value());
    CHECK(!idempotent_generator_left(a).has_value());
}

TEST_CASE("idempotent inventory of the triangular matrix ring") {
    auto r = entry_ring("t2f2_id");
    IdempotentProfile prof = idempotent_profile(r);
    CHECK(prof.idempotents.size() == 6);
    CHECK(prof.central.size() == 2); // 0 and 1

    auto has = [&](const std::vector<std::uint32_t>& v, const char* lit) {
        return std::find(v.begin(), v.end(), r->parse(lit).idx()) != v.end();
    };
    CHECK(has(prof.left_semicentral, "(1, 0, 0)"));
    CHECK(!has(prof.right_semicentral, "(1, 0, 0)"));
    CHECK(has(prof.right_semicentral, "(0, 0, 1)"));
    CHECK(!has(prof.left_semicentral, "(0, 0, 1)"));
    CHECK(has(prof.central, "(0, 0, 0)"));
    CHECK(has(prof.central, "(1, 0, 1)"));

    // semicentral from both sides is exactly central, on every
    // enumerable catalog ring
    for (const CatalogEntry& e : catalog()) {
        auto ring = e.instantiate(Config{})->ring();
        if (!ring->enumerable()) continue;
        IdempotentProfile p = idempotent_profile(ring);
        std::vector<std::uint32_t> both;
        std::set_intersection(p.left_semicentral.begin(),
                              p.left_semicentral.end(),
                              p.right_semicentral.begin(),
                              p.right_semicentral.end(),
                              std::back_inserter(both));
        CHECK(both == p.central);
    }
}

TEST_CASE("the annihilator lattice closes under intersection") {
    Config cfg;
    auto t2 = entry_ring("t2f2_id");
    auto elem = ann_lattice_closure(t2, ClosureKind::element, cfg);
    auto prin = ann_lattice_closure(t2, ClosureKind::principal, cfg);
    CHECK(elem.size() == 5);
    CHECK(prin.size() == 3);
    // principal annihilators are two-sided, so the family is smaller
    CHECK(prin.size() <= elem.size());
    // sorted and duplicate-free
    CHECK(std::is_sorted(elem.begin(), elem.end()));
    CHECK(std::adjacent_find(elem.begin(), elem.end()) == elem.end());
    // closed: every pairwise intersection is already present
    for (const IndexSet& a : elem)
        for (const IndexSet& b : elem) {
            IndexSet meet = a.intersect(b);
            CHECK(std::find(elem.begin(), elem.end(), meet) != elem.end());
        }

    auto z4 = entry_ring("zn4");
    CHECK(ann_lattice_closure(z4, ClosureKind::element, cfg).size() == 3);

    Config tiny = cfg;
    tiny.closure_cap = 2;
    CHECK_THROWS_AS(ann_lattice_closure(t2, ClosureKind::element, tiny),
                    CapError);
}

TEST_CASE("exhaustive scans refuse sampleable backends") {
    auto g = entry_ring("gauss_conj");
    CHECK_THROWS_AS(right_ann(g, {g->one()}), BackendError);
    CHECK_THROWS_AS(right_ann_principal(g, g->one()), BackendError);
    CHECK_THROWS_AS(idempotent_profile(g), BackendError);
}
