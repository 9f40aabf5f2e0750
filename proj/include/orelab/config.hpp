#pragma once

#include <cstdint>

namespace orelab {

// Budgets and caps shared by ring construction and property checks. All
// values can be overridden per call; the defaults keep every exhaustive
// scan in the test corpus under a second.
struct Config {
    // Largest enumerable ring (element count) we will materialize.
    std::uint32_t size_cap = 4096;

    // Exhaustive triple scans (associativity, distributivity) run only
    // while size^3 stays under this; above it validation falls back to
    // exhaustive pair scans plus sampled triples.
    std::uint64_t triple_budget = 1ull << 27;

    // Sampled validation / property checks: pair count and seed. The seed
    // is echoed into every bound record so runs replay exactly.
    std::uint64_t samples = 2000;
    std::uint64_t seed = 1;

    // How many canonical probe elements prefix every sampled stream.
    std::uint32_t probe_prefix = 32;

    // Magnitude cap for sampled numerators/denominators/degrees.
    std::int64_t height = 8;

    // Upper bound for any brute-force search loop (bounded annihilator
    // tuple scans, Armendariz pair scans).
    std::uint64_t scan_cap = 1'000'000;

    // Annihilator lattice closure: maximum number of distinct sets.
    std::uint32_t closure_cap = 4096;

    // Endomorphism enumeration is only offered below this ring size.
    std::uint32_t endo_cap = 8;

    // Word-expansion oracle for the f_i^j maps walks C(j,i) words; j is
    // capped here (12 keeps the worst layer at 924 words).
    int word_cap = 12;

    // Degree bounds for skew polynomial searches; negative means pick
    // automatically from scan_cap and the ring size.
    int deg_bound = -1;
    int deg_p = 1;
    int deg_phi = 2;
};

} // namespace orelab
