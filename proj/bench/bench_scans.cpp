// Times the parallel scan kernels against their serial references on one
// synthetic predicate and one real ring workload, asserting bit-identical
// results along the way. Build target only; not part of the test suite.
#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>

#include "orelab/catalog.hpp"
#include "orelab/ore_poly.hpp"
#include "orelab/rng.hpp"
#include "orelab/scan.hpp"

using namespace orelab;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - t0)
        .count();
}

template <typename Fn>
double timed(Fn&& fn) {
    auto t0 = std::chrono::steady_clock::now();
    fn();
    return ms_since(t0);
}

void row(const char* kernel, const char* workload, std::uint64_t n,
         double serial_ms, double parallel_ms, bool agree) {
    std::printf("%-12s %-22s n=%-10" PRIu64 " serial %8.2f ms   parallel %8.2f ms   x%.2f   %s\n",
                kernel, workload, n, serial_ms, parallel_ms,
                parallel_ms > 0 ? serial_ms / parallel_ms : 0.0,
                agree ? "agree" : "DISAGREE");
    if (!agree) std::exit(1);
}

}  // namespace

int main() {
    // Synthetic: pure arithmetic predicate, hit planted near the end.
    const std::uint64_t n = 1ull << 22;
    auto sparse = [](std::uint64_t i) {
        return (Rng(i).next() & 0xfffff) == 7;
    };
    auto planted = [n](std::uint64_t i) { return i == n - 9; };

    scan::set_parallel(false);
    std::uint64_t first_s = 0, count_s = 0;
    std::vector<std::uint64_t> collect_s;
    double t_first_s = timed([&] { first_s = scan::find_first(n, planted); });
    double t_count_s = timed([&] { count_s = scan::count(n, sparse); });
    double t_coll_s = timed([&] { collect_s = scan::collect(n, sparse); });

    scan::set_parallel(true);
    std::uint64_t first_p = 0, count_p = 0;
    std::vector<std::uint64_t> collect_p;
    double t_first_p = timed([&] { first_p = scan::find_first(n, planted); });
    double t_count_p = timed([&] { count_p = scan::count(n, sparse); });
    double t_coll_p = timed([&] { collect_p = scan::collect(n, sparse); });

    row("find_first", "planted tail hit", n, t_first_s, t_first_p,
        first_s == first_p);
    row("count", "splitmix sieve", n, t_count_s, t_count_p, count_s == count_p);
    row("collect", "splitmix sieve", n, t_coll_s, t_coll_p,
        collect_s == collect_p);

    // Real workload: zero-product pair scan over degree-2 tuples of the
    // triangular F2 ring, the shape every splitting check runs.
    const CatalogEntry* entry = find_entry("t2f2_id");
    Config cfg;
    QdPtr qd = entry->instantiate(cfg);
    CtxPtr ctx = make_context(qd->ring(), qd);
    const std::uint64_t side = 8 * 8 * 8;
    const std::uint64_t pairs = side * side;
    auto zero_product = [&](std::uint64_t t) {
        SkewPoly p = tuple_poly(ctx, t / side, 3);
        SkewPoly q = tuple_poly(ctx, t % side, 3);
        return p.mul(q).is_zero();
    };

    scan::set_parallel(false);
    std::uint64_t zp_s = 0;
    double t_zp_s = timed([&] { zp_s = scan::count(pairs, zero_product); });
    scan::set_parallel(true);
    std::uint64_t zp_p = 0;
    double t_zp_p = timed([&] { zp_p = scan::count(pairs, zero_product); });
    row("count", "skew zero products", pairs, t_zp_s, t_zp_p, zp_s == zp_p);

    std::printf("zero products among degree<=2 pairs: %" PRIu64 "\n", zp_s);
    return 0;
}
