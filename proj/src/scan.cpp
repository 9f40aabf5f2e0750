#include "orelab/scan.hpp"

#include <cstdlib>

namespace orelab::scan {

namespace {

bool initial_parallel() {
    // ORELAB_SERIAL=1 pins every scan to the reference path.
    const char* env = std::getenv("ORELAB_SERIAL");
    return !(env && env[0] == '1');
}

std::atomic<bool>& flag() {
    static std::atomic<bool> on{initial_parallel()};
    return on;
}

} // namespace

bool parallel_enabled() { return flag().load(std::memory_order_relaxed); }

void set_parallel(bool on) { flag().store(on, std::memory_order_relaxed); }

} // namespace orelab::scan
