#pragma once

#include <cstdlib>
#include <thread>

namespace qgr {

/// Worker cap for embarrassingly parallel enumerations; QGR_THREADS
/// overrides hardware concurrency. Results are always merged in slot order,
/// so the cap never changes output.
inline unsigned worker_count() {
    if (const char* env = std::getenv("QGR_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

}  // namespace qgr
