#include "arcwalk/parallel.hpp"

#include <algorithm>
#include <cstdlib>

namespace arcwalk {

unsigned worker_count(std::size_t n_tasks) {
    unsigned cap = std::thread::hardware_concurrency();
    if (cap == 0) cap = 1;
    if (const char* env = std::getenv("ARCWALK_THREADS")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end != env && v > 0) cap = static_cast<unsigned>(std::min(v, 1024L));
    }
    if (n_tasks < 1) n_tasks = 1;
    return static_cast<unsigned>(std::min<std::size_t>(cap, n_tasks));
}

} // namespace arcwalk
