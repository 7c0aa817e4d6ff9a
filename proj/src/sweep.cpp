#include "ramanqed/sweep.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

namespace ramanqed {

int resolve_workers(int requested) {
    if (requested > 0) return requested;
    if (const char* env = std::getenv("RAMANQED_WORKERS")) {
        int n = 0;
        try {
            std::size_t used = 0;
            n = std::stoi(env, &used);
            if (used != std::string(env).size()) n = 0;
        } catch (const std::exception&) {
            n = 0;
        }
        if (n < 1) {
            throw std::invalid_argument(
                "RAMANQED_WORKERS must be a positive integer");
        }
        return n;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

}  // namespace ramanqed
