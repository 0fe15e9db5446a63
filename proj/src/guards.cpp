#include "odakit/guards.hpp"

#include <cstdlib>
#include <string>

namespace odakit {

const Guards& global_guards() {
    static const Guards guards = [] {
        Guards g;
        if (const char* env = std::getenv("ODAKIT_GUARD")) {
            try {
                std::uint64_t v = std::stoull(env);
                if (v > 0) {
                    g.upset_enum = v;
                    g.subalgebra = v;
                    g.antichain = v;
                    g.product = v;
                }
            } catch (...) {
                // ignore unparsable values, keep defaults
            }
        }
        return g;
    }();
    return guards;
}

} // namespace odakit
