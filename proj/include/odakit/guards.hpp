#pragma once

#include <cstdint>

namespace odakit {

// Resource limits for the enumerating algorithms.  Every limit is a count,
// never a time.  ODAKIT_GUARD in the environment replaces all of them with a
// single value (read once, at first use).
struct Guards {
    // all_up_sets refuses when the projected count 2^|P| exceeds this
    std::uint64_t upset_enum = std::uint64_t{1} << 20;
    // generate_subalgebra refuses when the closure grows past this
    std::uint64_t subalgebra = 4096;
    // oda_closure refuses when a generator antichain grows past this
    std::uint64_t antichain = 65536;
    // power_map / restrict_product refuse when the product poset is larger
    std::uint64_t product = 4096;
};

// Process-wide defaults, after applying ODAKIT_GUARD if present.
const Guards& global_guards();

} // namespace odakit
