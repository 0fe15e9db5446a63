#pragma once

#include "odakit/oda.hpp"
#include "odakit/oda_completion.hpp"
#include "odakit/suites.hpp"

#include <string>
#include <utility>
#include <vector>

namespace odakit {

// Assembled outcome of one CLI run.  Facts are ordered key/value summary
// lines; laws are the individual checks.  Wall time is tracked separately and
// only emitted on request, so default output is bit-identical across runs
// with the same inputs and seed.
struct RunReport {
    std::string command;
    bool ok = true;
    std::vector<std::pair<std::string, std::string>> facts;
    std::vector<LawReport> laws;
    double seconds = 0.0;

    void add_fact(std::string key, std::string value);
    void absorb(const AxiomReport& rep);
    void absorb(const SuiteReport& rep);
    void absorb(const ExampleReport& rep);
};

// One line per fact and law.  Failing laws that are not required render as
// NOTE, since refuting those is expected behaviour, not an error.
std::string to_text(const RunReport& r, bool with_timing);

// Stable field order (alphabetical keys, facts and laws as arrays), two-space
// indent, trailing newline.
std::string to_json_text(const RunReport& r, bool with_timing);

} // namespace odakit
