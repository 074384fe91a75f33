#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mbal/json_io.hpp"

namespace mbal {

/// Populations for the acceptance battery. The defaults are the full
/// acceptance sizes.
struct SuiteConfig {
    std::size_t max_exhaustive = 4;            ///< every relation on 1..N points (criteria 1-3, 5, 6, 8)
    std::size_t correspondence_exhaustive = 3; ///< every relation on 1..N points (criterion 4)
    std::size_t morphism_exhaustive = 3;       ///< every map between relations on 1..N points (criterion 9)
    std::vector<std::size_t> roundtrip_sizes{5, 6, 7};      ///< random frames (criteria 2, 3)
    std::vector<std::size_t> correspondence_sizes{4, 5, 6}; ///< random frames (criterion 4)
    std::size_t identity_max_size = 6;         ///< random (frame, f ≥ 0) pairs on 1..N points (criterion 7)
    std::size_t trials = 1000;                 ///< random instances per size
    std::size_t samples = 50;                  ///< seeded random functions per frame
    std::size_t mutants = 100;                 ///< deliberately broken operators (criterion 8)
    std::uint64_t seed = 42;
    unsigned threads = 1;

    /// Applies the CLI shorthand: one exhaustive bound (capped at 3 for
    /// criteria 4 and 9) and one list of random sizes for every random pass.
    void set_exhaustive(std::size_t n);
    void set_random_sizes(std::vector<std::size_t> sizes);
};

struct CriterionResult {
    int id = 0;
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t failures = 0;
    Json first_failure;        ///< null when there is none
    Json info = Json::object(); ///< criterion-specific counters

    [[nodiscard]] bool passed() const { return failures == 0 && checked > 0; }
};

struct SuiteReport {
    SuiteConfig config;
    std::vector<CriterionResult> criteria; ///< criteria 1-9 in order

    [[nodiscard]] bool passed() const;
};

/// Runs criteria 1-9. The result depends only on the configuration, never on
/// the thread count: work is split into fixed chunks merged in order.
[[nodiscard]] SuiteReport run_suite(const SuiteConfig& config);

[[nodiscard]] Json config_to_json(const SuiteConfig& config);
[[nodiscard]] Json suite_to_json(const SuiteReport& report);

/// splitmix64 over the base seed and a tag sequence.
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t base, std::initializer_list<std::uint64_t> tags);

/// Random frame for index i of a pass, cycling densities and closure
/// constraints so every property class is represented.
[[nodiscard]] Frame suite_frame(std::size_t n, std::uint64_t index, std::uint64_t seed);

} // namespace mbal
