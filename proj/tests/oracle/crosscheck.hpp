#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace crosscheck {

struct Sample {
    std::string system;
    std::string set;
    std::string identity;
    std::vector<std::size_t> tuple;
    std::string engine;
    std::string oracle;
};

struct Result {
    std::size_t samples = 0;
    std::size_t nonzero = 0;
    std::vector<Sample> mismatches;
    bool ok() const { return samples > 0 && mismatches.empty(); }
};

// Compares engine residuals with the oracle on randomly drawn (identity, tuple) pairs.
Result random_pairs(std::size_t count, unsigned seed);

// Every tuple of every identity on the named system.
Result exhaustive(const std::string& system);

std::vector<std::string> system_names();

} // namespace crosscheck
