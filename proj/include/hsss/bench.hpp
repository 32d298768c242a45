#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hsss/rng.hpp"

namespace hsss {

struct BenchConfig {
    std::vector<std::pair<std::size_t, std::size_t>> sizes; // (t, n) pairs, t <= n
    std::size_t trials = 100;
};

// Medians over all trials, microseconds. Correctness of both schemes is
// asserted inside every trial; a failed trial throws.
struct BenchRow {
    std::size_t t = 0;
    std::size_t n = 0;
    double hash_setup_us = 0;
    double hash_recover_us = 0;
    double shamir_split_us = 0;
    double shamir_reconstruct_us = 0;
};

std::vector<BenchRow> bench_compare(const BenchConfig& config, Rng& rng);

// Plain-text table: "t n hash_us shamir_us ratio", one header line.
// hash_us is the recovery median, shamir_us the reconstruction median,
// ratio their quotient shamir/hash.
std::string format_report(const std::vector<BenchRow>& rows);

} // namespace hsss
