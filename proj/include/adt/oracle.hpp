#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "adt/linear_code.hpp"
#include "adt/verify.hpp"

namespace adt {

enum class OracleStatus { Achievable, Impossible, Unknown };

struct OracleResult {
    OracleStatus status = OracleStatus::Unknown;
    std::optional<LinearCode> witness;  // present iff Achievable with K > 0
    std::uint64_t examined = 0;
    std::string note;
};

struct OracleOptions {
    bool exhaustive = true;
    std::uint64_t budget = std::uint64_t{1} << 30;  // max tuples in exhaustive mode
    int trials = 10000;                             // randomized mode
    std::uint64_t seed = 0;
    int jobs = 1;
};

/// Brute-force search for a (K, N) zero-error code on the given network.
/// Exhaustive mode enumerates beamforming tuples in lexicographic order,
/// pruning zero columns and reducing transmitter 1 to column-echelon
/// representatives; the returned witness is deterministic for any job count.
/// Randomized mode samples tuples and never returns Impossible.
OracleResult oracle_search(const NetParams& params, int K, int N, const OracleOptions& opts = {});

}  // namespace adt
