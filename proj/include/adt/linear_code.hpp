#pragma once

#include <string>
#include <vector>

#include "adt/gf2_matrix.hpp"
#include "adt/network.hpp"
#include "adt/rational.hpp"

namespace adt {

/// A vector linear code over N channel uses: per-transmitter beamforming
/// matrix of shape (N q) x K, slot-major rows.  Every column is nonzero
/// (each source bit is transmitted).
struct LinearCode {
    NetParams params;
    int N = 1;
    int K = 0;
    std::vector<Gf2Matrix> V;
    std::string label;

    int num_users() const { return users(params); }
    int q() const { return level_count(params); }
    Rational rate() const { return {K, N}; }
};

}  // namespace adt
