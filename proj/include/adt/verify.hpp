#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adt/linear_code.hpp"

namespace adt {

struct ReceiverReport {
    std::optional<Gf2Matrix> decoder;  // D with D * A = [I_K | ... | I_K]
    std::size_t receive_rank = 0;      // rank of the stacked receive matrix A
};

struct VerificationReport {
    bool pass = false;  // decoder present at every receiver
    std::vector<ReceiverReport> receivers;
};

/// Stacked receive matrix A_l = [T_{1l} V_1 | ... | T_{Ll} V_L] over N uses.
Gf2Matrix receive_matrix(const LinearCode& code, int rx);

/// Zero-error check: a linear decoder at every receiver recovering the
/// bitwise XOR of all K-bit sources.
VerificationReport decoder_exists(const LinearCode& code);

/// Monte-Carlo sanity layer over decoder_exists: random source blocks pushed
/// through the channel and the decoders.  Requires decoder_exists to pass.
bool simulate(const LinearCode& code, std::uint64_t seed, int trials);

/// Full-rank certificate for a Case II code: rank([V1|T V2|T^2 V1]) and
/// rank([V2|T V1|T^2 V2]); both equal 3 max(m,n) for a valid code.
std::pair<std::size_t, std::size_t> rank_condition(const LinearCode& code);

struct SubspaceReport {
    std::vector<std::vector<std::size_t>> dims;  // dims[i][rx] = dim W_{i,rx}
    bool independent = true;  // the per-transmitter spaces form a direct sum at every receiver
    bool feasible = true;     // no receiver pairs a 1-dim space with a <=2-dim one elsewhere
};

/// Per-bit occupied subspaces W_{i,l} = span{T_{jl} v_{ji} : j} at every
/// receiver, plus the independence and feasibility structure checks.
SubspaceReport subspace_dims(const LinearCode& code);

}  // namespace adt
