#pragma once

#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "adt/gf2_matrix.hpp"
#include "adt/rational.hpp"

namespace adt {

/// General 2x2 deterministic network: n_ij bit levels from transmitter i to
/// receiver j.
struct Params2x2 {
    int n11 = 0, n12 = 0, n21 = 0, n22 = 0;

    int q() const { return std::max(std::max(n11, n12), std::max(n21, n22)); }
    int strength(int tx, int rx) const {
        if (tx == 0) return rx == 0 ? n11 : n12;
        return rx == 0 ? n21 : n22;
    }
    bool operator==(const Params2x2&) const = default;
};

/// Symmetric L-user network: direct links carry n levels, cross links m.
struct ParamsSym {
    int m = 0, n = 0, L = 2;

    int q() const { return std::max(m, n); }
    Rational alpha() const { return q() == 0 ? Rational{0} : Rational{std::min(m, n), q()}; }
    int strength(int tx, int rx) const { return tx == rx ? n : m; }
    bool operator==(const ParamsSym&) const = default;
};

using NetParams = std::variant<Params2x2, ParamsSym>;

inline int users(const NetParams& p) {
    return std::holds_alternative<Params2x2>(p) ? 2 : std::get<ParamsSym>(p).L;
}
inline int level_count(const NetParams& p) {
    return std::holds_alternative<Params2x2>(p) ? std::get<Params2x2>(p).q() : std::get<ParamsSym>(p).q();
}
inline int link_strength(const NetParams& p, int tx, int rx) {
    if (const auto* g = std::get_if<Params2x2>(&p)) return g->strength(tx, rx);
    return std::get<ParamsSym>(p).strength(tx, rx);
}

/// Per-receiver, per-transmitter transfer blocks G^{q-n_ij} plus the stacked
/// map (X_1,...,X_L) -> (Y_1,...,Y_L).
struct ChannelMatrix {
    int num_users = 0;
    int q = 0;
    std::vector<std::vector<Gf2Matrix>> blocks;  // blocks[rx][tx]
    Gf2Matrix stacked;                           // (L q) x (L q)
};

ChannelMatrix transfer_matrices(const NetParams& params);

/// One channel use: Y_l = xor_j G^{q-n_jl} X_j.  One q-vector (q x 1 matrix)
/// per transmitter.
std::vector<Gf2Matrix> receive(const ChannelMatrix& ch, const std::vector<Gf2Matrix>& inputs);

enum class NetworkClass { Degenerate, NonDegenerate };

/// Closed-form test: degenerate iff n11 - n12 = n21 - n22.
NetworkClass classify_closed_form(const Params2x2& p);

struct ClassifyResult {
    NetworkClass cls;
    std::optional<std::pair<int, int>> witness;  // (tx, rx), 0-based
};

/// Constructive test: for each (i,j), asks whether G^{q-n_ij} X_i can be
/// recovered from (Y_1, Y_2) by a linear map, with X_i supported on its top
/// n_ii levels.  Trivial (all-zero) target blocks never count as witnesses.
ClassifyResult classify_constructive(const Params2x2& p);

/// For m != n, every X_l is recoverable from (Y_1,...,Y_L) when inputs follow
/// the top-n support convention.
bool claim1_check(const ParamsSym& p);

}  // namespace adt
