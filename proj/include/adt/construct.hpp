#pragma once

#include <vector>

#include "adt/decomposition.hpp"
#include "adt/linear_code.hpp"

namespace adt {

/// Identical-channel model (m == n): every transmitter sends raw bits.
LinearCode construct_uncoded(int n, int L = 2);

/// Degenerate 2x2 model: both sources aligned at the weaker receiver.
LinearCode construct_degenerate(const Params2x2& p);

/// Symmetric L=2 model with 1/2 <= alpha <= 2/3: one-shot code of rate
/// min(m,n) via shifted placement at the second transmitter.
LinearCode construct_case1(int m, int n);

/// Symmetric L=2 model with 2/3 <= alpha < 1: three-shot code of rate
/// 2*max(m,n)/3.
LinearCode construct_case2(int m, int n);

/// Raw ingredients of the Case II construction for min=m', max=n'
/// (m' < n', 3m' >= 2n').  V1/V2 are the per-slot sub-blocks and T the
/// inter-slot interference operator; the deployed matrices are
/// [V1 | T V2] and [T V1 | V2].
struct Case2Parts {
    Gf2Matrix V1, V2, T;
};
Case2Parts case2_parts(int m, int n);

/// Optimal code for the |n - m| = 1 two-user model (m = r, n = r + 1),
/// any r >= 0.  Pass mirrored=true for (r + 1, r).
LinearCode construct_gap1_L2(int r, bool mirrored = false);

/// Optimal code for the |n - m| = 1 model with L >= 3 users
/// (m = r - 1, n = r); rate r/2 for r >= 2.  All transmitters use the
/// same matrix.  Pass mirrored=true for (r, r - 1).
LinearCode construct_luser_gap1(int r, bool mirrored, int L);

/// Lift per-color sub-codes through a validated decomposition of the
/// parent symmetric model.  Sub-code j must match color_shape[j] and the
/// parent user count.
LinearCode compose_from_decomposition(const ParamsSym& parent,
                                      const Decomposition& dec,
                                      const std::vector<LinearCode>& subcodes);

/// Dispatch to the scheme that achieves linear capacity for (m, n, L).
LinearCode construct_auto(int m, int n, int L = 2);

}  // namespace adt
