#pragma once

#include <optional>

#include "adt/network.hpp"
#include "adt/rational.hpp"

namespace adt {

/// Cut-set bound: min over the four link strengths.
Rational upper_cutset(const Params2x2& p);

/// Tighter bound for non-degenerate networks; nullopt when degenerate.
std::optional<Rational> upper_nondegenerate(const Params2x2& p);

/// Capacity of a degenerate network (throws on non-degenerate input).
Rational capacity_degenerate(const Params2x2& p);

/// Two-user symmetric capacity: n when m = n, else min(m, n, 2 max(m,n)/3).
Rational capacity_symmetric(int m, int n);

/// Capacity normalized by q = max(m,n), as a function of alpha = min/max.
Rational normalized_capacity(int m, int n);

/// Rate of decoding all sources first and summing afterwards.
Rational separation_rate(int m, int n);

/// L >= 3 symmetric networks (throws on L < 3).
Rational luser_linear_capacity(int m, int n, int L);
Rational luser_upper_bound(int m, int n, int L);

}  // namespace adt
