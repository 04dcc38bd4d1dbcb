#include "adt/capacity.hpp"

#include <algorithm>
#include <stdexcept>

namespace adt {

Rational upper_cutset(const Params2x2& p) {
    return {std::min(std::min(p.n11, p.n12), std::min(p.n21, p.n22))};
}

std::optional<Rational> upper_nondegenerate(const Params2x2& p) {
    if (classify_closed_form(p) == NetworkClass::Degenerate) return std::nullopt;
    return Rational{std::max(p.n11, p.n21) + std::max(p.n22, p.n12), 3};
}

Rational capacity_degenerate(const Params2x2& p) {
    if (classify_closed_form(p) != NetworkClass::Degenerate)
        throw std::invalid_argument("capacity_degenerate: network is non-degenerate");
    return upper_cutset(p);
}

Rational capacity_symmetric(int m, int n) {
    if (m == n) return {n};
    return rat_min({m}, {n}, Rational{2 * std::max(m, n), 3});
}

Rational normalized_capacity(int m, int n) {
    int q = std::max(m, n);
    if (q == 0) return {0};
    Rational a{std::min(m, n), q};
    if (a == Rational{1}) return {1};
    return rat_min(a, {2, 3});
}

Rational separation_rate(int m, int n) {
    int q = std::max(m, n);
    if (q == 0) return {0};
    return Rational{q} * rat_min(Rational{std::min(m, n), q}, {1, 2});
}

Rational luser_linear_capacity(int m, int n, int L) {
    if (L < 3) throw std::invalid_argument("luser_linear_capacity: requires L >= 3");
    if (m == n) return {n};
    return rat_min({m}, {n}, Rational{std::max(m, n), 2});
}

Rational luser_upper_bound(int m, int n, int L) {
    if (L < 3) throw std::invalid_argument("luser_upper_bound: requires L >= 3");
    if (m == n) return {n};
    return rat_min({m}, {n}, Rational{static_cast<long long>(L) * std::max(m, n), 2LL * L - 1});
}

}  // namespace adt
