#include "adt/decomposition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace adt {

namespace {

// Shared builder for the (p-1) mod c level-coloring rule.
Decomposition build_mod_coloring(int m, int n, int L, int c) {
    Decomposition dec;
    dec.m = m;
    dec.n = n;
    dec.L = L;
    const int q = std::max(m, n);
    dec.coloring.num_colors = c;
    dec.color_shape.assign(static_cast<std::size_t>(c), {0, 0});
    for (int p = 1; p <= q; ++p) {
        int j = (p - 1) % c;
        if (p <= m) ++dec.color_shape[static_cast<std::size_t>(j)].first;
        if (p <= n) ++dec.color_shape[static_cast<std::size_t>(j)].second;
    }
    std::vector<int> color(static_cast<std::size_t>(q)), sub(static_cast<std::size_t>(q));
    for (int p = 1; p <= q; ++p) {
        color[static_cast<std::size_t>(p - 1)] = (p - 1) % c;
        sub[static_cast<std::size_t>(p - 1)] = (p - 1) / c + 1;
    }
    dec.coloring.color.assign(static_cast<std::size_t>(2 * L), color);
    dec.coloring.sublevel.assign(static_cast<std::size_t>(2 * L), sub);

    std::map<std::pair<int, int>, int> mult;
    for (auto& s : dec.color_shape) ++mult[s];
    for (auto& [shape, count] : mult) dec.parts.push_back({shape.first, shape.second, count});
    return dec;
}

}  // namespace

std::string Decomposition::format() const {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += " x ";
        out += "(" + std::to_string(p.m_sub) + "," + std::to_string(p.n_sub) + ")";
        if (p.multiplicity != 1) out += "^" + std::to_string(p.multiplicity);
    }
    return out.empty() ? "(empty)" : out;
}

Decomposition decompose_scale(int m, int n, int k, int L) {
    if (k < 1) throw std::invalid_argument("decompose_scale: k must be >= 1");
    return build_mod_coloring(k * m, k * n, L, k);
}

Decomposition decompose_odd(int m_parent, int n_parent, int L) {
    if (m_parent % 2 == 0 || n_parent % 2 == 0)
        throw std::invalid_argument("decompose_odd: both parameters must be odd");
    return build_mod_coloring(m_parent, n_parent, L, 2);
}

Decomposition full_decompose(int m, int n, int L) {
    if (m == n) throw std::invalid_argument("full_decompose: requires m != n");
    return build_mod_coloring(m, n, L, std::abs(n - m));
}

bool validate_coloring(const Decomposition& dec) {
    const int q = std::max(dec.m, dec.n);
    const int c = dec.coloring.num_colors;
    const int nodes = 2 * dec.L;
    if (c <= 0 || static_cast<int>(dec.coloring.color.size()) != nodes ||
        static_cast<int>(dec.coloring.sublevel.size()) != nodes)
        return false;
    if (static_cast<int>(dec.color_shape.size()) != c) return false;

    // (i) colors partition levels, with consistent 1..q_c sublevel numbering
    for (int node = 0; node < nodes; ++node) {
        const auto& col = dec.coloring.color[static_cast<std::size_t>(node)];
        const auto& sub = dec.coloring.sublevel[static_cast<std::size_t>(node)];
        if (static_cast<int>(col.size()) != q || static_cast<int>(sub.size()) != q) return false;
        std::vector<int> next(static_cast<std::size_t>(c), 1);
        for (int p = 0; p < q; ++p) {
            if (col[static_cast<std::size_t>(p)] < 0 || col[static_cast<std::size_t>(p)] >= c) return false;
            if (sub[static_cast<std::size_t>(p)] != next[static_cast<std::size_t>(col[static_cast<std::size_t>(p)])]++)
                return false;
        }
        for (int j = 0; j < c; ++j) {
            int qc = std::max(dec.color_shape[static_cast<std::size_t>(j)].first,
                              dec.color_shape[static_cast<std::size_t>(j)].second);
            if (next[static_cast<std::size_t>(j)] - 1 != qc) return false;
        }
    }

    // (ii)+(iii) every channel edge stays inside one color and the induced
    // connectivity is exactly the declared sub-model
    for (int tx = 0; tx < dec.L; ++tx)
        for (int rx = 0; rx < dec.L; ++rx) {
            const int s = (tx == rx) ? dec.n : dec.m;
            const int shift = q - s;
            const auto& tcol = dec.coloring.color[static_cast<std::size_t>(tx)];
            const auto& tsub = dec.coloring.sublevel[static_cast<std::size_t>(tx)];
            const auto& rcol = dec.coloring.color[static_cast<std::size_t>(dec.L + rx)];
            const auto& rsub = dec.coloring.sublevel[static_cast<std::size_t>(dec.L + rx)];
            for (int p = 1; p <= q; ++p) {
                int j = tcol[static_cast<std::size_t>(p - 1)];
                auto [mc, nc] = dec.color_shape[static_cast<std::size_t>(j)];
                int sc = (tx == rx) ? nc : mc;
                int qc = std::max(mc, nc);
                bool edge = p <= s;                                      // edge in the parent graph
                bool sub_edge = tsub[static_cast<std::size_t>(p - 1)] <= sc;  // edge in the sub-model
                if (edge != sub_edge) return false;
                if (!edge) continue;
                int pr = p + shift;
                if (rcol[static_cast<std::size_t>(pr - 1)] != j) return false;  // edge crosses colors
                if (rsub[static_cast<std::size_t>(pr - 1)] != tsub[static_cast<std::size_t>(p - 1)] + (qc - sc))
                    return false;
            }
        }

    // declared multiset of parts matches the per-color shapes
    std::map<std::pair<int, int>, int> mult;
    for (auto& s : dec.color_shape) ++mult[s];
    std::map<std::pair<int, int>, int> declared;
    for (auto& p : dec.parts) declared[{p.m_sub, p.n_sub}] += p.multiplicity;
    return mult == declared;
}

}  // namespace adt
