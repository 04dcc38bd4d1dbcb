#include "adt/construct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace adt {

namespace {

// n x (hi - lo + 1) matrix whose columns are e_lo .. e_hi (1-based).
Gf2Matrix unit_range(int n, int lo, int hi) {
    int w = std::max(0, hi - lo + 1);
    Gf2Matrix m(n, w);
    for (int j = 0; j < w; ++j) m.set(lo - 1 + j, j, 1);
    return m;
}

Gf2Matrix unit_col(int n, int k) { return unit_range(n, k, k); }

LinearCode mirrored_pair(LinearCode c, const NetParams& params) {
    std::swap(c.V[0], c.V[1]);
    c.params = params;
    return c;
}

// Case I core for m <= n.
LinearCode case1_core(int m, int n) {
    LinearCode c;
    c.params = ParamsSym{m, n, 2};
    c.N = 1;
    c.K = m;
    c.label = "case1";
    int n1 = 2 * m - n;  // overlap width
    Gf2Matrix v1(n, m), v2(n, m);
    for (int j = 1; j <= m; ++j) {
        v1.set(j - 1, j - 1, 1);
        int s;
        if (j <= n1)
            s = j + (n - m);
        else if (j <= n - m)
            s = j;
        else
            s = j - (n - m);
        v2.set(s - 1, j - 1, 1);
    }
    c.V = {v1, v2};
    return c;
}

// Deployed Case II matrices for m < n: X1 spans [V1 | T V2], X2 spans [T V1 | V2].
LinearCode case2_core(int m, int n) {
    Case2Parts p = case2_parts(m, n);
    LinearCode c;
    c.params = ParamsSym{m, n, 2};
    c.N = 3;
    c.K = 2 * n;
    c.label = "case2";
    c.V = {hconcat({p.V1, p.T * p.V2}), hconcat({p.T * p.V1, p.V2})};
    return c;
}

// Big-model (3r, 3r+3) code for r ≡ 0 or 1 (mod 3), returned in stacked
// (m, n) = (r, r+1), N = 3 coordinates.
LinearCode gap1_big(int r) {
    int rm = r % 3;
    int ell = (rm == 0) ? r / 3 : (r - 1) / 3;
    int nb = (rm == 0) ? 4 : 5;  // embedded Case II block: (3,4) or (4,5)
    LinearCode base = case2_core(nb - 1, nb);
    int qbig = 3 * (r + 1);
    int kpat = 6 * (ell - 1);
    int kk = kpat + base.K;
    Gf2Matrix w1(qbig, kk), w2(qbig, kk);
    // Repeated 9-level two-pair pattern: each side sends its six fresh bits,
    // the partner's copies arrive three levels lower.
    for (int k = 1; k < ell; ++k) {
        int lv = 9 * k - 9, bt = 6 * k - 6;
        for (int t = 0; t < 6; ++t) {
            int tp = (t + 3) % 6;  // partner slot: same bits, offset half a group
            w1.set(lv + t, bt + (t % 3) * 2 + t / 3, 1);
            w2.set(lv + t, bt + (tp % 3) * 2 + tp / 3, 1);
        }
    }
    // Embedded Case II block on the last 3*nb big levels.
    int l0 = 9 * (ell - 1);
    for (int sr = 0; sr < 3 * nb; ++sr) {
        int slot = sr / nb, lvl = sr % nb;
        int big = l0 + 3 * lvl + slot;
        for (int j = 0; j < base.K; ++j) {
            if (base.V[0].get(sr, j)) w1.set(big, kpat + j, 1);
            if (base.V[1].get(sr, j)) w2.set(big, kpat + j, 1);
        }
    }
    // Re-stack big level p (0-based) as (slot p mod 3, level p div 3).
    LinearCode c;
    c.params = ParamsSym{r, r + 1, 2};
    c.N = 3;
    c.K = kk;
    c.label = "gap1";
    Gf2Matrix v1(qbig, kk), v2(qbig, kk);
    for (int p = 0; p < qbig; ++p) {
        int dst = (p % 3) * (r + 1) + p / 3;
        for (int j = 0; j < kk; ++j) {
            if (w1.get(p, j)) v1.set(dst, j, 1);
            if (w2.get(p, j)) v2.set(dst, j, 1);
        }
    }
    c.V = {v1, v2};
    return c;
}

}  // namespace

LinearCode construct_uncoded(int n, int L) {
    if (n < 0 || L < 2) throw std::invalid_argument("construct_uncoded: invalid input");
    LinearCode c;
    c.params = ParamsSym{n, n, L};
    c.N = 1;
    c.K = n;
    c.label = "uncoded";
    c.V.assign(L, Gf2Matrix::identity(n));
    return c;
}

LinearCode construct_degenerate(const Params2x2& p) {
    if (p.n11 - p.n12 != p.n21 - p.n22) throw std::invalid_argument("construct_degenerate: not degenerate");
    // Weaker receiver: both incoming links are the smaller ones.
    int rx = (p.n11 - p.n12 >= 0) ? 1 : 0;
    int k = std::min(p.strength(0, rx), p.strength(1, rx));
    LinearCode c;
    c.params = p;
    c.N = 1;
    c.K = k;
    c.label = "degenerate";
    int q = p.q();
    for (int tx = 0; tx < 2; ++tx) {
        Gf2Matrix v(q, k);
        int top = p.strength(tx, rx) - k;  // bits land on the weaker receiver's top k levels
        for (int j = 0; j < k; ++j) v.set(top + j, j, 1);
        c.V.push_back(v);
    }
    return c;
}

LinearCode construct_case1(int m, int n) {
    int mi = std::min(m, n), ma = std::max(m, n);
    if (mi < 1 || 2 * mi < ma || 3 * mi > 2 * ma)
        throw std::invalid_argument("construct_case1: need 1/2 <= alpha <= 2/3");
    LinearCode core = case1_core(mi, ma);
    if (m <= n) return core;
    return mirrored_pair(core, ParamsSym{m, n, 2});
}

namespace {

// Incremental GF(2) column basis (reduced against prior pivots) with undo,
// used by the Case II top-level assignment search.
struct ColBasis {
    std::vector<std::vector<uint64_t>> vecs;
    std::vector<int> pivots;
    int words;

    explicit ColBasis(int bits) : words((bits + 63) / 64) {}

    static std::vector<uint64_t> column(const Gf2Matrix& mat, int j, int words) {
        std::vector<uint64_t> v(words, 0);
        for (size_t i = 0; i < mat.rows(); ++i)
            if (mat.get(i, j)) v[i / 64] |= uint64_t{1} << (i % 64);
        return v;
    }

    // Returns false (and leaves the basis unchanged) if v is dependent.
    bool add(std::vector<uint64_t> v) {
        for (size_t i = 0; i < vecs.size(); ++i) {
            int p = pivots[i];
            if ((v[p / 64] >> (p % 64)) & 1)
                for (int t = 0; t < words; ++t) v[t] ^= vecs[i][t];
        }
        for (int t = 0; t < words; ++t)
            if (v[t]) {
                int b = 0;
                while (!((v[t] >> b) & 1)) ++b;
                vecs.push_back(std::move(v));
                pivots.push_back(t * 64 + b);
                return true;
            }
        return false;
    }

    void pop(size_t count) {
        vecs.resize(vecs.size() - count);
        pivots.resize(pivots.size() - count);
    }
};

// The blocks appended to [V | TV | T^2 V] when column j of the extension uses
// top level 3(n-m)+v+1: three columns each of the two combined matrices.
struct Case2Candidates {
    // cand[side][j*w + v][t], side 0 for [V1 TV2 T^2V1], side 1 for the mirror.
    std::vector<std::vector<uint64_t>> cand[2];
};

// Depth-first search for the lexicographically first assignment of top levels
// to extension columns that keeps every column of both combined matrices
// independent.  Both matrices are square once the fixed V-part is included, so
// full rank forces independence of every prefix, which makes the pruning exact.
bool case2_assign(int j, int w, std::vector<int>& sig, std::vector<bool>& used,
                  ColBasis& b1, ColBasis& b2, const Case2Candidates& cc) {
    if (j == w) return true;
    for (int v = 0; v < w; ++v) {
        if (used[v]) continue;
        size_t added1 = 0, added2 = 0;
        bool ok = true;
        for (int t = 0; t < 3 && ok; ++t)
            if (b1.add(cc.cand[0][(j * w + v) * 3 + t])) ++added1; else ok = false;
        for (int t = 0; t < 3 && ok; ++t)
            if (b2.add(cc.cand[1][(j * w + v) * 3 + t])) ++added2; else ok = false;
        if (ok) {
            used[v] = true;
            sig[j] = v;
            if (case2_assign(j + 1, w, sig, used, b1, b2, cc)) return true;
            used[v] = false;
        }
        b1.pop(added1);
        b2.pop(added2);
    }
    return false;
}

Case2Parts case2_build(int m, int n, const std::vector<int>& sig) {
    int d = n - m, w = 3 * m - 2 * n;
    Gf2Matrix i3 = Gf2Matrix::identity(3);
    Gf2Matrix v = kron(i3, unit_range(n, 1, d));
    Gf2Matrix a = unit_range(n, d + 1, d + w);
    Gf2Matrix bc = unit_range(n, 2 * d + 1, 2 * d + w);
    for (int j = 0; j < w; ++j) bc.set(3 * d + sig[j], j, 1);
    Gf2Matrix p1 = kron(unit_col(3, 3), a) + kron(unit_col(3, 2), bc);
    Gf2Matrix p2 = kron(unit_col(3, 3), a) + kron(unit_col(3, 1), bc);
    return {hconcat({v, p1}), hconcat({v, p2}), kron(i3, Gf2Matrix::shift_matrix(n, d))};
}

bool case2_full_rank(const Case2Parts& p, int n) {
    const Gf2Matrix& t = p.T;
    return hconcat({p.V1, t * p.V2, t * (t * p.V1)}).rank() == size_t(3 * n) &&
           hconcat({p.V2, t * p.V1, t * (t * p.V2)}).rank() == size_t(3 * n);
}

}  // namespace

Case2Parts case2_parts(int m, int n) {
    if (m >= n || 3 * m < 2 * n) throw std::invalid_argument("case2_parts: need 2/3 <= alpha < 1");
    int d = n - m, w = 3 * m - 2 * n;
    // Straight diagonal assignment of the top levels: full rank iff 5m <= 4n.
    std::vector<int> sig(w);
    for (int j = 0; j < w; ++j) sig[j] = j;
    Case2Parts parts = case2_build(m, n, sig);
    if (case2_full_rank(parts, n)) return parts;

    // Past 5m > 4n the diagonal assignment makes column j of T^2 P1 coincide
    // with column j + 2(n-m) of P1 (and likewise on the mirror side), so the
    // combined matrices lose rank.  Re-assign the top levels by searching for
    // the first permutation that keeps all columns independent.
    Case2Candidates cc;
    Gf2Matrix i3 = Gf2Matrix::identity(3);
    Gf2Matrix t = kron(i3, Gf2Matrix::shift_matrix(n, d));
    int words = (3 * n + 63) / 64;
    for (int side = 0; side < 2; ++side) cc.cand[side].resize(size_t(w) * w * 3);
    for (int j = 0; j < w; ++j)
        for (int v = 0; v < w; ++v) {
            Gf2Matrix s(n, 1), a(n, 1);
            s.set(2 * d + j, 0, 1);
            s.set(3 * d + v, 0, 1);
            a.set(d + j, 0, 1);
            Gf2Matrix p1 = kron(unit_col(3, 3), a) + kron(unit_col(3, 2), s);
            Gf2Matrix p2 = kron(unit_col(3, 3), a) + kron(unit_col(3, 1), s);
            Gf2Matrix tp1 = t * p1, tp2 = t * p2;
            size_t base = (size_t(j) * w + v) * 3;
            cc.cand[0][base + 0] = ColBasis::column(p1, 0, words);
            cc.cand[0][base + 1] = ColBasis::column(tp2, 0, words);
            cc.cand[0][base + 2] = ColBasis::column(t * tp1, 0, words);
            cc.cand[1][base + 0] = ColBasis::column(p2, 0, words);
            cc.cand[1][base + 1] = ColBasis::column(tp1, 0, words);
            cc.cand[1][base + 2] = ColBasis::column(t * tp2, 0, words);
        }
    ColBasis b1(3 * n), b2(3 * n);
    Gf2Matrix v0 = kron(i3, unit_range(n, 1, d));
    Gf2Matrix tv = t * v0, t2v = t * tv;
    for (const Gf2Matrix* mv : {&v0, &tv, &t2v})
        for (size_t j = 0; j < mv->cols(); ++j) {
            b1.add(ColBasis::column(*mv, j, words));
            b2.add(ColBasis::column(*mv, j, words));
        }
    std::vector<bool> used(w, false);
    if (!case2_assign(0, w, sig, used, b1, b2, cc))
        throw std::runtime_error("case2_parts: no full-rank top-level assignment found");
    parts = case2_build(m, n, sig);
    if (!case2_full_rank(parts, n))
        throw std::runtime_error("case2_parts: assignment search produced a deficient code");
    return parts;
}

LinearCode construct_case2(int m, int n) {
    int mi = std::min(m, n), ma = std::max(m, n);
    LinearCode core = case2_core(mi, ma);  // validates the alpha range
    if (m < n) return core;
    return mirrored_pair(core, ParamsSym{m, n, 2});
}

LinearCode construct_gap1_L2(int r, bool mirrored) {
    if (r < 0) throw std::invalid_argument("construct_gap1_L2: invalid input");
    LinearCode c;
    if (r == 0) {
        c.params = ParamsSym{0, 1, 2};
        c.N = 1;
        c.K = 0;
        c.label = "gap1";
        c.V.assign(2, Gf2Matrix(1, 0));
    } else if (r == 1) {
        c = case1_core(1, 2);
        c.label = "gap1";
    } else if (r % 3 == 2) {
        // One-shot scheme: per three-level group, each pair of fresh bits is
        // sent straight and swapped, leaving the bottom level clear.
        int ell = (r + 1) / 3;
        c.params = ParamsSym{r, r + 1, 2};
        c.N = 1;
        c.K = 2 * ell;
        c.label = "gap1";
        Gf2Matrix v1(r + 1, c.K), v2(r + 1, c.K);
        for (int k = 0; k < ell; ++k) {
            v1.set(3 * k, 2 * k, 1);
            v1.set(3 * k + 1, 2 * k + 1, 1);
            v2.set(3 * k + 1, 2 * k, 1);
            v2.set(3 * k, 2 * k + 1, 1);
        }
        c.V = {v1, v2};
    } else {
        c = gap1_big(r);
    }
    if (!mirrored) return c;
    return mirrored_pair(c, ParamsSym{r + 1, r, 2});
}

LinearCode construct_luser_gap1(int r, bool mirrored, int L) {
    if (r < 1 || L < 3) throw std::invalid_argument("construct_luser_gap1: invalid input");
    LinearCode c;
    c.params = mirrored ? ParamsSym{r, r - 1, L} : ParamsSym{r - 1, r, L};
    c.label = "luser_gap1";
    int q = r;
    if (r == 1) {
        c.N = 1;
        c.K = 0;
        c.V.assign(L, Gf2Matrix(q, 0));
        return c;
    }
    Gf2Matrix v;
    if (r % 2 == 0) {
        int k = r / 2;
        c.N = 1;
        c.K = k;
        v = Gf2Matrix(q, k);
        for (int j = 0; j < k; ++j) v.set(2 * j, j, 1);
    } else {
        int k = (r - 1) / 2;
        c.N = 2;
        c.K = 2 * k + 1;
        v = Gf2Matrix(2 * q, c.K);
        for (int j = 0; j < k; ++j) v.set(2 * j, j, 1);
        v.set(2 * k - 1, k, 1);      // slot 1, bottom direct level
        v.set(q, k, 1);              // slot 2, level 1: re-send the pivot bit
        for (int j = 0; j < k; ++j) v.set(q + 2 * j + 1, k + 1 + j, 1);
    }
    c.V.assign(L, v);  // every transmitter uses the same matrix
    return c;
}

LinearCode compose_from_decomposition(const ParamsSym& parent, const Decomposition& dec,
                                      const std::vector<LinearCode>& subcodes) {
    if (dec.m != parent.m || dec.n != parent.n || dec.L != parent.L)
        throw std::invalid_argument("compose: decomposition does not match parent");
    if (!validate_coloring(dec)) throw std::invalid_argument("compose: invalid coloring");
    if (subcodes.size() != dec.color_shape.size())
        throw std::invalid_argument("compose: need one sub-code per color");
    int L = parent.L, q = parent.q();
    for (std::size_t j = 0; j < subcodes.size(); ++j) {
        const auto* sp = std::get_if<ParamsSym>(&subcodes[j].params);
        if (!sp || sp->L != L || sp->m != dec.color_shape[j].first || sp->n != dec.color_shape[j].second)
            throw std::invalid_argument("compose: sub-code does not match its color shape");
    }

    int bigN = 1;
    for (const auto& sc : subcodes) bigN = std::lcm(bigN, sc.N);
    int bigK = 0;
    for (const auto& sc : subcodes) bigK += (bigN / sc.N) * sc.K;

    LinearCode c;
    c.params = parent;
    c.N = bigN;
    c.K = bigK;
    c.label = "compose";
    for (int tx = 0; tx < L; ++tx) {
        // Parent levels of each color at this transmitter, in sub-level order.
        std::vector<std::vector<int>> levels(subcodes.size());
        for (std::size_t j = 0; j < subcodes.size(); ++j)
            levels[j].resize(std::max(dec.color_shape[j].first, dec.color_shape[j].second));
        for (int p = 0; p < q; ++p) {
            int col = dec.coloring.color[tx][p];
            levels[col][dec.coloring.sublevel[tx][p] - 1] = p;
        }
        Gf2Matrix v(bigN * q, bigK);
        int koff = 0;
        for (std::size_t j = 0; j < subcodes.size(); ++j) {
            const LinearCode& sc = subcodes[j];
            int qj = static_cast<int>(levels[j].size());
            for (int rep = 0; rep < bigN / sc.N; ++rep) {
                for (int sr = 0; sr < sc.N * qj; ++sr) {
                    int slot = rep * sc.N + sr / qj;
                    int row = slot * q + levels[j][sr % qj];
                    for (int b = 0; b < sc.K; ++b)
                        if (sc.V[tx].get(sr, b)) v.set(row, koff + b, 1);
                }
                koff += sc.K;
            }
        }
        c.V.push_back(v);
    }
    return c;
}

LinearCode construct_auto(int m, int n, int L) {
    if (m < 0 || n < 0 || L < 2) throw std::invalid_argument("construct_auto: invalid input");
    if (m == n) return construct_uncoded(n, L);
    int mi = std::min(m, n), ma = std::max(m, n);
    if (mi == 0) {
        LinearCode c;
        c.params = ParamsSym{m, n, L};
        c.N = 1;
        c.K = 0;
        c.label = "empty";
        c.V.assign(L, Gf2Matrix(ma, 0));
        return c;
    }
    if (L == 2) {
        if (2 * mi >= ma && 3 * mi <= 2 * ma) return construct_case1(m, n);
        if (3 * mi >= 2 * ma) return construct_case2(m, n);
    }
    Decomposition dec = full_decompose(m, n, L);
    std::vector<LinearCode> subs;
    for (auto [mc, nc] : dec.color_shape) {
        if (L == 2)
            subs.push_back(mc < nc ? construct_gap1_L2(mc, false) : construct_gap1_L2(nc, true));
        else
            subs.push_back(construct_luser_gap1(std::max(mc, nc), mc > nc, L));
    }
    LinearCode c = compose_from_decomposition(ParamsSym{m, n, L}, dec, subs);
    return c;
}

}  // namespace adt
