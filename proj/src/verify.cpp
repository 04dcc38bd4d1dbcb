#include "adt/verify.hpp"

#include <random>
#include <stdexcept>

#include "adt/construct.hpp"

namespace adt {

namespace {

// Block-diagonal transfer from transmitter j to receiver rx over N uses.
Gf2Matrix use_transfer(const LinearCode& code, int tx, int rx) {
    int q = code.q();
    int s = link_strength(code.params, tx, rx);
    return kron(Gf2Matrix::identity(code.N), Gf2Matrix::shift_matrix(q, q - s));
}

}  // namespace

Gf2Matrix receive_matrix(const LinearCode& code, int rx) {
    std::vector<Gf2Matrix> parts;
    for (int tx = 0; tx < code.num_users(); ++tx) parts.push_back(use_transfer(code, tx, rx) * code.V[tx]);
    return hconcat(parts);
}

VerificationReport decoder_exists(const LinearCode& code) {
    int L = code.num_users();
    if (static_cast<int>(code.V.size()) != L) throw std::invalid_argument("decoder_exists: wrong V count");
    std::size_t nq = static_cast<std::size_t>(code.N) * code.q();
    for (const auto& v : code.V)
        if (v.rows() != nq || v.cols() != static_cast<std::size_t>(code.K))
            throw std::invalid_argument("decoder_exists: V dimension mismatch");

    Gf2Matrix target = hconcat(std::vector<Gf2Matrix>(L, Gf2Matrix::identity(code.K)));
    VerificationReport rep;
    rep.pass = true;
    for (int rx = 0; rx < L; ++rx) {
        Gf2Matrix a = receive_matrix(code, rx);
        ReceiverReport r;
        r.receive_rank = a.rank();
        r.decoder = Gf2Matrix::solve_left(a, target);
        if (!r.decoder) rep.pass = false;
        rep.receivers.push_back(std::move(r));
    }
    return rep;
}

bool simulate(const LinearCode& code, std::uint64_t seed, int trials) {
    VerificationReport rep = decoder_exists(code);
    if (!rep.pass) throw std::invalid_argument("simulate: code has no decoder");
    int L = code.num_users();
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution bit(0.5);
    ChannelMatrix ch = transfer_matrices(code.params);
    int q = code.q();
    for (int t = 0; t < trials; ++t) {
        std::vector<Gf2Matrix> sources;
        Gf2Matrix want(code.K, 1);
        for (int j = 0; j < L; ++j) {
            Gf2Matrix s(code.K, 1);
            for (int i = 0; i < code.K; ++i) s.set(i, 0, bit(rng) ? 1 : 0);
            want = want + s;
            sources.push_back(std::move(s));
        }
        // Route the N channel uses one slot at a time through receive().
        std::vector<Gf2Matrix> y(L, Gf2Matrix(static_cast<std::size_t>(code.N) * q, 1));
        for (int slot = 0; slot < code.N; ++slot) {
            std::vector<Gf2Matrix> x;
            for (int j = 0; j < L; ++j) {
                Gf2Matrix full = code.V[j] * sources[j];
                Gf2Matrix xs(q, 1);
                for (int p = 0; p < q; ++p) xs.set(p, 0, full.get(slot * q + p, 0));
                x.push_back(std::move(xs));
            }
            std::vector<Gf2Matrix> ys = receive(ch, x);
            for (int l = 0; l < L; ++l)
                for (int p = 0; p < q; ++p) y[l].set(slot * q + p, 0, ys[l].get(p, 0));
        }
        for (int l = 0; l < L; ++l)
            if (*rep.receivers[l].decoder * y[l] != want) return false;
    }
    return true;
}

std::pair<std::size_t, std::size_t> rank_condition(const LinearCode& code) {
    const auto* sp = std::get_if<ParamsSym>(&code.params);
    if (!sp || sp->L != 2 || code.N != 3) throw std::invalid_argument("rank_condition: not a Case II code");
    int mi = std::min(sp->m, sp->n), ma = std::max(sp->m, sp->n);
    if (mi >= ma || 3 * mi < 2 * ma || code.K != 2 * ma)
        throw std::invalid_argument("rank_condition: not a Case II code");
    Gf2Matrix t = kron(Gf2Matrix::identity(3), Gf2Matrix::shift_matrix(ma, ma - mi));
    // Deployed matrices are [V1 | T V2] and [T V1 | V2]; undo the mirroring
    // so the slices are the raw sub-blocks.
    const Gf2Matrix& x1 = sp->m < sp->n ? code.V[0] : code.V[1];
    const Gf2Matrix& x2 = sp->m < sp->n ? code.V[1] : code.V[0];
    Gf2Matrix v1 = x1.col_slice(0, ma);
    Gf2Matrix v2 = x2.col_slice(ma, 2 * static_cast<std::size_t>(ma));
    Gf2Matrix b1 = hconcat({v1, t * v2, t * (t * v1)});
    Gf2Matrix b2 = hconcat({v2, t * v1, t * (t * v2)});
    return {b1.rank(), b2.rank()};
}

SubspaceReport subspace_dims(const LinearCode& code) {
    int L = code.num_users();
    SubspaceReport rep;
    std::vector<Gf2Matrix> shifted;  // shifted[tx * L + rx] = T_{tx,rx} V_tx
    for (int tx = 0; tx < L; ++tx)
        for (int rx = 0; rx < L; ++rx) shifted.push_back(use_transfer(code, tx, rx) * code.V[tx]);

    rep.dims.assign(code.K, std::vector<std::size_t>(L, 0));
    for (int rx = 0; rx < L; ++rx) {
        std::vector<Gf2Matrix> all;
        std::size_t dim_sum = 0;
        for (int i = 0; i < code.K; ++i) {
            std::vector<Gf2Matrix> cols;
            for (int tx = 0; tx < L; ++tx) cols.push_back(shifted[tx * L + rx].col_slice(i, i + 1));
            Gf2Matrix w = hconcat(cols);
            rep.dims[i][rx] = w.rank();
            dim_sum += w.rank();
            all.push_back(std::move(w));
        }
        if (code.K > 0 && hconcat(all).rank() != dim_sum) rep.independent = false;
    }
    for (int i = 0; i < code.K; ++i)
        for (int rx = 0; rx < L; ++rx) {
            if (rep.dims[i][rx] != 1) continue;
            for (int r2 = 0; r2 < L; ++r2)
                if (r2 != rx && rep.dims[i][r2] <= 2) rep.feasible = false;
        }
    return rep;
}

}  // namespace adt
