#include "adt/oracle.hpp"

#include <atomic>
#include <random>
#include <thread>

namespace adt {

namespace {

struct SearchSpace {
    int L, q, N, K, R;  // R = N * q rows per matrix
    NetParams params;
    std::vector<Gf2Matrix> transfer;  // [tx * L + rx], block-diagonal over N uses
    Gf2Matrix target;
};

Gf2Matrix cols_to_matrix(int R, const std::vector<std::uint64_t>& cols) {
    Gf2Matrix v(R, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < R; ++i)
            if ((cols[j] >> i) & 1) v.set(i, j, 1);
    return v;
}

bool decodes(const SearchSpace& s, const std::vector<Gf2Matrix>& v) {
    for (int j = 0; j < s.L; ++j)
        if (v[j].rank() != static_cast<std::size_t>(s.K)) return false;
    for (int rx = 0; rx < s.L; ++rx) {
        std::vector<Gf2Matrix> parts;
        for (int tx = 0; tx < s.L; ++tx) parts.push_back(s.transfer[tx * s.L + rx] * v[tx]);
        if (!Gf2Matrix::solve_left(hconcat(parts), s.target)) return false;
    }
    return true;
}

LinearCode make_witness(const SearchSpace& s, const std::vector<Gf2Matrix>& v) {
    LinearCode c;
    c.params = s.params;
    c.N = s.N;
    c.K = s.K;
    c.V = v;
    c.label = "oracle";
    return c;
}

// Column-echelon representative of the GL(K) right-action orbit: full column
// rank and the transposed matrix already in reduced row-echelon form.
bool is_canonical(const Gf2Matrix& v, int K) {
    Gf2Matrix t = v.transpose();
    return t.rank() == static_cast<std::size_t>(K) && t.rref() == t;
}

}  // namespace

OracleResult oracle_search(const NetParams& params, int K, int N, const OracleOptions& opts) {
    if (K < 0 || N < 1) throw std::invalid_argument("oracle_search: invalid input");
    SearchSpace s;
    s.L = users(params);
    s.q = level_count(params);
    s.N = N;
    s.K = K;
    s.R = N * s.q;
    s.params = params;

    OracleResult res;
    if (K == 0) {
        res.status = OracleStatus::Achievable;
        res.witness = make_witness(s, std::vector<Gf2Matrix>(s.L, Gf2Matrix(s.R, 0)));
        return res;
    }
    if (s.R == 0) {
        res.status = OracleStatus::Impossible;
        res.note = "no channel levels";
        return res;
    }

    for (int tx = 0; tx < s.L; ++tx)
        for (int rx = 0; rx < s.L; ++rx)
            s.transfer.push_back(kron(Gf2Matrix::identity(N),
                                      Gf2Matrix::shift_matrix(s.q, s.q - link_strength(params, tx, rx))));
    s.target = hconcat(std::vector<Gf2Matrix>(s.L, Gf2Matrix::identity(K)));

    if (!opts.exhaustive) {
        std::mt19937_64 rng(opts.seed);
        std::uniform_int_distribution<std::uint64_t> col(1, (std::uint64_t{1} << s.R) - 1);
        for (int t = 0; t < opts.trials; ++t) {
            std::vector<Gf2Matrix> v;
            for (int j = 0; j < s.L; ++j) {
                std::vector<std::uint64_t> cols(K);
                for (auto& c : cols) c = col(rng);
                v.push_back(cols_to_matrix(s.R, cols));
            }
            ++res.examined;
            if (decodes(s, v)) {
                res.status = OracleStatus::Achievable;
                res.witness = make_witness(s, v);
                res.note = "randomized, seed " + std::to_string(opts.seed);
                return res;
            }
        }
        res.note = "randomized search exhausted trials";
        return res;
    }

    int bits = s.L * s.R * K;
    if (s.R > 20 || bits > 62 || (std::uint64_t{1} << bits) > opts.budget) {
        res.note = "budget exceeded: 2^" + std::to_string(bits) + " raw tuples";
        return res;
    }

    // Transmitter 1: canonical orbit representatives, in lexicographic order
    // of the concatenated column values.
    std::uint64_t ncols = (std::uint64_t{1} << s.R) - 1;  // nonzero columns only
    std::vector<std::vector<std::uint64_t>> v1list;
    {
        std::vector<std::uint64_t> cols(K, 1);
        while (true) {
            Gf2Matrix v1 = cols_to_matrix(s.R, cols);
            if (is_canonical(v1, K)) v1list.push_back(cols);
            int d = K - 1;
            while (d >= 0 && cols[d] == ncols) cols[d--] = 1;
            if (d < 0) break;
            ++cols[d];
        }
    }

    int jobs = std::max(1, opts.jobs);
    int rest = (s.L - 1) * K;  // odometer digits for transmitters 2..L
    struct Hit {
        std::size_t i1;
        std::vector<std::uint64_t> digits;
    };
    std::vector<std::optional<Hit>> hits(jobs);
    std::vector<std::uint64_t> counts(jobs, 0);

    auto worker = [&](int w) {
        for (std::size_t i1 = w; i1 < v1list.size(); i1 += jobs) {
            Gf2Matrix v1 = cols_to_matrix(s.R, v1list[i1]);
            std::vector<std::uint64_t> digits(rest, 1);
            while (true) {
                std::vector<Gf2Matrix> v{v1};
                for (int j = 0; j < s.L - 1; ++j)
                    v.push_back(cols_to_matrix(
                        s.R, std::vector<std::uint64_t>(digits.begin() + j * K, digits.begin() + (j + 1) * K)));
                ++counts[w];
                if (decodes(s, v)) {
                    hits[w] = Hit{i1, digits};
                    return;  // ascending scan: first hit is the shard minimum
                }
                int d = rest - 1;
                while (d >= 0 && digits[d] == ncols) digits[d--] = 1;
                if (d < 0) break;
                ++digits[d];
            }
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < jobs; ++w) pool.emplace_back(worker, w);
        for (auto& t : pool) t.join();
    }

    const Hit* best = nullptr;
    for (int w = 0; w < jobs; ++w) {
        res.examined += counts[w];
        if (hits[w] && (!best || hits[w]->i1 < best->i1 ||
                        (hits[w]->i1 == best->i1 && hits[w]->digits < best->digits)))
            best = &*hits[w];
    }
    if (!best) {
        res.status = OracleStatus::Impossible;
        return res;
    }
    std::vector<Gf2Matrix> v{cols_to_matrix(s.R, v1list[best->i1])};
    for (int j = 0; j < s.L - 1; ++j)
        v.push_back(cols_to_matrix(s.R, std::vector<std::uint64_t>(best->digits.begin() + j * K,
                                                                   best->digits.begin() + (j + 1) * K)));
    res.status = OracleStatus::Achievable;
    res.witness = make_witness(s, v);
    return res;
}

}  // namespace adt
