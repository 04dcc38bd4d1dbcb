#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "adt/capacity.hpp"
#include "adt/construct.hpp"
#include "adt/decomposition.hpp"
#include "adt/oracle.hpp"
#include "adt/serialize.hpp"
#include "adt/verify.hpp"

namespace {

using adt::Rational;
using nlohmann::json;

// "a..b" or a single integer.
std::pair<int, int> parse_range(const std::string& s) {
    auto pos = s.find("..");
    if (pos == std::string::npos) {
        int v = std::stoi(s);
        return {v, v};
    }
    return {std::stoi(s.substr(0, pos)), std::stoi(s.substr(pos + 2))};
}

// Upper-bound column: the non-degenerate bound for m != n
// (2*max/3 on symmetric networks), the exact degenerate capacity for m == n.
Rational two_user_bound(int m, int n) {
    if (m == n) return Rational{n};
    return *adt::upper_nondegenerate(adt::Params2x2{n, m, m, n});
}

int cmd_capacity(int m, int n, int L, bool as_json, std::optional<int> plot_q) {
    if (plot_q) {
        int q = *plot_q;
        std::cout << "alpha_num,alpha_den,normcap_num,normcap_den\n";
        for (int mm = 0; mm <= q; ++mm) {
            Rational a{mm, q};
            Rational c = adt::normalized_capacity(mm, q);
            std::cout << a.num << "," << a.den << "," << c.num << "," << c.den << "\n";
        }
        return 0;
    }
    Rational cap = L == 2 ? adt::capacity_symmetric(m, n) : adt::luser_linear_capacity(m, n, L);
    Rational cut{std::min(m, n)};
    Rational ub = L == 2 ? two_user_bound(m, n) : adt::luser_upper_bound(m, n, L);
    if (as_json) {
        json j{{"m", m},
               {"n", n},
               {"L", L},
               {"capacity", cap.str()},
               {"cutset", cut.str()},
               {"upper_bound", ub.str()},
               {"separation", adt::separation_rate(m, n).str()}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "capacity " << cap.str() << "\n"
                  << "cutset bound " << cut.str() << "\n"
                  << "upper bound " << ub.str() << "\n"
                  << "separation rate " << adt::separation_rate(m, n).str() << "\n";
    }
    return 0;
}

int cmd_classify(const adt::Params2x2& p, bool as_json) {
    adt::ClassifyResult r = adt::classify_constructive(p);
    bool deg = r.cls == adt::NetworkClass::Degenerate;
    if (adt::classify_closed_form(p) != r.cls) {
        std::cerr << "internal disagreement between classifiers\n";
        return 1;
    }
    if (as_json) {
        json j{{"degenerate", deg}};
        if (r.witness) j["witness"] = {{"tx", r.witness->first + 1}, {"rx", r.witness->second + 1}};
        if (deg)
            j["capacity"] = adt::capacity_degenerate(p).str();
        else
            j["upper_bound"] = adt::upper_nondegenerate(p)->str();
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << (deg ? "degenerate" : "non-degenerate") << "\n";
    if (r.witness)
        std::cout << "witness: X" << r.witness->first + 1 << " recoverable at receiver "
                  << r.witness->second + 1 << "\n";
    if (deg)
        std::cout << "capacity " << adt::capacity_degenerate(p).str() << "\n";
    else
        std::cout << "upper bound " << adt::upper_nondegenerate(p)->str() << "\n";
    return 0;
}

int cmd_decompose(int m, int n, int L, bool coloring) {
    adt::Decomposition d = adt::full_decompose(m, n, L);
    if (!adt::validate_coloring(d)) {
        std::cerr << "decomposition failed validation\n";
        return 1;
    }
    std::cout << d.format() << "\n";
    if (coloring) {
        std::cout << "node,level,color,sublevel\n";
        int q = std::max(m, n);
        for (int node = 0; node < 2 * L; ++node) {
            std::string name = node < L ? "tx" + std::to_string(node + 1) : "rx" + std::to_string(node - L + 1);
            for (int p = 0; p < q; ++p)
                std::cout << name << "," << p + 1 << "," << d.coloring.color[node][p] << ","
                          << d.coloring.sublevel[node][p] << "\n";
        }
    }
    return 0;
}

adt::LinearCode build_scheme(const std::string& scheme, int m, int n, int L) {
    if (scheme == "auto") return adt::construct_auto(m, n, L);
    if (scheme == "case1") return adt::construct_case1(m, n);
    if (scheme == "case2") return adt::construct_case2(m, n);
    if (scheme == "gap1") {
        if (std::abs(m - n) != 1) throw std::invalid_argument("gap1 needs |n - m| = 1");
        return adt::construct_gap1_L2(std::min(m, n), m > n);
    }
    if (scheme == "luser") {
        if (std::abs(m - n) != 1) throw std::invalid_argument("luser needs |n - m| = 1");
        return adt::construct_luser_gap1(std::max(m, n), m > n, L);
    }
    if (scheme == "compose") {
        adt::Decomposition dec = adt::full_decompose(m, n, L);
        std::vector<adt::LinearCode> subs;
        for (auto [mc, nc] : dec.color_shape)
            subs.push_back(L == 2 ? adt::construct_gap1_L2(std::min(mc, nc), mc > nc)
                                  : adt::construct_luser_gap1(std::max(mc, nc), mc > nc, L));
        return adt::compose_from_decomposition(adt::ParamsSym{m, n, L}, dec, subs);
    }
    throw std::invalid_argument("unknown scheme: " + scheme);
}

int cmd_construct(const std::string& scheme, int m, int n, int L, const std::string& out) {
    adt::LinearCode c = build_scheme(scheme, m, n, L);
    json j = c;
    if (out.empty()) {
        std::cout << j.dump(2) << "\n";
        std::cerr << "rate " << c.rate().str() << "\n";
    } else {
        std::ofstream f(out);
        f << j.dump(2) << "\n";
        std::cout << "rate " << c.rate().str() << "\n";
    }
    return 0;
}

int cmd_verify(const std::string& path, bool dims, std::uint64_t seed, int trials) {
    std::ifstream f(path);
    if (!f) {
        std::cerr << "cannot open " << path << "\n";
        return 2;
    }
    json j = json::parse(f);
    adt::LinearCode c = j.get<adt::LinearCode>();
    adt::VerificationReport rep = adt::decoder_exists(c);
    std::cout << (rep.pass ? "pass" : "fail") << "\n";
    for (std::size_t rx = 0; rx < rep.receivers.size(); ++rx)
        std::cout << "receiver " << rx + 1 << ": rank " << rep.receivers[rx].receive_rank
                  << (rep.receivers[rx].decoder ? ", decoder found" : ", no decoder") << "\n";
    if (rep.pass && trials > 0)
        std::cout << "simulate(" << trials << " trials): " << (adt::simulate(c, seed, trials) ? "ok" : "MISMATCH")
                  << "\n";
    if (dims) {
        adt::SubspaceReport sr = adt::subspace_dims(c);
        for (int i = 0; i < c.K; ++i) {
            std::cout << "bit " << i + 1 << ": dims";
            for (auto d : sr.dims[i]) std::cout << " " << d;
            std::cout << "\n";
        }
        std::cout << "independent " << (sr.independent ? "yes" : "no") << ", feasible "
                  << (sr.feasible ? "yes" : "no") << "\n";
    }
    return rep.pass ? 0 : 1;
}

int cmd_search(int m, int n, int L, int K, int N, const adt::OracleOptions& opts, bool as_json) {
    adt::OracleResult r = adt::oracle_search(adt::ParamsSym{m, n, L}, K, N, opts);
    std::string status = r.status == adt::OracleStatus::Achievable    ? "Achievable"
                         : r.status == adt::OracleStatus::Impossible ? "Impossible"
                                                                     : "Unknown";
    if (as_json) {
        json j{{"status", status}};
        if (!r.note.empty()) j["note"] = r.note;
        if (r.witness) j["witness"] = *r.witness;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << status << "\n";
        if (!r.note.empty()) std::cout << r.note << "\n";
        if (r.witness && r.witness->K > 0) {
            json j = *r.witness;
            std::cout << j.dump(2) << "\n";
        }
    }
    return 0;
}

int cmd_sweep(const std::string& mr, const std::string& nr, int L, bool formulas_only,
              const std::string& out) {
    auto [m0, m1] = parse_range(mr);
    auto [n0, n1] = parse_range(nr);
    std::ostringstream csv;
    csv << "m,n,L,alpha_num,alpha_den,capacity_num,capacity_den,sep_num,sep_den,cutset,"
           "upper3_num,upper3_den,achieved_num,achieved_den\n";
    for (int n = n0; n <= n1; ++n)
        for (int m = m0; m <= m1; ++m) {
            Rational alpha = std::max(m, n) == 0 ? Rational{0} : Rational{std::min(m, n), std::max(m, n)};
            Rational cap = L == 2 ? adt::capacity_symmetric(m, n) : adt::luser_linear_capacity(m, n, L);
            Rational sep = adt::separation_rate(m, n);
            Rational ub = L == 2 ? two_user_bound(m, n) : adt::luser_upper_bound(m, n, L);
            Rational achieved = cap;
            if (!formulas_only) {
                adt::LinearCode c = adt::construct_auto(m, n, L);
                if (!adt::decoder_exists(c).pass) {
                    std::cerr << "verification failed at m=" << m << " n=" << n << "\n";
                    return 1;
                }
                achieved = c.rate();
            }
            csv << m << "," << n << "," << L << "," << alpha.num << "," << alpha.den << "," << cap.num
                << "," << cap.den << "," << sep.num << "," << sep.den << "," << std::min(m, n) << ","
                << ub.num << "," << ub.den << "," << achieved.num << "," << achieved.den << "\n";
        }
    if (out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream f(out);
        f << csv.str();
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"ADT multicast-computation networks: capacities, codes, verification"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "JSON output where supported");

    int m = 0, n = 0, L = 2, K = 0, N = 1;
    adt::Params2x2 g;
    std::string scheme = "auto", out, code_path, mr, nr;
    bool dims = false, formulas_only = false, exhaustive = false, coloring = false;
    int random_trials = -1;
    std::optional<int> plot_q;
    adt::OracleOptions opts;

    auto* cap = app.add_subcommand("capacity", "Capacity and bounds for a symmetric model");
    cap->add_option("--m", m);
    cap->add_option("--n", n);
    cap->add_option("--L", L);
    cap->add_option("--plot-q", plot_q, "emit normalized-capacity samples for alpha = 0/q .. q/q");

    auto* cls = app.add_subcommand("classify", "Degeneracy of a general 2x2 model");
    cls->add_option("--n11", g.n11)->required();
    cls->add_option("--n12", g.n12)->required();
    cls->add_option("--n21", g.n21)->required();
    cls->add_option("--n22", g.n22)->required();

    auto* dec = app.add_subcommand("decompose", "Gap-1 decomposition of (m, n)");
    dec->add_option("--m", m)->required();
    dec->add_option("--n", n)->required();
    dec->add_option("--L", L);
    dec->add_flag("--coloring", coloring, "emit the coloring table as CSV");

    auto* con = app.add_subcommand("construct", "Build a code and emit it as JSON");
    con->add_option("--scheme", scheme)->check(CLI::IsMember({"auto", "case1", "case2", "gap1", "luser", "compose"}));
    con->add_option("--m", m)->required();
    con->add_option("--n", n)->required();
    con->add_option("--L", L);
    con->add_option("--out", out);

    auto* ver = app.add_subcommand("verify", "Verify a code from JSON");
    ver->add_option("--code", code_path)->required();
    ver->add_flag("--dims", dims, "print the W-subspace dimension table");
    ver->add_option("--seed", opts.seed);
    ver->add_option("--trials", opts.trials);

    auto* sea = app.add_subcommand("search", "Brute-force oracle for a (K, N) code");
    sea->add_option("--m", m)->required();
    sea->add_option("--n", n)->required();
    sea->add_option("--L", L);
    sea->add_option("--K", K)->required();
    sea->add_option("--N", N);
    sea->add_flag("--exhaustive", exhaustive);
    sea->add_option("--random", random_trials, "randomized mode with this many trials");
    sea->add_option("--seed", opts.seed);
    sea->add_option("--jobs", opts.jobs);
    sea->add_option("--budget", opts.budget);

    auto* swp = app.add_subcommand("sweep", "CSV sweep over a parameter grid");
    swp->add_option("--m", mr)->required();
    swp->add_option("--n", nr)->required();
    swp->add_option("--L", L);
    swp->add_flag("--formulas-only", formulas_only);
    swp->add_option("--out", out);

    try {
        app.parse(argc, argv);
        if (cap->parsed()) return cmd_capacity(m, n, L, as_json, plot_q);
        if (cls->parsed()) return cmd_classify(g, as_json);
        if (dec->parsed()) return cmd_decompose(m, n, L, coloring);
        if (con->parsed()) return cmd_construct(scheme, m, n, L, out);
        if (ver->parsed()) return cmd_verify(code_path, dims, opts.seed, opts.trials);
        if (sea->parsed()) {
            opts.exhaustive = random_trials < 0;
            if (random_trials >= 0) opts.trials = random_trials;
            (void)exhaustive;
            return cmd_search(m, n, L, K, N, opts, as_json);
        }
        if (swp->parsed()) return cmd_sweep(mr, nr, L, formulas_only, out);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n" << app.help() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
