// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "cubelike/cayley.hpp"
#include "cubelike/coloring.hpp"
#include "cubelike/heuberger.hpp"
#include "cubelike/homomorphism.hpp"
#include "cubelike/json.hpp"
#include "cubelike/payan.hpp"
#include "oracles.hpp"

using namespace cubelike;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
    bool pass = true;
    std::ostringstream detail;

    void require(bool cond, const std::string& what) {
        if (!cond) {
            if (pass) detail << "first failure: " << what << "; ";
            pass = false;
        }
    }
};

// 1. chi(Q^d_n) = 4 for n in {2,4,6}, each solve under 30 s; chi = 2 for n in {3,5}.
Outcome sokolova_reproduction() {
    constexpr double kSolveLimitSeconds = 30.0;
    Outcome o;
    for (unsigned n : {2u, 4u, 6u}) {
        const auto t0 = Clock::now();
        const auto r = chromatic_number(cube_with_diagonals(n));
        const double dt = seconds_since(t0);
        o.require(r.chi == 4, "chi(Q^d_" + std::to_string(n) + ") != 4");
        o.require(dt < kSolveLimitSeconds, "solve time over limit at n=" + std::to_string(n));
        o.detail << "chi(Q^d_" << n << ")=" << (r.chi ? *r.chi : -1) << " in " << dt << "s; ";
    }
    for (unsigned n : {3u, 5u}) {
        const auto g = cube_with_diagonals(n);
        const auto r = chromatic_number(g);
        o.require(r.chi == 2, "chi(Q^d_" + std::to_string(n) + ") != 2");
        o.require(is_bipartite_bfs(g), "BFS disagrees at n=" + std::to_string(n));
        o.detail << "chi(Q^d_" << n << ")=" << (r.chi ? *r.chi : -1) << "; ";
    }
    return o;
}

// 2. Exhaustive sweeps n = 2,3,4 with exact chi: no chi = 3, total < 5 min;
//    brute-force oracle agrees instance by instance at n <= 3.
Outcome payan_reproduction() {
    constexpr double kTotalLimitSeconds = 300.0;
    constexpr std::uint64_t kExpectedSets[] = {0, 1, 7, 127, 32767};
    Outcome o;
    const auto t0 = Clock::now();
    for (unsigned n : {2u, 3u, 4u}) {
        SweepOptions opt;
        opt.n = n;
        opt.exact_chi = true;
        const auto s = sweep(opt);
        o.require(s.sets_examined == kExpectedSets[n], "wrong set count at n=" + std::to_string(n));
        o.require(s.violations.empty(), "violations at n=" + std::to_string(n));
        o.require(s.chi_histogram.count(3) == 0, "chi = 3 at n=" + std::to_string(n));
        o.detail << "n=" << n << ": " << s.sets_examined << " sets, " << s.violations.size() << " violations; ";
    }
    const double dt = seconds_since(t0);
    o.require(dt < kTotalLimitSeconds, "sweeps exceeded 5 minutes");
    o.detail << "sweep time " << dt << "s; ";

    std::uint64_t compared = 0;
    for (unsigned n = 1; n <= 3; ++n)
        for (const auto& masks : oracle::all_sets(n)) {
            const auto cert = classify(ConnectionSet(n, masks), true);
            const bool three = oracle::k_colorable(n, masks, 3);
            const int chi = oracle::chromatic_number(n, masks);
            o.require(chi != 3, "oracle found chi = 3");
            o.require(three == (cert.classification == Classification::Bipartite), "oracle disagrees on 3-colorability");
            o.require(cert.chi == chi, "exact chi differs from oracle");
            ++compared;
        }
    o.detail << "oracle compared " << compared << " instances";
    return o;
}

// 3. Every nonbipartite instance at n <= 4 has a verifying witness with odd z >= 3,
//    and pulling back a solver coloring gives a proper coloring of Q^d_{z-1}.
Outcome certificate_soundness() {
    Outcome o;
    std::uint64_t checked = 0;
    for (unsigned n = 1; n <= 4; ++n)
        for (const auto& masks : oracle::all_sets(n)) {
            const ConnectionSet s(n, masks);
            const auto cert = classify(s);
            if (cert.classification != Classification::NonBipartite) continue;
            ++checked;
            o.require(cert.odd_column && cert.odd_column->z >= 3 && cert.odd_column->z % 2 == 1, "bad z");
            o.require(cert.witness && verify_witness(*cert.witness), "witness fails");
            o.require(verify_certificate(cert), "certificate fails");
            if (!cert.witness) continue;
            const auto r = chromatic_number(build_graph(n, s));
            const auto pulled = pull_back_coloring(*cert.witness, *r.witness);
            o.require(verify_coloring(cube_with_diagonals(cert.witness->source_dimension()), pulled),
                      "pullback not proper for set " + s.to_string());
        }
    o.detail << checked << " nonbipartite instances";
    return o;
}

// 4. Parity criterion <=> BFS: exhaustive at n <= 4, 1000 seeded random sets at n = 5, 6.
Outcome bipartite_equivalence() {
    constexpr int kRandomPerDimension = 1000;
    Outcome o;
    std::uint64_t disagreements = 0, total = 0;
    auto check = [&](unsigned n, const std::vector<Word>& masks) {
        const ConnectionSet s(n, masks);
        if (is_bipartite_parity(s) != is_bipartite_bfs(build_graph(n, s))) ++disagreements;
        ++total;
    };
    for (unsigned n = 1; n <= 4; ++n)
        for (const auto& masks : oracle::all_sets(n)) check(n, masks);
    std::mt19937_64 rng(20240601);
    for (unsigned n : {5u, 6u})
        for (int t = 0; t < kRandomPerDimension; ++t) {
            std::vector<Word> masks;
            while (masks.empty())
                for (Word x = 1; x < (Word{1} << n); ++x)
                    if (rng() & 1) masks.push_back(x);
            check(n, masks);
        }
    o.require(disagreements == 0, "parity and BFS disagree");
    o.detail << total << " sets, " << disagreements << " disagreements";
    return o;
}

// 5. verify_canonical_iso for all S at n <= 3; verify_qd_iso for z in {3,5,7}.
Outcome structure_checks() {
    Outcome o;
    std::uint64_t count = 0;
    for (unsigned n = 1; n <= 3; ++n) {
        const Word universe = Word{1} << n;
        for (Word code = 1; code < (Word{1} << universe); ++code) {
            std::vector<Word> masks;
            for (Word x = 0; x < universe; ++x)
                if ((code >> x) & 1) masks.push_back(x);
            const ConnectionSet s(n, masks);
            o.require(verify_canonical_iso(heuberger_matrix(s), s), "canonical iso fails for " + s.to_string());
            ++count;
        }
    }
    for (unsigned z : {3u, 5u, 7u}) o.require(verify_qd_iso(z), "qd iso fails at z=" + std::to_string(z));
    o.detail << count << " sets (including loops), z in {3,5,7}";
    return o;
}

// 6. Reduction operator: totality, contrapositive on 1e5 random colorings of Q^d_4
//    and Q^d_6, and the local lift check for n = 2, 4.
Outcome reduction_operator() {
    constexpr int kRandomColorings = 100000;
    constexpr unsigned kMaxRadius = 3;
    Outcome o;
    int pairs = 0;
    for (Color a = 0; a < 3; ++a)
        for (Color b = 0; b < 3; ++b) {
            const Color k = pair_representative(a, b);
            const bool ok = (a == b && k == a) || (a != b && ((a == k && b == (k + 1) % 3) || (b == k && a == (k + 1) % 3)));
            o.require(ok, "pair rule fails");
            pairs += ok;
        }
    o.detail << pairs << "/9 pairs; ";

    std::mt19937_64 rng(314159);
    for (unsigned n : {2u, 4u}) {
        const auto small = cube_with_diagonals(n);
        const auto big = cube_with_diagonals(n + 2);
        std::uint64_t reduced_proper = 0, counterexamples = 0;
        Coloring c{3, std::vector<Color>(big.vertex_count())};
        for (int t = 0; t < kRandomColorings; ++t) {
            for (auto& x : c.colors) x = static_cast<Color>(rng() % 3);
            const auto r = reduce_coloring(c);
            o.require(r.total(), "reduction not total");
            if (verify_coloring(small, r)) {
                ++reduced_proper;
                if (verify_coloring(big, c)) ++counterexamples;
            }
        }
        o.require(counterexamples == 0, "contrapositive counterexample");
        o.detail << "Q^d_" << n + 2 << ": " << reduced_proper << " reduced-proper, " << counterexamples
                 << " counterexamples; ";
    }

    for (unsigned n : {2u, 4u}) {
        const auto rep = find_sufficient_radius(n, kMaxRadius);
        o.require(rep.has_value(), "no lift radius passes for n=" + std::to_string(n));
        if (!rep) continue;
        bool vacuous = false;
        for (const auto& c : rep->classes) vacuous = vacuous || c.vacuous;
        o.detail << "n=" << n << " passes at radius " << rep->radius << (vacuous ? " (vacuous)" : "") << "; ";
    }
    return o;
}

// 7. k_colorable vs k^|V| enumeration on every graph with <= 8 vertices, k in {2,3,4}.
Outcome solver_oracle_equivalence() {
    Outcome o;
    std::uint64_t queries = 0;
    for (unsigned n = 1; n <= 3; ++n)
        for (const auto& masks : oracle::all_sets(n)) {
            const auto g = build_graph(n, ConnectionSet(n, masks));
            for (int k : {2, 3, 4}) {
                const auto c = k_colorable(g, k);
                o.require(c.has_value() == oracle::k_colorable_enumerate(n, masks, k), "solver disagrees");
                if (c) o.require(verify_coloring(g, *c), "solver coloring improper");
                ++queries;
            }
        }
    o.detail << queries << " queries";
    return o;
}

// 8. Identical sweep invocations give byte-identical JSON.
Outcome determinism() {
    Outcome o;
    SweepOptions ex;
    ex.n = 4;
    ex.exact_chi = true;
    ex.recheck_every = 100;
    const auto a = to_json(sweep(ex)).dump();
    const auto b = to_json(sweep(ex)).dump();
    ex.threads = 1;
    const auto c = to_json(sweep(ex)).dump();
    o.require(a == b && b == c, "exhaustive sweep output differs");

    SweepOptions rnd;
    rnd.n = 6;
    rnd.mode = SweepMode::Random;
    rnd.count = 2000;
    rnd.seed = 7;
    rnd.exact_chi = true;
    const auto d = to_json(sweep(rnd)).dump();
    rnd.threads = 3;
    const auto e = to_json(sweep(rnd)).dump();
    o.require(d == e, "random sweep output differs");
    o.detail << "exhaustive n=4 x3, random n=6 x2 identical";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> run;
    };
    const Criterion criteria[] = {
        {"1 cube-with-diagonals chromatic numbers", sokolova_reproduction},
        {"2 no chromatic number 3 (exhaustive n<=4)", payan_reproduction},
        {"3 certificate soundness", certificate_soundness},
        {"4 bipartiteness equivalence", bipartite_equivalence},
        {"5 structure checks", structure_checks},
        {"6 reduction operator", reduction_operator},
        {"7 solver oracle equivalence", solver_oracle_equivalence},
        {"8 determinism", determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail << "exception: " << e.what();
        }
        failures += !o.pass;
        std::printf("[%s] %-44s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", c.name, seconds_since(t0),
                    o.detail.str().c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(std::size(criteria)) - failures, std::size(criteria));
    return failures == 0 ? 0 : 1;
}
