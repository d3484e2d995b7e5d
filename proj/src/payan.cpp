#include "cubelike/payan.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdlib>
#include <iomanip>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "cubelike/coloring.hpp"
#include "cubelike/json.hpp"

namespace cubelike {

std::string to_string(Classification c) {
    switch (c) {
        case Classification::Bipartite: return "Bipartite";
        case Classification::HasLoop: return "HasLoop";
        case Classification::NonBipartite: return "NonBipartite";
    }
    return "Unknown";
}

Classification classification_from_string(const std::string& s) {
    if (s == "Bipartite") return Classification::Bipartite;
    if (s == "HasLoop") return Classification::HasLoop;
    if (s == "NonBipartite") return Classification::NonBipartite;
    throw std::invalid_argument("unknown classification '" + s + "'");
}

PayanCertificate classify(const ConnectionSet& s, bool exact_chi, std::uint64_t chi_node_limit) {
    PayanCertificate cert;
    cert.set = s;
    if (s.empty()) {
        cert.classification = Classification::Bipartite;
        cert.functional = 0;
        if (exact_chi) cert.chi = 1;
        return cert;
    }
    cert.matrix = reduce_columns_mod2(heuberger_matrix(s));

    if (s.has_loop()) {
        cert.classification = Classification::HasLoop;
        cert.odd_column = find_smallest_odd_column(*cert.matrix);
        return cert;
    }
    if (auto f = solve_all_ones(connection_matrix(s))) {
        cert.classification = Classification::Bipartite;
        cert.functional = f->bits();
        if (exact_chi) cert.chi = 2;
        return cert;
    }

    cert.classification = Classification::NonBipartite;
    cert.odd_column = find_smallest_odd_column(*cert.matrix);
    if (!cert.odd_column) throw std::logic_error("nonbipartite set without an odd relation column");
    cert.witness = build_witness(s, cert.odd_column->support);
    cert.witness_verified = verify_witness(*cert.witness);
    cert.chi_lower_bound = kNonBipartiteLowerBound;
    if (exact_chi) cert.chi = chromatic_number(build_graph(s.dimension(), s), chi_node_limit).chi;
    return cert;
}

bool verify_certificate(const PayanCertificate& cert) {
    const ConnectionSet& s = cert.set;
    const auto& elems = s.elements();
    const bool loop = s.contains(0);

    switch (cert.classification) {
        case Classification::HasLoop:
            return loop;

        case Classification::Bipartite: {
            if (loop || !cert.functional) return false;
            if ((*cert.functional & ~low_mask(s.dimension())) != 0) return false;
            for (const auto& e : elems)
                if ((std::popcount(*cert.functional & e.bits()) & 1) == 0) return false;
            if (cert.chi && *cert.chi > (elems.empty() ? 1 : 2)) return false;
            return true;
        }

        case Classification::NonBipartite: {
            if (loop || !cert.matrix || !cert.odd_column || !cert.witness) return false;
            const auto& m = *cert.matrix;
            if (m.m != elems.size() || !m.two_identity) return false;
            for (const auto& col : m.a_columns) {
                if (col.size() != m.m) return false;
                Word sum = 0;
                for (std::size_t i = 0; i < col.size(); ++i) {
                    if (col[i] != 0 && col[i] != 1) return false;
                    if (col[i] == 1) sum ^= elems[i].bits();
                }
                if (sum != 0) return false;
            }
            const auto& oc = *cert.odd_column;
            if (oc.column >= m.a_columns.size()) return false;
            std::vector<std::size_t> support;
            for (std::size_t i = 0; i < m.m; ++i)
                if (m.a_columns[oc.column][i] == 1) support.push_back(i);
            if (support != oc.support || support.size() != oc.z) return false;
            if (oc.z < 3 || oc.z % 2 == 0 || oc.z - 1 > kMaxDimension) return false;

            const auto& w = *cert.witness;
            if (w.z != oc.z || w.support != oc.support || w.images.size() != oc.z) return false;
            if (!(w.target == s)) return false;
            Word sum = 0;
            for (std::size_t j = 0; j < oc.z; ++j) {
                if (w.images[j] != elems[oc.support[j]].bits()) return false;
                sum ^= w.images[j];
            }
            if (sum != 0) return false;

            // Edges of Q^d_{z-1}: x ~ x ^ e_j and x ~ x ^ w. psi is linear, so an
            // edge maps to psi(x) ^ psi(y); check every one against S directly.
            const unsigned d = static_cast<unsigned>(oc.z - 1);
            auto psi = [&](Word x) {
                Word acc = 0;
                for (unsigned j = 0; j < d; ++j)
                    if ((x >> j) & 1) acc ^= w.images[j];
                return acc;
            };
            std::vector<Word> source_gens;
            for (unsigned j = 0; j < d; ++j) source_gens.push_back(Word{1} << j);
            source_gens.push_back(low_mask(d));
            for (Word x = 0; x < (Word{1} << d); ++x)
                for (Word g : source_gens)
                    if (!s.contains(psi(x) ^ psi(x ^ g))) return false;

            if (cert.chi_lower_bound != kNonBipartiteLowerBound) return false;
            if (cert.chi && *cert.chi < kNonBipartiteLowerBound) return false;
            return true;
        }
    }
    return false;
}

ConnectionSet decode_subset(unsigned n, std::uint64_t code) {
    std::vector<Word> masks;
    for (unsigned i = 0; i < 64; ++i)
        if ((code >> i) & 1) masks.push_back(Word{i} + 1);
    return ConnectionSet(n, masks);
}

std::uint64_t encode_subset(const ConnectionSet& s) {
    std::uint64_t code = 0;
    for (const auto& e : s.elements()) {
        if (e.is_zero() || e.bits() > 64) throw std::invalid_argument("set is not encodable as a subset code");
        code |= std::uint64_t{1} << (e.bits() - 1);
    }
    return code;
}

unsigned default_thread_count() {
    if (const char* env = std::getenv("CUBELIKE_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return static_cast<unsigned>(v);
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

struct InstanceResult {
    std::uint64_t code = 0;
    Classification classification = Classification::Bipartite;
    std::optional<int> chi;
    bool solver_checked = false;
    bool rechecked = false;
    std::vector<std::string> problems;
};

InstanceResult process(unsigned n, std::uint64_t code, const SweepOptions& opt, std::uint64_t index) {
    InstanceResult r;
    r.code = code;
    const ConnectionSet s = decode_subset(n, code);
    const PayanCertificate cert = classify(s, opt.exact_chi, opt.chi_node_limit);
    r.classification = cert.classification;
    r.chi = cert.chi;

    if (cert.classification == Classification::HasLoop) r.problems.push_back("loop in a loop-free sweep");
    if (cert.classification == Classification::NonBipartite) {
        if (!cert.witness_verified) r.problems.push_back("witness failed verification");
        if (!cert.odd_column || cert.odd_column->z < 3 || cert.odd_column->z % 2 == 0)
            r.problems.push_back("odd column has invalid size");
        // Independent route: the exact solver must fail to 3-color.
        r.solver_checked = true;
        if (k_colorable(build_graph(n, s), 3)) r.problems.push_back("solver found a 3-coloring");
    }
    if (cert.chi && *cert.chi == 3) r.problems.push_back("chromatic number 3");

    if (opt.recheck_every != 0 && index % opt.recheck_every == 0) {
        r.rechecked = true;
        const auto reparsed = certificate_from_json(to_json(cert), true);
        if (!verify_certificate(reparsed)) r.problems.push_back("certificate re-verification failed");
    }
    return r;
}

}  // namespace

SweepSummary sweep(const SweepOptions& opt) {
    std::vector<std::uint64_t> codes;
    if (opt.mode == SweepMode::Exhaustive) {
        if (opt.n < 1 || opt.n > 4)
            throw std::invalid_argument("exhaustive sweep supports n <= 4; n = " + std::to_string(opt.n) +
                                        " would enumerate 2^(2^n - 1) = 2^" +
                                        std::to_string((1u << std::min(opt.n, 31u)) - 1) +
                                        " connection sets (use random mode)");
        const std::uint64_t total = (std::uint64_t{1} << ((1u << opt.n) - 1)) - 1;
        codes.reserve(total);
        for (std::uint64_t c = 1; c <= total; ++c) codes.push_back(c);
    } else {
        if (opt.n < 1 || opt.n > 6) throw std::invalid_argument("random sweep supports 1 <= n <= 6");
        const unsigned universe = (1u << opt.n) - 1;
        const std::uint64_t mask = universe >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;
        std::mt19937_64 rng(opt.seed);
        codes.reserve(opt.count);
        while (codes.size() < opt.count) {
            const std::uint64_t c = rng() & mask;
            if (c != 0) codes.push_back(c);
        }
    }

    std::vector<InstanceResult> results(codes.size());
    const unsigned threads = std::max<unsigned>(
        1, std::min<std::size_t>(opt.threads ? opt.threads : default_thread_count(), codes.size()));
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < codes.size();) results[i] = process(opt.n, codes[i], opt, i);
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    SweepSummary sum;
    sum.n = opt.n;
    sum.mode = opt.mode;
    sum.count = opt.mode == SweepMode::Random ? opt.count : codes.size();
    sum.seed = opt.seed;
    sum.exact_chi = opt.exact_chi;
    for (const auto& r : results) {
        ++sum.sets_examined;
        switch (r.classification) {
            case Classification::Bipartite: ++sum.bipartite; break;
            case Classification::HasLoop: ++sum.has_loop; break;
            case Classification::NonBipartite: ++sum.nonbipartite; break;
        }
        if (r.chi) ++sum.chi_histogram[*r.chi];
        else if (opt.exact_chi) ++sum.chi_unresolved;
        sum.solver_checks += r.solver_checked;
        sum.certificates_rechecked += r.rechecked;
        for (const auto& p : r.problems)
            sum.violations.push_back({r.code, decode_subset(opt.n, r.code).to_string(), p});
    }
    std::stable_sort(sum.violations.begin(), sum.violations.end(),
                     [](const Violation& a, const Violation& b) { return a.code < b.code; });
    return sum;
}

std::string render_table(const SweepSummary& s) {
    std::ostringstream os;
    auto row = [&](const std::string& k, const std::string& v) {
        os << std::left << std::setw(24) << k << std::right << std::setw(12) << v << '\n';
    };
    row("n", std::to_string(s.n));
    row("mode", s.mode == SweepMode::Exhaustive ? "exhaustive" : "random");
    if (s.mode == SweepMode::Random) row("seed", std::to_string(s.seed));
    row("sets examined", std::to_string(s.sets_examined));
    row("bipartite", std::to_string(s.bipartite));
    row("nonbipartite", std::to_string(s.nonbipartite));
    row("has loop", std::to_string(s.has_loop));
    row("solver 3-col checks", std::to_string(s.solver_checks));
    row("certificates rechecked", std::to_string(s.certificates_rechecked));
    for (const auto& [chi, count] : s.chi_histogram) row("chi = " + std::to_string(chi), std::to_string(count));
    if (s.exact_chi) row("chi unresolved", std::to_string(s.chi_unresolved));
    row("violations", std::to_string(s.violations.size()));
    for (const auto& v : s.violations) os << "  {" << v.set << "}: " << v.reason << '\n';
    return os.str();
}

}  // namespace cubelike
