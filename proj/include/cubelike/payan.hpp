#pragma once

// Certified classification of cubelike graphs and desk-scale sweeps showing
// that chromatic number 3 never occurs.
//
// A loop-free graph is either bipartite (a functional f with f(s) = 1 on S
// certifies chi <= 2) or has an odd relation among elements of S. The odd
// relation of size z gives a homomorphism Q^d_{z-1} -> X with z - 1 even,
// hence chi(X) >= chi(Q^d_{z-1}) = 4.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cubelike/cayley.hpp"
#include "cubelike/heuberger.hpp"
#include "cubelike/homomorphism.hpp"

namespace cubelike {

enum class Classification { Bipartite, HasLoop, NonBipartite };

std::string to_string(Classification c);
Classification classification_from_string(const std::string& s);

/// Lower bound carried by every nonbipartite certificate.
inline constexpr int kNonBipartiteLowerBound = 4;

struct PayanCertificate {
    ConnectionSet set = ConnectionSet(1, std::span<const Word>{});
    Classification classification = Classification::Bipartite;
    /// Reduced Heuberger matrix; absent only for the empty set.
    std::optional<HeubergerMatrix> matrix;
    /// Bipartite: f with f . s = 1 for every s in S.
    std::optional<Word> functional;
    /// HasLoop and NonBipartite: the odd column used (z = 1 for a loop).
    std::optional<OddColumn> odd_column;
    std::optional<HomWitness> witness;
    bool witness_verified = false;
    int chi_lower_bound = 0;
    std::optional<int> chi;

    unsigned dimension() const noexcept { return set.dimension(); }
};

/// chi_node_limit caps the exact solver per palette size (0 = unlimited); chi
/// stays empty when the cap leaves it undecided.
PayanCertificate classify(const ConnectionSet& s, bool exact_chi = false, std::uint64_t chi_node_limit = 0);

/// Re-derives everything from the set alone: the functional, the relation
/// columns, and the witness edge by edge.
bool verify_certificate(const PayanCertificate& cert);

enum class SweepMode { Exhaustive, Random };

inline constexpr std::uint64_t kDefaultChiNodeLimit = 1'000'000;

struct SweepOptions {
    unsigned n = 2;
    SweepMode mode = SweepMode::Exhaustive;
    std::uint64_t count = 0;  // random mode only
    std::uint64_t seed = 0;   // random mode only
    bool exact_chi = false;
    /// Per-k search cap for exact chi; undecided instances are counted, not guessed.
    std::uint64_t chi_node_limit = kDefaultChiNodeLimit;
    /// Round-trip and re-verify every k-th certificate through JSON; 0 disables.
    std::uint64_t recheck_every = 0;
    /// 0 picks CUBELIKE_THREADS or the hardware concurrency.
    unsigned threads = 0;
};

struct Violation {
    std::uint64_t code = 0;
    std::string set;
    std::string reason;

    friend bool operator==(const Violation&, const Violation&) = default;
};

struct SweepSummary {
    unsigned n = 0;
    SweepMode mode = SweepMode::Exhaustive;
    std::uint64_t count = 0;
    std::uint64_t seed = 0;
    bool exact_chi = false;
    std::uint64_t sets_examined = 0;
    std::uint64_t bipartite = 0;
    std::uint64_t has_loop = 0;
    std::uint64_t nonbipartite = 0;
    std::uint64_t solver_checks = 0;
    std::uint64_t certificates_rechecked = 0;
    std::map<int, std::uint64_t> chi_histogram;
    std::uint64_t chi_unresolved = 0;
    std::vector<Violation> violations;  // sorted by code
};

/// Bit i of code selects the element i + 1 of Z_2^n.
ConnectionSet decode_subset(unsigned n, std::uint64_t code);
std::uint64_t encode_subset(const ConnectionSet& s);

/// Exhaustive mode: n in [1, 4]. Random mode: n in [1, 6].
SweepSummary sweep(const SweepOptions& options);

/// Worker count from CUBELIKE_THREADS, else hardware concurrency.
unsigned default_thread_count();

std::string render_table(const SweepSummary& s);

}  // namespace cubelike
