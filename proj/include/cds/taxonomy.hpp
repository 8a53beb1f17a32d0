#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cds/perm_core.hpp"
#include "cds/pile.hpp"
#include "cds/symmetry.hpp"

namespace cds {

/// Raised when a request exceeds a configured size cap.
class LimitExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int context_count(const Permutation& pi, Alphabet alphabet = Alphabet::linear);
inline int context_count(const ContractedPermutation& pi) { return context_count(pi.permutation(), Alphabet::cyclic); }

/// compatibility_degrees(pi)[p] = number of pointers forming a valid context with p.
std::vector<int> compatibility_degrees(const Permutation& pi, Alphabet alphabet = Alphabet::linear);

/// Pointers compatible with every other pointer.
std::vector<Pointer> universal_pointers(const Permutation& pi, Alphabet alphabet = Alphabet::linear);

struct IncompatibilityGraph {
    std::vector<Pointer> vertices;      // non-universal pointers
    std::vector<PointerContext> edges;  // incompatible pairs among them
};

IncompatibilityGraph incompatibility_graph(const Permutation& pi, Alphabet alphabet = Alphabet::linear);

/// Valid-context count of a constant-difference permutation of length 2n-1
/// with step d, where gcd(d, 2n-1) = 1.
std::int64_t constant_diff_context_count(int d, int n);

/// Multiplicative inverse of d modulo m, in 1..m-1.
int inverse_mod(int d, int m);

inline std::int64_t binomial2(std::int64_t x) { return x * (x - 1) / 2; }

struct CensusOptions {
    int max_n = 6;
    unsigned threads = 0;          // 0: hardware concurrency
    bool with_orbits = false;      // fill CensusReport::orbits
    bool orbit_accelerated = false;  // one representative per orbit, weighted by orbit size
};

struct OrbitRecord {
    Permutation representative;  // canonical contracted member
    std::int64_t size = 0;
    int k = 0;
};

struct CensusReport {
    int n = 0;
    std::map<int, std::int64_t> histogram;  // context count -> members
    std::int64_t total = 0;
    std::vector<OrbitRecord> orbits;  // sorted by representative
};

/// Exhaustive count of max-pile permutations of length 2n by context count.
CensusReport census(int n, const CensusOptions& options = {});

enum class Classification {
    max_contexts,
    max_minus_four,
    min_contexts_descending,
    min_contexts_interleaved,
    other,
};

std::string_view to_string(Classification c);

/// Contracted family representatives for length 2n-1.
Permutation evens_then_odds(int n);           // [2 4 ... 2n-2 1 3 ... 2n-1]
Permutation swapped_evens_then_odds(int n);   // [4 2 6 ... 2n-2 1 3 ... 2n-1], n >= 3
Permutation descending(int n);               // [2n-1 ... 2 1]
Permutation interleaved_family(int n);       // [n+1 2 n+2 3 ... 2n-1 n 1]

/// Tags a contracted max-pile permutation by explicit orbit membership.
Classification classify(const ContractedPermutation& pi);

/// A proper window pi(k..k+l), l >= 1, holding exactly the values a..a+l and
/// starting at a, ending at a+l.
bool has_violating_subsequence(const Permutation& pi);

struct DivisibilityReport {
    bool periodic_counts_divisible = true;  // k divisible by (2n-1)/period for periodic members
    bool coprime_classes_divisible = true;  // |class k| = 0 mod (2n-1)^2 when gcd(k, 2n-1) = 1
    std::vector<std::string> failures;

    bool passed() const { return periodic_counts_divisible && coprime_classes_divisible; }
};

/// Needs a report produced with orbits.
DivisibilityReport divisibility_checks(const CensusReport& report);

struct PointerParity {
    Pointer pointer = 0;
    int compatible = 0;
    int incompatible = 0;
};

struct ParityReport {
    std::vector<PointerParity> pointers;
    bool all_even = true;
};

ParityReport parity_checks(const ContractedPermutation& pi);

/// True when no class k with C(2n-1,2) - 3 <= k < C(2n-1,2) is populated.
bool near_maximal_gap_holds(const CensusReport& report);

}  // namespace cds
