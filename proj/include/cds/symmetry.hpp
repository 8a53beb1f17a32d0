#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cds/pile.hpp"
#include "cds/permutation.hpp"

namespace cds {

/// Element (a, b) of Z_m x Z_m acting by x -> pi(x - a) + b. Components are
/// kept in 0..m-1.
struct GroupElement {
    int shift = 0;
    int translation = 0;

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/// Cyclic shift of positions by g.shift, then translation of values by g.translation.
Permutation act(GroupElement g, const Permutation& pi);

struct DifferenceSequence {
    std::vector<int> values;    // over Z_m, representatives 1..m
    std::optional<int> period;  // smallest proper period, if any
    int modulus = 0;

    bool periodic() const { return period.has_value(); }

    /// Period if periodic, m otherwise.
    int effective_period() const { return period.value_or(modulus); }
};

/// D(k) = pi(k+1) - pi(k) for k < m and D(m) = pi(1) - pi(m), all mod m.
DifferenceSequence difference_sequence(const Permutation& pi);

/// Smallest divisor p < m of m with values[k + p] = values[k] cyclically.
std::optional<int> smallest_period(std::span<const int> values);

/// Whether `values` (over Z_m, m = values.size()) is the difference sequence of
/// some permutation: the total vanishes and no shorter cyclic window does.
bool is_valid_difference_sequence(std::span<const int> values);

/// The permutation with difference sequence `values` and first entry `first`.
Permutation permutation_from_difference(std::span<const int> values, int first);

struct Stabilizer {
    GroupElement generator;
    int order = 1;
};

Stabilizer stabilizer(const Permutation& pi);

/// All images of pi under the action, sorted.
std::vector<Permutation> orbit(const Permutation& pi);

/// m * period for periodic difference sequences, m * m otherwise.
std::int64_t orbit_size(const Permutation& pi);

/// Lexicographically least member of the orbit of pi.
Permutation canonical_representative(const Permutation& pi);

/// First p entries reduced mod p into 1..p. Needs p | m and a difference
/// period dividing p.
Permutation reduce_mod(const Permutation& pi, int p);

/// (phi, offsets, stride) generating a permutation whose difference sequence
/// has period dividing phi.size().
struct PeriodicTriple {
    Permutation phi;
    std::vector<int> offsets;  // one per residue class, each in 0..m/p - 1
    int stride = 0;            // in Z_{m/p}, coprime to m/p

    int period() const { return phi.size(); }

    friend bool operator==(const PeriodicTriple&, const PeriodicTriple&) = default;
};

Permutation timewheel_build(const PeriodicTriple& triple, int m);

PeriodicTriple timewheel_recover(const Permutation& pi, int p);

/// Max-pile test for a contracted permutation through its periodic structure:
/// the period-p base pattern must uncontract to a max pile, and K - 1 must be a
/// unit mod (2n-1)/p where K = (pi(p+1) - pi(1)) / p.
bool periodic_has_max_pile(const ContractedPermutation& pi, int p);

/// Number of c in 1..m with gcd(c, m) = gcd(c - 1, m) = 1, via the product formula.
std::int64_t psi(std::int64_t m);

/// Contracted max-pile permutations of length 2n-1 whose difference sequence
/// has period dividing p.
std::int64_t count_periodic_max_pile(int n, int p);

}  // namespace cds
