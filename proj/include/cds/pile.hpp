#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cds/perm_core.hpp"
#include "cds/permutation.hpp"

namespace cds {

/// A bijection on {0, 1, ..., n}.
class CycleMap {
public:
    explicit CycleMap(std::vector<int> image);

    int operator()(int x) const { return image_[static_cast<std::size_t>(x)]; }

    /// Number of points, n + 1.
    int size() const { return static_cast<int>(image_.size()); }

    const std::vector<int>& image() const { return image_; }

    /// Disjoint cycles, each starting at its smallest point, singletons included.
    std::vector<std::vector<int>> cycles() const;
    int cycle_count() const;

    /// Composition (this ∘ other).
    CycleMap after(const CycleMap& other) const;

    /// Cycle notation with singletons omitted, e.g. "(0 8 6 3 2 4 1 5 7)".
    std::string to_string() const;

private:
    std::vector<int> image_;
};

/// (0 1 2 ... n)
CycleMap cyclic_successor(int n);

/// (pi(n) pi(n-1) ... pi(1) 0)
CycleMap reverse_reading_cycle(const Permutation& pi);

/// The composite of the two cycles above, read as a function on {0..n}.
CycleMap c_map(const Permutation& pi);

class StrategicPile {
public:
    explicit StrategicPile(std::vector<int> trace) : trace_(std::move(trace)) {}

    /// Values in the order they are met walking the cycle from n to 0.
    const std::vector<int>& trace() const { return trace_; }

    /// Values in ascending order.
    std::vector<int> elements() const;

    bool contains(int x) const;
    bool empty() const { return trace_.empty(); }
    int size() const { return static_cast<int>(trace_.size()); }

private:
    std::vector<int> trace_;
};

StrategicPile strategic_pile(const Permutation& pi);

/// |SP| only, without materialising the trace.
int strategic_pile_size(const Permutation& pi);

bool is_sortable(const Permutation& pi);

/// The rotations [p+1 ... n 1 ... p] for p in SP, ascending in p, or just the
/// identity when SP is empty.
std::vector<Permutation> reachable_fixed_points(const Permutation& pi);

/// n - 1 for even n, n - 2 for odd n.
int max_pile_size(int n);

bool has_max_pile(const Permutation& pi);

/// Length 2n-1 permutation read with the cyclic pointer alphabet.
class ContractedPermutation {
public:
    explicit ContractedPermutation(Permutation pi) : pi_(std::move(pi)) {}

    const Permutation& permutation() const { return pi_; }
    int size() const { return pi_.size(); }
    std::string to_string() const { return pi_.to_string(); }

    friend bool operator==(const ContractedPermutation&, const ContractedPermutation&) = default;

private:
    Permutation pi_;
};

/// Deletes the entry 2n from a max-pile permutation of even length 2n.
ContractedPermutation contract(const Permutation& pi);

/// Inserts m+1 immediately before the entry 1.
Permutation uncontract(const ContractedPermutation& pi);

/// Number of cds moves from pi to a fixed point. Throws on fixed points.
int duration(const Permutation& pi);

/// Pass/fail per structural property of a max-pile permutation. Items that do
/// not apply to the parity of the length pass vacuously.
struct MaxPileReport {
    bool applicable_even = false;
    bool item1 = true;  // even: the largest entry is immediately followed by 1
    bool item2 = true;  // even: no adjacencies
    bool item3 = true;  // odd: exactly one adjacency
    bool item4 = true;  // even: each cds adds exactly two adjacencies and drops two pile elements
    bool item5 = true;  // even: each cds, adjacencies reduced, lands on a max pile of length n-2
    std::optional<PointerContext> failing_move;

    bool all() const { return item1 && item2 && item3 && item4 && item5; }
};

MaxPileReport max_pile_properties_check(const Permutation& pi);

}  // namespace cds
