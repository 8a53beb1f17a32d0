#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "cds/permutation.hpp"

namespace cds {

/// Pointer alphabet of a permutation of length m.
///
/// linear: pointers 1..m-1, where p stands for (p,p+1); the pointers (0,1)
///         and (m,m+1) are dropped from the word.
/// cyclic: pointers 1..m, where m stands for the wraparound pointer (m,1).
///         Used for contracted permutations.
enum class Alphabet { linear, cyclic };

/// A pointer p denotes (p, p+1), or (m, 1) for p = m in the cyclic alphabet.
using Pointer = int;

inline int pointer_count(int m, Alphabet alphabet) { return alphabet == Alphabet::cyclic ? m : m - 1; }

/// Unordered pair of distinct pointers, stored with p < q.
struct PointerContext {
    Pointer p = 0;
    Pointer q = 0;

    PointerContext() = default;
    PointerContext(Pointer a, Pointer b);

    friend bool operator==(const PointerContext&, const PointerContext&) = default;
    friend auto operator<=>(const PointerContext&, const PointerContext&) = default;
};

/// One symbol of a pointer word. `position` indexes the unabridged word
/// L(pi(1)) R(pi(1)) ... L(pi(m)) R(pi(m)) from 1, so dropped symbols leave
/// gaps. `boundary` is the gap between entries the symbol sits in: the left
/// pointer of the entry at position i lies in gap i-1, the right one in gap i.
struct PointerOccurrence {
    Pointer pointer = 0;
    int position = 0;
    int boundary = 0;

    friend bool operator==(const PointerOccurrence&, const PointerOccurrence&) = default;
};

class PointerWord {
public:
    PointerWord(int length, Alphabet alphabet, std::vector<PointerOccurrence> symbols)
        : length_(length), alphabet_(alphabet), symbols_(std::move(symbols))
    {}

    const std::vector<PointerOccurrence>& symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }
    Alphabet alphabet() const { return alphabet_; }

    /// Length of the permutation the word was read from.
    int permutation_size() const { return length_; }

    /// Just the pointer labels in reading order.
    std::vector<Pointer> pointers() const;

    /// "(5,6)(2,3)..." with the wraparound pointer written as (m,1).
    std::string to_string() const;

    friend bool operator==(const PointerWord& a, const PointerWord& b) { return a.pointers() == b.pointers(); }

private:
    int length_;
    Alphabet alphabet_;
    std::vector<PointerOccurrence> symbols_;
};

/// Renders a single pointer as "(p,p+1)" (or "(m,1)" for the cyclic wraparound).
std::string pointer_label(Pointer p, int m, Alphabet alphabet);

PointerWord pointer_word(const Permutation& pi, Alphabet alphabet = Alphabet::linear);

/// The pointer word with the two symbols of the entry j removed, where p = (j-1, j).
PointerWord pointer_word_ignoring(const Permutation& pi, Pointer p);

/// For every pointer, its two occurrences in word order. Index 0 is unused.
std::vector<std::array<PointerOccurrence, 2>> occurrence_table(const PointerWord& word);

/// Pointers p with an adjacency p, p+1 (and m, 1 in the cyclic alphabet), ascending.
std::vector<Pointer> adjacencies(const Permutation& pi, Alphabet alphabet = Alphabet::linear);

bool has_adjacency(const Permutation& pi, Pointer r, Alphabet alphabet = Alphabet::linear);

/// Removes r+1 from an adjacency r, r+1 and closes the value gap. Linear alphabet.
Permutation reduce_adjacency(const Permutation& pi, Pointer r);

PointerWord reduced_pointer_word(const Permutation& pi, Pointer r);

/// Reduces adjacencies until none remain.
Permutation reduce_all_adjacencies(const Permutation& pi);

/// Pointer pairs whose occurrences interleave p..q..p..q, in lexicographic order.
std::vector<PointerContext> valid_contexts(const Permutation& pi, Alphabet alphabet = Alphabet::linear);

bool is_valid_context(const Permutation& pi, PointerContext c, Alphabet alphabet = Alphabet::linear);

/// Context-directed swap: exchanges the two blocks delimited by the interleaved
/// occurrences of c. Either block may be empty.
Permutation apply_cds(const Permutation& pi, PointerContext c, Alphabet alphabet = Alphabet::linear);

bool is_fixed_point(const Permutation& pi);

/// For a fixed point [p+1 ... m 1 ... p] returns p; the identity reports m.
std::optional<int> fixed_point_index(const Permutation& pi);

}  // namespace cds
