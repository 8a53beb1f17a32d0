#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cds {

/// A permutation in one-line notation: entries are the values 1..m, each
/// exactly once, addressed by 1-based positions.
class Permutation {
public:
    explicit Permutation(std::vector<int> entries);
    Permutation(std::initializer_list<int> entries);

    static Permutation identity(int m);

    /// The rotation [p+1 ... m 1 ... p]. p = 0 and p = m both give the identity.
    static Permutation rotation(int m, int p);

    /// Parses "[8 1 5 2 4 3 7 6]", "8 1 5 2 4 3 7 6" or "8,1,5,...".
    static Permutation parse(std::string_view text);

    int size() const { return static_cast<int>(entries_.size()); }

    /// Value at 1-based position.
    int at(int position) const { return entries_[static_cast<std::size_t>(position - 1)]; }

    /// 1-based position of a value.
    int position_of(int value) const { return positions_[static_cast<std::size_t>(value)]; }

    std::span<const int> entries() const { return entries_; }
    const std::vector<int>& vector() const { return entries_; }

    bool is_identity() const;

    std::string to_string() const;

    friend bool operator==(const Permutation& a, const Permutation& b) { return a.entries_ == b.entries_; }
    friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b)
    {
        return a.entries_ <=> b.entries_;
    }

private:
    std::vector<int> entries_;
    std::vector<int> positions_;  // positions_[v], slot 0 unused
};

/// True when `entries` is a bijection on 1..size.
bool is_permutation(std::span<const int> entries);

/// Reduces x into the representatives 1..m.
inline int wrap(long long x, int m)
{
    long long r = x % m;
    if (r <= 0) r += m;
    return static_cast<int>(r);
}

/// Reduces x into the representatives 0..m-1.
inline int mod(long long x, int m)
{
    long long r = x % m;
    if (r < 0) r += m;
    return static_cast<int>(r);
}

}  // namespace cds
