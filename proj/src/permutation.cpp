#include "cds/permutation.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace cds {

namespace {

std::vector<int> inverse_positions(const std::vector<int>& entries)
{
    const int m = static_cast<int>(entries.size());
    if (m < 1) throw std::invalid_argument("permutation must have at least one entry");
    std::vector<int> positions(static_cast<std::size_t>(m) + 1, 0);
    for (int i = 0; i < m; ++i) {
        const int v = entries[static_cast<std::size_t>(i)];
        if (v < 1 || v > m)
            throw std::invalid_argument("permutation entry " + std::to_string(v) + " outside 1.." +
                                        std::to_string(m));
        if (positions[static_cast<std::size_t>(v)] != 0)
            throw std::invalid_argument("permutation entry " + std::to_string(v) + " repeated");
        positions[static_cast<std::size_t>(v)] = i + 1;
    }
    return positions;
}

}  // namespace

Permutation::Permutation(std::vector<int> entries)
    : entries_(std::move(entries)), positions_(inverse_positions(entries_))
{}

Permutation::Permutation(std::initializer_list<int> entries) : Permutation(std::vector<int>(entries)) {}

Permutation Permutation::identity(int m)
{
    std::vector<int> e(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) e[static_cast<std::size_t>(i)] = i + 1;
    return Permutation(std::move(e));
}

Permutation Permutation::rotation(int m, int p)
{
    if (m < 1) throw std::invalid_argument("rotation length must be positive");
    std::vector<int> e;
    e.reserve(static_cast<std::size_t>(m));
    const int shift = mod(p, m);
    for (int i = 1; i <= m; ++i) e.push_back(wrap(shift + i, m));
    return Permutation(std::move(e));
}

Permutation Permutation::parse(std::string_view text)
{
    std::size_t begin = 0, end = text.size();
    auto is_space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
    while (begin < end && is_space(text[begin])) ++begin;
    while (end > begin && is_space(text[end - 1])) --end;
    if (begin < end && text[begin] == '[') {
        if (text[end - 1] != ']') throw std::invalid_argument("unbalanced bracket in permutation");
        ++begin;
        --end;
    }
    std::vector<int> values;
    std::size_t i = begin;
    while (i < end) {
        const char c = text[i];
        if (is_space(c) || c == ',') {
            ++i;
            continue;
        }
        int v = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + end, v);
        if (ec != std::errc() || ptr == text.data() + i)
            throw std::invalid_argument("cannot parse permutation: '" + std::string(text) + "'");
        values.push_back(v);
        i = static_cast<std::size_t>(ptr - text.data());
    }
    return Permutation(std::move(values));
}

bool Permutation::is_identity() const
{
    for (int i = 0; i < size(); ++i)
        if (entries_[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
}

std::string Permutation::to_string() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(entries_[i]);
    }
    out += ']';
    return out;
}

bool is_permutation(std::span<const int> entries)
{
    const int m = static_cast<int>(entries.size());
    if (m < 1) return false;
    std::vector<char> seen(static_cast<std::size_t>(m) + 1, 0);
    for (int v : entries) {
        if (v < 1 || v > m || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = 1;
    }
    return true;
}

}  // namespace cds
