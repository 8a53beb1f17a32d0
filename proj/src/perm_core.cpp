#include "cds/perm_core.hpp"

#include <stdexcept>

namespace cds {

PointerContext::PointerContext(Pointer a, Pointer b) : p(a < b ? a : b), q(a < b ? b : a)
{
    if (a == b) throw std::invalid_argument("pointer context needs two distinct pointers");
}

std::vector<Pointer> PointerWord::pointers() const
{
    std::vector<Pointer> out;
    out.reserve(symbols_.size());
    for (const auto& s : symbols_) out.push_back(s.pointer);
    return out;
}

std::string pointer_label(Pointer p, int m, Alphabet alphabet)
{
    const int next = (alphabet == Alphabet::cyclic && p == m) ? 1 : p + 1;
    return "(" + std::to_string(p) + "," + std::to_string(next) + ")";
}

std::string PointerWord::to_string() const
{
    std::string out;
    for (const auto& s : symbols_) out += pointer_label(s.pointer, length_, alphabet_);
    return out;
}

PointerWord pointer_word(const Permutation& pi, Alphabet alphabet)
{
    const int m = pi.size();
    std::vector<PointerOccurrence> symbols;
    symbols.reserve(2 * static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        const int v = pi.at(i);
        Pointer left = v - 1;
        Pointer right = v;
        if (alphabet == Alphabet::cyclic) {
            if (left == 0) left = m;
            symbols.push_back({left, 2 * i - 1, i - 1});
            symbols.push_back({right, 2 * i, i});
        } else {
            if (left >= 1) symbols.push_back({left, 2 * i - 1, i - 1});
            if (right <= m - 1) symbols.push_back({right, 2 * i, i});
        }
    }
    return PointerWord(m, alphabet, std::move(symbols));
}

PointerWord pointer_word_ignoring(const Permutation& pi, Pointer p)
{
    const int m = pi.size();
    if (p < 1 || p > m - 1)
        throw std::invalid_argument("pointer " + std::to_string(p) + " out of range for length " +
                                    std::to_string(m));
    const int skipped_position = pi.position_of(p + 1);
    PointerWord full = pointer_word(pi);
    std::vector<PointerOccurrence> kept;
    kept.reserve(full.size());
    for (const auto& s : full.symbols())
        if ((s.position + 1) / 2 != skipped_position) kept.push_back(s);
    return PointerWord(m, Alphabet::linear, std::move(kept));
}

std::vector<std::array<PointerOccurrence, 2>> occurrence_table(const PointerWord& word)
{
    const int count = pointer_count(word.permutation_size(), word.alphabet());
    std::vector<std::array<PointerOccurrence, 2>> table(static_cast<std::size_t>(count) + 1);
    std::vector<int> seen(static_cast<std::size_t>(count) + 1, 0);
    for (const auto& s : word.symbols()) {
        auto& slot = seen[static_cast<std::size_t>(s.pointer)];
        if (slot >= 2) throw std::logic_error("pointer occurs more than twice");
        table[static_cast<std::size_t>(s.pointer)][static_cast<std::size_t>(slot++)] = s;
    }
    return table;
}

std::vector<Pointer> adjacencies(const Permutation& pi, Alphabet alphabet)
{
    const int m = pi.size();
    std::vector<Pointer> out;
    for (int v = 1; v <= m - 1; ++v)
        if (pi.position_of(v + 1) == pi.position_of(v) + 1) out.push_back(v);
    if (alphabet == Alphabet::cyclic && m > 1 && pi.position_of(1) == pi.position_of(m) + 1) out.push_back(m);
    return out;
}

bool has_adjacency(const Permutation& pi, Pointer r, Alphabet alphabet)
{
    const int m = pi.size();
    if (r < 1 || r > pointer_count(m, alphabet)) return false;
    const int next = r == m ? 1 : r + 1;
    return pi.position_of(next) == pi.position_of(r) + 1;
}

Permutation reduce_adjacency(const Permutation& pi, Pointer r)
{
    if (!has_adjacency(pi, r))
        throw std::invalid_argument("no adjacency about pointer " + std::to_string(r) + " in " + pi.to_string());
    const int removed = pi.position_of(r + 1);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(pi.size() - 1));
    for (int k = 1; k <= pi.size(); ++k) {
        if (k == removed) continue;
        const int v = pi.at(k);
        out.push_back(v > r ? v - 1 : v);
    }
    return Permutation(std::move(out));
}

PointerWord reduced_pointer_word(const Permutation& pi, Pointer r) { return pointer_word(reduce_adjacency(pi, r)); }

Permutation reduce_all_adjacencies(const Permutation& pi)
{
    Permutation current = pi;
    for (;;) {
        const auto adj = adjacencies(current);
        if (adj.empty()) return current;
        current = reduce_adjacency(current, adj.front());
    }
}

namespace {

bool interleaved(const std::array<PointerOccurrence, 2>& a, const std::array<PointerOccurrence, 2>& b)
{
    const int a1 = a[0].position, a2 = a[1].position, b1 = b[0].position, b2 = b[1].position;
    return (a1 < b1 && b1 < a2 && a2 < b2) || (b1 < a1 && a1 < b2 && b2 < a2);
}

}  // namespace

std::vector<PointerContext> valid_contexts(const Permutation& pi, Alphabet alphabet)
{
    const auto table = occurrence_table(pointer_word(pi, alphabet));
    const int count = pointer_count(pi.size(), alphabet);
    std::vector<PointerContext> out;
    for (int p = 1; p <= count; ++p)
        for (int q = p + 1; q <= count; ++q)
            if (interleaved(table[static_cast<std::size_t>(p)], table[static_cast<std::size_t>(q)]))
                out.emplace_back(p, q);
    return out;
}

bool is_valid_context(const Permutation& pi, PointerContext c, Alphabet alphabet)
{
    const int count = pointer_count(pi.size(), alphabet);
    if (c.p < 1 || c.q > count || c.p == c.q) return false;
    const auto table = occurrence_table(pointer_word(pi, alphabet));
    return interleaved(table[static_cast<std::size_t>(c.p)], table[static_cast<std::size_t>(c.q)]);
}

Permutation apply_cds(const Permutation& pi, PointerContext c, Alphabet alphabet)
{
    const int count = pointer_count(pi.size(), alphabet);
    if (c.p < 1 || c.q > count || c.p == c.q)
        throw std::invalid_argument("pointer context out of range");
    const auto table = occurrence_table(pointer_word(pi, alphabet));
    auto x = table[static_cast<std::size_t>(c.p)];
    auto y = table[static_cast<std::size_t>(c.q)];
    if (!interleaved(x, y))
        throw std::invalid_argument("{" + std::to_string(c.p) + "," + std::to_string(c.q) +
                                    "} is not a valid pointer context of " + pi.to_string());
    if (y[0].position < x[0].position) std::swap(x, y);
    const auto b1 = static_cast<std::ptrdiff_t>(x[0].boundary);
    const auto b2 = static_cast<std::ptrdiff_t>(y[0].boundary);
    const auto b3 = static_cast<std::ptrdiff_t>(x[1].boundary);
    const auto b4 = static_cast<std::ptrdiff_t>(y[1].boundary);
    const auto& e = pi.vector();
    std::vector<int> out;
    out.reserve(e.size());
    out.insert(out.end(), e.begin(), e.begin() + b1);
    out.insert(out.end(), e.begin() + b3, e.begin() + b4);
    out.insert(out.end(), e.begin() + b2, e.begin() + b3);
    out.insert(out.end(), e.begin() + b1, e.begin() + b2);
    out.insert(out.end(), e.begin() + b4, e.end());
    return Permutation(std::move(out));
}

bool is_fixed_point(const Permutation& pi) { return fixed_point_index(pi).has_value(); }

std::optional<int> fixed_point_index(const Permutation& pi)
{
    const int m = pi.size();
    const int p = pi.at(m);
    if (pi == Permutation::rotation(m, p)) return p;
    return std::nullopt;
}

}  // namespace cds
