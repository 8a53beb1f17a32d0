#pragma once

// Brute-force reference implementations working on plain vectors. They follow
// the definitions directly and share no code with the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

inline int wrap(long long x, int m)
{
    long long r = x % m;
    if (r <= 0) r += m;
    return static_cast<int>(r);
}

inline std::vector<Perm> all_perms(int m)
{
    Perm e(static_cast<std::size_t>(m));
    std::iota(e.begin(), e.end(), 1);
    std::vector<Perm> out;
    do out.push_back(e);
    while (std::next_permutation(e.begin(), e.end()));
    return out;
}

struct Symbol {
    int pointer;
    int word_pos;  // index in the unabridged word L(pi1) R(pi1) L(pi2) ...
    int gap;       // boundary between entries, 0..m
};

// Pointer p stands for (p, p+1). Linear: pointers 1..m-1. Cyclic: also m = (m, 1).
inline std::vector<Symbol> word(const Perm& pi, bool cyclic)
{
    const int m = static_cast<int>(pi.size());
    std::vector<Symbol> w;
    for (int i = 0; i < m; ++i) {
        int left = pi[static_cast<std::size_t>(i)] - 1;  // (x-1, x)
        int right = pi[static_cast<std::size_t>(i)];     // (x, x+1)
        if (cyclic && left == 0) left = m;
        if (left >= 1 && (cyclic || left <= m - 1)) w.push_back({left, 2 * i, i});
        if (right <= m - 1 || (cyclic && right == m)) w.push_back({right, 2 * i + 1, i + 1});
    }
    return w;
}

inline std::string label(int p, int m)
{
    const int next = p == m ? 1 : p + 1;
    return "(" + std::to_string(p) + "," + std::to_string(next) + ")";
}

inline std::string word_string(const Perm& pi, bool cyclic = false)
{
    std::string s;
    for (const auto& sym : word(pi, cyclic)) s += label(sym.pointer, static_cast<int>(pi.size()));
    return s;
}

inline std::vector<Symbol> occurrences(const std::vector<Symbol>& w, int p)
{
    std::vector<Symbol> out;
    for (const auto& s : w)
        if (s.pointer == p) out.push_back(s);
    return out;
}

inline bool interleaved(const std::vector<Symbol>& w, int p, int q)
{
    const auto a = occurrences(w, p), b = occurrences(w, q);
    if (a.size() != 2 || b.size() != 2) return false;
    std::vector<std::pair<int, int>> seq{{a[0].word_pos, p}, {a[1].word_pos, p}, {b[0].word_pos, q}, {b[1].word_pos, q}};
    std::sort(seq.begin(), seq.end());
    return seq[0].second == seq[2].second && seq[1].second == seq[3].second && seq[0].second != seq[1].second;
}

inline std::vector<std::pair<int, int>> contexts(const Perm& pi, bool cyclic = false)
{
    const int m = static_cast<int>(pi.size());
    const int count = cyclic ? m : m - 1;
    const auto w = word(pi, cyclic);
    std::vector<std::pair<int, int>> out;
    for (int p = 1; p <= count; ++p)
        for (int q = p + 1; q <= count; ++q)
            if (interleaved(w, p, q)) out.emplace_back(p, q);
    return out;
}

// Swaps the two blocks cut out by the four gaps of the interleaved pair.
inline Perm cds(const Perm& pi, int p, int q, bool cyclic = false)
{
    const auto w = word(pi, cyclic);
    auto occ = occurrences(w, p);
    const auto more = occurrences(w, q);
    occ.insert(occ.end(), more.begin(), more.end());
    std::sort(occ.begin(), occ.end(), [](const Symbol& a, const Symbol& b) { return a.word_pos < b.word_pos; });
    const auto at = [&](int g) { return pi.begin() + g; };
    Perm out(pi.begin(), at(occ[0].gap));
    out.insert(out.end(), at(occ[2].gap), at(occ[3].gap));
    out.insert(out.end(), at(occ[1].gap), at(occ[2].gap));
    out.insert(out.end(), at(occ[0].gap), at(occ[1].gap));
    out.insert(out.end(), at(occ[3].gap), pi.end());
    return out;
}

inline bool adjacency(const Perm& pi, int p)
{
    for (std::size_t i = 0; i + 1 < pi.size(); ++i)
        if (pi[i] == p && pi[i + 1] == p + 1) return true;
    return false;
}

// C = Y o X with X = (0 1 ... n) and Y = (pi(n) pi(n-1) ... pi(1) 0).
inline std::vector<int> c_map(const Perm& pi)
{
    const int n = static_cast<int>(pi.size());
    std::vector<int> cycle_y(pi.rbegin(), pi.rend());
    cycle_y.push_back(0);
    std::vector<int> y(static_cast<std::size_t>(n) + 1);
    for (std::size_t i = 0; i < cycle_y.size(); ++i) y[static_cast<std::size_t>(cycle_y[i])] = cycle_y[(i + 1) % cycle_y.size()];
    std::vector<int> c(static_cast<std::size_t>(n) + 1);
    for (int x = 0; x <= n; ++x) c[static_cast<std::size_t>(x)] = y[static_cast<std::size_t>((x + 1) % (n + 1))];
    return c;
}

inline int cycle_count(const std::vector<int>& f)
{
    std::vector<char> seen(f.size(), 0);
    int cycles = 0;
    for (std::size_t s = 0; s < f.size(); ++s) {
        if (seen[s]) continue;
        ++cycles;
        for (std::size_t x = s; !seen[x]; x = static_cast<std::size_t>(f[x])) seen[x] = 1;
    }
    return cycles;
}

// Values strictly after n and before 0 on the cycle through n; empty when 0 is elsewhere.
inline std::vector<int> pile_trace(const Perm& pi)
{
    const int n = static_cast<int>(pi.size());
    const auto c = c_map(pi);
    std::vector<int> cyc{n};
    for (int x = c[static_cast<std::size_t>(n)]; x != n; x = c[static_cast<std::size_t>(x)]) cyc.push_back(x);
    const auto zero = std::find(cyc.begin(), cyc.end(), 0);
    if (zero == cyc.end()) return {};
    return {cyc.begin() + 1, zero};
}

inline std::vector<int> pile(const Perm& pi)
{
    auto t = pile_trace(pi);
    std::sort(t.begin(), t.end());
    return t;
}

inline bool max_pile(const Perm& pi)
{
    const int n = static_cast<int>(pi.size());
    return n >= 2 && static_cast<int>(pile(pi).size()) == (n % 2 == 0 ? n - 1 : n - 2);
}

inline Perm uncontract(const Perm& pi)
{
    Perm out;
    for (int v : pi) {
        if (v == 1) out.push_back(static_cast<int>(pi.size()) + 1);
        out.push_back(v);
    }
    return out;
}

// Index p of the rotation [p+1 .. m 1 .. p]; m for the identity; 0 otherwise.
inline int rotation_index(const Perm& pi)
{
    const int m = static_cast<int>(pi.size());
    for (int p = 1; p <= m; ++p) {
        bool ok = true;
        for (int i = 0; i < m && ok; ++i) ok = pi[static_cast<std::size_t>(i)] == wrap(p + 1 + i, m);
        if (ok) return p;
    }
    return 0;
}

inline std::set<Perm> reachable_terminals(const Perm& pi)
{
    std::set<Perm> out, seen;
    std::vector<Perm> stack{pi};
    while (!stack.empty()) {
        Perm cur = stack.back();
        stack.pop_back();
        if (!seen.insert(cur).second) continue;
        const auto cs = contexts(cur);
        if (cs.empty()) out.insert(cur);
        for (auto [p, q] : cs) stack.push_back(cds(cur, p, q));
    }
    return out;
}

inline std::set<int> playout_lengths(const Perm& pi)
{
    const auto cs = contexts(pi);
    if (cs.empty()) return {0};
    std::set<int> out;
    for (auto [p, q] : cs)
        for (int l : playout_lengths(cds(pi, p, q))) out.insert(l + 1);
    return out;
}

// Game with ONE's winning set fixed; returns whether ONE wins with `one_to_move`.
inline bool one_wins(const Perm& pi, const std::set<int>& one_set, bool one_to_move)
{
    const auto cs = contexts(pi);
    if (cs.empty()) {
        const int idx = rotation_index(pi);
        return idx != static_cast<int>(pi.size()) && one_set.contains(idx);
    }
    for (auto [p, q] : cs) {
        const bool r = one_wins(cds(pi, p, q), one_set, !one_to_move);
        if (one_to_move && r) return true;
        if (!one_to_move && !r) return false;
    }
    return !one_to_move;
}

inline Perm act(const Perm& pi, int a, int b)
{
    const int m = static_cast<int>(pi.size());
    Perm out(pi.size());
    for (int x = 1; x <= m; ++x)
        out[static_cast<std::size_t>(x - 1)] = wrap(pi[static_cast<std::size_t>(wrap(x - a, m) - 1)] + b, m);
    return out;
}

inline std::set<Perm> orbit(const Perm& pi)
{
    const int m = static_cast<int>(pi.size());
    std::set<Perm> out;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) out.insert(act(pi, a, b));
    return out;
}

inline std::set<std::pair<int, int>> stabilizer(const Perm& pi)
{
    const int m = static_cast<int>(pi.size());
    std::set<std::pair<int, int>> out;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            if (act(pi, a, b) == pi) out.insert({a, b});
    return out;
}

inline std::vector<int> differences(const Perm& pi)
{
    const int m = static_cast<int>(pi.size());
    std::vector<int> d;
    for (int k = 0; k < m; ++k) d.push_back(wrap(pi[static_cast<std::size_t>((k + 1) % m)] - pi[static_cast<std::size_t>(k)], m));
    return d;
}

// Smallest p dividing m with d shift-invariant by p; m when there is none below m.
inline int period(const Perm& pi)
{
    const auto d = differences(pi);
    const int m = static_cast<int>(d.size());
    for (int p = 1; p <= m; ++p) {
        if (m % p) continue;
        auto r = d;
        std::rotate(r.begin(), r.begin() + p, r.end());
        if (r == d) return p;
    }
    return m;
}

inline std::int64_t psi(int m)
{
    std::int64_t count = 0;
    for (int c = 1; c <= m; ++c)
        if (std::gcd(c, m) == 1 && std::gcd(c - 1, m) == 1) ++count;
    return count;
}

// Max-pile permutations of length 2n, straight from the pile definition.
inline std::vector<Perm> max_pile_perms(int n)
{
    std::vector<Perm> out;
    for (auto& pi : all_perms(2 * n))
        if (max_pile(pi)) out.push_back(pi);
    return out;
}

inline std::map<int, std::int64_t> census(int n)
{
    std::map<int, std::int64_t> hist;
    for (const auto& pi : max_pile_perms(n)) ++hist[static_cast<int>(contexts(pi).size())];
    return hist;
}

// Contracted max-pile permutations of length 2n-1 whose difference period divides p.
inline std::int64_t periodic_count(int n, int p)
{
    std::int64_t count = 0;
    for (const auto& pi : all_perms(2 * n - 1))
        if (p % period(pi) == 0 && max_pile(uncontract(pi))) ++count;
    return count;
}

inline std::vector<std::vector<int>> subsets(const std::vector<int>& base)
{
    std::vector<std::vector<int>> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << base.size()); ++mask) {
        std::vector<int> s;
        for (std::size_t i = 0; i < base.size(); ++i)
            if (mask >> i & 1) s.push_back(base[i]);
        out.push_back(s);
    }
    return out;
}

}  // namespace oracle
