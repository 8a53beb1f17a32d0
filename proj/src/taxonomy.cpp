#include "cds/taxonomy.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <numeric>
#include <thread>

namespace cds {

int context_count(const Permutation& pi, Alphabet alphabet) { return static_cast<int>(valid_contexts(pi, alphabet).size()); }

std::vector<int> compatibility_degrees(const Permutation& pi, Alphabet alphabet)
{
    std::vector<int> degree(static_cast<std::size_t>(pointer_count(pi.size(), alphabet)) + 1, 0);
    for (const auto& c : valid_contexts(pi, alphabet)) {
        ++degree[static_cast<std::size_t>(c.p)];
        ++degree[static_cast<std::size_t>(c.q)];
    }
    return degree;
}

std::vector<Pointer> universal_pointers(const Permutation& pi, Alphabet alphabet)
{
    const int count = pointer_count(pi.size(), alphabet);
    const auto degree = compatibility_degrees(pi, alphabet);
    std::vector<Pointer> out;
    if (count < 2) return out;
    for (int p = 1; p <= count; ++p)
        if (degree[static_cast<std::size_t>(p)] == count - 1) out.push_back(p);
    return out;
}

IncompatibilityGraph incompatibility_graph(const Permutation& pi, Alphabet alphabet)
{
    const int count = pointer_count(pi.size(), alphabet);
    const auto contexts = valid_contexts(pi, alphabet);
    const auto universal = universal_pointers(pi, alphabet);
    IncompatibilityGraph g;
    for (int p = 1; p <= count; ++p)
        if (!std::binary_search(universal.begin(), universal.end(), p)) g.vertices.push_back(p);
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < g.vertices.size(); ++j) {
            const PointerContext pair(g.vertices[i], g.vertices[j]);
            if (!std::binary_search(contexts.begin(), contexts.end(), pair)) g.edges.push_back(pair);
        }
    return g;
}

int inverse_mod(int d, int m)
{
    if (m < 2) throw std::invalid_argument("modulus must be at least 2");
    const int r = mod(d, m);
    if (std::gcd(r, m) != 1)
        throw std::invalid_argument(std::to_string(d) + " is not invertible modulo " + std::to_string(m));
    // extended Euclid on (r, m)
    long long old_r = r, cur_r = m, old_s = 1, cur_s = 0;
    while (cur_r != 0) {
        const long long q = old_r / cur_r;
        old_r = std::exchange(cur_r, old_r - q * cur_r);
        old_s = std::exchange(cur_s, old_s - q * cur_s);
    }
    return mod(old_s, m);
}

std::int64_t constant_diff_context_count(int d, int n)
{
    if (n < 2) throw std::invalid_argument("need n >= 2");
    const int m = 2 * n - 1;
    const int inv = inverse_mod(d, m);
    return static_cast<std::int64_t>(m) * std::min(inv - 1, m - inv);
}

namespace {

// Strategic pile size of the uncontracted permutation, computed on raw arrays.
// `u` holds the 2n entries, `pos[v]` the 0-based position of v.
bool raw_has_max_pile(const std::vector<int>& u, const std::vector<int>& pos)
{
    const int n = static_cast<int>(u.size());
    auto step = [&](int x) {
        if (x == n) return u[static_cast<std::size_t>(n - 1)];
        const int p = pos[static_cast<std::size_t>(x + 1)];
        return p == 0 ? 0 : u[static_cast<std::size_t>(p - 1)];
    };
    int count = 0;
    int x = step(n);
    while (x != 0 && x != n) {
        ++count;
        x = step(x);
    }
    return x == 0 && count == n - 1;
}

struct Tally {
    std::map<int, std::int64_t> histogram;
    std::map<Permutation, OrbitRecord> orbits;

    void merge(Tally&& other)
    {
        for (const auto& [k, c] : other.histogram) histogram[k] += c;
        for (auto& [rep, rec] : other.orbits) {
            auto [it, inserted] = orbits.try_emplace(rep, rec);
            if (!inserted) it->second.size += rec.size;
        }
    }
};

// Counts contracted permutations of length m whose leading entries are `prefix`.
void census_chunk(int m, std::vector<int> prefix, const CensusOptions& options, Tally& tally)
{
    std::vector<int> rest;
    for (int v = 1; v <= m; ++v)
        if (std::find(prefix.begin(), prefix.end(), v) == prefix.end()) rest.push_back(v);
    std::vector<int> contracted(static_cast<std::size_t>(m));
    std::vector<int> u(static_cast<std::size_t>(m) + 1);
    std::vector<int> pos(static_cast<std::size_t>(m) + 2);
    do {
        std::copy(prefix.begin(), prefix.end(), contracted.begin());
        std::copy(rest.begin(), rest.end(), contracted.begin() + static_cast<std::ptrdiff_t>(prefix.size()));
        if (options.orbit_accelerated) {
            const Permutation candidate(contracted);
            if (canonical_representative(candidate) != candidate) continue;
        }
        std::size_t j = 0;
        for (int v : contracted) {
            if (v == 1) u[j++] = m + 1;
            u[j++] = v;
        }
        for (std::size_t i = 0; i < u.size(); ++i) pos[static_cast<std::size_t>(u[i])] = static_cast<int>(i);
        if (!raw_has_max_pile(u, pos)) continue;

        const Permutation full(u);
        const Permutation small(contracted);
        const int k = context_count(full);
        if (k != context_count(small, Alphabet::cyclic))
            throw std::logic_error("context count changed under contraction for " + full.to_string());
        const std::int64_t weight = options.orbit_accelerated ? orbit_size(small) : 1;
        tally.histogram[k] += weight;
        if (options.with_orbits) {
            const Permutation rep = options.orbit_accelerated ? small : canonical_representative(small);
            auto [it, inserted] = tally.orbits.try_emplace(rep, OrbitRecord{rep, 0, k});
            it->second.size += weight;
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
}

}  // namespace

CensusReport census(int n, const CensusOptions& options)
{
    if (n < 2) throw std::invalid_argument("census needs n >= 2");
    if (n > options.max_n)
        throw LimitExceeded("census for n = " + std::to_string(n) + " exceeds the cap max_n = " +
                            std::to_string(options.max_n));
    const int m = 2 * n - 1;

    // Work items: fixed leading entries. Canonical representatives start with 1.
    std::vector<std::vector<int>> prefixes;
    if (options.orbit_accelerated) {
        for (int second = 2; second <= m; ++second) prefixes.push_back({1, second});
    } else {
        for (int first = 1; first <= m; ++first) prefixes.push_back({first});
    }

    unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(prefixes.size()));
    std::atomic<std::size_t> next{0};
    std::vector<Tally> tallies(threads);
    std::vector<std::exception_ptr> errors(threads);
    auto worker = [&](unsigned id) {
        try {
            for (std::size_t i = next++; i < prefixes.size(); i = next++)
                census_chunk(m, prefixes[i], options, tallies[id]);
        } catch (...) {
            errors[id] = std::current_exception();
        }
    };
    if (threads <= 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    Tally merged;
    for (auto& t : tallies) merged.merge(std::move(t));
    CensusReport report;
    report.n = n;
    report.histogram = std::move(merged.histogram);
    for (const auto& [k, c] : report.histogram) report.total += c;
    for (auto& [rep, rec] : merged.orbits) report.orbits.push_back(std::move(rec));
    return report;
}

std::string_view to_string(Classification c)
{
    switch (c) {
    case Classification::max_contexts: return "MAX_CONTEXTS";
    case Classification::max_minus_four: return "MAX_MINUS_4";
    case Classification::min_contexts_descending: return "MIN_CONTEXTS_DESC";
    case Classification::min_contexts_interleaved: return "MIN_CONTEXTS_INTERLEAVED";
    case Classification::other: return "OTHER";
    }
    return "OTHER";
}

Permutation evens_then_odds(int n)
{
    std::vector<int> e;
    for (int v = 2; v <= 2 * n - 2; v += 2) e.push_back(v);
    for (int v = 1; v <= 2 * n - 1; v += 2) e.push_back(v);
    return Permutation(std::move(e));
}

Permutation swapped_evens_then_odds(int n)
{
    if (n < 3) throw std::invalid_argument("the swapped family starts at n = 3");
    std::vector<int> e = evens_then_odds(n).vector();
    std::swap(e[0], e[1]);
    return Permutation(std::move(e));
}

Permutation descending(int n)
{
    std::vector<int> e;
    for (int v = 2 * n - 1; v >= 1; --v) e.push_back(v);
    return Permutation(std::move(e));
}

Permutation interleaved_family(int n)
{
    std::vector<int> e;
    for (int j = 1; j <= n - 1; ++j) {
        e.push_back(n + j);
        e.push_back(j + 1);
    }
    e.push_back(1);
    return Permutation(std::move(e));
}

Classification classify(const ContractedPermutation& contracted)
{
    const Permutation& pi = contracted.permutation();
    if (pi.size() % 2 == 0 || !has_max_pile(uncontract(contracted)))
        throw std::invalid_argument(pi.to_string() + " is not a contracted max-pile permutation");
    const int n = (pi.size() + 1) / 2;
    const Permutation canon = canonical_representative(pi);
    auto in_orbit = [&](const Permutation& family) { return canonical_representative(family) == canon; };
    if (in_orbit(evens_then_odds(n))) return Classification::max_contexts;
    if (n >= 3 && in_orbit(swapped_evens_then_odds(n))) return Classification::max_minus_four;
    if (in_orbit(descending(n))) return Classification::min_contexts_descending;
    if (in_orbit(interleaved_family(n))) return Classification::min_contexts_interleaved;
    return Classification::other;
}

bool has_violating_subsequence(const Permutation& pi)
{
    const int m = pi.size();
    for (int k = 1; k <= m; ++k) {
        int lo = pi.at(k), hi = pi.at(k);
        for (int end = k + 1; end <= m; ++end) {
            const int v = pi.at(end);
            lo = std::min(lo, v);
            hi = std::max(hi, v);
            if (k == 1 && end == m) break;
            if (hi - lo == end - k && pi.at(k) == lo && v == hi) return true;
        }
    }
    return false;
}

DivisibilityReport divisibility_checks(const CensusReport& report)
{
    if (report.total > 0 && report.orbits.empty())
        throw std::invalid_argument("divisibility checks need a census with orbits");
    const int m = 2 * report.n - 1;
    DivisibilityReport out;
    for (const auto& rec : report.orbits) {
        const int period = difference_sequence(rec.representative).effective_period();
        if (rec.k % (m / period) != 0) {
            out.periodic_counts_divisible = false;
            out.failures.push_back(rec.representative.to_string() + ": k = " + std::to_string(rec.k) +
                                   " not divisible by " + std::to_string(m / period));
        }
    }
    const std::int64_t square = static_cast<std::int64_t>(m) * m;
    for (const auto& [k, count] : report.histogram) {
        if (std::gcd(k, m) == 1 && count % square != 0) {
            out.coprime_classes_divisible = false;
            out.failures.push_back("k = " + std::to_string(k) + ": " + std::to_string(count) + " members, not 0 mod " +
                                   std::to_string(square));
        }
    }
    return out;
}

ParityReport parity_checks(const ContractedPermutation& contracted)
{
    const Permutation& pi = contracted.permutation();
    const int count = pi.size();
    const auto degree = compatibility_degrees(pi, Alphabet::cyclic);
    ParityReport out;
    for (int p = 1; p <= count; ++p) {
        const int compatible = degree[static_cast<std::size_t>(p)];
        const int incompatible = count - 1 - compatible;
        out.pointers.push_back({p, compatible, incompatible});
        if (compatible % 2 != 0 || incompatible % 2 != 0) out.all_even = false;
    }
    return out;
}

bool near_maximal_gap_holds(const CensusReport& report)
{
    const std::int64_t top = binomial2(2 * report.n - 1);
    for (std::int64_t k = top - 3; k < top; ++k)
        if (k >= 0 && report.histogram.contains(static_cast<int>(k))) return false;
    return true;
}

}  // namespace cds
