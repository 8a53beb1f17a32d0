#include "cds/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace cds {

Permutation act(GroupElement g, const Permutation& pi)
{
    const int m = pi.size();
    std::vector<int> out(static_cast<std::size_t>(m));
    for (int x = 1; x <= m; ++x) out[static_cast<std::size_t>(x - 1)] = wrap(pi.at(wrap(x - g.shift, m)) + g.translation, m);
    return Permutation(std::move(out));
}

std::optional<int> smallest_period(std::span<const int> values)
{
    const int m = static_cast<int>(values.size());
    for (int p = 1; p < m; ++p) {
        if (m % p != 0) continue;
        bool ok = true;
        for (int k = 0; k < m && ok; ++k) ok = values[static_cast<std::size_t>((k + p) % m)] == values[static_cast<std::size_t>(k)];
        if (ok) return p;
    }
    return std::nullopt;
}

DifferenceSequence difference_sequence(const Permutation& pi)
{
    const int m = pi.size();
    DifferenceSequence d;
    d.modulus = m;
    d.values.resize(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k) {
        const int next = k < m ? pi.at(k + 1) : pi.at(1);
        d.values[static_cast<std::size_t>(k - 1)] = wrap(next - pi.at(k), m);
    }
    d.period = smallest_period(d.values);
    return d;
}

bool is_valid_difference_sequence(std::span<const int> values)
{
    const int m = static_cast<int>(values.size());
    if (m < 1) return false;
    long long total = 0;
    for (int v : values) total += v;
    if (mod(total, m) != 0) return false;
    for (int i = 0; i < m; ++i) {
        long long window = 0;
        for (int len = 1; len < m; ++len) {
            window += values[static_cast<std::size_t>((i + len - 1) % m)];
            if (mod(window, m) == 0) return false;
        }
    }
    return true;
}

Permutation permutation_from_difference(std::span<const int> values, int first)
{
    if (!is_valid_difference_sequence(values)) throw std::invalid_argument("not a valid difference sequence");
    const int m = static_cast<int>(values.size());
    std::vector<int> out(static_cast<std::size_t>(m));
    long long current = first;
    for (int i = 0; i < m; ++i) {
        out[static_cast<std::size_t>(i)] = wrap(current, m);
        current += values[static_cast<std::size_t>(i)];
    }
    return Permutation(std::move(out));
}

Stabilizer stabilizer(const Permutation& pi)
{
    const int m = pi.size();
    const auto d = difference_sequence(pi);
    if (!d.periodic()) return {};
    const int p = *d.period;
    return {{p, mod(pi.at(p + 1) - pi.at(1), m)}, m / p};
}

std::vector<Permutation> orbit(const Permutation& pi)
{
    const int m = pi.size();
    std::set<Permutation> seen;
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) seen.insert(act({a, b}, pi));
    return {seen.begin(), seen.end()};
}

std::int64_t orbit_size(const Permutation& pi)
{
    const auto d = difference_sequence(pi);
    return static_cast<std::int64_t>(pi.size()) * d.effective_period();
}

Permutation canonical_representative(const Permutation& pi)
{
    const int m = pi.size();
    const auto& e = pi.vector();
    std::vector<int> best, candidate(static_cast<std::size_t>(m));
    for (int start = 0; start < m; ++start) {
        const int lead = e[static_cast<std::size_t>(start)];
        for (int j = 0; j < m; ++j)
            candidate[static_cast<std::size_t>(j)] = wrap(e[static_cast<std::size_t>((start + j) % m)] - lead + 1, m);
        if (best.empty() || candidate < best) best = candidate;
    }
    return Permutation(std::move(best));
}

namespace {

void require_period_divides(const Permutation& pi, int p)
{
    const int m = pi.size();
    if (p < 1 || m % p != 0)
        throw std::invalid_argument(std::to_string(p) + " does not divide the length " + std::to_string(m));
    if (p % difference_sequence(pi).effective_period() != 0)
        throw std::invalid_argument("difference sequence of " + pi.to_string() + " has no period dividing " +
                                    std::to_string(p));
}

}  // namespace

Permutation reduce_mod(const Permutation& pi, int p)
{
    require_period_divides(pi, p);
    std::vector<int> out(static_cast<std::size_t>(p));
    for (int i = 1; i <= p; ++i) out[static_cast<std::size_t>(i - 1)] = wrap(pi.at(i), p);
    return Permutation(std::move(out));
}

Permutation timewheel_build(const PeriodicTriple& triple, int m)
{
    const int p = triple.period();
    if (m % p != 0) throw std::invalid_argument("period " + std::to_string(p) + " does not divide " + std::to_string(m));
    const int blocks = m / p;
    if (std::gcd(triple.stride, blocks) != 1)
        throw std::invalid_argument("stride " + std::to_string(triple.stride) + " is not coprime to " +
                                    std::to_string(blocks));
    if (static_cast<int>(triple.offsets.size()) != p) throw std::invalid_argument("need one offset per residue class");
    for (int r : triple.offsets)
        if (r < 0 || r >= blocks) throw std::invalid_argument("offset out of range");
    std::vector<int> out(static_cast<std::size_t>(m));
    for (int i = 1; i <= m; ++i) {
        const int residue = wrap(i, p);
        const long long value = static_cast<long long>(triple.offsets[static_cast<std::size_t>(residue - 1)]) * p +
                                triple.phi.at(residue) + static_cast<long long>(triple.stride) * p * ((i - 1) / p);
        out[static_cast<std::size_t>(i - 1)] = wrap(value, m);
    }
    return Permutation(std::move(out));
}

PeriodicTriple timewheel_recover(const Permutation& pi, int p)
{
    require_period_divides(pi, p);
    const int m = pi.size();
    std::vector<int> phi(static_cast<std::size_t>(p)), offsets(static_cast<std::size_t>(p));
    for (int i = 1; i <= p; ++i) {
        phi[static_cast<std::size_t>(i - 1)] = wrap(pi.at(i), p);
        offsets[static_cast<std::size_t>(i - 1)] = (pi.at(i) - phi[static_cast<std::size_t>(i - 1)]) / p;
    }
    const int step = mod(pi.at(wrap(p + 1, m)) - pi.at(1), m);
    return {Permutation(std::move(phi)), std::move(offsets), mod(step / p, m / p)};
}

bool periodic_has_max_pile(const ContractedPermutation& contracted, int p)
{
    const Permutation& pi = contracted.permutation();
    const int m = pi.size();
    if (m % 2 == 0) throw std::invalid_argument("contracted permutations have odd length");
    require_period_divides(pi, p);
    const Permutation base = uncontract(ContractedPermutation(reduce_mod(pi, p)));
    if (!has_max_pile(base)) return false;
    const int k = mod(pi.at(wrap(p + 1, m)) - pi.at(1), m) / p;
    return std::gcd(k - 1, m / p) == 1;
}

std::int64_t psi(std::int64_t m)
{
    if (m < 1) throw std::invalid_argument("psi needs a positive argument");
    std::int64_t result = m;
    std::int64_t rest = m;
    for (std::int64_t q = 2; q * q <= rest; ++q) {
        if (rest % q != 0) continue;
        while (rest % q == 0) rest /= q;
        result = result / q * (q - 2);
    }
    if (rest > 1) result = result / rest * (rest - 2);
    return result;
}

std::int64_t count_periodic_max_pile(int n, int p)
{
    const int m = 2 * n - 1;
    if (n < 1 || p < 1 || m % p != 0)
        throw std::invalid_argument(std::to_string(p) + " does not divide " + std::to_string(m));
    std::int64_t factorial = 1;
    for (int i = 2; i <= p; ++i) factorial *= i;
    const std::int64_t bases = 2 * factorial / (p + 1);
    const std::int64_t blocks = m / p;
    std::int64_t offsets = 1;
    for (int i = 0; i < p; ++i) offsets *= blocks;
    return bases * offsets * psi(blocks);
}

}  // namespace cds
