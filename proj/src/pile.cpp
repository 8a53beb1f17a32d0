#include "cds/pile.hpp"

#include <algorithm>
#include <stdexcept>

namespace cds {

CycleMap::CycleMap(std::vector<int> image) : image_(std::move(image))
{
    std::vector<char> seen(image_.size(), 0);
    for (int v : image_) {
        if (v < 0 || static_cast<std::size_t>(v) >= image_.size() || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("cycle map is not a bijection");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

std::vector<std::vector<int>> CycleMap::cycles() const
{
    std::vector<std::vector<int>> out;
    std::vector<char> seen(image_.size(), 0);
    for (int start = 0; start < size(); ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        std::vector<int> cycle;
        for (int x = start; !seen[static_cast<std::size_t>(x)]; x = (*this)(x)) {
            seen[static_cast<std::size_t>(x)] = 1;
            cycle.push_back(x);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

int CycleMap::cycle_count() const { return static_cast<int>(cycles().size()); }

CycleMap CycleMap::after(const CycleMap& other) const
{
    if (other.size() != size()) throw std::invalid_argument("cycle maps of different sizes");
    std::vector<int> image(image_.size());
    for (int x = 0; x < size(); ++x) image[static_cast<std::size_t>(x)] = (*this)(other(x));
    return CycleMap(std::move(image));
}

std::string CycleMap::to_string() const
{
    std::string out;
    for (const auto& cycle : cycles()) {
        if (cycle.size() < 2) continue;
        out += '(';
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            if (i) out += ' ';
            out += std::to_string(cycle[i]);
        }
        out += ')';
    }
    return out.empty() ? "()" : out;
}

CycleMap cyclic_successor(int n)
{
    std::vector<int> image(static_cast<std::size_t>(n) + 1);
    for (int x = 0; x <= n; ++x) image[static_cast<std::size_t>(x)] = x == n ? 0 : x + 1;
    return CycleMap(std::move(image));
}

CycleMap reverse_reading_cycle(const Permutation& pi)
{
    const int n = pi.size();
    std::vector<int> image(static_cast<std::size_t>(n) + 1);
    image[0] = pi.at(n);
    for (int i = n; i >= 2; --i) image[static_cast<std::size_t>(pi.at(i))] = pi.at(i - 1);
    image[static_cast<std::size_t>(pi.at(1))] = 0;
    return CycleMap(std::move(image));
}

CycleMap c_map(const Permutation& pi) { return reverse_reading_cycle(pi).after(cyclic_successor(pi.size())); }

std::vector<int> StrategicPile::elements() const
{
    std::vector<int> out = trace_;
    std::sort(out.begin(), out.end());
    return out;
}

bool StrategicPile::contains(int x) const { return std::find(trace_.begin(), trace_.end(), x) != trace_.end(); }

namespace {

// C(x) = (entry before x+1, or 0 if x+1 leads) for x < n, and C(n) = last entry.
int c_step(const Permutation& pi, int x)
{
    const int n = pi.size();
    if (x == n) return pi.at(n);
    const int pos = pi.position_of(x + 1);
    return pos == 1 ? 0 : pi.at(pos - 1);
}

}  // namespace

StrategicPile strategic_pile(const Permutation& pi)
{
    const CycleMap c = c_map(pi);
    const int n = pi.size();
    std::vector<int> trace;
    int x = c(n);
    while (x != 0 && x != n) {
        trace.push_back(x);
        x = c(x);
    }
    if (x == n) trace.clear();
    return StrategicPile(std::move(trace));
}

int strategic_pile_size(const Permutation& pi)
{
    const int n = pi.size();
    int count = 0;
    int x = c_step(pi, n);
    while (x != 0 && x != n) {
        ++count;
        x = c_step(pi, x);
    }
    return x == n ? 0 : count;
}

bool is_sortable(const Permutation& pi) { return strategic_pile_size(pi) == 0; }

std::vector<Permutation> reachable_fixed_points(const Permutation& pi)
{
    const StrategicPile sp = strategic_pile(pi);
    std::vector<Permutation> out;
    if (sp.empty()) {
        out.push_back(Permutation::identity(pi.size()));
        return out;
    }
    for (int p : sp.elements()) out.push_back(Permutation::rotation(pi.size(), p));
    return out;
}

int max_pile_size(int n) { return n < 2 ? 0 : n % 2 == 0 ? n - 1 : n - 2; }

bool has_max_pile(const Permutation& pi) { return pi.size() >= 2 && strategic_pile_size(pi) == max_pile_size(pi.size()); }

ContractedPermutation contract(const Permutation& pi)
{
    const int m = pi.size();
    if (m % 2 != 0 || !has_max_pile(pi))
        throw std::invalid_argument("contraction needs an even-length permutation with maximal strategic pile, got " +
                                    pi.to_string());
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(m - 1));
    for (int v : pi.entries())
        if (v != m) out.push_back(v);
    return ContractedPermutation(Permutation(std::move(out)));
}

Permutation uncontract(const ContractedPermutation& pi)
{
    const Permutation& p = pi.permutation();
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(p.size()) + 1);
    for (int v : p.entries()) {
        if (v == 1) out.push_back(p.size() + 1);
        out.push_back(v);
    }
    return Permutation(std::move(out));
}

int duration(const Permutation& pi)
{
    if (is_fixed_point(pi)) throw std::invalid_argument(pi.to_string() + " is a cds fixed point");
    const int n = pi.size();
    const int cycles = c_map(pi).cycle_count();
    const int moves = (n + 1 - cycles) / 2;
    return is_sortable(pi) ? moves : moves - 1;
}

MaxPileReport max_pile_properties_check(const Permutation& pi)
{
    if (!has_max_pile(pi))
        throw std::invalid_argument(pi.to_string() + " does not have a maximal strategic pile");
    const int n = pi.size();
    MaxPileReport report;
    const auto adj = adjacencies(pi);
    if (n % 2 == 1) {
        report.item3 = adj.size() == 1;
        return report;
    }
    report.applicable_even = true;
    const int top = pi.position_of(n);
    report.item1 = top < n && pi.at(top + 1) == 1;
    report.item2 = adj.empty();
    const int pile = strategic_pile_size(pi);
    for (const auto& c : valid_contexts(pi)) {
        const Permutation next = apply_cds(pi, c);
        const auto next_adj = adjacencies(next);
        const bool four = next_adj.size() == adj.size() + 2 && strategic_pile_size(next) == pile - 2;
        const Permutation reduced = reduce_all_adjacencies(next);
        const bool five = reduced.size() == n - 2 && has_max_pile(reduced);
        if (!four) report.item4 = false;
        if (!five) report.item5 = false;
        if ((!four || !five) && !report.failing_move) report.failing_move = c;
    }
    return report;
}

}  // namespace cds
