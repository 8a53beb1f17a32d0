// One PASS/FAIL line per acceptance criterion. Library results are compared
// against the brute-force oracles in oracles.hpp wherever a value is derived.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>

#include "cds/game.hpp"
#include "cds/symmetry.hpp"
#include "cds/taxonomy.hpp"
#include "oracles.hpp"

using namespace cds;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
    bool ok = true;
    std::string note;

    void require(bool cond, const std::string& why)
    {
        if (!cond && ok) {
            ok = false;
            note = why;
        }
    }
};

int failures = 0;

void criterion(const std::string& name, double budget_s, const std::function<Outcome()>& body)
{
    const auto start = Clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.ok = false;
        out.note = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (budget_s > 0 && secs >= budget_s) out.require(false, "took longer than " + std::to_string(budget_s) + " s");
    if (!out.ok) ++failures;
    std::printf("%s  %-22s %8.3f s  %s\n", out.ok ? "PASS" : "FAIL", name.c_str(), secs, out.note.c_str());
    std::fflush(stdout);
}

std::string hist_string(const std::map<int, std::int64_t>& h)
{
    std::string s = "{";
    for (const auto& [k, v] : h) s += (s.size() > 1 ? ", " : "") + std::to_string(k) + ":" + std::to_string(v);
    return s + "}";
}

std::string list(const std::vector<int>& v)
{
    std::string s;
    for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

std::vector<oracle::Perm> contracted_max_pile(int n)
{
    std::vector<oracle::Perm> out;
    for (const auto& pi : oracle::all_perms(2 * n - 1))
        if (oracle::max_pile(oracle::uncontract(pi))) out.push_back(pi);
    return out;
}

}  // namespace

int main()
{
    criterion("census-n3", 1.0, [] {
        Outcome o;
        CensusOptions opt;
        opt.threads = 1;
        const auto r = census(3, opt);
        const std::map<int, std::int64_t> want{{10, 5}, {6, 25}, {5, 10}};
        o.require(r.histogram == want, "histogram " + hist_string(r.histogram));
        o.require(r.total == 40, "total " + std::to_string(r.total));
        o.note = hist_string(r.histogram) + " total " + std::to_string(r.total);
        return o;
    });

    criterion("census-n4", 30.0, [] {
        Outcome o;
        CensusOptions opt;
        opt.threads = 1;
        const auto r = census(4, opt);
        for (auto [k, v] : std::map<int, std::int64_t>{{21, 7}, {17, 49}, {7, 14}}) {
            const auto it = r.histogram.find(k);
            o.require(it != r.histogram.end() && it->second == v, "count at k=" + std::to_string(k));
        }
        o.require(r.total == 1260, "total " + std::to_string(r.total));
        for (int k : {20, 19, 18}) o.require(!r.histogram.contains(k), "k=" + std::to_string(k) + " present");
        if (o.ok) o.note = hist_string(r.histogram) + " total " + std::to_string(r.total);
        return o;
    });

    criterion("census-oracle", 0, [] {
        Outcome o;
        for (int n : {3, 4}) {
            const auto r = census(n);
            const auto want = oracle::census(n);
            o.require(r.histogram == want, "n=" + std::to_string(n) + " oracle " + hist_string(want));
        }
        return o;
    });

    criterion("periodic-counts", 0, [] {
        Outcome o;
        o.require(count_periodic_max_pile(3, 1) == 15 && oracle::periodic_count(3, 1) == 15, "(3,1)");
        o.require(count_periodic_max_pile(4, 1) == 35 && oracle::periodic_count(4, 1) == 35, "(4,1)");
        for (int m = 1; m <= 10000; ++m)
            if (psi(m) != oracle::psi(m)) {
                o.require(false, "psi differs at m=" + std::to_string(m));
                break;
            }
        return o;
    });

    criterion("worked-examples", 0, [] {
        Outcome o;
        auto eq = [&](const std::string& what, const std::string& got, const std::string& want) {
            o.require(got == want, what + ": got " + got);
        };
        const auto ex1 = Permutation::parse("[6 3 5 1 2 4]");
        eq("pointer word", pointer_word(ex1).to_string(), "(5,6)(2,3)(3,4)(4,5)(5,6)(1,2)(1,2)(2,3)(3,4)(4,5)");
        eq("oracle word", oracle::word_string(ex1.vector()), "(5,6)(2,3)(3,4)(4,5)(5,6)(1,2)(1,2)(2,3)(3,4)(4,5)");
        const auto swapped = apply_cds(ex1, {3, 5});
        eq("cds", swapped.to_string(), "[1 2 5 6 3 4]");
        eq("oracle cds", Permutation(oracle::cds(ex1.vector(), 3, 5)).to_string(), "[1 2 5 6 3 4]");
        eq("reduction", reduce_adjacency(swapped, 3).to_string(), "[1 2 4 5 3]");
        const auto ex7 = Permutation::parse("[8 1 5 2 4 3 7 6]");
        eq("C map", c_map(ex7).to_string(), "(0 8 6 3 2 4 1 5 7)");
        eq("SP", "{" + list(strategic_pile(ex7).trace()) + "}", "{6,3,2,4,1,5,7}");
        eq("oracle SP", "{" + list(oracle::pile_trace(ex7.vector())) + "}", "{6,3,2,4,1,5,7}");
        eq("action", act({2, 3}, Permutation::parse("[5 4 1 3 2]")).to_string(), "[1 5 3 2 4]");
        eq("oracle action", Permutation(oracle::act({5, 4, 1, 3, 2}, 2, 3)).to_string(), "[1 5 3 2 4]");
        const auto ex5 = Permutation::parse("[2 4 3 8 1 9 5 7 6]");
        const auto d = difference_sequence(ex5);
        eq("differences", list(d.values), "2,8,5,2,8,5,2,8,5");
        eq("oracle differences", list(oracle::differences(ex5.vector())), "2,8,5,2,8,5,2,8,5");
        eq("period", d.period ? std::to_string(*d.period) : "none", "3");
        eq("reduction mod 3", reduce_mod(ex5, 3).to_string(), "[2 1 3]");
        return o;
    });

    criterion("orbit-stabilizer", 0, [] {
        Outcome o;
        std::size_t cases = 0;
        for (int n : {3, 4})
            for (const auto& v : contracted_max_pile(n)) {
                ++cases;
                const int m = static_cast<int>(v.size());
                const int p = oracle::period(v);
                const auto size = static_cast<std::int64_t>(oracle::orbit(v).size());
                o.require(size == (p < m ? std::int64_t{m} * p : std::int64_t{m} * m), "orbit size at " + list(v));
                o.require(orbit_size(Permutation(v)) == size, "library orbit size at " + list(v));
                const Stabilizer s = stabilizer(Permutation(v));
                std::set<std::pair<int, int>> generated;
                for (int k = 0; k < s.order; ++k)
                    generated.insert({k * s.generator.shift % m, k * s.generator.translation % m});
                o.require(generated == oracle::stabilizer(v), "stabilizer at " + list(v));
            }
        if (o.ok) o.note = std::to_string(cases) + " permutations";
        return o;
    });

    criterion("game-coherence", 10.0, [] {
        Outcome o;
        Solver solver;
        std::size_t states = 0;
        std::set<oracle::Perm> seen;
        for (const auto& v : oracle::max_pile_perms(3)) {
            const Permutation pi(v);
            const auto sp = oracle::pile(v);
            for (const auto& A : oracle::subsets(sp)) {
                ++states;
                const GameState s(pi, A);
                const bool exact = solver.sg(s) != 0;
                o.require(exact == minimax_oracle(s), "sg vs minimax at " + list(v) + " A=" + list(A));
                o.require(exact == oracle::one_wins(v, std::set<int>(A.begin(), A.end()), true),
                          "sg vs oracle at " + list(v) + " A=" + list(A));
            }
            o.require(oracle::playout_lengths(v) == std::set<int>{duration(pi)}, "playout length at " + list(v));
            std::vector<oracle::Perm> stack{v};
            while (!stack.empty()) {
                const auto cur = stack.back();
                stack.pop_back();
                if (!seen.insert(cur).second) continue;
                const auto cs = oracle::contexts(cur);
                if (cs.empty()) continue;
                std::vector<oracle::Perm> next;
                for (auto [p, q] : cs) next.push_back(oracle::cds(cur, p, q));
                const auto here = oracle::pile(cur);
                if (here.size() > 1)
                    for (int x : here) {
                        bool kept = false;
                        for (const auto& nx : next) {
                            const auto pl = oracle::pile(nx);
                            kept = kept || std::find(pl.begin(), pl.end(), x) != pl.end();
                        }
                        o.require(kept, "retention at " + list(cur));
                    }
                stack.insert(stack.end(), next.begin(), next.end());
            }
        }
        if (o.ok) o.note = std::to_string(states) + " states";
        return o;
    });

    criterion("g2m", 0, [] {
        Outcome o;
        Solver solver(100);
        std::size_t cases = 0;
        for (int m = 2; m <= 4; ++m) {
            const auto orbit_members = orbit(evens_then_odds(m));
            for (const auto& c : orbit_members) {
                const Permutation pi = uncontract(ContractedPermutation(c));
                const auto P = oracle::pile(pi.vector());
                if (!is_p_excellent(pi, P)) {
                    o.require(false, "not P-excellent: " + pi.to_string());
                    continue;
                }
                for (const auto& A : oracle::subsets(P)) {
                    ++cases;
                    const int a = static_cast<int>(A.size());
                    o.require(solver.sg(GameState(pi, A)) == g2m_formula(m, a),
                              "m=" + std::to_string(m) + " " + pi.to_string() + " A=" + list(A));
                }
            }
        }
        if (o.ok) o.note = std::to_string(cases) + " positions";
        return o;
    });

    criterion("sufficient-conditions", 120.0, [] {
        Outcome o;
        Solver solver(100);
        std::size_t fired = 0;
        auto check = [&](const oracle::Perm& v, const std::vector<int>& A) {
            const GameState s(Permutation(v), A);
            if (!sufficient_conditions(s).any_one()) return;
            ++fired;
            o.require(oracle::one_wins(v, std::set<int>(A.begin(), A.end()), true),
                      "fired but ONE loses at " + list(v) + " A=" + list(A));
            o.require(solver.winner(s) == Player::one, "solver disagrees at " + list(v) + " A=" + list(A));
        };
        for (const auto& v : oracle::max_pile_perms(3))
            for (const auto& A : oracle::subsets(oracle::pile(v))) check(v, A);
        const auto big = oracle::max_pile_perms(4);
        std::mt19937_64 rng(2024);
        for (int i = 0; i < 500; ++i) {
            const auto& v = big[rng() % big.size()];
            std::vector<int> A;
            // alternate uniform subsets with dense ones so every condition gets exercised
            const unsigned keep = i % 2 == 0 ? 2 : 4;
            for (int x : oracle::pile(v))
                if (rng() % keep != 0) A.push_back(x);
            check(v, A);
        }
        if (o.ok) o.note = std::to_string(fired) + " firings";
        return o;
    });

    std::printf("%s\n", failures == 0 ? "ALL PASS" : (std::to_string(failures) + " FAILED").c_str());
    return failures == 0 ? 0 : 1;
}
