#include "cds/game.hpp"

#include <algorithm>
#include <mutex>

#include "cds/taxonomy.hpp"

namespace cds {

std::string_view to_string(Player p) { return p == Player::one ? "ONE" : "TWO"; }

Player parse_player(std::string_view s)
{
    if (s == "ONE") return Player::one;
    if (s == "TWO") return Player::two;
    throw std::invalid_argument("player must be ONE or TWO, got '" + std::string(s) + "'");
}

std::string_view to_string(EngineMode m) { return m == EngineMode::optimal ? "optimal" : "random"; }

EngineMode parse_engine_mode(std::string_view s)
{
    if (s == "optimal") return EngineMode::optimal;
    if (s == "random") return EngineMode::random;
    throw std::invalid_argument("engine mode must be optimal or random, got '" + std::string(s) + "'");
}

GameState::GameState(Permutation pi, std::vector<int> targets, Player mover)
    : pi_(std::move(pi)), targets_(std::move(targets)), mover_(mover), pile_(strategic_pile(pi_))
{
    std::sort(targets_.begin(), targets_.end());
    if (std::adjacent_find(targets_.begin(), targets_.end()) != targets_.end())
        throw std::invalid_argument("duplicate target");
    for (int t : targets_)
        if (!pile_.contains(t))
            throw std::invalid_argument("target " + std::to_string(t) + " is not in the strategic pile of " +
                                        pi_.to_string());
}

bool GameState::has_target(int p) const { return std::binary_search(targets_.begin(), targets_.end(), p); }

std::vector<Child> children(const GameState& s)
{
    std::vector<Child> out;
    if (s.terminal()) return out;
    const auto pile = s.pile().elements();
    std::vector<int> rest;
    std::set_difference(pile.begin(), pile.end(), s.targets().begin(), s.targets().end(), std::back_inserter(rest));
    for (const auto& c : valid_contexts(s.permutation())) {
        std::vector<int> next_targets;
        for (int x : rest)
            if (x != c.p && x != c.q) next_targets.push_back(x);
        out.push_back({c, GameState(apply_cds(s.permutation(), c), std::move(next_targets), other(s.mover()))});
    }
    return out;
}

GameState play(const GameState& s, PointerContext move)
{
    for (auto& child : children(s))
        if (child.move == move) return std::move(child.state);
    throw std::invalid_argument("(" + std::to_string(move.p) + "," + std::to_string(move.q) +
                                ") is not a valid context of " + s.permutation().to_string());
}

bool terminal_mover_wins(const GameState& s)
{
    const auto index = fixed_point_index(s.permutation());
    if (!index) throw std::invalid_argument(s.permutation().to_string() + " is not a fixed point");
    if (s.permutation().is_identity()) return s.mover() == Player::two;
    return s.has_target(*index);
}

Player finished_winner(const GameState& s) { return terminal_mover_wins(s) ? s.mover() : other(s.mover()); }

std::optional<int> SGCache::find(const std::string& key) const
{
    std::shared_lock lock(mutex_);
    const auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
}

void SGCache::insert(const std::string& key, int value)
{
    std::unique_lock lock(mutex_);
    table_.emplace(key, value);
}

std::size_t SGCache::size() const
{
    std::shared_lock lock(mutex_);
    return table_.size();
}

void SGCache::clear()
{
    std::unique_lock lock(mutex_);
    table_.clear();
}

std::string cache_key(const GameState& s)
{
    std::string key;
    for (int v : s.permutation().entries()) {
        key += std::to_string(v);
        key += ',';
    }
    key += '|';
    for (int t : s.targets()) {
        key += std::to_string(t);
        key += ',';
    }
    // the mover only matters when the game ends at the identity
    if (s.pile().empty()) key += s.mover() == Player::one ? "|1" : "|2";
    return key;
}

Solver::Solver(int exact_limit, std::shared_ptr<SGCache> cache)
    : exact_limit_(exact_limit), cache_(cache ? std::move(cache) : std::make_shared<SGCache>())
{}

bool Solver::within_limit(const GameState& s) const
{
    return s.terminal() || duration(s.permutation()) <= exact_limit_;
}

void Solver::require_exact(const GameState& s) const
{
    if (!within_limit(s))
        throw ExactnessLimitError("game on " + s.permutation().to_string() + " lasts " +
                                  std::to_string(duration(s.permutation())) + " moves, beyond the exact limit of " +
                                  std::to_string(exact_limit_));
}

int Solver::sg_unchecked(const GameState& s)
{
    if (s.terminal()) return terminal_mover_wins(s) ? 1 : 0;
    const std::string key = cache_key(s);
    if (auto hit = cache_->find(key)) return *hit;
    std::vector<int> values;
    for (const auto& child : children(s)) values.push_back(sg_unchecked(child.state));
    std::sort(values.begin(), values.end());
    int mex = 0;
    for (int v : values) {
        if (v == mex) ++mex;
        else if (v > mex) break;
    }
    cache_->insert(key, mex);
    return mex;
}

int Solver::sg(const GameState& s)
{
    require_exact(s);
    return sg_unchecked(s);
}

Player Solver::winner(const GameState& s) { return sg(s) != 0 ? s.mover() : other(s.mover()); }

Hint Solver::best_moves(const GameState& s)
{
    Hint h;
    h.sg = sg(s);
    for (const auto& child : children(s))
        if (sg_unchecked(child.state) == 0) h.winning_moves.push_back(child.move);
    h.losing = h.winning_moves.empty();
    return h;
}

PointerContext Solver::choose(const GameState& s, EngineMode mode, std::mt19937_64& rng)
{
    const auto legal = valid_contexts(s.permutation());
    if (legal.empty()) throw std::invalid_argument("no moves from a fixed point");
    if (mode == EngineMode::random) {
        std::uniform_int_distribution<std::size_t> pick(0, legal.size() - 1);
        return legal[pick(rng)];
    }
    const Hint h = best_moves(s);
    return h.winning_moves.empty() ? legal.front() : h.winning_moves.front();
}

bool minimax_oracle(const GameState& s)
{
    if (s.terminal()) return terminal_mover_wins(s);
    for (const auto& child : children(s))
        if (!minimax_oracle(child.state)) return true;
    return false;
}

int g2m_formula(int m, int a)
{
    if (m < 1 || a < 0 || a > 2 * m - 1)
        throw std::invalid_argument("g2m needs m >= 1 and 0 <= a <= 2m-1, got m = " + std::to_string(m) +
                                    ", a = " + std::to_string(a));
    const bool odd = m % 2 == 1;
    if (a <= m - 2 || (a == m - 1 && odd)) return 0;
    if (a >= m + 1 || (a == m && odd)) return 1;
    return 2;
}

namespace {

// compat[p][q] for linear pointers 1..m-1.
std::vector<std::vector<char>> compatibility_matrix(const Permutation& pi)
{
    const int count = pointer_count(pi.size(), Alphabet::linear);
    std::vector<std::vector<char>> compat(static_cast<std::size_t>(count) + 1,
                                          std::vector<char>(static_cast<std::size_t>(count) + 1, 0));
    for (const auto& c : valid_contexts(pi)) {
        compat[static_cast<std::size_t>(c.p)][static_cast<std::size_t>(c.q)] = 1;
        compat[static_cast<std::size_t>(c.q)][static_cast<std::size_t>(c.p)] = 1;
    }
    return compat;
}

std::optional<std::vector<Pointer>> normalized(const Permutation& pi, std::vector<Pointer> P)
{
    std::sort(P.begin(), P.end());
    P.erase(std::unique(P.begin(), P.end()), P.end());
    for (Pointer p : P)
        if (p < 1 || p > pointer_count(pi.size(), Alphabet::linear)) return std::nullopt;
    return P;
}

bool pairwise_compatible(const std::vector<std::vector<char>>& compat, const std::vector<Pointer>& P)
{
    for (std::size_t i = 0; i < P.size(); ++i)
        for (std::size_t j = i + 1; j < P.size(); ++j)
            if (!compat[static_cast<std::size_t>(P[i])][static_cast<std::size_t>(P[j])]) return false;
    return true;
}

}  // namespace

bool is_p_excellent(const Permutation& pi, const std::vector<Pointer>& pointers)
{
    const auto P = normalized(pi, pointers);
    if (!P) return false;
    const auto compat = compatibility_matrix(pi);
    if (!pairwise_compatible(compat, *P)) return false;
    const int count = pointer_count(pi.size(), Alphabet::linear);
    for (int r = 1; r <= count; ++r) {
        if (std::binary_search(P->begin(), P->end(), r)) continue;
        for (int t = 1; t <= count; ++t)
            if (compat[static_cast<std::size_t>(r)][static_cast<std::size_t>(t)]) return false;
    }
    return strategic_pile(pi).elements() == *P;
}

bool is_p_good(const Permutation& pi, const std::vector<Pointer>& pointers)
{
    const auto P = normalized(pi, pointers);
    if (!P) return false;
    const auto compat = compatibility_matrix(pi);
    if (!pairwise_compatible(compat, *P)) return false;
    const int count = pointer_count(pi.size(), Alphabet::linear);
    for (std::size_t i = 0; i < P->size(); ++i)
        for (std::size_t j = i + 1; j < P->size(); ++j) {
            const auto p = static_cast<std::size_t>((*P)[i]);
            const auto q = static_cast<std::size_t>((*P)[j]);
            for (int r = 1; r <= count; ++r) {
                const auto ru = static_cast<std::size_t>(r);
                if (ru == p || ru == q) continue;
                if (compat[ru][p] != compat[ru][q]) return false;
            }
        }
    const StrategicPile sp = strategic_pile(pi);
    const auto adj = adjacencies(pi);
    for (int r = 1; r <= count; ++r)
        if (!std::binary_search(adj.begin(), adj.end(), r) && !sp.contains(r)) return false;
    return true;
}

SufficientConditions sufficient_conditions(const GameState& s)
{
    SufficientConditions out;
    const Permutation& pi = s.permutation();
    const auto pile = s.pile().elements();
    const long long k = static_cast<long long>(pile.size());
    const long long a = static_cast<long long>(s.targets().size());

    out.three_quarters = k > 0 && 4 * a >= 3 * k;
    out.two_bound = 4 * a < k - 8;
    out.excellent_majority = k > 0 && 2 * a > k && is_p_excellent(pi, pile);

    out.universal = universal_pointers(pi);
    out.c = static_cast<int>(k) - static_cast<int>(out.universal.size());
    const long long P = static_cast<long long>(out.universal.size());
    out.good_margin = k > 0 && out.c >= 0 && P > 3LL * out.c && a >= k / 2 + 1 + 2LL * out.c &&
                      is_p_good(pi, out.universal);

    if (pi.size() % 2 == 0 && has_max_pile(pi)) {
        const int n = pi.size() / 2;
        const long long deficit = binomial2(2 * n - 1) - context_count(pi);
        const int b = static_cast<int>(std::max(1LL, deficit));
        out.b = b;
        out.context_margin = 2 * n - 1 - b > 3 * b && a >= n + 2LL * b;
    }
    return out;
}

Transcript autoplay(Solver& solver, const GameState& start, EngineMode mode, std::mt19937_64& rng)
{
    Transcript t{start.permutation(), start.targets(), {}, Player::two};
    if (start.mover() == Player::two) {
        const auto pile = start.pile().elements();
        t.targets.clear();
        std::set_difference(pile.begin(), pile.end(), start.targets().begin(), start.targets().end(),
                            std::back_inserter(t.targets));
    }
    GameState cur = start;
    while (!cur.terminal()) {
        const PointerContext move = solver.choose(cur, mode, rng);
        t.moves.push_back(move);
        cur = play(cur, move);
    }
    t.winner = finished_winner(cur);
    return t;
}

}  // namespace cds
