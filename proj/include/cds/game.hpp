#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "cds/perm_core.hpp"
#include "cds/pile.hpp"

namespace cds {

enum class Player { one, two };

inline Player other(Player p) { return p == Player::one ? Player::two : Player::one; }
std::string_view to_string(Player p);
Player parse_player(std::string_view s);

/// A position of the game: the permutation and the target set of the player
/// about to move. `mover` labels that player; it only affects the outcome on
/// sortable permutations, where the identity is a win for TWO.
class GameState {
public:
    GameState(Permutation pi, std::vector<int> targets, Player mover = Player::one);

    const Permutation& permutation() const { return pi_; }
    const std::vector<int>& targets() const { return targets_; }  // sorted
    Player mover() const { return mover_; }
    const StrategicPile& pile() const { return pile_; }

    bool terminal() const { return is_fixed_point(pi_); }
    bool has_target(int p) const;

    friend bool operator==(const GameState& a, const GameState& b)
    {
        return a.pi_ == b.pi_ && a.targets_ == b.targets_ && a.mover_ == b.mover_;
    }

private:
    Permutation pi_;
    std::vector<int> targets_;
    Player mover_;
    StrategicPile pile_;
};

struct Child {
    PointerContext move;
    GameState state;
};

/// One child per valid context; the child's targets are (SP \ A) \ {p, q}.
std::vector<Child> children(const GameState& s);

/// The child reached by `move`; throws std::invalid_argument if it is not legal.
GameState play(const GameState& s, PointerContext move);

/// Whether the mover wins a terminal state.
bool terminal_mover_wins(const GameState& s);

class ExactnessLimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Concurrent memo table. Writes are idempotent so racing inserts are harmless.
class SGCache {
public:
    std::optional<int> find(const std::string& key) const;
    void insert(const std::string& key, int value);
    std::size_t size() const;
    void clear();

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::string, int> table_;
};

std::string cache_key(const GameState& s);

struct Hint {
    int sg = 0;
    std::vector<PointerContext> winning_moves;  // children with sg 0
    bool losing = false;                        // set when no winning move exists
};

enum class EngineMode { optimal, random };
std::string_view to_string(EngineMode m);
EngineMode parse_engine_mode(std::string_view s);

class Solver {
public:
    static constexpr int default_exact_limit = 8;

    explicit Solver(int exact_limit = default_exact_limit, std::shared_ptr<SGCache> cache = nullptr);

    int exact_limit() const { return exact_limit_; }
    SGCache& cache() { return *cache_; }

    /// Throws ExactnessLimitError when the remaining game is longer than the cap.
    void require_exact(const GameState& s) const;
    bool within_limit(const GameState& s) const;

    int sg(const GameState& s);
    Player winner(const GameState& s);
    Hint best_moves(const GameState& s);

    /// Engine choice. Optimal mode picks the first winning move, or the first
    /// legal move from a lost position.
    PointerContext choose(const GameState& s, EngineMode mode, std::mt19937_64& rng);

private:
    int sg_unchecked(const GameState& s);

    int exact_limit_;
    std::shared_ptr<SGCache> cache_;
};

/// Plain negamax without memo; true iff the mover wins.
bool minimax_oracle(const GameState& s);

/// Grundy value of a P-excellent position with |P| = 2m - 1 and |A| = a.
int g2m_formula(int m, int a);

/// Pointers are identified with pile elements (p <-> p).
bool is_p_excellent(const Permutation& pi, const std::vector<Pointer>& P);
bool is_p_good(const Permutation& pi, const std::vector<Pointer>& P);

struct SufficientConditions {
    bool three_quarters = false;     // |A| >= 3/4 |SP|
    bool excellent_majority = false; // SP-excellent and |A| > |SP| - |A|
    bool good_margin = false;        // universal pointers good with enough margin
    bool context_margin = false;     // max pile and few missing contexts
    bool two_bound = false;          // |A| < |SP|/4 - 2, mover loses

    std::vector<Pointer> universal;
    int c = 0;                 // |SP| - |universal|
    std::optional<int> b;      // context deficit used by context_margin

    bool any_one() const { return three_quarters || excellent_majority || good_margin || context_margin; }
};

/// Evaluated from the mover's point of view.
SufficientConditions sufficient_conditions(const GameState& s);

struct Transcript {
    Permutation permutation;
    std::vector<int> targets;  // ONE's targets
    std::vector<PointerContext> moves;
    Player winner = Player::two;
};

/// Both sides play `mode` until a fixed point is reached.
Transcript autoplay(Solver& solver, const GameState& start, EngineMode mode, std::mt19937_64& rng);

/// Who wins a finished game given the final state.
Player finished_winner(const GameState& final_state);

}  // namespace cds
