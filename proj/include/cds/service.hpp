#pragma once

#include <chrono>
#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <string_view>

#include "cds/game.hpp"
#include "cds/json_io.hpp"

namespace cds {

struct ServiceConfig {
    int exact_limit = Solver::default_exact_limit;
    std::size_t capacity = 1024;
    std::optional<std::filesystem::path> snapshot;
    std::optional<std::uint64_t> seed;  // engine randomness; nondeterministic when unset
};

struct GameSession {
    std::string id;
    GameState initial;
    GameState state;
    Player human_role = Player::one;
    EngineMode engine = EngineMode::optimal;
    std::vector<PointerContext> log;
    std::chrono::system_clock::time_point created;
    std::chrono::system_clock::time_point updated;
    std::mt19937_64 rng;
    std::mutex mutex;

    GameSession(std::string id, GameState start, Player human, EngineMode mode, std::uint64_t seed);
};

struct Response {
    int status = 200;
    json body;
};

/// Session store plus REST routing, independent of any HTTP library.
class GameService {
public:
    explicit GameService(ServiceConfig config = {});

    Response route(std::string_view method, std::string_view path, std::string_view body);

    Response create(const json& request);
    Response get(const std::string& id);
    Response move(const std::string& id, const json& request);
    Response hint(const std::string& id);
    Response remove(const std::string& id);

    std::size_t session_count() const;
    const ServiceConfig& config() const { return config_; }
    Solver& solver() { return solver_; }

    void save_snapshot() const;
    /// Replays every stored move log; returns the number of sessions restored.
    std::size_t load_snapshot();

private:
    std::shared_ptr<GameSession> find(const std::string& id) const;
    json state_json(const GameSession& s) const;
    void engine_turns(GameSession& s);
    std::string fresh_id();
    std::uint64_t next_seed();

    ServiceConfig config_;
    Solver solver_;
    mutable std::shared_mutex store_mutex_;
    std::map<std::string, std::shared_ptr<GameSession>> sessions_;
    std::mutex rng_mutex_;
    std::mt19937_64 id_rng_;
};

/// Blocks serving the REST API until interrupted; snapshots on the way out.
/// Port 0 picks a free port; `ready` receives the bound port before serving.
void serve(GameService& service, const std::string& host, int port, const std::function<void(int)>& ready = {});

/// Stops a running serve() from another thread.
void stop_serving();

}  // namespace cds
