#include "cds/service.hpp"

#include <atomic>
#include <csignal>
#include <ctime>
#include <fstream>
#include <httplib.h>

namespace cds {

namespace {

Response error(int status, const std::string& message) { return {status, json{{"error", message}}}; }

std::string iso_time(std::chrono::system_clock::time_point t)
{
    const std::time_t secs = std::chrono::system_clock::to_time_t(t);
    std::tm tm{};
    gmtime_r(&secs, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

long long epoch_ms(std::chrono::system_clock::time_point t)
{
    return std::chrono::duration_cast<std::chrono::milliseconds>(t.time_since_epoch()).count();
}

std::chrono::system_clock::time_point from_epoch_ms(long long ms)
{
    return std::chrono::system_clock::time_point(std::chrono::milliseconds(ms));
}

}  // namespace

GameSession::GameSession(std::string id_, GameState start, Player human, EngineMode mode, std::uint64_t seed)
    : id(std::move(id_)), initial(start), state(std::move(start)), human_role(human), engine(mode),
      created(std::chrono::system_clock::now()), updated(created), rng(seed)
{}

GameService::GameService(ServiceConfig config)
    : config_(std::move(config)), solver_(config_.exact_limit), id_rng_(std::random_device{}())
{
    if (config_.snapshot && std::filesystem::exists(*config_.snapshot)) load_snapshot();
}

std::string GameService::fresh_id()
{
    std::lock_guard lock(rng_mutex_);
    static constexpr char hex[] = "0123456789abcdef";
    std::string id;
    for (int half = 0; half < 2; ++half) {
        std::uint64_t bits = id_rng_();
        for (int i = 0; i < 16; ++i, bits >>= 4) id += hex[bits & 0xF];
    }
    return id;
}

std::uint64_t GameService::next_seed()
{
    std::lock_guard lock(rng_mutex_);
    if (config_.seed) return (*config_.seed)++;
    return id_rng_();
}

std::size_t GameService::session_count() const
{
    std::shared_lock lock(store_mutex_);
    return sessions_.size();
}

std::shared_ptr<GameSession> GameService::find(const std::string& id) const
{
    std::shared_lock lock(store_mutex_);
    const auto it = sessions_.find(id);
    return it == sessions_.end() ? nullptr : it->second;
}

json GameService::state_json(const GameSession& s) const
{
    const GameState& st = s.state;
    json j;
    j["id"] = s.id;
    j["permutation"] = st.permutation();
    j["targets"] = st.targets();
    j["mover"] = to_string(st.mover());
    j["one_targets"] = s.initial.targets();
    j["strategic_pile"] = st.pile().elements();
    j["legal_moves"] = moves_json(valid_contexts(st.permutation()));
    j["finished"] = st.terminal();
    if (st.terminal()) j["winner"] = to_string(finished_winner(st));
    json log = json::array();
    Player by = s.initial.mover();
    for (const auto& m : s.log) {
        log.push_back({{"p", m.p}, {"q", m.q}, {"by", to_string(by)}});
        by = other(by);
    }
    j["move_log"] = log;
    j["human_role"] = to_string(s.human_role);
    j["engine_mode"] = to_string(s.engine);
    j["created"] = iso_time(s.created);
    j["updated"] = iso_time(s.updated);
    return j;
}

void GameService::engine_turns(GameSession& s)
{
    while (!s.state.terminal() && s.state.mover() != s.human_role) {
        const PointerContext m = solver_.choose(s.state, s.engine, s.rng);
        s.state = play(s.state, m);
        s.log.push_back(m);
    }
    s.updated = std::chrono::system_clock::now();
}

Response GameService::create(const json& request)
{
    if (!request.is_object()) return error(400, "request body must be a JSON object");
    std::shared_ptr<GameSession> session;
    try {
        if (!request.contains("permutation")) throw std::invalid_argument("missing permutation");
        Permutation pi(int_list(request["permutation"], "permutation"));
        std::vector<int> targets;
        if (request.contains("targets")) targets = int_list(request["targets"], "targets");
        const Player human = request.contains("human_role") && request["human_role"].is_string()
                                 ? parse_player(request["human_role"].get<std::string>())
                                 : Player::one;
        const EngineMode mode = request.contains("engine") && request["engine"].is_string()
                                    ? parse_engine_mode(request["engine"].get<std::string>())
                                    : EngineMode::optimal;
        GameState start(std::move(pi), std::move(targets), Player::one);
        if (mode == EngineMode::optimal && !solver_.within_limit(start))
            return error(413, "game lasts " + std::to_string(duration(start.permutation())) +
                                  " moves; optimal play is exact only up to " + std::to_string(solver_.exact_limit()));
        session = std::make_shared<GameSession>(fresh_id(), std::move(start), human, mode, next_seed());
    } catch (const std::invalid_argument& e) {
        return error(400, e.what());
    }
    {
        std::unique_lock lock(store_mutex_);
        if (sessions_.size() >= config_.capacity) return error(409, "session store is full");
        sessions_.emplace(session->id, session);
    }
    std::lock_guard guard(session->mutex);
    engine_turns(*session);
    return {201, json{{"id", session->id}, {"state", state_json(*session)}}};
}

Response GameService::get(const std::string& id)
{
    const auto s = find(id);
    if (!s) return error(404, "unknown game " + id);
    std::lock_guard guard(s->mutex);
    return {200, state_json(*s)};
}

Response GameService::move(const std::string& id, const json& request)
{
    const auto s = find(id);
    if (!s) return error(404, "unknown game " + id);
    PointerContext m;
    try {
        m = context_from_json(request);
    } catch (const std::invalid_argument& e) {
        return error(400, e.what());
    }
    std::lock_guard guard(s->mutex);
    if (s->state.terminal()) return error(409, "game is finished");
    if (s->state.mover() != s->human_role) return error(409, "not your turn");
    const auto legal = valid_contexts(s->state.permutation());
    if (std::find(legal.begin(), legal.end(), m) == legal.end()) {
        Response r = error(422, "(" + std::to_string(m.p) + "," + std::to_string(m.q) + ") is not a legal move");
        r.body["legal_moves"] = moves_json(legal);
        return r;
    }
    s->state = play(s->state, m);
    s->log.push_back(m);
    engine_turns(*s);
    return {200, state_json(*s)};
}

Response GameService::hint(const std::string& id)
{
    const auto s = find(id);
    if (!s) return error(404, "unknown game " + id);
    std::lock_guard guard(s->mutex);
    if (s->state.terminal()) return error(409, "game is finished");
    if (!solver_.within_limit(s->state)) return error(413, "position too large for exact hints");
    return {200, json(solver_.best_moves(s->state))};
}

Response GameService::remove(const std::string& id)
{
    std::unique_lock lock(store_mutex_);
    if (sessions_.erase(id) == 0) return error(404, "unknown game " + id);
    return {204, nullptr};
}

Response GameService::route(std::string_view method, std::string_view path, std::string_view body)
{
    constexpr std::string_view root = "/api/games";
    if (path.substr(0, root.size()) != root) return error(404, "no such endpoint");
    std::string_view rest = path.substr(root.size());
    if (!rest.empty() && rest.back() == '/') rest.remove_suffix(1);

    auto parse_body = [&]() -> std::optional<json> {
        if (body.empty()) return json::object();
        auto j = json::parse(body, nullptr, false);
        if (j.is_discarded()) return std::nullopt;
        return j;
    };

    try {
        if (rest.empty()) {
            if (method != "POST") return error(405, "method not allowed");
            const auto j = parse_body();
            if (!j) return error(400, "malformed JSON");
            return create(*j);
        }
        if (rest.front() != '/') return error(404, "no such endpoint");
        rest.remove_prefix(1);
        const auto slash = rest.find('/');
        const std::string id(rest.substr(0, slash));
        const std::string_view action = slash == std::string_view::npos ? "" : rest.substr(slash + 1);
        if (action.empty()) {
            if (method == "GET") return get(id);
            if (method == "DELETE") return remove(id);
            return error(405, "method not allowed");
        }
        if (action == "moves") {
            if (method != "POST") return error(405, "method not allowed");
            const auto j = parse_body();
            if (!j) return error(400, "malformed JSON");
            return move(id, *j);
        }
        if (action == "hint") {
            if (method != "GET") return error(405, "method not allowed");
            return hint(id);
        }
        return error(404, "no such endpoint");
    } catch (const ExactnessLimitError& e) {
        return error(413, e.what());
    } catch (const std::exception& e) {
        return error(500, e.what());
    }
}

void GameService::save_snapshot() const
{
    if (!config_.snapshot) return;
    json sessions = json::array();
    {
        std::shared_lock lock(store_mutex_);
        for (const auto& [id, s] : sessions_) {
            std::lock_guard guard(s->mutex);
            sessions.push_back({{"id", id},
                                {"permutation", s->initial.permutation()},
                                {"targets", s->initial.targets()},
                                {"human_role", to_string(s->human_role)},
                                {"engine", to_string(s->engine)},
                                {"moves", moves_json(s->log)},
                                {"created", epoch_ms(s->created)},
                                {"updated", epoch_ms(s->updated)}});
        }
    }
    const auto tmp = config_.snapshot->string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) throw std::runtime_error("cannot write snapshot " + tmp);
        out << json{{"sessions", sessions}}.dump(1) << '\n';
    }
    std::filesystem::rename(tmp, *config_.snapshot);
}

std::size_t GameService::load_snapshot()
{
    if (!config_.snapshot) return 0;
    std::ifstream in(*config_.snapshot);
    if (!in) throw std::runtime_error("cannot read snapshot " + config_.snapshot->string());
    const json doc = json::parse(in);
    std::size_t restored = 0;
    for (const auto& e : doc.at("sessions")) {
        GameState start(Permutation(int_list(e.at("permutation"), "permutation")), int_list(e.at("targets"), "targets"));
        auto s = std::make_shared<GameSession>(e.at("id").get<std::string>(), start,
                                               parse_player(e.at("human_role").get<std::string>()),
                                               parse_engine_mode(e.at("engine").get<std::string>()), next_seed());
        for (const auto& m : e.at("moves")) {
            const PointerContext c = context_from_json(m);
            s->state = play(s->state, c);
            s->log.push_back(c);
        }
        s->created = from_epoch_ms(e.at("created").get<long long>());
        s->updated = from_epoch_ms(e.at("updated").get<long long>());
        std::unique_lock lock(store_mutex_);
        sessions_[s->id] = s;
        ++restored;
    }
    return restored;
}

namespace {
std::atomic<httplib::Server*> active_server{nullptr};
void stop_server(int)
{
    if (auto* s = active_server.load()) s->stop();
}
}  // namespace

void serve(GameService& service, const std::string& host, int port, const std::function<void(int)>& ready)
{
    httplib::Server server;
    auto handler = [&service](const httplib::Request& req, httplib::Response& res) {
        const Response r = service.route(req.method, req.path, req.body);
        res.status = r.status;
        if (r.status != 204) res.set_content(r.body.dump(), "application/json");
    };
    const std::string pattern = R"(/api/games(/.*)?)";
    server.Get(pattern, handler);
    server.Post(pattern, handler);
    server.Delete(pattern, handler);

    active_server = &server;
    std::signal(SIGINT, stop_server);
    std::signal(SIGTERM, stop_server);
    const int bound = port == 0 ? server.bind_to_any_port(host) : (server.bind_to_port(host, port) ? port : -1);
    bool ok = bound > 0;
    if (ok) {
        if (ready) ready(bound);
        ok = server.listen_after_bind();
    }
    active_server = nullptr;
    service.save_snapshot();
    if (!ok) throw std::runtime_error("cannot listen on " + host + ":" + std::to_string(port));
}

void stop_serving() { stop_server(0); }

}  // namespace cds
