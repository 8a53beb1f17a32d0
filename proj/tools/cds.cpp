#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <random>

#include "cds/game.hpp"
#include "cds/json_io.hpp"
#include "cds/service.hpp"
#include "cds/verify.hpp"

using namespace cds;

namespace {

constexpr int exit_fail = 1;
constexpr int exit_usage = 2;

struct Common {
    bool json_out = false;
    int max_n = 6;
    unsigned threads = 0;
    std::uint64_t seed = 1;
};

std::string join(const std::vector<int>& v, const char* sep = " ")
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
    return s;
}

std::string moves_text(const std::vector<PointerContext>& moves)
{
    std::string s;
    for (const auto& m : moves) s += (s.empty() ? "" : " ") + std::string("{") + std::to_string(m.p) + "," + std::to_string(m.q) + "}";
    return s.empty() ? "-" : s;
}

int cmd_analyze(const Common& c, const std::string& text)
{
    const json j = analysis_json(Permutation::parse(text));
    if (c.json_out) {
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "permutation        " << text << '\n'
              << "pointer word       " << j["pointer_word"].get<std::string>() << '\n'
              << "adjacencies        " << join(j["adjacencies"].get<std::vector<int>>()) << '\n'
              << "valid contexts     " << j["context_count"] << ": " << j["valid_contexts"].dump() << '\n'
              << "strategic pile     {" << join(j["strategic_pile"]["elements"].get<std::vector<int>>(), ",")
              << "} trace " << join(j["strategic_pile"]["trace"].get<std::vector<int>>()) << '\n'
              << "sortable           " << j["sortable"] << '\n'
              << "fixed point        " << j["fixed_point"] << '\n'
              << "max pile           " << j["max_pile"] << '\n'
              << "duration           " << j["duration"] << '\n'
              << "universal pointers " << join(j["universal_pointers"].get<std::vector<int>>()) << '\n';
    if (j.contains("contraction")) std::cout << "contraction        " << Permutation(j["contraction"].get<std::vector<int>>()).to_string() << '\n';
    if (j.contains("contracted_context_count"))
        std::cout << "contracted count   " << j["contracted_context_count"] << '\n'
                  << "classification     " << j["classification"].get<std::string>() << '\n';
    return 0;
}

int cmd_apply(const Common& c, const std::string& text, int p, int q, bool cyclic)
{
    const Permutation pi = Permutation::parse(text);
    const Permutation out = apply_cds(pi, {p, q}, cyclic ? Alphabet::cyclic : Alphabet::linear);
    if (c.json_out) std::cout << json{{"permutation", pi}, {"move", PointerContext(p, q)}, {"result", out}}.dump(2) << '\n';
    else std::cout << out.to_string() << '\n';
    return 0;
}

int cmd_census(const Common& c, int n, bool accelerated)
{
    CensusOptions o;
    o.max_n = c.max_n;
    o.threads = c.threads;
    o.with_orbits = true;
    o.orbit_accelerated = accelerated;
    const CensusReport r = census(n, o);
    const auto div = divisibility_checks(r);
    bool parity = true;
    for (const auto& rec : r.orbits) parity = parity && parity_checks(ContractedPermutation(rec.representative)).all_even;
    const bool gap = near_maximal_gap_holds(r);
    if (c.json_out) {
        json j = r;
        j.erase("orbits");
        j["orbit_count"] = r.orbits.size();
        j["checks"] = {{"divisibility", div.passed()}, {"parity", parity}, {"near_maximal_gap", gap}};
        j["failures"] = div.failures;
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "n = " << n << ", length " << 2 * n << ", " << r.orbits.size() << " orbits\n";
        std::cout << "     k  members\n";
        for (auto it = r.histogram.rbegin(); it != r.histogram.rend(); ++it)
            std::cout << std::setw(6) << it->first << "  " << it->second << '\n';
        std::cout << " total  " << r.total << '\n'
                  << "divisibility " << (div.passed() ? "pass" : "FAIL") << ", parity " << (parity ? "pass" : "FAIL")
                  << ", near-maximal gap " << (gap ? "pass" : "FAIL") << '\n';
        for (const auto& f : div.failures) std::cout << "  " << f << '\n';
    }
    return div.passed() && parity && gap ? 0 : exit_fail;
}

int cmd_verify(const Common& c, const std::string& suite, int n, int samples)
{
    VerifyOptions o;
    o.n = n;
    o.max_n = c.max_n;
    o.threads = c.threads;
    o.seed = c.seed;
    o.samples = samples;
    std::vector<std::string_view> names;
    if (suite == "all") names = suite_names();
    else names.push_back(suite);
    for (auto name : names)
        if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
            throw CLI::ValidationError("unknown suite '" + std::string(name) + "'");

    bool ok = true;
    json all = json::array();
    for (auto name : names) {
        VerificationSuite s;
        try {
            s = run_suite(name, o);
        } catch (const LimitExceeded& e) {
            if (names.size() == 1) throw;
            continue;  // suites with a narrower n range are skipped under "all"
        }
        ok = ok && s.passed();
        if (c.json_out) {
            all.push_back(s);
            continue;
        }
        std::cout << (s.passed() ? "PASS " : "FAIL ") << s.name << '\n';
        for (const auto& ch : s.checks) {
            std::cout << "  " << (ch.passed ? "ok   " : "FAIL ") << ch.tag << ' ' << ch.parameters.dump();
            if (!ch.detail.empty()) std::cout << "  " << ch.detail;
            if (ch.counterexample) std::cout << "  counterexample " << *ch.counterexample;
            std::cout << '\n';
        }
    }
    if (c.json_out) std::cout << (all.size() == 1 ? all[0] : all).dump(2) << '\n';
    return ok ? 0 : exit_fail;
}

int cmd_game(const Common& c, const std::string& mode, const std::string& text, const std::vector<int>& targets,
             const std::string& engine, int exact_limit)
{
    const GameState s(Permutation::parse(text), targets);
    Solver solver(exact_limit);
    if (mode == "autoplay") {
        std::mt19937_64 rng(c.seed);
        const Transcript t = autoplay(solver, s, parse_engine_mode(engine), rng);
        if (c.json_out) std::cout << json(t).dump(2) << '\n';
        else
            std::cout << "moves  " << moves_text(t.moves) << " (" << t.moves.size() << ")\n"
                      << "winner " << to_string(t.winner) << '\n';
        return 0;
    }
    const Hint h = solver.best_moves(s);
    const Player w = h.sg != 0 ? s.mover() : other(s.mover());
    if (c.json_out) {
        json j = h;
        j["permutation"] = s.permutation();
        j["targets"] = s.targets();
        j["finished"] = s.terminal();
        j["winner"] = to_string(w);
        j["conditions"] = sufficient_conditions(s);
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "sg         " << h.sg << '\n'
                  << "winner     " << to_string(w) << '\n'
                  << "finished   " << (s.terminal() ? "yes" : "no") << '\n'
                  << "best moves " << moves_text(h.winning_moves) << '\n';
    }
    return 0;
}

int cmd_orbit(const Common& c, const std::string& text, bool members)
{
    const Permutation pi = Permutation::parse(text);
    const auto d = difference_sequence(pi);
    const Stabilizer st = stabilizer(pi);
    json j{{"permutation", pi},
           {"difference_sequence", d.values},
           {"period", d.period ? json(*d.period) : json(nullptr)},
           {"orbit_size", orbit_size(pi)},
           {"stabilizer", {{"generator", {st.generator.shift, st.generator.translation}}, {"order", st.order}}},
           {"canonical", canonical_representative(pi)}};
    if (members) j["members"] = orbit(pi);
    if (c.json_out) {
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "difference sequence " << join(d.values) << '\n'
              << "period              " << (d.period ? std::to_string(*d.period) : "none") << '\n'
              << "orbit size          " << orbit_size(pi) << '\n'
              << "stabilizer          <(" << st.generator.shift << "," << st.generator.translation << ")>, order "
              << st.order << '\n'
              << "canonical           " << canonical_representative(pi).to_string() << '\n';
    if (members)
        for (const auto& m : orbit(pi)) std::cout << "  " << m.to_string() << '\n';
    return 0;
}

int cmd_psi(const Common& c, long long m)
{
    if (c.json_out) std::cout << json{{"m", m}, {"psi", psi(m)}}.dump() << '\n';
    else std::cout << psi(m) << '\n';
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"cds: permutation sorting by context directed swaps, and the cds game"};
    app.require_subcommand(1);
    Common common;
    app.add_flag("--json", common.json_out, "machine-readable output");
    app.add_option("--max-n", common.max_n, "cap on n for exhaustive work")->capture_default_str();
    app.add_option("--threads", common.threads, "worker threads, 0 for all cores");
    app.add_option("--seed", common.seed, "seed for sampled suites and random engines")->capture_default_str();

    std::string perm;
    std::function<int()> run;

    auto* analyze = app.add_subcommand("analyze", "pointer word, contexts, strategic pile and classification");
    analyze->add_option("perm", perm, "permutation, e.g. \"[8 1 5 2 4 3 7 6]\"")->required();
    analyze->callback([&] { run = [&] { return cmd_analyze(common, perm); }; });

    int p = 0, q = 0;
    bool cyclic = false;
    auto* apply = app.add_subcommand("apply", "apply one cds move");
    apply->add_option("perm", perm)->required();
    apply->add_option("p", p)->required();
    apply->add_option("q", q)->required();
    apply->add_flag("--cyclic", cyclic, "read pointers in the cyclic alphabet");
    apply->callback([&] { run = [&] { return cmd_apply(common, perm, p, q, cyclic); }; });

    int n = 3;
    bool accelerated = false;
    auto* census_cmd = app.add_subcommand("census", "count max-pile permutations of length 2n by context count");
    census_cmd->add_option("n", n)->required()->check(CLI::PositiveNumber);
    census_cmd->add_flag("--orbit-accelerated", accelerated, "enumerate one representative per orbit");
    census_cmd->callback([&] { run = [&] { return cmd_census(common, n, accelerated); }; });

    std::string suite;
    int samples = 500;
    auto* verify = app.add_subcommand("verify", "run a verification suite (or \"all\")");
    verify->add_option("suite", suite)->required();
    verify->add_option("--n", n, "half length")->capture_default_str();
    verify->add_option("--samples", samples, "sampled states for sampling suites")->capture_default_str();
    verify->callback([&] { run = [&] { return cmd_verify(common, suite, n, samples); }; });

    std::string game_mode, engine = "optimal";
    std::vector<int> targets;
    int exact_limit = Solver::default_exact_limit;
    auto* game = app.add_subcommand("game", "solve a position or play it out");
    game->add_option("mode", game_mode)->required()->check(CLI::IsMember({"solve", "autoplay"}));
    game->add_option("perm", perm)->required();
    game->add_option("--targets", targets, "comma-separated target set")->delimiter(',');
    game->add_option("--engine", engine)->check(CLI::IsMember({"optimal", "random"}))->capture_default_str();
    game->add_option("--exact-limit", exact_limit)->capture_default_str();
    game->callback([&] { run = [&] { return cmd_game(common, game_mode, perm, targets, engine, exact_limit); }; });

    bool members = false;
    auto* orbit_cmd = app.add_subcommand("orbit", "orbit and stabilizer under the cyclic shift-translate action");
    orbit_cmd->add_option("perm", perm)->required();
    orbit_cmd->add_flag("--members", members, "list every orbit member");
    orbit_cmd->callback([&] { run = [&] { return cmd_orbit(common, perm, members); }; });

    auto* periodic = app.add_subcommand("periodic", "periodic difference sequences");
    periodic->require_subcommand(1);
    std::string phi;
    std::vector<int> offsets;
    int stride = 1, length = 0, period = 1;
    auto* build = periodic->add_subcommand("build", "permutation from (phi, offsets, stride)");
    build->add_option("--phi", phi)->required();
    build->add_option("--offsets", offsets)->delimiter(',')->required();
    build->add_option("--stride", stride)->required();
    build->add_option("--length", length)->required();
    build->callback([&] {
        run = [&] {
            const Permutation out = timewheel_build({Permutation::parse(phi), offsets, stride}, length);
            std::cout << (common.json_out ? json(out).dump() : out.to_string()) << '\n';
            return 0;
        };
    });
    auto* recover = periodic->add_subcommand("recover", "(phi, offsets, stride) of a periodic permutation");
    recover->add_option("perm", perm)->required();
    recover->add_option("--p", period)->required();
    recover->callback([&] {
        run = [&] {
            const PeriodicTriple t = timewheel_recover(Permutation::parse(perm), period);
            if (common.json_out) std::cout << json(t).dump() << '\n';
            else std::cout << "phi " << t.phi.to_string() << "\noffsets " << join(t.offsets) << "\nstride " << t.stride << '\n';
            return 0;
        };
    });
    auto* count = periodic->add_subcommand("count", "contracted max-pile permutations with period dividing p");
    count->add_option("--n", n)->required();
    count->add_option("--p", period)->required();
    count->callback([&] {
        run = [&] {
            const auto value = count_periodic_max_pile(n, period);
            std::cout << (common.json_out ? json{{"n", n}, {"p", period}, {"count", value}}.dump() : std::to_string(value)) << '\n';
            return 0;
        };
    });

    long long psi_arg = 1;
    auto* psi_cmd = app.add_subcommand("psi", "number of c in 1..m with c and c-1 both units mod m");
    psi_cmd->add_option("m", psi_arg)->required()->check(CLI::PositiveNumber);
    psi_cmd->callback([&] { run = [&] { return cmd_psi(common, psi_arg); }; });

    int port = 8723;
    std::string host = "127.0.0.1";
    std::string snapshot;
    std::size_t capacity = 1024;
    auto* serve_cmd = app.add_subcommand("serve", "run the game service");
    serve_cmd->add_option("--port", port)->capture_default_str();
    serve_cmd->add_option("--host", host)->capture_default_str();
    serve_cmd->add_option("--exact-limit", exact_limit)->capture_default_str();
    serve_cmd->add_option("--snapshot", snapshot, "JSON file restored at start and written at shutdown");
    serve_cmd->add_option("--capacity", capacity)->capture_default_str();
    serve_cmd->callback([&] {
        run = [&] {
            if (const char* env = std::getenv("CDS_PORT")) port = std::stoi(env);
            ServiceConfig cfg;
            cfg.exact_limit = exact_limit;
            cfg.capacity = capacity;
            if (!snapshot.empty()) cfg.snapshot = snapshot;
            GameService service(cfg);
            serve(service, host, port, [&](int bound) { std::cerr << "listening on " << host << ':' << bound << std::endl; });
            return 0;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }
    try {
        return run();
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const LimitExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const ExactnessLimitError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_fail;
    }
}
