#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "cds/game.hpp"
#include "cds/json_io.hpp"
#include "cds/service.hpp"
#include "cds/verify.hpp"

namespace py = pybind11;
using namespace cds;

namespace {

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Alphabet alphabet(bool cyclic) { return cyclic ? Alphabet::cyclic : Alphabet::linear; }

std::vector<std::pair<int, int>> pairs(const std::vector<PointerContext>& cs)
{
    std::vector<std::pair<int, int>> out;
    for (const auto& c : cs) out.emplace_back(c.p, c.q);
    return out;
}

GameState state(const std::vector<int>& perm, const std::vector<int>& targets)
{
    return GameState(Permutation(perm), targets);
}

Solver& shared_solver()
{
    static Solver solver(100);
    return solver;
}

}  // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Context directed swaps on permutations and the cds game";

    py::register_exception<LimitExceeded>(m, "LimitExceeded");
    py::register_exception<ExactnessLimitError>(m, "ExactnessLimitError");

    m.def("pointer_word", [](const std::vector<int>& p, bool cyclic) {
        return pointer_word(Permutation(p), alphabet(cyclic)).to_string();
    }, py::arg("perm"), py::arg("cyclic") = false);
    m.def("valid_contexts", [](const std::vector<int>& p, bool cyclic) {
        return pairs(valid_contexts(Permutation(p), alphabet(cyclic)));
    }, py::arg("perm"), py::arg("cyclic") = false);
    m.def("apply_cds", [](const std::vector<int>& p, int a, int b, bool cyclic) {
        return apply_cds(Permutation(p), {a, b}, alphabet(cyclic)).vector();
    }, py::arg("perm"), py::arg("p"), py::arg("q"), py::arg("cyclic") = false);
    m.def("strategic_pile", [](const std::vector<int>& p) { return strategic_pile(Permutation(p)).trace(); },
          "Pile elements in cycle order");
    m.def("is_sortable", [](const std::vector<int>& p) { return is_sortable(Permutation(p)); });
    m.def("has_max_pile", [](const std::vector<int>& p) { return has_max_pile(Permutation(p)); });
    m.def("duration", [](const std::vector<int>& p) { return duration(Permutation(p)); });
    m.def("contract", [](const std::vector<int>& p) { return contract(Permutation(p)).permutation().vector(); });
    m.def("uncontract", [](const std::vector<int>& p) {
        return uncontract(ContractedPermutation(Permutation(p))).vector();
    });
    m.def("analyze", [](const std::vector<int>& p) { return to_py(analysis_json(Permutation(p))); });

    m.def("act", [](const std::vector<int>& p, int a, int b) {
        return act({a, b}, Permutation(p)).vector();
    }, py::arg("perm"), py::arg("a"), py::arg("b"));
    m.def("difference_sequence", [](const std::vector<int>& p) {
        const auto d = difference_sequence(Permutation(p));
        return py::make_tuple(d.values, d.period ? py::cast(*d.period) : py::none());
    });
    m.def("orbit_size", [](const std::vector<int>& p) { return orbit_size(Permutation(p)); });
    m.def("stabilizer", [](const std::vector<int>& p) {
        const auto s = stabilizer(Permutation(p));
        return py::make_tuple(py::make_tuple(s.generator.shift, s.generator.translation), s.order);
    });
    m.def("canonical_representative", [](const std::vector<int>& p) {
        return canonical_representative(Permutation(p)).vector();
    });
    m.def("psi", &psi);
    m.def("count_periodic_max_pile", &count_periodic_max_pile, py::arg("n"), py::arg("p"));

    m.def("census", [](int n, int max_n, unsigned threads) {
        CensusOptions o;
        o.max_n = max_n;
        o.threads = threads;
        CensusReport r;
        {
            py::gil_scoped_release release;
            r = census(n, o);
        }
        return to_py(json(r));
    }, py::arg("n"), py::arg("max_n") = 6, py::arg("threads") = 0);
    m.def("classify", [](const std::vector<int>& p) {
        return std::string(to_string(classify(ContractedPermutation(Permutation(p)))));
    });

    m.def("sg", [](const std::vector<int>& p, const std::vector<int>& a) { return shared_solver().sg(state(p, a)); },
          py::arg("perm"), py::arg("targets"));
    m.def("winner", [](const std::vector<int>& p, const std::vector<int>& a) {
        return std::string(to_string(shared_solver().winner(state(p, a))));
    }, py::arg("perm"), py::arg("targets"));
    m.def("minimax", [](const std::vector<int>& p, const std::vector<int>& a) { return minimax_oracle(state(p, a)); },
          py::arg("perm"), py::arg("targets"));
    m.def("best_moves", [](const std::vector<int>& p, const std::vector<int>& a) {
        return pairs(shared_solver().best_moves(state(p, a)).winning_moves);
    }, py::arg("perm"), py::arg("targets"));
    m.def("g2m_formula", &g2m_formula, py::arg("m"), py::arg("a"));
    m.def("sufficient_conditions", [](const std::vector<int>& p, const std::vector<int>& a) {
        return to_py(json(sufficient_conditions(state(p, a))));
    }, py::arg("perm"), py::arg("targets"));

    m.def("suite_names", [] {
        std::vector<std::string> out;
        for (auto s : suite_names()) out.emplace_back(s);
        return out;
    });
    m.def("run_suite", [](const std::string& name, int n, std::uint64_t seed) {
        VerifyOptions o;
        o.n = n;
        o.seed = seed;
        VerificationSuite s;
        {
            py::gil_scoped_release release;
            s = run_suite(name, o);
        }
        return to_py(json(s));
    }, py::arg("name"), py::arg("n") = 3, py::arg("seed") = 1);

    py::class_<GameService>(m, "GameService", "In-process game service; route() mirrors the REST API")
        .def(py::init([](int exact_limit, std::size_t capacity) {
            ServiceConfig c;
            c.exact_limit = exact_limit;
            c.capacity = capacity;
            return std::make_unique<GameService>(c);
        }), py::arg("exact_limit") = Solver::default_exact_limit, py::arg("capacity") = 1024)
        .def("route", [](GameService& s, const std::string& method, const std::string& path, const std::string& body) {
            const Response r = s.route(method, path, body);
            return py::make_tuple(r.status, to_py(r.body));
        }, py::arg("method"), py::arg("path"), py::arg("body") = "");
}
