#include "cds/json_io.hpp"

namespace cds {

std::vector<int> int_list(const json& j, const char* what)
{
    if (!j.is_array()) throw std::invalid_argument(std::string(what) + " must be an array of integers");
    std::vector<int> out;
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw std::invalid_argument(std::string(what) + " must contain only integers");
        const auto x = v.get<long long>();
        if (x < std::numeric_limits<int>::min() || x > std::numeric_limits<int>::max())
            throw std::invalid_argument(std::string(what) + " entry out of range");
        out.push_back(static_cast<int>(x));
    }
    return out;
}

void to_json(json& j, const Permutation& pi) { j = pi.vector(); }

void from_json(const json& j, Permutation& pi) { pi = Permutation(int_list(j, "permutation")); }

void to_json(json& j, const PointerContext& c) { j = json{{"p", c.p}, {"q", c.q}}; }

PointerContext context_from_json(const json& j)
{
    if (!j.is_object() || !j.contains("p") || !j.contains("q") || !j["p"].is_number_integer() ||
        !j["q"].is_number_integer())
        throw std::invalid_argument("a move is an object {\"p\": int, \"q\": int}");
    return PointerContext(j["p"].get<int>(), j["q"].get<int>());
}

json moves_json(const std::vector<PointerContext>& moves)
{
    json out = json::array();
    for (const auto& m : moves) out.push_back(m);
    return out;
}

void to_json(json& j, const Hint& h)
{
    j = json{{"sg", h.sg}, {"winning_moves", moves_json(h.winning_moves)}, {"losing", h.losing}};
}

void to_json(json& j, const SufficientConditions& s)
{
    j = json{{"three_quarters", s.three_quarters},
             {"excellent_majority", s.excellent_majority},
             {"good_margin", s.good_margin},
             {"context_margin", s.context_margin},
             {"two_bound", s.two_bound},
             {"universal_pointers", s.universal},
             {"c", s.c},
             {"b", s.b ? json(*s.b) : json(nullptr)}};
}

void to_json(json& j, const Transcript& t)
{
    j = json{{"permutation", t.permutation},
             {"targets", t.targets},
             {"moves", moves_json(t.moves)},
             {"winner", to_string(t.winner)}};
}

void to_json(json& j, const CensusReport& r)
{
    json hist = json::object();
    for (const auto& [k, c] : r.histogram) hist[std::to_string(k)] = c;
    j = json{{"n", r.n}, {"histogram", hist}, {"total", r.total}};
    if (!r.orbits.empty()) {
        json orbits = json::array();
        for (const auto& o : r.orbits)
            orbits.push_back({{"representative", o.representative}, {"size", o.size}, {"k", o.k}});
        j["orbits"] = orbits;
    }
}

void to_json(json& j, const PeriodicTriple& t)
{
    j = json{{"phi", t.phi}, {"offsets", t.offsets}, {"stride", t.stride}};
}

void to_json(json& j, const StrategicPile& sp)
{
    j = json{{"elements", sp.elements()}, {"trace", sp.trace()}};
}

json analysis_json(const Permutation& pi)
{
    json j;
    j["permutation"] = pi;
    j["pointer_word"] = pointer_word(pi).to_string();
    j["adjacencies"] = adjacencies(pi);
    const auto contexts = valid_contexts(pi);
    j["valid_contexts"] = moves_json(contexts);
    j["context_count"] = contexts.size();
    j["strategic_pile"] = strategic_pile(pi);
    j["sortable"] = is_sortable(pi);
    j["fixed_point"] = is_fixed_point(pi);
    if (auto index = fixed_point_index(pi)) j["fixed_point_index"] = *index;
    j["max_pile"] = has_max_pile(pi);
    j["duration"] = is_fixed_point(pi) ? json(0) : json(duration(pi));
    j["universal_pointers"] = universal_pointers(pi);

    std::optional<ContractedPermutation> contracted;
    if (pi.size() % 2 == 0 && has_max_pile(pi)) {
        contracted = contract(pi);
        j["contraction"] = contracted->permutation();
    } else if (pi.size() % 2 == 1 && has_max_pile(uncontract(ContractedPermutation(pi)))) {
        contracted = ContractedPermutation(pi);
        j["uncontraction"] = uncontract(*contracted);
    }
    if (contracted) {
        j["contracted_context_count"] = context_count(*contracted);
        j["classification"] = to_string(classify(*contracted));
    }
    return j;
}

}  // namespace cds
