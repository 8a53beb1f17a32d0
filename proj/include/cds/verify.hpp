#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cds/json_io.hpp"

namespace cds {

struct Check {
    std::string tag;
    json parameters = json::object();
    bool passed = true;
    std::optional<std::string> counterexample;  // set whenever passed is false
    std::string detail;
};

struct VerificationSuite {
    std::string name;
    std::vector<Check> checks;

    bool passed() const;
};

void to_json(json& j, const Check& c);
void to_json(json& j, const VerificationSuite& s);

struct VerifyOptions {
    int n = 3;              // permutations of length 2n (contracted: 2n-1)
    int max_n = 6;
    unsigned threads = 0;
    std::uint64_t seed = 1;
    int samples = 500;      // sampled states one size up, where a suite samples
};

std::vector<std::string_view> suite_names();

/// Throws std::out_of_range for an unknown suite and LimitExceeded when n > max_n.
VerificationSuite run_suite(std::string_view name, const VerifyOptions& options);

/// Max-pile permutations of length 2n in lexicographic order.
std::vector<Permutation> max_pile_permutations(int n);

/// Every permutation of length m in lexicographic order.
std::vector<Permutation> all_permutations(int m);

}  // namespace cds
