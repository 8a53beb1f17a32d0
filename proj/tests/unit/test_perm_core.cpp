#include <doctest.h>

#include "cds/perm_core.hpp"
#include "oracles.hpp"

using namespace cds;

namespace {

std::vector<std::pair<int, int>> as_pairs(const std::vector<PointerContext>& cs)
{
    std::vector<std::pair<int, int>> out;
    for (const auto& c : cs) out.emplace_back(c.p, c.q);
    return out;
}

}  // namespace

TEST_CASE("permutation parsing and validation")
{
    CHECK(Permutation::parse("[8 1 5 2 4 3 7 6]") == Permutation{8, 1, 5, 2, 4, 3, 7, 6});
    CHECK(Permutation::parse("3 1 2") == Permutation{3, 1, 2});
    CHECK(Permutation::parse("3,1,2") == Permutation{3, 1, 2});
    CHECK_THROWS_AS(Permutation::parse("[1 1 2]"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("[1 x 2]"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation::parse("[]"), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({2, 3}), std::invalid_argument);
    CHECK(Permutation::rotation(6, 2) == Permutation{3, 4, 5, 6, 1, 2});
    CHECK(Permutation::rotation(4, 4).is_identity());
    CHECK(Permutation{2, 1, 3}.to_string() == "[2 1 3]");
}

TEST_CASE("pointer words")
{
    CHECK(pointer_word(Permutation{6, 3, 5, 1, 2, 4}).to_string() ==
          "(5,6)(2,3)(3,4)(4,5)(5,6)(1,2)(1,2)(2,3)(3,4)(4,5)");
    CHECK(pointer_word(Permutation{1, 2, 3}).to_string() == "(1,2)(1,2)(2,3)(2,3)");
    CHECK(pointer_word(Permutation{8, 5, 2, 4, 6, 7, 3, 1}).to_string() ==
          "(7,8)(4,5)(5,6)(1,2)(2,3)(3,4)(4,5)(5,6)(6,7)(6,7)(7,8)(2,3)(3,4)(1,2)");
    CHECK(pointer_word(Permutation{2, 4, 1, 3, 5}, Alphabet::cyclic).size() == 10);

    for (int m = 1; m <= 6; ++m)
        for (const auto& v : oracle::all_perms(m)) {
            const Permutation pi(v);
            CHECK(pointer_word(pi).to_string() == oracle::word_string(v, false));
            CHECK(pointer_word(pi, Alphabet::cyclic).to_string() == oracle::word_string(v, true));
            CHECK(occurrence_table(pointer_word(pi)).size() == static_cast<std::size_t>(m));
        }
}

TEST_CASE("occurrence bookkeeping")
{
    const auto word = pointer_word(Permutation{6, 3, 5, 1, 2, 4});
    for (const auto& s : word.symbols()) {
        // left pointers sit in the gap before the entry, right ones after it
        CHECK(s.boundary == s.position / 2);
    }
    const auto table = occurrence_table(word);
    REQUIRE(table.size() == 6);
    for (int p = 1; p <= 5; ++p) CHECK(table[static_cast<std::size_t>(p)][0].position < table[static_cast<std::size_t>(p)][1].position);
}

TEST_CASE("pointer word ignoring a pointer")
{
    CHECK(pointer_word_ignoring(Permutation{6, 3, 5, 1, 2, 4}, 2).to_string() ==
          "(5,6)(4,5)(5,6)(1,2)(1,2)(2,3)(3,4)(4,5)");
    // p = (1,2) drops the symbols of the entry 2
    CHECK(pointer_word_ignoring(Permutation{1, 2, 3}, 1).to_string() == "(1,2)(2,3)");
    CHECK_THROWS_AS(pointer_word_ignoring(Permutation{1, 2, 3}, 3), std::invalid_argument);
}

TEST_CASE("adjacencies and their reduction")
{
    CHECK(adjacencies(Permutation{1, 2, 5, 6, 3, 4}) == std::vector<int>{1, 3, 5});
    CHECK(reduce_adjacency(Permutation{1, 2, 5, 6, 3, 4}, 3) == Permutation{1, 2, 4, 5, 3});
    CHECK(reduced_pointer_word(Permutation{8, 5, 2, 4, 6, 7, 3, 1}, 6).to_string() ==
          "(6,7)(4,5)(5,6)(1,2)(2,3)(3,4)(4,5)(5,6)(6,7)(2,3)(3,4)(1,2)");
    CHECK_THROWS_AS(reduce_adjacency(Permutation{2, 1}, 1), std::invalid_argument);
    CHECK(adjacencies(Permutation{3, 1, 2}, Alphabet::cyclic) == std::vector<int>{1, 3});
    CHECK(reduce_all_adjacencies(Permutation{1, 2, 3}) == Permutation{1});
    for (const auto& v : oracle::all_perms(6)) {
        const auto reduced = reduce_all_adjacencies(Permutation(v));
        CHECK(adjacencies(reduced).empty());
    }
}

TEST_CASE("valid contexts match the interleaving oracle")
{
    CHECK(is_valid_context(Permutation{6, 3, 5, 1, 2, 4}, {5, 3}));
    CHECK(valid_contexts(Permutation{2, 4, 1, 3, 5}, Alphabet::cyclic).size() == 10);
    CHECK(valid_contexts(Permutation{2, 4, 6, 1, 3, 5}).size() == 10);
    for (int m = 1; m <= 7; ++m)
        for (const auto& v : oracle::all_perms(m)) {
            const Permutation pi(v);
            CHECK(as_pairs(valid_contexts(pi)) == oracle::contexts(v, false));
            CHECK(as_pairs(valid_contexts(pi, Alphabet::cyclic)) == oracle::contexts(v, true));
        }
}

TEST_CASE("cds swaps the delimited blocks")
{
    CHECK(apply_cds(Permutation{6, 3, 5, 1, 2, 4}, {5, 3}) == Permutation{1, 2, 5, 6, 3, 4});
    CHECK_THROWS_AS(apply_cds(Permutation{1, 2, 3}, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(PointerContext(3, 3), std::invalid_argument);
    for (int m = 2; m <= 7; ++m)
        for (const auto& v : oracle::all_perms(m))
            for (auto [p, q] : oracle::contexts(v)) {
                const auto got = apply_cds(Permutation(v), {p, q}).vector();
                CHECK(got == oracle::cds(v, p, q));
                // both pointers become adjacencies
                CHECK(oracle::adjacency(got, p));
                CHECK(oracle::adjacency(got, q));
            }
}

TEST_CASE("fixed points are the identity and the rotations")
{
    for (int m = 1; m <= 7; ++m)
        for (const auto& v : oracle::all_perms(m)) {
            const Permutation pi(v);
            const int idx = oracle::rotation_index(v);
            CHECK(is_fixed_point(pi) == (idx != 0));
            if (idx) CHECK(fixed_point_index(pi) == idx);
            else CHECK_FALSE(fixed_point_index(pi).has_value());
        }
    CHECK(fixed_point_index(Permutation::rotation(8, 3)) == 3);
    CHECK(fixed_point_index(Permutation::identity(5)) == 5);
}
