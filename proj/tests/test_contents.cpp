#include <catch2/catch_amalgamated.hpp>

#include "subword/contents.hpp"
#include "subword/word.hpp"

#include "testutil.hpp"

using namespace subword;
using namespace subword::letters;
namespace st = subword::testing;

namespace {

Int oracle_sum(const Word& w, Pattern pat, OracleBounds bounds = {}) {
    Int sum = 0;
    for (const auto& o : enumerate_occurrences(w, pat, bounds)) sum += o.sign;
    return sum;
}

} // namespace

TEST_CASE("oracle enumeration", "[contents][oracle]") {
    SECTION("single ab occurrence") {
        auto occ = enumerate_occurrences(Word{a, b}, {1, true});
        REQUIRE(occ.size() == 1);
        CHECK(occ[0] == Occurrence{{1, 2}, +1});
    }
    SECTION("repeats allowed at +1 letters") {
        auto occ = enumerate_occurrences(Word{a, a}, {2, false});
        REQUIRE(occ.size() == 3);
        CHECK(occ[0] == Occurrence{{1, 1}, +1});
        CHECK(occ[1] == Occurrence{{1, 2}, +1});
        CHECK(occ[2] == Occurrence{{2, 2}, +1});
    }
    SECTION("repeats forbidden at -1 letters") {
        CHECK(enumerate_occurrences(Word{a_inv}, {2, false}).empty());
    }
    SECTION("the empty pattern has the one empty occurrence") {
        auto occ = enumerate_occurrences(Word{a, b_inv, a_inv}, {0, false});
        REQUIRE(occ.size() == 1);
        CHECK(occ[0] == Occurrence{{}, +1});
    }
    SECTION("signs multiply along the occurrence") {
        auto occ = enumerate_occurrences(Word{a_inv, b_inv}, {1, true});
        REQUIRE(occ.size() == 1);
        CHECK(occ[0] == Occurrence{{1, 2}, +1});
        occ = enumerate_occurrences(Word{a_inv, b}, {1, true});
        REQUIRE(occ.size() == 1);
        CHECK(occ[0].sign == -1);
    }
}

TEST_CASE("oracle bounds", "[contents][oracle]") {
    Word long_word;
    long_word.letters.assign(17, a);
    CHECK_THROWS_AS(enumerate_occurrences(long_word, {1, false}), oracle_bound_error);
    CHECK_THROWS_AS(enumerate_occurrences(Word{a}, {7, false}), oracle_bound_error);
    CHECK_NOTHROW(enumerate_occurrences(long_word, {1, false}, {32, 6}));
}

TEST_CASE("content examples", "[contents]") {
    CHECK(content(commutator(Word{a}, Word{b}), {1, true}) == 1);
    CHECK(content(Word{b}, {1, true}) == 0);
    SECTION("a^0-content is 1 for any word") {
        st::Rng rng(7);
        for (int i = 0; i < 50; ++i) CHECK(content(st::random_word(rng, 30), {0, false}) == 1);
    }
    SECTION("cont(a^k, (a)) = 1 for all k") {
        for (int k = 0; k <= 6; ++k) CHECK(content(Word{a}, {k, false}) == 1);
    }
    SECTION("cont(a^k, (a^-1)): -1 at k = 1, 0 beyond") {
        CHECK(content(Word{a_inv}, {1, false}) == -1);
        for (int k = 2; k <= 6; ++k) CHECK(content(Word{a_inv}, {k, false}) == 0);
    }
    SECTION("repeat rule on a^m: nondecreasing k-sequences, C(m+k-1, k) of them") {
        Word aaa{a, a, a};
        CHECK(content(aaa, {2, false}) == st::binomial(4, 2));
        CHECK(content(aaa, {5, false}) == st::binomial(7, 5));
    }
}

TEST_CASE("oracle and DP agree", "[contents][property]") {
    st::Rng rng(31337);
    for (int i = 0; i < 400; ++i) {
        Word w = st::random_word(rng, 12);
        for (int k = 0; k <= 4; ++k) {
            CHECK(content(w, {k, false}) == oracle_sum(w, {k, false}));
            CHECK(content(w, {k, true}) == oracle_sum(w, {k, true}));
        }
    }
}

TEST_CASE("contents are invariant under free reduction", "[contents][property]") {
    st::Rng rng(4242);
    for (int i = 0; i < 250; ++i) {
        Word w = st::random_word(rng, 64);
        const Word& r = reduce(w).word();
        for (int k = 0; k <= 6; ++k) {
            CHECK(content(w, {k, false}) == content(r, {k, false}));
            CHECK(content(w, {k, true}) == content(r, {k, true}));
        }
    }
}

TEST_CASE("concatenation laws", "[contents][property]") {
    st::Rng rng(555);
    for (int i = 0; i < 250; ++i) {
        Word u = st::random_word(rng, 24);
        Word v = st::random_word(rng, 24);
        Word uv = concat(u, v);
        for (int k = 0; k <= 4; ++k) {
            Int ab_sum = content(u, {k, true});
            Int a_sum = 0;
            for (int l = 0; l <= k; ++l) {
                ab_sum += content(u, {l, false}) * content(v, {k - l, true});
                a_sum += content(u, {l, false}) * content(v, {k - l, false});
            }
            CHECK(content(uv, {k, true}) == ab_sum);
            CHECK(content(uv, {k, false}) == a_sum);
        }
    }
}

TEST_CASE("b exponent sum", "[contents]") {
    CHECK(b_exponent_sum(Word{b, b, a_inv}) == 2);
    CHECK(b_exponent_sum(commutator(Word{a}, Word{b})) == 0);
    CHECK(b_exponent_sum(Word{b_inv}) == -1);
    SECTION("kills commutators") {
        st::Rng rng(88);
        for (int i = 0; i < 200; ++i)
            CHECK(b_exponent_sum(commutator(st::random_word(rng, 16),
                                            st::random_word(rng, 16))) == 0);
    }
    SECTION("additive under concatenation") {
        st::Rng rng(89);
        for (int i = 0; i < 200; ++i) {
            Word u = st::random_word(rng, 32), v = st::random_word(rng, 32);
            CHECK(b_exponent_sum(concat(u, v)) == b_exponent_sum(u) + b_exponent_sum(v));
        }
    }
}

TEST_CASE("pattern parsing and printing", "[contents][parse]") {
    CHECK(parse_pattern("a^2 b") == Pattern{2, true});
    CHECK(parse_pattern("a^0") == Pattern{0, false});
    CHECK(parse_pattern("b") == Pattern{0, true});
    CHECK(parse_pattern("a") == Pattern{1, false});
    CHECK(parse_pattern("ab") == Pattern{1, true});
    CHECK(parse_pattern("") == Pattern{0, false});
    CHECK(parse_pattern("a^10b") == Pattern{10, true});
    CHECK_THROWS_AS(parse_pattern("a^-1"), parse_error);
    CHECK_THROWS_AS(parse_pattern("ba"), parse_error);
    CHECK_THROWS_AS(parse_pattern("a^"), parse_error);
    CHECK(to_string(Pattern{2, true}) == "a^2 b");
    CHECK(to_string(Pattern{0, false}) == "a^0");
}
