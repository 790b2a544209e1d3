#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include "subword/algebra_r.hpp"
#include "subword/json_io.hpp"

#include "testutil.hpp"

using namespace subword;
namespace st = subword::testing;

TEST_CASE("defining relations", "[algebra_r]") {
    const int n = 4;
    RElement x = RElement::x(n), y = RElement::y(n), one = RElement::one(n);

    SECTION("(1+y)(1-y) = 1") {
        CHECK((one + y) * (one - y) == one);
        CHECK((one - y) * (one + y) == one);
    }
    SECTION("yx = 0 and y^2 = 0, but xy is the xy monomial") {
        CHECK((y * x).is_zero());
        CHECK((y * y).is_zero());
        RElement xy(n);
        xy.q[1] = 1;
        CHECK(x * y == xy);
    }
    SECTION("q part of a product sees only the constant term of p'") {
        st::Rng rng(11);
        for (int i = 0; i < 100; ++i) {
            RElement qy(n), p(n);
            qy.q = st::random_relement(rng, n).q;
            p.p = st::random_relement(rng, n).p;
            RElement prod = qy * p;
            CHECK(prod.p == RElement(n).p);
            for (std::size_t j = 0; j < prod.q.size(); ++j)
                CHECK(prod.q[j] == qy.q[j] * p.p[0]);
        }
    }
}

TEST_CASE("truncation-order mismatch is an error", "[algebra_r]") {
    CHECK_THROWS_AS(RElement::one(3) * RElement::one(4), std::invalid_argument);
    CHECK_THROWS_AS(RElement::one(3) + RElement::one(4), std::invalid_argument);
    CHECK(truncated(geometric(8), 3) == geometric(3));
}

TEST_CASE("geometric series", "[algebra_r]") {
    CHECK(geometric(2) == RElement(2, {1, 1, 1}, {}));
    CHECK(geometric(0) == RElement::one(0));
    SECTION("exact telescoping against 1 - x below the truncation degree") {
        for (int n : {1, 4, 8}) {
            RElement one_minus_x = RElement::one(n) - RElement::x(n);
            CHECK(geometric(n) * one_minus_x == RElement::one(n));
            CHECK(one_minus_x * geometric(n) == RElement::one(n));
        }
    }
}

TEST_CASE("unipotent inverses", "[algebra_r]") {
    const int n = 8;
    SECTION("1 - x inverts to the geometric series") {
        CHECK(inverse_unipotent(RElement::one(n) - RElement::x(n)) == geometric(n));
    }
    SECTION("1 + p(x)y inverts to 1 - p(x)y") {
        st::Rng rng(21);
        for (int i = 0; i < 50; ++i) {
            RElement u = RElement::one(n);
            u.q = st::random_relement(rng, n).q;
            RElement v = RElement::one(n);
            for (std::size_t j = 0; j < u.q.size(); ++j) v.q[j] = -u.q[j];
            CHECK(inverse_unipotent(u) == v);
        }
    }
    CHECK(inverse_unipotent(RElement::one(n)) == RElement::one(n));
    SECTION("rejects non-unipotent input") {
        RElement two = RElement::one(n);
        two.p[0] = 2;
        CHECK_THROWS_AS(inverse_unipotent(two), not_unipotent_error);
        CHECK_THROWS_AS(inverse_unipotent(RElement(n)), not_unipotent_error);
    }
    SECTION("two-sided inverses of 200 random unipotent elements") {
        st::Rng rng(22);
        for (int i = 0; i < 200; ++i) {
            RElement u = st::random_unipotent(rng, n);
            RElement v = inverse_unipotent(u);
            CHECK(u * v == RElement::one(n));
            CHECK(v * u == RElement::one(n));
        }
    }
}

TEST_CASE("ring axioms up to truncation", "[algebra_r][property]") {
    st::Rng rng(303);
    for (int i = 0; i < 200; ++i) {
        int n = 1 + static_cast<int>(rng() % 8);
        RElement u = st::random_relement(rng, n);
        RElement v = st::random_relement(rng, n);
        RElement w = st::random_relement(rng, n);
        CHECK((u * v) * w == u * (v * w));
        CHECK(u * (v + w) == u * v + u * w);
        CHECK((u + v) * w == u * w + v * w);
        CHECK(u * RElement::one(n) == u);
        CHECK(RElement::one(n) * u == u);
    }
}

TEST_CASE("rendering", "[algebra_r]") {
    RElement u(2, {1, 2, 1}, {3, 1});
    CHECK(to_string(u) == "1 + 2x + x^2 + (3 + x)y");
    CHECK(to_string(RElement(3)) == "0");
    CHECK(to_string(RElement::one(3)) == "1");
    CHECK(to_string(RElement::one(3) + RElement::y(3)) == "1 + y");
    CHECK(to_string(RElement::one(3) - RElement::y(3)) == "1 - y");
    CHECK(to_string(RElement(2, {0, -1}, {})) == "-x");
    CHECK(to_string(RElement(2, {}, {0, 0, 5})) == "(5x^2)y");
    CHECK(to_string(RElement(2, {}, {-2})) == "-2y");
    CHECK(to_string(geometric(3)) == "1 + x + x^2 + x^3");
    CHECK(to_string(RElement(2, {1, -3}, {0, -1})) == "1 - 3x + (-x)y");
}

TEST_CASE("JSON round trip", "[algebra_r][json]") {
    st::Rng rng(404);
    for (int i = 0; i < 50; ++i) {
        RElement u = st::random_relement(rng, 6);
        // make one coefficient overflow 64 bits to pin the string encoding
        u.p[3] = Int("123456789012345678901234567890");
        nlohmann::json j = u;
        CHECK(j.at("p")[3].is_string());
        CHECK(j.at("p").size() == 7);
        CHECK(j.at("N").get<int>() == 6);
        CHECK(j.get<RElement>() == u);
    }
}
