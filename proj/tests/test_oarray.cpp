#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <vector>

#include "quoa/oarray.hpp"

using namespace quoa;

namespace {

// Test-side oracle: count every k-tuple in every k-column projection with a
// plain map and compare against r/d^k directly.
bool oracle_strength(const std::vector<std::vector<int>>& rows, int d, int k) {
    const int N = static_cast<int>(rows[0].size());
    long dk = 1;
    for (int i = 0; i < k; ++i) dk *= d;
    if (rows.size() % dk != 0) return false;
    const long lambda = static_cast<long>(rows.size()) / dk;
    std::vector<int> cols(k);
    for (int i = 0; i < k; ++i) cols[i] = i;
    while (true) {
        std::map<std::vector<int>, long> counts;
        for (const auto& row : rows) {
            std::vector<int> t;
            for (int c : cols) t.push_back(row[c]);
            ++counts[t];
        }
        if (counts.size() != static_cast<size_t>(dk)) return false;
        for (const auto& [t, c] : counts)
            if (c != lambda) return false;
        int i = k - 1;
        while (i >= 0 && cols[i] == N - k + i) --i;
        if (i < 0) break;
        ++cols[i];
        for (int j = i + 1; j < k; ++j) cols[j] = cols[j - 1] + 1;
    }
    return true;
}

}  // namespace

TEST_CASE("full factorial") {
    OrthogonalArray oa = full_factorial(2, 3);
    REQUIRE(oa.runs() == 8);
    CHECK(oa.strength == 3);
    CHECK(oa.rows.front() == std::vector<int>{0, 0, 0});
    CHECK(oa.rows.back() == std::vector<int>{1, 1, 1});
    CHECK(std::is_sorted(oa.rows.begin(), oa.rows.end()));
    CHECK(strength_check(oa, 3));
    CHECK(oracle_strength(oa.rows, 2, 3));
    CHECK(strength_check(oa, 2));  // strength is monotone

    OrthogonalArray tiny = full_factorial(2, 1);
    REQUIRE(tiny.rows == std::vector<std::vector<int>>{{0}, {1}});

    OrthogonalArray t32 = full_factorial(3, 2);
    CHECK(t32.runs() == 9);
    CHECK(strength_check(t32, 2));
    CHECK(oracle_strength(t32.rows, 3, 2));

    CHECK_THROWS_AS(full_factorial(2, 30), std::invalid_argument);           // budget
    CHECK_THROWS_AS(full_factorial(2, 25, 1 << 10), std::invalid_argument);  // custom budget
    CHECK_NOTHROW(full_factorial(2, 10, 1 << 10));
}

TEST_CASE("zero-sum array") {
    OrthogonalArray oa = zero_sum_oa(2, 4, 0);
    REQUIRE(oa.runs() == 8);
    CHECK(oa.strength == 3);
    // rows are exactly (i, j, k, i+j+k) in lexicographic order
    std::vector<std::vector<int>> expect;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) expect.push_back({i, j, k, (i + j + k) % 2});
    std::sort(expect.begin(), expect.end());
    CHECK(oa.rows == expect);
    CHECK(strength_check(oa, 3));
    CHECK(oracle_strength(oa.rows, 2, 3));

    CHECK(zero_sum_oa(2, 2, 0).rows == std::vector<std::vector<int>>{{0, 0}, {1, 1}});
    CHECK(irredundancy_check(zero_sum_oa(2, 2, 0), 1));

    OrthogonalArray t = zero_sum_oa(3, 4, 0);
    CHECK(t.runs() == 27);
    CHECK(strength_check(t, 3));
    CHECK(oracle_strength(t.rows, 3, 3));
    for (const auto& row : t.rows) CHECK((row[0] + row[1] + row[2] + row[3]) % 3 == 0);

    OrthogonalArray res = zero_sum_oa(3, 3, 2);
    for (const auto& row : res.rows) CHECK((row[0] + row[1] + row[2]) % 3 == 2);

    CHECK_THROWS_AS(zero_sum_oa(2, 4, 2), std::invalid_argument);  // residue range
    CHECK_THROWS_AS(zero_sum_oa(2, 40, 0), std::invalid_argument);
}

TEST_CASE("vandermonde array over GF(4)") {
    Field gf4(2, 2);
    OrthogonalArray oa = vandermonde_oa(gf4);
    REQUIRE(oa.runs() == 64);
    REQUIRE(oa.factors() == 5);
    CHECK(oa.strength == 3);
    CHECK(oa.rows.front() == std::vector<int>{0, 0, 0, 0, 0});  // i = j = k = 0
    CHECK(strength_check(oa, 3));
    CHECK(oracle_strength(oa.rows, 4, 3));
    // only d - 2 columns are retained after tracing, and 4^2 < 64 rows:
    // the plain d = 4 array cannot be irredundant at strength 3
    CHECK_FALSE(irredundancy_check(oa, 3));

    OrthogonalArray ext = vandermonde_oa(gf4, true);
    REQUIRE(ext.factors() == 6);
    CHECK(strength_check(ext, 3));
    CHECK(oracle_strength(ext.rows, 4, 3));
    CHECK(irredundancy_check(ext, 3));

    CHECK_THROWS_AS(vandermonde_oa(Field(3)), std::invalid_argument);        // d <= 3
    CHECK_THROWS_AS(vandermonde_oa(Field(5), true), std::invalid_argument);  // odd characteristic
    CHECK_THROWS_AS(vandermonde_oa(Field(2, 2), false, 8), std::invalid_argument);
}

TEST_CASE("strength check on the pinned strength-2 sample") {
    OrthogonalArray oa = iroa_8_6_2_2();
    CHECK(strength_check(oa, 2));
    CHECK(oracle_strength(oa.rows, 2, 2));
    CHECK_FALSE(strength_check(oa, 3));
    CHECK_FALSE(oracle_strength(oa.rows, 2, 3));
    CHECK(irredundancy_check(oa, 2));
    CHECK_THROWS_AS(strength_check(oa, 7), std::invalid_argument);
    CHECK_THROWS_AS(irredundancy_check(oa, 6), std::invalid_argument);
}

TEST_CASE("strength monotonicity") {
    for (const OrthogonalArray& oa :
         {full_factorial(2, 4), zero_sum_oa(3, 4, 1), vandermonde_oa(Field(5)), iroa_8_6_2_2()}) {
        int k = oa.strength;
        REQUIRE(strength_check(oa, k));
        for (int lower = k - 1; lower >= 1; --lower) REQUIRE(strength_check(oa, lower));
    }
}

TEST_CASE("irredundancy counterexamples") {
    // a duplicated row breaks irredundancy at every k < N
    OrthogonalArray dup;
    dup.levels = 2;
    dup.strength = 1;
    dup.rows = {{0, 1, 0}, {0, 1, 0}, {1, 0, 1}, {1, 0, 1}};
    CHECK_FALSE(irredundancy_check(dup, 1));
    CHECK_FALSE(irredundancy_check(dup, 2));
    // the zero-sum array is not irredundant at its full strength (one
    // retained column cannot separate eight rows)
    CHECK_FALSE(irredundancy_check(zero_sum_oa(2, 4, 0), 3));
    // but it is at k = 1: any three of the four columns determine the row
    CHECK(irredundancy_check(zero_sum_oa(2, 4, 0), 1));
}

TEST_CASE("vandermonde family over every implemented order") {
    for (int d : {4, 5, 7, 8, 9}) {
        Field f = Field::of_order(d);
        OrthogonalArray oa = vandermonde_oa(f);
        CAPTURE(d);
        REQUIRE(oa.runs() == d * d * d);
        REQUIRE(oa.factors() == d + 1);
        CHECK(strength_check(oa, 3));
        // irredundancy needs d^(N-k) >= r, i.e. d >= 5 for the plain array
        CHECK(irredundancy_check(oa, 3) == (d >= 5));
    }
    for (int d : {4, 8}) {
        OrthogonalArray ext = vandermonde_oa(Field::of_order(d), true);
        CAPTURE(d);
        REQUIRE(ext.factors() == d + 2);
        CHECK(strength_check(ext, 3));
        CHECK(irredundancy_check(ext, 3));
    }
}
