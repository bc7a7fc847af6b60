#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"

using namespace z2z4;

TEST_CASE("vector arithmetic stays in range and inverts") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Shape s = oracle::random_shape(rng);
        const MixedMatrix m = oracle::random_matrix(s, rng);
        const MixedVector a = m.row(0);
        const MixedVector b = m.row(m.row_count() - 1);
        CHECK(a + b - b == a);
        CHECK((a - a).is_zero());
        CHECK(2u * a == a + a);
        CHECK(3u * a == -a);
        CHECK((4u * a).is_zero());
    }
}

TEST_CASE("element order divides four and matches definition") {
    MixedVector zero(Shape{2, 2});
    CHECK(element_order(zero) == 1);
    CHECK(element_order(MixedVector({1, 0}, {0, 2})) == 2);
    CHECK(element_order(MixedVector({0, 0}, {3, 0})) == 4);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        const Shape s = oracle::random_shape(rng);
        const MixedVector v = oracle::random_matrix(s, rng).row(0);
        const unsigned k = element_order(v);
        CHECK((k * v).is_zero());
        if (k > 1) CHECK_FALSE(((k / 2) * v).is_zero());
    }
}

TEST_CASE("inner product is symmetric and biadditive") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 50; ++trial) {
        const Shape s = oracle::random_shape(rng);
        const MixedMatrix m = oracle::random_matrix(s, rng);
        const MixedVector u = m.row(0);
        const MixedVector v = m.row(m.row_count() / 2);
        const MixedVector w = m.row(m.row_count() - 1);
        CHECK(inner_product(u, v) == inner_product(v, u));
        CHECK(inner_product(u + v, w) ==
              ((inner_product(u, w) + inner_product(v, w)) & 3u));
    }
}

TEST_CASE("Gray map values and Lee weight") {
    const MixedVector v({1, 0}, {0, 1, 2, 3});
    CHECK(gray_map(v) == std::vector<std::uint8_t>{1, 0, 0, 0, 0, 1, 1, 1, 1, 0});
    CHECK(lee_weight(v) == 1 + 0 + 1 + 2 + 1);

    // Gray map is an isometry: Lee weight equals Hamming weight of image.
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        const MixedVector u = oracle::random_matrix(oracle::random_shape(rng), rng).row(0);
        std::size_t hw = 0;
        for (auto b : gray_map(u)) hw += b;
        CHECK(lee_weight(u) == hw);
    }
}

TEST_CASE("standard_reduce preserves the row space and sorts by order") {
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 60; ++trial) {
        const Shape s = oracle::random_shape(rng, 10);
        const MixedMatrix m = oracle::random_matrix(s, rng);
        const ReducedRows red = standard_reduce(m);

        MixedMatrix back(s);
        for (const auto& r : red.rows4) {
            CHECK(element_order(r) == 4);
            back.append_row(r);
        }
        for (const auto& r : red.rows2) {
            CHECK(element_order(r) == 2);
            back.append_row(r);
        }
        CHECK(oracle::closure(back) == oracle::closure(m));
    }
}

TEST_CASE("reduction is canonical under row shuffles and multiples") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const Shape s = oracle::random_shape(rng, 10);
        const MixedMatrix m = oracle::random_matrix(s, rng);

        MixedMatrix scrambled(s);
        std::vector<MixedVector> rows = m.rows();
        std::shuffle(rows.begin(), rows.end(), rng);
        for (auto& r : rows) {
            scrambled.append_row(3u * r);
            if (rng() & 1u) scrambled.append_row(r + rows[0]);
        }
        const ReducedRows a = standard_reduce(m);
        const ReducedRows b = standard_reduce(scrambled);
        CHECK(a.rows4 == b.rows4);
        CHECK(a.rows2 == b.rows2);
        CHECK(compute_type(m) == compute_type(scrambled));
    }
}

TEST_CASE("type matches brute-force group structure") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const Shape s = oracle::random_shape(rng, 10);
        const MixedMatrix m = oracle::random_matrix(s, rng);
        const CodeType t = compute_type(m);
        const auto words = oracle::closure(m);

        CHECK(t.alpha == s.alpha);
        CHECK(t.beta == s.beta);
        CHECK(words.size() == std::size_t{1} << t.log2_size());
        std::size_t order_two = 0;  // elements of order dividing two
        for (const auto& w : words)
            if (element_order(w) <= 2) ++order_two;
        // |C[2]| = 2^(gamma+delta) in a group Z2^gamma x Z4^delta.
        CHECK(order_two == std::size_t{1} << (t.gamma + t.delta));

        std::vector<std::vector<std::uint8_t>> bins;
        for (const auto& w : words)
            if (element_order(w) <= 2) bins.push_back(w.bin());
        CHECK(t.kappa == binary_rank(bins));
    }
}

TEST_CASE("binary rank on known matrices") {
    CHECK(binary_rank({}) == 0);
    CHECK(binary_rank({{0, 0, 0}}) == 0);
    CHECK(binary_rank({{1, 0, 1}, {0, 1, 1}, {1, 1, 0}}) == 2);
    CHECK(binary_rank({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}) == 3);
}
