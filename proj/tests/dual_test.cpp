#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"

using namespace z2z4;

TEST_CASE("dual equals the brute-force annihilator") {
    std::mt19937_64 rng(47);
    for (int trial = 0; trial < 80; ++trial) {
        const Shape s = oracle::random_shape(rng, 10);
        const AdditiveCode c(oracle::random_matrix(s, rng));
        const AdditiveCode d = dual(c);
        CHECK(oracle::codeword_set(d) == oracle::brute_dual(c));
    }
}

TEST_CASE("duality is an involution with the right cardinalities") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 80; ++trial) {
        const Shape s = oracle::random_shape(rng, 12);
        const AdditiveCode c(oracle::random_matrix(s, rng));
        const AdditiveCode d = dual(c);
        CHECK(dual(d) == c);
        CHECK(c.size() * d.size() == std::uint64_t{1} << s.binary_length());
        CHECK(d.type() == dual_type(c.type()));
    }
}

TEST_CASE("dual type arithmetic on pinned values") {
    // (alpha,beta;gamma,delta;kappa) -> (alpha,beta;alpha+gamma-2kappa,
    //                                    beta-gamma-delta+kappa;alpha-kappa)
    const CodeType t{7, 4, 3, 2, 2};
    const CodeType d = dual_type(t);
    CHECK(d == CodeType{7, 4, 6, 1, 5});
    CHECK(dual_type(d) == t);
    CHECK(t.log2_size() + d.log2_size() == 7 + 2 * 4);
}

TEST_CASE("code_from_parity builds the annihilator of the rows") {
    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 40; ++trial) {
        const Shape s = oracle::random_shape(rng, 10);
        const MixedMatrix h = oracle::random_matrix(s, rng);
        const AdditiveCode c = code_from_parity(h);
        for (const auto& v : oracle::codeword_set(c))
            for (const auto& r : h.rows()) CHECK(inner_product(v, r) == 0);
        CHECK(c == dual(AdditiveCode(h)));
    }
}

TEST_CASE("self-dual example: the span of 2I in Z4^2") {
    MixedMatrix m(Shape{0, 2});
    m.append_row(MixedVector({}, {2, 0}));
    m.append_row(MixedVector({}, {0, 2}));
    const AdditiveCode c(m);
    CHECK(dual(c) == c);
}
