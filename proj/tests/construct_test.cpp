#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "z2z4/construct.hpp"
#include "z2z4/io.hpp"
#include "z2z4/search.hpp"

using namespace z2z4;

TEST_CASE("binary Hamming and extended Hamming parity checks") {
    const MixedMatrix h = hamming_parity(3);
    CHECK(h.shape() == Shape{7, 0});
    const AdditiveCode ham = code_from_parity(h);
    CHECK(ham.size() == 16);
    CHECK(ham.min_distance() == 3);

    const MixedMatrix eh = extended_hamming_parity(3);
    CHECK(eh.shape() == Shape{8, 0});
    const AdditiveCode ext = code_from_parity(eh);
    CHECK(ext.size() == 16);
    CHECK(ext.min_distance() == 4);
}

TEST_CASE("extended perfect quaternary duals have the published types") {
    for (std::size_t t = 3; t <= 4; ++t)
        for (std::size_t delta = 1; 2 * delta <= t + 1; ++delta) {
            const MixedMatrix h = extended_perfect_z4_dual(t, delta);
            const CodeType ty = compute_type(h);
            CHECK(ty == CodeType{0, std::size_t{1} << (t - 1), t + 1 - 2 * delta, delta, 0});
            const AdditiveCode code = code_from_parity(h);
            CHECK(code.size() == std::uint64_t{1} << ((std::size_t{2} << (t - 1)) - t - 1));
            CHECK(code.min_distance() == 4);
        }
}

TEST_CASE("perfect mixed-alphabet duals: type, size, distance") {
    for (std::size_t t = 3; t <= 4; ++t)
        for (std::size_t r = (t + 2) / 2; r < t; ++r) {
            const MixedMatrix h = perfect_z2z4_dual(t, r);
            const std::size_t a = (std::size_t{1} << r) - 1;
            const std::size_t b = (std::size_t{1} << (t - 1)) - (std::size_t{1} << (r - 1));
            CHECK(compute_type(h) == CodeType{a, b, 2 * r - t, t - r, 2 * r - t});
            const AdditiveCode code = code_from_parity(h);
            CHECK(code.size() == std::uint64_t{1} << (a + 2 * b - t));
            CHECK(code.min_distance() == 3);

            const AdditiveCode ext = code_from_parity(extended_perfect_z2z4_dual(t, r));
            CHECK(ext.min_distance() == 4);
        }
}

TEST_CASE("doubling and quadrupling move the dual type as stated") {
    const MixedMatrix h = extended_perfect_z4_dual(3, 1);  // (0,4;2,1)
    CHECK(compute_type(double_quaternary(h)) == CodeType{0, 8, 3, 1, 0});
    CHECK(compute_type(quadruple_quaternary(h)) == CodeType{0, 16, 2, 2, 0});

    const MixedMatrix a = extended_perfect_z2z4_dual(3, 2);  // (4,2;2,1;2)
    const CodeType at = compute_type(a);
    const CodeType dt = compute_type(double_additive(a));
    CHECK(dt.alpha == 2 * at.alpha);
    CHECK(dt.beta == 2 * at.beta);
    CHECK(dt.gamma == at.gamma + 1);
    CHECK(dt.delta == at.delta);

    // The doubled code is still the dual of a distance-4 code.
    CHECK(code_from_parity(double_additive(a)).min_distance() == 4);
}

TEST_CASE("quadrupling for mixed alphabets needs gamma = 1") {
    const MixedMatrix ok = paper_matrix("sec4-lemma17-H1");
    const CodeType base = compute_type(ok);
    REQUIRE(base.gamma == 1);
    const CodeType q = compute_type(quadruple_additive(ok));
    CHECK(q.alpha == 2 * base.alpha);
    CHECK(q.beta == base.alpha + 4 * base.beta);
    CHECK(q.gamma == 1);
    CHECK(q.delta == base.delta + 1);

    CHECK_THROWS_AS(quadruple_additive(extended_perfect_z2z4_dual(3, 2)),
                    std::invalid_argument);
}

TEST_CASE("transpositions and block lifts") {
    const Shape s{2, 3};
    const Monomial t = transposition(s, 3, 5);  // quaternary coordinates 1 and 3
    CHECK(t.apply(MixedVector({1, 0}, {1, 2, 3})) == MixedVector({1, 0}, {3, 2, 1}));
    CHECK(t.after(t).is_identity());
    CHECK_THROWS_AS(transposition(s, 1, 3), std::invalid_argument);  // crosses the split

    const Monomial base = transposition(Shape{0, 4}, 1, 2);
    const Monomial lifted = block_lift(base, 2);
    CHECK(lifted.shape() == Shape{0, 8});
    for (std::size_t c = 0; c < 2; ++c) {
        CHECK(lifted.perm()[4 * c + 0] == 4 * c + 1);
        CHECK(lifted.perm()[4 * c + 1] == 4 * c + 0);
        CHECK(lifted.perm()[4 * c + 2] == 4 * c + 2);
    }
}

TEST_CASE("lexicographic pair realizes the claimed intersection ladder") {
    const LexPair lp = lemma_lex_pair(2);
    CHECK(compute_type(lp.h1) == CodeType{0, 16, 0, 3, 0});
    CHECK(compute_type(lp.h2) == CodeType{0, 16, 4, 1, 0});
    REQUIRE(lp.sigmas.size() == 2);

    const AdditiveCode c1 = code_from_parity(lp.h1);
    const AdditiveCode c2 = code_from_parity(lp.h2);
    Monomial pi(Shape{0, 16});
    for (std::size_t i = 0; i < lp.sigmas.size(); ++i) {
        pi = lp.sigmas[i].after(pi);
        const Witness w = evaluate_pair(c1, c2, pi);
        CHECK(w.dual == CodeType{0, 16, 2 + (i + 1), 3, 0});
    }
}

TEST_CASE("paper registry round-trips and has sane entries") {
    const auto names = paper_matrix_names();
    CHECK(names.size() >= 10);
    for (const auto& n : names) {
        const MixedMatrix m = paper_matrix(n);
        CHECK(parse_matrix(emit_matrix(m)) == m);
    }
    CHECK_THROWS_AS(paper_matrix("no-such-matrix"), std::invalid_argument);

    CHECK(paper_matrix("ex1-perfect").shape() == Shape{7, 4});
    CHECK(compute_type(paper_matrix("qlpc-t3-H1")) == CodeType{0, 4, 2, 1, 0});
    CHECK(compute_type(paper_matrix("qlpc-t3-H2")) == CodeType{0, 4, 0, 2, 0});
    // Both are duals of extended perfect codes of binary length 8.
    for (const char* n : {"qlpc-t3-H1", "qlpc-t3-H2"}) {
        const AdditiveCode c = code_from_parity(paper_matrix(n));
        CHECK(c.size() == 16);
        CHECK(c.min_distance() == 4);
    }
}
