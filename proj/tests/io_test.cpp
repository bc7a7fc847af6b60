#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "oracle.hpp"
#include "z2z4/io.hpp"

using namespace z2z4;

TEST_CASE("matrix text round-trips byte-identically") {
    const std::string text = "alpha=3 beta=2\n101|12\n011|30\n";
    const MixedMatrix m = parse_matrix(text);
    CHECK(m.shape() == Shape{3, 2});
    CHECK(m.row(0) == MixedVector({1, 0, 1}, {1, 2}));
    CHECK(emit_matrix(m) == text);

    // Pure binary and pure quaternary rows omit the separator.
    const std::string bin = "alpha=3 beta=0\n101\n";
    CHECK(emit_matrix(parse_matrix(bin)) == bin);
    const std::string quat = "alpha=0 beta=3\n123\n";
    CHECK(emit_matrix(parse_matrix(quat)) == quat);

    std::mt19937_64 rng(97);
    for (int i = 0; i < 40; ++i) {
        const MixedMatrix r =
            oracle::random_matrix(oracle::random_shape(rng), rng);
        CHECK(parse_matrix(emit_matrix(r)) == r);
    }
}

TEST_CASE("matrix parser rejects malformed input") {
    CHECK_THROWS_AS(parse_matrix("101\n"), std::invalid_argument);  // no header
    CHECK_THROWS_AS(parse_matrix("alpha=2 beta=1\n10|4\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix("alpha=2 beta=1\n12|1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix("alpha=2 beta=1\n1|1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_matrix("alpha=2 beta=1\n10|1|2\n"), std::invalid_argument);
}

TEST_CASE("permutation text round-trips") {
    const Shape s{2, 4};
    CHECK(parse_permutation("", s).is_identity());
    CHECK(parse_permutation("Id", s).is_identity());
    CHECK(emit_permutation(Monomial(s)) == "Id");

    const Monomial m = parse_permutation("(1,2)(3,5,4)!4!6", s);
    CHECK(m.apply(MixedVector({1, 0}, {1, 0, 0, 0})) ==
          MixedVector({0, 1}, {0, 0, 1, 0}));
    CHECK(parse_permutation(emit_permutation(m), s) == m);

    std::mt19937_64 rng(101);
    for (int i = 0; i < 40; ++i) {
        // arbitrary split permutation with signs
        std::vector<std::uint32_t> p(s.width());
        for (std::size_t k = 0; k < s.width(); ++k) p[k] = static_cast<std::uint32_t>(k);
        std::shuffle(p.begin(), p.begin() + s.alpha, rng);
        std::shuffle(p.begin() + s.alpha, p.end(), rng);
        std::vector<std::uint8_t> signs(s.beta);
        for (auto& b : signs) b = static_cast<std::uint8_t>(rng() & 1u);
        const Monomial r(s, std::move(p), std::move(signs));
        CHECK(parse_permutation(emit_permutation(r), s) == r);
    }
}

TEST_CASE("permutation parser rejects malformed input") {
    const Shape s{2, 4};
    CHECK_THROWS_AS(parse_permutation("(1,2", s), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("(1,9)", s), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("(1,2)(2,3)", s), std::invalid_argument);
    CHECK_THROWS_AS(parse_permutation("(1,3)", s), std::invalid_argument);  // crosses split
    CHECK_THROWS_AS(parse_permutation("!1", s), std::invalid_argument);  // binary sign
    CHECK_NOTHROW(parse_permutation("!3", s));
}

TEST_CASE("type formatting") {
    CHECK(format_type(CodeType{7, 4, 3, 2, 2}) == "(7,4;3,2;2)");
    CHECK(format_type(CodeType{0, 16, 0, 3, 0}) == "(0,16;0,3;0)");
}

TEST_CASE("config files are key=value with comments") {
    std::istringstream in(
        "# run settings\n"
        "workers=4\n"
        "guard-log2 = 22  # inline comment\n"
        "\n"
        "ceiling-log2=20\n");
    const auto cfg = parse_config(in);
    CHECK(cfg.size() == 3);
    CHECK(cfg.at("workers") == "4");
    CHECK(cfg.at("guard-log2") == "22");
    CHECK(cfg.at("ceiling-log2") == "20");

    std::istringstream bad("no equals sign\n");
    CHECK_THROWS_AS(parse_config(bad), std::invalid_argument);
}
