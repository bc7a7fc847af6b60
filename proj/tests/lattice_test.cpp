#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracle.hpp"
#include "z2z4/lattice.hpp"

using namespace z2z4;

namespace {

std::set<MixedVector> set_intersection(const std::set<MixedVector>& a,
                                       const std::set<MixedVector>& b) {
    std::set<MixedVector> out;
    for (const auto& v : a)
        if (b.count(v)) out.insert(v);
    return out;
}

}  // namespace

TEST_CASE("span and intersection agree with set-level oracles") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        const Shape s = oracle::random_shape(rng, 10);
        const AdditiveCode c1(oracle::random_matrix(s, rng));
        const AdditiveCode c2(oracle::random_matrix(s, rng));

        MixedMatrix joint = c1.gens();
        joint.append_rows(c2.gens());
        CHECK(oracle::codeword_set(span(c1, c2)) == oracle::closure(joint));
        CHECK(oracle::codeword_set(intersect(c1, c2)) ==
              set_intersection(oracle::codeword_set(c1), oracle::codeword_set(c2)));
    }
}

TEST_CASE("eta counts the intersection without enumerating it") {
    std::mt19937_64 rng(67);
    for (int trial = 0; trial < 60; ++trial) {
        const Shape s = oracle::random_shape(rng, 10);
        const AdditiveCode c1(oracle::random_matrix(s, rng));
        const AdditiveCode c2(oracle::random_matrix(s, rng));
        const auto want =
            set_intersection(oracle::codeword_set(c1), oracle::codeword_set(c2));
        CHECK(eta(c1, c2) == want.size());
        CHECK((std::uint64_t{1} << log2_eta(c1, c2)) == want.size());
    }
    // Identical inputs: eta = |C|; disjoint-support inputs: eta = 1.
    MixedMatrix a(Shape{0, 2}), b(Shape{0, 2});
    a.append_row(MixedVector({}, {1, 0}));
    b.append_row(MixedVector({}, {0, 1}));
    CHECK(eta(AdditiveCode(a), AdditiveCode(a)) == 4);
    CHECK(eta(AdditiveCode(a), AdditiveCode(b)) == 1);
}

TEST_CASE("lattice identity: |span| * |intersection| = |C1| * |C2|") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 60; ++trial) {
        const Shape s = oracle::random_shape(rng, 12);
        const AdditiveCode c1(oracle::random_matrix(s, rng));
        const AdditiveCode c2(oracle::random_matrix(s, rng));
        CHECK(span(c1, c2).size() * eta(c1, c2) == c1.size() * c2.size());
    }
}

TEST_CASE("structural bounds hold for random pairs") {
    std::mt19937_64 rng(73);
    for (int trial = 0; trial < 80; ++trial) {
        const Shape s = oracle::random_shape(rng, 12);
        const AdditiveCode c1(oracle::random_matrix(s, rng));
        const AdditiveCode c2(oracle::random_matrix(s, rng));
        for (const auto& r : check_span_bounds(c1, c2)) {
            INFO(r.quantity, " in [", r.lower, ",", r.upper, "] observed ", r.observed);
            CHECK(r.pass);
        }
        const BoundReport d = check_dual_size_bounds(c1, c2);
        INFO(d.quantity, " in [", d.lower, ",", d.upper, "] observed ", d.observed);
        CHECK(d.pass);
        const BoundReport g = check_eta_bounds(c1, c2, EtaFamily::Generic);
        CHECK(g.pass);
    }
}
