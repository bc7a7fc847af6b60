#ifndef Z2Z4_SEARCH_HPP
#define Z2Z4_SEARCH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>

#include "z2z4/lattice.hpp"

namespace z2z4 {

enum class SearchMode { Randomized, Exhaustive };

/// Shared knobs: worker count and the refusal threshold for exhaustive
/// orbit walks (log2 of the number of monomials).
struct SearchLimits {
    std::size_t workers = 1;
    std::size_t orbit_ceiling_log2 = 25;
    bool prune = true;
};

/// One search problem: hold base1 fixed, act on base2 by monomials, and
/// look for a prescribed intersection. The target is stated in dual
/// terms — either the dual type of intersect(base1, m(base2)) or its
/// log2 cardinality — because that is how the source results phrase it.
struct SearchTask {
    AdditiveCode base1;
    AdditiveCode base2;
    std::optional<CodeType> target_dual;
    std::optional<std::size_t> target_log2_eta;
    std::uint64_t budget = 100000;
    SearchMode mode = SearchMode::Randomized;
    bool use_signs = false;
    std::uint64_t seed = 0;
};

/// A replayable certificate: applying `monomial` to base2 and
/// intersecting with base1 reproduces `achieved` (and `dual`, `eta`).
struct Witness {
    Monomial monomial;
    CodeType achieved;  // type of the intersection code
    CodeType dual;      // its dual type, as quoted in statements
    std::uint64_t eta = 0;
    std::uint64_t seed = 0;
};

enum class SearchStatus { Found, NotFound, RefutedByExhaustion };

struct SearchResult {
    SearchStatus status = SearchStatus::NotFound;
    std::optional<Witness> witness;
    std::uint64_t examined = 0;
};

/// Recompute the intersection data for one monomial (the replay path).
Witness evaluate_pair(const AdditiveCode& base1, const AdditiveCode& base2,
                      const Monomial& m, std::uint64_t seed = 0);

SearchResult search(const SearchTask& task, const SearchLimits& limits = {});

/// Atlases keyed by the intersection's dual type / log2 eta; each entry
/// keeps one witness (the orbit-minimal one in exhaustive mode, so the
/// result is independent of worker count).
using TypeAtlas = std::map<CodeType, Witness>;
using EtaAtlas = std::map<std::size_t, Witness>;

TypeAtlas enumerate_types(const AdditiveCode& base1, const AdditiveCode& base2,
                          SearchMode mode, std::uint64_t budget, bool use_signs = false,
                          std::uint64_t seed = 0, const SearchLimits& limits = {});
EtaAtlas enumerate_eta(const AdditiveCode& base1, const AdditiveCode& base2,
                       SearchMode mode, std::uint64_t budget, bool use_signs = false,
                       std::uint64_t seed = 0, const SearchLimits& limits = {});

/// alpha! * beta! (* 2^beta with signs); throws length_error on overflow.
std::uint64_t orbit_size(Shape s, bool use_signs);

/// Mixed-radix unranking of the orbit: sign bits are the least
/// significant digits, then the quaternary permutation (Lehmer code),
/// then the binary one. Inverse of monomial_rank.
Monomial monomial_from_rank(Shape s, std::uint64_t rank, bool use_signs);
std::uint64_t monomial_rank(const Monomial& m, bool use_signs);

/// Sampler for randomized search: mixes uniform split permutations with
/// near-identity perturbations so that both generic and almost-aligned
/// intersections are reachable.
Monomial random_monomial(Shape s, std::mt19937_64& rng, bool use_signs);

/// One line per achieved type:
/// `(a,b;g,d;k) eta=<n> pi=<cycles> signs=<positions> seed=<s>`.
std::string report_line(const Witness& w);
std::string report_lines(const TypeAtlas& atlas);
Witness parse_report_line(const std::string& line, Shape shape);

}  // namespace z2z4

#endif
