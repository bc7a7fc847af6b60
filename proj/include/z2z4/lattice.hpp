#ifndef Z2Z4_LATTICE_HPP
#define Z2Z4_LATTICE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "z2z4/dual.hpp"

namespace z2z4 {

/// One checked range from a span/intersection bound statement. A failing
/// report is data, not an error; sweeps collect and log them.
struct BoundReport {
    std::string quantity;
    long long lower = 0;
    long long upper = 0;
    long long observed = 0;
    bool pass = false;

    static BoundReport make(std::string quantity, long long lower, long long upper,
                            long long observed) {
        BoundReport r{std::move(quantity), lower, upper, observed, false};
        r.pass = lower <= observed && observed <= upper;
        return r;
    }
};

/// Smallest additive code containing both arguments.
AdditiveCode span(const AdditiveCode& c1, const AdditiveCode& c2);

/// Set-theoretic intersection, computed through duality:
/// (C1 cap C2)^perp = <C1^perp, C2^perp>.
AdditiveCode intersect(const AdditiveCode& c1, const AdditiveCode& c2);

/// Intersection number |C1 cap C2| without enumerating the intersection.
std::uint64_t eta(const AdditiveCode& c1, const AdditiveCode& c2);
std::size_t log2_eta(const AdditiveCode& c1, const AdditiveCode& c2);

enum class EtaFamily {
    Generic,
    QuaternaryPerfect,       // duals of extended perfect Z4-linear codes
    AdditiveExtendedPerfect  // alpha != 0 extended perfect family
};

/// Span-structure bounds on delta, kappa+delta and gamma+delta.
std::vector<BoundReport> check_span_bounds(const AdditiveCode& c1, const AdditiveCode& c2);

/// gamma+2delta of the span against the four-term minimum mu.
BoundReport check_dual_size_bounds(const AdditiveCode& c1, const AdditiveCode& c2);

/// log2 eta against the family's bounds. For the perfect families the
/// inputs are the codes themselves (not their duals); t comes from the
/// binary length 2^t.
BoundReport check_eta_bounds(const AdditiveCode& c1, const AdditiveCode& c2, EtaFamily family);

}  // namespace z2z4

#endif
