#include "z2z4/lattice.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace z2z4 {

namespace {

void require_same_shape(const AdditiveCode& a, const AdditiveCode& b) {
    if (a.shape() != b.shape()) throw std::invalid_argument("shape mismatch");
}

long long mu_bound(const CodeType& t1, const CodeType& t2) {
    const long long g = static_cast<long long>(t1.gamma + t2.gamma);
    const long long d = static_cast<long long>(t1.delta + t2.delta);
    const long long a = static_cast<long long>(t1.alpha);
    const long long b = static_cast<long long>(t1.beta);
    return std::min({g + 2 * d, g + d + b, d + a + b, a + 2 * b});
}

long long eta_upper_term(const CodeType& t1, const CodeType& t2) {
    return static_cast<long long>(
               std::max(t1.kappa + t1.delta, t2.kappa + t2.delta)) +
           static_cast<long long>(std::max(t1.delta, t2.delta));
}

}  // namespace

AdditiveCode span(const AdditiveCode& c1, const AdditiveCode& c2) {
    require_same_shape(c1, c2);
    MixedMatrix joint(c1.shape());
    joint.append_rows(c1.gens());
    joint.append_rows(c2.gens());
    return AdditiveCode(joint);
}

AdditiveCode intersect(const AdditiveCode& c1, const AdditiveCode& c2) {
    require_same_shape(c1, c2);
    return dual(span(dual(c1), dual(c2)));
}

std::size_t log2_eta(const AdditiveCode& c1, const AdditiveCode& c2) {
    require_same_shape(c1, c2);
    const std::size_t ambient = c1.shape().binary_length();
    const AdditiveCode joint = span(dual(c1), dual(c2));
    return ambient - joint.type().log2_size();
}

std::uint64_t eta(const AdditiveCode& c1, const AdditiveCode& c2) {
    return std::uint64_t{1} << log2_eta(c1, c2);
}

std::vector<BoundReport> check_span_bounds(const AdditiveCode& c1, const AdditiveCode& c2) {
    const CodeType t1 = c1.type();
    const CodeType t2 = c2.type();
    const CodeType ts = span(c1, c2).type();
    const long long width = static_cast<long long>(t1.alpha + t1.beta);

    std::vector<BoundReport> out;
    out.push_back(BoundReport::make(
        "delta", static_cast<long long>(std::max(t1.delta, t2.delta)),
        std::min<long long>(t1.delta + t2.delta, t1.beta),
        static_cast<long long>(ts.delta)));
    out.push_back(BoundReport::make(
        "kappa+delta",
        std::max<long long>(ts.delta, std::max(t1.kappa + t1.delta, t2.kappa + t2.delta)),
        std::min<long long>(t1.kappa + t2.kappa + t1.delta + t2.delta, width),
        static_cast<long long>(ts.kappa + ts.delta)));
    out.push_back(BoundReport::make(
        "gamma+delta", static_cast<long long>(ts.kappa + ts.delta),
        std::min<long long>(t1.gamma + t2.gamma + t1.delta + t2.delta, width),
        static_cast<long long>(ts.gamma + ts.delta)));
    return out;
}

BoundReport check_dual_size_bounds(const AdditiveCode& c1, const AdditiveCode& c2) {
    const CodeType t1 = c1.type();
    const CodeType t2 = c2.type();
    const CodeType ts = span(c1, c2).type();
    return BoundReport::make("gamma+2delta", eta_upper_term(t1, t2), mu_bound(t1, t2),
                             static_cast<long long>(ts.log2_size()));
}

BoundReport check_eta_bounds(const AdditiveCode& c1, const AdditiveCode& c2,
                             EtaFamily family) {
    require_same_shape(c1, c2);
    const long long n = static_cast<long long>(c1.shape().binary_length());
    const long long observed = static_cast<long long>(log2_eta(c1, c2));

    switch (family) {
        case EtaFamily::Generic: {
            const CodeType d1 = dual_type(c1.type());
            const CodeType d2 = dual_type(c2.type());
            return BoundReport::make("log2(eta)", n - mu_bound(d1, d2),
                                     n - eta_upper_term(d1, d2), observed);
        }
        case EtaFamily::QuaternaryPerfect: {
            if (c1.shape().alpha != 0 || !std::has_single_bit(c1.shape().beta))
                throw std::invalid_argument("not a quaternary perfect shape");
            const long long t =
                static_cast<long long>(std::bit_width(c1.shape().beta));  // beta = 2^(t-1)
            return BoundReport::make("log2(eta)", n - 2 * t, n - t - 1, observed);
        }
        case EtaFamily::AdditiveExtendedPerfect: {
            if (c1.shape().alpha == 0 ||
                !std::has_single_bit(c1.shape().binary_length()))
                throw std::invalid_argument("not an additive extended perfect shape");
            const long long t =
                static_cast<long long>(std::bit_width(c1.shape().binary_length()) - 1);
            const std::size_t dbar1 = dual_type(c1.type()).delta;
            const std::size_t dbar2 = dual_type(c2.type()).delta;
            if (dbar1 != dbar2)
                throw std::invalid_argument("family mismatch: unequal dual deltas");
            const long long lo = (dbar1 == 1) ? n - 2 * t : n - 2 * t - 1;
            return BoundReport::make("log2(eta)", lo, n - t - 1, observed);
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace z2z4
