// Brute-force reference implementations shared by the unit tests. These
// deliberately ignore efficiency: sets of codewords, closure under
// addition, annihilators by full scan.
#ifndef TESTS_ORACLE_HPP
#define TESTS_ORACLE_HPP

#include <random>
#include <set>

#include "z2z4/dual.hpp"

namespace oracle {

using namespace z2z4;

/// Additive closure of the rows: the row space as an explicit set.
inline std::set<MixedVector> closure(const MixedMatrix& m) {
    std::set<MixedVector> out{MixedVector(m.shape())};
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<MixedVector> next;
        for (const auto& w : out)
            for (const auto& r : m.rows()) {
                MixedVector s = w + r;
                if (!out.count(s)) next.push_back(std::move(s));
            }
        for (auto& s : next) grew |= out.insert(std::move(s)).second;
    }
    return out;
}

inline std::set<MixedVector> codeword_set(const AdditiveCode& c) {
    std::set<MixedVector> out;
    c.enumerate([&](const MixedVector& v) { out.insert(v); });
    return out;
}

/// Every vector of the ambient group, in lexicographic order.
inline std::vector<MixedVector> ambient(Shape s) {
    std::vector<MixedVector> out;
    MixedVector v(s);
    const std::size_t total = std::size_t{1} << s.binary_length();
    for (std::size_t code = 0; code < total; ++code) {
        std::size_t x = code;
        for (std::size_t j = s.beta; j-- > 0;) {
            v.set_quat(j, static_cast<std::uint8_t>(x & 3u));
            x >>= 2;
        }
        for (std::size_t i = s.alpha; i-- > 0;) {
            v.set_bin(i, static_cast<std::uint8_t>(x & 1u));
            x >>= 1;
        }
        out.push_back(v);
    }
    return out;
}

/// Annihilator of C by full scan of the ambient group.
inline std::set<MixedVector> brute_dual(const AdditiveCode& c) {
    const auto words = codeword_set(c);
    std::set<MixedVector> out;
    for (const auto& v : ambient(c.shape())) {
        bool ok = true;
        for (const auto& w : words)
            if (inner_product(v, w) != 0) {
                ok = false;
                break;
            }
        if (ok) out.insert(v);
    }
    return out;
}

inline Shape random_shape(std::mt19937_64& rng, std::size_t max_bits = 12) {
    for (;;) {
        Shape s{rng() % 5, rng() % 5};
        const std::size_t n = s.binary_length();
        if (n >= 2 && n <= max_bits) return s;
    }
}

inline MixedMatrix random_matrix(Shape s, std::mt19937_64& rng) {
    MixedMatrix m(s);
    const std::size_t rows = 1 + rng() % 4;
    for (std::size_t r = 0; r < rows; ++r) {
        MixedVector v(s);
        for (std::size_t i = 0; i < s.alpha; ++i)
            v.set_bin(i, static_cast<std::uint8_t>(rng() & 1u));
        for (std::size_t j = 0; j < s.beta; ++j)
            v.set_quat(j, static_cast<std::uint8_t>(rng() & 3u));
        m.append_row(std::move(v));
    }
    return m;
}

}  // namespace oracle

#endif
