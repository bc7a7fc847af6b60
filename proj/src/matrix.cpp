#include "z2z4/matrix.hpp"

#include <algorithm>

namespace z2z4 {

ReducedRows standard_reduce(const MixedMatrix& m) {
    const Shape sh = m.shape();
    std::vector<MixedVector> pool;
    for (const auto& r : m.rows())
        if (!r.is_zero()) pool.push_back(r);

    ReducedRows out;
    out.rows4.reserve(pool.size());
    out.rows2.reserve(pool.size());
    std::vector<MixedVector*> retired;  // pivots in retirement order

    auto clear_column = [&](const MixedVector& pivot, auto entry_of,
                            auto reduce_row) {
        for (auto& r : pool)
            if (&r != &pivot) reduce_row(r, entry_of(r), pivot);
        for (auto* r : retired) reduce_row(*r, entry_of(*r), pivot);
    };

    // Phase 1: unit pivots in quaternary columns.
    for (std::size_t j = 0; j < sh.beta; ++j) {
        auto it = std::find_if(pool.begin(), pool.end(),
                               [&](const MixedVector& r) { return r.quat(j) & 1u; });
        if (it == pool.end()) continue;
        MixedVector pivot = (it->quat(j) == 3) ? 3u * *it : *it;
        pool.erase(it);
        auto entry = [&](const MixedVector& r) { return r.quat(j); };
        auto reduce = [](MixedVector& r, unsigned e, const MixedVector& p) {
            if (e) r -= e * p;
        };
        clear_column(pivot, entry, reduce);
        out.rows4.push_back(std::move(pivot));
        retired.push_back(&out.rows4.back());
    }

    // Phase 2: 2-pivots in quaternary columns. All entries left in the
    // pool are even here; retired order-four rows are reduced mod 2.
    for (std::size_t j = 0; j < sh.beta; ++j) {
        auto it = std::find_if(pool.begin(), pool.end(),
                               [&](const MixedVector& r) { return r.quat(j) == 2; });
        if (it == pool.end()) continue;
        MixedVector pivot = *it;
        pool.erase(it);
        auto entry = [&](const MixedVector& r) { return r.quat(j); };
        auto reduce = [](MixedVector& r, unsigned e, const MixedVector& p) {
            if (e >= 2) r -= p;
        };
        clear_column(pivot, entry, reduce);
        out.rows2.push_back(std::move(pivot));
        retired.push_back(&out.rows2.back());
    }

    // Phase 3: binary 1-pivots. Remaining pool rows have zero
    // quaternary part, so clearing cannot disturb earlier pivots.
    for (std::size_t i = 0; i < sh.alpha; ++i) {
        auto it = std::find_if(pool.begin(), pool.end(),
                               [&](const MixedVector& r) { return r.bin(i) == 1; });
        if (it == pool.end()) continue;
        MixedVector pivot = *it;
        pool.erase(it);
        auto entry = [&](const MixedVector& r) { return r.bin(i); };
        auto reduce = [](MixedVector& r, unsigned e, const MixedVector& p) {
            if (e) r -= p;
        };
        clear_column(pivot, entry, reduce);
        out.rows2.push_back(std::move(pivot));
        retired.push_back(&out.rows2.back());
    }

    return out;
}

std::size_t binary_rank(std::vector<std::vector<std::uint8_t>> rows) {
    std::size_t rank = 0;
    if (rows.empty()) return 0;
    const std::size_t n = rows[0].size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < n && r < rows.size(); ++c) {
        std::size_t p = r;
        while (p < rows.size() && !rows[p][c]) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[r], rows[p]);
        for (std::size_t k = 0; k < rows.size(); ++k)
            if (k != r && rows[k][c])
                for (std::size_t c2 = 0; c2 < n; ++c2) rows[k][c2] ^= rows[r][c2];
        ++r;
        ++rank;
    }
    return rank;
}

CodeType compute_type(const MixedMatrix& m) {
    ReducedRows rr = standard_reduce(m);
    CodeType t;
    t.alpha = m.shape().alpha;
    t.beta = m.shape().beta;
    t.gamma = rr.rows2.size();
    t.delta = rr.rows4.size();
    if (t.alpha > 0) {
        // The binary restriction of the order-two subcode is spanned by
        // the binary parts of the order-two generators (2*rows4 project
        // to zero binary part).
        std::vector<std::vector<std::uint8_t>> bins;
        bins.reserve(rr.rows2.size());
        for (const auto& r : rr.rows2) bins.push_back(r.bin());
        t.kappa = binary_rank(std::move(bins));
    }
    return t;
}

}  // namespace z2z4
