#include "z2z4/dual.hpp"

#include <cassert>
#include <stdexcept>

namespace z2z4 {

namespace {

// Working row of the kernel solve: `syn` is the Z4 syndrome A*u^T of the
// tracked ambient vector `u` (binary columns of A carry doubled entries).
struct KernelRow {
    std::vector<std::uint8_t> syn;
    std::vector<std::uint8_t> u;
};

void axpy(KernelRow& r, unsigned c, const KernelRow& p) {
    for (std::size_t i = 0; i < r.syn.size(); ++i)
        r.syn[i] = static_cast<std::uint8_t>((r.syn[i] + c * p.syn[i]) & 3u);
    for (std::size_t i = 0; i < r.u.size(); ++i)
        r.u[i] = static_cast<std::uint8_t>((r.u[i] + c * p.u[i]) & 3u);
}

}  // namespace

AdditiveCode dual(const AdditiveCode& c) {
    const Shape sh = c.shape();
    const std::size_t n = sh.width();
    const auto& gens = c.gens().rows();
    const std::size_t k = gens.size();

    // One row per ambient unit vector e_j; together they span Z4^n.
    std::vector<KernelRow> pool;
    pool.reserve(n + k);
    for (std::size_t j = 0; j < n; ++j) {
        KernelRow r;
        r.syn.resize(k);
        r.u.assign(n, 0);
        r.u[j] = 1;
        for (std::size_t i = 0; i < k; ++i) {
            const auto& g = gens[i];
            r.syn[i] = (j < sh.alpha) ? static_cast<std::uint8_t>(2 * g.bin(j))
                                      : g.quat(j - sh.alpha);
        }
        pool.push_back(std::move(r));
    }

    // Howell-style elimination on the syndrome part. Rows whose syndrome
    // vanishes track kernel elements; retiring a 2-pivot spawns its
    // double so that no kernel element is lost.
    std::vector<KernelRow> pivots;
    for (std::size_t p = 0; p < k; ++p) {
        std::size_t unit = pool.size();
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (pool[i].syn[p] & 1u) {
                unit = i;
                break;
            }
        if (unit < pool.size()) {
            KernelRow piv = std::move(pool[unit]);
            pool.erase(pool.begin() + unit);
            if (piv.syn[p] == 3) axpy(piv, 2, piv);  // 3 * row == row + 2*row
            assert(piv.syn[p] == 1);
            for (auto& r : pool) {
                unsigned e = r.syn[p];
                if (e) axpy(r, 4 - e, piv);
            }
            pivots.push_back(std::move(piv));
            continue;
        }
        std::size_t two = pool.size();
        for (std::size_t i = 0; i < pool.size(); ++i)
            if (pool[i].syn[p] == 2) {
                two = i;
                break;
            }
        if (two < pool.size()) {
            KernelRow piv = std::move(pool[two]);
            pool.erase(pool.begin() + two);
            for (auto& r : pool)
                if (r.syn[p] == 2) axpy(r, 1, piv);
            // 2*pivot has zero entry at every processed position and may
            // still reach the kernel through later positions.
            KernelRow doubled = piv;
            axpy(doubled, 1, piv);
            pool.push_back(std::move(doubled));
            pivots.push_back(std::move(piv));
        }
    }

    MixedMatrix out(sh);
    for (const auto& r : pool) {
        bool zero = true;
        for (auto s : r.syn)
            if (s) {
                zero = false;
                break;
            }
        if (!zero) continue;
        std::vector<std::uint8_t> bin(r.u.begin(), r.u.begin() + sh.alpha);
        for (auto& b : bin) b &= 1u;
        std::vector<std::uint8_t> quat(r.u.begin() + sh.alpha, r.u.end());
        out.append_row(MixedVector(std::move(bin), std::move(quat)));
    }
    return AdditiveCode(out);
}

AdditiveCode code_from_parity(const MixedMatrix& h) {
    return dual(AdditiveCode(h));
}

CodeType dual_type(const CodeType& t) {
    if (t.kappa > t.gamma || t.kappa > t.alpha || t.delta > t.beta ||
        t.gamma + t.delta > t.alpha + t.beta)
        throw std::invalid_argument("invalid code type");
    CodeType d;
    d.alpha = t.alpha;
    d.beta = t.beta;
    d.gamma = t.alpha + t.gamma - 2 * t.kappa;
    d.delta = t.beta - t.gamma - t.delta + t.kappa;
    d.kappa = t.alpha - t.kappa;
    return d;
}

}  // namespace z2z4
