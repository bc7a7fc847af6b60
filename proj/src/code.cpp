#include "z2z4/code.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace z2z4 {

Monomial::Monomial(Shape s)
    : shape_(s), perm_(s.width()), signs_(s.beta, 0) {
    std::iota(perm_.begin(), perm_.end(), 0u);
}

Monomial::Monomial(Shape s, std::vector<std::uint32_t> perm,
                   std::vector<std::uint8_t> quat_signs)
    : shape_(s), perm_(std::move(perm)), signs_(std::move(quat_signs)) {
    if (perm_.size() != s.width())
        throw std::invalid_argument("permutation length mismatch");
    if (signs_.empty()) signs_.assign(s.beta, 0);
    if (signs_.size() != s.beta)
        throw std::invalid_argument("sign vector length mismatch");
    std::vector<bool> seen(perm_.size(), false);
    for (std::size_t i = 0; i < perm_.size(); ++i) {
        std::uint32_t img = perm_[i];
        if (img >= perm_.size() || seen[img])
            throw std::invalid_argument("not a permutation");
        seen[img] = true;
        const bool src_bin = i < s.alpha;
        const bool dst_bin = img < s.alpha;
        if (src_bin != dst_bin)
            throw std::invalid_argument("permutation does not preserve the binary/quaternary split");
    }
}

bool Monomial::is_identity() const {
    for (std::size_t i = 0; i < perm_.size(); ++i)
        if (perm_[i] != i) return false;
    for (auto s : signs_)
        if (s) return false;
    return true;
}

MixedVector Monomial::apply(const MixedVector& v) const {
    if (v.shape() != shape_) throw std::invalid_argument("shape mismatch");
    MixedVector w(shape_);
    for (std::size_t i = 0; i < shape_.alpha; ++i) w.set_bin(perm_[i], v.bin(i));
    for (std::size_t j = 0; j < shape_.beta; ++j)
        w.set_quat(perm_[shape_.alpha + j] - shape_.alpha, v.quat(j));
    for (std::size_t k = 0; k < shape_.beta; ++k)
        if (signs_[k]) w.set_quat(k, static_cast<std::uint8_t>((4 - w.quat(k)) & 3));
    return w;
}

Monomial Monomial::after(const Monomial& other) const {
    if (shape_ != other.shape_) throw std::invalid_argument("shape mismatch");
    std::vector<std::uint32_t> p(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) p[i] = perm_[other.perm_[i]];
    // Flips of `other` land on this->perm-permuted positions; flips
    // commute, so they combine by symmetric difference.
    std::vector<std::uint8_t> s(shape_.beta, 0);
    for (std::size_t k = 0; k < shape_.beta; ++k) {
        if (other.signs_[k])
            s[perm_[shape_.alpha + k] - shape_.alpha] ^= 1;
    }
    for (std::size_t k = 0; k < shape_.beta; ++k) s[k] ^= signs_[k];
    return Monomial(shape_, std::move(p), std::move(s));
}

Monomial Monomial::inverse() const {
    std::vector<std::uint32_t> p(perm_.size());
    for (std::size_t i = 0; i < perm_.size(); ++i) p[perm_[i]] = static_cast<std::uint32_t>(i);
    std::vector<std::uint8_t> s(shape_.beta, 0);
    for (std::size_t k = 0; k < shape_.beta; ++k)
        if (signs_[k]) s[p[shape_.alpha + k] - shape_.alpha] = 1;
    return Monomial(shape_, std::move(p), std::move(s));
}

AdditiveCode::AdditiveCode(Shape s) : gens_(s) { type_ = {s.alpha, s.beta, 0, 0, 0}; }

AdditiveCode::AdditiveCode(const MixedMatrix& gens) : gens_(gens.shape()) {
    ReducedRows rr = standard_reduce(gens);
    rows4_ = std::move(rr.rows4);
    rows2_ = std::move(rr.rows2);
    for (const auto& r : rows4_) gens_.append_row(r);
    for (const auto& r : rows2_) gens_.append_row(r);
    type_.alpha = gens.shape().alpha;
    type_.beta = gens.shape().beta;
    type_.gamma = rows2_.size();
    type_.delta = rows4_.size();
    if (type_.alpha > 0) {
        std::vector<std::vector<std::uint8_t>> bins;
        for (const auto& r : rows2_) bins.push_back(r.bin());
        type_.kappa = binary_rank(std::move(bins));
    }
}

namespace {

// In canonical form the pivot of an order-four row is its first odd
// quaternary entry; order-two rows pivot at their first 2-entry, or at
// their first binary 1 when the quaternary part is zero.
std::size_t quat_pivot4(const MixedVector& r) {
    for (std::size_t j = 0; j < r.beta(); ++j)
        if (r.quat(j) & 1u) return j;
    throw std::logic_error("order-four row without unit entry");
}

}  // namespace

bool AdditiveCode::contains(const MixedVector& v) const {
    if (v.shape() != shape()) throw std::invalid_argument("shape mismatch");
    MixedVector w = v;
    for (const auto& r : rows4_) {
        unsigned e = w.quat(quat_pivot4(r));
        if (e) w -= e * r;
    }
    for (const auto& r : rows2_) {
        bool matched = false;
        for (std::size_t j = 0; j < r.beta(); ++j) {
            if (r.quat(j) == 2) {
                if (w.quat(j) & 1u) return false;
                if (w.quat(j) == 2) w -= r;
                matched = true;
                break;
            }
        }
        if (!matched) {
            for (std::size_t i = 0; i < r.alpha(); ++i)
                if (r.bin(i)) {
                    if (w.bin(i)) w -= r;
                    break;
                }
        }
    }
    return w.is_zero();
}

void AdditiveCode::enumerate(const std::function<void(const MixedVector&)>& visit,
                             std::size_t guard_log2) const {
    if (type_.log2_size() > guard_log2)
        throw std::length_error("enumeration guard exceeded");
    std::vector<const MixedVector*> gens;
    std::vector<unsigned> radix;
    for (const auto& r : rows4_) {
        gens.push_back(&r);
        radix.push_back(4);
    }
    for (const auto& r : rows2_) {
        gens.push_back(&r);
        radix.push_back(2);
    }
    MixedVector cur(shape());
    // Odometer walk: each leaf is reached with one generator-add, and a
    // full cycle of adds returns each level to its starting value.
    auto rec = [&](auto&& self, std::size_t level) -> void {
        if (level == gens.size()) {
            visit(cur);
            return;
        }
        for (unsigned c = 0; c < radix[level]; ++c) {
            self(self, level + 1);
            cur += *gens[level];
        }
    };
    rec(rec, 0);
}

std::vector<MixedVector> AdditiveCode::codewords(std::size_t guard_log2) const {
    std::vector<MixedVector> out;
    out.reserve(static_cast<std::size_t>(size()));
    enumerate([&](const MixedVector& v) { out.push_back(v); }, guard_log2);
    return out;
}

std::size_t AdditiveCode::min_distance(std::size_t guard_log2) const {
    if (type_.log2_size() == 0) throw std::domain_error("zero code has no minimum distance");
    std::size_t best = shape().binary_length() + 1;
    enumerate(
        [&](const MixedVector& v) {
            if (v.is_zero()) return;
            best = std::min(best, lee_weight(v));
        },
        guard_log2);
    return best;
}

MixedMatrix apply_monomial(const MixedMatrix& m, const Monomial& mono) {
    MixedMatrix out(m.shape());
    for (const auto& r : m.rows()) out.append_row(mono.apply(r));
    return out;
}

AdditiveCode apply_monomial(const AdditiveCode& c, const Monomial& m) {
    return AdditiveCode(apply_monomial(c.gens(), m));
}

MixedVector all_one_two(Shape s) {
    MixedVector v(s);
    for (std::size_t i = 0; i < s.alpha; ++i) v.set_bin(i, 1);
    for (std::size_t j = 0; j < s.beta; ++j) v.set_quat(j, 2);
    return v;
}

MixedMatrix extend_parity(const MixedMatrix& h) {
    Shape es{h.shape().alpha + 1, h.shape().beta};
    MixedMatrix out(es);
    out.append_row(all_one_two(es));
    for (const auto& r : h.rows()) {
        std::vector<std::uint8_t> bin;
        bin.reserve(es.alpha);
        bin.push_back(0);
        bin.insert(bin.end(), r.bin().begin(), r.bin().end());
        out.append_row(MixedVector(std::move(bin), r.quat()));
    }
    return out;
}

MixedMatrix puncture_parity(const MixedMatrix& h) {
    if (h.shape().alpha < 1)
        throw std::invalid_argument("puncture needs at least one binary coordinate");
    const MixedVector parity = all_one_two(h.shape());
    if (!AdditiveCode(h).contains(parity))
        throw std::invalid_argument("matrix row space lacks the all-(1|2) row");
    Shape ps{h.shape().alpha - 1, h.shape().beta};
    MixedMatrix out(ps);
    for (const auto& row : h.rows()) {
        MixedVector r = row;
        if (r.bin(0)) r += parity;
        std::vector<std::uint8_t> bin(r.bin().begin() + 1, r.bin().end());
        out.append_row(MixedVector(std::move(bin), r.quat()));
    }
    return out;
}

}  // namespace z2z4
