#ifndef Z2Z4_VECTOR_HPP
#define Z2Z4_VECTOR_HPP

#include <cstdint>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace z2z4 {

/// Coordinate layout of the ambient group Z2^alpha x Z4^beta.
struct Shape {
    std::size_t alpha = 0;
    std::size_t beta = 0;

    std::size_t width() const { return alpha + beta; }
    std::size_t binary_length() const { return alpha + 2 * beta; }
    friend bool operator==(const Shape&, const Shape&) = default;
};

/// An element of Z2^alpha x Z4^beta. Binary entries stay in {0,1};
/// the inner product supplies the doubling, not the storage.
class MixedVector {
  public:
    MixedVector() = default;
    explicit MixedVector(Shape s)
        : shape_(s), bin_(s.alpha, 0), quat_(s.beta, 0) {}
    MixedVector(std::vector<std::uint8_t> bin, std::vector<std::uint8_t> quat)
        : shape_{bin.size(), quat.size()}, bin_(std::move(bin)), quat_(std::move(quat)) {
        for (auto b : bin_)
            if (b > 1) throw std::invalid_argument("binary entry out of {0,1}");
        for (auto q : quat_)
            if (q > 3) throw std::invalid_argument("quaternary entry out of Z4");
    }

    Shape shape() const { return shape_; }
    std::size_t alpha() const { return shape_.alpha; }
    std::size_t beta() const { return shape_.beta; }

    std::uint8_t bin(std::size_t i) const { return bin_[i]; }
    std::uint8_t quat(std::size_t j) const { return quat_[j]; }
    void set_bin(std::size_t i, std::uint8_t v) { bin_[i] = v & 1u; }
    void set_quat(std::size_t j, std::uint8_t v) { quat_[j] = v & 3u; }

    const std::vector<std::uint8_t>& bin() const { return bin_; }
    const std::vector<std::uint8_t>& quat() const { return quat_; }

    bool is_zero() const {
        for (auto b : bin_)
            if (b) return false;
        for (auto q : quat_)
            if (q) return false;
        return true;
    }

    MixedVector& operator+=(const MixedVector& o) {
        check_shape(o);
        for (std::size_t i = 0; i < bin_.size(); ++i) bin_[i] ^= o.bin_[i];
        for (std::size_t j = 0; j < quat_.size(); ++j)
            quat_[j] = (quat_[j] + o.quat_[j]) & 3u;
        return *this;
    }
    MixedVector& operator-=(const MixedVector& o) {
        check_shape(o);
        for (std::size_t i = 0; i < bin_.size(); ++i) bin_[i] ^= o.bin_[i];
        for (std::size_t j = 0; j < quat_.size(); ++j)
            quat_[j] = (quat_[j] + 4u - o.quat_[j]) & 3u;
        return *this;
    }
    friend MixedVector operator+(MixedVector a, const MixedVector& b) { return a += b; }
    friend MixedVector operator-(MixedVector a, const MixedVector& b) { return a -= b; }

    /// Scalar multiple in Z4 (binary part sees c mod 2).
    friend MixedVector operator*(unsigned c, MixedVector v) {
        for (auto& b : v.bin_) b = static_cast<std::uint8_t>((b * c) & 1u);
        for (auto& q : v.quat_) q = static_cast<std::uint8_t>((q * c) & 3u);
        return v;
    }
    MixedVector operator-() const { return 3u * *this; }

    friend bool operator==(const MixedVector&, const MixedVector&) = default;
    friend auto operator<=>(const MixedVector& a, const MixedVector& b) {
        if (auto c = a.bin_ <=> b.bin_; c != 0) return c;
        return a.quat_ <=> b.quat_;
    }

  private:
    void check_shape(const MixedVector& o) const {
        if (shape_ != o.shape_) throw std::invalid_argument("shape mismatch");
    }
    Shape shape_;
    std::vector<std::uint8_t> bin_;
    std::vector<std::uint8_t> quat_;
};

/// Smallest k in {1,2,4} with k*v = 0.
inline unsigned element_order(const MixedVector& v) {
    for (auto q : v.quat())
        if (q & 1u) return 4;
    return v.is_zero() ? 1 : 2;
}

/// Mixed inner product: 2*(binary dot) + (quaternary dot) in Z4.
inline std::uint8_t inner_product(const MixedVector& u, const MixedVector& v) {
    if (u.shape() != v.shape()) throw std::invalid_argument("shape mismatch");
    unsigned acc = 0;
    for (std::size_t i = 0; i < u.alpha(); ++i) acc += 2u * u.bin(i) * v.bin(i);
    for (std::size_t j = 0; j < u.beta(); ++j) acc += u.quat(j) * v.quat(j);
    return static_cast<std::uint8_t>(acc & 3u);
}

/// Gray image: binary part verbatim, each Z4 entry mapped
/// 0->00, 1->01, 2->11, 3->10. Length alpha + 2*beta.
inline std::vector<std::uint8_t> gray_map(const MixedVector& v) {
    static constexpr std::uint8_t hi[4] = {0, 0, 1, 1};
    static constexpr std::uint8_t lo[4] = {0, 1, 1, 0};
    std::vector<std::uint8_t> out;
    out.reserve(v.shape().binary_length());
    out.insert(out.end(), v.bin().begin(), v.bin().end());
    for (auto q : v.quat()) {
        out.push_back(hi[q]);
        out.push_back(lo[q]);
    }
    return out;
}

/// Hamming weight of the Gray image (binary weight + Lee weights).
inline std::size_t lee_weight(const MixedVector& v) {
    static constexpr std::size_t lee[4] = {0, 1, 2, 1};
    std::size_t w = 0;
    for (auto b : v.bin()) w += b;
    for (auto q : v.quat()) w += lee[q];
    return w;
}

}  // namespace z2z4

#endif
