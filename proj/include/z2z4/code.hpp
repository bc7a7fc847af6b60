#ifndef Z2Z4_CODE_HPP
#define Z2Z4_CODE_HPP

#include <cstdint>
#include <functional>
#include <vector>

#include "z2z4/matrix.hpp"

namespace z2z4 {

/// Refusal threshold for operations that walk all codewords:
/// enumeration is rejected when gamma + 2*delta exceeds this many bits.
inline constexpr std::size_t kDefaultGuardLog2 = 24;

/// A split-preserving coordinate permutation together with sign flips on
/// quaternary coordinates. Coordinates are 0-based internally; the cycle
/// notation in io.hpp is 1-based.
class Monomial {
  public:
    /// Identity on the empty shape; placeholder for aggregates.
    Monomial() = default;
    explicit Monomial(Shape s);
    /// perm[i] is the image of coordinate i. Binary coordinates must map
    /// to binary coordinates and quaternary to quaternary.
    Monomial(Shape s, std::vector<std::uint32_t> perm,
             std::vector<std::uint8_t> quat_signs = {});

    Shape shape() const { return shape_; }
    const std::vector<std::uint32_t>& perm() const { return perm_; }
    /// One flag per quaternary coordinate.
    const std::vector<std::uint8_t>& signs() const { return signs_; }
    bool is_identity() const;

    MixedVector apply(const MixedVector& v) const;
    /// Composition acting as (*this)(other(v)).
    Monomial after(const Monomial& other) const;
    Monomial inverse() const;

    friend bool operator==(const Monomial&, const Monomial&) = default;

  private:
    Shape shape_;
    std::vector<std::uint32_t> perm_;
    std::vector<std::uint8_t> signs_;
};

/// An additive code held as its canonical reduced generator matrix with
/// the type cached. Immutable after construction.
class AdditiveCode {
  public:
    explicit AdditiveCode(Shape s);  // zero code
    explicit AdditiveCode(const MixedMatrix& gens);

    Shape shape() const { return gens_.shape(); }
    const CodeType& type() const { return type_; }
    /// Canonical generators, order-four rows first.
    const MixedMatrix& gens() const { return gens_; }
    const std::vector<MixedVector>& rows4() const { return rows4_; }
    const std::vector<MixedVector>& rows2() const { return rows2_; }

    std::uint64_t size() const { return std::uint64_t{1} << type_.log2_size(); }

    bool contains(const MixedVector& v) const;

    /// Visit every codeword exactly once; one generator-add per step.
    void enumerate(const std::function<void(const MixedVector&)>& visit,
                   std::size_t guard_log2 = kDefaultGuardLog2) const;
    std::vector<MixedVector> codewords(std::size_t guard_log2 = kDefaultGuardLog2) const;

    /// Minimum Lee weight over nonzero codewords; equals the minimum
    /// Hamming distance of the Gray image by translation invariance.
    std::size_t min_distance(std::size_t guard_log2 = kDefaultGuardLog2) const;

    /// Codes are canonical, so equality is generator-matrix equality.
    friend bool operator==(const AdditiveCode&, const AdditiveCode&) = default;

  private:
    MixedMatrix gens_;
    std::vector<MixedVector> rows4_;
    std::vector<MixedVector> rows2_;
    CodeType type_;
};

AdditiveCode apply_monomial(const AdditiveCode& c, const Monomial& m);
MixedMatrix apply_monomial(const MixedMatrix& m, const Monomial& mono);

/// Parity extension on a parity-check matrix: a zero binary column is
/// inserted at position 1 and the all-(1|2) row is prepended. The dual
/// type rises from (alpha,beta;g,d) to (alpha+1,beta;g+1,d).
MixedMatrix extend_parity(const MixedMatrix& h);

/// Exact inverse of extend_parity on codes: requires the all-(1|2) row
/// in the row space of h and alpha >= 1.
MixedMatrix puncture_parity(const MixedMatrix& h);

/// The all-ones/all-twos vector (1...1|2...2) of the given shape.
MixedVector all_one_two(Shape s);

}  // namespace z2z4

#endif
