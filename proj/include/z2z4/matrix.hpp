#ifndef Z2Z4_MATRIX_HPP
#define Z2Z4_MATRIX_HPP

#include <cstddef>
#include <vector>

#include "z2z4/vector.hpp"

namespace z2z4 {

/// The abelian-group parameters (alpha,beta;gamma,delta;kappa) of an
/// additive code.
struct CodeType {
    std::size_t alpha = 0;
    std::size_t beta = 0;
    std::size_t gamma = 0;
    std::size_t delta = 0;
    std::size_t kappa = 0;

    /// log2 |C| = gamma + 2*delta.
    std::size_t log2_size() const { return gamma + 2 * delta; }
    friend bool operator==(const CodeType&, const CodeType&) = default;
    friend auto operator<=>(const CodeType&, const CodeType&) = default;
};

/// Ordered rows over Z2^alpha x Z4^beta; generator or parity-check
/// matrix. Rows may be dependent or zero before reduction.
class MixedMatrix {
  public:
    MixedMatrix() = default;
    explicit MixedMatrix(Shape s) : shape_(s) {}
    MixedMatrix(Shape s, std::vector<MixedVector> rows)
        : shape_(s), rows_(std::move(rows)) {
        for (const auto& r : rows_)
            if (r.shape() != shape_)
                throw std::invalid_argument("row shape mismatch");
    }

    Shape shape() const { return shape_; }
    std::size_t row_count() const { return rows_.size(); }
    const MixedVector& row(std::size_t i) const { return rows_[i]; }
    const std::vector<MixedVector>& rows() const { return rows_; }

    void append_row(MixedVector r) {
        if (r.shape() != shape_) throw std::invalid_argument("row shape mismatch");
        rows_.push_back(std::move(r));
    }
    void append_rows(const MixedMatrix& m) {
        for (const auto& r : m.rows()) append_row(r);
    }

    friend bool operator==(const MixedMatrix&, const MixedMatrix&) = default;

  private:
    Shape shape_;
    std::vector<MixedVector> rows_;
};

/// Result of canonical reduction: independent order-four rows (delta of
/// them) followed by independent order-two rows (gamma).
struct ReducedRows {
    std::vector<MixedVector> rows4;
    std::vector<MixedVector> rows2;
};

/// Canonical reduction of a generating set. Pivot policy: unit pivots in
/// quaternary columns left to right, then 2-pivots in quaternary columns,
/// then 1-pivots in binary columns; pivot entries normalized, columns
/// cleared above and below. Zero rows are dropped.
ReducedRows standard_reduce(const MixedMatrix& m);

/// Type (alpha,beta;gamma,delta;kappa) of the code generated by m.
/// kappa is the Z2-rank of the binary restriction of the order-two
/// subcode; 0 whenever alpha = 0.
CodeType compute_type(const MixedMatrix& m);

/// Rank over Z2 of a list of binary vectors.
std::size_t binary_rank(std::vector<std::vector<std::uint8_t>> rows);

}  // namespace z2z4

#endif
