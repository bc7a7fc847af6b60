#ifndef Z2Z4_DUAL_HPP
#define Z2Z4_DUAL_HPP

#include "z2z4/code.hpp"

namespace z2z4 {

/// Exact annihilator of C under the mixed inner product, computed by a
/// kernel solve over Z4 (binary columns doubled), never by enumeration.
AdditiveCode dual(const AdditiveCode& c);

/// Dual of the code generated by the rows of h. Convenience for working
/// with parity-check matrices.
AdditiveCode code_from_parity(const MixedMatrix& h);

/// Type arithmetic of the dual:
/// (alpha,beta; alpha+gamma-2kappa, beta-gamma-delta+kappa; alpha-kappa).
CodeType dual_type(const CodeType& t);

}  // namespace z2z4

#endif
