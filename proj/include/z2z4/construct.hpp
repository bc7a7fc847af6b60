#ifndef Z2Z4_CONSTRUCT_HPP
#define Z2Z4_CONSTRUCT_HPP

#include <string>
#include <vector>

#include "z2z4/code.hpp"

namespace z2z4 {

/// t x (2^t - 1) binary parity-check matrix of the Hamming code; the
/// columns are all nonzero t-bit vectors in lexicographic order.
MixedMatrix hamming_parity(std::size_t t);

/// (t+1) x 2^t parity-check matrix of the extended Hamming code:
/// all-ones row on top, columns {1} x Z2^t in lexicographic order.
MixedMatrix extended_hamming_parity(std::size_t t);

/// Parity-check (dual generator) matrix of the extended perfect
/// Z4-linear code of binary length 2^t with dual type
/// (0, 2^(t-1); t+1-2delta, delta). Columns are all vectors
/// (2a | 1, q), a in Z2^gamma, q in Z4^(delta-1), lexicographically.
/// t = 3 is admitted for desk-scale work below the theorem's range.
MixedMatrix extended_perfect_z4_dual(std::size_t t, std::size_t delta);

/// Parity-check matrix of the perfect Z2Z4-linear code of binary length
/// 2^t - 1 with dual type (2^r-1, 2^(t-1)-2^(r-1); 2r-t, t-r). Binary
/// columns are all nonzero vectors of Z2^r; quaternary columns one
/// representative (first odd entry 1) per {v,3v} orbit of the
/// order-four vectors of {0,2}^gamma x Z4^delta, lexicographically.
MixedMatrix perfect_z2z4_dual(std::size_t t, std::size_t r);
MixedMatrix extended_perfect_z2z4_dual(std::size_t t, std::size_t r);

/// Length-doubling of a quaternary parity-check matrix:
/// dual type (0,beta;g,d) -> (0,2beta;g+1,d).
MixedMatrix double_quaternary(const MixedMatrix& h);

/// Length-quadrupling: dual type (0,beta;g,d) -> (0,4beta;g,d+1).
MixedMatrix quadruple_quaternary(const MixedMatrix& h);

/// Doubling for alpha != 0: (alpha,beta;g,d) -> (2alpha,2beta;g+1,d).
MixedMatrix double_additive(const MixedMatrix& h);

/// Quadrupling for alpha != 0: requires dual gamma = 1 and the
/// all-(1|2) vector as first row; (alpha,beta;1,d) -> (2alpha,alpha+4beta;1,d+1).
MixedMatrix quadruple_additive(const MixedMatrix& h);

/// 1-based transposition (i,j) on global coordinates.
Monomial transposition(Shape s, std::size_t i, std::size_t j);

/// Companion permutations from the doubling/quadrupling proofs.
Monomial double_quaternary_pi(std::size_t beta);       // (1, beta+1) on (0,2beta)
Monomial quadruple_quaternary_pi1(std::size_t beta);   // (1, beta+1) on (0,4beta)
Monomial quadruple_quaternary_pi2(std::size_t beta);   // (1, 2beta+1) on (0,4beta)
std::vector<Monomial> double_additive_pis(Shape base);     // Id, (1,a+1), (2a+1,2a+b+1)
std::vector<Monomial> quadruple_additive_pis(Shape base);  // Id, (2a+1,3a+b+1), (3a+1,3a+2b+1), (1,a+1)

/// Repeat a quaternary permutation across `copies` aligned blocks of
/// the original length; companion to the doubling/quadrupling maps.
Monomial block_lift(const Monomial& m, std::size_t copies);

/// Lexicographic pair of quaternary perfect parity-check matrices at
/// beta = 4^m, of dual types (0,4^m;0,m+1) and (0,4^m;2m,1), together
/// with the transpositions sigma_1..sigma_m whose prefix products
/// pi_i realize intersection dual type (0,4^m;m+i,m+1).
struct LexPair {
    MixedMatrix h1;
    MixedMatrix h2;
    std::vector<Monomial> sigmas;
};
LexPair lemma_lex_pair(std::size_t m);

/// Bit-exact registry of the matrices displayed in the paper. Names are
/// stable CLI identifiers; unknown names throw.
MixedMatrix paper_matrix(const std::string& name);
std::vector<std::string> paper_matrix_names();

}  // namespace z2z4

#endif
