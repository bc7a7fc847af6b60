#ifndef Z2Z4_IO_HPP
#define Z2Z4_IO_HPP

#include <iosfwd>
#include <map>
#include <string>

#include "z2z4/code.hpp"

namespace z2z4 {

/// Text format: header `alpha=<a> beta=<b>`, then one row per line as
/// alpha digits from {0,1}, a `|` separator (omitted when either side is
/// empty), and beta digits from {0,1,2,3}. Round-trips byte-identically.
MixedMatrix parse_matrix(const std::string& text);
std::string emit_matrix(const MixedMatrix& m);

/// Disjoint cycles of 1-based global coordinates, e.g. "(1,2)(3,4,5)";
/// `!k` suffixes flip the sign of quaternary coordinate k. Empty text or
/// "Id" is the identity.
Monomial parse_permutation(const std::string& text, Shape shape);
std::string emit_permutation(const Monomial& m);

std::string format_type(const CodeType& t);

/// `key=value` per line; '#' starts a comment.
std::map<std::string, std::string> parse_config(std::istream& in);

}  // namespace z2z4

#endif
