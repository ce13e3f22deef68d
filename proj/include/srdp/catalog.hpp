#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "srdp/basis2d.hpp"

namespace srdp {

/// Divides p by (v - root) exactly; nullopt if the division leaves a remainder.
std::optional<Polynomial> divide_linear(const Polynomial& p, Variable v, const Rational& root);

/// Human-readable form with the rational content and the linear factors
/// x, x +- 1, y, y +- 1 pulled out, e.g. "-1/4 (x - 1) (y - 1) (x + y + 1)".
std::string factored_string(const Polynomial& p);

/// One line per grid row listing every slot ("0" for empty slots).
void write_basis_text(std::ostream& os, const BasisArray& b);

/// One record per nonzero entry:
///   i j n ex_1 ey_1 num_1 den_1 ... ex_n ey_n num_n den_n
/// Integers are written in base 10 at full precision.
void write_basis_records(std::ostream& os, const BasisArray& b);

struct BasisRecord {
    Slot slot;
    Polynomial polynomial;
};

/// Inverse of write_basis_records. Throws Error on malformed input.
std::vector<BasisRecord> parse_basis_records(std::istream& is);

}  // namespace srdp
