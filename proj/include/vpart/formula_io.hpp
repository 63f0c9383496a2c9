#pragma once

// Serialisation of QuasiPolynomial: a JSON document that round-trips exactly
// (rationals are "p/q" strings), and a human-readable text rendering.
//
// JSON layout:
//   {"columns": [[x, y], ...],
//    "chambers": [{"index": k, "lower_ray": [x, y], "upper_ray": [x, y],
//                  "polynomial": [[i, j, "p/q"], ...],
//                  "periodic": [{"pair": [i, j], "aux": m, "f": f, "g": g,
//                                "modulus": Y, "residues": [...],
//                                "linear_form": [a1, a2], "shift": s,
//                                "table": ["p/q", ...]}]}]}
// Chamber and column indices are 1-based in the document.

#include <string>
#include <string_view>

#include "vpart/quasipoly.hpp"

namespace vpart {

std::string formula_to_json(const QuasiPolynomial& q, int indent = 2);

/// Throws InvalidInput on malformed documents.
QuasiPolynomial formula_from_json(std::string_view text);

std::string render_text(const QuasiPolynomial& q);

/// Polynomial in the variables n1, n2, highest degree first, e.g. "n1*n2 - 1/4*n1^2 + 7/8".
std::string render_polynomial(const BivarPoly& p);

/// Parses {"columns": [[x, y], ...]} or a bare [[x, y], ...] list of columns.
/// Throws InvalidInput, or the ColumnMatrix validation errors.
ColumnMatrix parse_matrix_json(std::string_view text);

}  // namespace vpart
