#pragma once

#include "apsym/diff_poly.hpp"
#include "apsym/multivector.hpp"
#include "apsym/pseudo_diff_op.hpp"

#include <string>

namespace apsym {

/// Name of u_k in model syntax: u, u_x, ..., u_xxxx, then u{5}, u{6}, ...
std::string jet_name(int order, int component = 0, int components = 1);

/// Canonical model-syntax rendering; parses back to the same value.
/// Terms are grouped by eps-degree, e.g. "u^2 + eps*(6*u*u_x - u_xxx)".
std::string to_text(DiffPoly const &P);
std::string to_text(PseudoDiffOp const &A);
std::string to_text(MultiVector const &V);

/// LaTeX with subscripted derivatives, e.g. "\varepsilon(6uu_x - u_{xxx})".
std::string to_latex(DiffPoly const &P);
std::string to_latex(PseudoDiffOp const &A);
std::string to_latex(MultiVector const &V);

} // namespace apsym
