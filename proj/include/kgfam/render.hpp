#pragma once

// Human-readable renderings: plain Unicode text and LaTeX.
//
// xi-polynomials are grouped by the number of factors d of each monomial and
// written as (integer numerator)/d!, the way the families are usually typeset:
//   At_4 = xi4 + (2xi1xi3+xi2^2)/2! + 3xi1^2xi2/3! + xi1^4/4!
// Resolvent coefficients are written per pole order:
//   A_3 = xi3/(t-xi0)^2 + 2xi1xi2/(t-xi0)^3 + xi1^3/(t-xi0)^4

#include <string>

#include "kgfam/family.hpp"
#include "kgfam/polynomial.hpp"
#include "kgfam/scalar.hpp"

namespace kgfam {

enum class Notation { text, latex };

std::string render_atilde(const XiPoly& p, Notation n = Notation::text);
std::string render_resolvent(const ResolventExpansion& a, Notation n = Notation::text);

/// Plain sum of monomials with explicit coefficients, e.g. "xi2 + 1/2 xi1^2".
std::string render_xi_poly(const XiPoly& p, Notation n = Notation::text);

std::string render_x_poly(const SparsePoly<Cplx>& p, Notation n = Notation::text);
std::string render_x_poly(const SparsePoly<QCplx>& p, Notation n = Notation::text);

std::string render_form(const LinearForm<Cplx>& f, Notation n = Notation::text);
std::string render_form(const LinearForm<QCplx>& f, Notation n = Notation::text);

std::string format_cplx(const Cplx& z);

} // namespace kgfam
