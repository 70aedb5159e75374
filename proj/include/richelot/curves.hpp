#pragma once

#include "richelot/forms.hpp"

#include <optional>
#include <string>
#include <variant>

namespace richelot {

/// s^2 = F(x, w) for an even-degree squarefree binary form F; genus deg F / 2 - 1.
struct DoubleCover {
    BinaryForm form;

    int genus() const noexcept { return static_cast<int>(form.degree()) / 2 - 1; }
    const FieldPtr &field() const noexcept { return form.field(); }
};

/// Genus-3 hyperelliptic curve with its branch octic.
struct HyperellipticG3 : DoubleCover {};
/// Genus-1 double cover by a quartic form (cubic inputs get a branch point at infinity).
struct Genus1Model : DoubleCover {};
/// Genus-2 double cover by a sextic form (quintic inputs get a branch point at infinity).
struct Genus2Model : DoubleCover {};

/// Smooth plane quartic F(x, y, z) = 0.
struct PlaneQuartic {
    TernaryForm form;

    int genus() const noexcept { return 3; }
    const FieldPtr &field() const noexcept { return form.field(); }
};

/**
 * Resolved fiber product of y1^2 = f1(x) and y2^2 = f2(x) over P^1. Both polynomials are
 * carried as quartic forms, so a cubic f_i has a branch point at infinity.
 */
struct HoweSystem {
    UniPoly f1;
    UniPoly f2;
    BinaryForm form1;
    BinaryForm form2;
    BinaryForm common; // shared part of form1 and form2, degree r
    int r = 0;

    int genus() const noexcept { return 5 - r; }
    const FieldPtr &field() const noexcept { return form1.field(); }
};

using CurveModel = std::variant<HyperellipticG3, PlaneQuartic, Genus1Model, Genus2Model, HoweSystem>;

int genus(const CurveModel &c);
const FieldPtr &field_of(const CurveModel &c);
/// "hyperelliptic", "quartic", "genus1", "genus2" or "howe".
const char *model_name(const CurveModel &c);

/// deg f in {7, 8}, squarefree. Throws WrongDegree or NotSquarefree.
HyperellipticG3 make_hyperelliptic(const UniPoly &f);
/// Degree-8 form with eight distinct projective roots.
HyperellipticG3 make_hyperelliptic(const BinaryForm &f8);

/// Degree 3 or 4.
Genus1Model make_genus1(const UniPoly &f);
Genus1Model make_genus1(const BinaryForm &d);
/// Degree 5 or 6.
Genus2Model make_genus2(const UniPoly &f);
Genus2Model make_genus2(const BinaryForm &g);

/// Certifies smoothness. Throws Zero, WrongDegree, or Singular (naming a witness point
/// when a small search finds one).
PlaneQuartic make_quartic(const TernaryForm &f);

/// Smoothness of a quartic form by the rank of the degree-7 Macaulay matrix of its partials.
bool quartic_is_smooth(const TernaryForm &f);

/// Singular point over F_{q^k} for the smallest k the search budget allows, if one exists.
std::optional<P2Vec> find_singular_point(const TernaryForm &f, FieldPtr *where = nullptr);

/// f1, f2 squarefree of degree 3 or 4. Throws WrongDegree, NotSquarefree, and
/// DegenerateSystem when f1 and f2 are the same polynomial.
HoweSystem make_howe(const UniPoly &f1, const UniPoly &f2);

/// The same curve over an extension of its field.
CurveModel base_change(const CurveModel &c, const Extension &ext);

} // namespace richelot
