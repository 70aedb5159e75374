#pragma once

#include "richelot/curves.hpp"

namespace richelot {

/// A genus-3 hyperelliptic curve moved so that a chosen involution becomes x -> -x.
struct NormalizedHyperelliptic {
    HyperellipticG3 curve; // even octic with nonzero constant and leading terms
    Matrix conjugation;    // new form = old form o conjugation, over curve.field()
    FieldPtr base;         // field of the input curve
    bool extended = false; // curve.field() is the quadratic extension of base
};

/// Sends the fixed points of m to 0 and infinity, passing to F_{q^2} when they are not
/// rational. Throws NormalizationFailed when m is not a good involution of c.
NormalizedHyperelliptic normalize_hyperelliptic(const HyperellipticG3 &c, const Matrix &m);

/// s^2 = g(X) where the normalized octic is g(x^2).
Genus1Model elliptic_quotient_hyp(const NormalizedHyperelliptic &n);

/// s^2 = X g(X), homogenized with a branch point at infinity.
Genus2Model genus2_quotient_hyp(const NormalizedHyperelliptic &n);

/// A plane quartic moved so that a chosen involution becomes x -> -x:
/// c x^4 + x^2 q2(y, z) + q4(y, z).
struct NormalizedQuartic {
    EvenDecomposition parts;
    Matrix conjugation; // columns: center, then the axis basis
    FieldPtr base;
    bool extended = false;
};

/// Throws HyperellipticContradiction when c = 0 and DegenerateDiscriminant when
/// q2^2 - 4 c q4 is not squarefree.
NormalizedQuartic normalize_quartic(const PlaneQuartic &c, const Matrix &m);

/// q2^2 - 4 c q4.
BinaryForm quartic_discriminant(const NormalizedQuartic &n);

/// s^2 = q2^2 - 4 c q4, from completing the square in x^2.
Genus1Model elliptic_quotient_quartic(const NormalizedQuartic &n);

struct HoweQuotients {
    Genus1Model e1;
    Genus1Model e2;
    Genus1Model e3; // s^2 = f1 f2 / gcd^2
};

/// Throws WrongGenus unless r = 2.
HoweQuotients howe_quotients(const HoweSystem &h);

/// Geometric points of y^2 = f1 over the branch points of f2 that are not branch points
/// of f1; equals 2 (4 - r).
int howe_branch_count(const HoweSystem &h);

} // namespace richelot
