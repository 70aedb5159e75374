#pragma once

#include "richelot/field.hpp"
#include "richelot/linalg.hpp"
#include "richelot/poly.hpp"

#include <utility>
#include <vector>

namespace richelot {

/// A projective point of P^1, normalized to (x : 1) or (1 : 0).
struct P1Point {
    Elem x;
    Elem w;

    friend auto operator<=>(const P1Point &, const P1Point &) = default;
};

/**
 * Homogeneous form of degree d in (x, w). coeffs()[i] is the coefficient of x^i w^(d-i),
 * so dehomogenizing at w = 1 gives a polynomial with the same coefficient vector.
 */
class BinaryForm {
  public:
    BinaryForm() = default;
    BinaryForm(FieldPtr field, unsigned degree);
    BinaryForm(FieldPtr field, unsigned degree, std::vector<Elem> coeffs);

    /// Requires deg f <= degree; the missing top degrees become roots at infinity.
    static BinaryForm homogenize(const UniPoly &f, unsigned degree);

    const FieldPtr &field() const noexcept { return field_; }
    unsigned degree() const noexcept { return degree_; }
    Elem coeff(unsigned i) const noexcept { return c_[i]; }
    const std::vector<Elem> &coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept;

    UniPoly dehomogenize() const;
    Elem eval(Elem x, Elem w) const;
    Elem eval(const P1Point &pt) const { return eval(pt.x, pt.w); }

    /// F(m00 x + m01 w, m10 x + m11 w). Throws Error(SingularMatrix) when det m = 0.
    BinaryForm transform(const Matrix &m) const;

    BinaryForm operator*(const BinaryForm &rhs) const;
    BinaryForm operator+(const BinaryForm &rhs) const;
    BinaryForm scaled(Elem s) const;
    bool proportional_to(const BinaryForm &other, Elem *scale = nullptr) const;

    /// Multiplicity of the root (1 : 0).
    unsigned multiplicity_at_infinity() const;
    /// No repeated projective root. Throws Error(ZeroPolynomial) for the zero form.
    bool squarefree() const;
    /// Number of distinct projective roots over the algebraic closure.
    int distinct_root_count() const;
    /// Projective roots rational over the coefficient field, sorted.
    std::vector<P1Point> rational_roots() const;

    BinaryForm base_change(const Extension &ext) const;

    friend bool operator==(const BinaryForm &a, const BinaryForm &b)
    {
        return a.field_ == b.field_ && a.degree_ == b.degree_ && a.c_ == b.c_;
    }

  private:
    FieldPtr field_;
    unsigned degree_ = 0;
    std::vector<Elem> c_;
};

/// Common part of two binary forms: gcd of the dehomogenizations times the shared
/// power of w.
BinaryForm form_gcd(const BinaryForm &a, const BinaryForm &b);

/// Exact quotient a / b of binary forms; throws Error(NotDivisible) otherwise.
BinaryForm form_divide(const BinaryForm &a, const BinaryForm &b);

/// Projective point of P^2 as a coordinate triple.
using P2Vec = std::vector<Elem>;

/// Homogeneous form of degree d in (x, y, z). coeff(i, j) multiplies x^i y^j z^(d-i-j).
class TernaryForm {
  public:
    TernaryForm() = default;
    TernaryForm(FieldPtr field, unsigned degree);

    const FieldPtr &field() const noexcept { return field_; }
    unsigned degree() const noexcept { return degree_; }
    Elem coeff(unsigned i, unsigned j) const noexcept { return c_[i * (degree_ + 1) + j]; }
    void set(unsigned i, unsigned j, Elem v) { c_[i * (degree_ + 1) + j] = v; }
    bool is_zero() const noexcept;

    Elem eval(Elem x, Elem y, Elem z) const;
    Elem eval(const P2Vec &v) const { return eval(v[0], v[1], v[2]); }
    /// Partial derivative in variable 0 (x), 1 (y) or 2 (z).
    TernaryForm partial(unsigned var) const;
    /// F(M (x, y, z)^T).
    TernaryForm transform(const Matrix &m) const;
    /// F(s*a + t*b) as a binary form in (s, t).
    BinaryForm restrict_to_line(const P2Vec &a, const P2Vec &b) const;
    /// F(x, y0, z0) as a polynomial in x.
    UniPoly restrict_x(Elem y0, Elem z0) const;

    TernaryForm operator*(const TernaryForm &rhs) const;
    TernaryForm operator+(const TernaryForm &rhs) const;
    TernaryForm scaled(Elem s) const;
    bool proportional_to(const TernaryForm &other, Elem *scale = nullptr) const;

    TernaryForm base_change(const Extension &ext) const;

    friend bool operator==(const TernaryForm &a, const TernaryForm &b)
    {
        return a.field_ == b.field_ && a.degree_ == b.degree_ && a.c_ == b.c_;
    }

  private:
    FieldPtr field_;
    unsigned degree_ = 0;
    std::vector<Elem> c_;
};

/// Split of an x -> -x invariant quartic: F = c x^4 + x^2 q2(y, z) + q4(y, z).
struct EvenDecomposition {
    Elem c;
    BinaryForm q2; // variables (y, z) in the roles of (x, w)
    BinaryForm q4;
};

/// Throws Error(NotInvariant) when F has a monomial of odd x-degree.
EvenDecomposition decompose_even(const TernaryForm &f);

/// c x^4 + x^2 q2 + q4.
TernaryForm recompose_even(const EvenDecomposition &d);

} // namespace richelot
