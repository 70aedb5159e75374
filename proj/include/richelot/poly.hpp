#pragma once

#include "richelot/field.hpp"

#include <cstdint>
#include <initializer_list>
#include <vector>

namespace richelot {

/// Univariate polynomial over a finite field, coefficients ascending. The zero polynomial
/// has no coefficients and degree -1.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(FieldPtr field);
    UniPoly(FieldPtr field, std::vector<Elem> coeffs);
    /// Integer coefficients, reduced into the prime subfield.
    static UniPoly from_ints(FieldPtr field, std::initializer_list<std::int64_t> coeffs);
    static UniPoly from_ints(FieldPtr field, const std::vector<std::int64_t> &coeffs);
    static UniPoly constant(FieldPtr field, Elem c);
    static UniPoly x(FieldPtr field);
    /// (x - root).
    static UniPoly linear(FieldPtr field, Elem root);

    const FieldPtr &field() const noexcept { return field_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }
    Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : Elem{}; }
    Elem lead() const noexcept { return c_.empty() ? Elem{} : c_.back(); }
    const std::vector<Elem> &coeffs() const noexcept { return c_; }

    Elem eval(Elem x) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    UniPoly scaled(Elem s) const;

    UniPoly operator+(const UniPoly &rhs) const;
    UniPoly operator-(const UniPoly &rhs) const;
    UniPoly operator*(const UniPoly &rhs) const;
    UniPoly operator-() const;
    /// Quotient and remainder; throws Error(ZeroPolynomial) on a zero divisor.
    void divmod(const UniPoly &divisor, UniPoly &quot, UniPoly &rem) const;
    UniPoly operator/(const UniPoly &rhs) const;
    UniPoly operator%(const UniPoly &rhs) const;

    friend bool operator==(const UniPoly &a, const UniPoly &b)
    {
        return a.field_ == b.field_ && a.c_ == b.c_;
    }

    std::string to_string() const;

  private:
    void trim();

    FieldPtr field_;
    std::vector<Elem> c_;
};

/// Monic gcd; Euclid's algorithm with monic normalization at each step.
UniPoly gcd(const UniPoly &a, const UniPoly &b);

/// base^e mod m.
UniPoly powmod(const UniPoly &base, std::uint64_t e, const UniPoly &m);

/// True iff gcd(f, f') is constant. Throws Error(ZeroPolynomial) for f = 0.
bool squarefree(const UniPoly &f);

/**
 * Resultant as the determinant of the Sylvester matrix, f-block rows first:
 * deg(g) rows of shifted f coefficients (descending), then deg(f) rows of g.
 * Vanishes iff f and g share a root over the algebraic closure. Throws Error(BothZero).
 */
Elem resultant(const UniPoly &f, const UniPoly &g);

/// Product of the distinct monic irreducible factors of f (valid in every characteristic).
UniPoly radical(const UniPoly &f);

/// Number of distinct roots over the algebraic closure.
int distinct_root_count(const UniPoly &f);

/// Number of distinct roots in the coefficient field: deg gcd(f, x^q - x).
int rational_root_count(const UniPoly &f);

/// Distinct roots in the coefficient field, sorted. Equal-degree splitting with a
/// deterministic shift sequence.
std::vector<Elem> roots(const UniPoly &f);

/// Smallest s such that every root of f lies in the degree-s extension of its field.
unsigned splitting_degree(const UniPoly &f);

/**
 * Embedding of a field into an extension of it. Extensions are interned like fields; the
 * embedding sends the generator of the small field to the smallest root of its modulus in
 * the large field.
 */
class Extension {
  public:
    /// Extension of `base` of relative degree `degree` (base itself when degree == 1).
    static const Extension &of(const FieldPtr &base, unsigned degree);

    const FieldPtr &base() const noexcept { return base_; }
    const FieldPtr &target() const noexcept { return target_; }
    unsigned relative_degree() const noexcept { return degree_; }

    Elem map(Elem a) const;
    UniPoly map(const UniPoly &f) const;
    /// Element of the base field mapping to `a`, if any.
    bool preimage(Elem a, Elem &out) const;

  private:
    Extension() = default;

    FieldPtr base_;
    FieldPtr target_;
    unsigned degree_ = 1;
    std::vector<Elem> basis_images_;
};

} // namespace richelot
