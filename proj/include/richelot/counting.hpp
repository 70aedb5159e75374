#pragma once

#include "richelot/curves.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace richelot {

/// Number of worker threads point counting uses when none is passed (default 1).
void set_default_threads(unsigned n);
unsigned default_threads();

/**
 * Number of F_{q^n}-points on the nonsingular model of c. Every model enumerates a
 * projective line over F_{q^n}; quartics count the roots on each line through (1:0:0).
 * Throws BudgetExceeded when q^n > 10^7. Results do not depend on the thread count.
 */
std::int64_t count_points(const CurveModel &c, unsigned n, unsigned threads = 0);

/// N_1, ..., N_nmax.
std::vector<std::int64_t> point_counts(const CurveModel &c, unsigned nmax, unsigned threads = 0);

/// Numerator of the zeta function: sum c[i] T^i, degree 2g, c[0] = 1.
struct LPolynomial {
    std::uint64_t q = 0;
    int genus = 0;
    std::vector<std::int64_t> c;

    bool functional_equation_holds() const;
    /// q^n + 1 - (sum of n-th powers of the inverse roots).
    std::int64_t predicted_count(unsigned n) const;
    /// The L-polynomial of the same curve over F_{q^2}.
    LPolynomial over_quadratic_extension() const;
    std::string to_string() const;

    friend bool operator==(const LPolynomial &, const LPolynomial &) = default;
};

LPolynomial operator*(const LPolynomial &a, const LPolynomial &b);

/// Newton's identities on S_n = q^n + 1 - N_n for n = 1..g, completed by the functional
/// equation. Throws InconsistentCounts when the counts admit no integral solution.
LPolynomial l_polynomial_from_counts(std::uint64_t q, int genus, const std::vector<std::int64_t> &counts);

/// Fits from N_1..N_g and checks the prediction of N_{g+1} against a recount when
/// q^{g+1} is within the counting budget.
LPolynomial l_polynomial(const CurveModel &c, unsigned threads = 0);

/// Exact quotient L_C / L_E, which must satisfy the functional equation of the
/// complementary genus. Throws NotDivisible or BrokenFunctionalEquation.
LPolynomial l_divide(const LPolynomial &lc, const LPolynomial &le);

} // namespace richelot
