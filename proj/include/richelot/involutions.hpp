#pragma once

#include "richelot/curves.hpp"

#include <array>
#include <vector>

namespace richelot {

/**
 * Automorphism of a hyperelliptic model s^2 = F(x, w) in weighted coordinates:
 * (x : s : w) -> (a x + b w : mu s : c x + d w). On the affine chart this is
 * x -> (a x + b) / (c x + d), y -> mu y / (c x + d)^4. The pairs (m, mu) and (k m, k^4 mu)
 * act identically.
 */
struct HypAutomorphism {
    Matrix m;
    Elem mu;
};

/// The hyperelliptic involution y -> -y.
HypAutomorphism hyperelliptic_involution(const FieldPtr &field);

/// Composition: first b, then a.
HypAutomorphism compose(const HypAutomorphism &a, const HypAutomorphism &b);

/// True when both act identically.
bool same_action(const HypAutomorphism &a, const HypAutomorphism &b);

/// Möbius involutions preserving the branch octic, split by whether their fixed points
/// avoid the branch locus. Representatives are normalized (first nonzero entry 1) and sorted.
struct BranchInvolutions {
    std::vector<Matrix> good;
    std::vector<Matrix> order_four; // a fixed point is a branch point: the lifts have order 4
};

/// Exhaustive search over the trace-zero classes of PGL2(F_q). Throws BudgetExceeded
/// for q > 10^4.
BranchInvolutions find_branch_involutions(const HyperellipticG3 &c);

/// All harmonic homologies (center P, axis L) of P^2(F_q) preserving the quartic, as
/// normalized matrices sorted lexicographically. Throws BudgetExceeded when q^4 > 10^8.
std::vector<Matrix> find_quartic_involutions(const PlaneQuartic &c);

struct InvolutionRecord {
    enum class Model { Hyperelliptic, Quartic };

    Model model = Model::Hyperelliptic;
    Matrix matrix;
    Elem mu;           // hyperelliptic only
    int lift_sign = 0; // hyperelliptic: +1 for y -> y and -1 for y -> -y once the involution is x -> -x
    std::array<int, 3> eigenvalues{};
    int delta = 0;
    int quotient_genus = 0;
    bool is_long = false;

    HypAutomorphism automorphism() const { return {matrix, mu}; }
};

/// Center and axis of a planar involution, over F_q or F_{q^2} when the scaling that
/// makes it square to the identity needs a square root.
struct PlanarInvolutionData {
    FieldPtr field;
    Matrix matrix; // scalar multiple of M with matrix^2 = I, -1 on the center
    P2Vec center;
    std::vector<P2Vec> axis; // basis of the fixed line, in kernel order
};

/// Throws NotInvolution unless M is a non-scalar involution of PGL3 preserving the quartic.
PlanarInvolutionData planar_involution_data(const PlaneQuartic &c, const Matrix &m);

/// Eigenvalue multiset (sorted descending) of the action on x^i dx / y, i = 0, 1, 2.
/// Throws NotInvolution unless the automorphism preserves C and squares to the identity.
std::array<int, 3> differential_eigenvalues(const HyperellipticG3 &c, const HypAutomorphism &s);

/// Eigenvalues of the determinant-one representative of M acting on the coordinate
/// functionals. Throws NotInvolution.
std::array<int, 3> differential_eigenvalues(const PlaneQuartic &c, const Matrix &m);

/// Geometric fixed points of an involution of C, found over F_{q^2}.
int fixed_point_count(const HyperellipticG3 &c, const HypAutomorphism &s);
/// Points of C on the axis plus the center if it lies on C.
int fixed_point_count(const PlaneQuartic &c, const Matrix &m);

/// The two lifts of a good Möbius involution, long lift first.
std::pair<InvolutionRecord, InvolutionRecord> lift_involutions(const HyperellipticG3 &c, const Matrix &m);

InvolutionRecord quartic_record(const PlaneQuartic &c, const Matrix &m);

/// Whether the two involutions commute (as automorphisms of the curve).
bool commute(const InvolutionRecord &a, const InvolutionRecord &b);

/// The record of a * b for two commuting distinct involutions of the same curve.
InvolutionRecord product_record(const CurveModel &c, const InvolutionRecord &a, const InvolutionRecord &b);

} // namespace richelot
