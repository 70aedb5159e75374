#include "richelot/quotients.hpp"

#include "richelot/error.hpp"
#include "richelot/involutions.hpp"

namespace richelot {

namespace {

Matrix map_matrix(const Matrix &m, const Extension &ext)
{
    Matrix out(ext.target(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = ext.map(m(i, j));
    return out;
}

P1Point normalized_point(const Field &F, Elem x, Elem w)
{
    if (w.v == 0)
        return {F.one(), F.zero()};
    return {F.div(x, w), F.one()};
}

} // namespace

NormalizedHyperelliptic normalize_hyperelliptic(const HyperellipticG3 &c, const Matrix &m0)
{
    NormalizedHyperelliptic out;
    out.base = c.field();
    const Field &F0 = *c.field();
    if (m0.rows() != 2 || m0.field() != c.field() || F0.add(m0(0, 0), m0(1, 1)).v != 0 || m0.is_scalar())
        throw Error(Errc::NormalizationFailed, "not a Möbius involution of the curve's field");
    const Elem s0 = F0.neg(m0.determinant());
    Matrix m = m0;
    BinaryForm f = c.form;
    if (F0.chi(s0) < 0) {
        const auto &ext = Extension::of(c.field(), 2);
        m = map_matrix(m0, ext);
        f = c.form.base_change(ext);
        out.extended = true;
    }
    const FieldPtr &field = f.field();
    const Field &F = *field;
    const Elem t = *F.sqrt(F.neg(m.determinant()));
    const Elem a = m(0, 0), b = m(0, 1), cc = m(1, 0), d = m(1, 1);
    P1Point fixed[2];
    int i = 0;
    for (const Elem ev : {t, F.neg(t)}) {
        if (cc.v != 0)
            fixed[i++] = normalized_point(F, F.sub(ev, d), cc);
        else if (ev == a)
            fixed[i++] = {F.one(), F.zero()};
        else
            fixed[i++] = normalized_point(F, F.neg(b), F.sub(a, d));
    }
    // The fixed point sent to infinity: infinity itself if fixed, else the smaller one.
    if (fixed[1].w.v == 0 || (fixed[0].w.v != 0 && fixed[1].x < fixed[0].x))
        std::swap(fixed[0], fixed[1]);
    out.conjugation = Matrix(field, 2, 2, {fixed[0].x, fixed[1].x, fixed[0].w, fixed[1].w});
    const BinaryForm g = f.transform(out.conjugation);
    for (unsigned k = 1; k <= 7; k += 2)
        if (g.coeff(k).v != 0)
            throw Error(Errc::NormalizationFailed, "octic is not even after normalization");
    if (g.coeff(0).v == 0 || g.coeff(8).v == 0)
        throw Error(Errc::NormalizationFailed, "a fixed point is a branch point");
    out.curve = make_hyperelliptic(g);
    return out;
}

Genus1Model elliptic_quotient_hyp(const NormalizedHyperelliptic &n)
{
    const BinaryForm &f = n.curve.form;
    std::vector<Elem> g(5);
    for (unsigned i = 0; i <= 4; ++i)
        g[i] = f.coeff(2 * i);
    return make_genus1(BinaryForm(f.field(), 4, g));
}

Genus2Model genus2_quotient_hyp(const NormalizedHyperelliptic &n)
{
    const auto e = elliptic_quotient_hyp(n);
    const FieldPtr &field = e.field();
    const BinaryForm xw(field, 2, {field->zero(), field->one(), field->zero()});
    return make_genus2(e.form * xw);
}

NormalizedQuartic normalize_quartic(const PlaneQuartic &c, const Matrix &m)
{
    const auto h = planar_involution_data(c, m);
    NormalizedQuartic out;
    out.base = c.field();
    out.extended = h.field != c.field();
    const TernaryForm f = out.extended ? c.form.base_change(Extension::of(c.field(), 2)) : c.form;
    out.conjugation = Matrix(h.field, 3, 3);
    for (int r = 0; r < 3; ++r) {
        out.conjugation(r, 0) = h.center[r];
        out.conjugation(r, 1) = h.axis[0][r];
        out.conjugation(r, 2) = h.axis[1][r];
    }
    out.parts = decompose_even(f.transform(out.conjugation));
    if (out.parts.c.v == 0)
        throw Error(Errc::HyperellipticContradiction, "the center of the involution lies on the quartic");
    const BinaryForm d = quartic_discriminant(out);
    if (d.is_zero() || !d.squarefree())
        throw Error(Errc::DegenerateDiscriminant, "q2^2 - 4 c q4 has a repeated root");
    return out;
}

BinaryForm quartic_discriminant(const NormalizedQuartic &n)
{
    const Field &F = *n.parts.q4.field();
    return n.parts.q2 * n.parts.q2 + n.parts.q4.scaled(F.neg(F.mul(F.from_int(4), n.parts.c)));
}

Genus1Model elliptic_quotient_quartic(const NormalizedQuartic &n) { return make_genus1(quartic_discriminant(n)); }

HoweQuotients howe_quotients(const HoweSystem &h)
{
    if (h.r != 2)
        throw Error(Errc::WrongGenus, "Howe quotients need r = 2 (genus 3), got r = " + std::to_string(h.r));
    return {make_genus1(h.form1), make_genus1(h.form2),
            make_genus1(form_divide(h.form1 * h.form2, h.common * h.common))};
}

int howe_branch_count(const HoweSystem &h)
{
    const FieldPtr &base = h.field();
    const UniPoly f2 = h.form2.dehomogenize();
    const auto &ext = Extension::of(base, splitting_degree(f2));
    const Field &E = *ext.target();
    const BinaryForm g1 = h.form1.base_change(ext);
    std::vector<P1Point> branch;
    for (const Elem r : roots(ext.map(f2)))
        branch.push_back({r, E.one()});
    if (h.form2.multiplicity_at_infinity() > 0)
        branch.push_back({E.one(), E.zero()});
    int count = 0;
    for (const auto &p : branch) {
        const Elem v = g1.eval(p);
        if (v.v == 0)
            continue;
        // s^2 = v != 0 has two solutions over the closure.
        count += 2;
    }
    return count;
}

} // namespace richelot
