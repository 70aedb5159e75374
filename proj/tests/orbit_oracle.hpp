#pragma once

// Points of a quotient C / <s> over F_{q^n} from the points of C alone:
//   N_n(C / s) = (N_n(C) + #{P in C : Frob^n P = s P}) / 2,
// since each Frobenius-stable orbit contributes two pairs (P, g) with Frob^n P = g P.
// The twisted points live in C(F_{q^{2n}}), which is enumerated directly. Quartic points
// are found line by line with the library's root finder.

#include "richelot/counting.hpp"
#include "richelot/involutions.hpp"

namespace orbit {

using namespace richelot;

namespace detail {

inline std::array<Elem, 3> weighted_normal(const Field &L, Elem x, Elem y, Elem w)
{
    if (w.v != 0) {
        const Elem iw = L.inv(w);
        return {L.mul(x, iw), L.mul(y, L.pow(iw, 4)), L.one()};
    }
    return {L.one(), L.mul(y, L.pow(L.inv(x), 4)), L.zero()};
}

inline P2Vec projective_normal(const Field &L, P2Vec v)
{
    for (const Elem e : v)
        if (e.v != 0) {
            const Elem s = L.inv(e);
            for (auto &t : v)
                t = L.mul(t, s);
            return v;
        }
    return v;
}

inline std::uint64_t ipow(std::uint64_t q, unsigned n)
{
    std::uint64_t r = 1;
    while (n--)
        r *= q;
    return r;
}

} // namespace detail

/// Twisted count for s^2 = F(x, w) and the automorphism (m, mu).
inline std::int64_t twisted_points(const BinaryForm &f, const HypAutomorphism &s, unsigned n)
{
    const auto &ext = Extension::of(f.field(), 2 * n);
    const Field &L = *ext.target();
    const BinaryForm g = f.base_change(ext);
    const Elem a = ext.map(s.m(0, 0)), b = ext.map(s.m(0, 1)), c = ext.map(s.m(1, 0)), d = ext.map(s.m(1, 1));
    const Elem mu = ext.map(s.mu);
    const std::uint64_t qn = detail::ipow(f.field()->order(), n);
    std::int64_t count = 0;
    auto visit = [&](Elem x, Elem w) {
        const Elem v = g.eval(x, w);
        if (v.v != 0 && L.chi(v) < 0)
            return;
        const Elem y = v.v == 0 ? v : *L.sqrt(v);
        for (const Elem yy : v.v == 0 ? std::vector<Elem>{y} : std::vector<Elem>{y, L.neg(y)}) {
            const auto image = detail::weighted_normal(L, L.add(L.mul(a, x), L.mul(b, w)), L.mul(mu, yy),
                                                       L.add(L.mul(c, x), L.mul(d, w)));
            const auto frob = detail::weighted_normal(L, L.pow(x, qn), L.pow(yy, qn), L.pow(w, qn));
            count += image == frob;
        }
    };
    visit(L.one(), L.zero());
    for (std::uint64_t i = 0; i < L.order(); ++i)
        visit(Elem{static_cast<std::uint32_t>(i)}, L.one());
    return count;
}

inline std::int64_t twisted_points(const TernaryForm &f, const Matrix &m, unsigned n)
{
    const auto &ext = Extension::of(f.field(), 2 * n);
    const Field &L = *ext.target();
    const TernaryForm g = f.base_change(ext);
    Matrix mm(ext.target(), 3, 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            mm(i, j) = ext.map(m(i, j));
    const std::uint64_t qn = detail::ipow(f.field()->order(), n);
    std::int64_t count = 0;
    auto visit = [&](const P2Vec &p) {
        const P2Vec image = detail::projective_normal(L, mm.apply(p));
        const P2Vec frob = detail::projective_normal(L, {L.pow(p[0], qn), L.pow(p[1], qn), L.pow(p[2], qn)});
        count += image == frob;
    };
    if (g.eval(L.one(), L.zero(), L.zero()).v == 0)
        visit({L.one(), L.zero(), L.zero()});
    auto line = [&](Elem y, Elem z) {
        for (const Elem x : roots(g.restrict_x(y, z)))
            visit({x, y, z});
    };
    line(L.one(), L.zero());
    for (std::uint64_t i = 0; i < L.order(); ++i)
        line(Elem{static_cast<std::uint32_t>(i)}, L.one());
    return count;
}

inline std::int64_t quotient_count(const CurveModel &c, const HypAutomorphism &s, unsigned n)
{
    const auto &h = std::get<HyperellipticG3>(c);
    return (count_points(c, n) + twisted_points(h.form, s, n)) / 2;
}

inline std::int64_t quotient_count(const CurveModel &c, const Matrix &m, unsigned n)
{
    const auto &q = std::get<PlaneQuartic>(c);
    return (count_points(c, n) + twisted_points(q.form, m, n)) / 2;
}

} // namespace orbit
