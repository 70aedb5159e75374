#include "richelot/curves.hpp"

#include "richelot/error.hpp"

#include <type_traits>

namespace richelot {

int genus(const CurveModel &c)
{
    return std::visit([](const auto &m) { return m.genus(); }, c);
}

const FieldPtr &field_of(const CurveModel &c)
{
    return std::visit([](const auto &m) -> const FieldPtr & { return m.field(); }, c);
}

const char *model_name(const CurveModel &c)
{
    static const char *const names[] = {"hyperelliptic", "quartic", "genus1", "genus2", "howe"};
    return names[c.index()];
}

namespace {

BinaryForm validated_cover(const BinaryForm &f, unsigned degree, const char *what)
{
    if (f.degree() != degree)
        throw Error(Errc::WrongDegree, std::string(what) + " form must have degree " + std::to_string(degree));
    if (f.is_zero())
        throw Error(Errc::ZeroPolynomial, std::string(what) + " form is zero");
    if (!f.squarefree())
        throw Error(Errc::NotSquarefree, std::string(what) + " form has a repeated root");
    return f;
}

BinaryForm homogenize_checked(const UniPoly &f, int low, int high, const char *what)
{
    if (f.degree() < low || f.degree() > high)
        throw Error(Errc::WrongDegree, std::string(what) + " polynomial must have degree " + std::to_string(low) +
                                           " or " + std::to_string(high));
    return BinaryForm::homogenize(f, static_cast<unsigned>(high));
}

} // namespace

HyperellipticG3 make_hyperelliptic(const UniPoly &f)
{
    return make_hyperelliptic(homogenize_checked(f, 7, 8, "hyperelliptic"));
}

HyperellipticG3 make_hyperelliptic(const BinaryForm &f8)
{
    return HyperellipticG3{{validated_cover(f8, 8, "branch")}};
}

Genus1Model make_genus1(const UniPoly &f) { return make_genus1(homogenize_checked(f, 3, 4, "genus-1")); }

Genus1Model make_genus1(const BinaryForm &d)
{
    if (d.degree() == 3)
        return make_genus1(d * BinaryForm(d.field(), 1, {d.field()->one(), d.field()->zero()}));
    return Genus1Model{{validated_cover(d, 4, "genus-1")}};
}

Genus2Model make_genus2(const UniPoly &f) { return make_genus2(homogenize_checked(f, 5, 6, "genus-2")); }

Genus2Model make_genus2(const BinaryForm &g)
{
    if (g.degree() == 5)
        return make_genus2(g * BinaryForm(g.field(), 1, {g.field()->one(), g.field()->zero()}));
    return Genus2Model{{validated_cover(g, 6, "genus-2")}};
}

bool quartic_is_smooth(const TernaryForm &f)
{
    // With 4 invertible, the singular points are the common zeros of the three partials.
    // Three cubics without a common zero generate every form of degree 7; a common zero
    // keeps some monomial of degree 7 out of the ideal.
    const Field &F = *f.field();
    const TernaryForm d[3] = {f.partial(0), f.partial(1), f.partial(2)};
    auto col = [](unsigned i, unsigned j) {
        // Monomials of degree 7 ordered by (i, j).
        unsigned idx = 0;
        for (unsigned a = 0; a < i; ++a)
            idx += 8 - a;
        return idx + j;
    };
    Matrix mac(f.field(), 45, 36);
    std::size_t row = 0;
    for (const auto &part : d)
        for (unsigned a = 0; a <= 4; ++a)
            for (unsigned b = 0; a + b <= 4; ++b, ++row)
                for (unsigned i = 0; i <= 3; ++i)
                    for (unsigned j = 0; i + j <= 3; ++j) {
                        const Elem c = part.coeff(i, j);
                        if (c.v != 0)
                            mac(row, col(i + a, j + b)) = F.add(mac(row, col(i + a, j + b)), c);
                    }
    return mac.rank() == 36;
}

std::optional<P2Vec> find_singular_point(const TernaryForm &f, FieldPtr *where)
{
    const FieldPtr &base = f.field();
    const TernaryForm parts[3] = {f.partial(0), f.partial(1), f.partial(2)};
    std::uint64_t Q = 1;
    for (unsigned k = 1; k <= 6; ++k) {
        Q *= base->order();
        if (Q * Q > 4'000'000)
            break;
        const auto &ext = Extension::of(base, k);
        const FieldPtr &E = ext.target();
        const TernaryForm g = f.base_change(ext);
        const TernaryForm gp[3] = {parts[0].base_change(ext), parts[1].base_change(ext), parts[2].base_change(ext)};
        auto singular = [&](const P2Vec &v) {
            return gp[0].eval(v).v == 0 && gp[1].eval(v).v == 0 && gp[2].eval(v).v == 0 && g.eval(v).v == 0;
        };
        auto found = [&](P2Vec v) {
            if (where)
                *where = E;
            return std::optional<P2Vec>(std::move(v));
        };
        if (singular({E->zero(), E->zero(), E->one()}))
            return found({E->zero(), E->zero(), E->one()});
        for (std::uint64_t z = 0; z < Q; ++z) {
            P2Vec v{E->zero(), E->one(), Elem{static_cast<std::uint32_t>(z)}};
            if (singular(v))
                return found(v);
        }
        for (std::uint64_t y = 0; y < Q; ++y)
            for (std::uint64_t z = 0; z < Q; ++z) {
                P2Vec v{E->one(), Elem{static_cast<std::uint32_t>(y)}, Elem{static_cast<std::uint32_t>(z)}};
                if (singular(v))
                    return found(v);
            }
    }
    return std::nullopt;
}

PlaneQuartic make_quartic(const TernaryForm &f)
{
    if (f.is_zero())
        throw Error(Errc::Zero, "quartic form is zero");
    if (f.degree() != 4)
        throw Error(Errc::WrongDegree, "plane quartic must have degree 4");
    if (!quartic_is_smooth(f)) {
        FieldPtr where;
        std::string msg = "quartic is singular";
        if (auto w = find_singular_point(f, &where)) {
            msg += " at (" + where->to_string((*w)[0]) + " : " + where->to_string((*w)[1]) + " : " +
                   where->to_string((*w)[2]) + ") over F_" + std::to_string(where->order());
        }
        throw Error(Errc::Singular, msg);
    }
    return PlaneQuartic{f};
}

HoweSystem make_howe(const UniPoly &f1, const UniPoly &f2)
{
    if (f1.field() != f2.field())
        throw Error(Errc::FieldMismatch, "f1 and f2 live over different fields");
    for (const auto *f : {&f1, &f2}) {
        if (f->degree() != 3 && f->degree() != 4)
            throw Error(Errc::WrongDegree, "Howe polynomials must have degree 3 or 4");
        if (!squarefree(*f))
            throw Error(Errc::NotSquarefree, "Howe polynomial has a repeated root");
    }
    if (f1 == f2)
        throw Error(Errc::DegenerateSystem, "f1 and f2 coincide");
    HoweSystem h;
    h.f1 = f1;
    h.f2 = f2;
    h.form1 = BinaryForm::homogenize(f1, 4);
    h.form2 = BinaryForm::homogenize(f2, 4);
    h.common = form_gcd(h.form1, h.form2);
    h.r = static_cast<int>(h.common.degree());
    return h;
}

CurveModel base_change(const CurveModel &c, const Extension &ext)
{
    return std::visit(
        [&](const auto &m) -> CurveModel {
            using T = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<T, PlaneQuartic>) {
                return PlaneQuartic{m.form.base_change(ext)};
            } else if constexpr (std::is_same_v<T, HoweSystem>) {
                HoweSystem h = m;
                h.f1 = ext.map(m.f1);
                h.f2 = ext.map(m.f2);
                h.form1 = m.form1.base_change(ext);
                h.form2 = m.form2.base_change(ext);
                h.common = m.common.base_change(ext);
                return h;
            } else {
                T out = m;
                out.form = m.form.base_change(ext);
                return out;
            }
        },
        c);
}

} // namespace richelot
