#include "richelot/involutions.hpp"

#include "richelot/error.hpp"

#include <algorithm>

namespace richelot {

namespace {

bool entries_less(const Matrix &a, const Matrix &b)
{
    return std::lexicographical_compare(a.entries().begin(), a.entries().end(), b.entries().begin(),
                                        b.entries().end());
}

Elem mobius_eval(const BinaryForm &f, const Matrix &m, Elem x, Elem w)
{
    const Field &F = *f.field();
    return f.eval(F.add(F.mul(m(0, 0), x), F.mul(m(0, 1), w)), F.add(F.mul(m(1, 0), x), F.mul(m(1, 1), w)));
}

// Scalar lambda with F o m = lambda F, or nullopt.
std::optional<Elem> preservation_factor(const BinaryForm &f, const Matrix &m)
{
    Elem lambda;
    if (m.determinant().v == 0 || !f.transform(m).proportional_to(f, &lambda))
        return std::nullopt;
    return lambda;
}

// Fixed points of the Möbius map m on P^1 are the roots of c x^2 + (d - a) x w - b w^2.
BinaryForm fixed_point_form(const Matrix &m)
{
    const Field &F = *m.field();
    return BinaryForm(m.field(), 2, {F.neg(m(0, 1)), F.sub(m(1, 1), m(0, 0)), m(1, 0)});
}

// Throws unless s preserves C and squares to the identity.
void check_hyp_involution(const HyperellipticG3 &c, const HypAutomorphism &s)
{
    const Field &F = *c.field();
    if (s.m.field() != c.field() || s.m.rows() != 2 || s.m.cols() != 2)
        throw Error(Errc::NotInvolution, "matrix does not match the curve");
    const auto lambda = preservation_factor(c.form, s.m);
    if (!lambda || F.sqr(s.mu) != *lambda)
        throw Error(Errc::NotInvolution, "map does not preserve the curve");
    const HypAutomorphism id{Matrix::identity(c.field(), 2), F.one()};
    const auto sq = compose(s, s);
    if (!same_action(sq, id) || same_action(s, id))
        throw Error(Errc::NotInvolution, "map is not of order 2");
}

std::array<int, 3> eigen_multiset(const Matrix &a)
{
    const auto I = Matrix::identity(a.field(), 3);
    const int plus = 3 - static_cast<int>((a - I).rank());
    const int minus = 3 - static_cast<int>((a + I).rank());
    if (plus + minus != 3)
        throw Error(Errc::NotInvolution, "action on differentials is not an involution");
    std::array<int, 3> out{};
    for (int i = 0; i < 3; ++i)
        out[i] = i < plus ? 1 : -1;
    return out;
}

void check_channels(const InvolutionRecord &r)
{
    const bool by_eigen = r.eigenvalues == std::array<int, 3>{1, -1, -1};
    if (r.delta != 8 - 4 * r.quotient_genus || by_eigen != (r.delta == 4) || by_eigen != (r.quotient_genus == 1))
        throw Error(Errc::CertificateFailed, "eigenvalue and fixed-point channels disagree");
}

} // namespace

HypAutomorphism hyperelliptic_involution(const FieldPtr &field)
{
    return {Matrix::identity(field, 2), field->from_int(-1)};
}

HypAutomorphism compose(const HypAutomorphism &a, const HypAutomorphism &b)
{
    return {a.m * b.m, a.m.field()->mul(a.mu, b.mu)};
}

bool same_action(const HypAutomorphism &a, const HypAutomorphism &b)
{
    Elem k;
    if (!a.m.proportional_to(b.m, &k))
        return false;
    return a.mu == a.m.field()->mul(a.m.field()->pow(k, 4), b.mu);
}

BranchInvolutions find_branch_involutions(const HyperellipticG3 &c)
{
    const FieldPtr &field = c.field();
    const Field &F = *field;
    const std::uint64_t Q = F.order();
    if (Q > 10'000)
        throw Error(Errc::BudgetExceeded, "Möbius involution search limited to q <= 10^4");
    const BinaryForm &f = c.form;

    std::vector<std::pair<Elem, Elem>> probes;
    for (std::uint64_t i = 0; i < Q && probes.size() < 4; ++i) {
        const Elem x{static_cast<std::uint32_t>(i)};
        if (f.eval(x, F.one()).v != 0)
            probes.emplace_back(x, F.one());
    }
    auto passes_probes = [&](const Matrix &m) {
        if (probes.empty())
            return true;
        const Elem v0 = mobius_eval(f, m, probes[0].first, probes[0].second);
        if (v0.v == 0)
            return false;
        const Elem lambda = F.div(v0, f.eval(probes[0].first, probes[0].second));
        for (std::size_t j = 1; j < probes.size(); ++j)
            if (mobius_eval(f, m, probes[j].first, probes[j].second) !=
                F.mul(lambda, f.eval(probes[j].first, probes[j].second)))
                return false;
        return true;
    };

    BranchInvolutions out;
    auto consider = [&](Matrix m) {
        if (m.determinant().v == 0 || !passes_probes(m) || !preservation_factor(f, m))
            return;
        m = m.normalized();
        if (form_gcd(fixed_point_form(m), f).degree() > 0)
            out.order_four.push_back(m);
        else
            out.good.push_back(m);
    };
    for (std::uint64_t i = 0; i < Q; ++i)
        for (std::uint64_t j = 0; j < Q; ++j) {
            const Elem a{static_cast<std::uint32_t>(i)}, b{static_cast<std::uint32_t>(j)};
            consider(Matrix(field, 2, 2, {a, b, F.one(), F.neg(a)}));
        }
    for (std::uint64_t j = 0; j < Q; ++j)
        consider(Matrix(field, 2, 2, {F.one(), Elem{static_cast<std::uint32_t>(j)}, F.zero(), F.from_int(-1)}));
    std::sort(out.good.begin(), out.good.end(), entries_less);
    std::sort(out.order_four.begin(), out.order_four.end(), entries_less);
    return out;
}

std::vector<Matrix> find_quartic_involutions(const PlaneQuartic &c)
{
    const FieldPtr &field = c.field();
    const Field &F = *field;
    const std::uint64_t Q = F.order();
    if (Q > 100)
        throw Error(Errc::BudgetExceeded, "planar involution search limited to q^4 <= 10^8");
    const TernaryForm &f = c.form;

    std::vector<P2Vec> pts;
    pts.push_back({F.zero(), F.zero(), F.one()});
    for (std::uint64_t z = 0; z < Q; ++z)
        pts.push_back({F.zero(), F.one(), Elem{static_cast<std::uint32_t>(z)}});
    for (std::uint64_t y = 0; y < Q; ++y)
        for (std::uint64_t z = 0; z < Q; ++z)
            pts.push_back({F.one(), Elem{static_cast<std::uint32_t>(y)}, Elem{static_cast<std::uint32_t>(z)}});

    std::vector<std::pair<P2Vec, Elem>> probes;
    for (const auto &t : pts) {
        const Elem v = f.eval(t);
        if (v.v != 0)
            probes.emplace_back(t, v);
        if (probes.size() == 5)
            break;
    }

    std::vector<Matrix> out;
    for (const auto &P : pts)
        for (const auto &l : pts) {
            const Elem lp = F.add(F.add(F.mul(l[0], P[0]), F.mul(l[1], P[1])), F.mul(l[2], P[2]));
            if (lp.v == 0)
                continue;
            Matrix m(field, 3, 3);
            const Elem two = F.from_int(2);
            for (int i = 0; i < 3; ++i)
                for (int j = 0; j < 3; ++j)
                    m(i, j) = F.sub(i == j ? lp : F.zero(), F.mul(two, F.mul(P[i], l[j])));
            bool ok = true;
            Elem lambda{};
            for (std::size_t k = 0; k < probes.size() && ok; ++k) {
                const Elem v = f.eval(m.apply(probes[k].first));
                if (k == 0) {
                    lambda = F.div(v, probes[k].second);
                    ok = lambda.v != 0;
                } else {
                    ok = v == F.mul(lambda, probes[k].second);
                }
            }
            if (ok && f.transform(m).proportional_to(f))
                out.push_back(m.normalized());
        }
    std::sort(out.begin(), out.end(), entries_less);
    return out;
}

std::array<int, 3> differential_eigenvalues(const HyperellipticG3 &c, const HypAutomorphism &s)
{
    check_hyp_involution(c, s);
    const FieldPtr &field = c.field();
    const Field &F = *field;
    // sigma^*(x^i dx / y) = (det / mu) (a x + b)^i (c x + d)^(2 - i) dx / y.
    const UniPoly num = UniPoly(field, {s.m(0, 1), s.m(0, 0)});
    const UniPoly den = UniPoly(field, {s.m(1, 1), s.m(1, 0)});
    const Elem scale = F.div(s.m.determinant(), s.mu);
    Matrix a(field, 3, 3);
    for (int i = 0; i < 3; ++i) {
        UniPoly t = UniPoly::constant(field, scale);
        for (int k = 0; k < i; ++k)
            t = t * num;
        for (int k = i; k < 2; ++k)
            t = t * den;
        for (int j = 0; j < 3; ++j)
            a(i, j) = t.coeff(j);
    }
    return eigen_multiset(a);
}

PlanarInvolutionData planar_involution_data(const PlaneQuartic &c, const Matrix &m)
{
    if (m.field() != c.field() || m.rows() != 3 || m.cols() != 3 || m.determinant().v == 0)
        throw Error(Errc::NotInvolution, "matrix does not match the curve");
    const Matrix sq = m * m;
    if (m.is_scalar() || !sq.is_scalar())
        throw Error(Errc::NotInvolution, "matrix is not an involution of the plane");
    if (!c.form.transform(m).proportional_to(c.form))
        throw Error(Errc::NotInvolution, "matrix does not preserve the quartic");
    PlanarInvolutionData out;
    out.field = c.field();
    Matrix mm = m;
    auto root = c.field()->sqrt(sq(0, 0));
    if (!root) {
        const auto &ext = Extension::of(c.field(), 2);
        out.field = ext.target();
        mm = Matrix(out.field, 3, 3);
        for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j)
                mm(i, j) = ext.map(m(i, j));
        root = out.field->sqrt(ext.map(sq(0, 0)));
    }
    const Field &F = *out.field;
    out.matrix = mm.scaled(F.inv(*root));
    const auto I = Matrix::identity(out.field, 3);
    auto minus = (out.matrix + I).kernel();
    if (minus.size() == 2) {
        out.matrix = out.matrix.scaled(F.from_int(-1));
        minus = (out.matrix + I).kernel();
    }
    auto plus = (out.matrix - I).kernel();
    if (minus.size() != 1 || plus.size() != 2)
        throw Error(Errc::NotInvolution, "matrix is not a harmonic homology");
    out.center = minus[0];
    out.axis = plus;
    return out;
}

std::array<int, 3> differential_eigenvalues(const PlaneQuartic &c, const Matrix &m)
{
    const auto h = planar_involution_data(c, m);
    // h.matrix squares to the identity; pick the sign with determinant +1.
    Matrix r = h.matrix;
    if (r.determinant() != r.field()->one())
        r = r.scaled(r.field()->from_int(-1));
    return eigen_multiset(r);
}

int fixed_point_count(const HyperellipticG3 &c, const HypAutomorphism &s)
{
    check_hyp_involution(c, s);
    const Field &F = *c.field();
    if (s.m.is_scalar()) // the hyperelliptic involution fixes the branch points
        return c.form.distinct_root_count();
    const auto &ext = Extension::of(c.field(), 2);
    const FieldPtr &E = ext.target();
    const Elem a = ext.map(s.m(0, 0)), b = ext.map(s.m(0, 1)), cc = ext.map(s.m(1, 0)), d = ext.map(s.m(1, 1));
    const Elem mu = ext.map(s.mu);
    const BinaryForm f = c.form.base_change(ext);
    // m^2 = s I with s = -det m; the eigenvalues are the two square roots of s.
    const Elem sq = E->neg(E->sub(E->mul(a, d), E->mul(b, cc)));
    const auto t = E->sqrt(sq);
    if (!t || F.add(s.m(0, 0), s.m(1, 1)).v != 0)
        throw Error(Errc::NotInvolution, "Möbius part is not an involution");
    int delta = 0;
    for (const Elem ev : {*t, E->neg(*t)}) {
        P1Point v;
        if (cc.v != 0)
            v = {E->sub(ev, d), cc};
        else if (ev == a)
            v = {E->one(), E->zero()};
        else
            v = {E->neg(b), E->sub(a, d)};
        if (f.eval(v).v == 0)
            delta += 1;
        else if (mu == E->pow(ev, 4))
            delta += 2;
    }
    return delta;
}

int fixed_point_count(const PlaneQuartic &c, const Matrix &m)
{
    const auto h = planar_involution_data(c, m);
    const TernaryForm f = h.field == c.field() ? c.form : c.form.base_change(Extension::of(c.field(), 2));
    const BinaryForm on_axis = f.restrict_to_line(h.axis[0], h.axis[1]);
    if (on_axis.is_zero())
        throw Error(Errc::Singular, "the axis of the involution lies on the curve");
    return on_axis.distinct_root_count() + (f.eval(h.center).v == 0 ? 1 : 0);
}

std::pair<InvolutionRecord, InvolutionRecord> lift_involutions(const HyperellipticG3 &c, const Matrix &m)
{
    const Field &F = *c.field();
    if (form_gcd(fixed_point_form(m), c.form).degree() > 0)
        throw Error(Errc::NotInvolution, "a fixed point is a branch point: the lifts have order 4");
    const Elem s2 = F.sqr(m.determinant());
    std::pair<InvolutionRecord, InvolutionRecord> out;
    int sign = 1;
    for (auto *rec : {&out.first, &out.second}) {
        rec->model = InvolutionRecord::Model::Hyperelliptic;
        rec->matrix = m;
        rec->mu = sign > 0 ? s2 : F.neg(s2);
        rec->lift_sign = sign;
        rec->eigenvalues = differential_eigenvalues(c, rec->automorphism());
        rec->delta = fixed_point_count(c, rec->automorphism());
        rec->quotient_genus = (8 - rec->delta) / 4;
        rec->is_long = rec->eigenvalues == std::array<int, 3>{1, -1, -1};
        check_channels(*rec);
        sign = -1;
    }
    return out;
}

InvolutionRecord quartic_record(const PlaneQuartic &c, const Matrix &m)
{
    InvolutionRecord rec;
    rec.model = InvolutionRecord::Model::Quartic;
    rec.matrix = m.normalized();
    rec.eigenvalues = differential_eigenvalues(c, m);
    rec.delta = fixed_point_count(c, m);
    rec.quotient_genus = (8 - rec.delta) / 4;
    rec.is_long = rec.eigenvalues == std::array<int, 3>{1, -1, -1};
    check_channels(rec);
    return rec;
}

bool commute(const InvolutionRecord &a, const InvolutionRecord &b)
{
    if (a.model != b.model)
        return false;
    if (a.model == InvolutionRecord::Model::Hyperelliptic)
        return same_action(compose(a.automorphism(), b.automorphism()), compose(b.automorphism(), a.automorphism()));
    return (a.matrix * b.matrix).proportional_to(b.matrix * a.matrix);
}

InvolutionRecord product_record(const CurveModel &c, const InvolutionRecord &a, const InvolutionRecord &b)
{
    if (!commute(a, b))
        throw Error(Errc::NotInvolution, "the involutions do not commute");
    if (a.model == InvolutionRecord::Model::Quartic)
        return quartic_record(std::get<PlaneQuartic>(c), a.matrix * b.matrix);
    const auto &hc = std::get<HyperellipticG3>(c);
    const Field &F = *hc.field();
    auto p = compose(a.automorphism(), b.automorphism());
    const Matrix n = p.m.normalized();
    Elem k;
    n.proportional_to(p.m, &k); // n = k * p.m
    InvolutionRecord rec;
    rec.model = InvolutionRecord::Model::Hyperelliptic;
    rec.matrix = n;
    rec.mu = F.mul(F.pow(k, 4), p.mu);
    rec.eigenvalues = differential_eigenvalues(hc, rec.automorphism());
    rec.delta = fixed_point_count(hc, rec.automorphism());
    rec.quotient_genus = (8 - rec.delta) / 4;
    rec.is_long = rec.eigenvalues == std::array<int, 3>{1, -1, -1};
    rec.lift_sign = rec.mu == F.sqr(n.determinant()) ? 1 : -1;
    check_channels(rec);
    return rec;
}

} // namespace richelot
