#include "orbit_oracle.hpp"
#include "samples.hpp"

#include "richelot/error.hpp"
#include "richelot/quotients.hpp"

#include <doctest.h>

using namespace richelot;

namespace {

Matrix mat2(const FieldPtr &F, int a, int b, int c, int d)
{
    return Matrix(F, 2, 2, {F->from_int(a), F->from_int(b), F->from_int(c), F->from_int(d)});
}

Matrix diag3(const FieldPtr &F, int a, int b, int c)
{
    Matrix m(F, 3, 3);
    m(0, 0) = F->from_int(a);
    m(1, 1) = F->from_int(b);
    m(2, 2) = F->from_int(c);
    return m;
}

BinaryForm bform(const FieldPtr &F, std::vector<int> c)
{
    std::vector<Elem> e;
    for (int v : c)
        e.push_back(F->from_int(v));
    return BinaryForm(F, static_cast<unsigned>(c.size() - 1), e);
}

std::int64_t qpow(std::uint64_t q, unsigned n)
{
    std::int64_t r = 1;
    while (n--)
        r *= static_cast<std::int64_t>(q);
    return r;
}

// An octic invariant under m: F + nu^-4 (F o m) where m^2 = nu I; kept when m is good.
HyperellipticG3 octic_invariant_under(oracle::Rng &rng, const Matrix &m)
{
    const FieldPtr &F = m.field();
    const Elem nu = (m * m)(0, 0);
    for (;;) {
        const BinaryForm f = samples::random_squarefree(rng, F, 8);
        const BinaryForm g = f + f.transform(m).scaled(F->inv(F->pow(nu, 4)));
        if (g.coeff(8).v == 0 && g.coeff(0).v == 0)
            continue;
        if (g.is_zero() || !g.squarefree())
            continue;
        const auto c = make_hyperelliptic(g);
        const auto found = find_branch_involutions(c);
        for (const auto &x : found.good)
            if (x.proportional_to(m))
                return c;
    }
}

// Quotients of a hyperelliptic curve by the lifts of m: the count identity, and the orbit
// oracle for n <= oracle_n.
void check_hyperelliptic_quotients(const HyperellipticG3 &c, const Matrix &m, unsigned oracle_n)
{
    const auto n = normalize_hyperelliptic(c, m);
    const auto e = elliptic_quotient_hyp(n);
    const auto g2 = genus2_quotient_hyp(n);
    CHECK(genus(e) == 1);
    CHECK(genus(g2) == 2);
    CurveModel base = c;
    HypAutomorphism sigma = lift_involutions(c, m).first.automorphism();
    if (n.extended) {
        const auto &ext = Extension::of(c.field(), 2);
        base = base_change(c, ext);
        sigma = {Matrix(ext.target(), 2, 2,
                        {ext.map(m(0, 0)), ext.map(m(0, 1)), ext.map(m(1, 0)), ext.map(m(1, 1))}),
                 ext.map(sigma.mu)};
    }
    const std::uint64_t Q = field_of(base)->order();
    const auto tau = compose(sigma, hyperelliptic_involution(field_of(base)));
    for (unsigned k = 1; k <= (n.extended ? 2u : 3u); ++k)
        CHECK(count_points(base, k) == count_points(e, k) + count_points(g2, k) - qpow(Q, k) - 1);
    for (unsigned k = 1; k <= oracle_n; ++k) {
        CHECK(count_points(e, k) == orbit::quotient_count(base, sigma, k));
        CHECK(count_points(g2, k) == orbit::quotient_count(base, tau, k));
    }
}

} // namespace

TEST_CASE("normalizing x -> -x on y^2 = x^8 - 1")
{
    auto F = Field::build(17);
    const auto c = make_hyperelliptic(UniPoly::from_ints(F, {-1, 0, 0, 0, 0, 0, 0, 0, 1}));
    const auto n = normalize_hyperelliptic(c, mat2(F, 1, 0, 0, -1));
    CHECK(!n.extended);
    CHECK(n.conjugation == Matrix::identity(F, 2));
    CHECK(n.curve.form == c.form);
    CHECK(elliptic_quotient_hyp(n).form == bform(F, {-1, 0, 0, 0, 1}));
    CHECK(genus2_quotient_hyp(n).form == make_genus2(UniPoly::from_ints(F, {0, -1, 0, 0, 0, 1})).form);
    check_hyperelliptic_quotients(c, mat2(F, 1, 0, 0, -1), 2);
}

TEST_CASE("normalizing x -> zeta / x on y^2 = x^8 - 1")
{
    auto F = Field::build(17);
    const auto c = make_hyperelliptic(UniPoly::from_ints(F, {-1, 0, 0, 0, 0, 0, 0, 0, 1}));
    for (int zeta : {2, 8, 15, 9}) {
        const auto n = normalize_hyperelliptic(c, mat2(F, 0, zeta, 1, 0));
        for (unsigned k = 1; k < 8; k += 2)
            CHECK(n.curve.form.coeff(k).v == 0);
        CHECK(n.curve.form.coeff(0).v != 0);
        check_hyperelliptic_quotients(c, mat2(F, 0, zeta, 1, 0), 1);
    }
    // x -> 1/x fixes the branch points 1 and -1.
    CHECK_THROWS_AS(normalize_hyperelliptic(c, mat2(F, 0, 1, 1, 0)), Error);
}

TEST_CASE("normal form quotients are the textbook ones")
{
    oracle::Rng rng(51);
    auto F = Field::build(11);
    const auto f = samples::normal_form_octic(rng, F);
    const auto c = make_hyperelliptic(f);
    const auto n = normalize_hyperelliptic(c, mat2(F, 1, 0, 0, -1));
    std::vector<Elem> g;
    for (unsigned i = 0; i <= 4; ++i)
        g.push_back(f.coeff(2 * i));
    CHECK(elliptic_quotient_hyp(n).form == BinaryForm(F, 4, g));
    CHECK(genus2_quotient_hyp(n).form.coeff(0).v == 0);
    CHECK(genus2_quotient_hyp(n).form.coeff(6).v == 0);
    CHECK(genus2_quotient_hyp(n).form.squarefree());
}

TEST_CASE("irrational fixed points extend the field")
{
    oracle::Rng rng(52);
    auto F = Field::build(5);
    const Matrix m = mat2(F, 0, 2, 1, 0); // fixed points x^2 = 2, a non-square mod 5
    const auto c = octic_invariant_under(rng, m);
    const auto n = normalize_hyperelliptic(c, m);
    CHECK(n.extended);
    CHECK(n.curve.field()->order() == 25);
    CHECK(n.base == F);
    check_hyperelliptic_quotients(c, m, 2);
}

TEST_CASE("hyperelliptic quotients match the orbit oracle on hidden symmetric curves")
{
    oracle::Rng rng(53);
    for (unsigned p : {5u, 7u, 11u}) {
        auto F = Field::build(p);
        for (int t = 0; t < 3; ++t) {
            BinaryForm f;
            do
                f = samples::normal_form_octic(rng, F).transform(samples::random_invertible(rng, F, 2));
            while (!f.squarefree());
            const auto c = make_hyperelliptic(f);
            for (const auto &m : find_branch_involutions(c).good) {
                const bool ext = F->chi(F->neg(m.determinant())) < 0;
                check_hyperelliptic_quotients(c, m, ext ? (p == 5 ? 1u : 0u) : (p <= 7 ? 2u : 1u));
            }
        }
    }
}

TEST_CASE("normalizing quartic involutions")
{
    auto F13 = Field::build(13);
    const auto fe = make_quartic(samples::fermat(F13));
    const auto a = normalize_quartic(fe, diag3(F13, -1, 1, 1));
    CHECK(a.parts.c == F13->one());
    CHECK(a.parts.q2.is_zero());
    CHECK(a.parts.q4 == bform(F13, {-1, 0, 0, 0, 1}));
    CHECK(elliptic_quotient_quartic(a).form == bform(F13, {4, 0, 0, 0, -4}));
    const auto b = normalize_quartic(fe, diag3(F13, 1, -1, 1));
    CHECK(b.parts.c == F13->one());
    CHECK(b.parts.q4 == bform(F13, {-1, 0, 0, 0, 1}));

    auto F11 = Field::build(11);
    TernaryForm f(F11, 4);
    f.set(4, 0, F11->one());
    f.set(2, 2, F11->one());
    f.set(2, 1, F11->one());
    f.set(0, 4, F11->one());
    f.set(0, 0, F11->one());
    const auto n = normalize_quartic(make_quartic(f), diag3(F11, -1, 1, 1));
    CHECK(n.parts.c == F11->one());
    CHECK(n.parts.q2 == bform(F11, {0, 1, 1}));
    CHECK(n.parts.q4 == bform(F11, {1, 0, 0, 0, 1}));
    CHECK(quartic_discriminant(n) == bform(F11, {-4, 0, 1, 2, -3}));
}

TEST_CASE("quartic normalization rejects degenerate inputs")
{
    auto F = Field::build(11);
    TernaryForm f(F, 4); // x^2 y z + y^4 + z^4: the center (1:0:0) lies on the curve
    f.set(2, 1, F->one());
    f.set(0, 4, F->one());
    f.set(0, 0, F->one());
    CHECK_THROWS_WITH_AS(normalize_quartic(PlaneQuartic{f}, diag3(F, -1, 1, 1)),
                         doctest::Contains("HyperellipticContradiction"), Error);
    TernaryForm g(F, 4); // x^4 + y^2 z^2: D = -4 y^2 z^2
    g.set(4, 0, F->one());
    g.set(0, 2, F->one());
    CHECK_THROWS_WITH_AS(normalize_quartic(PlaneQuartic{g}, diag3(F, -1, 1, 1)),
                         doctest::Contains("DegenerateDiscriminant"), Error);
}

TEST_CASE("quartic quotients match the orbit oracle")
{
    oracle::Rng rng(54);
    for (unsigned p : {5u, 7u, 11u}) {
        auto F = Field::build(p);
        for (int t = 0; t < 3; ++t) {
            const auto base = samples::even_quartic(rng, F);
            const CurveModel c = make_quartic(base.transform(samples::random_invertible(rng, F, 3)));
            const auto &q = std::get<PlaneQuartic>(c);
            const auto list = find_quartic_involutions(q);
            REQUIRE(!list.empty());
            for (const auto &m : list) {
                const auto e = elliptic_quotient_quartic(normalize_quartic(q, m));
                for (unsigned k = 1; k <= (p <= 7 ? 2u : 1u); ++k)
                    CHECK(count_points(e, k) == orbit::quotient_count(c, m, k));
            }
        }
    }
    auto F13 = Field::build(13);
    const CurveModel fe = make_quartic(samples::fermat(F13));
    const auto m = diag3(F13, 1, 1, -1);
    const auto e = elliptic_quotient_quartic(normalize_quartic(std::get<PlaneQuartic>(fe), m));
    CHECK(count_points(e, 1) == orbit::quotient_count(fe, m, 1));
}

TEST_CASE("Howe quotients")
{
    auto F = Field::build(11);
    auto lin = [&](int a) { return UniPoly::linear(F, F->from_int(a)); };
    const auto h = make_howe(lin(0) * lin(1) * lin(2) * lin(3), lin(0) * lin(1) * lin(4) * lin(5));
    REQUIRE(h.r == 2);
    const auto q = howe_quotients(h);
    CHECK(q.e3.form == BinaryForm::homogenize(lin(2) * lin(3) * lin(4) * lin(5), 4));
    CHECK(howe_branch_count(h) == 4);

    const auto h4 = make_howe(lin(0) * lin(1) * lin(2) * lin(3), (lin(0) * lin(1) * lin(2) * lin(3)).scaled(F->from_int(3)));
    CHECK(h4.r == 4);
    CHECK(howe_branch_count(h4) == 0);
    CHECK_THROWS_WITH_AS(howe_quotients(h4), doctest::Contains("WrongGenus"), Error);

    const auto h0 = make_howe(lin(0) * lin(1) * lin(2) * lin(3), lin(4) * lin(5) * lin(6) * lin(7));
    CHECK(h0.r == 0);
    CHECK(howe_branch_count(h0) == 8);

    // Irreducible factors: roots of f2 only exist over an extension.
    const auto irr = UniPoly::from_ints(F, {1, 0, 1}); // x^2 + 1, irreducible mod 11
    const auto h1 = make_howe(lin(0) * lin(1) * irr, lin(0) * lin(2) * lin(3));
    CHECK(h1.r == 1);
    CHECK(howe_branch_count(h1) == 6);
}
