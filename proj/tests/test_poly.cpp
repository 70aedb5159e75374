#include "oracle.hpp"

#include "richelot/error.hpp"
#include "richelot/forms.hpp"
#include "richelot/poly.hpp"

#include <doctest.h>

#include <set>

using namespace richelot;

namespace {

UniPoly random_poly(oracle::Rng &rng, const FieldPtr &F, int degree)
{
    std::vector<Elem> c(degree + 1);
    for (auto &e : c)
        e = rng.elem(*F);
    c.back() = rng.nonzero(*F);
    return UniPoly(F, c);
}

BinaryForm random_form(oracle::Rng &rng, const FieldPtr &F, unsigned degree)
{
    std::vector<Elem> c(degree + 1);
    do {
        for (auto &e : c)
            e = rng.elem(*F);
    } while (std::all_of(c.begin(), c.end(), [](Elem e) { return e.v == 0; }));
    return BinaryForm(F, degree, c);
}

Matrix random_invertible(oracle::Rng &rng, const FieldPtr &F, std::size_t n)
{
    for (;;) {
        Matrix m(F, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                m(i, j) = rng.elem(*F);
        if (m.determinant().v != 0)
            return m;
    }
}

std::set<Elem> brute_roots(const UniPoly &f)
{
    std::set<Elem> out;
    for (std::uint64_t i = 0; i < f.field()->order(); ++i)
        if (f.eval(Elem{static_cast<std::uint32_t>(i)}).v == 0)
            out.insert(Elem{static_cast<std::uint32_t>(i)});
    return out;
}

} // namespace

TEST_CASE("squarefree examples")
{
    auto F17 = Field::build(17);
    auto F3 = Field::build(3);
    auto F5 = Field::build(5);
    CHECK(squarefree(UniPoly::from_ints(F17, {-1, 0, 0, 0, 0, 0, 0, 0, 1})));
    CHECK(squarefree(UniPoly::from_ints(F3, {-1, 0, 0, 0, 0, 0, 0, 0, 1})));
    const auto l = UniPoly::from_ints(F5, {-1, 1});
    CHECK_FALSE(squarefree(l * l));
    CHECK_THROWS_AS(squarefree(UniPoly(F5)), Error);
}

TEST_CASE("squarefree(f*f) is false")
{
    oracle::Rng rng(1);
    for (unsigned p : {3u, 5u, 7u, 13u}) {
        auto F = Field::build(p);
        for (int t = 0; t < 50; ++t) {
            const auto f = random_poly(rng, F, 1 + static_cast<int>(rng.below(5)));
            CHECK_FALSE(squarefree(f * f));
        }
    }
}

TEST_CASE("resultant examples")
{
    auto F5 = Field::build(5);
    const auto x = UniPoly::x(F5);
    CHECK(resultant(x, x).v == 0);
    CHECK(resultant(UniPoly::from_ints(F5, {-1, 1}), UniPoly::from_ints(F5, {1, 1})).v != 0);
    CHECK(resultant(UniPoly::from_ints(F5, {1, 0, 1}), UniPoly::from_ints(F5, {-2, 1})).v == 0);
    CHECK_THROWS_AS(resultant(UniPoly(F5), UniPoly(F5)), Error);
}

TEST_CASE("resultant vanishes exactly when the gcd is nonconstant")
{
    oracle::Rng rng(2);
    for (auto [p, k] : {std::pair{3u, 1u}, {5u, 1u}, {3u, 2u}, {7u, 1u}}) {
        auto F = Field::build(p, k);
        int shared = 0;
        for (int t = 0; t < 100; ++t) {
            auto f = random_poly(rng, F, 1 + static_cast<int>(rng.below(4)));
            auto g = random_poly(rng, F, 1 + static_cast<int>(rng.below(4)));
            if (t % 3 == 0) {
                const auto h = random_poly(rng, F, 1);
                f = f * h;
                g = g * h;
            }
            const bool common = gcd(f, g).degree() > 0;
            shared += common;
            CHECK((resultant(f, g).v == 0) == common);
        }
        CHECK(shared > 0);
    }
}

TEST_CASE("roots agree with exhaustive evaluation")
{
    oracle::Rng rng(3);
    for (auto [p, k] : {std::pair{5u, 1u}, {101u, 1u}, {3u, 4u}, {7u, 3u}, {13u, 2u}}) {
        auto F = Field::build(p, k);
        for (int t = 0; t < 30; ++t) {
            auto f = random_poly(rng, F, 1 + static_cast<int>(rng.below(8)));
            if (t % 2 == 0)
                f = f * UniPoly::linear(F, rng.elem(*F)) * UniPoly::linear(F, rng.elem(*F));
            const auto r = roots(f);
            const auto expect = brute_roots(f);
            CHECK(std::set<Elem>(r.begin(), r.end()) == expect);
            CHECK(std::is_sorted(r.begin(), r.end()));
            CHECK(rational_root_count(f) == static_cast<int>(expect.size()));
        }
    }
}

TEST_CASE("radical and splitting degree")
{
    auto F3 = Field::build(3);
    // (x^3 - x - 1) is irreducible over F_3; raise it to the third power.
    const auto a = UniPoly::from_ints(F3, {-1, -1, 0, 1});
    const auto b = UniPoly::from_ints(F3, {1, 1});
    const auto f = a * a * a * b * b;
    CHECK(radical(f) == (a * b).monic());
    CHECK(distinct_root_count(f) == 4);
    CHECK(splitting_degree(a) == 3);
    CHECK(splitting_degree(a * UniPoly::from_ints(F3, {1, 0, 1})) == 6);
    CHECK(splitting_degree(b) == 1);
}

TEST_CASE("extension embeddings are ring homomorphisms")
{
    oracle::Rng rng(4);
    for (auto [p, k, d] : {std::tuple{3u, 2u, 2u}, {5u, 1u, 3u}, {7u, 2u, 3u}, {3u, 3u, 2u}}) {
        auto F = Field::build(p, k);
        const auto &ext = Extension::of(F, d);
        std::uint64_t order = 1;
        for (unsigned i = 0; i < d; ++i)
            order *= F->order();
        CHECK(ext.target()->order() == order);
        for (int t = 0; t < 300; ++t) {
            const Elem a = rng.elem(*F), b = rng.elem(*F);
            CHECK(ext.map(F->add(a, b)) == ext.target()->add(ext.map(a), ext.map(b)));
            CHECK(ext.map(F->mul(a, b)) == ext.target()->mul(ext.map(a), ext.map(b)));
            Elem back;
            REQUIRE(ext.preimage(ext.map(a), back));
            CHECK(back == a);
        }
        CHECK(&Extension::of(F, d) == &ext);
    }
}

TEST_CASE("binary transform examples")
{
    auto F = Field::build(17);
    const auto f = BinaryForm::homogenize(UniPoly::from_ints(F, {-1, 0, 0, 0, 0, 0, 0, 0, 1}), 8);
    CHECK(f.transform(Matrix::identity(F, 2)) == f);
    Matrix swap(F, 2, 2, {F->zero(), F->one(), F->one(), F->zero()});
    CHECK(f.transform(swap) == f.scaled(F->from_int(-1)));
    Matrix neg(F, 2, 2, {F->from_int(-1), F->zero(), F->zero(), F->one()});
    CHECK(f.transform(neg) == f);
    Matrix sing(F, 2, 2, {F->one(), F->one(), F->one(), F->one()});
    CHECK_THROWS_AS(f.transform(sing), Error);
}

TEST_CASE("binary transform inverts up to scalar and matches evaluation")
{
    oracle::Rng rng(6);
    for (auto [p, k] : {std::pair{5u, 1u}, {11u, 1u}, {3u, 2u}, {7u, 2u}}) {
        auto F = Field::build(p, k);
        for (int t = 0; t < 100; ++t) {
            const auto f = random_form(rng, F, 3 + static_cast<unsigned>(rng.below(6)));
            const auto m = random_invertible(rng, F, 2);
            const auto g = f.transform(m);
            CHECK(g.transform(m.inverse()).proportional_to(f));
            const Elem x = rng.elem(*F), w = rng.elem(*F);
            CHECK(g.eval(x, w) == f.eval(F->add(F->mul(m(0, 0), x), F->mul(m(0, 1), w)),
                                         F->add(F->mul(m(1, 0), x), F->mul(m(1, 1), w))));
        }
    }
}

TEST_CASE("squarefree forms count the root at infinity")
{
    auto F = Field::build(11);
    const auto f = UniPoly::from_ints(F, {0, 1, 0, 0, 0, 0, 0, 1}); // x^7 + x
    CHECK(BinaryForm::homogenize(f, 8).squarefree());
    CHECK(BinaryForm::homogenize(f, 8).distinct_root_count() == 8);
    CHECK_FALSE(BinaryForm::homogenize(f, 9).squarefree());
}

TEST_CASE("decompose_even examples")
{
    auto F = Field::build(13);
    TernaryForm fermat(F, 4);
    fermat.set(4, 0, F->one());
    fermat.set(0, 4, F->one());
    fermat.set(0, 0, F->from_int(-1));
    const auto d = decompose_even(fermat);
    CHECK(d.c == F->one());
    CHECK(d.q2.is_zero());
    CHECK(d.q4 == BinaryForm(F, 4, {F->from_int(-1), F->zero(), F->zero(), F->zero(), F->one()}));

    TernaryForm g(F, 4);
    g.set(4, 0, F->one());
    g.set(2, 1, F->one()); // x^2 y z
    g.set(0, 0, F->one());
    const auto e = decompose_even(g);
    CHECK(e.c == F->one());
    CHECK(e.q2 == BinaryForm(F, 2, {F->zero(), F->one(), F->zero()}));
    CHECK(e.q4 == BinaryForm(F, 4, {F->one(), F->zero(), F->zero(), F->zero(), F->zero()}));

    TernaryForm h(F, 4);
    h.set(3, 1, F->one());
    h.set(0, 4, F->one());
    h.set(0, 0, F->one());
    CHECK_THROWS_AS(decompose_even(h), Error);
}

TEST_CASE("decompose_even recomposes exactly")
{
    oracle::Rng rng(8);
    auto F = Field::build(7, 2);
    for (int t = 0; t < 100; ++t) {
        TernaryForm f(F, 4);
        for (unsigned i = 0; i <= 4; i += 2)
            for (unsigned j = 0; i + j <= 4; ++j)
                f.set(i, j, rng.elem(*F));
        CHECK(recompose_even(decompose_even(f)) == f);
    }
}

TEST_CASE("ternary transform matches evaluation")
{
    oracle::Rng rng(9);
    auto F = Field::build(11);
    for (int t = 0; t < 50; ++t) {
        TernaryForm f(F, 4);
        for (unsigned i = 0; i <= 4; ++i)
            for (unsigned j = 0; i + j <= 4; ++j)
                f.set(i, j, rng.elem(*F));
        const auto m = random_invertible(rng, F, 3);
        const auto g = f.transform(m);
        const P2Vec v{rng.elem(*F), rng.elem(*F), rng.elem(*F)};
        CHECK(g.eval(v) == f.eval(m.apply(v)));
        CHECK(g.transform(m.inverse()) == f);
        const P2Vec a{rng.elem(*F), rng.elem(*F), rng.elem(*F)};
        const Elem s = rng.elem(*F), u = rng.elem(*F);
        P2Vec pt(3);
        for (int i = 0; i < 3; ++i)
            pt[i] = F->add(F->mul(s, a[i]), F->mul(u, v[i]));
        CHECK(f.restrict_to_line(a, v).eval(s, u) == f.eval(pt));
        CHECK(f.restrict_x(v[1], v[2]).eval(v[0]) == f.eval(v));
    }
}
