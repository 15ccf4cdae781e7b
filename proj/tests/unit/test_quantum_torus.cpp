#include <doctest.h>

#include "gen.hpp"
#include "tvx/automorphism.hpp"

using namespace tvx;
namespace tg = tvx::testgen;

namespace {

QLaurent v(int e) { return QLaurent::monomial(e); }

TorusElement random_element(const ContextPtr& ctx, int terms) {
    TorusElement x(ctx);
    int n = ctx->central_count();
    for (int i = 0; i < terms; ++i) {
        std::vector<int> e;
        for (int j = 0; j < n; ++j) e.push_back(tg::uniform(0, ctx->order(j)));
        x.add_term(ctx->central(e), {tg::uniform(-2, 2), tg::uniform(-2, 2)}, tg::laurent(2, 2));
    }
    return x;
}

// Power series expansion in v of num/den up to v^N (den has nonzero constant term).
std::vector<Rat> expand(const QRational& r, int lowest, int N) {
    std::vector<Rat> num(static_cast<size_t>(N - lowest + 1));
    for (const auto& [e, c] : r.num().terms())
        if (e >= lowest && e <= N) num[static_cast<size_t>(e - lowest)] = c;
    std::vector<Rat> out(num.size());
    Rat d0 = r.den().coefficient(0);
    for (size_t i = 0; i < out.size(); ++i) {
        Rat s = num[i];
        for (const auto& [e, c] : r.den().terms())
            if (e > 0 && static_cast<size_t>(e) <= i) s -= c * out[i - static_cast<size_t>(e)];
        out[i] = s / d0;
    }
    return out;
}

WallOperator random_operator(LatticeVec gamma, const ContextPtr& ctx) {
    WallOperator op{gamma, {}};
    int entries = tg::uniform(1, 3);
    const Rat omegas[] = {1, -1, Rat(1, 2), Rat(-1, 2), 2};
    for (int i = 0; i < entries; ++i) {
        int k = tg::uniform(1, 2);
        op.spectrum.push_back({k, tg::uniform(-2, 2), omegas[tg::uniform(0, 4)], ctx->central({k * gamma.a, k * gamma.b})});
    }
    return op;
}

}  // namespace

TEST_CASE("twisted product examples") {
    auto ctx = SeriesContext::uniform(1, 2);
    auto x = generator(ctx, {1, 0}), y = generator(ctx, {0, 1});
    CHECK(twisted_product(x, y) == TorusElement::monomial(ctx, {}, {1, 1}, v(1)));
    CHECK(twisted_product(y, x) == TorusElement::monomial(ctx, {}, {1, 1}, v(-1)));
    auto a = generator(ctx, {2, 3});
    CHECK(twisted_product(a, a) == generator(ctx, {4, 6}));
}

TEST_CASE("twisted product is associative; classical limit commutes") {
    auto ctx = SeriesContext::uniform(2, 5);
    for (int i = 0; i < 20; ++i) {
        auto a = random_element(ctx, 4), b = random_element(ctx, 4), c = random_element(ctx, 4);
        CHECK(twisted_product(twisted_product(a, b), c) == twisted_product(a, twisted_product(b, c)));
        CHECK(classical_limit(twisted_product(a, b)) == classical_limit(twisted_product(b, a)));
    }
}

TEST_CASE("parallel twisted product matches the serial reference") {
    auto ctx = SeriesContext::uniform(2, 4);
    for (int i = 0; i < 10; ++i) {
        auto a = random_element(ctx, 12), b = random_element(ctx, 12);
        CHECK(twisted_product(a, b, Exec::Parallel) == twisted_product(a, b, Exec::Serial));
    }
}

TEST_CASE("bracket of generators and its classical limit") {
    auto ctx = SeriesContext::uniform(1, 1);
    for (int a = -2; a <= 2; ++a)
        for (int b = -2; b <= 2; ++b)
            for (int c = -2; c <= 2; ++c)
                for (int d = -2; d <= 2; ++d) {
                    LatticeVec al{a, b}, be{c, d};
                    int k = pairing(al, be);
                    auto br = commutator(generator(ctx, al), generator(ctx, be));
                    CHECK(br == TorusElement::monomial(ctx, {}, al + be, v(k) - v(-k)));
                    QLaurent coeff = br.coefficient({}, al + be);
                    auto quotient = divide_exact(coeff, v(2) - QLaurent(1));
                    REQUIRE(quotient);
                    CHECK(quotient->eval_at_one() == k);
                }
}

TEST_CASE("qdilog_log coefficients") {
    auto ctx = SeriesContext::uniform(1, 4);
    Multidegree s = ctx->central({1});
    WallLog h = qdilog_log(ctx, s, {1, 0}, 0, 1);
    CHECK(h.coefficient(1, s) == QRational(QLaurent(1), v(1) - v(-1)));
    CHECK(qdilog_log(ctx, s, {1, 0}, 0, 0).is_zero());
    CHECK_THROWS(qdilog_log(ctx, Multidegree{}, {1, 0}, 0, 1));

    // The operator on gamma = (1,1) with σ = t1 t2.
    auto ctx2 = SeriesContext::uniform(2, 4);
    WallOperator op{{1, 1}, {{1, 0, 1, ctx2->central({1, 1})}}};
    WallLog hh = wall_operator_log(ctx2, op);
    CHECK(hh.coefficient(2, ctx2->central({2, 2})) == QRational(QLaurent(Rat(-1, 2)), v(2) - v(-2)));
    WallOperator cancel{{1, 1}, {{1, 0, 1, ctx2->central({1, 1})}, {1, 0, -1, ctx2->central({1, 1})}}};
    CHECK(wall_operator_log(ctx2, cancel).is_zero());
}

TEST_CASE("exp of the dilog log matches the infinite product expansion") {
    // E(σ ê) = prod_{k>=0} (1 + v^{2k+1} σ ê)^{-1}. Compare the σ^r coefficients
    // as power series in v up to v^N; factors with 2k+1 > N do not contribute.
    const int order = 3, N = 12;
    auto ctx = SeriesContext::uniform(1, order);
    Multidegree s = ctx->central({1});
    WallLog h = qdilog_log(ctx, s, {1, 0}, 0, 1);
    TorusElementR E = series_exp(h.hamiltonian());

    std::vector<std::vector<Rat>> prod(order + 1, std::vector<Rat>(N + 1));
    prod[0][0] = 1;
    for (int k = 0; 2 * k + 1 <= N; ++k) {
        // multiply by (1 + v^{2k+1} X)^{-1} = sum_r (-1)^r v^{r(2k+1)} X^r
        auto next = std::vector<std::vector<Rat>>(order + 1, std::vector<Rat>(N + 1));
        for (int a = 0; a <= order; ++a)
            for (int e = 0; e <= N; ++e) {
                if (is_zero(prod[a][e])) continue;
                for (int r = 0; a + r <= order && e + r * (2 * k + 1) <= N; ++r)
                    next[a + r][e + r * (2 * k + 1)] += prod[a][e] * (r % 2 ? -1 : 1);
            }
        prod = next;
    }
    for (int r = 1; r <= order; ++r) {
        QRational c = E.coefficient(ctx->central({r}), {r, 0});
        CHECK(expand(c, 0, N) == prod[r]);
    }
}

TEST_CASE("adjoint_action examples") {
    auto ctx = SeriesContext::uniform(1, 4);
    Multidegree s = ctx->central({1});
    WallOperator op{{1, 0}, {{1, 0, 1, s}}};
    TorusElement expect = generator(ctx, {0, 1});
    expect += twisted_product(generator(ctx, {0, 1}), TorusElement::monomial(ctx, s, {1, 0}, v(1)));
    CHECK(adjoint_action(ctx, op, {0, 1}) == expect);
    CHECK(adjoint_action(ctx, op, {3, 0}) == generator(ctx, {3, 0}));
    // κ = -1: ê_β (1 + v^{-1} σ ê_α)^{-1}
    TorusElement geo(ctx);
    for (int r = 0; r <= 4; ++r)
        geo.add_term(ctx->central({r}), {r, 0}, QLaurent::monomial(-r, r % 2 ? -1 : 1));
    CHECK(adjoint_action(ctx, op, {0, -1}) == twisted_product(generator(ctx, {0, -1}), geo));
}

TEST_CASE("binomial route and log route of the wall action agree") {
    auto ctx = SeriesContext::uniform(2, 4);
    const LatticeVec dirs[] = {{1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 1}};
    for (int i = 0; i < 25; ++i) {
        LatticeVec g = dirs[tg::uniform(0, 4)];
        WallOperator op = random_operator(g, ctx);
        WallLog h = wall_operator_log(ctx, op);
        for (LatticeVec beta : {LatticeVec{1, 0}, LatticeVec{0, 1}, LatticeVec{-1, 2}, LatticeVec{2, -3}}) {
            TorusElement b = generator(ctx, beta);
            CHECK(adjoint_action(ctx, op, beta) == apply_log(h, b));
        }
        auto x = random_element(ctx, 5);
        CHECK(apply_operator(op, x) == apply_images(images_of(ctx, op), x));
    }
}

TEST_CASE("composition with the inverse wall is the identity") {
    auto ctx = SeriesContext::uniform(2, 6);
    for (LatticeVec g : {LatticeVec{1, 0}, LatticeVec{1, 1}, LatticeVec{1, 2}}) {
        WallOperator op = random_operator(g, ctx);
        auto f = images_of(ctx, op), finv = images_of(ctx, op.inverse());
        CHECK(compose(f, finv).is_identity());
        CHECK(compose(finv, f).is_identity());
        CHECK(compose(identity_images<QLaurent>(ctx), f) == f);
    }
}

TEST_CASE("wall automorphisms are algebra maps") {
    auto ctx = SeriesContext::uniform(2, 4);
    for (int i = 0; i < 10; ++i) {
        WallOperator op = random_operator({1, 1}, ctx);
        auto a = random_element(ctx, 3), b = random_element(ctx, 3);
        CHECK(apply_operator(op, twisted_product(a, b)) ==
              twisted_product(apply_operator(op, a), apply_operator(op, b)));
        CHECK(apply_operator(op, TorusElement::one(ctx)) == TorusElement::one(ctx));
    }
}

TEST_CASE("pentagon identity mod degree 8") {
    auto ctx = SeriesContext::make({"s1", "s2"}, {8, 8});
    Multidegree s1 = ctx->central({1, 0}), s2 = ctx->central({0, 1}), s12 = ctx->central({1, 1});
    auto t1 = images_of(ctx, WallOperator{{1, 0}, {{1, 0, 1, s1}}});
    auto t2 = images_of(ctx, WallOperator{{0, 1}, {{1, 0, 1, s2}}});
    auto t12 = images_of(ctx, WallOperator{{1, 1}, {{1, 0, 1, s12}}});
    CHECK(compose(t1, t2) == compose(compose(t2, t12), t1));
    CHECK_FALSE(compose(t1, t2) == compose(t2, t1));
}
