#include <doctest.h>

#include "hjf/errors.hpp"
#include "hjf/jacobi.hpp"
#include "hjf/modular.hpp"
#include "hjf/qseries.hpp"
#include "oracles.hpp"

#include <stdexcept>

using namespace hjf;

TEST_CASE("classical theta series against brute-force counts") {
    const Rat P = rat(20);
    for (long long m : {1, 2, 4}) {
        for (long long mu = 0; mu < 2 * m; ++mu) {
            const JacobiExpansion th = theta_classical(m, mu, P);
            CHECK(th.index() == m);
            CHECK(check_support(th));
            // every stored term is one lattice solution r ≡ mu, exponent r^2/4m
            for (long long r = -30; r <= 30; ++r) {
                const Rat e = rat(r * r, 4 * m);
                if (!(e < P)) continue;
                const long long want = (((r - mu) % (2 * m)) + 2 * m) % (2 * m) == 0 ? 1 : 0;
                CHECK(th.coeff(e, r) == GaussRat(want, 0));
            }
            // z = 0 specialization counts residues on each circle
            const QSeries c = specialize_z0(th);
            for (long long n4 = 0; n4 < 60; ++n4) {
                const Rat e = rat(n4, 4 * m);
                if (!(e < c.prec())) break;
                const long long cnt = oracle::residue_square_count(2 * m, mu, n4);
                CHECK(c.coeff(e) == GaussRat(cnt, 0));
            }
        }
    }
    CHECK_THROWS_AS(theta_classical(0, 0, P), std::invalid_argument);
}

TEST_CASE("one-variable theta constants") {
    const Rat P = rat(20);
    const ThetaConstants tc = theta_constants(P);
    REQUIRE(tc.a.size() == 4);
    REQUIRE(tc.b.size() == 8);
    // a_mu and b_mu agree with the z = 0 theta specializations
    for (int mu = 0; mu < 4; ++mu) CHECK(equal_upto(tc.a[mu], specialize_z0(theta_classical(2, mu, P))));
    for (int mu = 0; mu < 8; ++mu) CHECK(equal_upto(tc.b[mu], specialize_z0(theta_classical(4, mu, P))));
    CHECK(equal_upto(tc.theta0, specialize_z0(theta_classical(1, 0, P))));
    CHECK(equal_upto(tc.theta1, specialize_z0(theta_classical(1, 1, P))));
    // the three one-variable constants: leading coefficients
    CHECK(tc.x.coeff(0) == GaussRat(1));
    CHECK(tc.x.coeff(rat(1, 2)) == GaussRat(2, 0));
    CHECK(tc.y.coeff(rat(1, 2)) == GaussRat(-2, 0));
    CHECK(tc.z.coeff(rat(1, 8)) == GaussRat(2, 0));
    // Jacobi's quartic relation
    CHECK(equal_upto(tc.x.powed(4), tc.y.powed(4) + tc.z.powed(4)));
}

TEST_CASE("development coefficients of theta series") {
    const Rat P = rat(20);
    const JacobiExpansion th = theta_classical(1, 0, P);
    // psi_0 is the z = 0 value; psi_1 of an even theta vanishes
    CHECK(equal_upto(taylor_psi(th, 0), specialize_z0(th)));
    CHECK(taylor_psi(th, 1).is_zero());
    // psi_2 = sum r^2/2 q^(r^2/4) = 2 D(psi_0)
    CHECK(equal_upto(taylor_psi(th, 2), specialize_z0(th).derived().scaled(GaussRat(2, 0))));
    // dev2 = 2k psi_2 - 2m D psi_0 with weight 0: pure -2 D psi_0
    CHECK(equal_upto(dev2(th), specialize_z0(th).derived().scaled(GaussRat(-2, 0))));
    // lambda on weight-0 index-1: D0 + 2 dev2 = D0 - 4 D(D0)
    const QSeries d0 = specialize_z0(th);
    CHECK(equal_upto(lambda_op(th), d0 - d0.derived().scaled(GaussRat(4, 0))));
}

TEST_CASE("scalar multiplication and weight metadata") {
    const Rat P = rat(14);
    const QSeries e4 = eisenstein(4, P);
    const JacobiExpansion th = theta_classical(1, 1, P);
    const JacobiExpansion f = th.scalar_mul(e4, 4);
    CHECK(f.weight() == 4);
    CHECK(f.index() == 1);
    CHECK(check_support(f));
    // coefficient of q^(1/4+1) zeta^1 picks up e4's q^1 term: 240 + contribution
    // of r = 1 only (r = -3, 5 lie deeper), so value 240.
    CHECK(f.coeff(rat(5, 4), 1) == GaussRat(240, 0));
    CHECK(f.coeff(rat(1, 4), 1) == GaussRat(1));
    CHECK(f.coeff(rat(1, 4), -1) == GaussRat(1));
    // specialization is multiplicative for zeta-free factors
    CHECK(equal_upto(specialize_z0(f), specialize_z0(th) * e4));
    // addition demands equal index
    CHECK_THROWS_AS(th + theta_classical(2, 0, P), std::invalid_argument);
    CHECK_THROWS_AS(th.coeff(P, 1), std::out_of_range);
}

TEST_CASE("theta decomposition round trip") {
    const Rat P = rat(14);
    const QSeries e4 = eisenstein(4, P);
    // an honest index-2 expansion: theta * E4 plus a shifted partner
    const JacobiExpansion phi =
        theta_classical(2, 1, P).scalar_mul(e4, 4) + theta_classical(2, 3, P).scalar_mul(delta(P), 12);
    const auto comps = theta_decompose_classical(phi);
    REQUIRE(comps.size() == 4);
    CHECK(equal_upto(comps[1], e4.truncated(comps[1].prec())));
    CHECK(equal_upto(comps[3], delta(P).truncated(comps[3].prec())));
    CHECK(comps[0].is_zero());
    const JacobiExpansion back = theta_assemble_classical(phi.weight(), 2, comps);
    CHECK(!jacobi_first_mismatch(back, phi).has_value());

    // breaking the dependence law is detected
    auto terms = phi.terms();
    terms[{terms.begin()->first.first + 8 * phi.den(), terms.begin()->first.second}] +=
        GaussRat(1);
    const JacobiExpansion broken(phi.weight(), phi.index(), phi.den(), terms, phi.prec());
    CHECK_THROWS_AS(theta_decompose_classical(broken), decomposition_error);
}

TEST_CASE("first-mismatch reporting for two-variable expansions") {
    const Rat P = rat(12);
    const JacobiExpansion a = theta_classical(1, 0, P);
    JacobiExpansion b = a;
    CHECK(!jacobi_first_mismatch(a, b).has_value());
    // weight metadata is ignored by coefficient comparison
    CHECK(!jacobi_first_mismatch(a, b.with_weight(3)).has_value());
    // index mismatch is structural
    CHECK_THROWS_AS(jacobi_first_mismatch(a, theta_classical(2, 0, P)), std::invalid_argument);
    // perturb the existing q^1 zeta^2 term (r = -2 at the same exponent
    // stays untouched, so the first mismatch is located at r = +2)
    const JacobiExpansion bump(0, 1, 1, {{{1, 2}, GaussRat(rat(1, 3), rat(0))}}, P);
    const JacobiExpansion c = a + bump;
    long long r_at = 0;
    const auto m = jacobi_first_mismatch(a, c, &r_at);
    REQUIRE(m.has_value());
    CHECK(m->exponent == rat(1));
    CHECK(r_at == 2);
    CHECK(m->lhs == GaussRat(1));
    CHECK(m->rhs == GaussRat(rat(4, 3), rat(0)));
}
