#include <doctest.h>

#include "hjf/errors.hpp"
#include "hjf/hermitian.hpp"
#include "hjf/jacobi.hpp"
#include "hjf/lattice.hpp"
#include "hjf/modular.hpp"
#include "hjf/qseries.hpp"
#include "hjf/verify.hpp"
#include "oracles.hpp"

#include <stdexcept>

using namespace hjf;

TEST_CASE("lattice theta series against brute-force counts") {
    const Rat P = rat(16);
    for (long long m : {1, 2}) {
        for (const Rep& s : representatives(m)) {
            const HermitianExpansion th = theta_hermitian(m, s, P);
            CHECK(th.index() == m);
            CHECK(check_support_hermitian(th));
            // every circle below precision carries exactly the brute-force count
            const QSeries c = taylor_chi(th, 0, 0);
            for (long long n4 = 0; n4 < 4 * m * 16; ++n4) {
                const Rat e = rat(n4, 4 * m);
                if (!(e < c.prec())) break;
                const long long cnt = oracle::lattice_count(2 * m, s.a, s.b, n4);
                CHECK(c.coeff(e) == GaussRat(cnt, 0));
            }
            // individual stored coefficients are 0/1 indicators of congruence
            CHECK(th.coeff(rat(s.a * s.a + s.b * s.b, 4 * m), HalfPoint(s.a, s.b)) == GaussRat(1));
        }
    }
    CHECK_THROWS_AS(theta_hermitian(0, Rep(0, 0), P), std::invalid_argument);
}

TEST_CASE("component extraction and reassembly") {
    const Rat P = rat(14);
    const HermitianExpansion phi = build_named("phi41", P);
    CHECK(phi.weight() == 4);
    CHECK(phi.index() == 1);
    const ComponentVector cv = extract(phi);
    CHECK(cv.index == 1);
    REQUIRE(cv.comps.size() == 4);
    const HermitianExpansion back = assemble(cv);
    CHECK(!hermitian_first_mismatch(back, phi).has_value());

    // assemble validates completeness and rejects duplicates
    ComponentVector missing = cv;
    missing.comps.erase(Rep(1, 1));
    CHECK_THROWS_AS(assemble(missing), std::invalid_argument);
    CHECK(assemble(missing, P).index() == 1);  // explicit zero-fill variant

    // off-grid component exponents are rejected: the (0,0) component must
    // have integral exponents, so a q^(1/2) term violates the grid law
    ComponentVector off = cv;
    off.comps[Rep(0, 0)] =
        off.comps[Rep(0, 0)] + QSeries::monomial(rat(1, 2), GaussRat(1), P);
    CHECK_THROWS_AS(assemble(off), std::domain_error);
}

TEST_CASE("restriction maps and index raising on thetas") {
    const Rat P = rat(16);
    const ThetaConstants tc = theta_constants(P);
    // one spot identity per map; the verification suites sweep all classes
    const HermitianExpansion th = theta_hermitian(1, Rep(0, 1), P);
    CHECK(jacobi_equal_upto(restrict_to(th, 1, 0),
                            theta_classical(1, 0, P).scalar_mul(tc.theta1)));
    const JacobiExpansion diag = restrict_to(th, 1, 1);
    CHECK(diag.index() == 2);
    CHECK(check_support(diag));
    const HermitianExpansion up = u_raise(th);
    CHECK(up.index() == 2);
    CHECK(up.weight() == th.weight());
    // U on a theta: classes (0,1) + i(0,1)... = (3,1) and (1,3) targets
    const HermitianExpansion want =
        theta_hermitian(2, Rep(3, 1), P) + theta_hermitian(2, Rep(1, 3), P);
    CHECK(!hermitian_first_mismatch(up, want).has_value());
}

TEST_CASE("two multiplication routes agree") {
    const Rat P = rat(12);
    const HermitianExpansion phi = build_named("phi41", P);
    const HermitianExpansion viaGrid = mul_hjf(phi, phi);
    const HermitianExpansion viaThetas = square_index1(phi);
    CHECK(viaGrid.weight() == 8);
    CHECK(viaGrid.index() == 2);
    CHECK(viaThetas.weight() == 8);
    CHECK(!hermitian_first_mismatch(viaGrid, viaThetas).has_value());
    CHECK_THROWS_AS(square_index1(viaGrid), std::invalid_argument);

    const QSeries e4 = eisenstein(4, P);
    const HermitianExpansion sc = scalar_mul(e4, phi, 4);
    CHECK(sc.weight() == 8);
    CHECK(sc.index() == 1);
    CHECK(equal_upto(taylor_chi(sc, 0, 0), e4 * taylor_chi(phi, 0, 0)));
}

TEST_CASE("Taylor developments and the weight-4 anchor") {
    const Rat P = rat(16);
    const HermitianExpansion phi = build_named("phi41", P);
    // chi(0,0) = 2 E4: the q-expansion anchor fixing the normalization
    CHECK(equal_upto(taylor_chi(phi, 0, 0), eisenstein(4, P).scaled(GaussRat(2, 0))));
    // character-parity vanishing: chi(a,b) = 0 unless a - b ≡ k (mod 4)
    for (unsigned a = 0; a <= 3; ++a)
        for (unsigned b = 0; b <= 3; ++b) {
            if ((static_cast<int>(a) - static_cast<int>(b) - phi.weight()) % 4 != 0)
                CHECK(taylor_chi(phi, a, b).is_zero());
        }
    // xi operators land in cusp spaces
    const QSeries x11 = xi11(phi);
    CHECK(x11.is_zero());  // S_6 = 0
    const QSeries x22 = xi22(phi);
    CHECK(x22.is_zero());  // S_8 = 0
    CHECK(order_vanishing(phi) == 0);
    CHECK(!order_vanishing(HermitianExpansion::zero(4, 1, P)).has_value());
}

TEST_CASE("unit relabeling, character projection, symmetry checks") {
    const Rat P = rat(12);
    const HermitianExpansion phi = build_named("phi42tilde", P);
    CHECK(check_symmetries(phi).pass);
    CHECK(check_symmetries(phi).char_label == 0);  // weight 4: i^{-4} = 1

    // W_mu composes additively in the exponent
    const HermitianExpansion w1 = unit_relabel(phi, 1);
    const HermitianExpansion w3 = unit_relabel(w1, 2);
    CHECK(!hermitian_first_mismatch(w3, unit_relabel(phi, 3)).has_value());

    // projections over all four characters sum back to phi
    HermitianExpansion acc = char_project(phi, 0);
    for (int alpha = 1; alpha < 4; ++alpha) acc = acc + char_project(phi, alpha);
    CHECK(!hermitian_first_mismatch(acc, phi).has_value());
    // a genuine weight-4 form is pure class 0
    CHECK(!hermitian_first_mismatch(char_project(phi, 0), phi).has_value());
    CHECK(char_project(phi, 1).is_zero());

    // a deliberately broken expansion fails the unit law
    const HermitianExpansion bent =
        phi + theta_hermitian(2, Rep(0, 1), P).scaled(GaussRat(rat(1, 5), rat(0))).with_weight(4);
    const SymmetryReport rep = check_symmetries(bent);
    CHECK(!rep.pass);
    CHECK(!rep.violations.empty());
}

TEST_CASE("index-1 and index-2 builders") {
    const Rat P = rat(16);
    // weight 10 lift of the discriminant
    const HermitianExpansion lift = build_index1_2mod4(10, delta(P + rat(6)));
    CHECK(lift.weight() == 10);
    CHECK(lift.index() == 1);
    CHECK(check_symmetries(lift).pass);
    const ComponentVector cv = extract(lift);
    CHECK(cv.comps.at(Rep(0, 0)).is_zero());
    CHECK(cv.comps.at(Rep(1, 1)).is_zero());
    CHECK(equal_upto(cv.comps.at(Rep(1, 0)), -cv.comps.at(Rep(0, 1))));
    CHECK_THROWS_AS(build_index1_2mod4(12, delta(P)), unsupported_range);

    // kernel-of-restriction builder at weight 6
    const QSeries f = basis_sk(12, P + rat(6)).elems.at(0);
    const HermitianExpansion ker = build_ker_pi1_2mod4(6, f, QSeries::zero(P + rat(6)));
    CHECK(ker.weight() == 6);
    CHECK(ker.index() == 2);
    CHECK(restrict_to(ker, 1, 0).is_zero());
    CHECK(check_symmetries(ker).pass);
    CHECK_THROWS_AS(build_ker_pi1_2mod4(8, f, f), unsupported_range);
    CHECK_THROWS_AS(build_named("nope", P), std::invalid_argument);
}

TEST_CASE("expansion container invariants") {
    const Rat P = rat(10);
    CHECK_THROWS_AS(HermitianExpansion(4, 0, 1, {}, P), std::invalid_argument);
    const HermitianExpansion z1 = HermitianExpansion::zero(4, 1, P);
    const HermitianExpansion z2 = HermitianExpansion::zero(6, 2, P);
    CHECK_THROWS_AS(z1 + z2, std::invalid_argument);
    CHECK(z1.is_zero());
    CHECK_THROWS_AS(z1.coeff(P, HalfPoint(0, 0)), std::out_of_range);
    CHECK(z1.coeff(rat(3), HalfPoint(1, 1)) == GaussRat(0));
}
