#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hjf/qseries.hpp"
#include "oracles.hpp"

#include <map>
#include <stdexcept>

using namespace hjf;

namespace {

GaussRat gz(const mpz_class& z) { return GaussRat(Rat(z)); }

}  // namespace

TEST_CASE("oracle self-consistency: product vs closed expansions") {
    const int N = 60;
    CHECK(oracle::euler_product_pow(1, N) == oracle::euler_product_pentagonal(N));
    CHECK(oracle::euler_product_pow(3, N) == oracle::euler_product_cubed(N));
}

TEST_CASE("rational helpers") {
    CHECK(rat(1, 2) + rat(1, 3) == rat(5, 6));
    CHECK(rat_from_string("-7/3") == rat(-7, 3));
    CHECK(rat_to_string(rat(9, 6)) == "3/2");
    CHECK_THROWS_AS(rat_from_string("x"), std::invalid_argument);
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);

    const GaussRat i = GaussRat::i();
    CHECK(i * i == GaussRat(-1, 0));
    CHECK((GaussRat(2, 3) * GaussRat(2, -3)) == GaussRat(13, 0));
    CHECK(GaussRat(1, 1).conj() == GaussRat(1, -1));
}

TEST_CASE("monomials, addition, multiplication") {
    const Rat P = rat(10);
    const QSeries one = QSeries::one(P);
    const QSeries q = QSeries::monomial(1, GaussRat(1), P);
    const QSeries a = one + q;          // 1 + q
    const QSeries b = one - q;          // 1 - q
    const QSeries prod = a * b;         // 1 - q^2
    CHECK(prod.coeff(0) == GaussRat(1));
    CHECK(prod.coeff(1) == GaussRat(0));
    CHECK(prod.coeff(2) == GaussRat(-1, 0));
    CHECK(prod.coeff(3) == GaussRat(0));
    CHECK(prod.prec() == P);

    // Fractional exponents share a common denominator and are exact.
    const QSeries h = QSeries::monomial(rat(1, 2), GaussRat(1), P);
    const QSeries hh = h * h;
    CHECK(hh.coeff(1) == GaussRat(1));
    CHECK((h + h).coeff(rat(1, 2)) == GaussRat(2, 0));
    CHECK((h * QSeries::monomial(rat(1, 3), GaussRat(1), P)).coeff(rat(5, 6)) == GaussRat(1));
}

TEST_CASE("precision contracts") {
    const QSeries a = QSeries::monomial(2, GaussRat(1), rat(10));  // q^2, prec 10
    const QSeries b = QSeries::monomial(3, GaussRat(1), rat(7));   // q^3, prec 7
    CHECK((a + b).prec() == rat(7));
    // mul: min(10 + 3, 7 + 2) = 9
    CHECK((a * b).prec() == rat(9));
    CHECK((a * b).coeff(5) == GaussRat(1));
    // coefficient queries at or beyond precision are refused
    CHECK_THROWS_AS(a.coeff(10), std::out_of_range);
    CHECK_THROWS_AS((a + b).coeff(rat(15, 2)), std::out_of_range);
    // truncation shrinks, never grows
    CHECK(a.truncated(4).prec() == rat(4));
    CHECK(a.truncated(99).prec() == rat(10));
}

TEST_CASE("derivative, shift, power, scale") {
    const Rat P = rat(12);
    const QSeries f = QSeries::monomial(rat(3, 8), GaussRat(5, 0), P);
    CHECK(f.derived().coeff(rat(3, 8)) == GaussRat(rat(15, 8), rat(0)));
    CHECK(f.shifted(rat(1, 8)).coeff(rat(1, 2)) == GaussRat(5, 0));
    CHECK(f.scaled(GaussRat(0, 1)).coeff(rat(3, 8)) == GaussRat(0, 5));

    const QSeries g = QSeries::one(P) + QSeries::monomial(1, GaussRat(1), P);
    const QSeries g4 = g.powed(4);  // (1+q)^4
    CHECK(g4.coeff(2) == GaussRat(6, 0));
    CHECK(g4.coeff(4) == GaussRat(1, 0));
    CHECK(g.powed(0).coeff(0) == GaussRat(1));
}

TEST_CASE("division is an exact inverse of multiplication") {
    const Rat P = rat(16);
    const QSeries f = eta_power(8, P);
    const QSeries g = eta_power(3, P);
    const QSeries quot = divide(f, g);  // eta^5
    CHECK(equal_upto(quot, eta_power(5, quot.prec())));
    CHECK(equal_upto(quot * g, f.truncated((quot * g).prec())));
    // Laurent tails: 1/eta^3 has valuation -1/8
    const QSeries inv = divide(QSeries::one(P), g);
    CHECK(inv.valuation().value() == rat(-1, 8));
    CHECK_THROWS_AS(divide(f, QSeries::zero(P)), std::domain_error);
}

TEST_CASE("eta powers match the independent product expansion") {
    const int N = 40;
    const Rat P = rat(N);
    for (int n : {1, 6, 15, 18, 24}) {
        const QSeries e = eta_power(n, P);
        const auto want = oracle::euler_product_pow(n, N);
        const Rat shift = rat(n, 24);
        for (int j = 0; j < N; ++j) {
            const Rat expo = shift + rat(j);
            if (!(expo < P)) break;
            CHECK(e.coeff(expo) == gz(want[static_cast<size_t>(j)]));
        }
    }
}

TEST_CASE("first_mismatch reports the earliest disagreement") {
    const Rat P = rat(10);
    const QSeries a = QSeries::one(P) + QSeries::monomial(3, GaussRat(2, 0), P);
    const QSeries b = QSeries::one(P) + QSeries::monomial(3, GaussRat(2, 0), P) +
                      QSeries::monomial(5, GaussRat(0, 1), P);
    CHECK(!first_mismatch(a, a).has_value());
    const auto m = first_mismatch(a, b);
    REQUIRE(m.has_value());
    CHECK(m->exponent == rat(5));
    CHECK(m->lhs == GaussRat(0));
    CHECK(m->rhs == GaussRat(0, 1));
    // Disagreement beyond the common precision is invisible.
    CHECK(!first_mismatch(a, b.truncated(5)).has_value());
}

TEST_CASE("normalization minimizes the exponent denominator") {
    std::map<long long, GaussRat> m;
    m[4] = GaussRat(1);  // q^(4/8) = q^(1/2)
    m[8] = GaussRat(2, 0);
    const QSeries f(8, std::move(m), rat(5));
    CHECK(f.den() == 2);
    CHECK(f.coeff(rat(1, 2)) == GaussRat(1));
    CHECK(f.coeff(1) == GaussRat(2, 0));
    CHECK(QSeries::zero(rat(3)).den() == 1);
}
