// Independent reference computations used to pin expected values in the test
// suites.  Everything here works on plain GMP integers and brute-force
// enumeration — none of it shares code with the library under test.
#pragma once

#include <gmpxx.h>

#include <vector>

namespace oracle {

// Coefficients c_0..c_{nterms-1} of prod_{j>=1} (1 - q^j)^power, by naive
// repeated polynomial multiplication.
std::vector<mpz_class> euler_product_pow(int power, int nterms);

// The same series for power = 1 via the pentagonal-number expansion — a
// structurally different route used to cross-check the product form.
std::vector<mpz_class> euler_product_pentagonal(int nterms);

// The cube of the Euler product via the triangular-number expansion
// sum_{m>=0} (-1)^m (2m+1) q^{m(m+1)/2}.
std::vector<mpz_class> euler_product_cubed(int nterms);

// Divisor power sum sigma_k(n), n >= 1.
mpz_class sigma(unsigned k, long long n);

// Normalized Eisenstein coefficients: 1 + 240 sum sigma_3(n) q^n and
// 1 - 504 sum sigma_5(n) q^n.
std::vector<mpz_class> eisenstein4(int nterms);
std::vector<mpz_class> eisenstein6(int nterms);

// Discriminant coefficients via (E4^3 - E6^2)/1728 with exact division.
std::vector<mpz_class> delta_coeffs(int nterms);

// Number of integer pairs (x, y) with x ≡ a and y ≡ b (mod step) lying on
// the circle x^2 + y^2 = n4, counted by brute force.
long long lattice_count(long long step, long long a, long long b, long long n4);

// Number of integers r ≡ mu (mod step) with r^2 = rsq.
long long residue_square_count(long long step, long long mu, long long rsq);

}  // namespace oracle
