#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vlab/coefficients.hpp"
#include "vlab/kloosterman.hpp"
#include "exact_sym2.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <numeric>
#include <random>

using namespace vlab;
using namespace vlab::arith;

namespace {

// trial-division oracle, independent of the library's implementation
std::int64_t divisor_oracle(std::int64_t n) {
    std::int64_t c = 0;
    for (std::int64_t d = 1; d <= n; ++d)
        if (n % d == 0) ++c;
    return c;
}

// two-variable enumeration oracle for r2
std::int64_t r2_oracle(std::int64_t n) {
    std::int64_t c = 0;
    const auto r = std::int64_t(std::ceil(std::sqrt(double(n)))) + 1;
    for (std::int64_t x = -r; x <= r; ++x)
        for (std::int64_t y = -r; y <= r; ++y)
            if (x * x + y * y == n) ++c;
    return c;
}

// brute-force q-expansion of q prod (1-q^m)^24: multiply the 24 factors out
// one sparse binomial at a time
std::vector<int128> tau_oracle(std::int64_t N) {
    std::vector<int128> p(std::size_t(N), 0);
    p[0] = 1;
    for (std::int64_t m = 1; m < N; ++m)
        for (int rep = 0; rep < 24; ++rep)
            for (std::int64_t i = N - 1 - m; i >= 0; --i)
                p[std::size_t(i + m)] -= p[std::size_t(i)];
    return p;  // tau(n) = p[n-1]
}

} // namespace

TEST_CASE("divisor_count: oracle values and errors") {
    CHECK(divisor_count(1) == 1);
    CHECK(divisor_count(12) == divisor_oracle(12));
    CHECK(divisor_count(12) == 6);
    for (std::int64_t p : {2, 3, 5, 97, 9973}) CHECK(divisor_count(p) == 2);
    CHECK_THROWS_AS(divisor_count(0), std::domain_error);
}

TEST_CASE("divisor table matches trial division and is multiplicative") {
    const auto table = divisor_table(10000);
    for (std::int64_t n = 1; n <= 300; ++n)
        CHECK(table.exact(n) == divisor_oracle(n));
    // d(mn) = d(m) d(n) for coprime pairs, exhaustively within the table
    for (std::int64_t m = 2; m <= 100; ++m)
        for (std::int64_t n = m + 1; m * n <= 10000; ++n) {
            if (std::gcd(m, n) != 1) continue;
            CHECK(table.exact(m * n) == checked_mul(table.exact(m), table.exact(n)));
        }
}

TEST_CASE("r2: enumeration values, both methods agree") {
    CHECK(r2(0, R2Method::Lattice) == 1);
    CHECK(r2(5, R2Method::Lattice) == 8);
    CHECK(r2(5, R2Method::Lattice) == r2_oracle(5));
    CHECK(r2(3, R2Method::Lattice) == 0);
    CHECK(r2(3, R2Method::Character) == 0);
    CHECK_THROWS_AS(r2(0, R2Method::Character), std::domain_error);
    for (std::int64_t n : {1, 2, 4, 25, 50, 325})
        CHECK(r2(n, R2Method::Lattice) == r2_oracle(n));

    const auto table = r2_table(100000);
    for (std::int64_t n = 1; n <= 100000; ++n)
        CHECK(table.exact(n) == r2(n, R2Method::Lattice));
}

TEST_CASE("mobius: casework and the divisor-sum identity") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(4) == 0);
    CHECK(mobius(6) == 1);
    CHECK(mobius(30) == -1);
    for (std::int64_t n = 1; n <= 10000; ++n) {
        std::int64_t acc = 0;
        for (std::int64_t d : divisors(n)) acc += mobius(d);
        CHECK(acc == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("ramanujan tau: brute-force oracle and first values") {
    const auto oracle = tau_oracle(60);
    const auto table = ramanujan_tau_table(60);
    for (std::int64_t n = 1; n <= 60; ++n)
        CHECK(table.exact(n) == oracle[std::size_t(n - 1)]);
    CHECK(table.exact(1) == 1);
    CHECK(table.exact(2) == -24);
    CHECK(table.exact(3) == 252);
}

TEST_CASE("tau: Hecke relations exact on the table") {
    const auto table = ramanujan_tau_table(10000);
    // multiplicativity
    for (std::int64_t m = 2; m <= 80; ++m)
        for (std::int64_t n = m + 1; m * n <= 10000; ++n) {
            if (std::gcd(m, n) != 1) continue;
            CHECK(table.exact(m * n) == checked_mul(table.exact(m), table.exact(n)));
        }
    // prime powers: tau(p^{r+1}) = tau(p) tau(p^r) - p^11 tau(p^{r-1})
    for (std::int64_t p : {2, 3, 5, 7}) {
        const int128 p11 = checked_pow(p, 11);
        std::int64_t pr = p;
        while (pr * p <= 10000) {
            const int128 lhs = table.exact(pr * p);
            const int128 rhs = checked_add(
                checked_mul(table.exact(p), table.exact(pr)),
                -checked_mul(p11, table.exact(pr / p)));
            CHECK(lhs == rhs);
            pr *= p;
        }
    }
    // the Hecke evaluator agrees with the dense table everywhere
    const TauHecke hecke(table);
    for (std::int64_t n = 1; n <= 10000; n += 7)
        CHECK(hecke.tau(n) == table.exact(n));
}

TEST_CASE("normalized coefficients: values, Hecke square, parity") {
    const auto tau = ramanujan_tau_table(64);
    const auto a = normalized_gl2_coeffs(tau, 12);
    CHECK(a.value(1) == 1.0);
    CHECK(a.value(2) == doctest::Approx(-24.0 * std::pow(2.0, -5.5)).epsilon(1e-12));
    CHECK(a.value(2) == doctest::Approx(-0.5303300859).epsilon(1e-9));
    CHECK(a.value(4) == -0.71875);  // a_2^2 - 1, exact in doubles
    CHECK(gl2_nu(12) == -5.5);
    CHECK_THROWS_AS(normalized_gl2_coeffs(a, 12), std::invalid_argument);
    CHECK_THROWS_AS(normalized_gl2_coeffs(tau, 16), std::invalid_argument);
}

TEST_CASE("kloosterman: closed cases and brute-force value") {
    CHECK(kloosterman({1, 1, 1}) == doctest::Approx(1.0));
    // S(0,0;c) = phi(c)
    for (std::int64_t c : {2, 5, 10, 36, 97})
        CHECK(kloosterman({0, 0, c}) == doctest::Approx(double(euler_totient(c))).epsilon(1e-12));
    // S(1,1;5): x = 1,2,3,4 pair with inverses 1,3,2,4, so the sum is
    // e(2/5) + e(5/5) + e(5/5) + e(8/5) = 2 + 2 cos(4 pi / 5)
    const double expected = 2.0 + 2.0 * std::cos(4.0 * std::numbers::pi / 5.0);
    CHECK(kloosterman({1, 1, 5}) == doctest::Approx(0.3819660113).epsilon(1e-9));
    CHECK(kloosterman({1, 1, 5}) == doctest::Approx(expected).epsilon(1e-12));
    CHECK_THROWS_AS(kloosterman({1, 1, 0}), std::domain_error);
}

TEST_CASE("kloosterman: symmetry on random triples") {
    std::mt19937 rng(5519);
    std::uniform_int_distribution<std::int64_t> mdist(-30, 30), cdist(1, 80);
    for (int i = 0; i < 200; ++i) {
        const std::int64_t m = mdist(rng), n = mdist(rng), c = cdist(rng);
        CHECK(kloosterman({m, n, c}) == doctest::Approx(kloosterman({n, m, c})).epsilon(1e-11));
    }
}

TEST_CASE("twist parameters: inverse and validation") {
    const auto t = make_twist(3, 7);
    CHECK((t.a * t.a_bar) % 7 == 1);
    CHECK_THROWS_AS(make_twist(2, 4), std::domain_error);
    CHECK_THROWS_AS(make_twist(1, 0), std::domain_error);
    CHECK_THROWS_AS(make_twist(1, 2, 0), std::domain_error);
    CHECK(make_twist(0, 1).a_bar == 0);
    CHECK(mod_inverse(3, 10) == 7);
}

TEST_CASE("sym2 A-table: first values and the local identity") {
    const auto tau = ramanujan_tau_table(10000);
    const auto a = normalized_gl2_coeffs(tau, 12);
    const auto A = sym2_A_table(a, 100);
    CHECK(A.value(1) == 1.0);
    CHECK(A.value(2) == doctest::Approx(-0.71875).epsilon(1e-14));
    CHECK(A.value(4) == doctest::Approx(a.value(16) + a.value(1)).epsilon(1e-14));
    // A_p = a_p^2 - 1 at every prime p <= 100
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                           47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97})
        CHECK(A.value(p) == doctest::Approx(a.value(p) * a.value(p) - 1.0).epsilon(1e-12));
    CHECK_THROWS_AS(sym2_A_table(a, 101), std::invalid_argument);

    // the Hecke-extended route agrees with the table route
    const auto A2 = sym2_A_table_hecke(tau, 100);
    for (std::int64_t n = 1; n <= 100; ++n)
        CHECK(A2.value(n) == doctest::Approx(A.value(n)).epsilon(1e-13));
}

TEST_CASE("sym2: lift side equals the Euler-product expansion, exactly") {
    const auto tau = ramanujan_tau_table(512);
    const TauHecke hecke(tau);
    for (std::int64_t n = 1; n <= 500; ++n)
        CHECK(exact_sym2::lift_side(n, hecke) == exact_sym2::euler_side(n, hecke));
}

TEST_CASE("sym2 abelian coefficients: boundary, symmetry, example") {
    const auto tau = ramanujan_tau_table(3600);
    const auto a = normalized_gl2_coeffs(tau, 12);
    const auto A = sym2_A_table(a, 60);
    for (std::int64_t n = 1; n <= 40; ++n)
        CHECK(sym2_abelian_coeff(1, n, A, a) == doctest::Approx(A.value(n)).epsilon(1e-14));
    for (std::int64_t m = 1; m <= 30; ++m)
        for (std::int64_t n = 1; n <= 30; ++n)
            CHECK(sym2_abelian_coeff(m, n, A, a) ==
                  doctest::Approx(sym2_abelian_coeff(n, m, A, a)).epsilon(1e-13));
    const double a22 = sym2_abelian_coeff(2, 2, A, a);
    CHECK(a22 == doctest::Approx(0.71875 * 0.71875 - 1.0).epsilon(1e-14));
    // product-relation route equals the double-sum route
    for (std::int64_t m = 1; m <= 24; ++m)
        for (std::int64_t n = 1; n <= 24; ++n)
            CHECK(sym2_abelian_coeff(m, n, A, a) ==
                  doctest::Approx(sym2_abelian_coeff_double_sum(m, n, a)).epsilon(1e-12));
    CHECK_THROWS_AS(sym2_abelian_coeff(1, 80, A, a), std::out_of_range);
}

TEST_CASE("coefficient cache: round trips, discovery, malformed input") {
    namespace fs = std::filesystem;
    const auto dir = fs::temp_directory_path() / "vlab_arith_cache_test";
    fs::remove_all(dir);
    fs::create_directories(dir);

    const auto tau = ramanujan_tau_table(100);
    const auto path = (dir / cache_file_name(TableKind::RamanujanTau, 100)).string();
    tau.save(path);
    const auto loaded = CoefficientTable::load(path);
    CHECK(loaded.kind() == TableKind::RamanujanTau);
    CHECK(loaded.max_index() == 100);
    for (std::int64_t n = 1; n <= 100; ++n) CHECK(loaded.exact(n) == tau.exact(n));

    // saving the loaded copy reproduces the file byte for byte
    const auto path2 = (dir / "roundtrip.tsv").string();
    loaded.save(path2);
    std::ifstream f1(path), f2(path2);
    std::string s1((std::istreambuf_iterator<char>(f1)), {});
    std::string s2((std::istreambuf_iterator<char>(f2)), {});
    CHECK(s1 == s2);

    // float-valued kinds round trip through %.17g
    const auto a = normalized_gl2_coeffs(tau, 12);
    const auto apath = (dir / cache_file_name(TableKind::NormalizedGL2, 100)).string();
    a.save(apath);
    const auto aload = CoefficientTable::load(apath);
    for (std::int64_t n = 1; n <= 100; ++n) CHECK(aload.value(n) == a.value(n));

    CHECK(find_cached(dir.string(), TableKind::RamanujanTau, 50).has_value());
    CHECK(!find_cached(dir.string(), TableKind::RamanujanTau, 101).has_value());

    // malformed line must be reported with its number
    const auto bad = (dir / "bad.tsv").string();
    {
        std::ofstream out(bad);
        out << "#kind=tau N=3\n1\t1\n2\tnot_a_number\n";
    }
    try {
        CoefficientTable::load(bad);
        CHECK(false);
    } catch (const std::runtime_error& e) {
        CHECK(std::string(e.what()).find(":3:") != std::string::npos);
    }
    fs::remove_all(dir);
}

TEST_CASE("int128 helpers: strings and overflow detection") {
    CHECK(to_string(int128(0)) == "0");
    CHECK(to_string(int128(-1472)) == "-1472");
    CHECK(parse_int128("-1472") == int128(-1472));
    CHECK(to_string(parse_int128("170141183460469231731687303715884105727")) ==
          "170141183460469231731687303715884105727");
    CHECK_THROWS_AS(parse_int128("12x"), std::invalid_argument);
    const int128 big = checked_pow(10, 38);
    CHECK_THROWS_AS(checked_mul(big, big), std::overflow_error);
    CHECK_THROWS_AS(checked_pow(10, 40), std::overflow_error);
}
