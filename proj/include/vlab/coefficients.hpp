#pragma once

// Integer-arithmetic sequences and coefficient tables: divisor counts, sums
// of two squares, Moebius, Ramanujan tau, normalized weight-12 coefficients,
// and the symmetric-square lift tables built from them. Tables are immutable
// once built and safe to share across threads.

#include "vlab/checked_int.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace vlab::arith {

enum class TableKind {
    DivisorD,
    SumsOfSquaresR2,
    RamanujanTau,
    NormalizedGL2,
    SymSquareA,
    SymSquareAbelian,
};

const char* kind_name(TableKind kind);
TableKind kind_from_name(const std::string& name);
bool kind_is_integer_valued(TableKind kind);

class CoefficientTable {
public:
    CoefficientTable(TableKind kind, std::int64_t max_index);

    TableKind kind() const { return kind_; }
    std::int64_t max_index() const { return max_index_; }

    // 1-based. SymSquareAbelian tables use the pair accessor instead.
    double value(std::int64_t n) const;
    int128 exact(std::int64_t n) const;  // integer-valued kinds only
    bool has_exact() const { return !exact_.empty(); }

    double value_pair(std::int64_t m, std::int64_t n) const;

    void set(std::int64_t n, double v);
    void set_exact(std::int64_t n, int128 v);
    void set_pair(std::int64_t m, std::int64_t n, double v);

    // Largest |a_n| / n over the table; the engines use it as the crude
    // growth bound when estimating truncation tails.
    double growth_bound() const;

    void save(const std::string& path) const;
    static CoefficientTable load(const std::string& path);

private:
    TableKind kind_;
    std::int64_t max_index_;
    std::vector<double> values_;
    std::vector<int128> exact_;
};

// ---- elementary arithmetic functions ----

// Number of positive divisors; trial division. n = 0 rejected.
std::int64_t divisor_count(std::int64_t n);

enum class R2Method { Lattice, Character };

// #{(x,y) in Z^2 : x^2 + y^2 = n}. The character method evaluates
// 4(#{d|n : d = 1 mod 4} - #{d|n : d = 3 mod 4}) and rejects n = 0.
std::int64_t r2(std::int64_t n, R2Method method);

int mobius(std::int64_t n);

std::int64_t euler_totient(std::int64_t n);

std::vector<std::int64_t> divisors(std::int64_t n);

// Floor square root without floating-point rounding hazards.
std::int64_t isqrt(std::int64_t n);

// ---- table builders ----

CoefficientTable divisor_table(std::int64_t N);   // sieve
CoefficientTable r2_table(std::int64_t N);        // divisor-character sieve

// tau(n) for n <= N from q prod_{m>=1} (1-q^m)^24: pentagonal-number series
// for the product, then the 24th power by repeated squaring of truncated
// series. Exact (checked) 128-bit arithmetic throughout.
CoefficientTable ramanujan_tau_table(std::int64_t N);

// a_n = tau(n) n^{-(weight-1)/2}; only weight 12 can be built from scratch
// (other weights arrive via ingested files). Holomorphic forms contribute
// nothing at negative index.
CoefficientTable normalized_gl2_coeffs(const CoefficientTable& tau, int weight);

// Spectral parameter nu = (1 - weight) / 2 of the normalized form.
double gl2_nu(int weight);

// Exact tau at arguments beyond the dense table, through multiplicativity
// and the Hecke prime-power recursion tau(p^{e+1}) = tau(p) tau(p^e) -
// p^11 tau(p^{e-1}). Needs the dense table only up to the largest prime
// factor involved.
class TauHecke {
public:
    explicit TauHecke(const CoefficientTable& tau);
    int128 tau(std::int64_t n) const;
    int128 tau_prime_power(std::int64_t p, int e) const;

private:
    std::vector<int128> tau_small_;
};

// A_n = sum_{d^2 | n} a_{(n/d^2)^2} for n <= N; needs a up to N^2.
CoefficientTable sym2_A_table(const CoefficientTable& a, std::int64_t N);

// Same table through the exact Hecke extension of tau (a_{m^2} =
// tau(m^2) / m^11 with tau(m^2) from multiplicativity and the prime-power
// recursion), needing the dense tau table only up to N instead of N^2.
// Must agree with sym2_A_table wherever both apply.
CoefficientTable sym2_A_table_hecke(const CoefficientTable& tau, std::int64_t N);

// a_{m,n} = sum_{d | (m,n)} mu(d) A_{n/d} A_{m/d} (boundary rows equal A).
double sym2_abelian_coeff(std::int64_t m, std::int64_t n,
                          const CoefficientTable& A, const CoefficientTable& a);

// Same coefficient through the lift's double-sum form
// sum_{d|(m,n)} mu(d) sum { a_r a_s : r = (m/(k^2 d))^2, s = (n/(l^2 d))^2 };
// the two routes agreeing is a standing cross-check.
double sym2_abelian_coeff_double_sum(std::int64_t m, std::int64_t n,
                                     const CoefficientTable& a);

CoefficientTable sym2_abelian_table(const CoefficientTable& A,
                                    const CoefficientTable& a, std::int64_t N);

// ---- cache ----

std::string cache_file_name(TableKind kind, std::int64_t N);

// Scans a cache directory for a table of this kind with max_index >= N.
std::optional<std::string> find_cached(const std::string& dir, TableKind kind,
                                       std::int64_t N);

} // namespace vlab::arith
