#include "vlab/coefficients.hpp"

#include <algorithm>
#include <cinttypes>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace vlab::arith {

namespace {

struct KindInfo {
    TableKind kind;
    const char* name;
    bool integer_valued;
    bool pair_indexed;
};

constexpr KindInfo kKinds[] = {
    {TableKind::DivisorD, "divisor", true, false},
    {TableKind::SumsOfSquaresR2, "r2", true, false},
    {TableKind::RamanujanTau, "tau", true, false},
    {TableKind::NormalizedGL2, "gl2", false, false},
    {TableKind::SymSquareA, "sym2", false, false},
    {TableKind::SymSquareAbelian, "sym2ab", false, true},
};

const KindInfo& info(TableKind kind) {
    for (const auto& k : kKinds)
        if (k.kind == kind) return k;
    throw std::logic_error("unknown table kind");
}

void require_index(std::int64_t n, std::int64_t max_index, const char* what) {
    if (n < 1 || n > max_index)
        throw std::out_of_range(std::string(what) + ": index out of table range");
}

} // namespace

const char* kind_name(TableKind kind) { return info(kind).name; }

TableKind kind_from_name(const std::string& name) {
    for (const auto& k : kKinds)
        if (name == k.name) return k.kind;
    throw std::invalid_argument("unknown coefficient kind: " + name);
}

bool kind_is_integer_valued(TableKind kind) { return info(kind).integer_valued; }

CoefficientTable::CoefficientTable(TableKind kind, std::int64_t max_index)
    : kind_(kind), max_index_(max_index) {
    if (max_index < 1) throw std::invalid_argument("table needs max_index >= 1");
    const std::size_t n = info(kind).pair_indexed
                              ? std::size_t(max_index) * std::size_t(max_index)
                              : std::size_t(max_index);
    values_.assign(n, 0.0);
    if (info(kind).integer_valued) exact_.assign(n, 0);
}

double CoefficientTable::value(std::int64_t n) const {
    require_index(n, max_index_, kind_name(kind_));
    return values_[std::size_t(n - 1)];
}

int128 CoefficientTable::exact(std::int64_t n) const {
    require_index(n, max_index_, kind_name(kind_));
    if (exact_.empty())
        throw std::logic_error("table kind has no exact integer values");
    return exact_[std::size_t(n - 1)];
}

double CoefficientTable::value_pair(std::int64_t m, std::int64_t n) const {
    require_index(m, max_index_, kind_name(kind_));
    require_index(n, max_index_, kind_name(kind_));
    return values_[std::size_t(m - 1) * std::size_t(max_index_) + std::size_t(n - 1)];
}

void CoefficientTable::set(std::int64_t n, double v) {
    require_index(n, max_index_, kind_name(kind_));
    values_[std::size_t(n - 1)] = v;
}

void CoefficientTable::set_exact(std::int64_t n, int128 v) {
    require_index(n, max_index_, kind_name(kind_));
    exact_[std::size_t(n - 1)] = v;
    values_[std::size_t(n - 1)] = double(v);
}

void CoefficientTable::set_pair(std::int64_t m, std::int64_t n, double v) {
    require_index(m, max_index_, kind_name(kind_));
    require_index(n, max_index_, kind_name(kind_));
    values_[std::size_t(m - 1) * std::size_t(max_index_) + std::size_t(n - 1)] = v;
}

double CoefficientTable::growth_bound() const {
    double bound = 0.0;
    for (std::int64_t n = 1; n <= max_index_ && !info(kind_).pair_indexed; ++n)
        bound = std::max(bound, std::fabs(values_[std::size_t(n - 1)]) / double(n));
    return bound;
}

// ---- elementary functions ----

std::int64_t divisor_count(std::int64_t n) {
    if (n < 1) throw std::domain_error("divisor_count: n must be >= 1");
    std::int64_t count = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) count += (d * d == n) ? 1 : 2;
    }
    return count;
}

std::int64_t isqrt(std::int64_t n) {
    if (n < 0) throw std::domain_error("isqrt: negative argument");
    auto r = std::int64_t(std::sqrt(double(n)));
    while (r > 0 && r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::int64_t r2(std::int64_t n, R2Method method) {
    if (n < 0) throw std::domain_error("r2: n must be >= 0");
    if (method == R2Method::Lattice) {
        if (n == 0) return 1;  // the origin
        std::int64_t count = 0;
        const std::int64_t xmax = isqrt(n);
        for (std::int64_t x = -xmax; x <= xmax; ++x) {
            const std::int64_t rem = n - x * x;
            const std::int64_t y = isqrt(rem);
            if (y * y == rem) count += (y == 0) ? 1 : 2;
        }
        return count;
    }
    if (n == 0) throw std::domain_error("r2: character method needs n >= 1");
    auto chi4 = [](std::int64_t d) -> std::int64_t {
        const int r = int(d % 4);
        return r == 1 ? 1 : r == 3 ? -1 : 0;
    };
    std::int64_t acc = 0;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        acc += chi4(d);
        if (d != n / d) acc += chi4(n / d);
    }
    return 4 * acc;
}

int mobius(std::int64_t n) {
    if (n < 1) throw std::domain_error("mobius: n must be >= 1");
    int factors = 0;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        n /= p;
        if (n % p == 0) return 0;
        ++factors;
    }
    if (n > 1) ++factors;
    return (factors % 2 == 0) ? 1 : -1;
}

std::int64_t euler_totient(std::int64_t n) {
    if (n < 1) throw std::domain_error("euler_totient: n must be >= 1");
    std::int64_t result = n;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
    if (n < 1) throw std::domain_error("divisors: n must be >= 1");
    std::vector<std::int64_t> small, large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

// ---- table builders ----

CoefficientTable divisor_table(std::int64_t N) {
    CoefficientTable t(TableKind::DivisorD, N);
    std::vector<std::int64_t> cnt(std::size_t(N) + 1, 0);
    for (std::int64_t d = 1; d <= N; ++d)
        for (std::int64_t m = d; m <= N; m += d) ++cnt[std::size_t(m)];
    for (std::int64_t n = 1; n <= N; ++n) t.set_exact(n, cnt[std::size_t(n)]);
    return t;
}

CoefficientTable r2_table(std::int64_t N) {
    // r2(n) = 4 sum_{d | n} chi_4(d), sieved over odd d.
    CoefficientTable t(TableKind::SumsOfSquaresR2, N);
    std::vector<std::int32_t> acc(std::size_t(N) + 1, 0);
    for (std::int64_t d = 1; d <= N; d += 2) {
        const std::int32_t sign = (d % 4 == 1) ? 1 : -1;
        for (std::int64_t m = d; m <= N; m += d) acc[std::size_t(m)] += sign;
    }
    for (std::int64_t n = 1; n <= N; ++n) t.set_exact(n, 4 * int128(acc[std::size_t(n)]));
    return t;
}

namespace {

// Truncated power series with int128 coefficients, index = exponent.
using Series = std::vector<int128>;

Series eta_series(std::int64_t len) {
    // prod (1 - q^m) = sum_k (-1)^k q^{k(3k-1)/2} over generalized pentagonals.
    Series e(std::size_t(len), 0);
    e[0] = 1;
    for (std::int64_t k = 1;; ++k) {
        const std::int64_t g1 = k * (3 * k - 1) / 2;
        const std::int64_t g2 = k * (3 * k + 1) / 2;
        if (g1 >= len && g2 >= len) break;
        const int128 sign = (k % 2 == 0) ? 1 : -1;
        if (g1 < len) e[std::size_t(g1)] += sign;
        if (g2 < len) e[std::size_t(g2)] += sign;
    }
    return e;
}

Series multiply(const Series& a, const Series& b, std::int64_t len) {
    Series out(std::size_t(len), 0);
    for (std::size_t i = 0; i < a.size() && std::int64_t(i) < len; ++i) {
        if (a[i] == 0) continue;
        const int128 ai = a[i];
        const std::size_t jmax = std::min(b.size(), std::size_t(len) - i);
        for (std::size_t j = 0; j < jmax; ++j) {
            if (b[j] == 0) continue;
            out[i + j] = checked_add(out[i + j], checked_mul(ai, b[j]));
        }
    }
    return out;
}

} // namespace

CoefficientTable ramanujan_tau_table(std::int64_t N) {
    if (N < 1) throw std::domain_error("ramanujan_tau_table: N must be >= 1");
    const std::int64_t len = N;  // product part needs exponents 0 .. N-1
    const Series p1 = eta_series(len);
    const Series p2 = multiply(p1, p1, len);
    const Series p4 = multiply(p2, p2, len);
    const Series p8 = multiply(p4, p4, len);
    const Series p16 = multiply(p8, p8, len);
    const Series p24 = multiply(p16, p8, len);
    CoefficientTable t(TableKind::RamanujanTau, N);
    for (std::int64_t n = 1; n <= N; ++n) t.set_exact(n, p24[std::size_t(n - 1)]);
    return t;
}

double gl2_nu(int weight) { return (1.0 - double(weight)) / 2.0; }

CoefficientTable normalized_gl2_coeffs(const CoefficientTable& tau, int weight) {
    if (tau.kind() != TableKind::RamanujanTau)
        throw std::invalid_argument("normalized_gl2_coeffs: expected a tau table");
    if (weight != 12)
        throw std::invalid_argument(
            "normalized_gl2_coeffs: only weight 12 is built in; ingest a "
            "coefficient file for other weights");
    CoefficientTable t(TableKind::NormalizedGL2, tau.max_index());
    const double e = -(double(weight) - 1.0) / 2.0;
    for (std::int64_t n = 1; n <= tau.max_index(); ++n)
        t.set(n, double(tau.exact(n)) * std::pow(double(n), e));
    return t;
}

TauHecke::TauHecke(const CoefficientTable& tau) {
    if (tau.kind() != TableKind::RamanujanTau)
        throw std::invalid_argument("TauHecke: expected a tau table");
    tau_small_.reserve(std::size_t(tau.max_index()));
    for (std::int64_t n = 1; n <= tau.max_index(); ++n)
        tau_small_.push_back(tau.exact(n));
}

int128 TauHecke::tau_prime_power(std::int64_t p, int e) const {
    if (p < 2 || std::int64_t(tau_small_.size()) < p)
        throw std::out_of_range("TauHecke: table too short for prime " +
                                std::to_string(p));
    const int128 tp = tau_small_[std::size_t(p - 1)];
    const int128 p11 = checked_pow(p, 11);
    int128 prev = 1, cur = tp;  // tau(1), tau(p)
    for (int k = 1; k < e; ++k) {
        const int128 next =
            checked_add(checked_mul(tp, cur), -checked_mul(p11, prev));
        prev = cur;
        cur = next;
    }
    return e == 0 ? int128(1) : cur;
}

int128 TauHecke::tau(std::int64_t n) const {
    if (n < 1) throw std::domain_error("TauHecke::tau: n must be >= 1");
    if (n <= std::int64_t(tau_small_.size())) return tau_small_[std::size_t(n - 1)];
    int128 result = 1;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        result = checked_mul(result, tau_prime_power(p, e));
    }
    if (n > 1) result = checked_mul(result, tau_prime_power(n, 1));
    return result;
}

CoefficientTable sym2_A_table(const CoefficientTable& a, std::int64_t N) {
    if (a.kind() != TableKind::NormalizedGL2)
        throw std::invalid_argument("sym2_A_table: expected normalized coefficients");
    if (a.max_index() < N * N)
        throw std::invalid_argument(
            "sym2_A_table: source table too short; need indices up to N^2 = " +
            std::to_string(N * N));
    CoefficientTable t(TableKind::SymSquareA, N);
    for (std::int64_t n = 1; n <= N; ++n) {
        double An = 0.0;
        for (std::int64_t d = 1; d * d <= n; ++d) {
            if (n % (d * d) != 0) continue;
            const std::int64_t q = n / (d * d);
            An += a.value(q * q);
        }
        t.set(n, An);
    }
    return t;
}

CoefficientTable sym2_A_table_hecke(const CoefficientTable& tau, std::int64_t N) {
    if (tau.kind() != TableKind::RamanujanTau)
        throw std::invalid_argument("sym2_A_table_hecke: expected a tau table");
    if (tau.max_index() < N)
        throw std::invalid_argument("sym2_A_table_hecke: tau table shorter than N");
    const TauHecke hecke(tau);
    CoefficientTable t(TableKind::SymSquareA, N);
    for (std::int64_t n = 1; n <= N; ++n) {
        double An = 0.0;
        for (std::int64_t d = 1; d * d <= n; ++d) {
            if (n % (d * d) != 0) continue;
            const std::int64_t q = n / (d * d);
            // a_{q^2} = tau(q^2) q^{-11}
            An += double(hecke.tau(q * q)) * std::pow(double(q), -11.0);
        }
        t.set(n, An);
    }
    return t;
}

double sym2_abelian_coeff(std::int64_t m, std::int64_t n,
                          const CoefficientTable& A, const CoefficientTable& a) {
    (void)a;  // participates through the double-sum cross-check route
    if (m < 1 || n < 1)
        throw std::domain_error("sym2_abelian_coeff: indices must be positive");
    if (A.kind() != TableKind::SymSquareA)
        throw std::invalid_argument("sym2_abelian_coeff: expected an A table");
    double acc = 0.0;
    const std::int64_t g = std::gcd(m, n);
    for (std::int64_t d : divisors(g)) {
        const int mu = mobius(d);
        if (mu == 0) continue;
        acc += double(mu) * A.value(n / d) * A.value(m / d);
    }
    return acc;
}

double sym2_abelian_coeff_double_sum(std::int64_t m, std::int64_t n,
                                     const CoefficientTable& a) {
    if (m < 1 || n < 1)
        throw std::domain_error("sym2_abelian_coeff_double_sum: indices positive");
    if (a.kind() != TableKind::NormalizedGL2)
        throw std::invalid_argument(
            "sym2_abelian_coeff_double_sum: expected normalized coefficients");
    double acc = 0.0;
    for (std::int64_t d : divisors(std::gcd(m, n))) {
        const int mu = mobius(d);
        if (mu == 0) continue;
        double sm = 0.0, sn = 0.0;
        for (std::int64_t k = 1; k * k * d <= m; ++k) {
            if (m % (k * k * d) != 0) continue;
            const std::int64_t r = m / (k * k * d);
            sm += a.value(r * r);
        }
        for (std::int64_t l = 1; l * l * d <= n; ++l) {
            if (n % (l * l * d) != 0) continue;
            const std::int64_t s = n / (l * l * d);
            sn += a.value(s * s);
        }
        acc += double(mu) * sm * sn;
    }
    return acc;
}

CoefficientTable sym2_abelian_table(const CoefficientTable& A,
                                    const CoefficientTable& a, std::int64_t N) {
    CoefficientTable t(TableKind::SymSquareAbelian, N);
    for (std::int64_t m = 1; m <= N; ++m)
        for (std::int64_t n = 1; n <= N; ++n)
            t.set_pair(m, n, sym2_abelian_coeff(m, n, A, a));
    return t;
}

// ---- cache io ----

void CoefficientTable::save(const std::string& path) const {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << "#kind=" << kind_name(kind_) << " N=" << max_index_ << "\n";
    char buf[40];
    if (info(kind_).pair_indexed) {
        for (std::int64_t m = 1; m <= max_index_; ++m)
            for (std::int64_t n = 1; n <= max_index_; ++n) {
                std::snprintf(buf, sizeof buf, "%.17g", value_pair(m, n));
                out << m << '\t' << n << '\t' << buf << "\n";
            }
    } else if (has_exact()) {
        for (std::int64_t n = 1; n <= max_index_; ++n)
            out << n << '\t' << to_string(exact(n)) << "\n";
    } else {
        for (std::int64_t n = 1; n <= max_index_; ++n) {
            std::snprintf(buf, sizeof buf, "%.17g", value(n));
            out << n << '\t' << buf << "\n";
        }
    }
    if (!out) throw std::runtime_error("write failed: " + path);
}

CoefficientTable CoefficientTable::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open: " + path);
    std::string line;
    if (!std::getline(in, line))
        throw std::runtime_error(path + ":1: empty coefficient file");

    TableKind kind;
    std::int64_t N = 0;
    {
        char kindbuf[32];
        long long n = 0;
        if (std::sscanf(line.c_str(), "#kind=%31s N=%lld", kindbuf, &n) != 2)
            throw std::runtime_error(path + ":1: bad header, expected "
                                            "'#kind=<kind> N=<max_index>'");
        // sscanf leaves " N=..." attached if the kind has trailing junk
        std::string kn(kindbuf);
        kind = kind_from_name(kn);
        N = n;
    }
    CoefficientTable t(kind, N);
    const bool pair = info(kind).pair_indexed;
    const bool integer = info(kind).integer_valued;

    std::int64_t lineno = 1;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        auto fail = [&](const char* why) {
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": " + why);
        };
        try {
            if (pair) {
                std::int64_t m, n;
                double v;
                if (!(ls >> m >> n >> v)) fail("expected 'm<TAB>n<TAB>value'");
                t.set_pair(m, n, v);
            } else if (integer) {
                std::int64_t n;
                std::string v;
                if (!(ls >> n >> v)) fail("expected 'index<TAB>integer'");
                t.set_exact(n, parse_int128(v));
            } else {
                std::int64_t n;
                double v;
                if (!(ls >> n >> v)) fail("expected 'index<TAB>value'");
                t.set(n, v);
            }
        } catch (const std::out_of_range&) {
            fail("index outside the header's range");
        } catch (const std::invalid_argument&) {
            fail("unparseable value");
        }
    }
    return t;
}

std::string cache_file_name(TableKind kind, std::int64_t N) {
    return std::string(kind_name(kind)) + "_" + std::to_string(N) + ".tsv";
}

std::optional<std::string> find_cached(const std::string& dir, TableKind kind,
                                       std::int64_t N) {
    namespace fs = std::filesystem;
    if (!fs::is_directory(dir)) return std::nullopt;
    const std::string prefix = std::string(kind_name(kind)) + "_";
    std::optional<std::string> best;
    std::int64_t best_n = -1;
    for (const auto& entry : fs::directory_iterator(dir)) {
        const std::string name = entry.path().filename().string();
        if (name.rfind(prefix, 0) != 0 || entry.path().extension() != ".tsv")
            continue;
        const std::string digits = name.substr(prefix.size(),
                                               name.size() - prefix.size() - 4);
        char* end = nullptr;
        const long long n = std::strtoll(digits.c_str(), &end, 10);
        if (end == nullptr || *end != '\0') continue;
        if (n >= N && (best_n < 0 || n < best_n)) {
            best_n = n;
            best = entry.path().string();
        }
    }
    return best;
}

} // namespace vlab::arith
