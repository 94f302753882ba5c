#include "braidconc/seifert.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace bc {

// ---- OmegaPoint ---------------------------------------------------------------

namespace {

bool is_small_prime(long long q) {
    if (q < 2) return false;
    for (long long d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

constexpr double kPi = 3.14159265358979323846;

}  // namespace

OmegaPoint OmegaPoint::from_prime(int p) {
    if (p < 3 || p % 2 == 0 || !is_small_prime(p))
        throw RangeError("omega point requires an odd prime, got " + std::to_string(p));
    OmegaPoint w;
    w.kind = Kind::Prime;
    w.prime = p;
    return w;
}

OmegaPoint OmegaPoint::from_angle(double theta) {
    if (!(theta > 0.0) || !(theta < 2 * kPi))
        throw RangeError("omega angle must lie strictly between 0 and 2*pi");
    OmegaPoint w;
    w.kind = Kind::Angle;
    w.angle = theta;
    return w;
}

OmegaPoint OmegaPoint::minus_one() { return from_angle(kPi); }

bool OmegaPoint::is_minus_one() const {
    return kind == Kind::Angle && std::abs(angle - kPi) < 1e-12;
}

std::string OmegaPoint::label() const {
    if (kind == Kind::Prime) return "w" + std::to_string(prime);
    if (is_minus_one()) return "w=-1";
    std::ostringstream os;
    os << "theta=" << angle;
    return os.str();
}

bool OmegaPoint::operator<(const OmegaPoint& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (kind == Kind::Prime) return prime < o.prime;
    return angle < o.angle;
}

// ---- Seifert matrix -------------------------------------------------------------

SeifertData seifert_matrix(const BraidWord& a) {
    int n = a.strands();
    // column i = occurrences of sigma_i^{+-1}, in word order
    std::map<int, std::vector<std::pair<int, int>>> cols;  // col -> (position, sign)
    int pos = 0;
    for (int v : a.letters()) {
        cols[std::abs(v)].push_back({pos++, v > 0 ? 1 : -1});
    }

    // One H1 generator per consecutive same-column crossing pair.
    struct Gen {
        int col, p1, e1, p2, e2;
    };
    std::vector<Gen> gens;
    for (const auto& [c, crossings] : cols)
        for (size_t j = 0; j + 1 < crossings.size(); ++j)
            gens.push_back({c, crossings[j].first, crossings[j].second, crossings[j + 1].first,
                            crossings[j + 1].second});

    int g = static_cast<int>(gens.size());
    IntMatrix V(g, std::vector<BigInt>(g));
    for (int u = 0; u < g; ++u) {
        V[u][u] = -(gens[u].e1 + gens[u].e2) / 2;
        for (int v = 0; v < g; ++v) {
            if (v == u) continue;
            const Gen& U = gens[u];
            const Gen& W = gens[v];
            if (W.col == U.col) {
                // v directly after u in the same column: they share crossing p2
                if (W.p1 == U.p2) {
                    int e = U.e2;
                    V[u][v] = (e + 1) / 2;
                    V[v][u] = (e - 1) / 2;
                }
            } else if (W.col == U.col + 1) {
                if (U.p1 < W.p1 && W.p1 < U.p2 && U.p2 < W.p2)
                    V[u][v] += 1;  // interleaved, u first
                else if (W.p1 < U.p1 && U.p1 < W.p2 && W.p2 < U.p2)
                    V[u][v] += -1;  // interleaved, v first
            }
        }
    }

    SeifertData sd;
    sd.matrix = std::move(V);
    sd.strands = n;
    sd.crossings = static_cast<int>(a.letters().size());
    int used = static_cast<int>(cols.size());
    sd.graph_components = n - used;  // used columns form a forest on the strand graph
    int unused = 0;
    for (int i = 1; i <= n - 1; ++i)
        if (!cols.count(i)) ++unused;
    sd.split_unknots = unused;
    sd.closure_components = component_count(a);
    return sd;
}

// ---- exact symmetric signature ----------------------------------------------------
//
// The signature is read off the characteristic polynomial chi(x) = det(xI - M):
// all roots of chi are real, so Descartes' rule of signs counts the positive
// and negative eigenvalues exactly. chi itself is computed exactly by Hessenberg
// reduction modulo a batch of 62-bit primes followed by CRT reconstruction
// against a rigorous Hadamard coefficient bound. Cost is O(n^3) word operations
// per prime, which keeps forms with a few hundred rows interactive; naive
// integer congruence pivoting blows up exponentially on matrices this size.

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mod_mul(u64 a, u64 b, u64 p) { return static_cast<u64>(u128(a) * b % p); }

u64 mod_sub(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 mod_pow(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    while (e) {
        if (e & 1) r = mod_mul(r, a, p);
        a = mod_mul(a, a, p);
        e >>= 1;
    }
    return r;
}

bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (n % q == 0) return n == q;
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // deterministic Miller-Rabin witness set for 64-bit inputs
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = mod_pow(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int r = 1; r < s; ++r) {
            x = mod_mul(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// First `count` primes below 2^62, largest first; cached across calls.
std::vector<u64> charpoly_primes(std::size_t count) {
    static std::mutex mu;
    static std::vector<u64> primes;
    static u64 candidate = (u64(1) << 62) - 1;
    std::lock_guard<std::mutex> lock(mu);
    while (primes.size() < count) {
        while (!is_prime_u64(candidate)) candidate -= 2;
        primes.push_back(candidate);
        candidate -= 2;
    }
    return {primes.begin(), primes.begin() + count};
}

// chi(x) = det(xI - A) mod p, constant term first, monic. Similarity reduction
// to upper Hessenberg form, then the leading-minor recurrence: expanding the
// last column of a Hessenberg determinant gives
//   chi_k = (x - H[k-1][k-1]) chi_{k-1}
//           - sum_{i<k-1} H[i][k-1] * (prod_{j=i+1}^{k-1} H[j][j-1]) * chi_i.
std::vector<u64> charpoly_mod(const IntMatrix& A, u64 p) {
    const int n = static_cast<int>(A.size());
    const BigInt bp = p;
    std::vector<std::vector<u64>> H(n, std::vector<u64>(n));
    for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) {
            BigInt v = A[r][c] % bp;
            if (v < 0) v += bp;
            H[r][c] = v.convert_to<u64>();
        }
    auto add = [p](u64 a, u64 b) { return a + b >= p ? a + b - p : a + b; };
    auto sub = [p](u64 a, u64 b) { return a >= b ? a - b : a + p - b; };

    for (int j = 0; j + 2 < n; ++j) {
        int piv = -1;
        for (int r = j + 1; r < n; ++r)
            if (H[r][j]) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != j + 1) {
            std::swap(H[piv], H[j + 1]);
            for (int r = 0; r < n; ++r) std::swap(H[r][piv], H[r][j + 1]);
        }
        const u64 inv = mod_pow(H[j + 1][j], p - 2, p);
        for (int r = j + 2; r < n; ++r) {
            if (!H[r][j]) continue;
            const u64 f = mod_mul(H[r][j], inv, p);
            for (int c = j; c < n; ++c) H[r][c] = sub(H[r][c], mod_mul(f, H[j + 1][c], p));
            for (int i = 0; i < n; ++i) H[i][j + 1] = add(H[i][j + 1], mod_mul(f, H[i][r], p));
        }
    }

    std::vector<std::vector<u64>> chi(n + 1);
    chi[0] = {1 % p};
    for (int k = 1; k <= n; ++k) {
        std::vector<u64> c(k + 1, 0);
        const u64 d = H[k - 1][k - 1];
        for (int t = 0; t < k; ++t) {
            c[t + 1] = add(c[t + 1], chi[k - 1][t]);
            c[t] = sub(c[t], mod_mul(d, chi[k - 1][t], p));
        }
        u64 path = 1 % p;
        for (int i = k - 2; i >= 0; --i) {
            path = mod_mul(path, H[i + 1][i], p);
            if (!path) break;
            const u64 w = mod_mul(path, H[i][k - 1], p);
            if (!w) continue;
            for (int t = 0; t <= i; ++t) c[t] = sub(c[t], mod_mul(w, chi[i][t], p));
        }
        chi[k] = std::move(c);
    }
    return chi[n];
}

// Sign variations across a coefficient sequence, zeros skipped. For a real
// polynomial whose roots are all real this equals the number of positive
// roots exactly (Descartes' rule is sharp in the all-real case).
int sign_variations(const std::vector<int>& signs) {
    int var = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++var;
        last = s;
    }
    return var;
}

}  // namespace

int symmetric_signature(const IntMatrix& m_in) {
    const int n = static_cast<int>(m_in.size());
    for (int r = 0; r < n; ++r) {
        if (static_cast<int>(m_in[r].size()) != n)
            throw DomainError("symmetric_signature: matrix not square");
        for (int c = 0; c < r; ++c)
            if (m_in[r][c] != m_in[c][r]) throw DomainError("symmetric_signature: matrix not symmetric");
    }
    if (n == 0) return 0;

    // Rigorous coefficient bound: the x^{n-k} coefficient of chi is (up to sign)
    // the sum of the C(n,k) principal k-minors, each at most the product of its
    // rows' Euclidean norms, so |coeff| <= 2^n * prod_i max(1, ||row_i||).
    BigInt bound = BigInt(1) << n;
    for (int r = 0; r < n; ++r) {
        BigInt nsq = 0;
        for (int c = 0; c < n; ++c) nsq += m_in[r][c] * m_in[r][c];
        bound *= boost::multiprecision::sqrt(nsq) + 1;
    }

    std::vector<u64> primes;
    {
        BigInt prod = 1;
        std::size_t count = 0;
        while (prod <= 2 * bound) {
            primes = charpoly_primes(++count);
            prod = 1;
            for (u64 p : primes) prod *= p;
        }
    }

    // CRT-combine chi mod each prime into signed integer coefficients.
    std::vector<BigInt> coeff(n + 1, 0);
    BigInt modulus = 0;
    for (u64 p : primes) {
        const std::vector<u64> cp = charpoly_mod(m_in, p);
        if (modulus == 0) {
            for (int k = 0; k <= n; ++k) coeff[k] = cp[k];
            modulus = p;
        } else {
            const u64 minv = mod_pow((modulus % BigInt(p)).convert_to<u64>(), p - 2, p);
            for (int k = 0; k <= n; ++k) {
                BigInt rem = coeff[k] % BigInt(p);
                u64 delta = mod_sub(cp[k], rem.convert_to<u64>(), p);
                coeff[k] += modulus * BigInt(mod_mul(delta, minv, p));
            }
            modulus *= p;
        }
    }
    for (int k = 0; k <= n; ++k)
        if (2 * coeff[k] > modulus) coeff[k] -= modulus;

    std::vector<int> plus(n + 1), minus(n + 1);
    int nullity = 0;
    while (nullity <= n && coeff[nullity] == 0) ++nullity;
    for (int k = 0; k <= n; ++k) {
        const int s = coeff[k] == 0 ? 0 : (coeff[k] > 0 ? 1 : -1);
        plus[k] = s;
        minus[k] = (k % 2 == 0) ? s : -s;  // coefficients of chi(-x), up to global sign
    }
    const int pos = sign_variations(plus);
    const int neg = sign_variations(minus);
    if (pos + neg + nullity != n)
        throw std::logic_error("symmetric_signature: eigenvalue count mismatch");
    return pos - neg;
}

// ---- integer determinant (Bareiss) -------------------------------------------------

namespace {

BigInt bareiss_det(IntMatrix M) {
    int n = static_cast<int>(M.size());
    if (n == 0) return 1;
    BigInt prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (M[k][k] == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (M[r][k] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return 0;
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (int r = k + 1; r < n; ++r) {
            for (int c = k + 1; c < n; ++c) {
                M[r][c] = (M[r][c] * M[k][k] - M[r][k] * M[k][c]) / prev;
            }
            M[r][k] = 0;
        }
        prev = M[k][k];
    }
    return sign > 0 ? M[n - 1][n - 1] : BigInt(-M[n - 1][n - 1]);
}

}  // namespace

LaurentPoly seifert_det_poly(const SeifertData& sd) {
    int g = sd.b1();
    if (g == 0) return LaurentPoly::one();
    // Interpolate det(V - tV^T), degree <= g, from g+1 integer points.
    std::vector<BigInt> xs, ys;
    for (int k = 0; k <= g; ++k) {
        IntMatrix M(g, std::vector<BigInt>(g));
        for (int r = 0; r < g; ++r)
            for (int c = 0; c < g; ++c) M[r][c] = sd.matrix[r][c] - BigInt(k) * sd.matrix[c][r];
        xs.push_back(k);
        ys.push_back(bareiss_det(std::move(M)));
    }
    // Newton divided differences stay rational; final coefficients are integers.
    int npts = g + 1;
    std::vector<Rational> dd(npts);
    for (int i = 0; i < npts; ++i) dd[i] = Rational(ys[i]);
    for (int level = 1; level < npts; ++level)
        for (int i = npts - 1; i >= level; --i)
            dd[i] = (dd[i] - dd[i - 1]) / Rational(xs[i] - xs[i - level]);
    // expand Newton form
    std::vector<Rational> coeffs(npts, Rational(0));
    std::vector<Rational> basis(npts, Rational(0));  // product (t - x_0)...(t - x_{k-1})
    basis[0] = 1;
    int basis_deg = 0;
    for (int k = 0; k < npts; ++k) {
        for (int d = 0; d <= basis_deg; ++d) coeffs[d] += dd[k] * basis[d];
        if (k + 1 < npts) {
            // basis *= (t - x_k)
            for (int d = basis_deg + 1; d >= 1; --d)
                basis[d] = (d > basis_deg ? Rational(0) : basis[d] * Rational(-xs[k])) +
                           basis[d - 1];
            basis[0] = basis[0] * Rational(-xs[k]);
            ++basis_deg;
        }
    }
    LaurentPoly p;
    for (int d = 0; d < npts; ++d) {
        if (coeffs[d] == 0) continue;
        if (boost::multiprecision::denominator(coeffs[d]) != 1)
            throw DomainError("internal: non-integer Alexander coefficient");
        p = p + LaurentPoly::monomial(boost::multiprecision::numerator(coeffs[d]), d);
    }
    return p;
}

// ---- Alexander polynomial, determinant ----------------------------------------------

LaurentPoly alexander(const SeifertData& sd) {
    if (!sd.is_knot()) throw NotAKnot("alexander polynomial requires a knot closure");
    LaurentPoly d = seifert_det_poly(sd).normalized();
    BigInt at1 = d.evaluate_int(1);
    if (at1 != 1 && at1 != -1)
        throw DomainError("internal: Alexander polynomial fails Delta(1) = +-1");
    return d;
}

BigInt knot_determinant(const SeifertData& sd) {
    if (!sd.is_knot()) throw NotAKnot("knot determinant requires a knot closure");
    int g = sd.b1();
    IntMatrix M(g, std::vector<BigInt>(g));
    for (int r = 0; r < g; ++r)
        for (int c = 0; c < g; ++c) M[r][c] = sd.matrix[r][c] + sd.matrix[c][r];
    BigInt d = bareiss_det(std::move(M));
    return d < 0 ? BigInt(-d) : d;
}

bool is_square(const BigInt& d) {
    if (d < 0) return false;
    BigInt r = boost::multiprecision::sqrt(d);
    return r * r == d;
}

// ---- Levine-Tristram signatures -------------------------------------------------------

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128(a) * b % m); }

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool miller_rabin(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    u64 d = n - 1;
    int s = 0;
    while (d % 2 == 0) d /= 2, ++s;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool comp = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                comp = false;
                break;
            }
        }
        if (comp) return false;
    }
    return true;
}

// det(V - w V^T) over GF(P) with w a primitive q-th root of unity mod P.
// Nonzero result certifies Delta(omega_q) != 0 exactly.
bool det_nonzero_mod(const IntMatrix& V, int q, u64 P) {
    u64 k = (P - 1) / q;
    u64 w = 0;
    for (u64 x = 2; x < P; ++x) {
        u64 c = powmod(x, k, P);
        if (c != 1) {
            w = c;
            break;
        }
    }
    int g = static_cast<int>(V.size());
    std::vector<std::vector<u64>> M(g, std::vector<u64>(g));
    for (int r = 0; r < g; ++r)
        for (int c = 0; c < g; ++c) {
            long long vr = V[r][c].convert_to<long long>();
            long long vc = V[c][r].convert_to<long long>();
            u64 a = static_cast<u64>((vr % static_cast<long long>(P) + static_cast<long long>(P)) % static_cast<long long>(P));
            u64 b = static_cast<u64>((vc % static_cast<long long>(P) + static_cast<long long>(P)) % static_cast<long long>(P));
            M[r][c] = (a + P - mulmod(w, b, P)) % P;
        }
    for (int col = 0; col < g; ++col) {
        int piv = -1;
        for (int r = col; r < g; ++r)
            if (M[r][col]) {
                piv = r;
                break;
            }
        if (piv < 0) return false;  // singular mod P: inconclusive, caller retries
        std::swap(M[col], M[piv]);
        u64 inv = powmod(M[col][col], P - 2, P);
        for (int r = col + 1; r < g; ++r) {
            if (!M[r][col]) continue;
            u64 f = mulmod(M[r][col], inv, P);
            for (int c = col; c < g; ++c) M[r][c] = (M[r][c] + P - mulmod(f, M[col][c], P)) % P;
        }
    }
    return true;
}

u64 next_prime_1mod(u64 start, u64 q) {
    u64 p = start + ((q - start % q + 1) % q);  // p = 1 (mod q)
    while (p % q != 1) ++p;
    while (!miller_rabin(p)) p += q;
    return p;
}

// Exact fallback: is the cyclotomic Phi_q (q prime) a divisor of D?
bool divisible_by_cyclotomic(const LaurentPoly& D, int q) {
    if (D.is_zero()) return true;
    LaurentPoly d = D.normalized();
    // reduce d modulo 1 + t + ... + t^{q-1} using t^{q-1} = -(1 + ... + t^{q-2})
    std::vector<BigInt> c(std::max(d.highest_exponent() + 1, q), BigInt(0));
    for (const auto& [e, co] : d.coefficients()) c[e] = co;
    for (int e = static_cast<int>(c.size()) - 1; e >= q - 1; --e) {
        if (c[e] == 0) continue;
        BigInt v = c[e];
        c[e] = 0;
        for (int k = 1; k <= q - 1; ++k) c[e - k] -= v;
    }
    for (int e = 0; e < q - 1; ++e)
        if (c[e] != 0) return false;
    return true;
}

int certified_signature(const IntMatrix& H_is_hermitian_of,
                        const std::complex<long double>& w, double tol) {
    // Build H = (1-w)V + (1-conj w)V^T and take certified eigenvalue signs.
    using Cld = std::complex<long double>;
    const IntMatrix& V = H_is_hermitian_of;
    int g = static_cast<int>(V.size());
    if (g == 0) return 0;
    Eigen::Matrix<Cld, Eigen::Dynamic, Eigen::Dynamic> H(g, g);
    Cld a = Cld(1, 0) - w;
    Cld b = std::conj(a);
    for (int r = 0; r < g; ++r)
        for (int c = 0; c < g; ++c) {
            long double vr = V[r][c].convert_to<long double>();
            long double vc = V[c][r].convert_to<long double>();
            H(r, c) = a * vr + b * vc;
        }
    long double norm1 = 0;
    for (int c = 0; c < g; ++c) {
        long double s = 0;
        for (int r = 0; r < g; ++r) s += std::abs(H(r, c));
        norm1 = std::max(norm1, s);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Cld, Eigen::Dynamic, Eigen::Dynamic>> es(
        H, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw PrecisionFailure("eigenvalue iteration failed");
    int sig = 0;
    long double guard = static_cast<long double>(tol) * std::max<long double>(norm1, 1);
    for (int i = 0; i < g; ++i) {
        long double ev = es.eigenvalues()(i);
        if (std::abs(ev) <= guard)
            throw PrecisionFailure("eigenvalue too close to zero to certify at tolerance");
        sig += ev > 0 ? 1 : -1;
    }
    return sig;
}

}  // namespace

int lt_signature(const SeifertData& sd, const OmegaPoint& w, double tol) {
    if (sd.b1() == 0) return 0;
    if (!(tol > 0) || tol >= 1) throw RangeError("lt_signature tolerance must be in (0,1)");

    if (w.kind == OmegaPoint::Kind::Prime) {
        int q = w.prime;
        // certify Delta(omega_q) != 0: modular images first, exact cyclotomic
        // divisibility if both are inconclusive
        bool nonzero = false;
        u64 P = next_prime_1mod(1000000007ull, static_cast<u64>(q));
        for (int attempt = 0; attempt < 2 && !nonzero; ++attempt) {
            nonzero = det_nonzero_mod(sd.matrix, q, P);
            P = next_prime_1mod(P + 1, static_cast<u64>(q));
        }
        if (!nonzero) {
            if (divisible_by_cyclotomic(seifert_det_poly(sd), q))
                throw DegenerateOmega("Levine-Tristram form singular at omega_" + std::to_string(q));
        }
        long double ang = kPi * (q - 1) / q;
        return certified_signature(sd.matrix, std::polar<long double>(1.0L, ang), tol);
    }

    if (w.is_minus_one()) {
        int g = sd.b1();
        IntMatrix M(g, std::vector<BigInt>(g));
        for (int r = 0; r < g; ++r)
            for (int c = 0; c < g; ++c) M[r][c] = sd.matrix[r][c] + sd.matrix[c][r];
        // a knot determinant is odd, so the form is automatically nonsingular
        if (!sd.is_knot() && bareiss_det(M) == 0)
            throw DegenerateOmega("form singular at omega = -1");
        return symmetric_signature(M);
    }

    // generic angle: evaluate det(V - tV^T) at omega with a running error bound
    LaurentPoly D = seifert_det_poly(sd);
    if (D.is_zero()) throw DegenerateOmega("det(V - tV^T) vanishes identically");
    std::complex<long double> omega = std::polar<long double>(1.0L, static_cast<long double>(w.angle));
    std::complex<long double> acc(0, 0);
    long double err = 0;
    const long double eps = 1e-18L;  // long double unit roundoff, conservative
    int hi = D.highest_exponent();
    int lo = std::min(0, D.lowest_exponent());
    for (int k = hi; k >= lo; --k) {
        acc = acc * omega + D.coefficient(k).convert_to<long double>();
        err = err + std::abs(D.coefficient(k).convert_to<long double>()) * eps + std::abs(acc) * 3 * eps;
    }
    if (std::abs(acc) <= err * 8 + 1e-30L)
        throw PrecisionFailure("cannot certify Delta(omega) != 0 at this angle");
    return certified_signature(sd.matrix, omega, tol);
}

// ---- closed-form torus references ------------------------------------------------------

TorusReference torus_reference(int n) {
    if (n < 1) throw RangeError("torus_reference requires n >= 1");
    TorusReference t;
    LaurentPoly p;
    for (int i = 0; i <= 2 * n; ++i)
        p = p + LaurentPoly::monomial(BigInt(i % 2 == 0 ? 1 : -1), 2 * n - i);
    t.alexander = p;
    t.det = 2 * n + 1;
    return t;
}

int torus_lt_formula(int n, int p) {
    if (n < 1) throw RangeError("torus_lt_formula requires n >= 1");
    if (p < 3 || !is_small_prime(p) || p % 2 == 0)
        throw RangeError("torus_lt_formula requires an odd prime p");
    return 2 - 2 * ((2 * n + 1) / (2 * p) - (2 * n - 1) / (2 * p));
}

// ---- genus bounds -------------------------------------------------------------------------

Rational genus3_upper(const SeifertData& sd) {
    if (!sd.is_knot()) throw NotAKnot("genus bound requires a knot closure");
    return Rational(sd.b1(), 2);
}

int alexander_genus_lower(const LaurentPoly& delta) { return delta.span() / 2; }

std::string serialize_matrix(const IntMatrix& m) {
    std::ostringstream os;
    for (size_t r = 0; r < m.size(); ++r) {
        if (r) os << ";";
        for (size_t c = 0; c < m[r].size(); ++c) {
            if (c) os << ",";
            os << m[r][c].str();
        }
    }
    return os.str();
}

}  // namespace bc
