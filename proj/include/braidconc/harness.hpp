#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "braidconc/concordance.hpp"

namespace bc {

// Bumping either tag invalidates every cache entry / report consumer.
inline constexpr const char* kSchemaVersion = "1";
inline constexpr const char* kCacheVersion = "1";

// One power family: row p studies post_map(base^p).
struct FamilySpec {
    std::string name;  // "gamma" and "notorious" get reference columns
    BraidWord base = BraidWord::identity(2);
    int p_min = 1;
    int p_max = 1;
    enum class PostMap { Psi, PsiEven, RawClosure } post_map = PostMap::Psi;
    // Requested profile pieces; empty = all of them. Recognized names:
    // signature, determinant, alexander, omega.
    std::vector<std::string> invariant_set;
    std::vector<int> omega_primes = {3, 5, 7, 11};

    bool wants(const std::string& inv) const;
};

// A reference comparison column: expected value from a closed formula (never
// from the Seifert pipeline), measured value, verdict.
struct RefCheck {
    std::string column;
    std::string expected;
    std::string measured;
    bool pass = false;
};

struct ScanRow {
    int p = 0;
    std::string braid;  // realized word, text form
    std::optional<int> signature;
    std::optional<InvariantProfile> profile;  // absent for link closures / failed rows
    std::string error;                        // per-row failure, e.g. precision
    std::vector<RefCheck> references;

    bool pass() const;
};

// ---- invariant cache -------------------------------------------------------

// Content-addressed string store, one file per entry, atomic publication via
// write-to-temp + rename. Corrupt or version-mismatched entries read as a
// miss. Empty dir disables the cache. BRAIDCONC_CACHE_DIR overrides dir.
struct CacheConfig {
    std::string dir;

    std::string effective_dir() const;  // after env override
};

// Key = content hash of (group element, invariant name, precision params):
// words that are equal as braids share entries.
std::string cache_key(const BraidWord& braid, const std::string& invariant,
                      const std::string& precision);
std::optional<std::string> cache_get(const CacheConfig& c, const std::string& key);
void cache_put(const CacheConfig& c, const std::string& key, const std::string& value);

std::string serialize_profile(const InvariantProfile& p);
InvariantProfile parse_profile(const std::string& text);

// ---- scans -------------------------------------------------------------------

struct ScanOptions {
    double tol = 1e-9;
    CacheConfig cache;
    int threads = 0;  // 0 = hardware concurrency
};

// Per-p profiles plus reference columns; rows that fail with PrecisionFailure
// carry the error note instead of aborting the scan. Rows are computed in
// parallel and assembled in p order.
std::vector<ScanRow> family_scan(const FamilySpec& spec, const ScanOptions& opt = {});

FamilySpec gamma_family(int p_min, int p_max);      // sigma_1^2 sigma_3^-2 in B_4
FamilySpec notorious_family(int p_min, int p_max);  // sigma_1 sigma_2^-1 in B_3

// ---- linear-independence certificate ----------------------------------------------

// Greedy prime tower p_1 = 3, p_{k+1} = least prime > 2 p_1 ... p_k, column
// exponents N_j = p_1 ... p_{j-1} (so N_1 = 1). The omega-signature matrix
// M[i][j] = sign at omega_{p_i} of the closure for gamma^{N_j} is diagonal
// |2| with zeros strictly above, which forces linear independence. Entries
// come from the closed formula; small corners are cross-checked against the
// Seifert pipeline.
struct ZInftyReport {
    std::vector<int> primes;
    std::vector<int> powers;
    std::vector<std::vector<int>> matrix;  // |values|, formula path
    bool triangular_ok = false;

    struct CrossCheck {
        int i = 0, j = 0;  // 1-based position
        int formula = 0;
        int pipeline = 0;
        bool pass = false;
    };
    std::vector<CrossCheck> cross_checks;

    bool pass() const;
};
ZInftyReport zinfty_certificate(int i_max);

// ---- homogenized signature slopes ---------------------------------------------------

// Measured sign(closure(eta_{i,n}^p))/p at p = p_max against the reference
// value v(i) = i (i even) / i-1 (i odd), within the a-priori drift band
// (n - 1 + length(eta)) / p_max. The comparison is exact rational arithmetic.
struct GGRow {
    int i = 0, n = 0, p_max = 0;
    Rational slope = 0;
    int reference = 0;
    Rational band = 0;
    bool pass = false;
};
std::vector<GGRow> gg_homogenization_table(int i_lo, int i_hi, int n, int p_max);

// ---- property sweeps ---------------------------------------------------------------

// Exhaustive defect scan: all ordered pairs of freely reduced words of
// length <= max_len, g4_lower(defect_element(a,b)) vs 3n+1.
struct DefectSweepReport {
    int n = 0, max_len = 0, bound = 0;
    long long pairs = 0;
    int max_observed = 0;
    int violations = 0;
    std::string worst;  // pair attaining max_observed

    bool pass() const { return violations == 0; }
};
DefectSweepReport defect_sweep(int n, int max_len);

// Randomized Lipschitz scan: g4_lower(psi(a)) <= ceil(len(a)/2) and the
// trivial-witness upper bound dominates the lower bound.
struct LipschitzReport {
    int n = 0, samples = 0, max_len = 0;
    std::uint64_t seed = 0;
    int violations = 0;
    int max_g4 = 0;

    bool pass() const { return violations == 0; }
};
LipschitzReport lipschitz_sweep(int n, int samples, int max_len, std::uint64_t seed);

// Seeded random freely reduced words (uniform length 0..max_len); the
// commutator variant restricts to writhe zero (even length).
BraidWord random_word(int n, int max_len, std::mt19937_64& rng);
BraidWord random_commutator_word(int n, int max_len, std::mt19937_64& rng);

// ---- report emission -------------------------------------------------------------------

// CSV: UTF-8, LF endings, header row; fixed column set per schema version.
std::string scan_csv(const FamilySpec& spec, const std::vector<ScanRow>& rows);
// JSON: versioned schema with the spec echo, seed, precision, rows, summary.
std::string scan_json(const FamilySpec& spec, const std::vector<ScanRow>& rows,
                      const ScanOptions& opt);
// Optional decoration: signature/determinant polylines against p.
std::string scan_svg(const FamilySpec& spec, const std::vector<ScanRow>& rows);

}  // namespace bc
