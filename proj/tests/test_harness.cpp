#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>
#include <vector>

#include "braidconc/harness.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace bc;
namespace fs = std::filesystem;

namespace {

BraidWord bw(int n, std::vector<int> ls) { return BraidWord(n, std::move(ls)); }

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("braidconc-test-" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

}  // namespace

TEST_CASE("cache round-trips, survives corruption, and is keyed by group element") {
    TempDir tmp;
    CacheConfig cfg{tmp.path.string()};

    std::string key = cache_key(bw(3, {1, -2}), "profile", "tol=1e-9");
    CHECK_FALSE(cache_get(cfg, key).has_value());
    cache_put(cfg, key, "payload line\nsecond line");
    auto hit = cache_get(cfg, key);
    REQUIRE(hit.has_value());
    CHECK(*hit == "payload line\nsecond line");

    // equal group elements share a key; distinct elements do not
    CHECK(cache_key(bw(3, {1, 2, 1}), "x", "") == cache_key(bw(3, {2, 1, 2}), "x", ""));
    CHECK(cache_key(bw(3, {1, 2}), "x", "") != cache_key(bw(3, {2, 1}), "x", ""));
    CHECK(cache_key(bw(3, {1}), "x", "") != cache_key(bw(3, {1}), "y", ""));
    CHECK(cache_key(bw(3, {1}), "x", "tol=1e-9") != cache_key(bw(3, {1}), "x", "tol=1e-6"));

    // corrupt the stored entry: must read as a miss, not garbage
    fs::path entry = tmp.path / key.substr(0, 2) / (key + ".entry");
    REQUIRE(fs::exists(entry));
    {
        std::ofstream f(entry, std::ios::binary | std::ios::trunc);
        f << "vBAD\nnot-a-checksum\njunk";
    }
    CHECK_FALSE(cache_get(cfg, key).has_value());
    {
        std::ofstream f(entry, std::ios::binary | std::ios::trunc);
        f << "v" << kCacheVersion << "\n0000000000000000\npayload line\nsecond line";
    }
    CHECK_FALSE(cache_get(cfg, key).has_value());  // checksum mismatch

    // manifest records publications
    CHECK(fs::exists(tmp.path / "manifest.txt"));

    // empty dir disables the cache entirely
    CacheConfig off{""};
    CHECK_FALSE(cache_get(off, key).has_value());
    CHECK_NOTHROW(cache_put(off, key, "x"));
}

TEST_CASE("cache directory environment override wins") {
    TempDir tmp;
    CacheConfig cfg{"/nonexistent/never-used"};
    ::setenv("BRAIDCONC_CACHE_DIR", tmp.path.c_str(), 1);
    CHECK(cfg.effective_dir() == tmp.path.string());
    std::string key = cache_key(bw(2, {1}), "t", "");
    cache_put(cfg, key, "via-env");
    auto hit = cache_get(cfg, key);
    ::unsetenv("BRAIDCONC_CACHE_DIR");
    REQUIRE(hit.has_value());
    CHECK(*hit == "via-env");
    CHECK(cfg.effective_dir() == "/nonexistent/never-used");
}

TEST_CASE("profile serialization round-trips") {
    InvariantProfile p = invariant_profile(
        psi(bw(4, {1, 1, -3, -3})),
        {OmegaPoint::minus_one(), OmegaPoint::from_prime(3), OmegaPoint::from_prime(5)});
    std::string text = serialize_profile(p);
    InvariantProfile q = parse_profile(text);
    CHECK(q.signature == p.signature);
    CHECK(q.determinant == p.determinant);
    CHECK(q.alexander == p.alexander);
    CHECK(q.g4_lower == p.g4_lower);
    CHECK(q.g4_upper == p.g4_upper);
    CHECK(q.genus3_lower == p.genus3_lower);
    CHECK(q.genus3_upper_bound == p.genus3_upper_bound);
    REQUIRE(q.omega_signatures.size() == p.omega_signatures.size());
    for (size_t i = 0; i < q.omega_signatures.size(); ++i) {
        CHECK(q.omega_signatures[i].first == p.omega_signatures[i].first);
        CHECK(q.omega_signatures[i].second.status == p.omega_signatures[i].second.status);
        CHECK(q.omega_signatures[i].second.value == p.omega_signatures[i].second.value);
    }
    // and the serialized form is bit-stable
    CHECK(serialize_profile(parse_profile(text)) == text);
    CHECK_THROWS_AS(parse_profile("nonsense without equals"), ParseError);
    CHECK_THROWS_AS(parse_profile("mystery_field=1"), ParseError);
}

TEST_CASE("gamma family scan matches its closed-form references") {
    std::vector<ScanRow> rows = family_scan(gamma_family(1, 6));
    REQUIRE(rows.size() == 6);
    for (const ScanRow& row : rows) {
        CAPTURE(row.p);
        CHECK(row.error.empty());
        REQUIRE(row.profile.has_value());
        CHECK(row.pass());
        // determinant follows (2p+1)(2p-1)
        CHECK(row.profile->determinant == BigInt(2 * row.p + 1) * BigInt(2 * row.p - 1));
        // signature is identically -2 in our sign convention
        CHECK(row.signature == -2);
        REQUIRE_FALSE(row.references.empty());
        for (const RefCheck& r : row.references) {
            CAPTURE(r.column);
            CHECK(r.pass);
        }
    }
    // row 1 is the trefoil
    CHECK(rows[0].braid == "B4: 1 1 -3 -3 1 2 3");
}

TEST_CASE("notorious family scan: zero signature away from multiples of 3") {
    std::vector<ScanRow> rows = family_scan(notorious_family(1, 12));
    REQUIRE(rows.size() == 12);
    for (const ScanRow& row : rows) {
        CAPTURE(row.p);
        // Turk's-head knots (p not divisible by 3) have concordance order at
        // most two, hence signature 0; the vanishing claim is attached only
        // there. At multiples of 3 the projected knot picks up the s1 s2
        // splice and the determinant is 3 mod 4, forcing signature 2 mod 4.
        if (row.p % 3 != 0) {
            CHECK(row.signature == 0);
            CHECK_FALSE(row.references.empty());
        } else {
            CHECK(row.signature == -2);
            CHECK(row.references.empty());
        }
        CHECK(row.pass());
    }
}

TEST_CASE("family scans are deterministic and thread-count independent") {
    FamilySpec spec = gamma_family(1, 5);
    ScanOptions serial;
    serial.threads = 1;
    ScanOptions parallel;
    parallel.threads = 4;
    std::string a = scan_csv(spec, family_scan(spec, serial));
    std::string b = scan_csv(spec, family_scan(spec, parallel));
    std::string c = scan_csv(spec, family_scan(spec, parallel));
    CHECK(a == b);
    CHECK(b == c);
}

TEST_CASE("a cached scan replays identically") {
    TempDir tmp;
    FamilySpec spec = gamma_family(1, 4);
    ScanOptions opt;
    opt.cache.dir = tmp.path.string();
    std::string cold = scan_csv(spec, family_scan(spec, opt));
    CHECK(fs::exists(tmp.path / "manifest.txt"));  // entries were published
    std::string warm = scan_csv(spec, family_scan(spec, opt));
    CHECK(cold == warm);
}

TEST_CASE("family scan input validation") {
    CHECK_THROWS_AS(family_scan(gamma_family(5, 4)), RangeError);
    FamilySpec spec = gamma_family(1, 2);
    CHECK(spec.wants("signature"));
    CHECK(spec.wants("omega"));
    spec.invariant_set = {"signature"};
    CHECK(spec.wants("signature"));
    CHECK_FALSE(spec.wants("omega"));
}

TEST_CASE("post maps") {
    FamilySpec spec = gamma_family(1, 2);
    spec.post_map = FamilySpec::PostMap::PsiEven;
    std::vector<ScanRow> rows = family_scan(spec);
    CHECK(rows[0].braid ==
          print_braid(knot_projection(power(bw(4, {1, 1, -3, -3}), 2))));

    FamilySpec raw = notorious_family(3, 3);
    raw.post_map = FamilySpec::PostMap::RawClosure;
    std::vector<ScanRow> raw_rows = family_scan(raw);
    // (sigma_1 sigma_2^-1)^3 closes to a 3-component link: signature only
    CHECK(raw_rows[0].signature.has_value());
    CHECK_FALSE(raw_rows[0].profile.has_value());
}

TEST_CASE("zinfty certificate: prime tower, triangularity, pipeline corners") {
    ZInftyReport rep = zinfty_certificate(3);
    CHECK(rep.primes == std::vector<int>{3, 7, 43});
    CHECK(rep.powers == std::vector<int>{1, 3, 21});
    REQUIRE(rep.matrix.size() == 3);
    CHECK(rep.matrix[0] == std::vector<int>{2, 0, 0});
    CHECK(rep.matrix[1] == std::vector<int>{2, 2, 0});
    CHECK(rep.matrix[2] == std::vector<int>{2, 2, 2});
    CHECK(rep.triangular_ok);
    REQUIRE(rep.cross_checks.size() == 2);
    for (const auto& c : rep.cross_checks) {
        CHECK(c.formula == 2);
        CHECK(c.pipeline == 2);
        CHECK(c.pass);
    }
    CHECK(rep.pass());

    ZInftyReport deep = zinfty_certificate(4);
    CHECK(deep.primes == std::vector<int>{3, 7, 43, 1811});
    CHECK(deep.powers == std::vector<int>{1, 3, 21, 903});
    CHECK(deep.triangular_ok);

    CHECK_THROWS_AS(zinfty_certificate(0), RangeError);
    CHECK_THROWS_AS(zinfty_certificate(5), RangeError);
}

TEST_CASE("gg homogenization rows for the two-strand cable") {
    std::vector<GGRow> rows = gg_homogenization_table(2, 2, 3, 10);
    REQUIRE(rows.size() == 1);
    const GGRow& r = rows[0];
    CHECK(r.i == 2);
    CHECK(r.reference == 2);
    // closure(eta_{2,3}^10) = T(2,20) plus a split unknot: signature -19
    CHECK(r.slope == Rational(-19, 10));
    CHECK(r.band == Rational(2, 5));
    CHECK(r.pass);

    // odd column: reference drops to i-1
    std::vector<GGRow> odd = gg_homogenization_table(3, 3, 3, 8);
    REQUIRE(odd.size() == 1);
    CHECK(odd[0].reference == 2);

    CHECK_THROWS_AS(gg_homogenization_table(1, 2, 3, 10), RangeError);
    CHECK_THROWS_AS(gg_homogenization_table(2, 2, 6, 10), RangeError);
    CHECK_THROWS_AS(gg_homogenization_table(2, 2, 3, 50), RangeError);
}

TEST_CASE("defect sweep within its budget") {
    DefectSweepReport rep = defect_sweep(2, 2);
    CHECK(rep.pairs == 25);  // 5 reduced words of length <= 2 in B_2
    CHECK(rep.bound == 7);
    CHECK(rep.violations == 0);
    CHECK(rep.max_observed <= rep.bound);
    CHECK(rep.pass());
    CHECK_FALSE(rep.worst.empty());
    CHECK_THROWS_AS(defect_sweep(5, 4), RangeError);  // over budget
    CHECK_THROWS_AS(defect_sweep(1, 2), RangeError);
}

TEST_CASE("lipschitz sweep finds no violations") {
    LipschitzReport rep = lipschitz_sweep(3, 80, 6, 12345);
    CHECK(rep.samples == 80);
    CHECK(rep.violations == 0);
    CHECK(rep.pass());
    CHECK(rep.max_g4 <= 3);  // ceil(6/2)
    CHECK_THROWS_AS(lipschitz_sweep(1, 10, 3, 1), RangeError);
}

TEST_CASE("seeded random words are reproducible and well-formed") {
    std::mt19937_64 rng1(42), rng2(42);
    for (int k = 0; k < 50; ++k) {
        BraidWord a = random_word(4, 9, rng1);
        BraidWord b = random_word(4, 9, rng2);
        CHECK(a == b);
        CHECK(a.strands() == 4);
        CHECK(a.length() <= 9);
        const auto& ls = a.letters();
        for (size_t i = 1; i < ls.size(); ++i) CHECK(ls[i] != -ls[i - 1]);
    }
    std::mt19937_64 rng3(7);
    for (int k = 0; k < 50; ++k) {
        BraidWord w = random_commutator_word(3, 6, rng3);
        CHECK(writhe(w) == 0);
        CHECK(w.length() <= 6);
    }
}

TEST_CASE("csv output shape") {
    FamilySpec spec = gamma_family(1, 3);
    std::vector<ScanRow> rows = family_scan(spec);
    std::string csv = scan_csv(spec, rows);
    CHECK(csv.rfind("p,braid,signature,determinant,det_square,alexander,sig_w3,", 0) == 0);
    CHECK(csv.find("ref_determinant_expected") != std::string::npos);
    CHECK(csv.find("ref_signature_pass") != std::string::npos);
    CHECK(csv.find('\r') == std::string::npos);  // LF only
    // one header plus one line per row
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 1 + static_cast<long>(rows.size()));
    // determinant of the first row present verbatim
    CHECK(csv.find(",3,") != std::string::npos);

    FamilySpec noto = notorious_family(1, 2);
    std::string csv2 = scan_csv(noto, family_scan(noto));
    CHECK(csv2.rfind("p,braid,signature,determinant,det_square,g4_lower,error,", 0) == 0);
    CHECK(csv2.find("alexander") == std::string::npos);
}

TEST_CASE("json output carries the schema and passes a parser") {
    FamilySpec spec = gamma_family(1, 3);
    ScanOptions opt;
    std::vector<ScanRow> rows = family_scan(spec, opt);
    nlohmann::json j = nlohmann::json::parse(scan_json(spec, rows, opt));
    CHECK(j["schema"] == kSchemaVersion);
    CHECK(j["kind"] == "family_scan");
    CHECK(j["family"]["name"] == "gamma");
    CHECK(j["family"]["base"] == "B4: 1 1 -3 -3");
    CHECK(j["family"]["post_map"] == "psi");
    CHECK(j["precision"]["tol"] == 1e-9);
    CHECK(j["seed"].is_null());
    REQUIRE(j["rows"].size() == 3);
    CHECK(j["rows"][0]["p"] == 1);
    CHECK(j["rows"][0]["signature"] == -2);
    CHECK(j["rows"][0]["determinant"] == "3");
    CHECK(j["rows"][0]["omega"]["w=-1"] == "-2");
    CHECK(j["rows"][0]["pass"] == true);
    CHECK(j["summary"]["pass"] == true);
    CHECK(j["summary"]["rows"] == 3);
}

TEST_CASE("svg output is decorated but well-formed") {
    FamilySpec spec = gamma_family(1, 4);
    std::string svg = scan_svg(spec, family_scan(spec));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("<polyline") != std::string::npos);
    CHECK(svg.find("</svg>") != std::string::npos);
}
