#include "braidconc/concordance.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <mutex>
#include <sstream>
#include <thread>

namespace bc {

KnotRep::KnotRep(BraidWord b) : braid(std::move(b)) {
    if (component_count(braid) != 1)
        throw NotAKnot("closure has " + std::to_string(component_count(braid)) +
                       " components; a knot representative needs exactly one");
}

std::string OmegaSig::render() const {
    switch (status) {
        case Status::Ok: return std::to_string(value);
        case Status::Degenerate: return "degenerate";
        case Status::Precision: return "precision-failure";
    }
    return "?";
}

std::vector<OmegaPoint> default_omega_points(int odd_primes) {
    if (odd_primes < 0) throw RangeError("odd prime count must be nonnegative");
    std::vector<OmegaPoint> pts;
    pts.push_back(OmegaPoint::minus_one());
    int found = 0;
    for (int q = 3; found < odd_primes; q += 2) {
        bool prime = true;
        for (int d = 3; d * d <= q; d += 2)
            if (q % d == 0) {
                prime = false;
                break;
            }
        if (!prime) continue;
        pts.push_back(OmegaPoint::from_prime(q));
        ++found;
    }
    return pts;
}

KnotRep psi(const BraidWord& a) { return KnotRep(knot_projection(a)); }

KnotRep negate(const KnotRep& k) { return KnotRep(mirror(k.braid)); }

KnotRep connected_sum(const KnotRep& k1, const KnotRep& k2) {
    int n1 = k1.strands();
    int n2 = k2.strands();
    std::vector<int> letters = k1.braid.letters();
    for (int v : k2.braid.letters()) letters.push_back(v > 0 ? v + (n1 - 1) : v - (n1 - 1));
    return KnotRep(BraidWord(n1 + n2 - 1, std::move(letters)));
}

KnotRep defect_element(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw DomainError("defect element needs both braids on the same strand count");
    return connected_sum(psi(a), connected_sum(psi(b), negate(psi(compose(a, b)))));
}

KnotRep ConcordanceExpr::realize() const {
    KnotRep acc(BraidWord::identity(1));  // unknot
    for (const auto& [k, mult] : terms) {
        if (mult == 0) throw DomainError("concordance expression multiplicity must be nonzero");
        KnotRep piece = mult > 0 ? k : negate(k);
        for (int i = 0; i < std::abs(mult); ++i) acc = connected_sum(acc, piece);
    }
    return acc;
}

InvariantProfile invariant_profile(const KnotRep& k, const std::vector<OmegaPoint>& omegas,
                                   double tol) {
    SeifertData sd = seifert_matrix(k.braid);
    InvariantProfile p;
    p.determinant = knot_determinant(sd);
    p.alexander = alexander(sd);
    for (const OmegaPoint& w : omegas) {
        OmegaSig s;
        try {
            s.value = lt_signature(sd, w, tol);
        } catch (const DegenerateOmega&) {
            s.status = OmegaSig::Status::Degenerate;
        } catch (const PrecisionFailure&) {
            s.status = OmegaSig::Status::Precision;
        }
        if (w.is_minus_one() && s.ok()) p.signature = s.value;
        p.omega_signatures.push_back({w, s});
    }
    // signature is required even when -1 was not in the requested set
    bool have_minus_one = std::any_of(omegas.begin(), omegas.end(),
                                      [](const OmegaPoint& w) { return w.is_minus_one(); });
    if (!have_minus_one) p.signature = lt_signature(sd, OmegaPoint::minus_one(), tol);
    p.g4_lower = (std::abs(p.signature) + 1) / 2;
    p.genus3_lower = alexander_genus_lower(p.alexander);
    p.genus3_upper_bound = genus3_upper(sd);
    return p;
}

int g4_lower(const InvariantProfile& p) { return (std::abs(p.signature) + 1) / 2; }

int g4_upper_from_witness(const BraidWord& a, const FactorizationWitness& w) {
    if (!verify_factorization(a, w))
        throw DomainError("witness does not factor the braid it claims to");
    int k = w.size();
    int c = component_count(sigma_of(a));  // trivial-link closure component count
    int num = k - c + 1;
    if (num <= 0) return 0;
    return (num + 1) / 2;
}

std::vector<std::string> SliceReport::reasons() const {
    std::vector<std::string> r;
    if (det_non_square) r.push_back("determinant is not a perfect square");
    if (signature_nonzero) r.push_back("signature is nonzero");
    if (some_omega_nonzero) r.push_back("some omega-signature is nonzero");
    return r;
}

SliceReport slice_obstructions(const InvariantProfile& p) {
    SliceReport r;
    r.det_non_square = !is_square(p.determinant);
    r.signature_nonzero = p.signature != 0;
    for (const auto& [w, s] : p.omega_signatures)
        if (s.ok() && s.value != 0 && !w.is_minus_one()) r.some_omega_nonzero = true;
    return r;
}

bool InequalityReport::all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.pass(); });
}

namespace {

int g4_low_of(const KnotRep& k) {
    SeifertData sd = seifert_matrix(k.braid);
    int sig = lt_signature(sd, OmegaPoint::minus_one());
    return (std::abs(sig) + 1) / 2;
}

}  // namespace

InequalityReport inequality_suite(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw DomainError("inequality suite needs both braids on the same strand count");
    int n = a.strands();
    InequalityReport rep;

    KnotRep inv_sum = connected_sum(psi(a), psi(invert(a)));
    rep.rows.push_back({"inverse-sum", g4_low_of(inv_sum), 3 * n + 1});

    KnotRep conj_diff = connected_sum(psi(conjugate(a, b)), negate(psi(a)));
    rep.rows.push_back({"conjugation-difference", g4_low_of(conj_diff), 9 * n + 3});

    BraidWord comm =
        compose(compose(a, b), compose(invert(a), invert(b)));  // [a, b]
    rep.rows.push_back({"commutator", g4_low_of(psi(comm)), 15 * n + 5});
    return rep;
}

BraidWord commutator_representative(const BraidWord& a) {
    if (component_count(a) != 1)
        throw NotAKnot("commutator representative requires a knot closure");
    int n = a.strands();
    int k = writhe(a);
    int m = n + std::abs(k);
    std::vector<int> letters = include(a, m).letters();
    int s = k > 0 ? -1 : 1;  // cancel the writhe
    for (int i = 0; i < std::abs(k); ++i) letters.push_back(s * (n + i));
    return BraidWord(m, std::move(letters));
}

SlopeReport stable_signature_slope(const BraidWord& a, int p_max) {
    if (p_max < 1) throw RangeError("slope needs p_max >= 1");
    SlopeReport rep;
    rep.signatures.assign(p_max, 0);
    // each power is independent; the big ones dominate, so compute them first
    std::vector<std::future<void>> jobs;
    unsigned workers = std::max(1u, std::thread::hardware_concurrency());
    std::atomic<int> next{0};
    std::exception_ptr failure;
    std::mutex failure_mu;
    auto run = [&] {
        for (;;) {
            int i = next.fetch_add(1);
            if (i >= p_max) return;
            int p = p_max - i;
            try {
                SeifertData sd = seifert_matrix(knot_projection(power(a, p)));
                rep.signatures[p - 1] = lt_signature(sd, OmegaPoint::minus_one());
            } catch (...) {
                std::lock_guard<std::mutex> lock(failure_mu);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };
    for (unsigned t = 0; t < std::min<unsigned>(workers, p_max); ++t)
        jobs.push_back(std::async(std::launch::async, run));
    for (auto& j : jobs) j.get();
    if (failure) std::rethrow_exception(failure);
    rep.slope = Rational(rep.signatures.back(), p_max);
    return rep;
}

bool NormGrowthReport::all_pass() const {
    return std::all_of(rows.begin(), rows.end(), [](const Row& r) { return r.pass(); });
}

NormGrowthReport unbounded_norm_certificate(const BraidWord& a, int p_max) {
    SlopeReport sl = stable_signature_slope(a, p_max);
    int n = a.strands();
    Rational half_slope = boost::multiprecision::abs(sl.slope) / 2;
    NormGrowthReport rep;
    rep.slope = sl.slope;
    for (int p = 1; p <= p_max; ++p) {
        NormGrowthReport::Row row;
        row.p = p;
        row.g4_low = (std::abs(sl.signatures[p - 1]) + 1) / 2;
        Rational target = half_slope * p;
        BigInt num = boost::multiprecision::numerator(target);
        BigInt den = boost::multiprecision::denominator(target);
        BigInt ceilv = (num + den - 1) / den;
        row.slope_floor = ceilv.convert_to<int>() - (3 * n + 1);
        row.lipschitz_ceiling = (a.length() * p + 1) / 2;
        rep.rows.push_back(row);
    }
    return rep;
}

std::vector<std::pair<std::string, std::string>> InvariantProfile::fields() const {
    std::vector<std::pair<std::string, std::string>> f;
    f.push_back({"signature", std::to_string(signature)});
    f.push_back({"determinant", determinant.str()});
    f.push_back({"det_square", is_square(determinant) ? "yes" : "no"});
    f.push_back({"alexander", alexander.serialize()});
    for (const auto& [w, s] : omega_signatures)
        if (!w.is_minus_one()) f.push_back({"sig_" + w.label(), s.render()});
    f.push_back({"g4_lower", std::to_string(g4_lower)});
    f.push_back({"g4_upper", g4_upper ? std::to_string(*g4_upper) : ""});
    f.push_back({"genus3_lower", std::to_string(genus3_lower)});
    {
        std::ostringstream os;
        os << genus3_upper_bound;
        f.push_back({"genus3_upper", os.str()});
    }
    return f;
}

}  // namespace bc
