#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidconc/braid.hpp"
#include "braidconc/seifert.hpp"

namespace bc {

// A knot presented as a braid closure: component_count(braid) == 1.
struct KnotRep {
    BraidWord braid;

    explicit KnotRep(BraidWord b);
    int strands() const { return braid.strands(); }
};

// Formal sum of knot classes: positive multiplicity repeats the knot,
// negative multiplicity uses its inverse class (mirror).
struct ConcordanceExpr {
    std::vector<std::pair<KnotRep, int>> terms;  // multiplicity != 0

    // A single representative whose invariants equal the signed sum
    // (signatures) / product (determinant, Alexander) over the terms.
    KnotRep realize() const;
};

// One omega-signature slot: either a certified integer, or a record of why
// the point was skipped.
struct OmegaSig {
    enum class Status { Ok, Degenerate, Precision } status = Status::Ok;
    int value = 0;

    bool ok() const { return status == Status::Ok; }
    std::string render() const;
};

// The invariant vector attached to one knot. Field order here is the
// serialization order used by the scan outputs.
struct InvariantProfile {
    int signature = 0;           // at omega = -1
    BigInt determinant = 1;      // |Delta(-1)|
    LaurentPoly alexander;       // normalized
    std::vector<std::pair<OmegaPoint, OmegaSig>> omega_signatures;
    int g4_lower = 0;                  // ceil(|signature| / 2)
    std::optional<int> g4_upper;       // present when some witness supplied one
    int genus3_lower = 0;              // half the Alexander span
    Rational genus3_upper_bound = 0;   // b1/2 of the closure surface

    std::vector<std::pair<std::string, std::string>> fields() const;
};

// omega = -1 plus omega_p for the first `odd_primes` odd primes.
std::vector<OmegaPoint> default_omega_points(int odd_primes = 8);

// Psi_n: the knot closure of a * sigma_(a).
KnotRep psi(const BraidWord& a);

// Concordance inverse representative: the mirror braid. (Orientation
// reversal changes no implemented invariant, so it is not tracked.)
KnotRep negate(const KnotRep& k);

// Connected sum realized on n1 + n2 - 1 strands: k2's letters shifted up by
// n1 - 1, sharing one strand. Signatures add; det and Alexander multiply.
KnotRep connected_sum(const KnotRep& k1, const KnotRep& k2);

// Psi(a) # Psi(b) # -Psi(ab): the failure of Psi to be a homomorphism,
// realized as a single knot. Trivial class whenever Psi were additive.
KnotRep defect_element(const BraidWord& a, const BraidWord& b);

InvariantProfile invariant_profile(const KnotRep& k,
                                   const std::vector<OmegaPoint>& omegas = default_omega_points(),
                                   double tol = 1e-9);

// ceil(|signature| / 2) <= g4.
int g4_lower(const InvariantProfile& p);

// Genus of the band surface from a product-of-conjugates certificate for a:
// ceil((k - C + 1) / 2), k = #terms, C = component count of the closure of
// sigma_(a). Certifies g4(psi(a)) <= ceil(k/2).
int g4_upper_from_witness(const BraidWord& a, const FactorizationWitness& w);

// Which implemented invariants obstruct sliceness. An empty list means "no
// obstruction found", never "slice".
struct SliceReport {
    bool det_non_square = false;
    bool signature_nonzero = false;
    bool some_omega_nonzero = false;

    bool obstructed() const { return det_non_square || signature_nonzero || some_omega_nonzero; }
    std::vector<std::string> reasons() const;
};
SliceReport slice_obstructions(const InvariantProfile& p);

// The three quasimorphism estimates, measured through g4_lower:
//   psi(a) # psi(a^-1)            vs  3n+1
//   psi(bab^-1) # -psi(a)         vs  9n+3
//   psi([a,b])                    vs 15n+5
struct InequalityReport {
    struct Row {
        std::string name;
        int measured = 0;
        int bound = 0;
        bool pass() const { return measured <= bound; }
    };
    std::vector<Row> rows;
    bool all_pass() const;
};
InequalityReport inequality_suite(const BraidWord& a, const BraidWord& b);

// iota(a) * sigma_n^{-s} ... sigma_{n+|k|-1}^{-s} in B_{n+|k|}, k = writhe(a),
// s its sign: same closure, writhe zero, hence a commutator-subgroup word.
BraidWord commutator_representative(const BraidWord& a);

// signature(psi(a^p)) for p = 1..p_max, and the endpoint slope.
struct SlopeReport {
    Rational slope = 0;           // signatures.back() / p_max
    std::vector<int> signatures;  // index p-1 holds p
};
SlopeReport stable_signature_slope(const BraidWord& a, int p_max);

// Per-power certificate that the norm of a^p grows linearly: the measured
// g4_lower must sit between the slope estimate minus the defect constant and
// the letter-count Lipschitz ceiling.
struct NormGrowthReport {
    struct Row {
        int p = 0;
        int g4_low = 0;
        int slope_floor = 0;       // ceil(|slope|/2 * p) - (3n+1)
        int lipschitz_ceiling = 0; // ceil(length(a) * p / 2)
        bool pass() const { return g4_low >= slope_floor && g4_low <= lipschitz_ceiling; }
    };
    Rational slope = 0;
    std::vector<Row> rows;
    bool all_pass() const;
};
NormGrowthReport unbounded_norm_certificate(const BraidWord& a, int p_max);

}  // namespace bc
