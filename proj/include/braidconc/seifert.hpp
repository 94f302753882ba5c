#pragma once

#include <vector>

#include "braidconc/braid.hpp"
#include "braidconc/laurent.hpp"

namespace bc {

// Integer matrix with value semantics; row-major.
using IntMatrix = std::vector<std::vector<BigInt>>;

// Seifert matrix of a braid closure plus surface bookkeeping. The surface is
// the standard one from Seifert's algorithm on the closed braid diagram: one
// disk per strand, one twisted band per crossing; first homology has rank
// b1 = crossings - strands + r, with r the number of connected components of
// the graph on strands linked by used generator columns.
struct SeifertData {
    IntMatrix matrix;  // b1 x b1
    int strands = 0;
    int crossings = 0;
    int split_unknots = 0;       // generator indices 1..n-1 never used
    int closure_components = 0;  // cycle count of the braid permutation
    int graph_components = 0;    // r above

    int b1() const { return static_cast<int>(matrix.size()); }
    bool is_knot() const { return split_unknots == 0 && closure_components == 1; }
};

// omega on the unit circle: either the exact primitive root omega_p =
// exp((p-1) pi i / p) for an odd prime p (the only points the independence
// argument needs), or a generic angle theta in (0, 2pi), theta != 0.
// theta == pi is recognized exactly as omega = -1.
struct OmegaPoint {
    enum class Kind { Prime, Angle } kind;
    int prime = 0;       // Kind::Prime
    double angle = 0.0;  // Kind::Angle

    static OmegaPoint from_prime(int p);
    static OmegaPoint from_angle(double theta);
    static OmegaPoint minus_one();
    bool is_minus_one() const;
    std::string label() const;  // "w3", "theta=1.234..."

    bool operator==(const OmegaPoint& o) const = default;
    bool operator<(const OmegaPoint& o) const;  // map key order
};

SeifertData seifert_matrix(const BraidWord& a);

// Exact signature of a symmetric integer matrix via congruence
// diagonalization over the integers (zero pivots handled by swaps and
// transvections); no floating point anywhere.
int symmetric_signature(const IntMatrix& m);

// Signature of (1-w)V + (1-conj w)V^T. Well-definedness (det != 0) is checked
// first: exactly for prime omega (cyclotomic divisibility of det(V - tV^T)),
// numerically with an error bound for generic angles. Eigenvalues are
// certified against tol * ||M||_1; an uncertifiable eigenvalue raises
// PrecisionFailure rather than returning a wrong integer.
int lt_signature(const SeifertData& sd, const OmegaPoint& w, double tol = 1e-9);

// det(V - tV^T), normalized to lowest exponent 0 and positive leading
// coefficient; defined for knot closures only, and Delta(1) = +-1 is enforced.
LaurentPoly alexander(const SeifertData& sd);

// |Delta(-1)| = |det(V + V^T)|.
BigInt knot_determinant(const SeifertData& sd);
bool is_square(const BigInt& d);

// Closed-form references for the (2,2n+1) torus knot: Alexander polynomial
// sum_{i=0..2n} (-1)^i t^{2n-i} and determinant 2n+1. Kept independent of the
// Seifert pipeline so the two can cross-check each other.
struct TorusReference {
    LaurentPoly alexander;
    BigInt det;
};
TorusReference torus_reference(int n);

// Combined omega_p-signature magnitude of T_{2n+1} # T_{2n-1}^* in closed
// form: 2 - 2*(floor((2n+1)/(2p)) - floor((2n-1)/(2p))).
int torus_lt_formula(int n, int p);

// Genus bounds: b1/2 of the braid-closure surface from above, half the
// Alexander span from below.
Rational genus3_upper(const SeifertData& sd);
int alexander_genus_lower(const LaurentPoly& delta);

// Raw det(V - tV^T) with no knot precondition and no normalization (links
// allowed; may be identically zero).
LaurentPoly seifert_det_poly(const SeifertData& sd);

std::string serialize_matrix(const IntMatrix& m);

}  // namespace bc
