#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "braidconc/errors.hpp"

namespace bc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// A word in the Artin generators of B_n. Letter v stands for
// sigma_{|v|}^{sign v}, 1 <= |v| <= n-1. Words are stored freely reduced
// (adjacent v, -v cancelled) and are immutable after construction.
class BraidWord {
  public:
    BraidWord(int strands, std::vector<int> letters);
    static BraidWord identity(int strands) { return BraidWord(strands, {}); }

    int strands() const { return strands_; }
    const std::vector<int>& letters() const { return letters_; }
    // Word length after free reduction; an upper bound for the biinvariant
    // word norm of the element.
    int length() const { return static_cast<int>(letters_.size()); }
    bool empty() const { return letters_.empty(); }

    bool operator==(const BraidWord& o) const = default;  // literal words, not group elements

  private:
    int strands_;
    std::vector<int> letters_;
};

struct Permutation {
    int size = 0;
    std::vector<int> images;  // 1-based: images[i-1] = image of i

    static Permutation identity(int n);
    bool is_identity() const;
    bool operator==(const Permutation& o) const = default;
};

struct CycleDecomposition {
    // Each cycle starts at its minimal element; cycles sorted by minimal
    // element; fixed points included as singletons.
    std::vector<std::vector<int>> cycles;
};

// Integral curve coordinates of the braid acting on a punctured disk;
// equal coordinate vectors <=> equal group elements. The identity maps to
// the canonical base vector.
class NormalCoordinates {
  public:
    NormalCoordinates(int strands, std::vector<BigInt> coords)
        : strands_(strands), coords_(std::move(coords)) {}

    int strands() const { return strands_; }
    const std::vector<BigInt>& coordinates() const { return coords_; }
    bool is_base() const;

    bool operator==(const NormalCoordinates& o) const = default;

  private:
    int strands_;
    std::vector<BigInt> coords_;
};

// One term of a product-of-conjugates certificate: conjugator * letter *
// conjugator^{-1}, letter a single signed generator index.
struct WitnessTerm {
    BraidWord conjugator;
    int letter;
};

// Expresses a target braid as the ordered product of its terms; k terms
// certify that the biinvariant word norm of the target is at most k.
struct FactorizationWitness {
    int strands = 1;
    std::vector<WitnessTerm> terms;

    int size() const { return static_cast<int>(terms.size()); }
};

// ---- group operations ------------------------------------------------------

BraidWord compose(const BraidWord& a, const BraidWord& b);
BraidWord invert(const BraidWord& a);
// Negates every letter in place; the closure is the mirror link.
BraidWord mirror(const BraidWord& a);
BraidWord power(const BraidWord& a, int p);
// d * a * d^{-1}
BraidWord conjugate(const BraidWord& a, const BraidWord& d);
// Same letters regarded in B_m, m >= strands.
BraidWord include(const BraidWord& a, int m);
int writhe(const BraidWord& a);

// ---- permutation projection and the closure machinery ----------------------

// Braids act on positions left to right: the first letter acts first.
Permutation permutation_of(const BraidWord& a);
CycleDecomposition cycle_decomposition(const Permutation& p);
// Number of components of the closure = number of cycles.
int component_count(const BraidWord& a);
// sigma_(a) = product of sigma_{c-1} over the starting points c of every
// cycle after the first, cycles ordered lexicographically. Multiplying by it
// closes the braid up into a knot.
BraidWord sigma_of(const BraidWord& a);
// a * sigma_(a); closure is always a knot, and the map is idempotent.
BraidWord knot_projection(const BraidWord& a);

// ---- word problem -----------------------------------------------------------

NormalCoordinates normal_coordinates(const BraidWord& a);
bool is_identity(const BraidWord& a);
bool equals(const BraidWord& a, const BraidWord& b);
// true iff d a d^{-1} = a^{-1}
bool is_inverse_conjugator(const BraidWord& a, const BraidWord& d);

// ---- witnesses --------------------------------------------------------------

// Certified upper bound for the biinvariant word norm of base^power.
// Without d: the letter-by-letter witness, bound = word length. With d an
// inverse conjugator of base: bound <= 2*length(d) + (power mod 2)*length(base),
// via base^{2m} = (base^m d base^{-m}) d^{-1}.
struct NormBound {
    int bound;
    FactorizationWitness witness;
};
NormBound norm_upper_bound(const BraidWord& base, int power,
                           const std::optional<BraidWord>& inverse_conjugator = std::nullopt);

bool verify_factorization(const BraidWord& a, const FactorizationWitness& w);
// true iff a equals the product of commutators [x_i, y_i] over the pairs.
bool verify_commutator_expression(const BraidWord& a,
                                  const std::vector<std::pair<BraidWord, BraidWord>>& pairs);

// ---- named constructors -----------------------------------------------------

// Garside half twist of B_n: (sigma_1 ... sigma_{n-1})(sigma_1 ... sigma_{n-2})...(sigma_1).
BraidWord garside(int n);
// eta(i, n) = sigma_{i-1} ... sigma_2 sigma_1^2 sigma_2 ... sigma_{i-1} in B_n, 2 <= i <= n.
BraidWord eta(int i, int n);
// Block-swap braid on strands (i-1)n+1 .. (i+1)n inside B_{(i+1)n}:
// product over k=1..n, j=1..n of sigma_{i n - k + j}.
BraidWord argyle(int n, int i);
// Alternating-sign variant (writhe 0), n even.
BraidWord argyle_alt(int n, int i);
// argyle_alt(n,1) * ... * argyle_alt(n,m-1) in B_{mn}; rotates the m blocks
// of n strands, displacing the first block through all the others.
BraidWord displacement(int n, int m);

// ---- text form ---------------------------------------------------------------

// Grammar: `Bn: i1 i2 ...` with nonzero integers |i| < n, or symbolic
// letters `s1 s2^-1`. print_braid(parse_braid(s)) is canonical.
BraidWord parse_braid(const std::string& text);
std::string print_braid(const BraidWord& a);

}  // namespace bc
