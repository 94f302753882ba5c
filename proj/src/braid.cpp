#include "braidconc/braid.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bc {

namespace {

std::vector<int> freely_reduce(const std::vector<int>& letters) {
    std::vector<int> out;
    out.reserve(letters.size());
    for (int v : letters) {
        if (!out.empty() && out.back() == -v)
            out.pop_back();
        else
            out.push_back(v);
    }
    return out;
}

}  // namespace

BraidWord::BraidWord(int strands, std::vector<int> letters) : strands_(strands) {
    if (strands < 1) throw RangeError("strand count must be >= 1, got " + std::to_string(strands));
    for (int v : letters) {
        if (v == 0) throw RangeError("letter 0 is not a generator");
        if (std::abs(v) >= strands)
            throw RangeError("generator index " + std::to_string(std::abs(v)) +
                             " out of range for B" + std::to_string(strands));
    }
    letters_ = freely_reduce(letters);
}

// ---- group operations -------------------------------------------------------

BraidWord compose(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw DomainError("strand-count mismatch: B" + std::to_string(a.strands()) + " vs B" +
                          std::to_string(b.strands()));
    std::vector<int> letters = a.letters();
    letters.insert(letters.end(), b.letters().begin(), b.letters().end());
    return BraidWord(a.strands(), std::move(letters));
}

BraidWord invert(const BraidWord& a) {
    std::vector<int> letters(a.letters().rbegin(), a.letters().rend());
    for (int& v : letters) v = -v;
    return BraidWord(a.strands(), std::move(letters));
}

BraidWord mirror(const BraidWord& a) {
    std::vector<int> letters = a.letters();
    for (int& v : letters) v = -v;
    return BraidWord(a.strands(), std::move(letters));
}

BraidWord power(const BraidWord& a, int p) {
    if (p < 0) return power(invert(a), -p);
    BraidWord acc = BraidWord::identity(a.strands());
    for (int i = 0; i < p; ++i) acc = compose(acc, a);
    return acc;
}

BraidWord conjugate(const BraidWord& a, const BraidWord& d) {
    return compose(compose(d, a), invert(d));
}

BraidWord include(const BraidWord& a, int m) {
    if (m < a.strands())
        throw RangeError("cannot include B" + std::to_string(a.strands()) + " into B" +
                         std::to_string(m));
    return BraidWord(m, a.letters());
}

int writhe(const BraidWord& a) {
    int s = 0;
    for (int v : a.letters()) s += (v > 0) ? 1 : -1;
    return s;
}

// ---- permutation projection -------------------------------------------------

Permutation Permutation::identity(int n) {
    Permutation p;
    p.size = n;
    p.images.resize(n);
    for (int i = 0; i < n; ++i) p.images[i] = i + 1;
    return p;
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size; ++i)
        if (images[i] != i + 1) return false;
    return true;
}

Permutation permutation_of(const BraidWord& a) {
    // q tracks the inverse map; swapping adjacent entries of q per letter is
    // the position action. The exposed map sends the entry position of each
    // strand to its exit position, first letter acting first.
    int n = a.strands();
    std::vector<int> q(n);
    for (int i = 0; i < n; ++i) q[i] = i + 1;
    for (int v : a.letters()) {
        int i = std::abs(v);
        std::swap(q[i - 1], q[i]);
    }
    Permutation p;
    p.size = n;
    p.images.resize(n);
    for (int i = 0; i < n; ++i) p.images[q[i] - 1] = i + 1;
    return p;
}

CycleDecomposition cycle_decomposition(const Permutation& p) {
    CycleDecomposition d;
    std::vector<bool> seen(p.size + 1, false);
    for (int s0 = 1; s0 <= p.size; ++s0) {
        if (seen[s0]) continue;
        std::vector<int> cycle;
        int x = s0;
        while (!seen[x]) {
            seen[x] = true;
            cycle.push_back(x);
            x = p.images[x - 1];
        }
        d.cycles.push_back(std::move(cycle));
    }
    return d;  // scanning from the smallest unseen element sorts cycles by minimum
}

int component_count(const BraidWord& a) {
    return static_cast<int>(cycle_decomposition(permutation_of(a)).cycles.size());
}

BraidWord sigma_of(const BraidWord& a) {
    CycleDecomposition d = cycle_decomposition(permutation_of(a));
    std::vector<int> letters;
    for (size_t j = 1; j < d.cycles.size(); ++j) letters.push_back(d.cycles[j][0] - 1);
    return BraidWord(a.strands(), std::move(letters));
}

BraidWord knot_projection(const BraidWord& a) { return compose(a, sigma_of(a)); }

// ---- word problem: curve-coordinate action -----------------------------------

namespace {

BigInt pos(const BigInt& x) { return x > 0 ? x : BigInt(0); }
BigInt neg(const BigInt& x) { return x < 0 ? x : BigInt(0); }

// Action of sigma_i^{+1} on curve coordinates (a_1..a_{m-2}, b_1..b_{m-2}) of
// an m-punctured disk, 1 <= i <= m-1.
void apply_pos(std::vector<BigInt>& a, std::vector<BigInt>& b, int i, int m) {
    if (m < 3) return;
    if (i == 1) {
        BigInt A = a[0], B = b[0];
        b[0] = A + pos(B);
        a[0] = -B + pos(b[0]);
    } else if (i == m - 1) {
        BigInt A = a[m - 3], B = b[m - 3];
        b[m - 3] = A + neg(B);
        a[m - 3] = -B + neg(b[m - 3]);
    } else {
        int j = i - 2, k = i - 1;
        BigInt A1 = a[j], B1 = b[j], A2 = a[k], B2 = b[k];
        BigInt c = A1 - A2 - pos(B2) + neg(B1);
        a[j] = A1 - pos(B1) - pos(pos(B2) + c);
        b[j] = B2 + neg(c);
        a[k] = A2 - neg(B2) - neg(neg(B1) - c);
        b[k] = B1 - neg(c);
    }
}

void apply_neg(std::vector<BigInt>& a, std::vector<BigInt>& b, int i, int m) {
    if (m < 3) return;
    if (i == 1) {
        BigInt A = a[0], B = b[0];
        b[0] = -A + pos(B);
        a[0] = B - pos(b[0]);
    } else if (i == m - 1) {
        BigInt A = a[m - 3], B = b[m - 3];
        b[m - 3] = -A + neg(B);
        a[m - 3] = B - neg(b[m - 3]);
    } else {
        int j = i - 2, k = i - 1;
        BigInt A1 = a[j], B1 = b[j], A2 = a[k], B2 = b[k];
        BigInt d = A1 - A2 + pos(B2) - neg(B1);
        a[j] = A1 + pos(B1) + pos(pos(B2) - d);
        b[j] = B2 - pos(d);
        a[k] = A2 + neg(B2) + neg(neg(B1) + d);
        b[k] = B1 + pos(d);
    }
}

// B_n acts on the (n+1)-punctured disk: the extra parked puncture makes the
// action faithful (it sees the full twist, which the n-punctured coordinates
// quotient away). Coordinates have 2(n+1)-4 = 2n-2 entries.
std::vector<BigInt> base_coords(int n) {
    int k = n - 1;  // (n+1) - 2 pairs
    std::vector<BigInt> v(2 * k);
    for (int i = 0; i < k; ++i) v[k + i] = -1;
    return v;
}

std::vector<BigInt> coords_of_letters(const std::vector<int>& letters, int n) {
    int m = n + 1;
    int k = m - 2;
    std::vector<BigInt> a(k), b(k, BigInt(-1));
    for (int v : letters) {
        if (v > 0)
            apply_pos(a, b, v, m);
        else
            apply_neg(a, b, -v, m);
    }
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

}  // namespace

bool NormalCoordinates::is_base() const { return coords_ == base_coords(strands_); }

NormalCoordinates normal_coordinates(const BraidWord& a) {
    return NormalCoordinates(a.strands(), coords_of_letters(a.letters(), a.strands()));
}

bool is_identity(const BraidWord& a) {
    if (a.empty()) return true;
    return normal_coordinates(a).is_base();
}

bool equals(const BraidWord& a, const BraidWord& b) {
    if (a.strands() != b.strands())
        throw DomainError("equals: strand-count mismatch");
    if (a.letters() == b.letters()) return true;
    return is_identity(compose(a, invert(b)));
}

bool is_inverse_conjugator(const BraidWord& a, const BraidWord& d) {
    if (writhe(a) != 0) return false;  // conjugation preserves writhe
    return equals(conjugate(a, d), invert(a));
}

// ---- witnesses ----------------------------------------------------------------

namespace {

// Letter-by-letter witness: w1..wk = c_k c_{k-1} ... c_1 with
// c_i = (w1..w_{i-1}) w_i (w1..w_{i-1})^{-1}, emitted in product order.
// An optional outer conjugator g wraps every term, certifying g w g^{-1}.
void append_letter_witness(FactorizationWitness& out, const BraidWord& w, const BraidWord& g) {
    const std::vector<int>& ls = w.letters();
    for (int i = static_cast<int>(ls.size()); i >= 1; --i) {
        std::vector<int> prefix(ls.begin(), ls.begin() + (i - 1));
        out.terms.push_back({compose(g, BraidWord(w.strands(), std::move(prefix))), ls[i - 1]});
    }
}

}  // namespace

NormBound norm_upper_bound(const BraidWord& base, int power_in,
                           const std::optional<BraidWord>& inverse_conjugator) {
    BraidWord b = power_in < 0 ? invert(base) : base;
    int p = power_in < 0 ? -power_in : power_in;
    BraidWord target = power(b, p);

    FactorizationWitness w;
    w.strands = base.strands();
    BraidWord id = BraidWord::identity(base.strands());

    if (!inverse_conjugator) {
        append_letter_witness(w, target, id);
    } else {
        const BraidWord& d = *inverse_conjugator;
        if (!is_inverse_conjugator(b, d))
            throw DomainError("norm_upper_bound: d does not conjugate the base to its inverse");
        int m = p / 2, r = p % 2;
        if (m >= 1) {
            // b^{2m} = (b^m d b^{-m}) d^{-1}
            append_letter_witness(w, d, power(b, m));
            append_letter_witness(w, invert(d), id);
        }
        if (r == 1) append_letter_witness(w, b, id);
    }
    if (!verify_factorization(target, w))
        throw DomainError("norm_upper_bound: internal witness verification failed");
    return NormBound{w.size(), std::move(w)};
}

bool verify_factorization(const BraidWord& a, const FactorizationWitness& w) {
    if (w.strands != a.strands()) return false;
    BraidWord prod = BraidWord::identity(a.strands());
    for (const WitnessTerm& t : w.terms) {
        if (t.conjugator.strands() != a.strands()) return false;
        if (t.letter == 0 || std::abs(t.letter) >= a.strands()) return false;
        BraidWord gen(a.strands(), {t.letter});
        prod = compose(prod, conjugate(gen, t.conjugator));
    }
    return equals(prod, a);
}

bool verify_commutator_expression(const BraidWord& a,
                                  const std::vector<std::pair<BraidWord, BraidWord>>& pairs) {
    BraidWord prod = BraidWord::identity(a.strands());
    for (const auto& [x, y] : pairs) {
        if (x.strands() != a.strands() || y.strands() != a.strands())
            throw DomainError("verify_commutator_expression: strand-count mismatch");
        BraidWord comm = compose(compose(x, y), compose(invert(x), invert(y)));
        prod = compose(prod, comm);
    }
    return equals(prod, a);
}

// ---- named constructors --------------------------------------------------------

BraidWord garside(int n) {
    if (n < 1) throw RangeError("garside: n must be >= 1");
    std::vector<int> letters;
    for (int r = n - 1; r >= 1; --r)
        for (int i = 1; i <= r; ++i) letters.push_back(i);
    return BraidWord(n, std::move(letters));
}

BraidWord eta(int i, int n) {
    if (n < 2 || i < 2 || i > n) throw RangeError("eta: need 2 <= i <= n");
    std::vector<int> letters;
    for (int k = i - 1; k >= 2; --k) letters.push_back(k);
    letters.push_back(1);
    letters.push_back(1);
    for (int k = 2; k <= i - 1; ++k) letters.push_back(k);
    return BraidWord(n, std::move(letters));
}

BraidWord argyle(int n, int i) {
    if (n < 1 || i < 1) throw RangeError("argyle: need n >= 1, i >= 1");
    std::vector<int> letters;
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= n; ++j) letters.push_back(i * n - k + j);
    return BraidWord((i + 1) * n, std::move(letters));
}

BraidWord argyle_alt(int n, int i) {
    if (n < 1 || i < 1) throw RangeError("argyle_alt: need n >= 1, i >= 1");
    if (n % 2 != 0) throw RangeError("argyle_alt: n must be even");
    std::vector<int> letters;
    for (int k = 1; k <= n; ++k)
        for (int j = 1; j <= n; ++j) {
            int idx = i * n - k + j;
            letters.push_back(j % 2 == 0 ? idx : -idx);
        }
    return BraidWord((i + 1) * n, std::move(letters));
}

BraidWord displacement(int n, int m) {
    if (n % 2 != 0 || n < 2) throw RangeError("displacement: n must be even and >= 2");
    if (m < 2) throw RangeError("displacement: m must be >= 2");
    BraidWord w = BraidWord::identity(m * n);
    for (int i = 1; i <= m - 1; ++i) w = compose(w, include(argyle_alt(n, i), m * n));
    return w;
}

// ---- text form -------------------------------------------------------------------

namespace {

struct Cursor {
    const std::string& s;
    size_t pos = 0;
    int line = 1, col = 1;

    bool done() const { return pos >= s.size(); }
    char peek() const { return s[pos]; }
    void advance() {
        if (s[pos] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        ++pos;
    }
    void skip_ws() {
        while (!done() && std::isspace(static_cast<unsigned char>(peek()))) advance();
    }
};

[[noreturn]] void fail(const Cursor& c, const std::string& msg) {
    throw ParseError(msg, c.line, c.col);
}

long parse_int(Cursor& c, const std::string& what) {
    int start_line = c.line, start_col = c.col;
    bool negative = false;
    if (!c.done() && (c.peek() == '-' || c.peek() == '+')) {
        negative = c.peek() == '-';
        c.advance();
    }
    if (c.done() || !std::isdigit(static_cast<unsigned char>(c.peek())))
        throw ParseError("expected " + what, start_line, start_col);
    long v = 0;
    while (!c.done() && std::isdigit(static_cast<unsigned char>(c.peek()))) {
        v = v * 10 + (c.peek() - '0');
        if (v > 1000000) throw ParseError(what + " too large", start_line, start_col);
        c.advance();
    }
    return negative ? -v : v;
}

}  // namespace

BraidWord parse_braid(const std::string& text) {
    Cursor c{text};
    c.skip_ws();
    if (c.done() || (c.peek() != 'B' && c.peek() != 'b')) fail(c, "expected 'B<n>:'");
    c.advance();
    long n = parse_int(c, "strand count");
    // out-of-range values are range errors, matching the constructor
    if (n < 1) throw RangeError("strand count must be >= 1, got " + std::to_string(n));
    c.skip_ws();
    if (c.done() || c.peek() != ':') fail(c, "expected ':' after strand count");
    c.advance();

    std::vector<int> letters;
    for (;;) {
        c.skip_ws();
        if (c.done()) break;
        int tok_line = c.line, tok_col = c.col;
        long idx;
        long exp = 1;
        if (c.peek() == 's' || c.peek() == 'S') {
            c.advance();
            idx = parse_int(c, "generator index");
            if (!c.done() && c.peek() == '^') {
                c.advance();
                exp = parse_int(c, "exponent");
            }
        } else {
            idx = parse_int(c, "letter");
        }
        if (idx == 0) throw ParseError("letter 0 is not a generator", tok_line, tok_col);
        if (std::abs(idx) >= n)
            throw RangeError("generator index " + std::to_string(std::abs(idx)) +
                             " out of range for B" + std::to_string(n) + " (line " +
                             std::to_string(tok_line) + ", column " + std::to_string(tok_col) +
                             ")");
        if (exp == 0 || std::abs(exp) > 10000)
            throw ParseError("unsupported exponent", tok_line, tok_col);
        int letter = static_cast<int>(idx);
        for (long r = 0; r < std::abs(exp); ++r) letters.push_back(exp > 0 ? letter : -letter);
    }
    return BraidWord(static_cast<int>(n), std::move(letters));
}

std::string print_braid(const BraidWord& a) {
    std::ostringstream os;
    os << "B" << a.strands() << ":";
    for (int v : a.letters()) os << " " << v;
    return os.str();
}

}  // namespace bc
