// Oracle corpus: closed-form values for small torus knots and standard knot
// table entries, frozen independently of the implementation.
#include <vector>

#include "braidconc/braid.hpp"
#include "braidconc/laurent.hpp"
#include "braidconc/seifert.hpp"
#include "doctest.h"

using namespace bc;

namespace {

BraidWord bw(int n, std::vector<int> ls) { return BraidWord(n, std::move(ls)); }

LaurentPoly poly(std::vector<std::pair<int, long long>> terms) {
    LaurentPoly p;
    for (auto [e, c] : terms) p = p + LaurentPoly::monomial(BigInt(c), e);
    return p;
}

IntMatrix mat(std::vector<std::vector<long long>> rows) {
    IntMatrix m;
    for (auto& r : rows) {
        m.emplace_back();
        for (long long v : r) m.back().emplace_back(v);
    }
    return m;
}

}  // namespace

TEST_CASE("surface bookkeeping for small closures") {
    SeifertData un = seifert_matrix(BraidWord::identity(1));
    CHECK(un.b1() == 0);
    CHECK(un.is_knot());
    CHECK(un.closure_components == 1);

    SeifertData s1 = seifert_matrix(bw(2, {1}));  // unknot with one crossing
    CHECK(s1.b1() == 0);
    CHECK(s1.crossings == 1);
    CHECK(s1.is_knot());

    SeifertData tre = seifert_matrix(bw(2, {1, 1, 1}));
    CHECK(tre.b1() == 2);
    CHECK(tre.is_knot());
    CHECK(tre.split_unknots == 0);

    // sigma_1^2 sigma_3^-2 in B_4: column 2 unused, closure has 3 components
    SeifertData g = seifert_matrix(bw(4, {1, 1, -3, -3}));
    CHECK(g.b1() == 2);
    CHECK(g.crossings == 4);
    CHECK(g.split_unknots == 1);
    CHECK(g.closure_components == 4);
    CHECK(g.graph_components == 2);
    CHECK_FALSE(g.is_knot());

    // eta(2,3): Hopf link plus a split unknot
    SeifertData h = seifert_matrix(bw(3, {1, 1}));
    CHECK(h.b1() == 1);
    CHECK(h.split_unknots == 1);
    CHECK(h.matrix == mat({{-1}}));
}

TEST_CASE("the trefoil Seifert matrix is the textbook one") {
    SeifertData sd = seifert_matrix(bw(2, {1, 1, 1}));
    CHECK(sd.matrix == mat({{-1, 1}, {0, -1}}));
    CHECK(serialize_matrix(sd.matrix) == "-1,1;0,-1");
}

TEST_CASE("symmetric signature on explicit matrices") {
    CHECK(symmetric_signature(IntMatrix{}) == 0);
    CHECK(symmetric_signature(mat({{2}})) == 1);
    CHECK(symmetric_signature(mat({{-3}})) == -1);
    CHECK(symmetric_signature(mat({{0}})) == 0);
    CHECK(symmetric_signature(mat({{0, 1}, {1, 0}})) == 0);   // hyperbolic plane
    CHECK(symmetric_signature(mat({{2, 0}, {0, -5}})) == 0);
    CHECK(symmetric_signature(mat({{0, 0}, {0, 0}})) == 0);
    CHECK(symmetric_signature(mat({{1, 0, 0}, {0, 2, 0}, {0, 0, 3}})) == 3);
    CHECK(symmetric_signature(mat({{-2, 1}, {1, -2}})) == -2);
    // zero pivot repaired by a transvection, not a swap
    CHECK(symmetric_signature(mat({{0, 2, 1}, {2, 0, 0}, {1, 0, 3}})) == 1);
    // E8-like positive definite check: identity block stays put
    CHECK(symmetric_signature(mat({{5, 1}, {1, 5}})) == 2);
    CHECK_THROWS_AS(symmetric_signature(mat({{1, 2}})), DomainError);
    CHECK_THROWS_AS(symmetric_signature(mat({{1, 2}, {3, 1}})), DomainError);
}

TEST_CASE("torus knot corpus: signature, determinant, Alexander") {
    struct Row {
        BraidWord braid;
        int signature;
        long long det;
        LaurentPoly delta;
    };
    const std::vector<Row> corpus = {
        // T(2,3), right handed
        {bw(2, {1, 1, 1}), -2, 3, poly({{2, 1}, {1, -1}, {0, 1}})},
        // T(2,3), left handed
        {bw(2, {-1, -1, -1}), 2, 3, poly({{2, 1}, {1, -1}, {0, 1}})},
        // T(2,5)
        {bw(2, {1, 1, 1, 1, 1}), -4, 5, poly({{4, 1}, {3, -1}, {2, 1}, {1, -1}, {0, 1}})},
        // T(2,7)
        {bw(2, std::vector<int>(7, 1)), -6, 7,
         poly({{6, 1}, {5, -1}, {4, 1}, {3, -1}, {2, 1}, {1, -1}, {0, 1}})},
        // figure eight
        {bw(3, {1, -2, 1, -2}), 0, 5, poly({{2, 1}, {1, -3}, {0, 1}})},
        // T(3,4)
        {power(bw(3, {1, 2}), 4), -6, 3, poly({{6, 1}, {5, -1}, {3, 1}, {1, -1}, {0, 1}})},
        // T(3,5)
        {power(bw(3, {1, 2}), 5), -8, 1,
         poly({{8, 1}, {7, -1}, {5, 1}, {4, -1}, {3, 1}, {1, -1}, {0, 1}})},
        // unknot, two presentations
        {BraidWord::identity(1), 0, 1, LaurentPoly::one()},
        {bw(2, {1}), 0, 1, LaurentPoly::one()},
    };
    for (const Row& row : corpus) {
        CAPTURE(print_braid(row.braid));
        SeifertData sd = seifert_matrix(row.braid);
        REQUIRE(sd.is_knot());
        CHECK(symmetric_signature([&] {
                  IntMatrix m = sd.matrix;
                  for (size_t r = 0; r < m.size(); ++r)
                      for (size_t c = 0; c < m.size(); ++c) m[r][c] += sd.matrix[c][r];
                  return m;
              }()) == row.signature);
        CHECK(lt_signature(sd, OmegaPoint::minus_one()) == row.signature);
        CHECK(knot_determinant(sd) == row.det);
        CHECK(alexander(sd) == row.delta.normalized());
    }
}

TEST_CASE("the gamma knot family starts with the trefoil") {
    BraidWord g1 = bw(4, {1, 1, -3, -3, 1, 2, 3});
    SeifertData sd = seifert_matrix(g1);
    REQUIRE(sd.is_knot());
    CHECK(lt_signature(sd, OmegaPoint::minus_one()) == -2);
    CHECK(knot_determinant(sd) == 3);
    CHECK(alexander(sd) == poly({{2, 1}, {1, -1}, {0, 1}}));

    // p = 2: connected-sum pattern T(2,5) # T(2,3)*
    BraidWord g2 = bw(4, {1, 1, 1, 1, -3, -3, -3, -3, 1, 2, 3});
    SeifertData sd2 = seifert_matrix(g2);
    REQUIRE(sd2.is_knot());
    CHECK(lt_signature(sd2, OmegaPoint::minus_one()) == -2);
    CHECK(knot_determinant(sd2) == 15);
    CHECK(alexander(sd2) ==
          poly({{6, 1}, {5, -2}, {4, 3}, {3, -3}, {2, 3}, {1, -2}, {0, 1}}));
}

TEST_CASE("alexander polynomial properties") {
    for (const BraidWord& a : {bw(2, {1, 1, 1}), bw(3, {1, -2, 1, -2}), power(bw(3, {1, 2}), 4),
                               bw(4, {1, 1, -3, -3, 1, 2, 3})}) {
        SeifertData sd = seifert_matrix(a);
        LaurentPoly d = alexander(sd);
        CAPTURE(print_braid(a));
        // Delta(1) = +-1
        BigInt at1 = d.evaluate_int(BigInt(1));
        CHECK((at1 == 1 || at1 == -1));
        // normalized and reciprocal up to the normalization
        CHECK(d.lowest_exponent() == 0);
        CHECK(d == d.reciprocal().normalized());
        // |Delta(-1)| agrees with the determinant and is odd
        BigInt at_m1 = d.evaluate_int(BigInt(-1));
        if (at_m1 < 0) at_m1 = -at_m1;
        CHECK(at_m1 == knot_determinant(sd));
        CHECK(at_m1 % 2 == 1);
    }
}

TEST_CASE("non-knot closures are rejected where a knot is required") {
    SeifertData link = seifert_matrix(bw(3, {1}));  // 2-component closure
    CHECK_FALSE(link.is_knot());
    CHECK_THROWS_AS(alexander(link), NotAKnot);
    CHECK_THROWS_AS(knot_determinant(link), NotAKnot);
    CHECK_THROWS_AS(genus3_upper(link), NotAKnot);
    SeifertData split = seifert_matrix(bw(4, {1, 1, -3, -3}));
    CHECK_THROWS_AS(alexander(split), NotAKnot);
}

TEST_CASE("Markov moves do not change the invariants") {
    BraidWord tre = bw(2, {1, 1, 1});
    std::vector<BraidWord> same = {
        include(tre, 3),                       // needs the stabilizing letter to stay a knot...
        compose(include(tre, 3), bw(3, {2})),  // positive stabilization
        compose(include(tre, 3), bw(3, {-2})), // negative stabilization
        conjugate(tre, bw(2, {1})),            // conjugation
        conjugate(compose(include(tre, 3), bw(3, {2})), bw(3, {2, 1})),
    };
    same.erase(same.begin());  // the bare inclusion is a link, not the knot
    for (const BraidWord& a : same) {
        CAPTURE(print_braid(a));
        SeifertData sd = seifert_matrix(a);
        REQUIRE(sd.is_knot());
        CHECK(lt_signature(sd, OmegaPoint::minus_one()) == -2);
        CHECK(knot_determinant(sd) == 3);
        CHECK(alexander(sd) == poly({{2, 1}, {1, -1}, {0, 1}}));
        CHECK(lt_signature(sd, OmegaPoint::from_prime(3)) == -2);
    }
}

TEST_CASE("mirror image flips every signature") {
    for (const BraidWord& a :
         {bw(2, {1, 1, 1}), power(bw(3, {1, 2}), 4), bw(4, {1, 1, -3, -3, 1, 2, 3})}) {
        SeifertData sd = seifert_matrix(a);
        SeifertData sm = seifert_matrix(mirror(a));
        CAPTURE(print_braid(a));
        CHECK(lt_signature(sm, OmegaPoint::minus_one()) ==
              -lt_signature(sd, OmegaPoint::minus_one()));
        CHECK(lt_signature(sm, OmegaPoint::from_prime(5)) ==
              -lt_signature(sd, OmegaPoint::from_prime(5)));
        CHECK(knot_determinant(sm) == knot_determinant(sd));
        CHECK(alexander(sm) == alexander(sd));
    }
}

TEST_CASE("omega points") {
    OmegaPoint w3 = OmegaPoint::from_prime(3);
    CHECK(w3.label() == "w3");
    CHECK_FALSE(w3.is_minus_one());
    CHECK(OmegaPoint::minus_one().is_minus_one());
    CHECK(OmegaPoint::minus_one().label() == "w=-1");
    CHECK_THROWS_AS(OmegaPoint::from_prime(2), RangeError);
    CHECK_THROWS_AS(OmegaPoint::from_prime(9), RangeError);
    CHECK_THROWS_AS(OmegaPoint::from_prime(-3), RangeError);
    CHECK_THROWS_AS(OmegaPoint::from_angle(0.0), RangeError);
    CHECK_THROWS_AS(OmegaPoint::from_angle(7.0), RangeError);
    CHECK(OmegaPoint::from_angle(3.14159265358979323846).is_minus_one());
}

TEST_CASE("Levine-Tristram signatures at prime points") {
    SeifertData tre = seifert_matrix(bw(2, {1, 1, 1}));
    // the trefoil's signature function is -2 on the whole arc past pi/3
    CHECK(lt_signature(tre, OmegaPoint::from_prime(3)) == -2);
    CHECK(lt_signature(tre, OmegaPoint::from_prime(5)) == -2);
    CHECK(lt_signature(tre, OmegaPoint::from_prime(7)) == -2);
    // T(2,5): jumps at pi/5 and 3pi/5; omega_3 (2pi/3) and omega_5 (4pi/5)
    // both sit past the second jump
    SeifertData t25 = seifert_matrix(bw(2, {1, 1, 1, 1, 1}));
    CHECK(lt_signature(t25, OmegaPoint::from_prime(3)) == -4);
    CHECK(lt_signature(t25, OmegaPoint::from_prime(5)) == -4);
    // ... and the combined-sum formula survives the difference:
    // |lt(T5) - lt(T3)| at omega_5 is |-4 - (-2)| = 2
    CHECK(torus_lt_formula(2, 5) == 2);
    // generic angles bracket the trefoil jump at pi/3
    CHECK(lt_signature(tre, OmegaPoint::from_angle(1.0)) == 0);
    CHECK(lt_signature(tre, OmegaPoint::from_angle(1.2)) == -2);
    // unknot: empty form
    CHECK(lt_signature(seifert_matrix(bw(2, {1})), OmegaPoint::from_prime(3)) == 0);
    CHECK_THROWS_AS(lt_signature(tre, OmegaPoint::from_prime(3), 0.0), RangeError);
    CHECK_THROWS_AS(lt_signature(tre, OmegaPoint::from_prime(3), 1.5), RangeError);
}

TEST_CASE("degenerate omega points are reported, not silently evaluated") {
    // T(2,6) link: det(V - tV^T) = (t-1)(t^2+t+1)(t^2-t+1), so omega_3 is a root
    SeifertData t26 = seifert_matrix(bw(2, {1, 1, 1, 1, 1, 1}));
    CHECK_THROWS_AS(lt_signature(t26, OmegaPoint::from_prime(3)), DegenerateOmega);
    // ... while omega = -1 is fine there
    CHECK(lt_signature(t26, OmegaPoint::minus_one()) == -5);
    // omega_5 at 4pi/5 sits past the pi/3 and 2pi/3 jumps
    CHECK(lt_signature(t26, OmegaPoint::from_prime(5)) == -5);

    // unlink presentation with a hollow generator: the form is identically zero
    SeifertData unlink = seifert_matrix(bw(3, {1, 2, -1}));
    REQUIRE(unlink.b1() == 1);
    CHECK(unlink.matrix == mat({{0}}));
    CHECK_THROWS_AS(lt_signature(unlink, OmegaPoint::from_prime(3)), DegenerateOmega);
    CHECK_THROWS_AS(lt_signature(unlink, OmegaPoint::minus_one()), DegenerateOmega);
}

TEST_CASE("uncertifiable eigenvalues raise PrecisionFailure") {
    SeifertData tre = seifert_matrix(bw(2, {1, 1, 1}));
    // with an absurd tolerance the +-(sqrt 3) eigenvalue pair cannot be
    // separated from zero: refuse rather than guess
    CHECK_THROWS_AS(lt_signature(tre, OmegaPoint::from_prime(3), 0.9), PrecisionFailure);
    // an exact root of Delta at a generic angle cannot be certified nonzero
    CHECK_THROWS_AS(lt_signature(tre, OmegaPoint::from_angle(1.0471975511965977)),
                    PrecisionFailure);
}

TEST_CASE("torus references and the two-bridge signature formula") {
    TorusReference t1 = torus_reference(1);
    CHECK(t1.alexander == poly({{2, 1}, {1, -1}, {0, 1}}));
    CHECK(t1.det == 3);
    TorusReference t2 = torus_reference(2);
    CHECK(t2.alexander == poly({{4, 1}, {3, -1}, {2, 1}, {1, -1}, {0, 1}}));
    CHECK(t2.det == 5);
    CHECK_THROWS_AS(torus_reference(0), RangeError);

    // direct cross-check against the Seifert pipeline
    for (int n = 1; n <= 5; ++n) {
        SeifertData sd = seifert_matrix(bw(2, std::vector<int>(2 * n + 1, 1)));
        CHECK(alexander(sd) == torus_reference(n).alexander.normalized());
        CHECK(knot_determinant(sd) == torus_reference(n).det);
        CHECK(lt_signature(sd, OmegaPoint::minus_one()) == -2 * n);
    }

    CHECK(torus_lt_formula(1, 3) == 2);
    CHECK(torus_lt_formula(2, 3) == 2);
    CHECK(torus_lt_formula(3, 3) == 0);  // 3 divides the column exponent
    CHECK(torus_lt_formula(1, 5) == 2);
    CHECK(torus_lt_formula(21, 43) == 2);
    CHECK(torus_lt_formula(21, 3) == 0);
    CHECK_THROWS_AS(torus_lt_formula(1, 4), RangeError);
    CHECK_THROWS_AS(torus_lt_formula(0, 3), RangeError);
}

TEST_CASE("genus bounds bracket the truth on the corpus") {
    SeifertData tre = seifert_matrix(bw(2, {1, 1, 1}));
    CHECK(genus3_upper(tre) == Rational(1));
    CHECK(alexander_genus_lower(alexander(tre)) == 1);
    SeifertData t34 = seifert_matrix(power(bw(3, {1, 2}), 4));
    CHECK(genus3_upper(t34) == Rational(3));
    CHECK(alexander_genus_lower(alexander(t34)) == 3);
    SeifertData un = seifert_matrix(bw(2, {1}));
    CHECK(genus3_upper(un) == Rational(0));
    CHECK(alexander_genus_lower(alexander(un)) == 0);
    for (const BraidWord& a : {bw(3, {1, -2, 1, -2}), bw(4, {1, 1, -3, -3, 1, 2, 3})}) {
        SeifertData sd = seifert_matrix(a);
        CHECK(Rational(alexander_genus_lower(alexander(sd))) <= genus3_upper(sd));
    }
}

TEST_CASE("is_square") {
    CHECK(is_square(BigInt(0)));
    CHECK(is_square(BigInt(1)));
    CHECK(is_square(BigInt(4)));
    CHECK(is_square(BigInt(9)));
    CHECK(is_square(BigInt(1234567890123456789ll) * 1234567890123456789ll));
    CHECK_FALSE(is_square(BigInt(2)));
    CHECK_FALSE(is_square(BigInt(3)));
    CHECK_FALSE(is_square(BigInt(15)));
    CHECK_FALSE(is_square(BigInt(-4)));
}

TEST_CASE("seifert_det_poly handles links and matches alexander on knots") {
    SeifertData tre = seifert_matrix(bw(2, {1, 1, 1}));
    CHECK(seifert_det_poly(tre).normalized() == alexander(tre));
    SeifertData unlink = seifert_matrix(bw(3, {1, 2, -1}));
    CHECK(seifert_det_poly(unlink).is_zero());
    SeifertData t26 = seifert_matrix(bw(2, {1, 1, 1, 1, 1, 1}));
    // (t-1)(t^4+t^2+1) up to normalization
    LaurentPoly expect =
        (poly({{1, 1}, {0, -1}}) * poly({{4, 1}, {2, 1}, {0, 1}})).normalized();
    CHECK(seifert_det_poly(t26).normalized() == expect);
}
