#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "scalar_plans_golden.hpp"
#include "series.hpp"

using namespace b2p1;
using namespace b2p1::series;

TEST_CASE("rational arithmetic reduces and normalizes signs") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(1, -2) == Rational(-1, 2));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) - Rational(1, 2) == Rational(0));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK((-Rational(3, 7)) == Rational(-3, 7));
    CHECK(Rational(5, 10).to_double() == doctest::Approx(0.5));
}

TEST_CASE("differentiation obeys the product rule") {
    TermSum a = TermSum::monomial(Base::F, 1, 0, 0) + TermSum::monomial(Base::Eta, 0, 0, 0, {2, 3});
    TermSum b = TermSum::monomial(Base::F, 0, 1, 1, {-1, 2}) + TermSum::constant({1, 5});
    for (Var v : {Var::X, Var::Y, Var::T}) {
        TermSum lhs = (a * b).differentiate(v);
        TermSum rhs = a.differentiate(v) * b + a * b.differentiate(v);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("truncation is idempotent and monotone") {
    TermSum dyn = boussinesq_pair(Regime::Case2).dynamic;
    for (Regime r : {Regime::Case1, Regime::Case2, Regime::Case4}) {
        const int ord = regime_order(r);
        TermSum t1 = dyn.truncated(r, ord);
        CHECK(t1.truncated(r, ord) == t1);
        CHECK(t1.size() <= dyn.size());
    }
}

TEST_CASE("serialization round-trips the derived equations") {
    for (Regime r : {Regime::Case1, Regime::Case2, Regime::Case3, Regime::Case4}) {
        TermSum t = derive_scalar_equation(r);
        CHECK(TermSum::deserialize(t.serialize()) == t);
    }
}

TEST_CASE("derived single-f equations match the committed plans") {
    CHECK(derive_scalar_equation(Regime::Case1) == TermSum::deserialize(plans::kConsistentCase1));
    CHECK(derive_scalar_equation(Regime::Case2) == TermSum::deserialize(plans::kConsistentCase2));
    CHECK(derive_scalar_equation(Regime::Case3) == TermSum::deserialize(plans::kConsistentCase3));
    CHECK(derive_scalar_equation(Regime::Case4) == TermSum::deserialize(plans::kConsistentCase4));
}

TEST_CASE("verbatim single-f equations match the committed plans") {
    CHECK(printed_scalar_equation(Regime::Case1) == TermSum::deserialize(plans::kPrintedCase1));
    CHECK(printed_scalar_equation(Regime::Case2) == TermSum::deserialize(plans::kPrintedCase2));
    CHECK(printed_scalar_equation(Regime::Case3) == TermSum::deserialize(plans::kPrintedCase3));
    CHECK(printed_scalar_equation(Regime::Case4) == TermSum::deserialize(plans::kPrintedCase4));
}

TEST_CASE("printed-vs-derived discrepancies are exactly the committed ones") {
    auto diff = [](Regime r) {
        return diff_termsums(derive_scalar_equation(r), printed_scalar_equation(r));
    };
    CHECK(diff(Regime::Case1).empty());
    CHECK(diff(Regime::Case3).empty());
    CHECK(diff(Regime::Case2) == TermSum::deserialize(plans::kDiffCase2));
    CHECK(diff(Regime::Case4) == TermSum::deserialize(plans::kDiffCase4));
    CHECK(!diff(Regime::Case2).empty());
    CHECK(diff(Regime::Case4).size() == 6);
}

TEST_CASE("surface tension does not alter the symbolic pair") {
    BoussinesqPair a = boussinesq_pair(Regime::Case3);
    BoussinesqPair b = boussinesq_pair(Regime::Case3ST);
    CHECK(a.kinematic == b.kinematic);
    CHECK(a.dynamic == b.dynamic);
}

TEST_CASE("truncation order per regime") {
    CHECK(regime_order(Regime::Case1) == 1);
    CHECK(regime_order(Regime::Case2) == 2);
    CHECK(regime_order(Regime::Case3) == 2);
    CHECK(regime_order(Regime::Case3ST) == 2);
    CHECK(regime_order(Regime::Case4) == 2);
}

TEST_CASE("evaluator emission collapses rationals to doubles") {
    TermSum t = derive_scalar_equation(Regime::Case1);
    std::vector<EvalTerm> ev = emit_evaluator(t);
    REQUIRE(ev.size() == t.size());
    for (size_t i = 0; i < ev.size(); ++i) {
        CHECK(ev[i].coeff == doctest::Approx(t.terms()[i].coeff.to_double()));
        CHECK(ev[i].factors == t.terms()[i].factors);
    }
}

TEST_CASE("eta recovery starts at minus f_t") {
    for (Regime r : {Regime::Case1, Regime::Case2, Regime::Case3, Regime::Case4}) {
        TermSum rec = eta_recovery(r);
        bool found = false;
        for (const Term& t : rec.terms()) {
            if (t.factors.size() == 1 && t.factors[0] == Monomial{Base::F, 0, 0, 1} &&
                t.ea == 0 && t.eb == 0 && t.ec == 0 && t.ed == 0) {
                CHECK(t.coeff == Rational(-1));
                found = true;
            }
        }
        CHECK(found);
    }
}
