#ifndef B2P1_SERIES_HPP_
#define B2P1_SERIES_HPP_

#include <cstdint>
#include <string>
#include <tuple>
#include <vector>

#include "params.hpp"

namespace b2p1::series {

// Exact rational coefficient; the oracle never rounds.
struct Rational {
    long long num = 0, den = 1;

    Rational() = default;
    Rational(long long n) : num(n), den(1) {}
    Rational(long long n, long long d);

    Rational operator+(const Rational& o) const;
    Rational operator-(const Rational& o) const;
    Rational operator*(const Rational& o) const;
    Rational operator-() const { return {-num, den}; }
    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool is_zero() const { return num == 0; }
    double to_double() const { return double(num) / double(den); }
    std::string str() const;
};

enum class Base : std::uint8_t { F, Eta, H };
enum class Var : std::uint8_t { X, Y, T };

// One derivative factor dx^a dy^b dt^c of f, eta or h.
struct Monomial {
    Base base = Base::F;
    int a = 0, b = 0, c = 0;
    auto operator<=>(const Monomial&) const = default;
    std::string str() const;
};

// coeff * alpha^ea beta^eb gamma^ec delta^ed * product(factors).
// eb may be negative: order-one gamma/beta ratios are kept explicit.
struct Term {
    Rational coeff;
    int ea = 0, eb = 0, ec = 0, ed = 0;
    std::vector<Monomial> factors;  // kept sorted

    auto shape() const { return std::tie(ea, eb, ec, ed, factors); }
    bool operator==(const Term& o) const { return coeff == o.coeff && shape() == o.shape(); }
};

class TermSum {
  public:
    TermSum() = default;
    explicit TermSum(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }

    static TermSum constant(Rational c);
    static TermSum monomial(Base base, int a, int b, int c, Rational coeff = 1);
    static TermSum params(int ea, int eb, int ec, int ed);

    const std::vector<Term>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    TermSum operator+(const TermSum& o) const;
    TermSum operator-(const TermSum& o) const;
    TermSum operator*(const TermSum& o) const;
    TermSum scaled(Rational c) const;

    TermSum differentiate(Var v) const;
    // Drop terms whose total grade under the regime's parameter ordering
    // exceeds max_grade.
    TermSum truncated(Regime r, int max_grade) const;

    bool operator==(const TermSum& o) const { return terms_ == o.terms_; }

    std::string str() const;             // human-readable, deterministic
    std::string serialize() const;       // machine format for golden plans
    static TermSum deserialize(const std::string& text);

  private:
    void normalize();
    std::vector<Term> terms_;
};

// Grade of one term under a regime's ordering of small parameters.
int grade(const Term& t, Regime r);

// Truncation order for each regime: first order for case 1, second otherwise.
int regime_order(Regime r);

// The Boussinesq pair for a regime, encoded as (kinematic, dynamic) = 0.
struct BoussinesqPair {
    TermSum kinematic;
    TermSum dynamic;
};
BoussinesqPair boussinesq_pair(Regime r);

// Solve the dynamic equation for eta (Neumann inversion of the 1 + small
// factor multiplying eta), truncated at the regime's order.
TermSum eta_recovery(Regime r);

// Machine-derived single-f equation: substitute the eta recovery into the
// kinematic equation, truncate, and for case 1 apply the zeroth-order
// replacement f_tt -> f_xx + (g/b) f_yy inside first-order terms.
TermSum derive_scalar_equation(Regime r);

// Same, without the case-1 zeroth-order simplification step.
TermSum derive_scalar_equation_raw(Regime r);

// The scalar equations exactly as recorded in the reference transcription,
// suspected typos included.
TermSum printed_scalar_equation(Regime r);

// The pre-simplification case-1 equation as typeset (before the
// zeroth-order replacement).
TermSum printed_case1_before_replacement();

TermSum diff_termsums(const TermSum& a, const TermSum& b);

// Numeric evaluation plan compiled from a TermSum: same terms with the
// rational coefficients collapsed to doubles.
struct EvalTerm {
    double coeff;
    int ea, eb, ec, ed;
    std::vector<Monomial> factors;
};
std::vector<EvalTerm> emit_evaluator(const TermSum& ts);

}  // namespace b2p1::series

#endif  // B2P1_SERIES_HPP_
