#include "series.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <numeric>
#include <sstream>

#include "errors.hpp"

namespace b2p1::series {

// ---------------------------------------------------------------- rationals

Rational::Rational(long long n, long long d) {
    if (d == 0) throw Error("rational with zero denominator");
    if (d < 0) { n = -n; d = -d; }
    const long long g = std::gcd(n < 0 ? -n : n, d);
    num = g ? n / g : n;
    den = g ? d / g : 1;
    if (num == 0) den = 1;
}

Rational Rational::operator+(const Rational& o) const {
    return Rational(num * o.den + o.num * den, den * o.den);
}
Rational Rational::operator-(const Rational& o) const {
    return Rational(num * o.den - o.num * den, den * o.den);
}
Rational Rational::operator*(const Rational& o) const {
    // cross-reduce before multiplying to keep intermediates small
    const long long g1 = std::gcd(num < 0 ? -num : num, o.den);
    const long long g2 = std::gcd(o.num < 0 ? -o.num : o.num, den);
    return Rational((num / g1) * (o.num / g2), (den / g2) * (o.den / g1));
}

std::string Rational::str() const {
    std::ostringstream os;
    os << num;
    if (den != 1) os << '/' << den;
    return os.str();
}

// ---------------------------------------------------------------- monomials

std::string Monomial::str() const {
    const char* name = base == Base::F ? "f" : base == Base::Eta ? "eta" : "h";
    std::ostringstream os;
    os << name << '(' << a << ',' << b << ',' << c << ')';
    return os.str();
}

namespace {

void check_monomial(const Monomial& m) {
    if (m.a < 0 || m.b < 0 || m.c < 0 || m.a + m.b + m.c > 8)
        throw Error("derivative order overflow: " + m.str());
    if (m.base == Base::H && m.c != 0)
        throw Error("bathymetry carries no time derivatives");
}

}  // namespace

// ----------------------------------------------------------------- termsum

void TermSum::normalize() {
    for (auto& t : terms_) {
        for (const auto& m : t.factors) check_monomial(m);
        std::sort(t.factors.begin(), t.factors.end());
    }
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return a.shape() < b.shape(); });
    std::vector<Term> merged;
    for (auto& t : terms_) {
        if (!merged.empty() && merged.back().shape() == t.shape())
            merged.back().coeff = merged.back().coeff + t.coeff;
        else
            merged.push_back(std::move(t));
    }
    std::erase_if(merged, [](const Term& t) { return t.coeff.is_zero(); });
    terms_ = std::move(merged);
}

TermSum TermSum::constant(Rational c) {
    if (c.is_zero()) return {};
    Term t;
    t.coeff = c;
    return TermSum({t});
}

TermSum TermSum::monomial(Base base, int a, int b, int c, Rational coeff) {
    Term t;
    t.coeff = coeff;
    t.factors.push_back({base, a, b, c});
    return TermSum({t});
}

TermSum TermSum::params(int ea, int eb, int ec, int ed) {
    Term t;
    t.coeff = 1;
    t.ea = ea; t.eb = eb; t.ec = ec; t.ed = ed;
    return TermSum({t});
}

TermSum TermSum::operator+(const TermSum& o) const {
    std::vector<Term> all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    return TermSum(std::move(all));
}

TermSum TermSum::operator-(const TermSum& o) const { return *this + o.scaled(Rational(-1)); }

TermSum TermSum::scaled(Rational c) const {
    std::vector<Term> out = terms_;
    for (auto& t : out) t.coeff = t.coeff * c;
    return TermSum(std::move(out));
}

TermSum TermSum::operator*(const TermSum& o) const {
    std::vector<Term> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_)
        for (const auto& b : o.terms_) {
            Term t;
            t.coeff = a.coeff * b.coeff;
            t.ea = a.ea + b.ea;
            t.eb = a.eb + b.eb;
            t.ec = a.ec + b.ec;
            t.ed = a.ed + b.ed;
            t.factors = a.factors;
            t.factors.insert(t.factors.end(), b.factors.begin(), b.factors.end());
            out.push_back(std::move(t));
        }
    return TermSum(std::move(out));
}

TermSum TermSum::differentiate(Var v) const {
    std::vector<Term> out;
    for (const auto& t : terms_) {
        for (size_t i = 0; i < t.factors.size(); ++i) {
            Term d = t;
            Monomial& m = d.factors[i];
            if (v == Var::X) ++m.a;
            else if (v == Var::Y) ++m.b;
            else {
                if (m.base == Base::H) continue;  // h is time independent
                ++m.c;
            }
            out.push_back(std::move(d));
        }
    }
    return TermSum(std::move(out));
}

int regime_order(Regime r) { return r == Regime::Case1 ? 1 : 2; }

namespace {

std::array<int, 4> grade_orders(Regime r) {
    switch (r) {
        case Regime::Case1: return {1, 1, 1, 1};
        case Regime::Case2: return {1, 1, 1, 2};
        case Regime::Case3:
        case Regime::Case3ST: return {2, 1, 2, 2};
        case Regime::Case4: return {1, 2, 2, 2};
    }
    return {1, 1, 1, 1};
}

}  // namespace

int grade(const Term& t, Regime r) {
    const auto o = grade_orders(r);
    return t.ea * o[0] + t.eb * o[1] + t.ec * o[2] + t.ed * o[3];
}

TermSum TermSum::truncated(Regime r, int max_grade) const {
    std::vector<Term> out;
    for (const auto& t : terms_)
        if (grade(t, r) <= max_grade) out.push_back(t);
    return TermSum(std::move(out));
}

std::string TermSum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms_) {
        if (!first) os << "  +  ";
        first = false;
        os << '(' << t.coeff.str() << ')';
        auto pw = [&](const char* s, int e) { if (e) os << ' ' << s << '^' << e; };
        pw("a", t.ea); pw("b", t.eb); pw("g", t.ec); pw("d", t.ed);
        for (const auto& m : t.factors) os << ' ' << m.str();
    }
    return os.str();
}

std::string TermSum::serialize() const {
    std::ostringstream os;
    for (const auto& t : terms_) {
        os << t.coeff.num << '/' << t.coeff.den << ' ' << t.ea << ' ' << t.eb << ' ' << t.ec
           << ' ' << t.ed << " :";
        for (const auto& m : t.factors) {
            const char bc = m.base == Base::F ? 'f' : m.base == Base::Eta ? 'n' : 'h';
            os << ' ' << bc << '.' << m.a << '.' << m.b << '.' << m.c;
        }
        os << '\n';
    }
    return os.str();
}

TermSum TermSum::deserialize(const std::string& text) {
    std::vector<Term> terms;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        Term t;
        char slash = 0, colon = 0;
        if (!(ls >> t.coeff.num >> slash >> t.coeff.den >> t.ea >> t.eb >> t.ec >> t.ed >>
              colon) ||
            slash != '/' || colon != ':')
            throw Error("malformed term line: " + line);
        std::string tok;
        while (ls >> tok) {
            Monomial m;
            char bc = 0;
            int got = std::sscanf(tok.c_str(), "%c.%d.%d.%d", &bc, &m.a, &m.b, &m.c);
            if (got != 4 || (bc != 'f' && bc != 'n' && bc != 'h'))
                throw Error("malformed monomial token: " + tok);
            m.base = bc == 'f' ? Base::F : bc == 'n' ? Base::Eta : Base::H;
            t.factors.push_back(m);
        }
        terms.push_back(std::move(t));
    }
    return TermSum(std::move(terms));
}

TermSum diff_termsums(const TermSum& a, const TermSum& b) { return a - b; }

std::vector<EvalTerm> emit_evaluator(const TermSum& ts) {
    std::vector<EvalTerm> plan;
    plan.reserve(ts.size());
    for (const auto& t : ts.terms())
        plan.push_back({t.coeff.to_double(), t.ea, t.eb, t.ec, t.ed, t.factors});
    return plan;
}

// ------------------------------------------------- equation encodings

namespace {

TermSum F(int a, int b, int c, Rational co = 1) { return TermSum::monomial(Base::F, a, b, c, co); }
TermSum N(int a, int b, int c, Rational co = 1) { return TermSum::monomial(Base::Eta, a, b, c, co); }
TermSum H(int a, int b, Rational co = 1) { return TermSum::monomial(Base::H, a, b, 0, co); }

const TermSum AL = TermSum::params(1, 0, 0, 0);
const TermSum BE = TermSum::params(0, 1, 0, 0);
const TermSum GA = TermSum::params(0, 0, 1, 0);
const TermSum DE = TermSum::params(0, 0, 0, 1);
// The order-one transverse ratio gamma/beta, kept explicit like the source.
const TermSum R = TermSum::params(0, -1, 1, 0);

TermSum sc(Rational c) { return TermSum::constant(c); }

}  // namespace

BoussinesqPair boussinesq_pair(Regime r) {
    const TermSum R2 = R * R;
    switch (r) {
        case Regime::Case1: {
            TermSum kin = N(0, 0, 1) + F(2, 0, 0) + R * F(0, 2, 0) +
                          AL * (N(1, 0, 0) * F(1, 0, 0) + N(0, 0, 0) * F(2, 0, 0) +
                                R * (N(0, 1, 0) * F(0, 1, 0) + N(0, 0, 0) * F(0, 2, 0))) -
                          BE * sc({1, 6}) *
                              (F(4, 0, 0) + sc(2) * R * F(2, 2, 0) + R2 * F(0, 4, 0)) -
                          DE * (H(1, 0) * F(1, 0, 0) + H(0, 0) * F(2, 0, 0) +
                                R * (H(0, 1) * F(0, 1, 0) + H(0, 0) * F(0, 2, 0)));
            TermSum dyn = N(0, 0, 0) + F(0, 0, 1) +
                          AL * sc({1, 2}) * (F(1, 0, 0) * F(1, 0, 0) + R * F(0, 1, 0) * F(0, 1, 0)) -
                          BE * sc({1, 2}) * (F(2, 0, 1) + R * F(0, 2, 1));
            return {kin, dyn};
        }
        case Regime::Case2: {
            TermSum kin = N(0, 0, 1) + F(2, 0, 0) + R * F(0, 2, 0) +
                          AL * (N(1, 0, 0) * F(1, 0, 0) + N(0, 0, 0) * F(2, 0, 0) +
                                R * (N(0, 1, 0) * F(0, 1, 0) + N(0, 0, 0) * F(0, 2, 0))) -
                          BE * sc({1, 6}) *
                              (F(4, 0, 0) + sc(2) * R * F(2, 2, 0) + R2 * F(0, 4, 0)) -
                          AL * BE * sc({1, 2}) *
                              (N(1, 0, 0) * F(3, 0, 0) + N(0, 0, 0) * F(4, 0, 0)) -
                          AL * GA * sc({1, 2}) *
                              (N(1, 0, 0) * F(1, 2, 0) + sc(2) * N(0, 0, 0) * F(2, 2, 0) +
                               N(0, 1, 0) * F(2, 1, 0)) -
                          BE * BE * sc({1, 120}) * F(6, 0, 0) -
                          BE * GA * sc({1, 40}) *
                              (F(4, 2, 0) + R * F(2, 4, 0) + sc({1, 3}) * R2 * F(0, 6, 0)) -
                          DE * (H(1, 0) * F(1, 0, 0) + H(0, 0) * F(2, 0, 0) +
                                R * (H(0, 1) * F(0, 1, 0) + H(0, 0) * F(0, 2, 0)));
            // The eta f_yyt sign follows the source's own eta-isolation step
            // (both lag terms negative), not the one display with + on it.
            TermSum dyn =
                N(0, 0, 0) + F(0, 0, 1) +
                AL * sc({1, 2}) * (F(1, 0, 0) * F(1, 0, 0) + R * F(0, 1, 0) * F(0, 1, 0)) -
                BE * sc({1, 2}) * (F(2, 0, 1) + R * F(0, 2, 1)) +
                AL * BE *
                    (sc({1, 2}) * (F(2, 0, 0) * F(2, 0, 0) - F(1, 0, 0) * F(3, 0, 0)) -
                     N(0, 0, 0) * F(2, 0, 1)) +
                AL * GA *
                    (sc(-1) * N(0, 0, 0) * F(0, 2, 1) + F(2, 0, 0) * F(0, 2, 0) -
                     sc({1, 2}) * (F(1, 0, 0) * F(1, 2, 0) + F(0, 1, 0) * F(2, 1, 0)) +
                     R * (F(0, 2, 0) * F(0, 2, 0) - F(0, 1, 0) * F(0, 3, 0))) +
                BE * BE * sc({1, 24}) *
                    (F(4, 0, 1) + sc(2) * R * F(2, 2, 1) + R2 * F(0, 4, 1));
            return {kin, dyn};
        }
        case Regime::Case3:
        case Regime::Case3ST: {
            TermSum kin = N(0, 0, 1) + F(2, 0, 0) - BE * sc({1, 6}) * F(4, 0, 0) +
                          R * F(0, 2, 0) +
                          AL * (N(1, 0, 0) * F(1, 0, 0) + N(0, 0, 0) * F(2, 0, 0)) -
                          BE * BE * sc({1, 120}) * F(6, 0, 0) - GA * sc({1, 3}) * F(2, 2, 0) -
                          DE * (H(1, 0) * F(1, 0, 0) + H(0, 0) * F(2, 0, 0));
            TermSum dyn = N(0, 0, 0) + F(0, 0, 1) - BE * sc({1, 2}) * F(2, 0, 1) +
                          AL * sc({1, 2}) * F(1, 0, 0) * F(1, 0, 0) +
                          BE * BE * sc({1, 24}) * F(4, 0, 1) - GA * sc({1, 2}) * F(0, 2, 1);
            return {kin, dyn};
        }
        case Regime::Case4: {
            TermSum kin = N(0, 0, 1) + F(2, 0, 0) + R * F(0, 2, 0) +
                          AL * (N(1, 0, 0) * F(1, 0, 0) + N(0, 0, 0) * F(2, 0, 0) +
                                R * (N(0, 1, 0) * F(0, 1, 0) + N(0, 0, 0) * F(0, 2, 0))) -
                          BE * sc({1, 6}) * (F(4, 0, 0) + R2 * F(0, 4, 0)) -
                          GA * sc({1, 3}) * F(2, 2, 0) -
                          DE * (H(1, 0) * F(1, 0, 0) + H(0, 0) * F(2, 0, 0) +
                                R * (H(0, 1) * F(0, 1, 0) + H(0, 0) * F(0, 2, 0)));
            // tau = 0 form: the elimination is only defined with surface
            // tension dropped.
            TermSum dyn = N(0, 0, 0) + F(0, 0, 1) +
                          AL * sc({1, 2}) * (F(1, 0, 0) * F(1, 0, 0) + R * F(0, 1, 0) * F(0, 1, 0)) -
                          sc({1, 2}) * (BE * F(2, 0, 1) + GA * F(0, 2, 1));
            return {kin, dyn};
        }
    }
    throw Error("unreachable regime");
}

namespace {

// Split the dynamic equation D = eta*(1 + P) + Q; returns (P, Q).
std::pair<TermSum, TermSum> split_eta_coefficient(const TermSum& dyn) {
    std::vector<Term> coef, rest;
    for (const auto& t : dyn.terms()) {
        int n_eta = 0;
        for (const auto& m : t.factors)
            if (m.base == Base::Eta) ++n_eta;
        if (n_eta == 0) {
            rest.push_back(t);
            continue;
        }
        if (n_eta > 1) throw Error("dynamic equation not linear in eta");
        Term s = t;
        auto it = std::find_if(s.factors.begin(), s.factors.end(),
                               [](const Monomial& m) { return m.base == Base::Eta; });
        if (it->a || it->b || it->c)
            throw Error("dynamic equation contains differentiated eta");
        s.factors.erase(it);
        coef.push_back(std::move(s));
    }
    TermSum C{std::move(coef)}, Q{std::move(rest)};
    const TermSum one = sc(1);
    TermSum P = C - one;
    if (!(C - P == one)) throw Error("eta coefficient lacks the unit part");
    return {P, Q};
}

TermSum deriv_abc(const TermSum& e, int a, int b, int c) {
    TermSum out = e;
    for (int i = 0; i < a; ++i) out = out.differentiate(Var::X);
    for (int i = 0; i < b; ++i) out = out.differentiate(Var::Y);
    for (int i = 0; i < c; ++i) out = out.differentiate(Var::T);
    return out;
}

TermSum substitute_eta(const TermSum& expr, const TermSum& eta_expr, Regime r, int ord) {
    std::map<std::array<int, 3>, TermSum> cache;
    auto eta_deriv = [&](int a, int b, int c) -> const TermSum& {
        auto it = cache.find({a, b, c});
        if (it == cache.end())
            it = cache.emplace(std::array<int, 3>{a, b, c}, deriv_abc(eta_expr, a, b, c)).first;
        return it->second;
    };
    TermSum cur = expr;
    for (;;) {
        bool changed = false;
        std::vector<Term> done;
        TermSum pending;
        for (const auto& t : cur.terms()) {
            auto it = std::find_if(t.factors.begin(), t.factors.end(),
                                   [](const Monomial& m) { return m.base == Base::Eta; });
            if (it == t.factors.end()) {
                done.push_back(t);
                continue;
            }
            changed = true;
            Term rest = t;
            rest.factors.erase(rest.factors.begin() + (it - t.factors.begin()));
            pending = pending + TermSum({rest}) * eta_deriv(it->a, it->b, it->c);
        }
        cur = (TermSum(std::move(done)) + pending).truncated(r, ord);
        if (!changed) return cur;
    }
}

}  // namespace

TermSum eta_recovery(Regime r) {
    const int ord = regime_order(r);
    const auto pair = boussinesq_pair(r);
    auto [P, Q] = split_eta_coefficient(pair.dynamic);
    // eta = -Q * (1 + P)^-1, Neumann series truncated at the regime order.
    TermSum inv = sc(1);
    TermSum pk = sc(1);
    for (int k = 1; k <= ord; ++k) {
        pk = (pk * P.scaled(-1)).truncated(r, ord);
        if (pk.empty()) break;
        inv = inv + pk;
    }
    return (Q.scaled(-1) * inv).truncated(r, ord);
}

TermSum derive_scalar_equation_raw(Regime r) {
    if (r == Regime::Case3ST)
        throw UnsupportedRegime("surface tension obstructs the single-f elimination");
    const int ord = regime_order(r);
    const auto pair = boussinesq_pair(r);
    return substitute_eta(pair.kinematic, eta_recovery(r), r, ord);
}

namespace {

// Case 1 only: inside first-order terms, repeatedly rewrite the linear
// f time derivatives via the zeroth-order wave equation,
// f_{a,b,c} -> f_{a+2,b,c-2} + (gamma/beta) f_{a,b+2,c-2}.
TermSum apply_zeroth_order_replacement(TermSum ts, Regime r) {
    for (;;) {
        bool changed = false;
        std::vector<Term> out;
        for (const auto& t : ts.terms()) {
            const bool linear_f = t.factors.size() == 1 && t.factors[0].base == Base::F;
            if (grade(t, r) >= 1 && linear_f && t.factors[0].c >= 2) {
                changed = true;
                Term u = t, v = t;
                u.factors[0].a += 2;
                u.factors[0].c -= 2;
                v.factors[0].b += 2;
                v.factors[0].c -= 2;
                v.ec += 1;
                v.eb -= 1;
                out.push_back(u);
                out.push_back(v);
            } else {
                out.push_back(t);
            }
        }
        ts = TermSum(std::move(out));
        if (!changed) return ts;
    }
}

}  // namespace

TermSum derive_scalar_equation(Regime r) {
    TermSum raw = derive_scalar_equation_raw(r);
    if (r == Regime::Case1) raw = apply_zeroth_order_replacement(std::move(raw), r);
    return raw.truncated(r, regime_order(r));
}

TermSum printed_case1_before_replacement() {
    const TermSum R2 = R * R;
    return F(2, 0, 0) + R * F(0, 2, 0) - F(0, 0, 2) -
           AL * (F(0, 0, 1) * F(2, 0, 0) + R * F(0, 0, 1) * F(0, 2, 0) +
                 sc(2) * F(1, 0, 0) * F(1, 0, 1) + sc(2) * R * F(0, 1, 0) * F(0, 1, 1)) -
           BE * (sc({1, 6}) * (F(4, 0, 0) + sc(2) * R * F(2, 2, 0) + R2 * F(0, 4, 0)) -
                 sc({1, 2}) * (F(2, 0, 2) + R * F(0, 2, 2))) -
           DE * (H(1, 0) * F(1, 0, 0) + H(0, 0) * F(2, 0, 0) +
                 R * (H(0, 1) * F(0, 1, 0) + H(0, 0) * F(0, 2, 0)));
}

namespace {

TermSum printed_case1() {
    const TermSum R2 = R * R;
    return F(2, 0, 0) + R * F(0, 2, 0) - F(0, 0, 2) -
           AL * (F(0, 0, 1) * F(2, 0, 0) + R * F(0, 0, 1) * F(0, 2, 0) +
                 sc(2) * F(1, 0, 0) * F(1, 0, 1) + sc(2) * R * F(0, 1, 0) * F(0, 1, 1)) +
           BE * sc({1, 3}) * (F(4, 0, 0) + sc(2) * R * F(2, 2, 0) + R2 * F(0, 4, 0)) -
           DE * (H(1, 0) * F(1, 0, 0) + H(0, 0) * F(2, 0, 0) +
                 R * (H(0, 1) * F(0, 1, 0) + H(0, 0) * F(0, 2, 0)));
}

TermSum printed_case3() {
    return F(2, 0, 0) - F(0, 0, 2) + R * F(0, 2, 0) +
           BE * (sc({1, 2}) * F(2, 0, 2) - sc({1, 6}) * F(4, 0, 0)) -
           BE * BE * (sc({1, 24}) * F(4, 0, 2) + sc({1, 120}) * F(6, 0, 0)) +
           GA * (sc({-1, 3}) * F(2, 2, 0) + sc({1, 2}) * F(0, 2, 2)) -
           AL * (sc(2) * F(1, 0, 0) * F(1, 0, 1) + F(0, 0, 1) * F(2, 0, 0)) -
           DE * (H(1, 0) * F(1, 0, 0) + H(0, 0) * F(2, 0, 0));
}

TermSum printed_case4() {
    const TermSum R2 = R * R;
    return F(2, 0, 0) + R * F(0, 2, 0) - F(0, 0, 2) -
           AL * (sc(2) * F(1, 0, 0) * F(1, 0, 1) + F(0, 0, 1) * F(2, 0, 0) +
                 R * (sc(2) * F(0, 1, 0) * F(0, 1, 1) + F(0, 0, 1) * F(0, 2, 0))) -
           DE * (H(1, 0) * F(1, 0, 0) + H(0, 0) * F(2, 0, 0) + H(0, 1) * F(0, 1, 0) +
                 H(0, 0) * F(0, 2, 0)) -
           BE * sc({1, 6}) * (F(4, 0, 0) + R2 * F(0, 4, 0)) + BE * sc({1, 2}) * F(2, 0, 2) +
           GA * sc({1, 2}) * F(0, 2, 2) - GA * sc({1, 3}) * F(2, 2, 0) -
           AL * AL *
               (sc({3, 2}) * (F(1, 0, 0) * F(1, 0, 0) * F(2, 0, 0) +
                              R2 * F(0, 1, 0) * F(0, 1, 0) * F(0, 2, 0)) +
                sc({1, 2}) * R *
                    (F(1, 0, 0) * F(1, 0, 0) * F(0, 2, 0) +
                     F(0, 1, 0) * F(0, 1, 0) * F(2, 0, 0)) +
                sc(4) * F(1, 0, 0) * F(0, 1, 0) * F(1, 0, 1));
}

// The second-order equation of the intermediate-nonlinearity regime, exactly
// as typeset. Conventions of that display: A = alpha/beta, G = gamma/beta,
// D = delta/beta^2 with explicit beta / beta^2 bracket factors; term weights
// are taken literally from their bracket position.
TermSum printed_case2() {
    const TermSum A = TermSum::params(1, -1, 0, 0);
    const TermSum G = TermSum::params(0, -1, 1, 0);
    const TermSum D = TermSum::params(0, -2, 0, 1);
    const TermSum A2 = A * A, G2 = G * G, G3 = G2 * G;

    TermSum top = F(2, 0, 0) + G * F(0, 2, 0) - F(0, 0, 2) -
                  A * G * (F(0, 0, 2) * F(0, 2, 1) + F(0, 0, 1) * F(0, 2, 2)) -
                  A * (F(0, 0, 2) * F(2, 0, 1) + F(0, 0, 1) * F(2, 0, 2));

    TermSum b1 =
        (A2 * G).scaled(-1) *
            (F(0, 2, 1) * F(1, 0, 0) * F(1, 0, 1) +
             A2 * F(0, 0, 1) * F(1, 0, 0) * F(1, 2, 1) +
             F(0, 0, 1) * F(0, 2, 1) * F(2, 0, 0) + F(0, 1, 0) * F(1, 1, 0) * F(2, 0, 1) +
             F(0, 0, 1) * F(0, 2, 0) * F(2, 0, 1) - F(0, 0, 1) * F(0, 1, 0) * F(2, 1, 1) +
             F(0, 0, 1) * F(0, 2, 0)) -
        A2 * G2 *
            (F(0, 1, 0) * F(1, 1, 0) * F(0, 2, 1) + F(0, 0, 1) * F(0, 2, 0) * F(0, 2, 1) +
             F(0, 0, 1) * F(0, 1, 0) * F(0, 3, 1)) -
        A2 * (F(1, 0, 0) * F(1, 0, 1) * F(2, 0, 1) - F(0, 0, 1) * F(2, 0, 0) * F(2, 0, 1) -
              F(0, 0, 1) * F(1, 0, 0) * F(3, 0, 1)) -
        sc(2) * G * A * F(0, 1, 0) * F(1, 1, 0) - sc(2) * F(1, 0, 0) * F(1, 0, 1) -
        A * F(0, 0, 1) * F(2, 0, 0) + G * sc({1, 2}) * F(0, 2, 2) -
        G2 * sc({1, 6}) * F(0, 4, 0) + sc({1, 2}) * F(2, 0, 2) -
        G * sc({1, 3}) * F(2, 2, 0) - sc({1, 6}) * F(4, 0, 0);

    TermSum b2 =
        A2 * G3 *
            (F(1, 1, 0) * F(0, 2, 1) * F(0, 3, 0) + F(0, 0, 1) * F(0, 3, 0) * F(0, 3, 1) +
             F(0, 0, 1) * F(0, 2, 1) * F(0, 4, 0)) +
        G3 * sc({1, 120}) * F(0, 6, 0) +
        A2 * G2 *
            (sc({-3, 2}) * F(0, 1, 0) * F(0, 1, 0) * F(0, 2, 0) +
             sc({1, 2}) * F(0, 2, 1) * F(1, 0, 1) * F(1, 2, 0) +
             sc({1, 2}) * F(0, 0, 1) * F(1, 2, 0) * F(1, 2, 1) +
             sc({1, 2}) * F(1, 1, 0) * F(0, 3, 0) * F(2, 0, 1) +
             sc({1, 2}) * F(0, 0, 1) * F(0, 4, 0) * F(2, 0, 1) +
             sc({1, 2}) * F(1, 1, 0) * F(0, 2, 1) * F(2, 1, 0) +
             sc({1, 2}) * F(0, 0, 1) * F(0, 3, 1) * F(2, 1, 0) +
             sc({1, 2}) * F(0, 0, 1) * F(0, 3, 0) * F(2, 1, 1) +
             F(0, 0, 1) * F(0, 2, 1) * F(2, 2, 0)) +
        A * G2 *
            (sc({-1, 2}) * F(0, 2, 0) * F(0, 2, 1) + F(1, 1, 0) * F(0, 3, 0) +
             F(0, 1, 0) * F(0, 3, 1) + sc({1, 2}) * F(0, 0, 1) * F(0, 4, 0)) +
        A2 * G *
            (sc({-1, 2}) * F(0, 2, 0) * F(1, 0, 0) * F(1, 0, 0) +
             sc({-1, 2}) * F(0, 1, 0) * F(0, 1, 0) * F(2, 0, 0) +
             sc({1, 2}) * F(1, 0, 1) * F(1, 2, 0) * F(2, 0, 1) +
             sc({1, 2}) * F(1, 1, 0) * F(2, 0, 1) * F(2, 1, 0) +
             sc({1, 2}) * F(0, 0, 1) * F(2, 1, 0) * F(2, 1, 1) +
             sc({1, 2}) * F(0, 2, 1) * F(1, 0, 1) * F(3, 0, 0) +
             sc({1, 2}) * F(0, 0, 1) * F(1, 2, 1) * F(3, 0, 0) +
             sc({1, 2}) * F(0, 0, 1) * F(1, 2, 0) * F(3, 0, 1) +
             sc({1, 2}) * F(0, 0, 1) * F(0, 2, 1) * F(4, 0, 0) +
             F(0, 0, 1) * F(2, 0, 1) * F(2, 2, 0) -
             sc(2) * F(0, 1, 0) * F(1, 0, 0) * F(1, 1, 0)) +
        G2 * (sc({-1, 24}) * F(0, 4, 2) + sc({1, 40}) * F(2, 4, 0)) +
        // "h_h" transcribed as the underived bottom symbol
        (D * G).scaled(-1) * (H(0, 0) * F(0, 1, 0) + H(0, 0) * F(0, 2, 0)) -
        D * (H(0, 0) * F(1, 0, 0) + H(0, 0) * F(2, 0, 0)) +
        A * G *
            (F(1, 0, 1) * F(1, 2, 0) + F(1, 0, 0) * F(1, 2, 1) -
             sc({1, 2}) * F(0, 2, 1) * F(2, 0, 0) - sc({1, 2}) * F(0, 2, 0) * F(2, 0, 1) +
             F(1, 1, 0) * F(2, 1, 0) + F(0, 1, 0) * F(2, 1, 1) + F(0, 0, 1) * F(2, 2, 0)) +
        G * (sc({-1, 12}) * F(2, 2, 2) + sc({1, 40}) * F(4, 2, 0)) +
        A * (sc({-1, 2}) * F(2, 0, 0) * F(2, 0, 1) + F(1, 0, 1) * F(3, 0, 0) +
             F(1, 0, 0) * F(3, 0, 1) + sc({1, 2}) * F(0, 0, 1) * F(4, 0, 0)) +
        A2 * sc({1, 2}) *
            (F(1, 0, 1) * F(2, 0, 1) * F(3, 0, 0) + F(0, 0, 1) * F(3, 0, 0) * F(3, 0, 1) +
             F(0, 0, 1) * F(2, 0, 1) * F(4, 0, 0)) -
        sc({1, 24}) * F(4, 0, 2) + sc({1, 120}) * F(6, 0, 0);

    return top + BE * b1 + BE * BE * b2;
}

}  // namespace

TermSum printed_scalar_equation(Regime r) {
    switch (r) {
        case Regime::Case1: return printed_case1();
        case Regime::Case2: return printed_case2();
        case Regime::Case3: return printed_case3();
        case Regime::Case4: return printed_case4();
        case Regime::Case3ST:
            throw UnsupportedRegime("no printed single-f equation with surface tension");
    }
    throw Error("unreachable regime");
}

}  // namespace b2p1::series
