#include "scalar.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <tuple>
#include <utility>

#include "plan_eval.hpp"
#include "scalar_plans_golden.hpp"

namespace b2p1 {

namespace {

using detail::eval_plan;
using detail::param_weight;
using series::Base;
using series::EvalTerm;
using series::Monomial;
using series::Rational;
using series::TermSum;

// Factor lookup over a jet plus the bottom profile.
std::function<Field2D(const Monomial&)> jet_lookup(const JetProvider& jet,
                                                   const Bathymetry& bath) {
    return [&jet, &bath](const Monomial& m) -> Field2D {
        switch (m.base) {
            case Base::F: return jet.get(m.a, m.b, m.c);
            case Base::H:
                if (m.c != 0) throw Error("time derivative of the bottom profile requested");
                return bath.h_deriv(m.a, m.b);
            case Base::Eta: break;
        }
        throw Error("plan contains an unresolved surface factor");
    };
}

// Factor lookup over an evolved (f, q) pair; second time derivatives must
// have been eliminated from the plan beforehand.
std::function<Field2D(const Monomial&)> state_lookup(const Field2D& f, const Field2D& q,
                                                     const Bathymetry& bath) {
    return [&f, &q, &bath](const Monomial& m) -> Field2D {
        switch (m.base) {
            case Base::F:
                if (m.c == 0) return deriv(f, m.a, m.b);
                if (m.c == 1) return deriv(q, m.a, m.b);
                throw MissingDerivative(m.a, m.b, m.c);
            case Base::H:
                if (m.c != 0) throw Error("time derivative of the bottom profile requested");
                return bath.h_deriv(m.a, m.b);
            case Base::Eta: break;
        }
        throw Error("plan contains an unresolved surface factor");
    };
}

// The surface recovery exactly as typeset for the beta-leading second-order
// regime, with its sign slip on the trailing f_t(ab f_xxt + ag f_yyt) kept.
const TermSum& printed_eta_case2() {
    static const TermSum* ts = [] {
        auto F = [](int a, int b, int c) { return TermSum::monomial(Base::F, a, b, c); };
        auto W = [](int ea, int eb, int ec, int ed, Rational co) {
            return TermSum::params(ea, eb, ec, ed).scaled(co);
        };
        const TermSum r = TermSum::params(0, -1, 1, 0);

        TermSum q = F(0, 0, 1);
        q = q + W(1, 0, 0, 0, {1, 2}) * (F(1, 0, 0) * F(1, 0, 0) + r * F(0, 1, 0) * F(0, 1, 0));
        q = q + W(0, 1, 0, 0, {-1, 2}) * F(2, 0, 1) + W(0, 0, 1, 0, {-1, 2}) * F(0, 2, 1);
        q = q + W(1, 1, 0, 0, {1, 2}) * (F(2, 0, 0) * F(2, 0, 0) - F(1, 0, 0) * F(3, 0, 0));
        q = q + W(1, 0, 1, 0, 1) *
                    (F(2, 0, 0) * F(0, 2, 0) + F(1, 0, 0) * F(1, 2, 0).scaled({-1, 2}) +
                     F(0, 1, 0) * F(2, 1, 0).scaled({-1, 2}) +
                     r * (F(0, 2, 0) * F(0, 2, 0) - F(0, 1, 0) * F(0, 3, 0)));
        q = q + W(0, 2, 0, 0, {1, 24}) *
                    (F(4, 0, 1) + r.scaled(2) * F(2, 2, 1) + r * r * F(0, 4, 1));

        TermSum eta = q.scaled(-1);
        eta = eta + F(0, 0, 1) * (W(1, 1, 0, 0, 1) * F(2, 0, 1) + W(1, 0, 1, 0, 1) * F(0, 2, 1));
        return new TermSum(eta);
    }();
    return *ts;
}

}  // namespace

PlaneWaveJet::PlaneWaveJet(const Grid2D& g, std::vector<PlaneWaveComponent> comps, double ratio,
                           double t)
    : grid_(g), comps_(std::move(comps)), t_(t) {
    omegas_.reserve(comps_.size());
    for (const PlaneWaveComponent& c : comps_) {
        const double kx = grid_.kx(c.jx), ky = grid_.ky(c.jy);
        omegas_.push_back(double(c.branch) * std::sqrt(kx * kx + ratio * ky * ky));
    }
}

Field2D PlaneWaveJet::get(int a, int b, int c) const {
    Field2D out(grid_);
    for (size_t n = 0; n < comps_.size(); ++n) {
        const PlaneWaveComponent& cm = comps_[n];
        const double kx = grid_.kx(cm.jx), ky = grid_.ky(cm.jy), om = omegas_[n];
        // d/dx -> i kx, d/dy -> i ky, d/dt -> -i omega on amp e^{i theta}.
        std::complex<double> z(cm.amp, 0.0);
        for (int i = 0; i < a; ++i) z *= std::complex<double>(0.0, kx);
        for (int i = 0; i < b; ++i) z *= std::complex<double>(0.0, ky);
        for (int i = 0; i < c; ++i) z *= std::complex<double>(0.0, -om);
        for (int j = 0; j < grid_.ny; ++j) {
            const double py = ky * grid_.y(j) - om * t_ + cm.phase;
            for (int i = 0; i < grid_.nx; ++i) {
                const double th = kx * grid_.x(i) + py;
                out.at(i, j) += z.real() * std::cos(th) - z.imag() * std::sin(th);
            }
        }
    }
    return out;
}

ScalarState::ScalarState(Field2D f_, Field2D q_, double t_)
    : f(std::move(f_)), q(std::move(q_)), t(t_) {
    if (f.grid() != q.grid()) throw Error("scalar state fields live on different grids");
}

const TermSum& scalar_plan(Regime r, EquationForm form) {
    if (r == Regime::Case3ST)
        throw UnsupportedRegime("no single-f formulation for the surface-tension regime");
    static const std::map<std::pair<int, int>, TermSum>* table = [] {
        auto* m = new std::map<std::pair<int, int>, TermSum>;
        auto put = [m](Regime rr, EquationForm ff, const char* text) {
            m->emplace(std::make_pair(int(rr), int(ff)), TermSum::deserialize(text));
        };
        put(Regime::Case1, EquationForm::Consistent, plans::kConsistentCase1);
        put(Regime::Case2, EquationForm::Consistent, plans::kConsistentCase2);
        put(Regime::Case3, EquationForm::Consistent, plans::kConsistentCase3);
        put(Regime::Case4, EquationForm::Consistent, plans::kConsistentCase4);
        put(Regime::Case1, EquationForm::Printed, plans::kPrintedCase1);
        put(Regime::Case2, EquationForm::Printed, plans::kPrintedCase2);
        put(Regime::Case3, EquationForm::Printed, plans::kPrintedCase3);
        put(Regime::Case4, EquationForm::Printed, plans::kPrintedCase4);
        return m;
    }();
    return table->at(std::make_pair(int(r), int(form)));
}

Field2D scalar_residual(const JetProvider& jet, const Bathymetry& bath, const SmallParams& p,
                        Regime r, EquationForm form) {
    const Grid2D& g = jet.grid();
    if (!bath.h().empty() && bath.h().grid() != g) throw Error("bathymetry grid mismatch");
    // Residuals stay pointwise-exact: no dealiasing of products.
    return eval_plan(series::emit_evaluator(scalar_plan(r, form)), g, jet_lookup(jet, bath), p,
                     false);
}

Field2D scalar_ftt(const Field2D& f, const Field2D& q, const Bathymetry& bath,
                   const SmallParams& p, Regime r, bool dealias_products) {
    if (r == Regime::Case2)
        throw UnsupportedRegime("f_tt enters this regime nonlinearly; no explicit closure");
    const EquationForm form =
        (r == Regime::Case4) ? EquationForm::Printed : EquationForm::Consistent;

    // Split the governing plan into the constant-coefficient operator acting
    // on f_tt and everything expressible from (f, q).
    OperatorSymbol L{};
    std::vector<EvalTerm> rest;
    for (const EvalTerm& t : series::emit_evaluator(scalar_plan(r, form))) {
        bool has_tt = false;
        for (const Monomial& m : t.factors)
            if (m.base == Base::F && m.c >= 2) has_tt = true;
        if (!has_tt) {
            rest.push_back(t);
            continue;
        }
        if (t.factors.size() != 1 || t.factors[0].c != 2)
            throw Error("cannot isolate f_tt: nonlinear or higher time derivative");
        const double v = t.coeff * param_weight(p, t.ea, t.eb, t.ec, t.ed);
        const int a = t.factors[0].a, b = t.factors[0].b;
        if (a == 0 && b == 0) L.c0 += v;
        else if (a == 2 && b == 0) L.c20 += v;
        else if (a == 0 && b == 2) L.c02 += v;
        else if (a == 4 && b == 0) L.c40 += v;
        else if (a == 2 && b == 2) L.c22 += v;
        else if (a == 0 && b == 4) L.c04 += v;
        else throw Error("unsupported spatial derivative on f_tt");
    }
    // L f_tt + rest = 0.
    Field2D rhs = eval_plan(rest, f.grid(), state_lookup(f, q, bath), p, dealias_products);
    rhs *= -1.0;
    return invert_symbol(rhs, L);
}

ScalarState scalar_step(const ScalarState& s, const ScalarStepConfig& cfg, const Bathymetry& bath,
                        const SmallParams& p, Regime r) {
    auto ftt = [&](const Field2D& f, const Field2D& q) {
        return scalar_ftt(f, q, bath, p, r, cfg.dealias_products);
    };
    const double dt = cfg.dt;
    const Field2D& k1f = s.q;
    Field2D k1q = ftt(s.f, s.q);
    Field2D k2f = s.q + 0.5 * dt * k1q;
    Field2D k2q = ftt(s.f + 0.5 * dt * k1f, k2f);
    Field2D k3f = s.q + 0.5 * dt * k2q;
    Field2D k3q = ftt(s.f + 0.5 * dt * k2f, k3f);
    Field2D k4f = s.q + dt * k3q;
    Field2D k4q = ftt(s.f + dt * k3f, k4f);

    Field2D nf = s.f + (dt / 6.0) * (k1f + 2.0 * k2f + 2.0 * k3f + k4f);
    Field2D nq = s.q + (dt / 6.0) * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
    if (cfg.dealias_products) {
        // Keep the state inside the 2/3 band: the linear part of the closure
        // is evaluated on every retained mode, and round-off seeded top-third
        // content grows without bound outside the equation's validity.
        nf = dealias(nf);
        nq = dealias(nq);
    }
    if (!nf.finite() || !nq.finite())
        throw NonFiniteState("scalar step produced a non-finite state at t = " +
                             std::to_string(s.t));
    return ScalarState(std::move(nf), std::move(nq), s.t + dt);
}

NumericJet::NumericJet(ScalarState s, Bathymetry bath, SmallParams p, Regime r)
    : state_(std::move(s)), bath_(std::move(bath)), p_(p), r_(r) {}

Field2D NumericJet::get(int a, int b, int c) const {
    if (c == 0) return deriv(state_.f, a, b);
    if (c == 1) return deriv(state_.q, a, b);
    if (c == 2) {
        if (!ftt_)
            ftt_ = std::make_unique<Field2D>(
                scalar_ftt(state_.f, state_.q, bath_, p_, r_, false));
        return deriv(*ftt_, a, b);
    }
    throw MissingDerivative(a, b, c);
}

Field2D eta_from_f(const ScalarState& s, const SmallParams& p, Regime r) {
    if (r == Regime::Case3ST)
        throw UnsupportedRegime("surface recovery not available with surface tension");
    if (r == Regime::Case4 && p.tau * std::max(p.beta, p.gamma) > 1e-3)
        throw TauNotNegligible("tau * max(beta, gamma) = " +
                               std::to_string(p.tau * std::max(p.beta, p.gamma)) +
                               " exceeds 1e-3; the tau-free recovery is not valid");
    const TermSum& plan =
        (r == Regime::Case2) ? printed_eta_case2() : series::eta_recovery(r);
    const Bathymetry none;  // surface recovery carries no bottom terms
    return eval_plan(series::emit_evaluator(plan), s.f.grid(), state_lookup(s.f, s.q, none), p,
                     false);
}

}  // namespace b2p1
