#include "dynamics.hpp"

#include <cmath>
#include <map>
#include <utility>

#include "plan_eval.hpp"
#include "series.hpp"

namespace b2p1 {

namespace {

using detail::eval_plan;
using detail::param_weight;
using series::Base;
using series::EvalTerm;
using series::Monomial;

// The dynamic equation split by role: terms carrying no time derivative
// (direct), the constant-coefficient linear f_t group (inverted spectrally),
// and variable-coefficient terms multiplying an f_t derivative (lagged in a
// Picard loop).
struct DynSplit {
    std::vector<EvalTerm> direct;
    std::vector<EvalTerm> linear_ft;
    std::vector<EvalTerm> lagged;
};

struct RegimePlans {
    std::vector<EvalTerm> kin_rest;  // kinematic terms besides eta_t
    DynSplit dyn;
};

RegimePlans build_plans(Regime r) {
    const auto pair = series::boussinesq_pair(r);
    RegimePlans out;

    bool dropped_eta_t = false;
    for (const EvalTerm& t : series::emit_evaluator(pair.kinematic)) {
        if (t.factors.size() == 1 && t.factors[0].base == Base::Eta && t.factors[0].a == 0 &&
            t.factors[0].b == 0 && t.factors[0].c == 1) {
            if (t.coeff != 1.0 || t.ea || t.eb || t.ec || t.ed)
                throw Error("kinematic equation is not monic in eta_t");
            dropped_eta_t = true;
            continue;
        }
        for (const Monomial& m : t.factors)
            if (m.c != 0) throw Error("kinematic equation has an unexpected time derivative");
        out.kin_rest.push_back(t);
    }
    if (!dropped_eta_t) throw Error("kinematic equation lacks eta_t");

    for (const EvalTerm& t : series::emit_evaluator(detail::stepping_dynamic(r))) {
        bool has_ft = false;
        for (const Monomial& m : t.factors) {
            if (m.c >= 2) throw Error("dynamic equation has a second time derivative");
            if (m.base == Base::F && m.c == 1) has_ft = true;
            if (m.base == Base::Eta && m.c != 0)
                throw Error("dynamic equation differentiates eta in time");
        }
        if (!has_ft)
            out.dyn.direct.push_back(t);
        else if (t.factors.size() == 1)
            out.dyn.linear_ft.push_back(t);
        else
            out.dyn.lagged.push_back(t);
    }
    if (out.dyn.linear_ft.empty()) throw Error("dynamic equation has no linear f_t group");
    return out;
}

const RegimePlans& plans_for(Regime r) {
    static std::map<int, RegimePlans>* cache = new std::map<int, RegimePlans>;
    auto it = cache->find(int(r));
    if (it == cache->end()) it = cache->emplace(int(r), build_plans(r)).first;
    return it->second;
}

OperatorSymbol ft_symbol(const std::vector<EvalTerm>& linear_ft, const SmallParams& p) {
    OperatorSymbol M{};
    for (const EvalTerm& t : linear_ft) {
        const double v = t.coeff * param_weight(p, t.ea, t.eb, t.ec, t.ed);
        const int a = t.factors[0].a, b = t.factors[0].b;
        if (a == 0 && b == 0) M.c0 += v;
        else if (a == 2 && b == 0) M.c20 += v;
        else if (a == 0 && b == 2) M.c02 += v;
        else if (a == 4 && b == 0) M.c40 += v;
        else if (a == 2 && b == 2) M.c22 += v;
        else if (a == 0 && b == 4) M.c04 += v;
        else throw Error("unsupported spatial derivative on f_t");
    }
    return M;
}

// Factor lookup over (eta, f) and, when supplied, a lagged f_t iterate.
std::function<Field2D(const Monomial&)> pair_lookup(const Field2D& eta, const Field2D& f,
                                                    const Field2D* ft_lag,
                                                    const Bathymetry& bath) {
    return [&eta, &f, ft_lag, &bath](const Monomial& m) -> Field2D {
        switch (m.base) {
            case Base::Eta:
                if (m.c != 0) throw Error("unexpected eta time derivative");
                return deriv(eta, m.a, m.b);
            case Base::F:
                if (m.c == 0) return deriv(f, m.a, m.b);
                if (m.c == 1 && ft_lag) return deriv(*ft_lag, m.a, m.b);
                throw Error("f_t requested outside the Picard loop");
            case Base::H:
                if (m.c != 0) throw Error("time derivative of the bottom profile requested");
                return bath.h_deriv(m.a, m.b);
        }
        throw Error("unknown factor base");
    };
}

bool has_surface_tension(Regime r) { return r == Regime::Case3ST || r == Regime::Case4; }

}  // namespace

namespace detail {

series::TermSum stepping_dynamic(Regime r) {
    series::TermSum dyn = series::boussinesq_pair(r).dynamic;
    if (r != Regime::Case2) return dyn;
    // The derivation-consistent encoding carries -a g eta f_yyt; the verbatim
    // pair has the opposite sign there. Stepping follows the verbatim pair.
    std::vector<series::Term> ts = dyn.terms();
    bool flipped = false;
    const Monomial fyyt{Base::F, 0, 2, 1}, eta0{Base::Eta, 0, 0, 0};
    for (series::Term& t : ts) {
        if (t.ea == 1 && t.eb == 0 && t.ec == 1 && t.ed == 0 && t.factors.size() == 2 &&
            ((t.factors[0] == fyyt && t.factors[1] == eta0) ||
             (t.factors[0] == eta0 && t.factors[1] == fyyt))) {
            t.coeff = -t.coeff;
            flipped = true;
        }
    }
    if (!flipped) throw Error("eta f_yyt coupling not found in the dynamic equation");
    return series::TermSum(std::move(ts));
}

}  // namespace detail

WaveState::WaveState(Field2D eta_, Field2D f_, double t_)
    : eta(std::move(eta_)), f(std::move(f_)), t(t_) {
    if (eta.grid() != f.grid()) throw Error("wave state fields live on different grids");
}

RhsResult rhs(const WaveState& s, const Bathymetry& bath, const SmallParams& p, Regime r,
              SurfaceTensionMode st_mode, const StepperConfig& cfg) {
    const Grid2D& g = s.eta.grid();
    if (!bath.h().empty() && bath.h().grid() != g) throw Error("bathymetry grid mismatch");
    const RegimePlans& plans = plans_for(r);
    const bool da = cfg.dealias;

    Field2D eta_t = eval_plan(plans.kin_rest, g, pair_lookup(s.eta, s.f, nullptr, bath), p, da);
    eta_t *= -1.0;

    // Dynamic equation: M f_t + lagged(f_t) + direct = 0.
    const OperatorSymbol M = ft_symbol(plans.dyn.linear_ft, p);
    Field2D direct = eval_plan(plans.dyn.direct, g, pair_lookup(s.eta, s.f, nullptr, bath), p, da);
    if (has_surface_tension(r) && p.tau != 0.0) direct += surface_tension(s.eta, p, st_mode);

    Field2D u = invert_symbol(direct * -1.0, M);
    int iters = 0;
    if (!plans.dyn.lagged.empty()) {
        while (true) {
            Field2D lag =
                eval_plan(plans.dyn.lagged, g, pair_lookup(s.eta, s.f, &u, bath), p, da);
            Field2D next = invert_symbol((direct + lag) * -1.0, M);
            const double update = (next - u).max_abs();
            u = std::move(next);
            ++iters;
            if (update < cfg.picard_tol) break;
            if (iters >= cfg.picard_max_iters) throw PicardDiverged(iters, update);
        }
    }
    return {std::move(eta_t), std::move(u), iters};
}

WaveState step_rk4(const WaveState& s, const StepperConfig& cfg, const Bathymetry& bath,
                   const SmallParams& p, Regime r, SurfaceTensionMode st_mode) {
    auto f = [&](const Field2D& eta, const Field2D& fld) {
        try {
            return rhs(WaveState(eta, fld, s.t), bath, p, r, st_mode, cfg);
        } catch (const NonFiniteField& e) {
            throw NonFiniteState(std::string(e.what()) + " at t = " + std::to_string(s.t));
        }
    };
    const double dt = cfg.dt;
    RhsResult k1 = f(s.eta, s.f);
    RhsResult k2 = f(s.eta + 0.5 * dt * k1.eta_t, s.f + 0.5 * dt * k1.f_t);
    RhsResult k3 = f(s.eta + 0.5 * dt * k2.eta_t, s.f + 0.5 * dt * k2.f_t);
    RhsResult k4 = f(s.eta + dt * k3.eta_t, s.f + dt * k3.f_t);

    Field2D eta =
        s.eta + (dt / 6.0) * (k1.eta_t + 2.0 * k2.eta_t + 2.0 * k3.eta_t + k4.eta_t);
    Field2D fld = s.f + (dt / 6.0) * (k1.f_t + 2.0 * k2.f_t + 2.0 * k3.f_t + k4.f_t);

    if (cfg.filter > 0.0) {
        const Grid2D& g = s.eta.grid();
        const double jx_max = g.nx / 2.0, jy_max = g.ny / 2.0, str = cfg.filter;
        auto factor = [&](int jx, int jy) {
            const double rx = std::abs(jx) / jx_max, ry = std::abs(jy) / jy_max;
            return std::exp(-str * (std::pow(rx, 36) + std::pow(ry, 36)));
        };
        eta = spectral_filter(eta, factor);
        fld = spectral_filter(fld, factor);
    }
    if (!eta.finite() || !fld.finite())
        throw NonFiniteState("pair step produced a non-finite state at t = " +
                             std::to_string(s.t));
    return WaveState(std::move(eta), std::move(fld), s.t + dt);
}

Diagnostics diagnostics(const WaveState& s) {
    Diagnostics d;
    d.mass = integral(s.eta);
    d.l2_eta = std::sqrt(integral(pointwise(s.eta, s.eta)));
    d.linf_eta = s.eta.max_abs();
    d.spectrum_tail_fraction = spectrum_tail_fraction(s.eta);
    return d;
}

}  // namespace b2p1
