#ifndef B2P1_PLAN_EVAL_HPP_
#define B2P1_PLAN_EVAL_HPP_

// Internal: numeric evaluation of compiled term plans (series::EvalTerm)
// shared by the single-f and pair formulations.

#include <functional>
#include <map>
#include <tuple>
#include <vector>

#include "grid.hpp"
#include "params.hpp"
#include "series.hpp"

namespace b2p1::detail {

// alpha^ea beta^eb gamma^ec delta^ed; eb may be negative (the gamma/beta
// ratio is kept explicit in the plans).
inline double param_weight(const SmallParams& p, int ea, int eb, int ec, int ed) {
    double w = 1.0;
    for (int i = 0; i < ea; ++i) w *= p.alpha;
    for (int i = 0; i < ec; ++i) w *= p.gamma;
    for (int i = 0; i < ed; ++i) w *= p.delta;
    if (eb >= 0) {
        for (int i = 0; i < eb; ++i) w *= p.beta;
    } else {
        if (p.beta == 0.0) {
            // Every negative beta power rides on a positive gamma power, so a
            // vanished numerator makes the term exactly zero.
            if (w == 0.0) return 0.0;
            throw Error("beta == 0 with a gamma/beta weighted term present");
        }
        for (int i = 0; i < -eb; ++i) w /= p.beta;
    }
    return w;
}

// Evaluates a compiled plan, caching each derivative field once. Products of
// two or more factors are optionally dealiased; single factors never are.
inline Field2D eval_plan(const std::vector<series::EvalTerm>& plan, const Grid2D& g,
                         const std::function<Field2D(const series::Monomial&)>& factor,
                         const SmallParams& p, bool dealias_products) {
    std::map<std::tuple<int, int, int, int>, Field2D> cache;
    auto get = [&](const series::Monomial& m) -> const Field2D& {
        auto key = std::make_tuple(int(m.base), m.a, m.b, m.c);
        auto it = cache.find(key);
        if (it == cache.end()) it = cache.emplace(key, factor(m)).first;
        return it->second;
    };
    Field2D out(g);
    for (const series::EvalTerm& t : plan) {
        const double c = t.coeff * param_weight(p, t.ea, t.eb, t.ec, t.ed);
        if (c == 0.0 || t.factors.empty()) continue;
        Field2D prod = get(t.factors[0]);
        for (size_t i = 1; i < t.factors.size(); ++i) prod = pointwise(prod, get(t.factors[i]));
        if (dealias_products && t.factors.size() > 1) prod = dealias(prod);
        out += c * prod;
    }
    return out;
}

}  // namespace b2p1::detail

#endif  // B2P1_PLAN_EVAL_HPP_
