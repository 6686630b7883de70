#include "linfty/homotopy.hpp"

#include <algorithm>

namespace linf {

namespace {

int sign_of(long e) { return e % 2 == 0 ? 1 : -1; }

// h = h0 + dt h1: in the bar presentation (dt phi)(x) = dt phi(x) = (-1)^{|phi| + |x|} phi(x) dt,
// with |phi| = u - 1 for an element of U-degree u.
int dt_sign(const GradedSpace& s, const Word& w, int u_degree) { return sign_of(u_degree - 1 + bar::degree(s, w)); }

}  // namespace

PathAlgebra::PathAlgebra(LInftyStructure base, int t_cap)
    : base_(std::move(base)), t_cap_(t_cap), per_(2 * (t_cap + 1)) {
    if (t_cap_ < 0) throw InputError("t_cap must be non-negative");
    const GradedSpace& b = *base_.space();
    std::vector<BasisElement> basis;
    for (std::size_t e = 0; e < b.dimension(); ++e) {
        for (int j = 0; j <= t_cap_; ++j) {
            const std::string stem = b.name(static_cast<int>(e)) + "*t^" + std::to_string(j);
            basis.push_back({stem, b.degree(static_cast<int>(e))});
            basis.push_back({stem + "*dt", b.degree(static_cast<int>(e)) + 1});
        }
    }
    space_ = make_space(basis);
    const GradedSpace& p = *space_;

    std::vector<MultiMap> maps;
    for (int n = 1; n <= base_.cap(); ++n) {
        MultiMap q(space_, space_, n, 2 - n);
        for (const auto& [w, value] : base_.map(n).values()) {
            const int bar_base = bar::decalage_sign(b, w);
            // Assign (power, dt) to each slot; at most one dt survives.
            std::vector<int> power(static_cast<std::size_t>(n), 0);
            std::vector<int> dt(static_cast<std::size_t>(n), 0);
            auto rec = [&](auto&& self, int slot, int used, int dts) -> void {
                if (slot == n) {
                    Word tuple;
                    long e = 0;
                    for (int i = 0; i < n; ++i) {
                        const auto si = static_cast<std::size_t>(i);
                        tuple.push_back(index(w[si], power[si], dt[si] == 1));
                        for (int j = i + 1; j < n; ++j) e += static_cast<long>(dt[si]) * (b.degree(w[static_cast<std::size_t>(j)]) - 1);
                    }
                    auto canon = canonicalize(p, tuple);
                    if (!canon || q.stored(canon->word) != nullptr) return;
                    const int sign = sign_of(e) * bar_base * bar::decalage_sign(p, tuple);
                    Element out(space_, word_degree(p, tuple) + 2 - n);
                    for (const auto& [f, c] : value.terms()) out.add_term(index(f, used, dts == 1), Rational(c * sign));
                    q.set(tuple, out);
                    return;
                }
                for (int j = 0; j + used <= t_cap_; ++j) {
                    for (int d = 0; d <= (dts == 0 ? 1 : 0); ++d) {
                        power[static_cast<std::size_t>(slot)] = j;
                        dt[static_cast<std::size_t>(slot)] = d;
                        self(self, slot + 1, used + j, dts + d);
                    }
                }
            };
            rec(rec, 0, 0, 0);
        }
        if (n == 1) {
            // d/dt part: a t^j -> (-1)^{|a| - 1} j a t^{j-1} dt
            for (std::size_t e = 0; e < b.dimension(); ++e) {
                const int a = static_cast<int>(e);
                for (int j = 1; j <= t_cap_; ++j) {
                    const int src = index(a, j, false);
                    Element v = q.evaluate(Word{src});
                    v.add_term(index(a, j - 1, true), Rational(sign_of(b.degree(a) - 1) * j));
                    q.set({src}, v);
                }
            }
        }
        maps.push_back(std::move(q));
    }
    structure_ = make_linfty(space_, maps, base_.cap());
}

int PathAlgebra::index(int base_index, int power, bool dt) const {
    if (power < 0 || power > t_cap_) throw OverflowError("t-degree " + std::to_string(power) + " exceeds t_cap " + std::to_string(t_cap_));
    return base_index * per_ + 2 * power + (dt ? 1 : 0);
}

WordFilter PathAlgebra::filter() const {
    return [this](const Word& w) {
        int total = 0;
        for (int i : w) total += t_degree(i);
        return total <= t_cap_;
    };
}

MorphismComponents PathAlgebra::iota() const {
    MorphismComponents F(base_, structure_);
    MultiMap m(base_.space(), space_, 1, 0);
    for (std::size_t e = 0; e < base_.space()->dimension(); ++e)
        m.set({static_cast<int>(e)}, Element::basis(space_, index(static_cast<int>(e), 0, false)));
    F.set_component(m);
    return F;
}

MorphismComponents PathAlgebra::evaluation(const Rational& t) const {
    MorphismComponents F(structure_, base_);
    MultiMap m(space_, base_.space(), 1, 0);
    for (std::size_t i = 0; i < space_->dimension(); ++i) {
        const int idx = static_cast<int>(i);
        if (idx % 2 == 1) continue;  // dt part
        Rational c = 1;
        for (int k = 0; k < t_degree(idx); ++k) c *= t;
        Element v(base_.space(), space_->degree(idx));
        v.add_term(idx / per_, c);
        if (!v.zero()) m.set({idx}, v);
    }
    F.set_component(m);
    return F;
}

PathAlgebra build_path_algebra(const LInftyStructure& base, int t_cap) { return PathAlgebra(base, t_cap); }

HomotopyElement gauge_to_homotopy(const ConvolutionAlgebra& U, const MorphismComponents& F, const HomElement& xi) {
    if (xi.u_degree() != 0) throw InputError("the gauge parameter must have U-degree 0");
    const Element alpha = U.to_u(morphism_to_mc(F));
    const Element x = U.to_u(xi);
    GaugeFlow flow = gauge_flow(U.structure(), alpha, x, U.cap() + 2);
    return {std::move(flow.path), constant_path(x)};
}

bool HomotopyReport::pass() const {
    if (!curvature.zero() || !flow_defect.zero() || !start_ok || !end_ok) return false;
    for (const auto& [t, v] : curvature_at)
        if (!v.zero()) return false;
    return true;
}

HomotopyReport check_homotopy(const ConvolutionAlgebra& U, const MorphismComponents& F,
                              const MorphismComponents& G, const HomotopyElement& h) {
    if (h.h0.degree() != 1 || h.h1.degree() != 0) throw InputError("homotopy parts must have U-degrees 1 and 0");
    HomotopyReport report;
    report.cap = U.cap();
    report.curvature = mc_residual(U.structure(), h.h0);
    for (const Rational& t : {Rational(0), Rational(1, 2), Rational(1)})
        report.curvature_at[format_rational(t)] = mc_residual(U.structure(), evaluate(h.h0, t)).residual;
    report.flow_defect = derivative(h.h0) - flow_velocity(U.structure(), h.h0, h.h1);
    report.start_ok = evaluate(h.h0, Rational(0)) == U.to_u(morphism_to_mc(F));
    report.end_ok = evaluate(h.h0, Rational(1)) == U.to_u(morphism_to_mc(G));
    return report;
}

SplitResidual unsplit_residual(const ConvolutionAlgebra& U, const HomotopyElement& h, std::optional<int> t_cap) {
    const int top = std::max({max_power(h.h0), max_power(h.h1), 0});
    const int needed = U.cap() * (top + 1);
    const int tc = t_cap.value_or(needed);
    if (tc < needed)
        throw OverflowError("t_cap " + std::to_string(tc) + " is below the t-degree " + std::to_string(needed) +
                            " reachable by products of " + std::to_string(U.cap()) + " components");
    const PathAlgebra P(U.target(), tc);
    const GradedSpace& src = *U.source().space();

    MorphismComponents H(U.source(), P.structure());
    for (int n = 1; n <= U.cap(); ++n) {
        MultiMap m(U.source().space(), P.space(), n, 1 - n);
        for (const Word& w : wedge_basis(src, n)) {
            Element v(P.space(), word_degree(src, w) + 1 - n);
            for (int e = 0; e < static_cast<int>(U.target().space()->dimension()); ++e) {
                const int i = U.index(w, e);
                for (const auto& [part, dt] : {std::pair{&h.h0, false}, std::pair{&h.h1, true}}) {
                    Poly p = part->coefficient(i);
                    if (dt) p *= Rational(dt_sign(src, w, 0));
                    for (int j = 0; j <= p.degree(); ++j) v.add_term(P.index(e, j, dt), p.coefficient(j));
                }
            }
            if (!v.zero()) m.set(w, v);
        }
        H.set_component(m);
    }

    SplitResidual out{PolyVector(U.space(), 2), PolyVector(U.space(), 1)};
    const int per = 2 * (tc + 1);
    for (int n = 1; n <= U.cap(); ++n) {
        for (const Word& w : wedge_basis(src, n)) {
            const Element r = morphism_residual(H, w);
            for (const auto& [pi, c] : r.terms()) {
                const int e = pi / per;
                const int j = (pi % per) / 2;
                const bool dt = pi % 2 == 1;
                const Rational sc = dt ? Rational(c * dt_sign(src, w, 1)) : c;
                (dt ? out.with_dt : out.without_dt).add_term(U.index(w, e), Poly::monomial(sc, j));
            }
        }
    }
    return out;
}

}  // namespace linf
