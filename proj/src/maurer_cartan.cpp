#include "linfty/maurer_cartan.hpp"

#include <algorithm>

namespace linf {

PolyVector constant_path(const Element& v) {
    PolyVector out(v.space(), v.degree());
    for (const auto& [i, c] : v.terms()) out.add_term(i, Poly(c));
    return out;
}

Element coefficient(const PolyVector& v, int power) {
    Element out(v.space(), v.degree());
    for (const auto& [i, p] : v.terms()) out.add_term(i, p.coefficient(power));
    return out;
}

Element evaluate(const PolyVector& v, const Rational& t) {
    Element out(v.space(), v.degree());
    for (const auto& [i, p] : v.terms()) out.add_term(i, p.evaluate(t));
    return out;
}

PolyVector derivative(const PolyVector& v) {
    PolyVector out(v.space(), v.degree());
    for (const auto& [i, p] : v.terms()) out.add_term(i, p.derivative());
    return out;
}

PolyVector integral(const PolyVector& v) {
    PolyVector out(v.space(), v.degree());
    for (const auto& [i, p] : v.terms()) out.add_term(i, p.integral());
    return out;
}

int max_power(const PolyVector& v) {
    int d = -1;
    for (const auto& [i, p] : v.terms()) d = std::max(d, p.degree());
    return d;
}

std::string to_string(const PolyVector& v) {
    if (v.zero()) return "0";
    std::string out;
    for (int k = 0; k <= max_power(v); ++k) {
        const Element c = coefficient(v, k);
        if (c.zero()) continue;
        if (!out.empty()) out += "; ";
        out += "t^" + std::to_string(k) + ": " + to_string(c);
    }
    return out;
}

namespace {

template <class C>
BasicVector<C> power_term(const MultiMap& q, const BasicVector<C>& pi, int m) {
    const ArgBlock<C> block{&pi, m};
    return apply_map(q, std::span<const ArgBlock<C>>(&block, 1));
}

}  // namespace

MCReport mc_residual(const LInftyStructure& L, const Element& pi, Truncation truncation, int depth_bound) {
    if (pi.degree() != 1) throw InputError("a Maurer-Cartan element must have degree 1");
    if (!same_space(pi.space(), L.space())) throw InputError("element lives in another space");
    MCReport report;
    report.cap = L.cap();
    report.truncation = truncation;
    int top = L.cap();
    if (truncation == Truncation::require_nilpotent) {
        const auto chain = lower_central_series(L, depth_bound);
        if (!chain.nilpotent())
            throw NonTerminationError("the Maurer-Cartan sum need not terminate: the lower central series does not "
                                      "vanish within depth " + std::to_string(depth_bound));
        top = std::min(top, *chain.nilpotent_depth - 1);
    }
    report.residual = Element(L.space(), 2);
    for (int n = 1; n <= top; ++n) {
        Element term = power_term(L.map(n), pi, n);
        term *= Rational(1 / factorial(n));
        if (term.zero()) continue;
        report.residual += term;
        report.contributions.emplace(n, std::move(term));
    }
    return report;
}

PolyVector mc_residual(const LInftyStructure& L, const PolyVector& pi) {
    if (pi.degree() != 1) throw InputError("a Maurer-Cartan path must have degree 1");
    PolyVector out(L.space(), 2);
    for (int n = 1; n <= L.cap(); ++n) {
        PolyVector term = power_term(L.map(n), pi, n);
        term *= Rational(1 / factorial(n));
        out += term;
    }
    return out;
}

NotMaurerCartan::NotMaurerCartan(Element residual)
    : std::runtime_error("not a Maurer-Cartan element; residual " + to_string(residual)),
      residual_(std::move(residual)) {}

LInftyStructure twist(const LInftyStructure& L, const Element& pi) {
    const MCReport mc = mc_residual(L, pi);
    if (!mc.pass()) throw NotMaurerCartan(mc.residual);
    const SpacePtr& s = L.space();
    std::vector<MultiMap> maps;
    for (int n = 1; n <= L.cap(); ++n) {
        MultiMap q(s, s, n, 2 - n);
        for (const Word& w : wedge_basis(*s, n)) {
            Element value = L.map(n).zero_output(w);
            std::vector<Element> args;
            for (int g : w) args.push_back(Element::basis(s, g));
            for (int m = 0; m + n <= L.cap(); ++m) {
                std::vector<ArgBlock<Rational>> blocks;
                if (m > 0) blocks.push_back({&pi, m});
                for (const auto& a : args) blocks.push_back({&a, 1});
                Element term = apply_map(L.map(m + n), std::span<const ArgBlock<Rational>>(blocks));
                term *= Rational(1 / factorial(m));
                value += term;
            }
            if (!value.zero()) q.set(w, value);
        }
        maps.push_back(std::move(q));
    }
    return make_linfty(s, maps, L.cap());
}

PolyVector flow_velocity(const LInftyStructure& L, const PolyVector& pi, const PolyVector& xi) {
    PolyVector out(L.space(), xi.degree() + 1);
    for (int m = 0; m + 1 <= L.cap(); ++m) {
        std::vector<ArgBlock<Poly>> blocks;
        if (m > 0) blocks.push_back({&pi, m});
        blocks.push_back({&xi, 1});
        PolyVector term = apply_map(L.map(m + 1), std::span<const ArgBlock<Poly>>(blocks));
        term *= Rational(1 / factorial(m));
        out += term;
    }
    return out;
}

GaugeFlow gauge_flow(const LInftyStructure& L, const Element& pi0, const Element& xi,
                     std::optional<int> iteration_bound) {
    if (xi.degree() != 0) throw InputError("the gauge parameter must have degree 0");
    const MCReport mc = mc_residual(L, pi0);
    if (!mc.pass()) throw NotMaurerCartan(mc.residual);
    int bound = 0;
    if (iteration_bound) {
        bound = *iteration_bound;
    } else {
        const auto chain = lower_central_series(L, L.cap() + 4);
        bound = (chain.nilpotent() ? *chain.nilpotent_depth : L.cap() + 2) + 2;
    }
    const PolyVector start = constant_path(pi0);
    const PolyVector x = constant_path(xi);
    GaugeFlow flow{start, 0};
    for (int k = 1; k <= bound; ++k) {
        PolyVector next = start + integral(flow_velocity(L, flow.path, x));
        flow.iterations = k;
        if (next == flow.path) return flow;
        flow.path = std::move(next);
    }
    throw NonTerminationError("gauge flow did not reach a Picard fixpoint within " + std::to_string(bound) +
                              " iterations; the structure is not nilpotent along this flow");
}

}  // namespace linf
