#include "linfty/structure.hpp"

#include <algorithm>

namespace linf {

LInftyStructure::LInftyStructure(SpacePtr space, int cap, const std::vector<MultiMap>& maps)
    : space_(space), maps_(space, space, cap, 1) {
    for (const auto& m : maps) {
        if (m.weight() > cap) {
            if (!m.zero()) throw InputError("map of weight " + std::to_string(m.weight()) + " exceeds the cap");
            continue;
        }
        if (!same_space(m.source(), space_) || !same_space(m.target(), space_))
            throw InputError("structure map of weight " + std::to_string(m.weight()) + " lives on another space");
        maps_.set_component(m);
    }
}

LInftyStructure make_linfty(SpacePtr space, const std::vector<MultiMap>& maps, int cap) {
    return LInftyStructure(std::move(space), cap, maps);
}

LInftyStructure from_dgla(SpacePtr space, const MultiMap& differential, const MultiMap& bracket, int cap) {
    if (differential.weight() != 1) throw InputError("differential must have weight 1");
    if (bracket.weight() != 2) throw InputError("bracket must have weight 2");
    if (cap < 2 && !bracket.zero()) throw InputError("a bracket needs cap >= 2");
    std::vector<MultiMap> maps{differential};
    if (cap >= 2) maps.push_back(bracket);
    return LInftyStructure(std::move(space), cap, maps);
}

CoalgebraMap lift_coderivation(const LInftyStructure& L) {
    const ComponentMap q = L.components();
    const SpacePtr space = L.space();
    return CoalgebraMap(space, space, L.cap(), [q, space](const CoChain& x) {
        return bar::convert(*space, bar::coderivation(q, bar::convert(*space, x)));
    });
}

Element relation_residual(const LInftyStructure& L, const Word& word) {
    const GradedSpace& space = *L.space();
    const ComponentMap& q = L.components();
    CoChain x{{word, Rational(1)}};
    const int n = static_cast<int>(word.size());
    Element r = bar::project(q, bar::coderivation(q, x), word_degree(space, word) + 3 - n);
    if (bar::decalage_sign(space, word) == -1) r = -r;
    return r;
}

ResidualReport check_relations(const LInftyStructure& L, const WordFilter& filter) {
    ResidualReport report;
    report.cap = L.cap();
    for (int n = 1; n <= L.cap(); ++n) {
        for (const Word& w : wedge_basis(*L.space(), n)) {
            if (filter && !filter(w)) continue;
            Element r = relation_residual(L, w);
            if (!r.zero()) report.residuals[n].push_back({w, std::move(r)});
        }
    }
    return report;
}

Element Subspace::reduce(const Element& v) const {
    Element r = v;
    auto it = rows_.find(v.degree());
    if (it == rows_.end()) return r;
    for (const auto& [lead, row] : it->second) {
        const Rational c = r.coefficient(lead);
        if (is_zero(c)) continue;
        r -= c * row;
    }
    return r;
}

bool Subspace::insert(const Element& v) {
    if (!same_space(v.space(), space_)) throw InputError("vector lives in another space");
    Element r = reduce(v);
    if (r.zero()) return false;
    const int lead = r.terms().begin()->first;
    r *= Rational(1 / r.terms().begin()->second);
    auto& rows = rows_[v.degree()];
    for (auto& [l, row] : rows) {
        const Rational c = row.coefficient(lead);
        if (!is_zero(c)) row -= c * r;
    }
    rows.emplace_back(lead, std::move(r));
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return true;
}

bool Subspace::contains(const Element& v) const { return reduce(v).zero(); }

std::size_t Subspace::dimension() const {
    std::size_t d = 0;
    for (const auto& [deg, rows] : rows_) d += rows.size();
    return d;
}

std::vector<Element> Subspace::basis() const {
    std::vector<Element> out;
    for (const auto& [deg, rows] : rows_)
        for (const auto& [lead, row] : rows) out.push_back(row);
    return out;
}

bool operator==(const Subspace& a, const Subspace& b) {
    return same_space(a.space_, b.space_) && a.basis() == b.basis();
}

namespace {

// Non-decreasing k-part compositions of `total` with parts in [1, max_part].
void sorted_compositions(int total, int k, int max_part, std::vector<int>& parts,
                         std::vector<std::vector<int>>& out) {
    if (k == 0) {
        if (total == 0) out.push_back(parts);
        return;
    }
    const int lo = parts.empty() ? 1 : parts.back();
    for (int p = lo; p <= std::min(max_part, total); ++p) {
        parts.push_back(p);
        sorted_compositions(total - p, k - 1, max_part, parts, out);
        parts.pop_back();
    }
}

void close_under_differential(const MultiMap& q1, Subspace& s) {
    bool grew = true;
    while (grew) {
        grew = false;
        for (const Element& v : s.basis()) {
            const Element args[] = {v};
            if (s.insert(apply_map(q1, std::span<const Element>(args)))) grew = true;
        }
    }
}

}  // namespace

FiltrationChain lower_central_series(const LInftyStructure& L, int depth_bound) {
    FiltrationChain chain;
    Subspace top(L.space());
    for (std::size_t i = 0; i < L.space()->dimension(); ++i)
        top.insert(Element::basis(L.space(), static_cast<int>(i)));
    chain.subspaces.push_back(top);
    if (top.dimension() == 0) {
        chain.nilpotent_depth = 1;
        chain.stabilized = true;
        return chain;
    }
    for (int i = 2; i <= depth_bound; ++i) {
        Subspace next(L.space());
        for (int k = 2; k <= L.cap(); ++k) {
            if (L.map(k).zero()) continue;
            const int total = std::max(i, k);
            std::vector<std::vector<int>> comps;
            std::vector<int> parts;
            sorted_compositions(total, k, i - 1, parts, comps);
            for (const auto& comp : comps) {
                std::vector<std::vector<Element>> spans;
                for (int level : comp) spans.push_back(chain.subspaces[static_cast<std::size_t>(level - 1)].basis());
                std::vector<Element> args(static_cast<std::size_t>(k));
                auto rec = [&](auto&& self, std::size_t slot) -> void {
                    if (slot == args.size()) {
                        next.insert(apply_map(L.map(k), std::span<const Element>(args)));
                        return;
                    }
                    for (const Element& v : spans[slot]) {
                        args[slot] = v;
                        self(self, slot + 1);
                    }
                };
                rec(rec, 0);
            }
        }
        close_under_differential(L.map(1), next);
        chain.stabilized = next == chain.subspaces.back();
        chain.subspaces.push_back(std::move(next));
        if (chain.subspaces.back().dimension() == 0) {
            chain.nilpotent_depth = i;
            chain.stabilized = true;
            return chain;
        }
    }
    return chain;
}

}  // namespace linf
