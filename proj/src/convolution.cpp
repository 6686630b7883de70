#include "linfty/convolution.hpp"

#include <algorithm>

namespace linf {

HomElement::HomElement(SpacePtr source, SpacePtr target, int cap, int u_degree)
    : u_degree_(u_degree), components_(std::move(source), std::move(target), cap, u_degree - 1) {}

namespace {

std::string entry_name(const GradedSpace& s, const GradedSpace& t, const Word& w, int e) {
    std::string name = t.name(e) + "[";
    for (std::size_t i = 0; i < w.size(); ++i) name += (i ? "," : "") + s.name(w[i]);
    return name + "]";
}

int sign_of(long e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

ConvolutionAlgebra::ConvolutionAlgebra(LInftyStructure source, LInftyStructure target)
    : source_(std::move(source)), target_(std::move(target)) {
    if (source_.cap() != target_.cap()) throw InputError("source and target have different caps");
    const GradedSpace& s = *source_.space();
    const GradedSpace& t = *target_.space();
    std::vector<BasisElement> basis;
    for (int n = 1; n <= cap(); ++n) {
        for (const Word& w : wedge_basis(s, n)) {
            for (int e = 0; e < static_cast<int>(t.dimension()); ++e) {
                index_.emplace(std::make_pair(w, e), static_cast<int>(entries_.size()));
                entries_.emplace_back(w, e);
                basis.push_back({entry_name(s, t, w, e), t.degree(e) - word_degree(s, w) + n});
            }
        }
    }
    space_ = make_space(basis);
    const GradedSpace& u = *space_;

    std::vector<MultiMap> maps;
    // Q^U_1: the differential of the mapping complex.
    MultiMap q1(space_, space_, 1, 1);
    {
        std::vector<Element> values;
        for (std::size_t i = 0; i < entries_.size(); ++i) values.emplace_back(space_, u.degree(static_cast<int>(i)) + 1);
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            const auto& [w, e] = entries_[i];
            const Element* d = target_.map(1).stored({e});
            if (d == nullptr) continue;
            const int phi = bar::decalage_sign(s, w);
            // bar value decalage(w) * Q°_1 e on x = w; back to wedge with the same sign
            for (const auto& [f, c] : d->terms()) values[i].add_term(index(w, f), Rational(c * phi * phi));
        }
        for (int n = 1; n <= cap(); ++n) {
            for (const Word& x : wedge_basis(s, n)) {
                const CoChain image = bar::coderivation(source_.components(), CoChain{{x, Rational(1)}});
                const int phi_x = bar::decalage_sign(s, x);
                for (const auto& [w, c] : image) {
                    const int phi_w = bar::decalage_sign(s, w);
                    for (int e = 0; e < static_cast<int>(t.dimension()); ++e) {
                        const int i = index(w, e);
                        const int phi_deg = u.degree(i) - 1;
                        const int sign = -sign_of(phi_deg) * phi_w * phi_x;
                        values[static_cast<std::size_t>(i)].add_term(index(x, e), Rational(c * sign));
                    }
                }
            }
        }
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (!values[i].zero()) q1.set({static_cast<int>(i)}, values[i]);
    }
    maps.push_back(q1);

    // Q^U_n, n >= 2: convolution of Q°_n with the iterated coproduct.
    for (int n = 2; n <= cap(); ++n) {
        MultiMap qn(space_, space_, n, 2 - n);
        for (const Word& uw : words(n)) {
            std::vector<Word> pieces;
            Word merged;
            Word targets;
            for (int i : uw) {
                pieces.push_back(entries_[static_cast<std::size_t>(i)].first);
                targets.push_back(entries_[static_cast<std::size_t>(i)].second);
                merged.insert(merged.end(), pieces.back().begin(), pieces.back().end());
            }
            std::sort(merged.begin(), merged.end());
            if (!bar::sort(s, merged)) continue;
            auto sorted_targets = bar::sort(t, targets);
            if (!sorted_targets) continue;
            const Element qv = bar::component_value(target_.components(), sorted_targets->word);
            if (qv.zero()) continue;
            int fixed = sorted_targets->sign * bar::decalage_sign(u, uw) * bar::decalage_sign(s, merged);
            for (const Word& p : pieces) fixed *= bar::decalage_sign(s, p);
            Rational total(0);
            bar::for_each_splitting(s, merged, n, [&](const std::vector<Word>& blocks, int eps) {
                for (int i = 0; i < n; ++i)
                    if (blocks[static_cast<std::size_t>(i)] != pieces[static_cast<std::size_t>(i)]) return;
                long e = 0;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        e += static_cast<long>(u.degree(uw[static_cast<std::size_t>(j)]) - 1) *
                             bar::degree(s, blocks[static_cast<std::size_t>(i)]);
                total += eps * sign_of(e);
            });
            if (is_zero(total)) continue;
            Element value(space_, word_degree(u, uw) + 2 - n);
            for (const auto& [f, c] : qv.terms()) value.add_term(index(merged, f), Rational(c * total * fixed));
            qn.set(uw, value);
        }
        maps.push_back(qn);
    }
    structure_ = make_linfty(space_, maps, cap());
}

int ConvolutionAlgebra::index(const Word& word, int target_index) const {
    auto it = index_.find({word, target_index});
    if (it == index_.end()) throw InputError("word outside the truncated convolution algebra");
    return it->second;
}

std::vector<Word> ConvolutionAlgebra::words(int n) const {
    std::vector<Word> out;
    Word w;
    const int dim = static_cast<int>(entries_.size());
    auto rec = [&](auto&& self, int from, int budget) -> void {
        if (static_cast<int>(w.size()) == n) {
            out.push_back(w);
            return;
        }
        const int slots_left = n - static_cast<int>(w.size());
        for (int i = from; i < dim; ++i) {
            const int wt = weight(i);
            if (wt + (slots_left - 1) > budget) continue;
            if (!w.empty() && w.back() == i && space_->degree(i) % 2 == 0) continue;
            w.push_back(i);
            self(self, i, budget - wt);
            w.pop_back();
        }
    };
    rec(rec, 0, cap());
    return out;
}

WordFilter ConvolutionAlgebra::filter() const {
    return [this](const Word& uw) {
        int total = 0;
        for (int i : uw) total += weight(i);
        return total <= cap();
    };
}

ResidualReport ConvolutionAlgebra::check_relations() const {
    ResidualReport report;
    report.cap = cap();
    for (int n = 1; n <= cap(); ++n) {
        for (const Word& uw : words(n)) {
            Element r = relation_residual(structure_, uw);
            if (!r.zero()) report.residuals[n].push_back({uw, std::move(r)});
        }
    }
    return report;
}

Element ConvolutionAlgebra::to_u(const HomElement& a) const {
    if (a.cap() != cap() || !same_space(a.components().source(), source_.space()) ||
        !same_space(a.components().target(), target_.space()))
        throw InputError("element does not belong to this convolution algebra");
    Element out(space_, a.u_degree());
    for (int n = 1; n <= cap(); ++n)
        for (const auto& [w, v] : a.components().component(n).values())
            for (const auto& [e, c] : v.terms()) out.add_term(index(w, e), c);
    return out;
}

HomElement ConvolutionAlgebra::from_u(const Element& v) const {
    if (!same_space(v.space(), space_)) throw InputError("element does not belong to this convolution algebra");
    HomElement a(source_.space(), target_.space(), cap(), v.degree());
    for (const auto& [i, c] : v.terms()) {
        const auto& [w, e] = entry(i);
        Element value(target_.space(), target_.space()->degree(e));
        value.add_term(e, c);
        a.components().set(static_cast<int>(w.size()), w, a.components().component(static_cast<int>(w.size())).evaluate(w) + value);
    }
    return a;
}

ConvolutionAlgebra build_convolution(const LInftyStructure& source, const LInftyStructure& target) {
    return ConvolutionAlgebra(source, target);
}

HomElement morphism_to_mc(const MorphismComponents& F) {
    HomElement a(F.source().space(), F.target().space(), F.cap(), 1);
    a.components() = F.components();
    return a;
}

MorphismComponents mc_to_morphism(const HomElement& alpha, const LInftyStructure& source,
                                  const LInftyStructure& target) {
    if (alpha.u_degree() != 1)
        throw InputError("only U-degree 1 elements correspond to morphisms (got " + std::to_string(alpha.u_degree()) +
                         ")");
    return MorphismComponents(source, target, alpha.components());
}

TensorChain iterated_coproduct(const GradedSpace& space, const CoChain& x, int n) {
    if (n < 2) throw InputError("iterated coproduct needs at least two factors");
    TensorChain out;
    for (const auto& [w, c] : bar::convert(space, x)) {
        bar::for_each_splitting(space, w, n, [&](const std::vector<Word>& blocks, int sign) {
            Rational coef = c * sign;
            for (const Word& b : blocks) coef *= bar::decalage_sign(space, b);
            auto& slot = out[blocks];
            slot += coef;
            if (is_zero(slot)) out.erase(blocks);
        });
    }
    return out;
}

std::vector<std::pair<std::vector<Word>, int>> cotriple_coproduct(const GradedSpace& space, const Word& word) {
    std::vector<std::pair<std::vector<Word>, int>> out;
    bar::for_each_partition(space, word, [&](const std::vector<Word>& blocks, int sign) { out.emplace_back(blocks, sign); });
    return out;
}

CoChain partial_derivation(const ComponentMap& b, const ComponentMap& f, const std::vector<Word>& blocks) {
    if (f.degree() != 0) throw InputError("d(b, f) needs f of degree 0");
    const GradedSpace& s = *f.source();
    CoChain out;
    int before = 0;
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        std::vector<Element> factors;
        bool vanish = false;
        for (std::size_t p = 0; p < blocks.size() && !vanish; ++p) {
            const ComponentMap& m = p == i ? b : f;
            if (static_cast<int>(blocks[p].size()) > m.cap()) {
                vanish = true;
                break;
            }
            factors.push_back(bar::component_value(m, blocks[p]));
            vanish = factors.back().zero();
        }
        if (!vanish) bar::add_into(out, bar::product(*f.target(), factors), Rational(sign_of(static_cast<long>(b.degree()) * before)));
        before += bar::degree(s, blocks[i]);
    }
    return out;
}

CoChain reconstruct_defect(const MorphismComponents& F, const Word& word) {
    const GradedSpace& s = *F.source().space();
    ComponentMap psi(F.source().space(), F.target().space(), F.cap(), 1);
    for (int n = 1; n <= F.cap(); ++n)
        for (const Word& w : wedge_basis(s, n)) {
            Element r = morphism_residual(F, w);
            if (!r.zero()) psi.set(n, w, r);
        }
    CoChain bar_image;
    for (const auto& [blocks, sign] : cotriple_coproduct(s, word))
        bar::add_into(bar_image, partial_derivation(psi, F.components(), blocks), Rational(sign));
    return bar::scaled(bar::convert(*F.target().space(), bar_image), Rational(bar::decalage_sign(s, word)));
}

}  // namespace linf
