#include "linfty/morphism.hpp"

#include <set>

namespace linf {

namespace {

void check_pair(const LInftyStructure& source, const LInftyStructure& target, const ComponentMap& c) {
    if (source.cap() != target.cap()) throw InputError("source and target have different caps");
    if (c.cap() != source.cap()) throw InputError("components have a different cap from the structures");
    if (c.degree() != 0) throw InputError("morphism components must have total degree 0");
    if (!same_space(c.source(), source.space()) || !same_space(c.target(), target.space()))
        throw InputError("components do not match the source and target spaces");
}

}  // namespace

MorphismComponents::MorphismComponents(LInftyStructure source, LInftyStructure target, ComponentMap components)
    : source_(std::move(source)), target_(std::move(target)), components_(std::move(components)) {
    check_pair(source_, target_, components_);
}

MorphismComponents::MorphismComponents(LInftyStructure source, LInftyStructure target)
    : source_(std::move(source)),
      target_(std::move(target)),
      components_(source_.space(), target_.space(), source_.cap(), 0) {
    check_pair(source_, target_, components_);
}

MorphismComponents MorphismComponents::identity(const LInftyStructure& L) {
    MorphismComponents F(L, L);
    MultiMap id(L.space(), L.space(), 1, 0);
    for (std::size_t i = 0; i < L.space()->dimension(); ++i)
        id.set({static_cast<int>(i)}, Element::basis(L.space(), static_cast<int>(i)));
    F.set_component(id);
    return F;
}

CoalgebraMap lift_morphism(const MorphismComponents& F) {
    const ComponentMap f = F.components();
    const SpacePtr s = F.source().space();
    const SpacePtr t = F.target().space();
    return CoalgebraMap(s, t, F.cap(), [f, s, t](const CoChain& x) {
        return bar::convert(*t, bar::coalgebra_map(f, bar::convert(*s, x)));
    });
}

namespace {

CoChain defect_bar(const MorphismComponents& F, const Word& word) {
    const CoChain x{{word, Rational(1)}};
    CoChain lhs = bar::coderivation(F.target().components(), bar::coalgebra_map(F.components(), x));
    CoChain rhs = bar::coalgebra_map(F.components(), bar::coderivation(F.source().components(), x));
    return bar::difference(std::move(lhs), rhs);
}

}  // namespace

CoChain morphism_defect(const MorphismComponents& F, const Word& word) {
    const CoChain x{{word, Rational(1)}};
    const int phi = bar::decalage_sign(*F.source().space(), word);
    return bar::scaled(bar::convert(*F.target().space(), defect_bar(F, word)), Rational(phi));
}

Element morphism_residual(const MorphismComponents& F, const Word& word) {
    const GradedSpace& s = *F.source().space();
    const int n = static_cast<int>(word.size());
    const CoChain x{{word, Rational(1)}};
    const int out_degree = word_degree(s, word) + 2 - n;
    Element lhs = bar::project(F.target().components(), bar::coalgebra_map(F.components(), x), out_degree);
    Element rhs = bar::project(F.components(), bar::coderivation(F.source().components(), x), out_degree);
    Element r = lhs - rhs;
    return bar::decalage_sign(s, word) == 1 ? r : -r;
}

ResidualReport check_morphism(const MorphismComponents& F) {
    ResidualReport report;
    report.cap = F.cap();
    for (int n = 1; n <= F.cap(); ++n) {
        for (const Word& w : wedge_basis(*F.source().space(), n)) {
            Element r = morphism_residual(F, w);
            if (!r.zero()) report.residuals[n].push_back({w, std::move(r)});
        }
    }
    return report;
}

MorphismComponents compose(const MorphismComponents& G, const MorphismComponents& F) {
    if (!(F.target() == G.source())) throw InputError("cannot compose: target of F differs from source of G");
    const GradedSpace& s = *F.source().space();
    MorphismComponents out(F.source(), G.target());
    for (int n = 1; n <= F.cap(); ++n) {
        MultiMap m(F.source().space(), G.target().space(), n, 1 - n);
        for (const Word& w : wedge_basis(s, n)) {
            const CoChain image = bar::coalgebra_map(F.components(), CoChain{{w, Rational(1)}});
            Element v = bar::project(G.components(), image, word_degree(s, w) + 1 - n);
            if (v.zero()) continue;
            m.set(w, bar::decalage_sign(s, w) == 1 ? v : -v);
        }
        out.set_component(std::move(m));
    }
    return out;
}

namespace {

std::vector<Rational> coordinates(const Element& v, const std::vector<int>& indices) {
    std::vector<Rational> out;
    out.reserve(indices.size());
    for (int i : indices) out.push_back(v.coefficient(i));
    return out;
}

Element from_coordinates(const SpacePtr& s, int degree, const std::vector<int>& indices,
                         const std::vector<Rational>& c) {
    Element v(s, degree);
    for (std::size_t k = 0; k < indices.size(); ++k) v.add_term(indices[k], c[k]);
    return v;
}

// Matrix of Q_1 from degree d to degree d + 1.
Matrix differential_matrix(const LInftyStructure& L, int d) {
    const auto src = L.space()->indices_of_degree(d);
    const auto dst = L.space()->indices_of_degree(d + 1);
    Matrix m(dst.size(), src.size());
    for (std::size_t c = 0; c < src.size(); ++c) {
        const Element* v = L.map(1).stored({src[c]});
        if (v == nullptr) continue;
        for (std::size_t r = 0; r < dst.size(); ++r) m(r, c) = v->coefficient(dst[r]);
    }
    return m;
}

std::set<int> degrees_of(const GradedSpace& s) {
    std::set<int> out;
    for (const auto& b : s.basis()) out.insert(b.degree);
    return out;
}

// Image of Q_1 in degree d, as coordinate columns over indices_of_degree(d).
std::vector<std::vector<Rational>> image_columns(const LInftyStructure& L, int d) {
    const Matrix m = differential_matrix(L, d - 1);
    std::vector<std::vector<Rational>> cols;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        std::vector<Rational> col(m.rows());
        for (std::size_t r = 0; r < m.rows(); ++r) col[r] = m(r, c);
        cols.push_back(col);
    }
    return cols;
}

}  // namespace

CohomologyReport cohomology(const LInftyStructure& L) {
    CohomologyReport report;
    for (int d : degrees_of(*L.space())) {
        const auto idx = L.space()->indices_of_degree(d);
        auto cols = image_columns(L, d);
        std::size_t r = rank(from_columns(idx.size(), cols));
        auto& reps = report.representatives[d];
        for (const auto& k : nullspace(differential_matrix(L, d))) {
            cols.push_back(k);
            const std::size_t grown = rank(from_columns(idx.size(), cols));
            if (grown > r) {
                r = grown;
                reps.push_back(from_coordinates(L.space(), d, idx, k));
            } else {
                cols.pop_back();
            }
        }
        report.dimensions[d] = static_cast<int>(reps.size());
    }
    return report;
}

QuasiIsoReport is_quasi_iso(const MorphismComponents& F) {
    QuasiIsoReport report;
    const CohomologyReport hs = cohomology(F.source());
    const CohomologyReport ht = cohomology(F.target());
    std::set<int> degrees = degrees_of(*F.source().space());
    for (int d : degrees_of(*F.target().space())) degrees.insert(d);
    for (int d : degrees) {
        const auto src_reps = hs.representatives.count(d) ? hs.representatives.at(d) : std::vector<Element>{};
        const auto dst_reps = ht.representatives.count(d) ? ht.representatives.at(d) : std::vector<Element>{};
        bool ok = src_reps.size() == dst_reps.size();
        if (ok && !src_reps.empty()) {
            const auto idx = F.target().space()->indices_of_degree(d);
            // Columns: representatives of H(L°) first, then the image of Q°_1.
            auto basis_cols = std::vector<std::vector<Rational>>{};
            for (const auto& r : dst_reps) basis_cols.push_back(coordinates(r, idx));
            for (const auto& c : image_columns(F.target(), d)) basis_cols.push_back(c);
            const Matrix B = from_columns(idx.size(), basis_cols);
            Matrix induced(dst_reps.size(), src_reps.size());
            for (std::size_t j = 0; j < src_reps.size(); ++j) {
                const Element args[] = {src_reps[j]};
                const Element image = apply_map(F.component(1), std::span<const Element>(args));
                auto sol = solve(B, coordinates(image, idx));
                if (!sol) throw InputError("F_1 does not map cocycles to cocycles; check the morphism first");
                for (std::size_t i = 0; i < dst_reps.size(); ++i) induced(i, j) = (*sol)[i];
            }
            ok = rank(induced) == src_reps.size();
        }
        report.per_degree[d] = ok;
        report.verdict = report.verdict && ok;
    }
    return report;
}

}  // namespace linf
