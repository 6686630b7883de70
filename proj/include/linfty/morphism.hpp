#pragma once

#include <map>
#include <vector>

#include "linfty/linalg.hpp"
#include "linfty/structure.hpp"

namespace linf {

/// Components F_n : L^{(x)n} -> L° of degree 1 - n.
class MorphismComponents {
public:
    MorphismComponents(LInftyStructure source, LInftyStructure target, ComponentMap components);
    /// All components zero.
    MorphismComponents(LInftyStructure source, LInftyStructure target);
    static MorphismComponents identity(const LInftyStructure& L);

    const LInftyStructure& source() const { return source_; }
    const LInftyStructure& target() const { return target_; }
    int cap() const { return components_.cap(); }
    const ComponentMap& components() const { return components_; }
    const MultiMap& component(int n) const { return components_.component(n); }
    void set_component(MultiMap m) { components_.set_component(std::move(m)); }

    friend bool operator==(const MorphismComponents& a, const MorphismComponents& b) {
        return a.source_ == b.source_ && a.target_ == b.target_ && a.components_ == b.components_;
    }

private:
    LInftyStructure source_;
    LInftyStructure target_;
    ComponentMap components_;
};

CoalgebraMap lift_morphism(const MorphismComponents& F);

/// Psi_n on one canonical word: pr o (Q° F - F Q).
Element morphism_residual(const MorphismComponents& F, const Word& word);
/// (Q° F - F Q) on one canonical word, as a chain in the wedge presentation.
CoChain morphism_defect(const MorphismComponents& F, const Word& word);
ResidualReport check_morphism(const MorphismComponents& F);

MorphismComponents compose(const MorphismComponents& G, const MorphismComponents& F);

struct CohomologyReport {
    std::map<int, int> dimensions;                       // degree -> dim H^d (every degree of the space)
    std::map<int, std::vector<Element>> representatives;  // cocycles spanning a complement of the image
};

CohomologyReport cohomology(const LInftyStructure& L);

struct QuasiIsoReport {
    std::map<int, bool> per_degree;
    bool verdict = true;
};

/// Whether F_1 induces an isomorphism on Q_1-cohomology.
QuasiIsoReport is_quasi_iso(const MorphismComponents& F);

}  // namespace linf
