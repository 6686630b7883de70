#pragma once

// Homotopies between morphisms via the path object L° (x) Q[t, dt].

#include <map>
#include <optional>

#include "linfty/convolution.hpp"
#include "linfty/maurer_cartan.hpp"

namespace linf {

/// L° (x) Q[t] (+) L° (x) Q[t] dt truncated at t-degree t_cap. Basis names are
/// "e*t^j" and "e*t^j*dt"; dt has degree 1.
class PathAlgebra {
public:
    PathAlgebra(LInftyStructure base, int t_cap);

    const LInftyStructure& base() const { return base_; }
    int t_cap() const { return t_cap_; }
    const SpacePtr& space() const { return space_; }
    const LInftyStructure& structure() const { return structure_; }
    int index(int base_index, int power, bool dt) const;
    /// Words whose total t-degree fits under t_cap.
    WordFilter filter() const;

    /// Embedding e -> e*t^0 and the evaluations at t = 0 and t = 1.
    MorphismComponents iota() const;
    MorphismComponents evaluation(const Rational& t) const;

private:
    int t_degree(int index) const { return (index % per_) / 2; }

    LInftyStructure base_;
    int t_cap_;
    int per_;  // basis elements per base element
    SpacePtr space_;
    LInftyStructure structure_;
};

PathAlgebra build_path_algebra(const LInftyStructure& base, int t_cap);

/// h = h0 + dt h1 in U coordinates: h0 of U-degree 1, h1 of U-degree 0.
struct HomotopyElement {
    PolyVector h0;
    PolyVector h1;
};

/// h0 = the gauge flow of F along xi, h1 = xi.
HomotopyElement gauge_to_homotopy(const ConvolutionAlgebra& U, const MorphismComponents& F, const HomElement& xi);

struct HomotopyReport {
    int cap = 0;
    PolyVector curvature;                         // sum (1/n!) Q^U_n(h0, ..., h0)
    std::map<std::string, Element> curvature_at;  // samples "0", "1/2", "1"
    PolyVector flow_defect;                       // d h0/dt - sum (1/m!) Q^U_{m+1}(h0, ..., h0, h1)
    bool start_ok = false;
    bool end_ok = false;
    bool pass() const;
};

HomotopyReport check_homotopy(const ConvolutionAlgebra& U, const MorphismComponents& F,
                              const MorphismComponents& G, const HomotopyElement& h);

struct SplitResidual {
    PolyVector without_dt;  // U-degree 2
    PolyVector with_dt;     // U-degree 1
};

/// The Maurer-Cartan residual of h as a single morphism L -> L° (x) Q[t, dt],
/// sorted by the dt factor. Throws OverflowError if the products can leave t_cap.
SplitResidual unsplit_residual(const ConvolutionAlgebra& U, const HomotopyElement& h,
                               std::optional<int> t_cap = std::nullopt);

}  // namespace linf
