#include "linfty/lemma_one.hpp"

namespace linf {

HomElement gauge_parameter(const MorphismComponents& F, const MultiMap& H) {
    HomElement xi(F.source().space(), F.target().space(), F.cap(), 0);
    xi.components().set_component(H);
    return xi;
}

GaugeFlow flow_in_convolution(const ConvolutionAlgebra& U, const MorphismComponents& F, const HomElement& xi) {
    if (xi.u_degree() != 0) throw InputError("the gauge parameter must have U-degree 0");
    // U / F^{cap+1} U is nilpotent: every Picard step raises the weight of the correction.
    return gauge_flow(U.structure(), U.to_u(morphism_to_mc(F)), U.to_u(xi), U.cap() + 2);
}

Perturbation perturb(const PerturbationRequest& req) {
    return perturb(build_convolution(req.F.source(), req.F.target()), req);
}

Perturbation perturb(const ConvolutionAlgebra& U, const PerturbationRequest& req) {
    const MorphismComponents& F = req.F;
    if (req.n < 1) throw InputError("perturbation weight must be at least 1");
    if (F.cap() < req.n + 1)
        throw InputError("cap " + std::to_string(F.cap()) + " too small: perturbing at weight " +
                         std::to_string(req.n) + " needs cap >= " + std::to_string(req.n + 1));
    if (req.H.weight() != req.n)
        throw InputError("H has weight " + std::to_string(req.H.weight()) + ", expected " + std::to_string(req.n));
    if (req.H.degree() != -req.n)
        throw InputError("H has degree " + std::to_string(req.H.degree()) + ", expected " + std::to_string(-req.n));
    if (!same_space(req.H.source(), F.source().space()) || !same_space(req.H.target(), F.target().space()))
        throw InputError("H does not map between the morphism's spaces");
    if (!(U.source() == F.source()) || !(U.target() == F.target()))
        throw InputError("convolution algebra built for other structures");
    if (!check_morphism(F).pass()) throw InputError("F is not an L-infinity morphism up to the cap");
    GaugeFlow flow = flow_in_convolution(U, F, gauge_parameter(F, req.H));
    const HomElement end = U.from_u(evaluate(flow.path, Rational(1)));
    return {mc_to_morphism(end, F.source(), F.target()), std::move(flow)};
}

}  // namespace linf
