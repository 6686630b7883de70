#pragma once

#include "linfty/convolution.hpp"
#include "linfty/maurer_cartan.hpp"

namespace linf {

struct PerturbationRequest {
    MorphismComponents F;
    int n = 1;
    MultiMap H;  // weight n, degree -n
};

struct Perturbation {
    MorphismComponents morphism;
    GaugeFlow flow;  // alpha_t in U coordinates
};

/// The element of U-degree 0 supported on weight n with component H.
HomElement gauge_parameter(const MorphismComponents& F, const MultiMap& H);

/// Flows the Maurer-Cartan element of F along xi in the convolution algebra.
GaugeFlow flow_in_convolution(const ConvolutionAlgebra& U, const MorphismComponents& F, const HomElement& xi);

/// Perturbs F at weight n by H. Requires a verified morphism, H of weight n and
/// degree -n, and cap >= n + 1. Throws InputError or NonTerminationError.
Perturbation perturb(const PerturbationRequest& req);
Perturbation perturb(const ConvolutionAlgebra& U, const PerturbationRequest& req);

}  // namespace linf
