#pragma once

#include <map>
#include <optional>
#include <stdexcept>

#include "linfty/structure.hpp"

namespace linf {

using PolyVector = BasicVector<Poly>;

PolyVector constant_path(const Element& v);
/// Coefficient of t^power.
Element coefficient(const PolyVector& v, int power);
Element evaluate(const PolyVector& v, const Rational& t);
PolyVector derivative(const PolyVector& v);
/// Antiderivative vanishing at t = 0.
PolyVector integral(const PolyVector& v);
int max_power(const PolyVector& v);
/// "t^0: 1*x; t^1: -1*y"
std::string to_string(const PolyVector& v);

/// How the sum sum_n (1/n!) Q_n(pi, ..., pi) is justified to terminate.
enum class Truncation {
    cap,               // maps above the weight cap are zero by convention
    require_nilpotent  // refuse unless the lower central series dies
};

struct MCReport {
    int cap = 0;
    Truncation truncation = Truncation::cap;
    Element residual;
    std::map<int, Element> contributions;  // weight n -> (1/n!) Q_n(pi, ..., pi), nonzero only
    bool pass() const { return residual.zero(); }
};

/// Throws NonTerminationError for Truncation::require_nilpotent on a structure
/// whose lower central series does not die within `depth_bound`.
MCReport mc_residual(const LInftyStructure& L, const Element& pi, Truncation truncation = Truncation::cap,
                     int depth_bound = 8);
/// The Maurer-Cartan expression for a polynomial path, as a polynomial.
PolyVector mc_residual(const LInftyStructure& L, const PolyVector& pi);

class NotMaurerCartan : public std::runtime_error {
public:
    explicit NotMaurerCartan(Element residual);
    const Element& residual() const { return residual_; }

private:
    Element residual_;
};

/// Q^pi_n = sum_{m >= 0} (1/m!) Q_{m+n}(pi, ..., pi, -). Throws NotMaurerCartan.
LInftyStructure twist(const LInftyStructure& L, const Element& pi);

/// Q^pi_1(xi) = sum_{m >= 0} (1/m!) Q_{m+1}(pi, ..., pi, xi) along a path.
PolyVector flow_velocity(const LInftyStructure& L, const PolyVector& pi, const PolyVector& xi);

struct GaugeFlow {
    PolyVector path;
    int iterations = 0;  // Picard steps until an iterate repeated
};

/// Solves d/dt pi_t = Q^{pi_t}_1(xi), pi_0 = pi0 by Picard iteration. The bound
/// defaults to (lower central depth) + 2. Throws NonTerminationError.
GaugeFlow gauge_flow(const LInftyStructure& L, const Element& pi0, const Element& xi,
                     std::optional<int> iteration_bound = std::nullopt);

}  // namespace linf
