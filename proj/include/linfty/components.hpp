#pragma once

#include <vector>

#include "linfty/graded.hpp"

namespace linf {

/// A map f out of the weight-truncated coalgebra, given by its components
/// f_n : source^{(x)n} -> target for 1 <= n <= cap. A map of total degree |f|
/// has components of degree |f| + 1 - n.
class ComponentMap {
public:
    ComponentMap() = default;
    ComponentMap(SpacePtr source, SpacePtr target, int cap, int degree);

    const SpacePtr& source() const { return source_; }
    const SpacePtr& target() const { return target_; }
    int cap() const { return cap_; }
    int degree() const { return degree_; }
    int component_degree(int weight) const { return degree_ + 1 - weight; }

    /// Component of weight n (1 <= n <= cap); absent components are zero maps.
    const MultiMap& component(int weight) const;
    /// Replaces the component of the map's weight. Throws StructuralError on a degree mismatch.
    void set_component(MultiMap m);
    void set(int weight, const Word& tuple, const Element& value);

    bool zero() const;
    /// Smallest weight carrying a nonzero component, or cap + 1 for the zero map.
    int lowest_weight() const;

    ComponentMap& operator+=(const ComponentMap& o);
    ComponentMap& operator-=(const ComponentMap& o);
    friend ComponentMap operator+(ComponentMap a, const ComponentMap& b) { return a += b; }
    friend ComponentMap operator-(ComponentMap a, const ComponentMap& b) { return a -= b; }
    friend bool operator==(const ComponentMap& a, const ComponentMap& b);

private:
    void check_weight(int weight) const;

    SpacePtr source_;
    SpacePtr target_;
    int cap_ = 0;
    int degree_ = 0;
    std::vector<MultiMap> maps_;  // index n - 1
};

}  // namespace linf
