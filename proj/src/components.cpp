#include "linfty/components.hpp"

namespace linf {

ComponentMap::ComponentMap(SpacePtr source, SpacePtr target, int cap, int degree)
    : source_(std::move(source)), target_(std::move(target)), cap_(cap), degree_(degree) {
    if (cap_ < 1) throw InputError("weight cap must be at least 1");
    for (int n = 1; n <= cap_; ++n) maps_.emplace_back(source_, target_, n, component_degree(n));
}

void ComponentMap::check_weight(int weight) const {
    if (weight < 1 || weight > cap_)
        throw InputError("weight " + std::to_string(weight) + " outside 1.." + std::to_string(cap_));
}

const MultiMap& ComponentMap::component(int weight) const {
    check_weight(weight);
    return maps_[static_cast<std::size_t>(weight - 1)];
}

void ComponentMap::set_component(MultiMap m) {
    check_weight(m.weight());
    if (m.degree() != component_degree(m.weight()))
        throw StructuralError(m.weight(), "component of weight " + std::to_string(m.weight()) + " has degree " +
                                              std::to_string(m.degree()) + ", expected " +
                                              std::to_string(component_degree(m.weight())));
    if (!same_space(m.source(), source_) || !same_space(m.target(), target_))
        throw InputError("component of weight " + std::to_string(m.weight()) + " has the wrong source or target");
    maps_[static_cast<std::size_t>(m.weight() - 1)] = std::move(m);
}

void ComponentMap::set(int weight, const Word& tuple, const Element& value) {
    check_weight(weight);
    maps_[static_cast<std::size_t>(weight - 1)].set(tuple, value);
}

bool ComponentMap::zero() const {
    for (const auto& m : maps_)
        if (!m.zero()) return false;
    return true;
}

int ComponentMap::lowest_weight() const {
    for (int n = 1; n <= cap_; ++n)
        if (!maps_[static_cast<std::size_t>(n - 1)].zero()) return n;
    return cap_ + 1;
}

namespace {

MultiMap combine(const MultiMap& a, const MultiMap& b, int sign) {
    MultiMap out = a;
    for (const auto& [w, v] : b.values()) out.add(w, sign == 1 ? v : -v);
    return out;
}

}  // namespace

ComponentMap& ComponentMap::operator+=(const ComponentMap& o) {
    if (o.cap_ != cap_ || o.degree_ != degree_ || !same_space(o.source_, source_) || !same_space(o.target_, target_))
        throw InputError("cannot add component maps of different shape");
    for (std::size_t i = 0; i < maps_.size(); ++i) maps_[i] = combine(maps_[i], o.maps_[i], 1);
    return *this;
}

ComponentMap& ComponentMap::operator-=(const ComponentMap& o) {
    if (o.cap_ != cap_ || o.degree_ != degree_ || !same_space(o.source_, source_) || !same_space(o.target_, target_))
        throw InputError("cannot subtract component maps of different shape");
    for (std::size_t i = 0; i < maps_.size(); ++i) maps_[i] = combine(maps_[i], o.maps_[i], -1);
    return *this;
}

bool operator==(const ComponentMap& a, const ComponentMap& b) {
    return a.cap_ == b.cap_ && a.degree_ == b.degree_ && a.maps_ == b.maps_;
}

}  // namespace linf
