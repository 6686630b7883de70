#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "linfty/bar.hpp"
#include "linfty/components.hpp"

namespace linf {

/// An L-infinity structure {Q_n} (Q_n of degree 2 - n) on a finite graded
/// space, truncated at a weight cap. Maps above the cap are zero.
class LInftyStructure {
public:
    LInftyStructure() = default;
    /// Validates degrees; the structure is not checked for relations here.
    LInftyStructure(SpacePtr space, int cap, const std::vector<MultiMap>& maps);

    const SpacePtr& space() const { return space_; }
    int cap() const { return maps_.cap(); }
    /// Q_n for 1 <= n <= cap.
    const MultiMap& map(int n) const { return maps_.component(n); }
    const ComponentMap& components() const { return maps_; }

    friend bool operator==(const LInftyStructure& a, const LInftyStructure& b) {
        return same_space(a.space_, b.space_) && a.maps_ == b.maps_;
    }

private:
    SpacePtr space_;
    ComponentMap maps_;
};

using StructurePtr = std::shared_ptr<const LInftyStructure>;

LInftyStructure make_linfty(SpacePtr space, const std::vector<MultiMap>& maps, int cap);
/// Differential (weight 1, degree 1) and bracket (weight 2, degree 0); higher maps zero.
LInftyStructure from_dgla(SpacePtr space, const MultiMap& differential, const MultiMap& bracket, int cap = 3);

/// A linear map between truncated coalgebras, acting on chains in the wedge presentation.
class CoalgebraMap {
public:
    CoalgebraMap(SpacePtr source, SpacePtr target, int cap, std::function<CoChain(const CoChain&)> fn)
        : source_(std::move(source)), target_(std::move(target)), cap_(cap), fn_(std::move(fn)) {}

    CoChain operator()(const CoChain& x) const { return fn_(x); }
    CoChain on_word(const Word& w) const { return fn_(CoChain{{w, Rational(1)}}); }
    const SpacePtr& source() const { return source_; }
    const SpacePtr& target() const { return target_; }
    int cap() const { return cap_; }

private:
    SpacePtr source_;
    SpacePtr target_;
    int cap_;
    std::function<CoChain(const CoChain&)> fn_;
};

/// The codifferential Q on the truncated coalgebra determined by {Q_n}.
CoalgebraMap lift_coderivation(const LInftyStructure& L);

struct WordResidual {
    Word word;
    Element value;
};

/// Per-weight residuals; only nonzero ones are listed.
struct ResidualReport {
    int cap = 0;
    std::map<int, std::vector<WordResidual>> residuals;
    bool pass() const { return residuals.empty(); }
};

/// Words of weight <= cap accepted by `filter` (all words when empty).
using WordFilter = std::function<bool(const Word&)>;

/// pr o Q o Q on every canonical word up to the cap.
ResidualReport check_relations(const LInftyStructure& L, const WordFilter& filter = {});
/// Residual of the relations on one canonical word, in the wedge convention.
Element relation_residual(const LInftyStructure& L, const Word& word);

/// Homogeneous subspace of a graded space, kept in reduced echelon form per degree.
class Subspace {
public:
    explicit Subspace(SpacePtr space) : space_(std::move(space)) {}
    /// Adds v to the span; returns true when the dimension grew.
    bool insert(const Element& v);
    bool contains(const Element& v) const;
    std::size_t dimension() const;
    std::vector<Element> basis() const;
    const SpacePtr& space() const { return space_; }
    friend bool operator==(const Subspace& a, const Subspace& b);

private:
    Element reduce(const Element& v) const;
    SpacePtr space_;
    // degree -> rows, each with a leading basis index
    std::map<int, std::vector<std::pair<int, Element>>> rows_;
};

struct FiltrationChain {
    std::vector<Subspace> subspaces;  // subspaces[i - 1] = F^i
    bool stabilized = false;
    std::optional<int> nilpotent_depth;  // smallest i with F^i = 0
    bool nilpotent() const { return nilpotent_depth.has_value(); }
};

/// Lower central filtration F^1 = L, F^i = span of Q_k(F^{i_1}, ..., F^{i_k})
/// over i_1 + ... + i_k = max(i, k), closed under Q_1. Computed up to depth_bound.
FiltrationChain lower_central_series(const LInftyStructure& L, int depth_bound);

}  // namespace linf
