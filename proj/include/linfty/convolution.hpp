#pragma once

// The convolution algebra U = s Hom(C(L), L°) truncated at the weight cap.
// U has one basis element E_{w,e} per canonical word w of L (weight <= cap) and
// basis element e of L°; its U-degree is |e| - |w| + weight(w). An element of
// U-degree u is a collection of components alpha_n of degree u - n, and its
// coordinate on E_{w,e} is the coefficient of e in alpha_{|w|}(w).

#include <map>
#include <utility>
#include <vector>

#include "linfty/morphism.hpp"

namespace linf {

class HomElement {
public:
    HomElement(SpacePtr source, SpacePtr target, int cap, int u_degree);

    int u_degree() const { return u_degree_; }
    int cap() const { return components_.cap(); }
    const ComponentMap& components() const { return components_; }
    ComponentMap& components() { return components_; }
    /// Largest k with alpha_n = 0 for n < k (cap + 1 for zero).
    int filtration_level() const { return components_.lowest_weight(); }

    friend bool operator==(const HomElement& a, const HomElement& b) {
        return a.u_degree_ == b.u_degree_ && a.components_ == b.components_;
    }

private:
    int u_degree_;
    ComponentMap components_;
};

class ConvolutionAlgebra {
public:
    ConvolutionAlgebra(LInftyStructure source, LInftyStructure target);

    const LInftyStructure& source() const { return source_; }
    const LInftyStructure& target() const { return target_; }
    int cap() const { return source_.cap(); }
    const SpacePtr& space() const { return space_; }
    /// Q^U as a structure on the finite-dimensional quotient U / F^{cap+1} U.
    const LInftyStructure& structure() const { return structure_; }

    int index(const Word& word, int target_index) const;
    const std::pair<Word, int>& entry(int u_index) const { return entries_[static_cast<std::size_t>(u_index)]; }
    int weight(int u_index) const { return static_cast<int>(entry(u_index).first.size()); }
    /// Canonical U-words of length n whose total L-weight is at most the cap.
    std::vector<Word> words(int n) const;
    WordFilter filter() const;

    Element to_u(const HomElement& a) const;
    HomElement from_u(const Element& v) const;
    /// Residuals of the relations of Q^U on all words accepted by filter().
    ResidualReport check_relations() const;

private:
    LInftyStructure source_;
    LInftyStructure target_;
    std::vector<std::pair<Word, int>> entries_;
    std::map<std::pair<Word, int>, int> index_;
    SpacePtr space_;
    LInftyStructure structure_;
};

ConvolutionAlgebra build_convolution(const LInftyStructure& source, const LInftyStructure& target);

HomElement morphism_to_mc(const MorphismComponents& F);
/// Throws InputError unless the U-degree is 1.
MorphismComponents mc_to_morphism(const HomElement& alpha, const LInftyStructure& source,
                                  const LInftyStructure& target);

/// Tensor of words, each factor in the wedge presentation.
using TensorChain = std::map<std::vector<Word>, Rational>;

/// Reduced iterated coproduct into n nonempty factors.
TensorChain iterated_coproduct(const GradedSpace& space, const CoChain& x, int n);

/// The cotriple coproduct nu on one canonical word: unordered partitions into
/// blocks with their signs (bar presentation).
std::vector<std::pair<std::vector<Word>, int>> cotriple_coproduct(const GradedSpace& space, const Word& word);

/// d(b, f) on a tuple of blocks: sum over slots i of
/// (-1)^{|b| (|y_1| + ... + |y_{i-1}|)} f(y_1) ... b(y_i) ... f(y_r), in the bar presentation.
CoChain partial_derivation(const ComponentMap& b, const ComponentMap& f, const std::vector<Word>& blocks);

/// d(pr Psi, pr F) o nu on one canonical word, in the wedge presentation.
CoChain reconstruct_defect(const MorphismComponents& F, const Word& word);

}  // namespace linf
