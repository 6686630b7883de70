#pragma once

// Exact graded linear algebra: spaces with a named, ordered basis, homogeneous
// vectors, canonical words for the weight-graded coalgebra basis and
// graded-antisymmetric multilinear maps.
//
// Sign convention: an adjacent transposition of entries of degrees p and q
// contributes -(-1)^{pq}, i.e. f(..., a, b, ...) = -(-1)^{|a||b|} f(..., b, a, ...).

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "linfty/errors.hpp"
#include "linfty/rational.hpp"

namespace linf {

struct BasisElement {
    std::string name;
    int degree = 0;
    friend bool operator==(const BasisElement&, const BasisElement&) = default;
};

class GradedSpace {
public:
    explicit GradedSpace(std::vector<BasisElement> basis);

    std::size_t dimension() const { return basis_.size(); }
    const std::vector<BasisElement>& basis() const { return basis_; }
    const std::string& name(int i) const { return basis_[static_cast<std::size_t>(i)].name; }
    int degree(int i) const { return basis_[static_cast<std::size_t>(i)].degree; }

    std::optional<int> find(std::string_view name) const;
    /// Index of a basis name; throws InputError for unknown names.
    int index(std::string_view name) const;
    std::vector<int> indices_of_degree(int degree) const;
    /// degree -> number of basis elements of that degree
    std::map<int, int> dimensions() const;

    friend bool operator==(const GradedSpace& a, const GradedSpace& b) { return a.basis_ == b.basis_; }

private:
    std::vector<BasisElement> basis_;
    std::unordered_map<std::string, int> lookup_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

SpacePtr make_space(std::vector<BasisElement> basis);
bool same_space(const SpacePtr& a, const SpacePtr& b);

/// Homogeneous vector with coefficients in C (Rational or Poly).
template <class C>
class BasicVector {
public:
    BasicVector() = default;
    BasicVector(SpacePtr space, int degree) : space_(std::move(space)), degree_(degree) {}

    static BasicVector basis(SpacePtr space, int index, C coefficient = C(Rational(1))) {
        const int d = space->degree(index);
        BasicVector v(std::move(space), d);
        v.add_term(index, coefficient);
        return v;
    }

    const SpacePtr& space() const { return space_; }
    int degree() const { return degree_; }
    const std::map<int, C>& terms() const { return terms_; }
    bool zero() const { return terms_.empty(); }

    C coefficient(int index) const {
        auto it = terms_.find(index);
        return it == terms_.end() ? C() : it->second;
    }

    void add_term(int index, const C& c) {
        if (is_zero(c)) return;
        if (space_->degree(index) != degree_)
            throw InputError("basis element '" + space_->name(index) + "' has degree " +
                             std::to_string(space_->degree(index)) + ", expected " + std::to_string(degree_));
        auto [it, inserted] = terms_.try_emplace(index, c);
        if (!inserted) {
            it->second += c;
            if (is_zero(it->second)) terms_.erase(it);
        }
    }

    BasicVector& operator+=(const BasicVector& o) {
        check_compatible(o);
        for (const auto& [i, c] : o.terms_) add_term(i, c);
        return *this;
    }
    BasicVector& operator-=(const BasicVector& o) {
        check_compatible(o);
        for (const auto& [i, c] : o.terms_) add_term(i, -c);
        return *this;
    }
    BasicVector& operator*=(const Rational& s) {
        if (is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [i, c] : terms_) c *= s;
        return *this;
    }
    friend BasicVector operator+(BasicVector a, const BasicVector& b) { return a += b; }
    friend BasicVector operator-(BasicVector a, const BasicVector& b) { return a -= b; }
    friend BasicVector operator*(const Rational& s, BasicVector a) { return a *= s; }
    BasicVector operator-() const {
        BasicVector r = *this;
        for (auto& [i, c] : r.terms_) c = -c;
        return r;
    }
    friend bool operator==(const BasicVector& a, const BasicVector& b) {
        if (a.zero() && b.zero()) return same_space(a.space_, b.space_);
        return a.degree_ == b.degree_ && a.terms_ == b.terms_ && same_space(a.space_, b.space_);
    }

private:
    void check_compatible(const BasicVector& o) const {
        if (!same_space(space_, o.space_)) throw InputError("vectors live in different spaces");
        if (degree_ != o.degree_ && !o.zero() && !zero())
            throw InputError("cannot combine vectors of degrees " + std::to_string(degree_) + " and " +
                             std::to_string(o.degree_));
    }

    SpacePtr space_;
    int degree_ = 0;
    std::map<int, C> terms_;
};

using Element = BasicVector<Rational>;

/// "1*x - 1/2*y"; the zero vector prints as "0".
std::string to_string(const Element& v);
/// Parses a linear combination such as "1*x + -1/2*y" or "x - y". The degree is
/// taken from the terms; `degree` is required when the text is "0".
Element parse_element(const SpacePtr& space, std::string_view text, std::optional<int> degree = std::nullopt);

/// A word is a tuple of basis indices; canonical words are sorted by index.
using Word = std::vector<int>;

struct SignedWord {
    Word word;
    int sign = 1;
};

/// Sign of one adjacent transposition of entries of degrees p and q: -(-1)^{pq}.
inline int transposition_sign(int p, int q) { return ((p * q) % 2 == 0) ? -1 : 1; }

/// Sign of reordering a tuple. `permutation[k]` is the original position of the
/// entry that ends up at position k (0-based). Throws InputError on malformed input.
int koszul_sign(std::span<const int> permutation, std::span<const int> degrees);

/// Sorts a tuple of basis indices into canonical order. Returns nullopt when the
/// word vanishes (an even-degree element repeats).
std::optional<SignedWord> canonicalize(const GradedSpace& space, Word tuple);
std::optional<SignedWord> canonicalize_word(const GradedSpace& space, const std::vector<std::string>& names);

/// Canonical words of a fixed weight in deterministic (lexicographic) order.
std::vector<Word> wedge_basis(const GradedSpace& space, int weight);
int word_degree(const GradedSpace& space, const Word& word);
std::string word_to_string(const GradedSpace& space, const Word& word);

/// Graded-antisymmetric multilinear map source^{(x)n} -> target of degree d,
/// stored sparsely on canonical words.
class MultiMap {
public:
    MultiMap() = default;
    MultiMap(SpacePtr source, SpacePtr target, int weight, int degree);

    const SpacePtr& source() const { return source_; }
    const SpacePtr& target() const { return target_; }
    int weight() const { return weight_; }
    int degree() const { return degree_; }
    const std::map<Word, Element>& values() const { return values_; }
    bool zero() const { return values_.empty(); }

    /// Sets the value on an arbitrary ordered tuple (stored canonically).
    /// Setting a value on a vanishing word is only allowed for the zero value.
    void set(const Word& tuple, const Element& value);
    void add(const Word& tuple, const Element& value);

    /// Value on an arbitrary ordered tuple of basis indices.
    Element evaluate(std::span<const int> tuple) const;
    const Element* stored(const Word& canonical) const;
    int output_degree(const Word& word) const { return word_degree(*source_, word) + degree_; }
    Element zero_output(const Word& word) const { return Element(target_, output_degree(word)); }

    friend bool operator==(const MultiMap& a, const MultiMap& b);

private:
    void check_value(const Word& tuple, const Element& value) const;

    SpacePtr source_;
    SpacePtr target_;
    int weight_ = 1;
    int degree_ = 0;
    std::map<Word, Element> values_;
};

/// `count` consecutive arguments equal to `vector`.
template <class C>
struct ArgBlock {
    const BasicVector<C>* vector;
    int count;
};

namespace detail {

template <class C>
C power(const C& c, int k) {
    C r = C(Rational(1));
    for (int i = 0; i < k; ++i) r = r * c;
    return r;
}

// Enumerates non-decreasing choices of `count` support indices of `v`,
// calling emit(indices, weight) with the multinomial weight.
template <class C, class Emit>
void choose_multiset(const BasicVector<C>& v, int count, Emit&& emit) {
    std::vector<std::pair<int, C>> support(v.terms().begin(), v.terms().end());
    std::vector<int> chosen;
    std::vector<int> mult(support.size(), 0);
    const Rational count_fact = factorial(count);
    auto rec = [&](auto&& self, std::size_t from, int left) -> void {
        if (left == 0) {
            C coef = C(count_fact);
            for (std::size_t i = 0; i < support.size(); ++i) {
                if (mult[i] == 0) continue;
                coef = coef * power(support[i].second, mult[i]);
                coef = coef * Rational(1 / factorial(mult[i]));
            }
            emit(chosen, coef);
            return;
        }
        for (std::size_t i = from; i < support.size(); ++i) {
            chosen.push_back(support[i].first);
            ++mult[i];
            self(self, i, left - 1);
            --mult[i];
            chosen.pop_back();
        }
    };
    rec(rec, 0, count);
}

}  // namespace detail

/// Multilinear evaluation f(v_1, ..., v_1, v_2, ...) on blocks of repeated arguments.
template <class C>
BasicVector<C> apply_map(const MultiMap& f, std::span<const ArgBlock<C>> blocks) {
    int total = 0;
    int out_degree = f.degree();
    for (const auto& b : blocks) {
        if (!same_space(b.vector->space(), f.source())) throw InputError("argument lives in the wrong space");
        total += b.count;
        out_degree += b.count * b.vector->degree();
    }
    if (total != f.weight())
        throw InputError("map of weight " + std::to_string(f.weight()) + " applied to " + std::to_string(total) +
                         " arguments");
    BasicVector<C> out(f.target(), out_degree);
    if (f.zero()) return out;
    for (const auto& b : blocks) {
        if (b.vector->zero()) return out;
        // Repeated even-degree arguments cancel pairwise.
        if (b.count >= 2 && b.vector->degree() % 2 == 0) return out;
    }
    Word tuple;
    auto rec = [&](auto&& self, std::size_t block, const C& coef) -> void {
        if (block == blocks.size()) {
            auto canon = canonicalize(*f.source(), tuple);
            if (!canon) return;
            const Element* value = f.stored(canon->word);
            if (value == nullptr) return;
            for (const auto& [i, r] : value->terms()) out.add_term(i, coef * Rational(r * canon->sign));
            return;
        }
        const auto& b = blocks[block];
        detail::choose_multiset(*b.vector, b.count, [&](const std::vector<int>& chosen, const C& w) {
            const auto mark = tuple.size();
            tuple.insert(tuple.end(), chosen.begin(), chosen.end());
            self(self, block + 1, coef * w);
            tuple.resize(mark);
        });
    };
    rec(rec, 0, C(Rational(1)));
    return out;
}

/// Convenience: f(v_1, ..., v_n) with every argument given once.
Element apply_map(const MultiMap& f, std::span<const Element> args);

}  // namespace linf
