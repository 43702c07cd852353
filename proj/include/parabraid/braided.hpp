#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parabraid/freealg.hpp"
#include "parabraid/rational.hpp"

namespace parabraid {

// Finite graded basis.  Every basis element carries a nonnegative degree;
// its parity is degree mod 2.  Abstract (non-Fock) spaces simply use
// degrees 0 and 1.
class GradedSpace {
  public:
    GradedSpace() = default;
    GradedSpace(std::vector<int> degrees, std::vector<std::string> labels);

    int dim() const { return static_cast<int>(degrees_.size()); }
    int degree(int i) const { return degrees_[static_cast<std::size_t>(i)]; }
    Parity parity(int i) const { return static_cast<Parity>(degrees_[static_cast<std::size_t>(i)] % 2); }
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }

    friend bool operator==(const GradedSpace& a, const GradedSpace& b) {
        return a.degrees_ == b.degrees_;
    }

  private:
    std::vector<int> degrees_;
    std::vector<std::string> labels_;
};

using SpacePtr = std::shared_ptr<const GradedSpace>;

// Sparse linear map between graded spaces with a parity label; every entry
// must connect column parity to row parity shifted by the operator parity
// (checked at construction).
class SparseOperator {
  public:
    using Columns = std::map<int, std::map<int, Rational>>;  // col -> row -> coeff

    SparseOperator(SpacePtr domain, SpacePtr codomain, Parity parity, Columns entries);

    static SparseOperator zero(SpacePtr domain, SpacePtr codomain, Parity parity);
    static SparseOperator identity(SpacePtr space);

    const SpacePtr& domain() const { return domain_; }
    const SpacePtr& codomain() const { return codomain_; }
    Parity parity() const { return parity_; }
    const Columns& columns() const { return cols_; }
    bool is_zero() const { return cols_.empty(); }
    std::size_t entry_count() const;
    Rational entry(int row, int col) const;

    // Image of the basis vector `col`; empty map when the column vanishes.
    std::map<int, Rational> apply_basis(int col) const;
    std::map<int, Rational> apply(const std::map<int, Rational>& vec) const;

    SparseOperator& operator+=(const SparseOperator& other);
    SparseOperator& operator-=(const SparseOperator& other);
    SparseOperator& operator*=(const Rational& c);
    friend SparseOperator operator+(SparseOperator a, const SparseOperator& b) { return a += b; }
    friend SparseOperator operator-(SparseOperator a, const SparseOperator& b) { return a -= b; }
    friend SparseOperator operator*(const Rational& c, SparseOperator a) { return a *= c; }
    friend bool operator==(const SparseOperator& a, const SparseOperator& b) {
        return a.cols_ == b.cols_;
    }

  private:
    SpacePtr domain_;
    SpacePtr codomain_;
    Parity parity_;
    Columns cols_;
};

// a after b (matrix product a*b).
SparseOperator compose(const SparseOperator& a, const SparseOperator& b);
SparseOperator commutator(const SparseOperator& a, const SparseOperator& b);
SparseOperator anticommutator(const SparseOperator& a, const SparseOperator& b);

// Tensor product of graded factors.  The composite basis consists of tuples
// of factor indices, mixed-radix ordered with the leftmost factor most
// significant.  An optional cap restricts the basis to tuples whose total
// degree is at most the cap; slot operators silently truncate (drop) images
// that fall outside the retained basis.
class TensorSpace {
  public:
    TensorSpace(std::vector<SpacePtr> factors, std::optional<int> max_total_degree = std::nullopt);

    int factor_count() const { return static_cast<int>(factors_.size()); }
    const SpacePtr& factor(int slot) const { return factors_[static_cast<std::size_t>(slot)]; }
    const SpacePtr& composite() const { return composite_; }
    std::optional<int> cap() const { return cap_; }

    int dim() const { return static_cast<int>(tuples_.size()); }
    const std::vector<int>& tuple_of(int index) const { return tuples_[static_cast<std::size_t>(index)]; }
    // -1 when the tuple is outside the retained basis.
    int index_of(const std::vector<int>& tuple) const;

  private:
    std::vector<SpacePtr> factors_;
    std::optional<int> cap_;
    std::vector<std::vector<int>> tuples_;
    std::map<std::vector<int>, int> index_;
    SpacePtr composite_;
};

// Sign rule (-1)^{|v||w|} w (x) v on a two-factor product: returns the image
// of `vec` (coordinates on `from`) as coordinates on `to`, which must be the
// factor-swapped product.
std::map<int, Rational> braid_swap(const TensorSpace& from, const TensorSpace& to,
                                   const std::map<int, Rational>& vec);

// op acting on slot `slot` (0 = leftmost) and identity elsewhere, times the
// sign (-1)^{|op| * (degree of the tuple prefix before slot)}.
SparseOperator embed_at(const SparseOperator& op, int slot, const TensorSpace& space);

}  // namespace parabraid
