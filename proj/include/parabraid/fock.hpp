#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "parabraid/braided.hpp"
#include "parabraid/freealg.hpp"
#include "parabraid/hopf.hpp"

namespace parabraid {

// Occupation-number state (k_1, ..., k_m) in the unnormalized convention
// e_k = (b+)^k |0>, so the Gram weight of a state is prod_i k_i!.
struct Occupation {
    std::vector<int> counts;

    int degree() const;
    Parity parity() const { return static_cast<Parity>(degree() % 2); }
    friend auto operator<=>(const Occupation&, const Occupation&) = default;
};

std::string to_string(const Occupation& occ);

// Sparse vector over a graded basis, keyed by basis index.
using Vec = std::map<int, Rational>;

Vec& add_scaled(Vec& target, const Vec& source, const Rational& c);

// Basis of the m-mode boson Fock space truncated at total degree <= cutoff,
// ordered by degree then lexicographically by counts.
class BosonBasis {
  public:
    BosonBasis(int modes, int cutoff);

    int modes() const { return modes_; }
    int cutoff() const { return cutoff_; }
    const SpacePtr& space() const { return space_; }
    int dim() const { return static_cast<int>(states_.size()); }
    const Occupation& state(int index) const { return states_[static_cast<std::size_t>(index)]; }
    int index_of(const Occupation& occ) const;

    // e_k -> e_{k+1_i} with coefficient 1 (dropped past the cutoff); odd.
    SparseOperator raise_op(int mode) const;
    // e_k -> k_i e_{k-1_i}; annihilates the mode-i vacuum; odd.
    SparseOperator lower_op(int mode) const;
    // <e_k, e_k> = prod_i k_i!
    Rational gram_diag(int index) const;

  private:
    int modes_;
    int cutoff_;
    std::vector<Occupation> states_;
    std::map<std::vector<int>, int> index_;
    SpacePtr space_;
};

// p-fold braided tensor power of the truncated boson Fock space, truncated
// again at total degree <= cutoff across all slots.
class TensorFock {
  public:
    TensorFock(int order, int modes, int cutoff);

    int order() const { return order_; }
    int modes() const { return modes_; }
    int cutoff() const { return cutoff_; }
    const BosonBasis& factor() const { return factor_; }
    const TensorSpace& tensor() const { return tensor_; }
    const SpacePtr& space() const { return tensor_.composite(); }
    int dim() const { return tensor_.dim(); }
    int vacuum_index() const { return vacuum_; }

    // sum_r embed_at(boson op for (mode, sign), r); odd, degree +-1.
    SparseOperator green(int mode, Sign sign) const;

    Rational gram_diag(int index) const;
    Rational inner(const Vec& a, const Vec& b) const;
    int state_degree(int index) const { return space()->degree(index); }

  private:
    int order_;
    int modes_;
    int cutoff_;
    BosonBasis factor_;
    TensorSpace tensor_;
    int vacuum_;
};

// Generator symbol -> operator, all on one space.
using GenAssignment = std::map<GenSym, SparseOperator>;

GenAssignment green_assignment(const TensorFock& fock);

SparseOperator word_operator(const Word& w, const GenAssignment& assignment,
                             const SpacePtr& space);
SparseOperator poly_operator(const NCPoly& p, const GenAssignment& assignment,
                             const SpacePtr& space);
// Braided action of a tensor polynomial on a product of modules, one
// generator assignment per slot.
SparseOperator tensorpoly_operator(const TensorPoly& t, const TensorSpace& product,
                                   const std::vector<GenAssignment>& slot_assignments);

struct RelatorCheck {
    int relator_index = 0;
    std::string relator;
    bool pass = false;
    int max_degree_checked = -1;  // top of the safe domain
    std::string witness;          // first offending state and image, empty on pass
};

struct RelatorReport {
    bool pass = false;
    std::vector<RelatorCheck> checks;
};

// Evaluates each relator as an operator and requires it to vanish on every
// basis state whose degree + relator top degree stays within the cutoff.
RelatorReport verify_relators_on_space(const std::vector<NCPoly>& relators,
                                       const GenAssignment& assignment, const SpacePtr& space,
                                       int cutoff);

// Exact incremental row reduction over ambient coordinates with expansion
// tracking: each accepted vector can later be re-expressed in terms of the
// accepted ones.
class SpanSolver {
  public:
    int size() const { return count_; }
    // Adds v if independent of the accepted set; returns whether it was added.
    bool add(const Vec& v);
    bool contains(const Vec& v) const;
    // Coefficients over the accepted vectors, or nullopt if v is outside.
    std::optional<std::map<int, Rational>> express(const Vec& v) const;

  private:
    struct Row {
        Vec reduced;                        // leading coefficient 1
        std::map<int, Rational> expansion;  // over accepted ordinals
    };
    std::map<int, int> pivot_to_row_;
    std::vector<Row> rows_;
    int count_ = 0;
};

// Vacuum-generated graded basis of the Fock-like submodule F(p), with
// provenance creation words and the exact Gram matrix.
struct SubmoduleBasis {
    std::shared_ptr<const TensorFock> ambient;
    std::vector<Vec> vectors;
    std::vector<Word> provenance;             // words over raising symbols
    std::vector<int> degrees;
    std::vector<std::vector<int>> by_degree;  // vector indices per degree 0..cutoff
    std::vector<std::vector<Rational>> gram;

    int dim() const { return static_cast<int>(vectors.size()); }
    int degree_dim(int d) const { return static_cast<int>(by_degree[static_cast<std::size_t>(d)].size()); }
};

// Breadth-first span from the vacuum under all raising images, with greedy
// exact rank tests in creation-word order; verifies the span is also stable
// under the lowering images (degree permitting).
SubmoduleBasis focklike_closure(int order, int modes, int cutoff);

const std::vector<std::vector<Rational>>& gram_of_submodule(const SubmoduleBasis& basis);

// Exact pivoted LDL^T on every degree block; true iff all pivots positive.
bool gram_positive_definite(const SubmoduleBasis& basis);

struct MatrixElementEntry {
    int mode = 0;
    Sign sign = Sign::plus;
    int from = 0;  // orthogonal-basis index
    int to = 0;
    Rational value;
};

struct MatrixElementTables {
    std::vector<Rational> ortho_norms;  // squared norms of the orthogonalized basis
    std::vector<MatrixElementEntry> entries;
};

// Unnormalized Gram-Schmidt per degree block and matrix elements of the
// raising/lowering images in that orthogonal basis.  Raising entries out of
// the top degree block are omitted (they would be truncation artifacts).
MatrixElementTables matrix_elements(const SubmoduleBasis& basis);

struct SingleParabosonProfile {
    int order = 1;
    int n_max = 0;
    std::vector<Rational> norms;     // ||f_n||^2 for n = 0..n_max+1
    std::vector<Rational> ratios;    // norms[n+1]/norms[n] for n = 0..n_max
    std::vector<Rational> lowering;  // c_n with B- f_n = c_n f_{n-1}, n = 1..n_max+1
    bool matches_expected = false;   // ratios 2n+p / 2n+2, lowering 2n / 2n+p
};

SingleParabosonProfile single_paraboson_profile(int order, int n_max);

struct DimensionTable {
    int order = 1;
    int modes = 1;
    int cutoff = 0;
    std::vector<int> submodule_dims;  // per degree 0..cutoff
    std::vector<int> full_dims;       // per degree 0..cutoff
    bool deficit_witnessed = false;   // some degree with submodule < full
};

DimensionTable dimension_table(const SubmoduleBasis& basis);

}  // namespace parabraid
