#pragma once

#include <map>
#include <string>
#include <vector>

#include "parabraid/freealg.hpp"

namespace parabraid {

// Echelonized spanning set of the degree-<=D slice of a two-sided ideal:
// all rational combinations of u*r*v with r a relator and
// degree(u) + top_degree(r) + degree(v) <= D.  Rows are kept in reduced
// echelon form (distinct leading words, leading coefficient 1, no row
// contains another row's leading word), so the basis is canonical for the
// spanned subspace.
//
// Membership is a semi-decision: contains() == true proves membership in
// the full ideal; false only says the element is not reachable at this
// filtration bound.
class TruncatedIdealBasis {
  public:
    TruncatedIdealBasis(std::vector<NCPoly> relators, int mode_count, int bound);

    int mode_count() const { return mode_count_; }
    int bound() const { return bound_; }
    const std::vector<NCPoly>& relators() const { return relators_; }
    const std::vector<NCPoly>& rows() const { return rows_; }
    int rank() const { return static_cast<int>(rows_.size()); }

    // Normal representative of p modulo the span: no term of the result is a
    // leading word of any row.  Linear; rows reduce to zero.
    NCPoly reduce(const NCPoly& p) const;
    bool contains(const NCPoly& p) const;

  private:
    std::vector<NCPoly> relators_;
    int mode_count_;
    int bound_;
    std::vector<NCPoly> rows_;           // descending leading words
    std::map<Word, int> pivot_of_word_;  // leading word -> row index
};

TruncatedIdealBasis span_truncated_ideal(std::vector<NCPoly> relators, int mode_count, int bound);

struct InclusionReport {
    bool pass = false;
    int bound = 0;
    int checked = 0;
    // (index into relatorsA, pretty-printed relator) for each non-member
    std::vector<std::pair<int, std::string>> failures;
};

// pass iff every relator of A reduces to zero modulo the truncated span of B.
InclusionReport ideal_inclusion_check(const std::vector<NCPoly>& relators_a,
                                      const std::vector<NCPoly>& relators_b, int mode_count,
                                      int bound);

}  // namespace parabraid
