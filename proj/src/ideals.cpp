#include "parabraid/ideals.hpp"

#include <algorithm>
#include <stdexcept>

namespace parabraid {

namespace {

// All words over modes 1..m of exact degree d, ascending lexicographic order.
std::vector<Word> words_of_degree(int m, int d) {
    std::vector<GenSym> alphabet;
    for (int i = 1; i <= m; ++i) {
        alphabet.push_back(raise_sym(i));
        alphabet.push_back(lower_sym(i));
    }
    std::sort(alphabet.begin(), alphabet.end());
    std::vector<Word> out;
    Word cur;
    auto rec = [&](auto&& self, int remaining) -> void {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (const GenSym& g : alphabet) {
            cur.syms.push_back(g);
            self(self, remaining - 1);
            cur.syms.pop_back();
        }
    };
    rec(rec, d);
    return out;
}

Word leading_word(const NCPoly& p) { return p.terms().rbegin()->first; }

}  // namespace

TruncatedIdealBasis::TruncatedIdealBasis(std::vector<NCPoly> relators, int mode_count, int bound)
    : relators_(std::move(relators)), mode_count_(mode_count), bound_(bound) {
    if (mode_count_ < 1) throw std::invalid_argument("mode count must be >= 1");
    for (const NCPoly& r : relators_) {
        if (r.top_degree() > bound_)
            throw std::invalid_argument("filtration bound below relator degree");
    }

    // Insert candidates u*r*v one by one, keeping the row set fully reduced.
    auto insert = [&](NCPoly p) {
        // Forward-reduce against existing pivots until no term is a pivot word.
        for (bool changed = true; changed && !p.is_zero();) {
            changed = false;
            for (const auto& [w, c] : p.terms()) {
                auto it = pivot_of_word_.find(w);
                if (it != pivot_of_word_.end()) {
                    p -= c * rows_[static_cast<std::size_t>(it->second)];
                    changed = true;
                    break;
                }
            }
        }
        if (p.is_zero()) return;
        Word lead = leading_word(p);
        p *= 1 / p.coeff(lead);
        // Back-substitute so older rows stay clear of the new pivot.
        for (NCPoly& row : rows_) {
            Rational c = row.coeff(lead);
            if (c != 0) row -= c * p;
        }
        pivot_of_word_.emplace(lead, static_cast<int>(rows_.size()));
        rows_.push_back(std::move(p));
    };

    // Affix pairs ordered by degree(u)+degree(v), then lexicographically.
    for (std::size_t ri = 0; ri < relators_.size(); ++ri) {
        const NCPoly& r = relators_[ri];
        const int head = bound_ - r.top_degree();
        for (int total = 0; total <= head; ++total) {
            for (int du = 0; du <= total; ++du) {
                const int dv = total - du;
                for (const Word& u : words_of_degree(mode_count_, du)) {
                    NCPoly up = mul(NCPoly::term(u, 1), r);
                    for (const Word& v : words_of_degree(mode_count_, dv)) {
                        insert(mul(up, NCPoly::term(v, 1)));
                    }
                }
            }
        }
    }

    // Canonical presentation: rows sorted by descending leading word.
    std::vector<int> order(rows_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return leading_word(rows_[static_cast<std::size_t>(b)]) <
               leading_word(rows_[static_cast<std::size_t>(a)]);
    });
    std::vector<NCPoly> sorted;
    sorted.reserve(rows_.size());
    for (int idx : order) sorted.push_back(std::move(rows_[static_cast<std::size_t>(idx)]));
    rows_ = std::move(sorted);
    pivot_of_word_.clear();
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        pivot_of_word_.emplace(leading_word(rows_[i]), static_cast<int>(i));
    }
}

NCPoly TruncatedIdealBasis::reduce(const NCPoly& p) const {
    if (p.top_degree() > bound_)
        throw std::invalid_argument("degree exceeds the filtration bound of the basis");
    NCPoly out = p;
    // Rows are fully reduced, so subtracting one never reintroduces a pivot.
    for (bool changed = true; changed && !out.is_zero();) {
        changed = false;
        for (const auto& [w, c] : out.terms()) {
            auto it = pivot_of_word_.find(w);
            if (it != pivot_of_word_.end()) {
                out -= c * rows_[static_cast<std::size_t>(it->second)];
                changed = true;
                break;
            }
        }
    }
    return out;
}

bool TruncatedIdealBasis::contains(const NCPoly& p) const { return reduce(p).is_zero(); }

TruncatedIdealBasis span_truncated_ideal(std::vector<NCPoly> relators, int mode_count, int bound) {
    return TruncatedIdealBasis(std::move(relators), mode_count, bound);
}

InclusionReport ideal_inclusion_check(const std::vector<NCPoly>& relators_a,
                                      const std::vector<NCPoly>& relators_b, int mode_count,
                                      int bound) {
    TruncatedIdealBasis basis(relators_b, mode_count, bound);
    InclusionReport report;
    report.bound = bound;
    report.checked = static_cast<int>(relators_a.size());
    for (std::size_t i = 0; i < relators_a.size(); ++i) {
        if (!basis.contains(relators_a[i])) {
            report.failures.emplace_back(static_cast<int>(i), to_string(relators_a[i]));
        }
    }
    report.pass = report.failures.empty();
    return report;
}

}  // namespace parabraid
