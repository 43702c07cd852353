#include "parabraid/braided.hpp"

#include <stdexcept>

namespace parabraid {

GradedSpace::GradedSpace(std::vector<int> degrees, std::vector<std::string> labels)
    : degrees_(std::move(degrees)), labels_(std::move(labels)) {
    if (labels_.empty()) labels_.resize(degrees_.size());
    if (labels_.size() != degrees_.size())
        throw std::invalid_argument("label count must match basis size");
    for (int d : degrees_) {
        if (d < 0) throw std::invalid_argument("basis degrees must be nonnegative");
    }
}

SparseOperator::SparseOperator(SpacePtr domain, SpacePtr codomain, Parity parity, Columns entries)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), parity_(parity),
      cols_(std::move(entries)) {
    for (auto it = cols_.begin(); it != cols_.end();) {
        auto& [col, column] = *it;
        if (col < 0 || col >= domain_->dim()) throw std::invalid_argument("column out of range");
        for (auto jt = column.begin(); jt != column.end();) {
            if (jt->second == 0) {
                jt = column.erase(jt);
                continue;
            }
            if (jt->first < 0 || jt->first >= codomain_->dim())
                throw std::invalid_argument("row out of range");
            if (codomain_->parity(jt->first) != (domain_->parity(col) ^ parity_))
                throw std::invalid_argument("operator entry violates its parity label");
            ++jt;
        }
        it = column.empty() ? cols_.erase(it) : std::next(it);
    }
}

SparseOperator SparseOperator::zero(SpacePtr domain, SpacePtr codomain, Parity parity) {
    return SparseOperator(std::move(domain), std::move(codomain), parity, {});
}

SparseOperator SparseOperator::identity(SpacePtr space) {
    Columns cols;
    for (int i = 0; i < space->dim(); ++i) cols[i][i] = 1;
    SpacePtr dom = space;
    return SparseOperator(std::move(dom), std::move(space), Parity::even, std::move(cols));
}

std::size_t SparseOperator::entry_count() const {
    std::size_t n = 0;
    for (const auto& [c, col] : cols_) n += col.size();
    return n;
}

Rational SparseOperator::entry(int row, int col) const {
    auto it = cols_.find(col);
    if (it == cols_.end()) return Rational(0);
    auto jt = it->second.find(row);
    return jt == it->second.end() ? Rational(0) : jt->second;
}

std::map<int, Rational> SparseOperator::apply_basis(int col) const {
    auto it = cols_.find(col);
    return it == cols_.end() ? std::map<int, Rational>{} : it->second;
}

std::map<int, Rational> SparseOperator::apply(const std::map<int, Rational>& vec) const {
    std::map<int, Rational> out;
    for (const auto& [col, c] : vec) {
        auto it = cols_.find(col);
        if (it == cols_.end()) continue;
        for (const auto& [row, a] : it->second) {
            Rational& slot = out[row];
            slot += c * a;
            if (slot == 0) out.erase(row);
        }
    }
    return out;
}

namespace {

void require_same_shape(const SparseOperator& a, const SparseOperator& b) {
    if (!(*a.domain() == *b.domain()) || !(*a.codomain() == *b.codomain()))
        throw std::invalid_argument("operator shape mismatch");
    if (a.parity() != b.parity())
        throw std::invalid_argument("cannot combine operators of different parity");
}

}  // namespace

SparseOperator& SparseOperator::operator+=(const SparseOperator& other) {
    require_same_shape(*this, other);
    for (const auto& [col, column] : other.cols_) {
        auto& mine = cols_[col];
        for (const auto& [row, c] : column) {
            Rational& slot = mine[row];
            slot += c;
            if (slot == 0) mine.erase(row);
        }
        if (mine.empty()) cols_.erase(col);
    }
    return *this;
}

SparseOperator& SparseOperator::operator-=(const SparseOperator& other) {
    SparseOperator neg = other;
    neg *= Rational(-1);
    return *this += neg;
}

SparseOperator& SparseOperator::operator*=(const Rational& c) {
    if (c == 0) {
        cols_.clear();
        return *this;
    }
    for (auto& [col, column] : cols_) {
        for (auto& [row, val] : column) val *= c;
    }
    return *this;
}

SparseOperator compose(const SparseOperator& a, const SparseOperator& b) {
    if (!(*b.codomain() == *a.domain()))
        throw std::invalid_argument("compose: inner spaces do not match");
    SparseOperator::Columns cols;
    for (const auto& [col, bcol] : b.columns()) {
        std::map<int, Rational> acc;
        for (const auto& [mid, bc] : bcol) {
            auto it = a.columns().find(mid);
            if (it == a.columns().end()) continue;
            for (const auto& [row, ac] : it->second) {
                Rational& slot = acc[row];
                slot += ac * bc;
                if (slot == 0) acc.erase(row);
            }
        }
        if (!acc.empty()) cols.emplace(col, std::move(acc));
    }
    return SparseOperator(b.domain(), a.codomain(), a.parity() ^ b.parity(), std::move(cols));
}

SparseOperator commutator(const SparseOperator& a, const SparseOperator& b) {
    return compose(a, b) - compose(b, a);
}

SparseOperator anticommutator(const SparseOperator& a, const SparseOperator& b) {
    return compose(a, b) + compose(b, a);
}

TensorSpace::TensorSpace(std::vector<SpacePtr> factors, std::optional<int> max_total_degree)
    : factors_(std::move(factors)), cap_(max_total_degree) {
    if (factors_.empty()) throw std::invalid_argument("tensor product needs at least one factor");
    std::vector<int> tuple(factors_.size(), 0);
    std::vector<int> composite_degrees;
    std::vector<std::string> composite_labels;
    auto rec = [&](auto&& self, std::size_t slot, int degree_so_far) -> void {
        if (slot == factors_.size()) {
            index_.emplace(tuple, static_cast<int>(tuples_.size()));
            tuples_.push_back(tuple);
            composite_degrees.push_back(degree_so_far);
            std::string label;
            for (std::size_t k = 0; k < tuple.size(); ++k) {
                if (k) label += "|";
                label += factors_[k]->label(tuple[k]);
            }
            composite_labels.push_back(std::move(label));
            return;
        }
        const auto& f = *factors_[slot];
        for (int i = 0; i < f.dim(); ++i) {
            int d = degree_so_far + f.degree(i);
            if (cap_ && d > *cap_) continue;
            tuple[slot] = i;
            self(self, slot + 1, d);
        }
        tuple[slot] = 0;
    };
    rec(rec, 0, 0);
    composite_ = std::make_shared<GradedSpace>(std::move(composite_degrees),
                                               std::move(composite_labels));
}

int TensorSpace::index_of(const std::vector<int>& tuple) const {
    auto it = index_.find(tuple);
    return it == index_.end() ? -1 : it->second;
}

std::map<int, Rational> braid_swap(const TensorSpace& from, const TensorSpace& to,
                                   const std::map<int, Rational>& vec) {
    if (from.factor_count() != 2 || to.factor_count() != 2)
        throw std::invalid_argument("braid_swap expects two-factor products");
    if (!(*from.factor(0) == *to.factor(1)) || !(*from.factor(1) == *to.factor(0)))
        throw std::invalid_argument("braid_swap: target is not the swapped product");
    std::map<int, Rational> out;
    for (const auto& [idx, c] : vec) {
        const auto& t = from.tuple_of(idx);
        int swapped = to.index_of({t[1], t[0]});
        if (swapped < 0) throw std::invalid_argument("braid_swap: state missing in target basis");
        bool both_odd = from.factor(0)->parity(t[0]) == Parity::odd &&
                        from.factor(1)->parity(t[1]) == Parity::odd;
        out[swapped] = both_odd ? Rational(-c) : c;
    }
    return out;
}

SparseOperator embed_at(const SparseOperator& op, int slot, const TensorSpace& space) {
    if (slot < 0 || slot >= space.factor_count())
        throw std::invalid_argument("embed_at: slot out of range");
    if (!(*op.domain() == *space.factor(slot)) || !(*op.codomain() == *space.factor(slot)))
        throw std::invalid_argument("embed_at: operator does not act on the slot factor");
    SparseOperator::Columns cols;
    for (int c = 0; c < space.dim(); ++c) {
        const auto& tuple = space.tuple_of(c);
        auto it = op.columns().find(tuple[static_cast<std::size_t>(slot)]);
        if (it == op.columns().end()) continue;
        int prefix = 0;
        for (int k = 0; k < slot; ++k)
            prefix += space.factor(k)->degree(tuple[static_cast<std::size_t>(k)]);
        const bool flip = (op.parity() == Parity::odd) && (prefix % 2 == 1);
        std::vector<int> image = tuple;
        for (const auto& [row, val] : it->second) {
            image[static_cast<std::size_t>(slot)] = row;
            int r = space.index_of(image);
            if (r < 0) continue;  // outside the degree cap: truncated
            cols[c][r] = flip ? Rational(-val) : val;
        }
    }
    return SparseOperator(space.composite(), space.composite(), op.parity(), std::move(cols));
}

}  // namespace parabraid
