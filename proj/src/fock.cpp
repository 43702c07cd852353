#include "parabraid/fock.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace parabraid {

int Occupation::degree() const {
    return std::accumulate(counts.begin(), counts.end(), 0);
}

std::string to_string(const Occupation& occ) {
    std::string out;
    for (std::size_t i = 0; i < occ.counts.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(occ.counts[i]);
    }
    return out;
}

Vec& add_scaled(Vec& target, const Vec& source, const Rational& c) {
    if (c == 0) return target;
    for (const auto& [idx, val] : source) {
        Rational& slot = target[idx];
        slot += c * val;
        if (slot == 0) target.erase(idx);
    }
    return target;
}

namespace {

void enumerate_occupations(int modes, int cutoff, std::vector<Occupation>& out) {
    // Degree-major, then lexicographic on the count vectors.
    std::vector<int> counts(static_cast<std::size_t>(modes), 0);
    for (int d = 0; d <= cutoff; ++d) {
        auto rec = [&](auto&& self, int mode, int remaining) -> void {
            if (mode == modes - 1) {
                counts[static_cast<std::size_t>(mode)] = remaining;
                out.push_back(Occupation{counts});
                return;
            }
            for (int k = 0; k <= remaining; ++k) {
                counts[static_cast<std::size_t>(mode)] = k;
                self(self, mode + 1, remaining - k);
            }
        };
        rec(rec, 0, d);
    }
}

}  // namespace

BosonBasis::BosonBasis(int modes, int cutoff) : modes_(modes), cutoff_(cutoff) {
    if (modes < 1) throw std::invalid_argument("mode count must be >= 1");
    if (cutoff < 0) throw std::invalid_argument("cutoff must be >= 0");
    enumerate_occupations(modes, cutoff, states_);
    std::vector<int> degrees;
    std::vector<std::string> labels;
    degrees.reserve(states_.size());
    labels.reserve(states_.size());
    for (std::size_t i = 0; i < states_.size(); ++i) {
        index_.emplace(states_[i].counts, static_cast<int>(i));
        degrees.push_back(states_[i].degree());
        labels.push_back(to_string(states_[i]));
    }
    space_ = std::make_shared<GradedSpace>(std::move(degrees), std::move(labels));
}

int BosonBasis::index_of(const Occupation& occ) const {
    auto it = index_.find(occ.counts);
    return it == index_.end() ? -1 : it->second;
}

SparseOperator BosonBasis::raise_op(int mode) const {
    if (mode < 1 || mode > modes_) throw std::invalid_argument("mode out of range");
    SparseOperator::Columns cols;
    for (int c = 0; c < dim(); ++c) {
        Occupation occ = states_[static_cast<std::size_t>(c)];
        occ.counts[static_cast<std::size_t>(mode - 1)] += 1;
        int r = index_of(occ);
        if (r >= 0) cols[c][r] = 1;
    }
    return SparseOperator(space_, space_, Parity::odd, std::move(cols));
}

SparseOperator BosonBasis::lower_op(int mode) const {
    if (mode < 1 || mode > modes_) throw std::invalid_argument("mode out of range");
    SparseOperator::Columns cols;
    for (int c = 0; c < dim(); ++c) {
        Occupation occ = states_[static_cast<std::size_t>(c)];
        int& k = occ.counts[static_cast<std::size_t>(mode - 1)];
        if (k == 0) continue;
        const int coeff = k;
        k -= 1;
        cols[c][index_of(occ)] = coeff;
    }
    return SparseOperator(space_, space_, Parity::odd, std::move(cols));
}

Rational BosonBasis::gram_diag(int index) const {
    Rational g = 1;
    for (int k : states_[static_cast<std::size_t>(index)].counts) {
        g *= factorial(static_cast<unsigned>(k));
    }
    return g;
}

namespace {

int checked_order(int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    return order;
}

}  // namespace

TensorFock::TensorFock(int order, int modes, int cutoff)
    : order_(checked_order(order)), modes_(modes), cutoff_(cutoff), factor_(modes, cutoff),
      tensor_(std::vector<SpacePtr>(static_cast<std::size_t>(order_), factor_.space()), cutoff) {
    std::vector<int> zeros(static_cast<std::size_t>(order_),
                           factor_.index_of(Occupation{std::vector<int>(static_cast<std::size_t>(modes), 0)}));
    vacuum_ = tensor_.index_of(zeros);
}

SparseOperator TensorFock::green(int mode, Sign sign) const {
    SparseOperator slot_op = sign == Sign::plus ? factor_.raise_op(mode) : factor_.lower_op(mode);
    SparseOperator total = embed_at(slot_op, 0, tensor_);
    for (int r = 1; r < order_; ++r) total += embed_at(slot_op, r, tensor_);
    return total;
}

Rational TensorFock::gram_diag(int index) const {
    const auto& tuple = tensor_.tuple_of(index);
    Rational g = 1;
    for (int slot_state : tuple) g *= factor_.gram_diag(slot_state);
    return g;
}

Rational TensorFock::inner(const Vec& a, const Vec& b) const {
    Rational out = 0;
    const Vec& small = a.size() <= b.size() ? a : b;
    const Vec& large = a.size() <= b.size() ? b : a;
    for (const auto& [idx, va] : small) {
        auto it = large.find(idx);
        if (it != large.end()) out += va * it->second * gram_diag(idx);
    }
    return out;
}

GenAssignment green_assignment(const TensorFock& fock) {
    GenAssignment out;
    for (int i = 1; i <= fock.modes(); ++i) {
        out.emplace(raise_sym(i), fock.green(i, Sign::plus));
        out.emplace(lower_sym(i), fock.green(i, Sign::minus));
    }
    return out;
}

SparseOperator word_operator(const Word& w, const GenAssignment& assignment,
                             const SpacePtr& space) {
    SparseOperator out = SparseOperator::identity(space);
    // (g1 g2 ... gn) v = g1 (g2 (... v)), i.e. the matrix product in word order.
    for (auto it = w.syms.rbegin(); it != w.syms.rend(); ++it) {
        auto found = assignment.find(*it);
        if (found == assignment.end())
            throw std::invalid_argument("no operator assigned to " + to_string(*it));
        out = compose(found->second, out);
    }
    return out;
}

SparseOperator poly_operator(const NCPoly& p, const GenAssignment& assignment,
                             const SpacePtr& space) {
    Parity parity = Parity::even;
    if (!p.homogeneous(&parity))
        throw std::invalid_argument("operator evaluation needs a parity-homogeneous polynomial");
    SparseOperator out = SparseOperator::zero(space, space, parity);
    for (const auto& [w, c] : p.terms()) {
        SparseOperator t = word_operator(w, assignment, space);
        t *= c;
        out += t;
    }
    return out;
}

SparseOperator tensorpoly_operator(const TensorPoly& t, const TensorSpace& product,
                                   const std::vector<GenAssignment>& slot_assignments) {
    if (static_cast<int>(slot_assignments.size()) != product.factor_count() ||
        t.arity() != product.factor_count())
        throw std::invalid_argument("one generator assignment per tensor slot is required");
    Parity total_parity = Parity::even;
    bool first = true;
    SparseOperator out = SparseOperator::zero(product.composite(), product.composite(), Parity::even);
    for (const auto& [tuple, c] : t.terms()) {
        SparseOperator term = SparseOperator::identity(product.composite());
        Parity term_parity = Parity::even;
        for (int slot = 0; slot < product.factor_count(); ++slot) {
            const Word& w = tuple[static_cast<std::size_t>(slot)];
            if (w.is_unit()) continue;
            SparseOperator local = word_operator(w, slot_assignments[static_cast<std::size_t>(slot)],
                                                 product.factor(slot));
            term = compose(term, embed_at(local, slot, product));
            term_parity = term_parity ^ w.parity();
        }
        if (first) {
            total_parity = term_parity;
            out = SparseOperator::zero(product.composite(), product.composite(), total_parity);
            first = false;
        } else if (term_parity != total_parity) {
            throw std::invalid_argument("tensor polynomial is not parity-homogeneous");
        }
        term *= c;
        out += term;
    }
    return out;
}

RelatorReport verify_relators_on_space(const std::vector<NCPoly>& relators,
                                       const GenAssignment& assignment, const SpacePtr& space,
                                       int cutoff) {
    RelatorReport report;
    report.pass = true;
    for (std::size_t ri = 0; ri < relators.size(); ++ri) {
        const NCPoly& r = relators[ri];
        RelatorCheck check;
        check.relator_index = static_cast<int>(ri);
        check.relator = to_string(r);
        check.max_degree_checked = cutoff - r.top_degree();
        check.pass = true;
        SparseOperator op = poly_operator(r, assignment, space);
        for (const auto& [col, column] : op.columns()) {
            if (space->degree(col) > check.max_degree_checked) continue;
            if (column.empty()) continue;
            check.pass = false;
            std::ostringstream os;
            os << "state " << space->label(col) << " maps to";
            for (const auto& [row, val] : column) {
                os << ' ' << to_string(val) << "*[" << space->label(row) << "]";
            }
            check.witness = os.str();
            break;
        }
        report.pass = report.pass && check.pass;
        report.checks.push_back(std::move(check));
    }
    return report;
}

bool SpanSolver::add(const Vec& v) {
    Vec x = v;
    std::map<int, Rational> expansion;
    while (!x.empty()) {
        const int lead = x.rbegin()->first;
        auto it = pivot_to_row_.find(lead);
        if (it == pivot_to_row_.end()) break;
        const Row& row = rows_[static_cast<std::size_t>(it->second)];
        const Rational c = x.rbegin()->second;
        add_scaled(x, row.reduced, -c);
        for (const auto& [ord, e] : row.expansion) {
            Rational& slot = expansion[ord];
            slot += c * e;
            if (slot == 0) expansion.erase(ord);
        }
    }
    if (x.empty()) return false;
    const Rational lead_coeff = x.rbegin()->second;
    const int lead = x.rbegin()->first;
    Row row;
    row.reduced = x;
    for (auto& [idx, val] : row.reduced) val /= lead_coeff;
    row.expansion[count_] = 1 / lead_coeff;
    for (const auto& [ord, e] : expansion) {
        Rational adj = -e / lead_coeff;
        if (adj != 0) row.expansion[ord] = adj;
    }
    pivot_to_row_.emplace(lead, static_cast<int>(rows_.size()));
    rows_.push_back(std::move(row));
    ++count_;
    return true;
}

std::optional<std::map<int, Rational>> SpanSolver::express(const Vec& v) const {
    Vec x = v;
    std::map<int, Rational> out;
    while (!x.empty()) {
        const int lead = x.rbegin()->first;
        auto it = pivot_to_row_.find(lead);
        if (it == pivot_to_row_.end()) return std::nullopt;
        const Row& row = rows_[static_cast<std::size_t>(it->second)];
        const Rational c = x.rbegin()->second;
        add_scaled(x, row.reduced, -c);
        for (const auto& [ord, e] : row.expansion) {
            Rational& slot = out[ord];
            slot += c * e;
            if (slot == 0) out.erase(ord);
        }
    }
    return out;
}

bool SpanSolver::contains(const Vec& v) const { return express(v).has_value(); }

SubmoduleBasis focklike_closure(int order, int modes, int cutoff) {
    SubmoduleBasis basis;
    auto ambient = std::make_shared<TensorFock>(order, modes, cutoff);
    basis.ambient = ambient;
    basis.by_degree.assign(static_cast<std::size_t>(cutoff) + 1, {});

    std::vector<SparseOperator> raises;
    std::vector<SparseOperator> lowers;
    for (int i = 1; i <= modes; ++i) {
        raises.push_back(ambient->green(i, Sign::plus));
        lowers.push_back(ambient->green(i, Sign::minus));
    }

    SpanSolver solver;
    Vec vacuum{{ambient->vacuum_index(), Rational(1)}};
    solver.add(vacuum);
    basis.vectors.push_back(vacuum);
    basis.provenance.push_back(Word{});
    basis.degrees.push_back(0);
    basis.by_degree[0].push_back(0);

    for (int d = 0; d < cutoff; ++d) {
        const std::vector<int> previous = basis.by_degree[static_cast<std::size_t>(d)];
        for (int i = 1; i <= modes; ++i) {
            for (int prev : previous) {
                Vec candidate = raises[static_cast<std::size_t>(i - 1)].apply(
                    basis.vectors[static_cast<std::size_t>(prev)]);
                if (candidate.empty()) continue;
                if (!solver.add(candidate)) continue;
                Word prov = Word{{raise_sym(i)}}.concat(
                    basis.provenance[static_cast<std::size_t>(prev)]);
                basis.vectors.push_back(std::move(candidate));
                basis.provenance.push_back(std::move(prov));
                basis.degrees.push_back(d + 1);
                basis.by_degree[static_cast<std::size_t>(d + 1)].push_back(basis.dim() - 1);
            }
        }
    }

    // Lowering images must stay inside the span (degree permitting).
    for (int idx = 0; idx < basis.dim(); ++idx) {
        if (basis.degrees[static_cast<std::size_t>(idx)] == 0) continue;
        for (const SparseOperator& low : lowers) {
            Vec image = low.apply(basis.vectors[static_cast<std::size_t>(idx)]);
            if (!solver.contains(image)) {
                throw std::logic_error("closure integrity: lowering image left the span at " +
                                       to_string(basis.provenance[static_cast<std::size_t>(idx)]));
            }
        }
    }

    basis.gram.assign(static_cast<std::size_t>(basis.dim()),
                      std::vector<Rational>(static_cast<std::size_t>(basis.dim()), Rational(0)));
    for (int a = 0; a < basis.dim(); ++a) {
        for (int b = a; b < basis.dim(); ++b) {
            Rational g = ambient->inner(basis.vectors[static_cast<std::size_t>(a)],
                                        basis.vectors[static_cast<std::size_t>(b)]);
            basis.gram[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = g;
            basis.gram[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = g;
        }
    }
    return basis;
}

const std::vector<std::vector<Rational>>& gram_of_submodule(const SubmoduleBasis& basis) {
    return basis.gram;
}

bool gram_positive_definite(const SubmoduleBasis& basis) {
    for (std::size_t d = 0; d < basis.by_degree.size(); ++d) {
        const auto& block_indices = basis.by_degree[d];
        const std::size_t n = block_indices.size();
        if (n == 0) continue;
        std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] = basis.gram[static_cast<std::size_t>(block_indices[i])]
                                    [static_cast<std::size_t>(block_indices[j])];
            }
        }
        std::vector<bool> used(n, false);
        for (std::size_t step = 0; step < n; ++step) {
            // Diagonal pivoting: largest remaining diagonal entry.
            std::size_t pivot = n;
            for (std::size_t i = 0; i < n; ++i) {
                if (used[i]) continue;
                if (pivot == n || a[i][i] > a[pivot][pivot]) pivot = i;
            }
            if (a[pivot][pivot] <= 0) return false;
            used[pivot] = true;
            for (std::size_t i = 0; i < n; ++i) {
                if (used[i]) continue;
                const Rational f = a[i][pivot] / a[pivot][pivot];
                if (f == 0) continue;
                for (std::size_t j = 0; j < n; ++j) {
                    if (used[j]) continue;
                    a[i][j] -= f * a[pivot][j];
                }
            }
        }
    }
    return true;
}

MatrixElementTables matrix_elements(const SubmoduleBasis& basis) {
    const TensorFock& ambient = *basis.ambient;
    const int n = basis.dim();

    // Unnormalized Gram-Schmidt within each degree block.
    std::vector<Vec> ortho(static_cast<std::size_t>(n));
    MatrixElementTables tables;
    tables.ortho_norms.resize(static_cast<std::size_t>(n));
    for (const auto& block : basis.by_degree) {
        for (std::size_t bi = 0; bi < block.size(); ++bi) {
            const int j = block[bi];
            Vec o = basis.vectors[static_cast<std::size_t>(j)];
            for (std::size_t bk = 0; bk < bi; ++bk) {
                const int k = block[bk];
                const Rational proj =
                    ambient.inner(basis.vectors[static_cast<std::size_t>(j)],
                                  ortho[static_cast<std::size_t>(k)]) /
                    tables.ortho_norms[static_cast<std::size_t>(k)];
                add_scaled(o, ortho[static_cast<std::size_t>(k)], -proj);
            }
            Rational norm = ambient.inner(o, o);
            if (norm <= 0) throw std::logic_error("Gram integrity: nonpositive squared norm");
            ortho[static_cast<std::size_t>(j)] = std::move(o);
            tables.ortho_norms[static_cast<std::size_t>(j)] = std::move(norm);
        }
    }

    const Sign both[2] = {Sign::plus, Sign::minus};
    for (int mode = 1; mode <= ambient.modes(); ++mode) {
        for (Sign s : both) {
            SparseOperator op = ambient.green(mode, s);
            for (int j = 0; j < n; ++j) {
                const int dj = basis.degrees[static_cast<std::size_t>(j)];
                const int target = dj + (s == Sign::plus ? 1 : -1);
                if (target < 0 || target > ambient.cutoff()) continue;
                Vec image = op.apply(ortho[static_cast<std::size_t>(j)]);
                Vec residual = image;
                for (int k : basis.by_degree[static_cast<std::size_t>(target)]) {
                    const Rational c = ambient.inner(image, ortho[static_cast<std::size_t>(k)]) /
                                       tables.ortho_norms[static_cast<std::size_t>(k)];
                    if (c == 0) continue;
                    tables.entries.push_back({mode, s, j, k, c});
                    add_scaled(residual, ortho[static_cast<std::size_t>(k)], -c);
                }
                if (!residual.empty())
                    throw std::logic_error("matrix elements: image left the submodule span");
            }
        }
    }
    return tables;
}

SingleParabosonProfile single_paraboson_profile(int order, int n_max) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    if (n_max < 0) throw std::invalid_argument("n_max must be >= 0");
    const int cutoff = n_max + 1;
    SubmoduleBasis basis = focklike_closure(order, 1, cutoff);
    SingleParabosonProfile profile;
    profile.order = order;
    profile.n_max = n_max;
    for (int d = 0; d <= cutoff; ++d) {
        if (basis.degree_dim(d) != 1)
            throw std::logic_error("single-mode closure layer is not one-dimensional");
    }
    for (int d = 0; d <= cutoff; ++d) {
        const int idx = basis.by_degree[static_cast<std::size_t>(d)][0];
        profile.norms.push_back(
            basis.gram[static_cast<std::size_t>(idx)][static_cast<std::size_t>(idx)]);
    }
    for (int nn = 0; nn <= n_max; ++nn) {
        profile.ratios.push_back(profile.norms[static_cast<std::size_t>(nn) + 1] /
                                 profile.norms[static_cast<std::size_t>(nn)]);
    }
    SparseOperator lower = basis.ambient->green(1, Sign::minus);
    for (int nn = 1; nn <= n_max + 1; ++nn) {
        const int idx = basis.by_degree[static_cast<std::size_t>(nn)][0];
        const int prev = basis.by_degree[static_cast<std::size_t>(nn) - 1][0];
        Vec image = lower.apply(basis.vectors[static_cast<std::size_t>(idx)]);
        // image must be a multiple of f_{n-1}
        Rational c = basis.ambient->inner(image, basis.vectors[static_cast<std::size_t>(prev)]) /
                     profile.norms[static_cast<std::size_t>(nn) - 1];
        Vec check = image;
        add_scaled(check, basis.vectors[static_cast<std::size_t>(prev)], -c);
        if (!check.empty())
            throw std::logic_error("lowering image is not proportional to the previous layer");
        profile.lowering.push_back(std::move(c));
    }
    profile.matches_expected = true;
    for (int nn = 0; nn <= n_max; ++nn) {
        const Rational expected = (nn % 2 == 0) ? Rational(nn + order) : Rational(nn + 1);
        if (profile.ratios[static_cast<std::size_t>(nn)] != expected)
            profile.matches_expected = false;
    }
    for (int nn = 1; nn <= n_max + 1; ++nn) {
        const Rational expected = (nn % 2 == 0) ? Rational(nn) : Rational(nn - 1 + order);
        if (profile.lowering[static_cast<std::size_t>(nn) - 1] != expected)
            profile.matches_expected = false;
    }
    return profile;
}

DimensionTable dimension_table(const SubmoduleBasis& basis) {
    const TensorFock& ambient = *basis.ambient;
    DimensionTable table;
    table.order = ambient.order();
    table.modes = ambient.modes();
    table.cutoff = ambient.cutoff();
    table.submodule_dims.assign(static_cast<std::size_t>(table.cutoff) + 1, 0);
    table.full_dims.assign(static_cast<std::size_t>(table.cutoff) + 1, 0);
    for (int d = 0; d <= table.cutoff; ++d) {
        table.submodule_dims[static_cast<std::size_t>(d)] = basis.degree_dim(d);
    }
    for (int idx = 0; idx < ambient.dim(); ++idx) {
        table.full_dims[static_cast<std::size_t>(ambient.state_degree(idx))] += 1;
    }
    for (int d = 0; d <= table.cutoff; ++d) {
        if (table.submodule_dims[static_cast<std::size_t>(d)] <
            table.full_dims[static_cast<std::size_t>(d)]) {
            table.deficit_witnessed = true;
        }
    }
    return table;
}

}  // namespace parabraid
