#include "parabraid/gamma.hpp"

#include <sstream>
#include <stdexcept>

namespace parabraid {

Carrier focklike_carrier(int order, int modes, int cutoff) {
    auto closure = std::make_shared<SubmoduleBasis>(focklike_closure(order, modes, cutoff));
    const TensorFock& ambient = *closure->ambient;

    std::vector<int> degrees;
    std::vector<std::string> labels;
    for (int i = 0; i < closure->dim(); ++i) {
        degrees.push_back(closure->degrees[static_cast<std::size_t>(i)]);
        labels.push_back(to_string(closure->provenance[static_cast<std::size_t>(i)]));
    }
    auto space = std::make_shared<GradedSpace>(std::move(degrees), std::move(labels));

    // Reconstruct a solver over the closure vectors to express images exactly.
    SpanSolver solver;
    for (const Vec& v : closure->vectors) {
        if (!solver.add(v)) throw std::logic_error("carrier: closure vectors are dependent");
    }

    Carrier carrier;
    carrier.order = order;
    carrier.modes = modes;
    carrier.cutoff = cutoff;
    carrier.closure = closure;
    carrier.space = space;
    carrier.vacuum_index = 0;  // the vacuum is always the first closure vector

    const Sign both[2] = {Sign::plus, Sign::minus};
    for (int i = 1; i <= modes; ++i) {
        for (Sign s : both) {
            SparseOperator ambient_op = ambient.green(i, s);
            SparseOperator::Columns cols;
            for (int j = 0; j < closure->dim(); ++j) {
                const int dj = closure->degrees[static_cast<std::size_t>(j)];
                const int target = dj + (s == Sign::plus ? 1 : -1);
                if (target < 0) continue;
                if (target > cutoff) continue;  // truncated at the top degree
                Vec image = ambient_op.apply(closure->vectors[static_cast<std::size_t>(j)]);
                auto expansion = solver.express(image);
                if (!expansion)
                    throw std::logic_error("carrier: image left the submodule span");
                for (const auto& [k, c] : *expansion) cols[j][k] = c;
            }
            carrier.ops.emplace(GenSym{i, s},
                                SparseOperator(space, space, Parity::odd, std::move(cols)));
        }
    }
    return carrier;
}

RelatorReport verify_gamma2_relations(const Carrier& carrier) {
    return verify_relators_on_space(gamma2_relators(carrier.modes), carrier.ops, carrier.space,
                                    carrier.cutoff);
}

GeneralizedAnsatzReport generalized_ansatz(int factors, int modes, int cutoff) {
    if (factors < 1) throw std::invalid_argument("factor count must be >= 1");
    Carrier slot_carrier = gamma2_carrier(modes, cutoff);

    GeneralizedAnsatzReport report;
    report.factors = factors;
    report.modes = modes;
    report.cutoff = cutoff;

    TensorSpace product(std::vector<SpacePtr>(static_cast<std::size_t>(factors), slot_carrier.space),
                        cutoff);
    const SpacePtr& space = product.composite();

    // Slot generators b_i^{(r) +-}.
    std::vector<GenAssignment> slot_ops(static_cast<std::size_t>(factors));
    for (int r = 0; r < factors; ++r) {
        for (const auto& [g, op] : slot_carrier.ops) {
            slot_ops[static_cast<std::size_t>(r)].emplace(g, embed_at(op, r, product));
        }
    }

    // (a) Gamma(2) relations inside every slot.
    const std::vector<NCPoly> gamma_rels = gamma2_relators(modes);
    report.slot_relations_pass = true;
    for (int r = 0; r < factors; ++r) {
        RelatorReport rr = verify_relators_on_space(gamma_rels, slot_ops[static_cast<std::size_t>(r)],
                                                    space, cutoff);
        report.slot_relations_pass = report.slot_relations_pass && rr.pass;
        if (r == 0) report.slot_checks = rr.checks;
    }

    // (a') anticommutation across distinct slots.
    report.cross_relations_pass = true;
    const Sign both[2] = {Sign::plus, Sign::minus};
    for (int r = 0; r < factors; ++r) {
        for (int s = 0; s < factors; ++s) {
            if (r == s) continue;
            for (int i = 1; i <= modes; ++i) {
                for (int j = 1; j <= modes; ++j) {
                    for (Sign si : both) {
                        for (Sign sj : both) {
                            const SparseOperator& x =
                                slot_ops[static_cast<std::size_t>(r)].at(GenSym{i, si});
                            const SparseOperator& y =
                                slot_ops[static_cast<std::size_t>(s)].at(GenSym{j, sj});
                            SparseOperator anti = anticommutator(x, y);
                            bool ok = true;
                            for (const auto& [col, column] : anti.columns()) {
                                if (space->degree(col) > cutoff - 2) continue;
                                if (!column.empty()) {
                                    ok = false;
                                    break;
                                }
                            }
                            if (!ok) {
                                std::ostringstream os;
                                os << "{b" << i << (si == Sign::plus ? "+" : "-") << "(" << r + 1
                                   << "), b" << j << (sj == Sign::plus ? "+" : "-") << "(" << s + 1
                                   << ")} != 0";
                                report.cross_failures.push_back(os.str());
                                report.cross_relations_pass = false;
                            }
                        }
                    }
                }
            }
        }
    }

    // (b) composite images satisfy the paraboson relators.
    GenAssignment composite;
    for (int i = 1; i <= modes; ++i) {
        for (Sign s : both) {
            SparseOperator total = slot_ops[0].at(GenSym{i, s});
            for (int r = 1; r < factors; ++r) {
                total += slot_ops[static_cast<std::size_t>(r)].at(GenSym{i, s});
            }
            composite.emplace(GenSym{i, s}, std::move(total));
        }
    }
    RelatorReport pb = verify_relators_on_space(paraboson_relators(modes), composite, space, cutoff);
    report.paraboson_pass = pb.pass;
    report.paraboson_checks = pb.checks;

    // (c) vacuum eigenvalue of B_i^- B_j^+.
    std::vector<int> vac_tuple(static_cast<std::size_t>(factors), slot_carrier.vacuum_index);
    const int vacuum = product.index_of(vac_tuple);
    report.vacuum_eigenvalue_pass = true;
    bool eigenvalue_set = false;
    for (int i = 1; i <= modes; ++i) {
        for (int j = 1; j <= modes; ++j) {
            Vec image = composite.at(lower_sym(i))
                            .apply(composite.at(raise_sym(j)).apply(Vec{{vacuum, Rational(1)}}));
            if (i != j) {
                if (!image.empty()) report.vacuum_eigenvalue_pass = false;
                continue;
            }
            if (image.size() != 1 || image.begin()->first != vacuum) {
                report.vacuum_eigenvalue_pass = false;
                continue;
            }
            if (!eigenvalue_set) {
                report.vacuum_eigenvalue = image.begin()->second;
                eigenvalue_set = true;
            } else if (report.vacuum_eigenvalue != image.begin()->second) {
                report.vacuum_eigenvalue_pass = false;
            }
        }
    }
    if (!eigenvalue_set) report.vacuum_eigenvalue_pass = false;
    return report;
}

InclusionReport gamma2_ideal_check(int modes, int bound) {
    return ideal_inclusion_check(paraboson_relators(modes), gamma2_relators(modes), modes, bound);
}

}  // namespace parabraid
