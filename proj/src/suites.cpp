#include "parabraid/suites.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "parabraid/expr.hpp"
#include "parabraid/fock.hpp"
#include "parabraid/gamma.hpp"
#include "parabraid/hopf.hpp"
#include "parabraid/ideals.hpp"

namespace parabraid {

namespace {

// Stdlib-independent deterministic PRNG so reports are reproducible
// across toolchains.
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    int below(int bound) { return static_cast<int>(next() % static_cast<std::uint64_t>(bound)); }

  private:
    std::uint64_t state_;
};

std::string params_str(std::initializer_list<std::pair<const char*, int>> kv) {
    std::string out;
    for (const auto& [k, v] : kv) {
        if (!out.empty()) out += ' ';
        out += std::string(k) + "=" + std::to_string(v);
    }
    return out;
}

std::map<std::string, std::string> params_map(
    std::initializer_list<std::pair<const char*, int>> kv) {
    std::map<std::string, std::string> out;
    for (const auto& [k, v] : kv) out[k] = std::to_string(v);
    return out;
}

CheckRecord make_record(std::string suite, std::string check_id, std::string anchor,
                        std::map<std::string, std::string> params, bool pass,
                        std::string witness) {
    CheckRecord r;
    r.suite = std::move(suite);
    r.check_id = std::move(check_id);
    r.anchor = std::move(anchor);
    r.parameters = std::move(params);
    r.pass = pass;
    r.witness = std::move(witness);
    return r;
}

// Is an operator zero on all basis states of degree <= max_degree?
bool vanishes_on_safe_domain(const SparseOperator& op, int max_degree, std::string* witness) {
    const GradedSpace& space = *op.domain();
    for (const auto& [col, column] : op.columns()) {
        if (space.degree(col) > max_degree) continue;
        if (column.empty()) continue;
        if (witness) {
            std::ostringstream os;
            os << "state " << space.label(col) << " maps to";
            for (const auto& [row, val] : column) {
                os << ' ' << to_string(val) << "*[" << space.label(row) << "]";
            }
            *witness = os.str();
        }
        return false;
    }
    return true;
}

void append_relator_records(SuiteReport& report, const std::string& suite,
                            const std::string& prefix, const std::string& anchor,
                            std::map<std::string, std::string> params,
                            const RelatorReport& relators) {
    for (const auto& check : relators.checks) {
        auto p = params;
        p["relator"] = check.relator;
        p["safe_degree"] = std::to_string(check.max_degree_checked);
        report.add(make_record(suite, prefix + "/" + std::to_string(check.relator_index), anchor,
                               std::move(p), check.pass, check.witness));
    }
}

// ---------------------------------------------------------------- suites --

void green_relations_point(SuiteReport& report, int p, int m, int n) {
    const std::string suite = "green-relations";
    TensorFock fock(p, m, n);
    auto params = params_map({{"order", p}, {"modes", m}, {"cutoff", n}});

    std::vector<GenAssignment> slots(static_cast<std::size_t>(p));
    for (int r = 0; r < p; ++r) {
        for (int i = 1; i <= m; ++i) {
            slots[static_cast<std::size_t>(r)].emplace(raise_sym(i),
                                                       embed_at(fock.factor().raise_op(i), r, fock.tensor()));
            slots[static_cast<std::size_t>(r)].emplace(lower_sym(i),
                                                       embed_at(fock.factor().lower_op(i), r, fock.tensor()));
        }
    }

    const SparseOperator id = SparseOperator::identity(fock.space());
    bool same_slot_ok = true;
    std::string witness;
    for (int r = 0; r < p && same_slot_ok; ++r) {
        const auto& ops = slots[static_cast<std::size_t>(r)];
        for (int i = 1; i <= m && same_slot_ok; ++i) {
            for (int j = 1; j <= m && same_slot_ok; ++j) {
                SparseOperator comm = commutator(ops.at(lower_sym(i)), ops.at(raise_sym(j)));
                if (i == j) comm -= id;
                same_slot_ok = vanishes_on_safe_domain(comm, n - 2, &witness) &&
                               vanishes_on_safe_domain(
                                   commutator(ops.at(lower_sym(i)), ops.at(lower_sym(j))), n - 2,
                                   &witness) &&
                               vanishes_on_safe_domain(
                                   commutator(ops.at(raise_sym(i)), ops.at(raise_sym(j))), n - 2,
                                   &witness);
            }
        }
    }
    report.add(make_record(suite, "slot-ccr " + params_str({{"p", p}, {"m", m}}),
                           "slot-ccr-relations", params, same_slot_ok, witness));

    bool cross_ok = true;
    witness.clear();
    const Sign signs[2] = {Sign::plus, Sign::minus};
    for (int r = 0; r < p && cross_ok; ++r) {
        for (int s = 0; s < p && cross_ok; ++s) {
            if (r == s) continue;
            for (int i = 1; i <= m && cross_ok; ++i) {
                for (int j = 1; j <= m && cross_ok; ++j) {
                    for (Sign a : signs) {
                        for (Sign b : signs) {
                            SparseOperator anti =
                                anticommutator(slots[static_cast<std::size_t>(r)].at(GenSym{i, a}),
                                               slots[static_cast<std::size_t>(s)].at(GenSym{j, b}));
                            if (!vanishes_on_safe_domain(anti, n - 2, &witness)) {
                                cross_ok = false;
                                break;
                            }
                        }
                        if (!cross_ok) break;
                    }
                }
            }
        }
    }
    report.add(make_record(suite, "cross-slot " + params_str({{"p", p}, {"m", m}}),
                           "cross-slot-anticommutation", params, cross_ok, witness));

    RelatorReport pb =
        verify_relators_on_space(paraboson_relators(m), green_assignment(fock), fock.space(), n);
    append_relator_records(report, suite, "paraboson " + params_str({{"p", p}, {"m", m}}),
                           "paraboson-relators-under-green-map", params, pb);

    if (p >= 2) {
        // [B1-, B1+] - I acts as (p-1) on the vacuum: the boson relation must fail.
        GenAssignment greens = green_assignment(fock);
        SparseOperator op = commutator(greens.at(lower_sym(1)), greens.at(raise_sym(1))) - id;
        Vec vac{{fock.vacuum_index(), Rational(1)}};
        Vec image = op.apply(vac);
        bool fails_as_expected =
            image.size() == 1 && image.begin()->first == fock.vacuum_index() &&
            image.begin()->second == Rational(p - 1);
        report.add(make_record(suite, "boson-relation-breaks " + params_str({{"p", p}, {"m", m}}),
                               "boson-relation-order-witness", params, fails_as_expected,
                               "[B1-, B1+] - I on vacuum = " +
                                   (image.empty() ? std::string("0")
                                                  : to_string(image.begin()->second))));
    }
}

void focklike_point(SuiteReport& report, int p, int m, int n) {
    const std::string suite = "focklike";
    auto params = params_map({{"order", p}, {"modes", m}, {"cutoff", n}});
    SubmoduleBasis basis;
    try {
        basis = focklike_closure(p, m, n);
    } catch (const std::exception& e) {
        report.add(make_record(suite, "closure " + params_str({{"p", p}, {"m", m}}),
                               "closure-integrity", params, false, e.what()));
        return;
    }
    report.add(make_record(suite, "closure " + params_str({{"p", p}, {"m", m}}),
                           "closure-integrity", params, true, ""));
    report.add(make_record(suite, "gram-pd " + params_str({{"p", p}, {"m", m}}),
                           "gram-positive-definite", params, gram_positive_definite(basis), ""));

    {
        std::ostringstream dims;
        DimensionTable table = dimension_table(basis);
        for (int d = 0; d <= table.cutoff; ++d) {
            if (d) dims << ' ';
            dims << table.submodule_dims[static_cast<std::size_t>(d)] << '/'
                 << table.full_dims[static_cast<std::size_t>(d)];
        }
        const bool expect_deficit = p >= 2;
        report.add(make_record(suite, "dims " + params_str({{"p", p}, {"m", m}}),
                               expect_deficit ? "dimension-deficit" : "dimension-equality", params,
                               table.deficit_witnessed == expect_deficit, dims.str()));
    }

    {
        const TensorFock& ambient = *basis.ambient;
        bool ok = true;
        std::string witness;
        for (int i = 1; i <= m && ok; ++i) {
            for (int j = 1; j <= m && ok; ++j) {
                Vec image = ambient.green(i, Sign::minus)
                                .apply(ambient.green(j, Sign::plus)
                                           .apply(Vec{{ambient.vacuum_index(), Rational(1)}}));
                Vec expected;
                if (i == j) expected[ambient.vacuum_index()] = p;
                if (image != expected) {
                    ok = false;
                    witness = "B" + std::to_string(i) + "- B" + std::to_string(j) + "+ |0> != " +
                              (i == j ? std::to_string(p) + " |0>" : std::string("0"));
                }
            }
        }
        report.add(make_record(suite, "order-eigenvalue " + params_str({{"p", p}, {"m", m}}),
                               "vacuum-order-eigenvalue", params, ok, witness));
    }

    {
        // Within degrees <= cutoff-1, the joint kernel of the lowering maps is
        // exactly the vacuum line.
        const TensorFock& ambient = *basis.ambient;
        std::vector<int> window;
        for (int idx = 0; idx < basis.dim(); ++idx) {
            if (basis.degrees[static_cast<std::size_t>(idx)] <= n - 1) window.push_back(idx);
        }
        SpanSolver stacked;
        int rank = 0;
        for (int idx : window) {
            Vec all;
            for (int i = 1; i <= m; ++i) {
                Vec img = ambient.green(i, Sign::minus)
                              .apply(basis.vectors[static_cast<std::size_t>(idx)]);
                for (const auto& [state, c] : img) all[(i - 1) * ambient.dim() + state] = c;
            }
            if (stacked.add(all)) ++rank;
        }
        const int kernel_dim = static_cast<int>(window.size()) - rank;
        report.add(make_record(suite, "vacuum-kernel " + params_str({{"p", p}, {"m", m}}),
                               "lowering-kernel-is-vacuum-line", params, kernel_dim == 1,
                               "kernel dimension " + std::to_string(kernel_dim)));
    }

    {
        // Adjointness <B+ u, v> = <u, B- v> on deterministic pseudo-random pairs.
        const TensorFock& ambient = *basis.ambient;
        SplitMix64 rng(0x70617261626f73ULL);
        std::vector<int> window;
        for (int idx = 0; idx < basis.dim(); ++idx) {
            if (basis.degrees[static_cast<std::size_t>(idx)] <= n - 1) window.push_back(idx);
        }
        bool ok = !window.empty();
        std::string witness;
        for (int trial = 0; trial < 50 && ok; ++trial) {
            Vec u, v;
            for (int pick = 0; pick < 3; ++pick) {
                int iu = window[static_cast<std::size_t>(rng.below(static_cast<int>(window.size())))];
                int iv = rng.below(basis.dim());
                add_scaled(u, basis.vectors[static_cast<std::size_t>(iu)],
                           Rational(rng.below(7) - 3));
                add_scaled(v, basis.vectors[static_cast<std::size_t>(iv)],
                           Rational(rng.below(7) - 3));
            }
            for (int i = 1; i <= m && ok; ++i) {
                Rational lhs = ambient.inner(ambient.green(i, Sign::plus).apply(u), v);
                Rational rhs = ambient.inner(u, ambient.green(i, Sign::minus).apply(v));
                if (lhs != rhs) {
                    ok = false;
                    witness = "trial " + std::to_string(trial) + ": <B+u,v> = " + to_string(lhs) +
                              " but <u,B-v> = " + to_string(rhs);
                }
            }
        }
        report.add(make_record(suite, "adjointness " + params_str({{"p", p}, {"m", m}}),
                               "raising-lowering-adjointness", params, ok, witness));
    }

    if (p == 1) {
        // F(1) is the whole boson module and the green images are the boson
        // operators themselves.
        const TensorFock& ambient = *basis.ambient;
        DimensionTable table = dimension_table(basis);
        bool dims_ok = true;
        for (int d = 0; d <= n; ++d) {
            // C(m+d-1, d)
            Rational expected = 1;
            for (int t = 0; t < d; ++t) expected *= Rational(m + t, t + 1);
            if (Rational(table.submodule_dims[static_cast<std::size_t>(d)]) != expected)
                dims_ok = false;
        }
        report.add(make_record(suite, "bosonic-collapse-dims " + params_str({{"m", m}}),
                               "bosonic-collapse-dims", params, dims_ok, ""));
        bool ops_ok = true;
        for (int i = 1; i <= m; ++i) {
            ops_ok = ops_ok &&
                     ambient.green(i, Sign::plus).columns() == ambient.factor().raise_op(i).columns() &&
                     ambient.green(i, Sign::minus).columns() == ambient.factor().lower_op(i).columns();
        }
        report.add(make_record(suite, "bosonic-collapse-operators " + params_str({{"m", m}}),
                               "bosonic-collapse-operators", params, ops_ok, ""));
    }
}

void single_paraboson_point(SuiteReport& report, int p, int n_max) {
    auto params = params_map({{"order", p}, {"n_max", n_max}});
    SingleParabosonProfile profile = single_paraboson_profile(p, n_max);
    std::ostringstream os;
    os << "ratios";
    for (const auto& r : profile.ratios) os << ' ' << to_string(r);
    os << " lowering";
    for (const auto& c : profile.lowering) os << ' ' << to_string(c);
    report.add(make_record("single-paraboson", "profile " + params_str({{"p", p}}),
                           "single-paraboson-profile", params, profile.matches_expected, os.str()));
}

Word random_word(SplitMix64& rng, int m, int max_len) {
    const int len = rng.below(max_len + 1);
    Word w;
    for (int k = 0; k < len; ++k) {
        w.syms.push_back(GenSym{1 + rng.below(m), rng.below(2) == 0 ? Sign::plus : Sign::minus});
    }
    return w;
}

void hopf_axioms_suite(SuiteReport& report, int m, int n) {
    const std::string suite = "hopf-axioms";
    auto params = params_map({{"modes", m}, {"cutoff", n}});

    HopfAxiomReport axioms = check_hopf_axioms(m);
    for (const auto& check : axioms.checks) {
        std::string anchor = check.name.substr(0, check.name.find(' '));
        report.add(make_record(suite, check.name, anchor + "-on-generators", params, check.pass,
                               check.witness));
    }

    {
        SplitMix64 rng(0xb7a1d3d5eedULL);
        bool ok = true;
        std::string witness;
        for (int trial = 0; trial < 100 && ok; ++trial) {
            NCPoly w = NCPoly::term(random_word(rng, m, 3), 1);
            for (int arity = 3; arity <= 4 && ok; ++arity) {
                TensorPoly base = iterated_coproduct(w, arity - 1);
                TensorPoly reference = apply_coproduct_at(base, 0);
                if (!(reference == iterated_coproduct(w, arity))) ok = false;
                for (int pos = 1; pos < arity - 1 && ok; ++pos) {
                    if (!(apply_coproduct_at(base, pos) == reference)) ok = false;
                }
                if (!ok) witness = "word " + to_string(w) + " arity " + std::to_string(arity);
            }
        }
        report.add(make_record(suite, "position-independence random words",
                               "coproduct-position-independence", params, ok, witness));
    }

    {
        SplitMix64 rng(0xc0b4a5eedULL);
        bool hom_ok = true, anti_ok = true;
        std::string hom_witness, anti_witness;
        for (int trial = 0; trial < 60; ++trial) {
            Word u = random_word(rng, m, 3);
            Word v = random_word(rng, m, 3);
            NCPoly pu = NCPoly::term(u, 1), pv = NCPoly::term(v, 1);
            if (hom_ok &&
                !(coproduct(mul(pu, pv)) == tensor_mul(coproduct(pu), coproduct(pv)))) {
                hom_ok = false;
                hom_witness = to_string(u) + " * " + to_string(v);
            }
            const long flips = static_cast<long>(u.degree()) * v.degree();
            NCPoly rhs = mul(antipode(pv), antipode(pu));
            if (flips % 2 != 0) rhs *= Rational(-1);
            if (anti_ok && !(antipode(mul(pu, pv)) == rhs)) {
                anti_ok = false;
                anti_witness = to_string(u) + " * " + to_string(v);
            }
        }
        report.add(make_record(suite, "coproduct homomorphism random words",
                               "coproduct-braided-homomorphism", params, hom_ok, hom_witness));
        report.add(make_record(suite, "antipode anti-homomorphism random words",
                               "antipode-braided-antihomomorphism", params, anti_ok, anti_witness));
    }

    // Coproducts of the defining relators act as zero on pairs of Fock-like
    // carriers.
    const std::vector<NCPoly> relators = paraboson_relators(m);
    for (auto [p1, p2] : {std::pair<int, int>{1, 1}, {2, 1}, {1, 2}}) {
        Carrier c1 = focklike_carrier(p1, m, n);
        Carrier c2 = focklike_carrier(p2, m, n);
        TensorSpace product({c1.space, c2.space});
        bool ok = true;
        std::string witness;
        for (const NCPoly& r : relators) {
            SparseOperator op = tensorpoly_operator(coproduct(r), product, {c1.ops, c2.ops});
            for (const auto& [col, column] : op.columns()) {
                const auto& tuple = product.tuple_of(col);
                if (c1.space->degree(tuple[0]) > n - 3 || c2.space->degree(tuple[1]) > n - 3)
                    continue;
                if (!column.empty()) {
                    ok = false;
                    witness = "relator " + to_string(r) + " at state " +
                              product.composite()->label(col);
                    break;
                }
            }
            if (!ok) break;
        }
        report.add(make_record(suite,
                               "coproduct annihilates relators " +
                                   params_str({{"p", p1}, {"q", p2}}),
                               "coproduct-annihilates-relators",
                               params_map({{"modes", m}, {"cutoff", n}, {"p", p1}, {"q", p2}}), ok,
                               witness));
    }
}

void ideal_inclusions_suite(SuiteReport& report, int m, int d) {
    const std::string suite = "ideal-inclusions";
    auto params = params_map({{"modes", m}, {"bound", d}});
    const auto pb = paraboson_relators(m);
    const auto bos = boson_relators(m);
    const auto g2 = gamma2_relators(m);

    auto summarize = [](const InclusionReport& r) {
        std::ostringstream os;
        os << r.checked - static_cast<int>(r.failures.size()) << "/" << r.checked << " contained";
        for (const auto& [idx, text] : r.failures) os << "; outside: " << text;
        return os.str();
    };

    InclusionReport a = ideal_inclusion_check(pb, bos, m, d);
    report.add(make_record(suite, "paraboson relators inside boson ideal",
                           "paraboson-in-boson-ideal", params, a.pass, summarize(a)));

    InclusionReport b = ideal_inclusion_check(pb, g2, m, d);
    report.add(make_record(suite, "paraboson relators inside gamma2 ideal",
                           "paraboson-in-gamma2-ideal", params, b.pass, summarize(b)));

    InclusionReport c = ideal_inclusion_check(bos, pb, m, d);
    report.add(make_record(suite, "boson relators escape paraboson ideal",
                           "boson-not-in-paraboson-ideal", params, !c.pass, summarize(c)));

    TruncatedIdealBasis basis(pb, m, d);
    bool self_ok = true;
    for (const NCPoly& r : pb) self_ok = self_ok && basis.contains(r);
    report.add(make_record(suite, "generating relators self-membership",
                           "relator-self-membership", params, self_ok,
                           "rank " + std::to_string(basis.rank())));
}

void gamma2_suite(SuiteReport& report, int m, int n) {
    const std::string suite = "gamma2";
    auto params = params_map({{"modes", m}, {"cutoff", n}});

    Carrier f2 = gamma2_carrier(m, n);
    RelatorReport on_f2 = verify_gamma2_relations(f2);
    append_relator_records(report, suite, "relators-on-f2", "gamma2-relators-on-f2", params, on_f2);

    Carrier f3 = focklike_carrier(3, m, n);
    RelatorReport on_f3 = verify_relators_on_space(gamma2_relators(m), f3.ops, f3.space, n);
    int failures = 0;
    std::string witness;
    for (const auto& check : on_f3.checks) {
        if (!check.pass) {
            ++failures;
            if (witness.empty()) witness = check.relator + ": " + check.witness;
        }
    }
    report.add(make_record(suite, "relators-break-on-f3", "gamma2-relators-fail-on-f3", params,
                           failures > 0,
                           std::to_string(failures) + " of " +
                               std::to_string(on_f3.checks.size()) + " relators fail; " + witness));

    {
        // Lowest-order eigenvalue on the carrier itself.
        bool ok = true;
        for (int i = 1; i <= m && ok; ++i) {
            for (int j = 1; j <= m && ok; ++j) {
                Vec image = f2.ops.at(lower_sym(i))
                                .apply(f2.ops.at(raise_sym(j))
                                           .apply(Vec{{f2.vacuum_index, Rational(1)}}));
                Vec expected;
                if (i == j) expected[f2.vacuum_index] = 2;
                ok = image == expected;
            }
        }
        report.add(make_record(suite, "carrier order eigenvalue", "carrier-vacuum-eigenvalue",
                               params, ok, "order 2"));
    }
}

void generalized_ansatz_suite(SuiteReport& report, int q, int m, int n) {
    const std::string suite = "generalized-ansatz";
    auto params = params_map({{"factors", q}, {"modes", m}, {"cutoff", n}});
    GeneralizedAnsatzReport r = generalized_ansatz(q, m, n);
    report.add(make_record(suite, "slot relations", "ansatz-slot-relations", params,
                           r.slot_relations_pass, ""));
    std::string cross_witness;
    for (const auto& f : r.cross_failures) cross_witness += f + "; ";
    report.add(make_record(suite, "cross-slot anticommutation", "ansatz-cross-anticommutation",
                           params, r.cross_relations_pass, cross_witness));
    report.add(make_record(suite, "paraboson relators of composite images",
                           "ansatz-paraboson-relators", params, r.paraboson_pass, ""));
    report.add(make_record(suite, "vacuum eigenvalue", "ansatz-vacuum-eigenvalue", params,
                           r.vacuum_eigenvalue_pass,
                           "lambda = " + to_string(r.vacuum_eigenvalue)));
}

void custom_relators_suite(SuiteReport& report, const RunConfig& config) {
    const std::string suite = "custom-relators";
    const int p = config.order.value_or(2);
    const int m = config.modes.value_or(2);
    const int n = config.cutoff.value_or(4);
    auto params = params_map({{"order", p}, {"modes", m}, {"cutoff", n}});
    std::vector<NCPoly> relators = parse_relator_file(config.relator_text, m);
    Carrier carrier = focklike_carrier(p, m, n);
    RelatorReport rr = verify_relators_on_space(relators, carrier.ops, carrier.space, n);
    append_relator_records(report, suite, "relators-on-carrier", "custom-relators-on-carrier",
                           params, rr);
}

}  // namespace

void RunConfig::validate() const {
    auto at_least = [](const std::optional<int>& v, int lo, const char* name) {
        if (v && *v < lo) {
            throw std::invalid_argument(std::string(name) + " must be >= " + std::to_string(lo));
        }
    };
    at_least(modes, 1, "--modes");
    at_least(order, 1, "--order");
    at_least(factors, 1, "--factors");
    at_least(cutoff, 0, "--cutoff");
    at_least(bound, 1, "--bound");
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = {
        "hopf-axioms",   "green-relations",    "focklike",        "single-paraboson",
        "ideal-inclusions", "gamma2",          "generalized-ansatz", "custom-relators",
        "all"};
    return names;
}

SuiteReport run_suite(const std::string& suite, const RunConfig& config) {
    config.validate();
    SuiteReport report;
    const bool all = suite == "all";
    auto grid = [](const std::optional<int>& v, std::vector<int> defaults) {
        return v ? std::vector<int>{*v} : std::move(defaults);
    };

    if (all || suite == "hopf-axioms") {
        hopf_axioms_suite(report, config.modes.value_or(2), config.cutoff.value_or(4));
    }
    if (all || suite == "green-relations") {
        for (int p : grid(config.order, {1, 2, 3})) {
            for (int m : grid(config.modes, {1, 2})) {
                green_relations_point(report, p, m, config.cutoff.value_or(6));
            }
        }
    }
    if (all || suite == "focklike") {
        for (int p : grid(config.order, {1, 2, 3, 4})) {
            for (int m : grid(config.modes, {1, 2})) {
                focklike_point(report, p, m, config.cutoff.value_or(4));
            }
        }
    }
    if (all || suite == "single-paraboson") {
        for (int p : grid(config.order, {1, 2, 3, 4})) {
            single_paraboson_point(report, p, config.cutoff.value_or(11) - 1);
        }
    }
    if (all || suite == "ideal-inclusions") {
        ideal_inclusions_suite(report, config.modes.value_or(2), config.bound.value_or(5));
    }
    if (all || suite == "gamma2") {
        gamma2_suite(report, config.modes.value_or(2), config.cutoff.value_or(5));
    }
    if (all || suite == "generalized-ansatz") {
        generalized_ansatz_suite(report, config.factors.value_or(2), config.modes.value_or(2),
                                 config.cutoff.value_or(4));
    }
    if (suite == "custom-relators") {
        custom_relators_suite(report, config);
    } else if (!all && std::find(suite_names().begin(), suite_names().end(), suite) ==
                           suite_names().end()) {
        throw std::invalid_argument("unknown suite: " + suite);
    }
    return report;
}

}  // namespace parabraid
