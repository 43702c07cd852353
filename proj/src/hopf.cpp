#include "parabraid/hopf.hpp"

#include <mutex>
#include <sstream>
#include <stdexcept>

namespace parabraid {

TensorPoly TensorPoly::unit(int arity) {
    TensorPoly t(arity);
    t.add_term(Tuple(static_cast<std::size_t>(arity)), 1);
    return t;
}

TensorPoly TensorPoly::from_ncpoly(const NCPoly& p) {
    TensorPoly t(1);
    for (const auto& [w, c] : p.terms()) t.add_term({w}, c);
    return t;
}

NCPoly TensorPoly::to_ncpoly() const {
    if (arity_ != 1) throw std::invalid_argument("to_ncpoly requires arity 1");
    NCPoly p;
    for (const auto& [t, c] : terms_) p.add_term(t[0], c);
    return p;
}

void TensorPoly::add_term(const Tuple& t, const Rational& c) {
    if (static_cast<int>(t.size()) != arity_)
        throw std::invalid_argument("tuple arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& other) {
    if (arity_ != other.arity_) throw std::invalid_argument("arity mismatch");
    for (const auto& [t, c] : other.terms_) add_term(t, c);
    return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& other) {
    if (arity_ != other.arity_) throw std::invalid_argument("arity mismatch");
    for (const auto& [t, c] : other.terms_) add_term(t, -c);
    return *this;
}

TensorPoly& TensorPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, coeff] : terms_) coeff *= c;
    return *this;
}

std::string to_string(const TensorPoly& t) {
    if (t.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [tuple, c] : t.terms()) {
        if (!first) os << " + ";
        first = false;
        os << to_string(c) << " (";
        for (std::size_t i = 0; i < tuple.size(); ++i) {
            if (i) os << " (x) ";
            os << to_string(tuple[i]);
        }
        os << ")";
    }
    return os.str();
}

TensorPoly tensor_mul(const TensorPoly& a, const TensorPoly& b) {
    if (a.arity() != b.arity()) throw std::invalid_argument("arity mismatch");
    const int q = a.arity();
    TensorPoly out(q);
    for (const auto& [u, ca] : a.terms()) {
        for (const auto& [v, cb] : b.terms()) {
            // v_i passes u_{i+1}..u_q on its way left; count odd crossings.
            long crossings = 0;
            for (int i = 0; i < q; ++i) {
                if (v[static_cast<std::size_t>(i)].parity() != Parity::odd) continue;
                for (int j = i + 1; j < q; ++j) {
                    if (u[static_cast<std::size_t>(j)].parity() == Parity::odd) ++crossings;
                }
            }
            TensorPoly::Tuple prod(static_cast<std::size_t>(q));
            for (int i = 0; i < q; ++i) {
                prod[static_cast<std::size_t>(i)] =
                    u[static_cast<std::size_t>(i)].concat(v[static_cast<std::size_t>(i)]);
            }
            out.add_term(prod, (crossings % 2 == 0) ? ca * cb : -(ca * cb));
        }
    }
    return out;
}

namespace {

TensorPoly primitive_image(const GenSym& g, int arity) {
    TensorPoly out(arity);
    TensorPoly::Tuple tuple(static_cast<std::size_t>(arity));
    for (int r = 0; r < arity; ++r) {
        tuple[static_cast<std::size_t>(r)] = Word{{g}};
        out.add_term(tuple, 1);
        tuple[static_cast<std::size_t>(r)] = Word{};
    }
    return out;
}

TensorPoly word_coproduct(const Word& w, int arity) {
    static std::map<std::pair<Word, int>, TensorPoly> memo;
    static std::mutex memo_mutex;
    const std::pair<Word, int> key{w, arity};
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    TensorPoly result = TensorPoly::unit(arity);
    for (const GenSym& g : w.syms) result = tensor_mul(result, primitive_image(g, arity));
    {
        std::lock_guard<std::mutex> lock(memo_mutex);
        memo.emplace(key, result);
    }
    return result;
}

}  // namespace

TensorPoly iterated_coproduct(const NCPoly& p, int arity) {
    if (arity < 2) throw std::invalid_argument("iterated coproduct needs arity >= 2");
    TensorPoly out(arity);
    for (const auto& [w, c] : p.terms()) {
        TensorPoly img = word_coproduct(w, arity);
        img *= c;
        out += img;
    }
    return out;
}

TensorPoly coproduct(const NCPoly& p) { return iterated_coproduct(p, 2); }

TensorPoly apply_coproduct_at(const TensorPoly& t, int position) {
    if (position < 0 || position >= t.arity())
        throw std::invalid_argument("coproduct position out of range");
    TensorPoly out(t.arity() + 1);
    for (const auto& [tuple, c] : t.terms()) {
        TensorPoly inner = word_coproduct(tuple[static_cast<std::size_t>(position)], 2);
        for (const auto& [pair, ic] : inner.terms()) {
            TensorPoly::Tuple spliced;
            spliced.reserve(tuple.size() + 1);
            for (int k = 0; k < position; ++k) spliced.push_back(tuple[static_cast<std::size_t>(k)]);
            spliced.push_back(pair[0]);
            spliced.push_back(pair[1]);
            for (int k = position + 1; k < t.arity(); ++k)
                spliced.push_back(tuple[static_cast<std::size_t>(k)]);
            out.add_term(spliced, c * ic);
        }
    }
    return out;
}

TensorPoly apply_counit_at(const TensorPoly& t, int position) {
    if (position < 0 || position >= t.arity())
        throw std::invalid_argument("counit position out of range");
    if (t.arity() < 2) throw std::invalid_argument("cannot drop the only component");
    TensorPoly out(t.arity() - 1);
    for (const auto& [tuple, c] : t.terms()) {
        if (!tuple[static_cast<std::size_t>(position)].is_unit()) continue;  // counit kills it
        TensorPoly::Tuple rest;
        rest.reserve(tuple.size() - 1);
        for (int k = 0; k < t.arity(); ++k) {
            if (k != position) rest.push_back(tuple[static_cast<std::size_t>(k)]);
        }
        out.add_term(rest, c);
    }
    return out;
}

TensorPoly apply_antipode_at(const TensorPoly& t, int position) {
    if (position < 0 || position >= t.arity())
        throw std::invalid_argument("antipode position out of range");
    TensorPoly out(t.arity());
    for (const auto& [tuple, c] : t.terms()) {
        const Word& w = tuple[static_cast<std::size_t>(position)];
        NCPoly sw = antipode(NCPoly::term(w, 1));
        for (const auto& [rw, rc] : sw.terms()) {
            TensorPoly::Tuple copy = tuple;
            copy[static_cast<std::size_t>(position)] = rw;
            out.add_term(copy, c * rc);
        }
    }
    return out;
}

NCPoly multiply_out(const TensorPoly& t) {
    NCPoly out;
    for (const auto& [tuple, c] : t.terms()) {
        Word prod;
        for (const Word& w : tuple) prod = prod.concat(w);
        out.add_term(prod, c);
    }
    return out;
}

Rational counit(const NCPoly& p) { return p.coeff(Word{}); }

NCPoly antipode(const NCPoly& p) {
    NCPoly out;
    for (const auto& [w, c] : p.terms()) {
        const std::size_t n = w.syms.size();
        Word rev;
        rev.syms.assign(w.syms.rbegin(), w.syms.rend());
        // One sign per generator, one per odd-odd interchange in the reversal.
        const std::size_t flips = n + n * (n - 1) / 2;
        out.add_term(rev, (flips % 2 == 0) ? c : -c);
    }
    return out;
}

namespace {

void record(HopfAxiomReport& report, const std::string& name, bool pass,
            const std::string& witness) {
    report.checks.push_back({name, pass, pass ? std::string() : witness});
}

}  // namespace

HopfAxiomReport check_hopf_axioms(int m) {
    if (m < 1) throw std::invalid_argument("mode count must be >= 1");
    HopfAxiomReport report;
    const Sign signs[2] = {Sign::plus, Sign::minus};
    for (int i = 1; i <= m; ++i) {
        for (Sign s : signs) {
            const GenSym g{i, s};
            const NCPoly pg = NCPoly::gen(g);
            const std::string nm = to_string(g);
            {
                TensorPoly lhs = apply_coproduct_at(coproduct(pg), 0);
                TensorPoly rhs = apply_coproduct_at(coproduct(pg), 1);
                record(report, "coassociativity " + nm, lhs == rhs,
                       to_string(lhs - rhs));
            }
            {
                NCPoly left = apply_counit_at(coproduct(pg), 0).to_ncpoly();
                NCPoly right = apply_counit_at(coproduct(pg), 1).to_ncpoly();
                bool ok = left == pg && right == pg;
                record(report, "counit law " + nm, ok,
                       to_string(left - pg) + " ; " + to_string(right - pg));
            }
            {
                NCPoly left = multiply_out(apply_antipode_at(coproduct(pg), 0));
                NCPoly right = multiply_out(apply_antipode_at(coproduct(pg), 1));
                NCPoly expected = counit(pg) * NCPoly::unit();
                bool ok = left == expected && right == expected;
                record(report, "antipode law " + nm, ok,
                       to_string(left - expected) + " ; " + to_string(right - expected));
            }
            for (int arity = 3; arity <= 4; ++arity) {
                TensorPoly base = iterated_coproduct(pg, arity - 1);
                TensorPoly reference = apply_coproduct_at(base, 0);
                bool ok = reference == iterated_coproduct(pg, arity);
                for (int pos = 1; pos < arity - 1 && ok; ++pos) {
                    ok = apply_coproduct_at(base, pos) == reference;
                }
                record(report, "position independence " + nm + " arity " +
                                   std::to_string(arity),
                       ok, "insertion position changed the iterated coproduct");
            }
        }
    }
    report.pass = true;
    for (const auto& c : report.checks) report.pass = report.pass && c.pass;
    return report;
}

}  // namespace parabraid
