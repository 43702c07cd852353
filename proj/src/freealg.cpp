#include "parabraid/freealg.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace parabraid {

std::string to_string(const GenSym& g) {
    return "B" + std::to_string(g.mode) + (g.sign == Sign::plus ? "+" : "-");
}

Word Word::concat(const Word& other) const {
    Word out;
    out.syms.reserve(syms.size() + other.syms.size());
    out.syms.insert(out.syms.end(), syms.begin(), syms.end());
    out.syms.insert(out.syms.end(), other.syms.begin(), other.syms.end());
    return out;
}

std::string to_string(const Word& w) {
    if (w.is_unit()) return "I";
    std::string out;
    for (std::size_t i = 0; i < w.syms.size(); ++i) {
        if (i) out += ' ';
        out += to_string(w.syms[i]);
    }
    return out;
}

NCPoly NCPoly::term(Word w, Rational c) {
    NCPoly p;
    if (c != 0) p.terms_.emplace(std::move(w), std::move(c));
    return p;
}

int NCPoly::top_degree() const {
    if (terms_.empty()) return -1;
    // Words are degree-major ordered, so the last key has the top degree.
    return terms_.rbegin()->first.degree();
}

Rational NCPoly::coeff(const Word& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool NCPoly::homogeneous(Parity* out) const {
    if (terms_.empty()) return false;
    Parity p = terms_.begin()->first.parity();
    for (const auto& [w, c] : terms_) {
        if (w.parity() != p) return false;
    }
    if (out) *out = p;
    return true;
}

void NCPoly::add_term(const Word& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

NCPoly& NCPoly::operator+=(const NCPoly& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, c);
    return *this;
}

NCPoly& NCPoly::operator-=(const NCPoly& other) {
    for (const auto& [w, c] : other.terms_) add_term(w, -c);
    return *this;
}

NCPoly& NCPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_) coeff *= c;
    return *this;
}

NCPoly mul(const NCPoly& p, const NCPoly& q) {
    NCPoly out;
    for (const auto& [u, a] : p.terms_) {
        for (const auto& [v, b] : q.terms_) {
            out.add_term(u.concat(v), a * b);
        }
    }
    return out;
}

std::string to_string(const NCPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : p.terms()) {
        Rational a = c;
        if (first) {
            if (a < 0) {
                os << "- ";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        if (a != 1) os << to_string(a) << ' ';
        os << to_string(w);
        first = false;
    }
    return os.str();
}

NCPoly bracket(const NCPoly& p, const NCPoly& q) { return mul(p, q) - mul(q, p); }

NCPoly antibracket(const NCPoly& p, const NCPoly& q) { return mul(p, q) + mul(q, p); }

NCPoly triple_minus(const NCPoly& a, const NCPoly& b, const NCPoly& c) {
    return mul(mul(a, b), c) - mul(mul(c, b), a);
}

namespace {

void require_modes(int m) {
    if (m < 1) throw std::invalid_argument("mode count must be >= 1");
}

// Keeps first occurrences, drops zero polynomials and exact duplicates.
class RelatorSet {
  public:
    void push(NCPoly p) {
        if (p.is_zero()) return;
        if (seen_.insert(to_string(p)).second) out_.push_back(std::move(p));
    }
    std::vector<NCPoly> take() { return std::move(out_); }

  private:
    std::set<std::string> seen_;
    std::vector<NCPoly> out_;
};

Rational delta(int i, int j) { return Rational(i == j ? 1 : 0); }

}  // namespace

std::vector<NCPoly> boson_relators(int m) {
    require_modes(m);
    RelatorSet rs;
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            NCPoly r = bracket(NCPoly::gen(lower_sym(i)), NCPoly::gen(raise_sym(j)));
            r -= delta(i, j) * NCPoly::unit();
            rs.push(std::move(r));
        }
    }
    for (int i = 1; i <= m; ++i) {
        for (int j = 1; j <= m; ++j) {
            rs.push(bracket(NCPoly::gen(lower_sym(i)), NCPoly::gen(lower_sym(j))));
            rs.push(bracket(NCPoly::gen(raise_sym(i)), NCPoly::gen(raise_sym(j))));
        }
    }
    return rs.take();
}

std::vector<NCPoly> paraboson_relators(int m) {
    require_modes(m);
    const Sign signs[2] = {Sign::plus, Sign::minus};
    auto sgn = [](Sign s) { return s == Sign::plus ? 1 : -1; };
    RelatorSet rs;
    for (Sign xi : signs) {
        for (Sign eta : signs) {
            for (Sign eps : signs) {
                for (int i = 1; i <= m; ++i) {
                    for (int j = 1; j <= m; ++j) {
                        for (int k = 1; k <= m; ++k) {
                            NCPoly r = bracket(
                                antibracket(NCPoly::gen(GenSym{i, xi}), NCPoly::gen(GenSym{j, eta})),
                                NCPoly::gen(GenSym{k, eps}));
                            r -= Rational(sgn(eps) - sgn(eta)) * delta(j, k) * NCPoly::gen(GenSym{i, xi});
                            r -= Rational(sgn(eps) - sgn(xi)) * delta(i, k) * NCPoly::gen(GenSym{j, eta});
                            rs.push(std::move(r));
                        }
                    }
                }
            }
        }
    }
    return rs.take();
}

std::vector<NCPoly> gamma2_relators(int m) {
    require_modes(m);
    RelatorSet rs;
    auto g = [](int mode, Sign s) { return NCPoly::gen(GenSym{mode, s}); };
    for (int k = 1; k <= m; ++k) {
        for (int l = 1; l <= m; ++l) {
            for (int mm = 1; mm <= m; ++mm) {
                const Rational dkl = delta(k, l);
                const Rational dlm = delta(l, mm);
                // <bk-, bl+, bm-> = 2 dkl bm- - 2 dlm bk-
                rs.push(triple_minus(g(k, Sign::minus), g(l, Sign::plus), g(mm, Sign::minus)) -
                        2 * dkl * g(mm, Sign::minus) + 2 * dlm * g(k, Sign::minus));
                // <bm+, bl-, bk+> = 2 dkl bm+ - 2 dlm bk+
                rs.push(triple_minus(g(mm, Sign::plus), g(l, Sign::minus), g(k, Sign::plus)) -
                        2 * dkl * g(mm, Sign::plus) + 2 * dlm * g(k, Sign::plus));
                // <bk-, bl-, bm+> = 2 dlm bk-
                rs.push(triple_minus(g(k, Sign::minus), g(l, Sign::minus), g(mm, Sign::plus)) -
                        2 * dlm * g(k, Sign::minus));
                // <bm-, bl+, bk+> = 2 dlm bk+
                rs.push(triple_minus(g(mm, Sign::minus), g(l, Sign::plus), g(k, Sign::plus)) -
                        2 * dlm * g(k, Sign::plus));
                // <bk-, bl-, bm-> = 0
                rs.push(triple_minus(g(k, Sign::minus), g(l, Sign::minus), g(mm, Sign::minus)));
                // <bk+, bl+, bm+> = 0
                rs.push(triple_minus(g(k, Sign::plus), g(l, Sign::plus), g(mm, Sign::plus)));
            }
        }
    }
    return rs.take();
}

}  // namespace parabraid
