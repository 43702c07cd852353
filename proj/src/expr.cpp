#include "parabraid/expr.hpp"

#include <cctype>
#include <sstream>

namespace parabraid {

bool operator==(const AtomAst& a, const AtomAst& b) {
    return a.kind == b.kind && a.gen == b.gen && a.args == b.args;
}

bool operator==(const TermAst& a, const TermAst& b) {
    return a.has_coeff == b.has_coeff && a.coeff == b.coeff && a.atoms == b.atoms;
}

bool operator==(const ExprAst& a, const ExprAst& b) { return a.terms == b.terms; }

namespace {

class Parser {
  public:
    explicit Parser(const std::string& text) : text_(text) {}

    ExprAst run() {
        ExprAst out = expr();
        skip_ws();
        if (!eof()) fail("trailing input");
        return out;
    }

  private:
    const std::string& text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(message, static_cast<int>(pos_));
    }

    bool eof() const { return pos_ >= text_.size(); }
    char peek() const { return eof() ? '\0' : text_[pos_]; }
    char take() { return text_[pos_++]; }
    void skip_ws() {
        while (!eof() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool accept(char c) {
        skip_ws();
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c, const char* what) {
        if (!accept(c)) fail(std::string("expected ") + what);
    }

    bool starts_atom() {
        skip_ws();
        char c = peek();
        return c == 'B' || c == 'I' || c == '[' || c == '{' || c == '<' || c == '(';
    }

    std::string digits() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digits");
        std::string out;
        while (!eof() && std::isdigit(static_cast<unsigned char>(peek()))) out += take();
        return out;
    }

    ExprAst expr() {
        ExprAst out;
        int sign = accept('-') ? -1 : 1;
        out.terms.emplace_back(sign, term());
        while (true) {
            skip_ws();
            if (peek() == '+' || peek() == '-') {
                sign = take() == '+' ? 1 : -1;
                out.terms.emplace_back(sign, term());
            } else {
                break;
            }
        }
        return out;
    }

    TermAst term() {
        TermAst out;
        skip_ws();
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            std::string num = digits();
            std::string lit = num;
            if (accept('/')) lit += "/" + digits();
            out.has_coeff = true;
            out.coeff = rational_from_string(lit);
        }
        if (!starts_atom()) fail("expected a generator, I, bracket or parenthesis");
        while (starts_atom()) out.atoms.push_back(atom());
        return out;
    }

    AtomAst atom() {
        skip_ws();
        AtomAst out;
        switch (peek()) {
            case 'I':
                take();
                out.kind = AtomAst::Kind::unit;
                return out;
            case 'B': {
                take();
                out.kind = AtomAst::Kind::gen;
                out.gen.mode = std::stoi(digits());
                if (out.gen.mode < 1) fail("mode index must be >= 1");
                skip_ws();
                if (peek() == '+') out.gen.sign = Sign::plus;
                else if (peek() == '-') out.gen.sign = Sign::minus;
                else fail("expected + or - after the mode index");
                take();
                return out;
            }
            case '[': {
                take();
                out.kind = AtomAst::Kind::commutator;
                out.args.push_back(expr());
                expect(',', "','");
                out.args.push_back(expr());
                expect(']', "']'");
                return out;
            }
            case '{': {
                take();
                out.kind = AtomAst::Kind::anticommutator;
                out.args.push_back(expr());
                expect(',', "','");
                out.args.push_back(expr());
                expect('}', "'}'");
                return out;
            }
            case '<': {
                take();
                out.kind = AtomAst::Kind::triple;
                out.args.push_back(expr());
                expect(',', "','");
                out.args.push_back(expr());
                expect(',', "','");
                out.args.push_back(expr());
                expect('>', "'>'");
                return out;
            }
            case '(': {
                take();
                out.kind = AtomAst::Kind::paren;
                out.args.push_back(expr());
                expect(')', "')'");
                return out;
            }
            default:
                fail("expected a generator, I, bracket or parenthesis");
        }
    }
};

}  // namespace

ExprAst parse_expr(const std::string& text) { return Parser(text).run(); }

namespace {

void print_expr_into(const ExprAst& ast, std::ostringstream& os);

void print_atom(const AtomAst& atom, std::ostringstream& os) {
    switch (atom.kind) {
        case AtomAst::Kind::unit:
            os << 'I';
            return;
        case AtomAst::Kind::gen:
            os << to_string(atom.gen);
            return;
        case AtomAst::Kind::commutator:
            os << '[';
            print_expr_into(atom.args[0], os);
            os << ", ";
            print_expr_into(atom.args[1], os);
            os << ']';
            return;
        case AtomAst::Kind::anticommutator:
            os << '{';
            print_expr_into(atom.args[0], os);
            os << ", ";
            print_expr_into(atom.args[1], os);
            os << '}';
            return;
        case AtomAst::Kind::triple:
            os << '<';
            print_expr_into(atom.args[0], os);
            os << ", ";
            print_expr_into(atom.args[1], os);
            os << ", ";
            print_expr_into(atom.args[2], os);
            os << '>';
            return;
        case AtomAst::Kind::paren:
            os << '(';
            print_expr_into(atom.args[0], os);
            os << ')';
            return;
    }
}

void print_expr_into(const ExprAst& ast, std::ostringstream& os) {
    for (std::size_t i = 0; i < ast.terms.size(); ++i) {
        const auto& [sign, term] = ast.terms[i];
        if (i == 0) {
            if (sign < 0) os << '-';
        } else {
            os << (sign < 0 ? " - " : " + ");
        }
        bool spaced = false;
        if (term.has_coeff) {
            os << to_string(term.coeff);
            spaced = true;
        }
        for (const AtomAst& a : term.atoms) {
            if (spaced) os << ' ';
            print_atom(a, os);
            spaced = true;
        }
    }
}

}  // namespace

std::string print_expr(const ExprAst& ast) {
    std::ostringstream os;
    print_expr_into(ast, os);
    return os.str();
}

namespace {

NCPoly lower_atom(const AtomAst& atom, int max_mode) {
    switch (atom.kind) {
        case AtomAst::Kind::unit:
            return NCPoly::unit();
        case AtomAst::Kind::gen:
            if (max_mode > 0 && atom.gen.mode > max_mode) {
                throw ParseError("unknown mode index " + std::to_string(atom.gen.mode) +
                                     " (modes run 1.." + std::to_string(max_mode) + ")",
                                 0);
            }
            return NCPoly::gen(atom.gen);
        case AtomAst::Kind::commutator:
            return bracket(lower_expr(atom.args[0], max_mode), lower_expr(atom.args[1], max_mode));
        case AtomAst::Kind::anticommutator:
            return antibracket(lower_expr(atom.args[0], max_mode),
                               lower_expr(atom.args[1], max_mode));
        case AtomAst::Kind::triple:
            return triple_minus(lower_expr(atom.args[0], max_mode),
                                lower_expr(atom.args[1], max_mode),
                                lower_expr(atom.args[2], max_mode));
        case AtomAst::Kind::paren:
            return lower_expr(atom.args[0], max_mode);
    }
    return NCPoly::zero();
}

}  // namespace

NCPoly lower_expr(const ExprAst& ast, int max_mode) {
    NCPoly out;
    for (const auto& [sign, term] : ast.terms) {
        NCPoly t = NCPoly::unit();
        for (const AtomAst& a : term.atoms) t = mul(t, lower_atom(a, max_mode));
        if (term.has_coeff) t *= term.coeff;
        if (sign < 0) t *= Rational(-1);
        out += t;
    }
    return out;
}

NCPoly parse_poly(const std::string& text, int max_mode) {
    return lower_expr(parse_expr(text), max_mode);
}

std::vector<NCPoly> parse_relator_file(const std::string& content, int max_mode) {
    std::vector<NCPoly> out;
    std::istringstream in(content);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::string trimmed = line;
        const auto first = trimmed.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        if (trimmed[first] == '#') continue;
        try {
            out.push_back(parse_poly(line, max_mode));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what(), e.column());
        }
    }
    return out;
}

}  // namespace parabraid
