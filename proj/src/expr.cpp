#include "dsphere/expr.hpp"

#include "dsphere/errors.hpp"
#include "dsphere/sphereint.hpp"

#include <cctype>

namespace dsphere {

namespace {

bool isScalarForm(const Form& f) {
    for (const auto& [k, c] : f.terms())
        if (k.word != 0 || !k.mono.isOne() || c.tDegree() > 0 || c.size() != 1 || !c.terms().begin()->first.jet.empty() ||
            c.terms().begin()->first.lam || c.terms().begin()->first.lamc)
            return false;
    return true;
}

Gauss scalarOf(const Form& f) {
    if (f.isZero()) return Gauss(0);
    return f.terms().begin()->second.constantTerm();
}

MatForm mulEntries(const MatForm& m, const Form& f, bool left) {
    MatForm r(m.size());
    for (int i = 0; i < m.size(); ++i)
        for (int j = 0; j < m.size(); ++j) r(i, j) = left ? f * m(i, j) : m(i, j) * f;
    return r;
}

class Parser {
public:
    Parser(const std::string& text, const PhiSpec& phi) : s_(text), phi_(phi) {}

    ExprValue parse() {
        ExprValue v = expr();
        skipSpace();
        if (pos_ != s_.size()) throw ParseError("unexpected '" + std::string(1, s_[pos_]) + "'", pos_);
        return v;
    }

private:
    const std::string& s_;
    const PhiSpec& phi_;
    size_t pos_ = 0;

    void skipSpace() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skipSpace();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    static bool operandStart(char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '(' || c == '.';
    }

    // '*' at pos_ followed (after spaces) by an operand is multiplication
    bool starIsSuffix() const {
        size_t p = pos_ + 1;
        while (p < s_.size() && std::isspace(static_cast<unsigned char>(s_[p]))) ++p;
        return p >= s_.size() || !operandStart(s_[p]);
    }

    ExprValue expr() {
        ExprValue v = term();
        while (true) {
            if (accept('+')) v = add(v, term(), 1);
            else if (accept('-')) v = add(v, term(), -1);
            else return v;
        }
    }

    ExprValue term() {
        ExprValue v = unary();
        while (true) {
            if (accept('*')) {
                v = mul(v, unary());
            } else if (accept('/')) {
                skipSpace();
                size_t at = pos_;
                Rational r = number();
                if (r == 0) throw ParseError("division by zero", at);
                v = mul(v, ExprValue(Form(CoeffPoly(Gauss(1 / r)))));
            } else {
                return v;
            }
        }
    }

    ExprValue unary() {
        if (accept('-')) return mul(ExprValue(Form(CoeffPoly(-1))), unary());
        return power();
    }

    ExprValue power() {
        ExprValue v = primary();
        if (accept('^')) {
            skipSpace();
            size_t at = pos_;
            Rational r = number();
            if (r.get_den() != 1 || r < 0 || r > 64) throw ParseError("exponent must be an integer in [0, 64]", at);
            int n = static_cast<int>(r.get_num().get_si());
            if (auto* f = std::get_if<Form>(&v)) return f->pow(n);
            if (auto* m = std::get_if<MatForm>(&v)) return matPow(*m, n);
            ExprValue r1 = ExactValue(Gauss(1));
            for (int k = 0; k < n; ++k) r1 = mul(r1, v);
            return r1;
        }
        return v;
    }

    Rational number() {
        skipSpace();
        size_t start = pos_;
        while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
        if (start == pos_) throw ParseError("expected a number", start);
        try {
            return parseRational(s_.substr(start, pos_ - start));
        } catch (const std::exception&) {
            throw ParseError("malformed number", start);
        }
    }

    std::string identifier() {
        size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        while (pos_ < s_.size() && s_[pos_] == '\'') ++pos_;
        return s_.substr(start, pos_ - start);
    }

    ExprValue primary() {
        skipSpace();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of input", pos_);
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            ExprValue v = expr();
            expect(')');
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return Form(CoeffPoly(Gauss(number())));
        if (!std::isalpha(static_cast<unsigned char>(c))) throw ParseError("unexpected '" + std::string(1, c) + "'", pos_);
        size_t at = pos_;
        std::string name = identifier();
        skipSpace();
        if (pos_ < s_.size() && s_[pos_] == '(' && (name == "d" || name == "tr" || name == "integrate" || name == "star")) {
            ++pos_;
            ExprValue arg = expr();
            expect(')');
            return apply(name, arg, at);
        }
        if ((name == "a" || name == "b" || name == "da" || name == "db") && pos_ < s_.size() && s_[pos_] == '*' &&
            starIsSuffix()) {
            ++pos_;
            name += "*";
        }
        return named(name, at);
    }

    ExprValue named(const std::string& name, size_t at) {
        if (name == "a") return Form(AlgElement::a());
        if (name == "a*") return Form(AlgElement::aStar());
        if (name == "b") return Form(AlgElement::b());
        if (name == "b*") return Form(AlgElement::bStar());
        if (name == "t") return Form(AlgElement::t());
        if (name == "da") return Form::diff(kDa);
        if (name == "da*") return Form::diff(kDaStar);
        if (name == "db") return Form::diff(kDb);
        if (name == "db*") return Form::diff(kDbStar);
        if (name == "dt") return Form::dt();
        if (name == "lam") return Form(CoeffPoly::lam());
        if (name == "lamc") return Form(CoeffPoly::lamc());
        if (name == "lam'") return Form(CoeffPoly::lamDot());
        if (name == "i") return Form(CoeffPoly(Gauss::I()));
        if (name == "omega") return volumeForm();
        if (name == "e") return projectorE();
        if (name == "q") return blockQ();
        if (name.rfind("phi", 0) == 0 && name.find_first_not_of('\'', 3) == std::string::npos)
            return Form(CoeffPoly::phi(static_cast<int>(name.size()) - 3));
        throw ParseError("unknown name '" + name + "'", at);
    }

    ExprValue apply(const std::string& fn, const ExprValue& arg, size_t at) {
        if (std::holds_alternative<ExactValue>(arg)) throw ParseError(fn + "() needs a form or matrix", at);
        if (fn == "d") {
            if (auto* f = std::get_if<Form>(&arg)) return d(*f);
            return matD(std::get<MatForm>(arg));
        }
        if (fn == "star") {
            if (auto* f = std::get_if<Form>(&arg)) return star(*f);
            return matStar(std::get<MatForm>(arg));
        }
        if (fn == "tr") {
            if (auto* m = std::get_if<MatForm>(&arg)) return matTrace(*m);
            throw ParseError("tr() needs a matrix", at);
        }
        if (auto* f = std::get_if<Form>(&arg)) return integralOfForm(*f, phi_);
        throw ParseError("integrate() needs a form", at);
    }

    ExprValue add(const ExprValue& x, const ExprValue& y, int sign) {
        size_t at = pos_;
        if (auto* fx = std::get_if<Form>(&x)) {
            if (auto* fy = std::get_if<Form>(&y)) return sign > 0 ? *fx + *fy : *fx - *fy;
            if (auto* ey = std::get_if<ExactValue>(&y); ey && isScalarForm(*fx))
                return ExactValue(scalarOf(*fx)) + ExactValue(sign > 0 ? ey->coeff : -ey->coeff, ey->piPower);
        }
        if (auto* mx = std::get_if<MatForm>(&x))
            if (auto* my = std::get_if<MatForm>(&y)) {
                if (mx->size() != my->size()) throw ParseError("matrix size mismatch", at);
                return sign > 0 ? *mx + *my : *mx - *my;
            }
        if (auto* ex = std::get_if<ExactValue>(&x)) {
            ExactValue ey;
            if (auto* e = std::get_if<ExactValue>(&y)) ey = *e;
            else if (auto* f = std::get_if<Form>(&y); f && isScalarForm(*f)) ey = ExactValue(scalarOf(*f));
            else throw ParseError("cannot add a form to a number", at);
            if (sign < 0) ey = ExactValue(-ey.coeff, ey.piPower);
            try {
                return *ex + ey;
            } catch (const std::exception& err) {
                throw ParseError(err.what(), at);
            }
        }
        throw ParseError("cannot add these operands", at);
    }

    ExprValue mul(const ExprValue& x, const ExprValue& y) {
        size_t at = pos_;
        if (auto* fx = std::get_if<Form>(&x)) {
            if (auto* fy = std::get_if<Form>(&y)) return *fx * *fy;
            if (auto* my = std::get_if<MatForm>(&y)) return mulEntries(*my, *fx, true);
            if (isScalarForm(*fx)) return ExactValue(scalarOf(*fx)) * std::get<ExactValue>(y);
        }
        if (auto* mx = std::get_if<MatForm>(&x)) {
            if (auto* my = std::get_if<MatForm>(&y)) {
                if (mx->size() != my->size()) throw ParseError("matrix size mismatch", at);
                return *mx * *my;
            }
            if (auto* fy = std::get_if<Form>(&y)) return mulEntries(*mx, *fy, false);
        }
        if (auto* ex = std::get_if<ExactValue>(&x)) {
            if (auto* ey = std::get_if<ExactValue>(&y)) return *ex * *ey;
            if (auto* fy = std::get_if<Form>(&y); fy && isScalarForm(*fy)) return *ex * ExactValue(scalarOf(*fy));
        }
        throw ParseError("cannot multiply these operands", at);
    }
};

}  // namespace

ExprValue evalExpr(const std::string& text, const PhiSpec& phi) { return Parser(text, phi).parse(); }

std::string formatValue(const ExprValue& v) {
    if (auto* f = std::get_if<Form>(&v)) return f->strLamDot();
    if (auto* m = std::get_if<MatForm>(&v)) return m->str();
    const ExactValue& x = std::get<ExactValue>(v);
    ExactValue vol = sphereVolume();
    if (x.piPower == vol.piPower && !x.isZero()) {
        Gauss ratio = x.coeff / vol.coeff;
        if (!(ratio.isReal() && ratio.re.get_den() == 1)) return x.strRelative(vol, "(8/3)*pi^2");
    }
    return x.str();
}

}  // namespace dsphere
