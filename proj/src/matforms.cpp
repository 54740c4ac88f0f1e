#include "dsphere/matforms.hpp"

#include <stdexcept>

namespace dsphere {

MatForm MatForm::identity(int n) {
    MatForm m(n);
    for (int i = 0; i < n; ++i) m(i, i) = Form(CoeffPoly(1));
    return m;
}

MatForm& MatForm::operator+=(const MatForm& o) {
    if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
    for (size_t k = 0; k < entries_.size(); ++k) entries_[k] += o.entries_[k];
    return *this;
}

MatForm& MatForm::operator-=(const MatForm& o) {
    if (n_ != o.n_) throw std::invalid_argument("matrix size mismatch");
    for (size_t k = 0; k < entries_.size(); ++k) entries_[k] -= o.entries_[k];
    return *this;
}

MatForm operator*(const MatForm& x, const MatForm& y) {
    if (x.n_ != y.n_) throw std::invalid_argument("matrix size mismatch");
    MatForm r(x.n_);
    for (int i = 0; i < x.n_; ++i)
        for (int j = 0; j < x.n_; ++j)
            for (int k = 0; k < x.n_; ++k) {
                const Form& a = x(i, k);
                const Form& b = y(k, j);
                if (!a.isZero() && !b.isZero()) r(i, j) += a * b;
            }
    return r;
}

MatForm operator*(const CoeffPoly& c, const MatForm& x) {
    MatForm r = x;
    for (auto& e : r.entries_) e = c * e;
    return r;
}

std::string MatForm::str() const {
    std::string out;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j < n_; ++j) out += (j ? " ; " : "") + (*this)(i, j).strLamDot();
        out += "\n";
    }
    return out;
}

MatForm matD(const MatForm& x) {
    MatForm r(x.size());
    for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < x.size(); ++j) r(i, j) = d(x(i, j));
    return r;
}

Form matTrace(const MatForm& x) {
    Form r;
    for (int i = 0; i < x.size(); ++i) r += x(i, i);
    return r;
}

MatForm matStar(const MatForm& x) {
    MatForm r(x.size());
    for (int i = 0; i < x.size(); ++i)
        for (int j = 0; j < x.size(); ++j) r(i, j) = star(x(j, i));
    return r;
}

MatForm matPow(const MatForm& x, int n) {
    MatForm r = MatForm::identity(x.size());
    for (int i = 0; i < n; ++i) r = r * x;
    return r;
}

MatForm blockQ() {
    MatForm q(2);
    q(0, 0) = Form(AlgElement::a());
    q(0, 1) = Form(AlgElement::b());
    q(1, 0) = Form(-(CoeffPoly::lam() * AlgElement::bStar()));
    q(1, 1) = Form(AlgElement::aStar());
    return q;
}

MatForm projectorE() {
    MatForm q = blockQ(), qs = matStar(blockQ());
    MatForm e(4);
    CoeffPoly half(Rational(1, 2));
    CoeffPoly onePlus = half * (CoeffPoly(1) + CoeffPoly::t());
    CoeffPoly oneMinus = half * (CoeffPoly(1) - CoeffPoly::t());
    for (int i = 0; i < 2; ++i) {
        e(i, i) = Form(onePlus);
        e(i + 2, i + 2) = Form(oneMinus);
        for (int j = 0; j < 2; ++j) {
            e(i, j + 2) = half * q(i, j);
            e(i + 2, j) = half * qs(i, j);
        }
    }
    return e;
}

Form chernTopForm() {
    static const Form top = [] {
        MatForm e = projectorE();
        MatForm de = matD(e);
        MatForm de2 = de * de;
        return matTrace(e * (de2 * de2));
    }();
    return top;
}

Form chernTopFormFromBlocks() {
    MatForm q = blockQ(), qs = matStar(q);
    MatForm dq = matD(q), dqs = matD(qs);
    MatForm dt = CoeffPoly(1) * MatForm::identity(2);
    for (int i = 0; i < 2; ++i) dt(i, i) = Form::dt();
    MatForm p1 = dq * dqs, p2 = dqs * dq;
    Form onePlus = Form(CoeffPoly(1) + CoeffPoly::t()), oneMinus = Form(CoeffPoly(1) - CoeffPoly::t());
    Form sum = onePlus * matTrace(p1 * p1) + oneMinus * matTrace(p2 * p2) -
               CoeffPoly(4) * matTrace(q * dt * dqs * dq * dqs) + CoeffPoly(4) * matTrace(qs * dt * dq * dqs * dq);
    return CoeffPoly(Rational(1, 32)) * sum;
}

Form ch1Form() {
    static const Form f = [] {
        MatForm e = projectorE();
        MatForm de = matD(e);
        return matTrace(e * (de * de));
    }();
    return f;
}

Form ch1Primitive() {
    Form f = ch1Form();
    const DiffWord dtDbStar = DiffWord((1u << kDt) | (1u << kDbStar));
    const DiffWord dtDb = DiffWord((1u << kDt) | (1u << kDb));
    CoeffPoly c1, c2;
    for (const auto& [k, c] : f.terms()) {
        if (k.word == dtDbStar && k.mono == AlgMonomial{0, 0, 1, 0}) c1 = c;
        else if (k.word == dtDb && k.mono == AlgMonomial{0, 0, 0, 1}) c2 = c;
        else throw std::logic_error("first Chern form is not of the shape c(t) dt d(b b*)");
    }
    if (c1 != c2) throw std::logic_error("first Chern form is not of the shape c(t) dt d(b b*)");
    // d(-c dt b b*) = c dt (db b* + db* b)
    return Form::term(-c1, DiffWord(1u << kDt), {0, 0, 1, 1});
}

}  // namespace dsphere
