#pragma once

#include "dsphere/forms.hpp"

#include <vector>

namespace dsphere {

// Square matrix of forms, row-major.
class MatForm {
public:
    MatForm() = default;
    explicit MatForm(int n) : n_(n), entries_(static_cast<size_t>(n * n)) {}
    static MatForm identity(int n);

    int size() const { return n_; }
    Form& operator()(int i, int j) { return entries_[static_cast<size_t>(i * n_ + j)]; }
    const Form& operator()(int i, int j) const { return entries_[static_cast<size_t>(i * n_ + j)]; }

    MatForm& operator+=(const MatForm& o);
    MatForm& operator-=(const MatForm& o);
    friend MatForm operator+(MatForm x, const MatForm& y) { return x += y; }
    friend MatForm operator-(MatForm x, const MatForm& y) { return x -= y; }
    friend MatForm operator*(const MatForm& x, const MatForm& y);
    friend MatForm operator*(const CoeffPoly& c, const MatForm& x);
    friend bool operator==(const MatForm& x, const MatForm& y) { return x.n_ == y.n_ && x.entries_ == y.entries_; }

    std::string str() const;  // one row per line, entries separated by " ; "

private:
    int n_ = 0;
    std::vector<Form> entries_;
};

MatForm matD(const MatForm& x);
Form matTrace(const MatForm& x);
MatForm matStar(const MatForm& x);  // conjugate transpose, entrywise star
MatForm matPow(const MatForm& x, int n);

// q = [[a, b], [-lam b*, a*]]
MatForm blockQ();
// e = (1/2) [[1 + t, q], [q*, 1 - t]]
MatForm projectorE();

// Tr(e de de de de)
Form chernTopForm();
// (1/32) Tr[(1+t)(dq dq*)^2 + (1-t)(dq* dq)^2 - 4 q dt dq* dq dq* + 4 q* dt dq dq* dq], from the 2x2 blocks
Form chernTopFormFromBlocks();
// Tr(e de de)
Form ch1Form();
// P with dP = ch1Form(), built from the shape c(t) dt (db b* + db* b) of the first Chern form
Form ch1Primitive();

}  // namespace dsphere
