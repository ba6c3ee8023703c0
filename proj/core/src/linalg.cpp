#include "geograph/linalg.hpp"

#include "geograph/errors.hpp"

namespace geograph {

namespace {

Int minor3(const Mat4& a, int row, int col) {
    int r[3], c[3];
    for (int i = 0, p = 0; i < 4; ++i) {
        if (i != row) r[p++] = i;
    }
    for (int j = 0, p = 0; j < 4; ++j) {
        if (j != col) c[p++] = j;
    }
    return a[r[0]][c[0]] * (a[r[1]][c[1]] * a[r[2]][c[2]] -
                            a[r[1]][c[2]] * a[r[2]][c[1]]) -
           a[r[0]][c[1]] * (a[r[1]][c[0]] * a[r[2]][c[2]] -
                            a[r[1]][c[2]] * a[r[2]][c[0]]) +
           a[r[0]][c[2]] * (a[r[1]][c[0]] * a[r[2]][c[1]] -
                            a[r[1]][c[1]] * a[r[2]][c[0]]);
}

}  // namespace

ExactSolver4::ExactSolver4(const Mat4& a) {
    Mat4 cof;
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j < 4; ++j) {
            Int m = minor3(a, i, j);
            cof[i][j] = ((i + j) % 2 == 0) ? m : -m;
            adjugate_[j][i] = cof[i][j];
        }
    }
    det_ = 0;
    for (int j = 0; j < 4; ++j) det_ += a[0][j] * cof[0][j];
    if (det_ == 0) throw SingularSystem("4x4 system has zero determinant");
}

QVec4 ExactSolver4::solve(const IVec4& rhs) const {
    QVec4 x;
    for (int i = 0; i < 4; ++i) {
        Int num = 0;
        for (int j = 0; j < 4; ++j) num += adjugate_[i][j] * rhs[j];
        x[i] = make_rat(num, det_);
    }
    return x;
}

QVec4 solve4(const Mat4& a, const IVec4& rhs) {
    return ExactSolver4(a).solve(rhs);
}

}  // namespace geograph
