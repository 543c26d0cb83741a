#include "palin/linalg.hpp"

#include <cmath>
#include <numeric>

#include "palin/errors.hpp"

namespace palin::linalg {

Lu lu_factor(int n, std::vector<double> a) {
    Lu f;
    f.n = n;
    f.perm.resize(n);
    std::iota(f.perm.begin(), f.perm.end(), 0);
    for (int col = 0; col < n; ++col) {
        int piv = col;
        double best = std::abs(a[col * n + col]);
        for (int r = col + 1; r < n; ++r) {
            const double cand = std::abs(a[r * n + col]);
            if (cand > best) { best = cand; piv = r; }
        }
        if (best == 0.0) { f.singular = true; f.lu = std::move(a); return f; }
        if (piv != col) {
            for (int c = 0; c < n; ++c) std::swap(a[piv * n + c], a[col * n + c]);
            std::swap(f.perm[piv], f.perm[col]);
            f.sign = -f.sign;
        }
        const double d = a[col * n + col];
        for (int r = col + 1; r < n; ++r) {
            const double m = a[r * n + col] / d;
            a[r * n + col] = m;
            for (int c = col + 1; c < n; ++c) a[r * n + c] -= m * a[col * n + c];
        }
    }
    f.lu = std::move(a);
    return f;
}

std::vector<double> lu_solve(const Lu& f, std::vector<double> b) {
    if (f.singular) throw numeric_error("linear solve: singular matrix");
    const int n = f.n;
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = b[f.perm[i]];
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) x[i] -= f.lu[i * n + j] * x[j];
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i + 1; j < n; ++j) x[i] -= f.lu[i * n + j] * x[j];
        x[i] /= f.lu[i * n + i];
    }
    return x;
}

double lu_det(const Lu& f) {
    if (f.singular) return 0.0;
    double det = f.sign;
    for (int i = 0; i < f.n; ++i) det *= f.lu[i * f.n + i];
    return det;
}

std::vector<double> inverse(int n, const std::vector<double>& a) {
    const Lu f = lu_factor(n, a);
    if (f.singular) throw numeric_error("matrix inverse: singular matrix");
    std::vector<double> inv(static_cast<std::size_t>(n) * n);
    std::vector<double> e(n, 0.0);
    for (int c = 0; c < n; ++c) {
        e.assign(n, 0.0);
        e[c] = 1.0;
        const std::vector<double> x = lu_solve(f, e);
        for (int r = 0; r < n; ++r) inv[r * n + c] = x[r];
    }
    return inv;
}

double determinant(int n, const std::vector<double>& a) {
    return lu_det(lu_factor(n, a));
}

bool cholesky(int n, const std::vector<double>& a, std::vector<double>& lower, double tol) {
    lower.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            double s = a[i * n + j];
            for (int k = 0; k < j; ++k) s -= lower[i * n + k] * lower[j * n + k];
            if (i == j) {
                if (s <= tol) return false;
                lower[i * n + i] = std::sqrt(s);
            } else {
                lower[i * n + j] = s / lower[j * n + j];
            }
        }
    }
    return true;
}

} // namespace palin::linalg
