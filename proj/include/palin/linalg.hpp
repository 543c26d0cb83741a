#ifndef PALIN_LINALG_HPP
#define PALIN_LINALG_HPP

#include <vector>

// Dense linear algebra for the small systems that arise here (parameter
// Jacobians up to 2^d-1, correlation matrices up to d=24): LU with partial
// pivoting and a Cholesky factorization for symmetric positive definite
// checks.  Row-major square matrices.

namespace palin::linalg {

struct Lu {
    int n = 0;
    std::vector<double> lu;   // packed factors
    std::vector<int> perm;
    int sign = 1;
    bool singular = false;
};

Lu lu_factor(int n, std::vector<double> a);

/// Solves A x = b given the factorization; throws numeric_error if singular.
std::vector<double> lu_solve(const Lu& f, std::vector<double> b);

double lu_det(const Lu& f);

/// Inverse via column solves; throws numeric_error if singular.
std::vector<double> inverse(int n, const std::vector<double>& a);

double determinant(int n, const std::vector<double>& a);

/// Cholesky lower factor of a symmetric matrix; returns false if a pivot
/// falls at or below `tol` (matrix not positive definite at that tolerance).
bool cholesky(int n, const std::vector<double>& a, std::vector<double>& lower,
              double tol = 1e-10);

} // namespace palin::linalg

#endif
