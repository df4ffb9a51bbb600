#include "vlab/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "vlab/errors.hpp"

namespace vlab {

Tensor matmul(const Tensor& a, const Tensor& b) {
    const std::size_t n = a.rows(), m = a.cols(), p = b.cols();
    if (b.rows() != m)
        throw ShapeError("matmul: inner dimensions " + a.shape_str() + " vs " + b.shape_str());
    Tensor c({n, p});
    const double* A = a.data();
    const double* B = b.data();
    double* C = c.data();
    // i-k-j order: the inner loop runs over contiguous rows of B and C
    for (std::size_t i = 0; i < n; ++i) {
        const double* arow = A + i * m;
        double* crow = C + i * p;
        for (std::size_t k = 0; k < m; ++k) {
            const double av = arow[k];
            const double* brow = B + k * p;
            for (std::size_t j = 0; j < p; ++j) crow[j] += av * brow[j];
        }
    }
    return c;
}

Tensor matmul_tn(const Tensor& a, const Tensor& b) {
    const std::size_t n = a.rows(), m = a.cols(), p = b.cols();
    if (b.rows() != n)
        throw ShapeError("matmul_tn: row counts " + a.shape_str() + " vs " + b.shape_str());
    Tensor c({m, p});
    const double* A = a.data();
    const double* B = b.data();
    double* C = c.data();
    for (std::size_t i = 0; i < n; ++i) {
        const double* arow = A + i * m;
        const double* brow = B + i * p;
        for (std::size_t k = 0; k < m; ++k) {
            const double av = arow[k];
            double* crow = C + k * p;
            for (std::size_t j = 0; j < p; ++j) crow[j] += av * brow[j];
        }
    }
    return c;
}

Tensor matmul_nt(const Tensor& a, const Tensor& b) {
    const std::size_t n = a.rows(), m = a.cols(), p = b.rows();
    if (b.cols() != m)
        throw ShapeError("matmul_nt: column counts " + a.shape_str() + " vs " + b.shape_str());
    Tensor c({n, p});
    const double* A = a.data();
    const double* B = b.data();
    double* C = c.data();
    for (std::size_t i = 0; i < n; ++i) {
        const double* arow = A + i * m;
        double* crow = C + i * p;
        for (std::size_t j = 0; j < p; ++j) {
            const double* brow = B + j * m;
            double acc = 0.0;
            for (std::size_t k = 0; k < m; ++k) acc += arow[k] * brow[k];
            crow[j] = acc;
        }
    }
    return c;
}

Tensor transpose(const Tensor& a) {
    const std::size_t n = a.rows(), m = a.cols();
    Tensor t({m, n});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) t(j, i) = a(i, j);
    return t;
}

Tensor column_mean(const Tensor& x) {
    const std::size_t n = x.rows(), m = x.cols();
    if (n == 0) throw ValueError("column_mean: empty input");
    Tensor mu({m});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) mu[j] += x(i, j);
    for (std::size_t j = 0; j < m; ++j) mu[j] /= static_cast<double>(n);
    return mu;
}

Tensor column_variance(const Tensor& x, bool population) {
    const std::size_t n = x.rows(), m = x.cols();
    if (n == 0) throw ValueError("column_variance: empty input");
    if (!population && n < 2) throw ValueError("column_variance: sample mode needs n >= 2");
    const Tensor mu = column_mean(x);
    Tensor var({m});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) {
            const double d = x(i, j) - mu[j];
            var[j] += d * d;
        }
    const double denom = population ? static_cast<double>(n) : static_cast<double>(n - 1);
    for (std::size_t j = 0; j < m; ++j) var[j] /= denom;
    return var;
}

Tensor covariance(const Tensor& x, bool population) {
    const std::size_t n = x.rows(), m = x.cols();
    if (n == 0) throw ValueError("covariance: empty input");
    if (!population && n < 2) throw ValueError("covariance: sample mode needs n >= 2");
    const Tensor mu = column_mean(x);
    Tensor centered({n, m});
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < m; ++j) centered(i, j) = x(i, j) - mu[j];
    Tensor cov = matmul_tn(centered, centered);
    const double denom = population ? static_cast<double>(n) : static_cast<double>(n - 1);
    for (std::size_t i = 0; i < cov.size(); ++i) cov[i] /= denom;
    // enforce exact symmetry against accumulation-order noise
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const double v = 0.5 * (cov(i, j) + cov(j, i));
            cov(i, j) = v;
            cov(j, i) = v;
        }
    return cov;
}

namespace {

double off_diagonal_norm(const Tensor& a) {
    const std::size_t m = a.rows();
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            if (i != j) acc += a(i, j) * a(i, j);
    return std::sqrt(acc);
}

double diagonal_norm(const Tensor& a) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) acc += a(i, i) * a(i, i);
    return std::sqrt(acc);
}

} // namespace

EigenDecomposition sym_eig(const Tensor& s, double sym_tol) {
    const std::size_t m = s.rows();
    if (s.cols() != m) throw ShapeError("sym_eig: square matrix required, got " + s.shape_str());
    if (m == 0) throw ValueError("sym_eig: empty matrix");
    double scale = 0.0;
    for (std::size_t i = 0; i < s.size(); ++i) scale = std::max(scale, std::abs(s[i]));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (std::abs(s(i, j) - s(j, i)) > sym_tol * std::max(1.0, scale))
                throw ValueError("sym_eig: input not symmetric within tolerance");

    Tensor a = s;
    Tensor q = Tensor::identity(m);
    double* A = a.data();
    double* Q = q.data();

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        const double off = off_diagonal_norm(a);
        const double diag = diagonal_norm(a);
        if (off <= 1e-12 * std::max(diag, 1e-300)) break;
        for (std::size_t p = 0; p + 1 < m; ++p) {
            for (std::size_t r = p + 1; r < m; ++r) {
                const double apr = A[p * m + r];
                if (apr == 0.0) continue;
                const double app = A[p * m + p];
                const double arr = A[r * m + r];
                // stable rotation angle (Golub & Van Loan sym.schur2)
                const double tau = (arr - app) / (2.0 * apr);
                const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                              : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = t * c;
                // rows/columns p and r of A
                for (std::size_t k = 0; k < m; ++k) {
                    const double akp = A[k * m + p];
                    const double akr = A[k * m + r];
                    A[k * m + p] = c * akp - sn * akr;
                    A[k * m + r] = sn * akp + c * akr;
                }
                for (std::size_t k = 0; k < m; ++k) {
                    const double apk = A[p * m + k];
                    const double ark = A[r * m + k];
                    A[p * m + k] = c * apk - sn * ark;
                    A[r * m + k] = sn * apk + c * ark;
                }
                // accumulate eigenvectors
                for (std::size_t k = 0; k < m; ++k) {
                    const double qkp = Q[k * m + p];
                    const double qkr = Q[k * m + r];
                    Q[k * m + p] = c * qkp - sn * qkr;
                    Q[k * m + r] = sn * qkp + c * qkr;
                }
            }
        }
    }

    // sort descending, stable over the sweep order for ties
    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a(i, i) > a(j, j); });

    EigenDecomposition out{Tensor({m}), Tensor({m, m})};
    for (std::size_t idx = 0; idx < m; ++idx) {
        const std::size_t src = order[idx];
        out.values[idx] = a(src, src);
        for (std::size_t k = 0; k < m; ++k) out.vectors(k, idx) = q(k, src);
    }
    return out;
}

Tensor sqrtm_psd(const Tensor& s) {
    const EigenDecomposition eig = sym_eig(s);
    const std::size_t m = s.rows();
    Tensor lam = eig.values;
    for (std::size_t i = 0; i < m; ++i) {
        if (lam[i] < -1e-9)
            throw ValueError("sqrtm_psd: matrix not PSD (eigenvalue " + std::to_string(lam[i]) +
                             ")");
        lam[i] = std::sqrt(std::max(lam[i], 0.0));
    }
    // Q * diag(sqrt(lam)) * Q^T
    Tensor scaled = eig.vectors;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j) scaled(i, j) *= lam[j];
    Tensor r = matmul_nt(scaled, eig.vectors);
    // symmetrize against rounding
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j) {
            const double v = 0.5 * (r(i, j) + r(j, i));
            r(i, j) = v;
            r(j, i) = v;
        }
    return r;
}

double trace(const Tensor& s) {
    const std::size_t m = s.rows();
    if (s.cols() != m) throw ShapeError("trace: square matrix required");
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) acc += s(i, i);
    return acc;
}

double frobenius_norm(const Tensor& a) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * a[i];
    return std::sqrt(acc);
}

} // namespace vlab
