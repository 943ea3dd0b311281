#include "gcx/sym_eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace gcx {

bool SymMatrix::is_symmetric(double tol) const {
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (std::abs(at(i, j) - at(j, i)) > tol) return false;
    return true;
}

std::vector<double> SymMatrix::apply(const std::vector<double>& x) const {
    std::vector<double> y(n_, 0.0);
    for (int i = 0; i < n_; ++i) {
        const double* row = a_.data() + static_cast<size_t>(i) * n_;
        double acc = 0.0;
        for (int j = 0; j < n_; ++j) acc += row[j] * x[j];
        y[i] = acc;
    }
    return y;
}

namespace {

// Householder reduction to tridiagonal form; EISPACK tred2 layout.
// a is modified in place; when want_vectors, a accumulates the orthogonal
// transform, else only the scratch parts are touched.
void tridiagonalize(std::vector<double>& a, int n, std::vector<double>& d,
                    std::vector<double>& e, bool want_vectors) {
    auto A = [&](int i, int j) -> double& { return a[static_cast<size_t>(i) * n + j]; };

    for (int i = n - 1; i > 0; --i) {
        int l = i - 1;
        double h = 0.0, scale = 0.0;
        if (l > 0) {
            for (int k = 0; k <= l; ++k) scale += std::abs(A(i, k));
            if (scale == 0.0) {
                e[i] = A(i, l);
            } else {
                for (int k = 0; k <= l; ++k) {
                    A(i, k) /= scale;
                    h += A(i, k) * A(i, k);
                }
                double f = A(i, l);
                double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
                e[i] = scale * g;
                h -= f * g;
                A(i, l) = f - g;
                f = 0.0;
                for (int j = 0; j <= l; ++j) {
                    if (want_vectors) A(j, i) = A(i, j) / h;
                    g = 0.0;
                    for (int k = 0; k <= j; ++k) g += A(j, k) * A(i, k);
                    for (int k = j + 1; k <= l; ++k) g += A(k, j) * A(i, k);
                    e[j] = g / h;
                    f += e[j] * A(i, j);
                }
                double hh = f / (h + h);
                for (int j = 0; j <= l; ++j) {
                    f = A(i, j);
                    e[j] = g = e[j] - hh * f;
                    for (int k = 0; k <= j; ++k)
                        A(j, k) -= f * e[k] + g * A(i, k);
                }
            }
        } else {
            e[i] = A(i, l);
        }
        d[i] = h;
    }
    d[0] = 0.0;
    e[0] = 0.0;
    for (int i = 0; i < n; ++i) {
        if (want_vectors) {
            if (d[i] != 0.0) {
                for (int j = 0; j < i; ++j) {
                    double g = 0.0;
                    for (int k = 0; k < i; ++k) g += A(i, k) * A(k, j);
                    for (int k = 0; k < i; ++k) A(k, j) -= g * A(k, i);
                }
            }
            d[i] = A(i, i);
            A(i, i) = 1.0;
            for (int j = 0; j < i; ++j) A(j, i) = A(i, j) = 0.0;
        } else {
            d[i] = A(i, i);
        }
    }
}

// Implicit-shift QL on a tridiagonal (d, e); EISPACK tql2/tql1.
void tridiag_ql(std::vector<double>& d, std::vector<double>& e, int n,
                std::vector<double>* z) {
    auto Z = [&](int i, int j) -> double& { return (*z)[static_cast<size_t>(i) * n + j]; };
    for (int i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;

    for (int l = 0; l < n; ++l) {
        int iter = 0;
        int m;
        do {
            for (m = l; m < n - 1; ++m) {
                double dd = std::abs(d[m]) + std::abs(d[m + 1]);
                if (std::abs(e[m]) <= 1e-300 + 2.3e-16 * dd) break;
            }
            if (m != l) {
                if (++iter > 50) throw std::runtime_error("sym_eig: QL did not converge");
                double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
                double r = std::hypot(g, 1.0);
                g = d[m] - d[l] + e[l] / (g + (g >= 0.0 ? std::abs(r) : -std::abs(r)));
                double s = 1.0, c = 1.0, p = 0.0;
                int i = m - 1;
                for (; i >= l; --i) {
                    double f = s * e[i];
                    double b = c * e[i];
                    r = std::hypot(f, g);
                    e[i + 1] = r;
                    if (r == 0.0) {
                        d[i + 1] -= p;
                        e[m] = 0.0;
                        break;
                    }
                    s = f / r;
                    c = g / r;
                    g = d[i + 1] - p;
                    r = (d[i] - g) * s + 2.0 * c * b;
                    p = s * r;
                    d[i + 1] = g + p;
                    g = c * r - b;
                    if (z) {
                        for (int k = 0; k < n; ++k) {
                            f = Z(k, i + 1);
                            Z(k, i + 1) = s * Z(k, i) + c * f;
                            Z(k, i) = c * Z(k, i) - s * f;
                        }
                    }
                }
                if (r == 0.0 && i >= l) continue;
                d[l] -= p;
                e[l] = g;
                e[m] = 0.0;
            }
        } while (m != l);
    }
}

}  // namespace

EigResult sym_eig(const SymMatrix& m, bool want_vectors) {
    if (!m.is_symmetric(1e-12))
        throw std::invalid_argument("sym_eig: matrix not symmetric");
    const int n = m.size();
    EigResult res;
    if (n == 0) return res;

    std::vector<double> a = m.data();
    std::vector<double> d(n, 0.0), e(n, 0.0);
    tridiagonalize(a, n, d, e, want_vectors);
    tridiag_ql(d, e, n, want_vectors ? &a : nullptr);

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int i, int j) { return d[i] < d[j]; });
    res.values.resize(n);
    for (int j = 0; j < n; ++j) res.values[j] = d[order[j]];
    if (want_vectors) {
        res.vectors.assign(n, std::vector<double>(n));
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                res.vectors[j][i] = a[static_cast<size_t>(i) * n + order[j]];
    }
    return res;
}

Spectrum make_spectrum(std::vector<double> eigenvalues, double tol) {
    std::sort(eigenvalues.begin(), eigenvalues.end());
    Spectrum s;
    s.eigenvalues = std::move(eigenvalues);
    s.tolerance = tol;
    size_t i = 0;
    while (i < s.eigenvalues.size()) {
        size_t j = i;
        double sum = 0.0;
        // chain grouping: successive gaps below tol
        while (j < s.eigenvalues.size() &&
               (j == i || s.eigenvalues[j] - s.eigenvalues[j - 1] <= tol)) {
            sum += s.eigenvalues[j];
            ++j;
        }
        s.groups.push_back({sum / static_cast<double>(j - i), static_cast<int>(j - i)});
        i = j;
    }
    return s;
}

int multiplicity_at(const Spectrum& s, double value) {
    int count = 0;
    for (double x : s.eigenvalues)
        if (std::abs(x - value) <= s.tolerance) ++count;
    return count;
}

bool spectral_gap_ok(const Spectrum& s, double value, double gap) {
    for (double x : s.eigenvalues) {
        double d = std::abs(x - value);
        if (d > s.tolerance && d <= gap) return false;
    }
    return true;
}

}  // namespace gcx
