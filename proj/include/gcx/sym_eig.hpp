#pragma once

#include <cstddef>
#include <vector>

namespace gcx {

// Dense symmetric real matrix, row-major.
class SymMatrix {
  public:
    SymMatrix() = default;
    explicit SymMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n, 0.0) {}

    int size() const { return n_; }
    double& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    double at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }
    const std::vector<double>& data() const { return a_; }

    bool is_symmetric(double tol = 0.0) const;
    std::vector<double> apply(const std::vector<double>& x) const;

  private:
    int n_ = 0;
    std::vector<double> a_;
};

struct EigResult {
    std::vector<double> values;            // ascending
    std::vector<std::vector<double>> vectors;  // vectors[j] pairs with values[j]
};

// Householder tridiagonalization + implicit-shift QL.  Deterministic (fixed
// elimination order, no randomization).  Eigenvalues sorted ascending;
// eigenvectors optional since accumulating them costs another O(n^3).
EigResult sym_eig(const SymMatrix& m, bool want_vectors = false);

// Multiplicity grouping of a sorted eigenvalue list.
struct SpectrumGroup {
    double value = 0.0;  // group mean
    int multiplicity = 0;
};

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending
    double tolerance = 1e-6;
    std::vector<SpectrumGroup> groups;
};

Spectrum make_spectrum(std::vector<double> eigenvalues, double tol = 1e-6);

// Count of eigenvalues within tol of value.
int multiplicity_at(const Spectrum& s, double value);
// Guard check: no eigenvalue in the annulus tol < |x - value| <= gap.
bool spectral_gap_ok(const Spectrum& s, double value, double gap);

}  // namespace gcx
