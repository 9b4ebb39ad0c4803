#pragma once

#include "bohr/combinatorics.hpp"

#include <complex>
#include <iosfwd>
#include <map>
#include <vector>

namespace bohr {

using Complex = std::complex<double>;

// Positive polyradius (r_1, ..., r_n); the polydisc {|z_j| < r_j}.
class PolyRadius {
public:
    explicit PolyRadius(std::vector<double> radii);

    int dim() const { return static_cast<int>(radii_.size()); }
    double operator[](int i) const { return radii_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& radii() const { return radii_; }

private:
    std::vector<double> radii_;
};

// Multivariate power series truncated at a total-degree cap. Coefficients
// are stored sparsely; an absent key is a zero coefficient.
class TruncatedSeries {
public:
    TruncatedSeries(int n, int cap);

    int dim() const { return n_; }
    int cap() const { return cap_; }

    // inserts or overwrites c_alpha; rejects wrong dimension or |alpha| > cap
    void set(const MultiIndex& alpha, Complex c);
    // coefficient lookup, zero for absent keys
    Complex coeff(const MultiIndex& alpha) const;
    Complex constant_term() const;
    const std::map<MultiIndex, Complex>& coeffs() const { return coeffs_; }

private:
    int n_;
    int cap_;
    std::map<MultiIndex, Complex> coeffs_;
};

// Coefficient-wise sum; operands must share dimension and cap.
TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b);

// Scalar multiple.
TruncatedSeries scale(const TruncatedSeries& a, Complex s);

// Cauchy product truncated at the common cap; operands must share
// dimension and cap.
TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b);

// Bohr sum of term moduli: sum over |alpha| <= cap of |c_alpha| * z_mod^alpha.
// No tail correction; callers that need one must know their decay.
// z_mod entries must be nonnegative and match the dimension.
double majorant(const TruncatedSeries& f, const std::vector<double>& z_mod);

// Truncated evaluation sum c_alpha * z^alpha.
Complex evaluate(const TruncatedSeries& f, const std::vector<Complex>& z);

// Coefficient map c_alpha -> c_alpha * R^alpha: boundedness on the polydisc
// of polyradius R becomes boundedness on the unit polydisc.
TruncatedSeries rescale(const TruncatedSeries& f, const PolyRadius& R);

// (sum over |alpha| = k of |c_alpha|^2)^(1/2); requires k <= cap.
double homogeneous_l2(const TruncatedSeries& f, int k);

// Places a 1-variable series onto variable `axis` (0-based) of an
// n-variable series with the same cap.
TruncatedSeries embed(const TruncatedSeries& one_d, int n, int axis);

// Text format: one term per line, "alpha_1 ... alpha_n re im".
void write_series(std::ostream& os, const TruncatedSeries& f);

// Reads the text format; dimension is inferred from the first line
// (token count minus two) and the cap is the largest order present.
TruncatedSeries read_series(std::istream& is);

} // namespace bohr
