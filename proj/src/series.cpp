#include "bohr/series.hpp"

#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>

namespace bohr {

PolyRadius::PolyRadius(std::vector<double> radii) : radii_(std::move(radii)) {
    if (radii_.empty()) throw std::invalid_argument("PolyRadius: dimension must be >= 1");
    for (double r : radii_) {
        if (!(r > 0.0)) throw std::invalid_argument("PolyRadius: radii must be positive");
    }
}

TruncatedSeries::TruncatedSeries(int n, int cap) : n_(n), cap_(cap) {
    if (n < 1) throw std::invalid_argument("TruncatedSeries: dimension must be >= 1");
    if (cap < 0) throw std::invalid_argument("TruncatedSeries: cap must be >= 0");
}

void TruncatedSeries::set(const MultiIndex& alpha, Complex c) {
    if (alpha.dim() != n_) throw std::invalid_argument("TruncatedSeries::set: dimension mismatch");
    if (alpha.order() > cap_) throw std::invalid_argument("TruncatedSeries::set: order exceeds cap");
    coeffs_[alpha] = c;
}

Complex TruncatedSeries::coeff(const MultiIndex& alpha) const {
    auto it = coeffs_.find(alpha);
    return it == coeffs_.end() ? Complex(0.0, 0.0) : it->second;
}

Complex TruncatedSeries::constant_term() const {
    return coeff(MultiIndex(std::vector<int>(static_cast<std::size_t>(n_), 0)));
}

namespace {

void require_compatible(const TruncatedSeries& a, const TruncatedSeries& b, const char* op) {
    if (a.dim() != b.dim() || a.cap() != b.cap()) {
        throw std::invalid_argument(std::string(op) + ": dimension or cap mismatch");
    }
}

} // namespace

TruncatedSeries add(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_compatible(a, b, "add");
    TruncatedSeries r = a;
    for (const auto& [alpha, c] : b.coeffs()) r.set(alpha, r.coeff(alpha) + c);
    return r;
}

TruncatedSeries scale(const TruncatedSeries& a, Complex s) {
    TruncatedSeries r(a.dim(), a.cap());
    if (s == Complex(0.0, 0.0)) return r;
    for (const auto& [alpha, c] : a.coeffs()) r.set(alpha, c * s);
    return r;
}

TruncatedSeries multiply(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_compatible(a, b, "multiply");
    TruncatedSeries r(a.dim(), a.cap());
    const int n = a.dim();
    std::vector<int> sum(static_cast<std::size_t>(n));
    for (const auto& [pa, ca] : a.coeffs()) {
        for (const auto& [pb, cb] : b.coeffs()) {
            if (pa.order() + pb.order() > a.cap()) continue;
            for (int i = 0; i < n; ++i) sum[static_cast<std::size_t>(i)] = pa[i] + pb[i];
            MultiIndex key(sum);
            r.set(key, r.coeff(key) + ca * cb);
        }
    }
    return r;
}

double majorant(const TruncatedSeries& f, const std::vector<double>& z_mod) {
    if (static_cast<int>(z_mod.size()) != f.dim()) {
        throw std::invalid_argument("majorant: dimension mismatch");
    }
    for (double m : z_mod) {
        if (!(m >= 0.0)) throw std::invalid_argument("majorant: moduli must be nonnegative");
    }
    double s = 0.0;
    for (const auto& [alpha, c] : f.coeffs()) {
        double term = std::abs(c);
        for (int i = 0; i < f.dim(); ++i) {
            for (int e = 0; e < alpha[i]; ++e) term *= z_mod[static_cast<std::size_t>(i)];
        }
        s += term;
    }
    return s;
}

Complex evaluate(const TruncatedSeries& f, const std::vector<Complex>& z) {
    if (static_cast<int>(z.size()) != f.dim()) {
        throw std::invalid_argument("evaluate: dimension mismatch");
    }
    Complex s(0.0, 0.0);
    for (const auto& [alpha, c] : f.coeffs()) {
        Complex term = c;
        for (int i = 0; i < f.dim(); ++i) {
            for (int e = 0; e < alpha[i]; ++e) term *= z[static_cast<std::size_t>(i)];
        }
        s += term;
    }
    return s;
}

TruncatedSeries rescale(const TruncatedSeries& f, const PolyRadius& R) {
    if (R.dim() != f.dim()) throw std::invalid_argument("rescale: dimension mismatch");
    TruncatedSeries r(f.dim(), f.cap());
    for (const auto& [alpha, c] : f.coeffs()) {
        double factor = 1.0;
        for (int i = 0; i < f.dim(); ++i) {
            for (int e = 0; e < alpha[i]; ++e) factor *= R[i];
        }
        r.set(alpha, c * factor);
    }
    return r;
}

double homogeneous_l2(const TruncatedSeries& f, int k) {
    if (k < 0 || k > f.cap()) throw std::invalid_argument("homogeneous_l2: degree outside cap");
    double s = 0.0;
    for (const auto& [alpha, c] : f.coeffs()) {
        if (alpha.order() == k) s += std::norm(c);
    }
    return std::sqrt(s);
}

TruncatedSeries embed(const TruncatedSeries& one_d, int n, int axis) {
    if (one_d.dim() != 1) throw std::invalid_argument("embed: source must be 1-variable");
    if (axis < 0 || axis >= n) throw std::invalid_argument("embed: axis outside dimension");
    TruncatedSeries r(n, one_d.cap());
    for (const auto& [alpha, c] : one_d.coeffs()) {
        std::vector<int> parts(static_cast<std::size_t>(n), 0);
        parts[static_cast<std::size_t>(axis)] = alpha[0];
        r.set(MultiIndex(parts), c);
    }
    return r;
}

void write_series(std::ostream& os, const TruncatedSeries& f) {
    os.precision(17);
    for (const auto& [alpha, c] : f.coeffs()) {
        for (int i = 0; i < f.dim(); ++i) os << alpha[i] << ' ';
        os << c.real() << ' ' << c.imag() << '\n';
    }
}

TruncatedSeries read_series(std::istream& is) {
    std::vector<std::pair<std::vector<int>, Complex>> terms;
    int n = -1;
    int max_order = 0;
    std::string line;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty()) continue;
        if (tok.size() < 3) throw std::runtime_error("read_series: malformed line '" + line + "'");
        if (n < 0) n = static_cast<int>(tok.size()) - 2;
        if (static_cast<int>(tok.size()) != n + 2) {
            throw std::runtime_error("read_series: inconsistent token count in '" + line + "'");
        }
        std::vector<int> parts(static_cast<std::size_t>(n));
        int order = 0;
        for (int i = 0; i < n; ++i) {
            const std::string& cell = tok[static_cast<std::size_t>(i)];
            std::size_t pos = 0;
            int pi;
            try {
                pi = std::stoi(cell, &pos);
            } catch (const std::exception&) {
                throw std::runtime_error("read_series: bad exponent '" + cell + "'");
            }
            if (pos != cell.size() || pi < 0) {
                throw std::runtime_error("read_series: bad exponent '" + cell + "'");
            }
            parts[static_cast<std::size_t>(i)] = pi;
            order += pi;
        }
        Complex c;
        {
            double re, im;
            std::size_t pos_re = 0, pos_im = 0;
            const std::string& cr = tok[static_cast<std::size_t>(n)];
            const std::string& ci = tok[static_cast<std::size_t>(n) + 1];
            try {
                re = std::stod(cr, &pos_re);
                im = std::stod(ci, &pos_im);
            } catch (const std::exception&) {
                throw std::runtime_error("read_series: bad coefficient in '" + line + "'");
            }
            if (pos_re != cr.size() || pos_im != ci.size()) {
                throw std::runtime_error("read_series: bad coefficient in '" + line + "'");
            }
            c = Complex(re, im);
        }
        max_order = std::max(max_order, order);
        terms.emplace_back(std::move(parts), c);
    }
    if (n < 0) throw std::runtime_error("read_series: empty input");
    TruncatedSeries f(n, max_order);
    for (auto& [parts, c] : terms) f.set(MultiIndex(parts), c);
    return f;
}

} // namespace bohr
