#include "symdisc/banded.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <algorithm>
#include <cmath>
#include <string>

#include "symdisc/errors.hpp"

namespace symdisc {

void validate(const GridState& s, std::size_t min_nodes) {
    if (s.x.size() != s.u.size()) throw OutOfDomain("grid state: x and u differ in length");
    if (s.x.size() < min_nodes)
        throw OutOfDomain("grid state: need at least " + std::to_string(min_nodes) + " nodes");
    for (std::size_t i = 0; i + 1 < s.x.size(); ++i)
        if (!(s.x[i + 1] > s.x[i])) throw OutOfDomain("grid state: x not strictly increasing");
}

double total_variation(const std::vector<double>& u) {
    double tv = 0.0;
    for (std::size_t i = 0; i + 1 < u.size(); ++i) tv += std::abs(u[i + 1] - u[i]);
    return tv;
}

std::vector<double> solve_tridiagonal(std::vector<double> lower, std::vector<double> diag,
                                      std::vector<double> upper, std::vector<double> rhs) {
    const std::size_t n = diag.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(diag[i]) < kDenominatorFloor) throw SingularSystem("tridiagonal: zero pivot");
        if (i + 1 == n) break;
        const double m = lower[i + 1] / diag[i];
        diag[i + 1] -= m * upper[i];
        rhs[i + 1] -= m * rhs[i];
    }
    std::vector<double> y(n);
    for (std::size_t i = n; i-- > 0;) {
        const double up = (i + 1 < n) ? upper[i] * y[i + 1] : 0.0;
        y[i] = (rhs[i] - up) / diag[i];
    }
    return y;
}

namespace {

double inf_norm(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
}

}  // namespace

NewtonResult newton_banded(const ResidualFn& F, std::vector<double> y0, int bandwidth,
                           const NewtonConfig& cfg) {
    const int n = static_cast<int>(y0.size());
    const int colours = 2 * bandwidth + 1;
    NewtonResult res;
    res.y = std::move(y0);
    std::vector<double> r = F(res.y);
    res.residual_inf = inf_norm(r);
    if (!std::isfinite(res.residual_inf)) throw NewtonDivergence("newton: non-finite initial residual");

    while (res.residual_inf > cfg.tol) {
        if (res.iterations >= cfg.max_iter)
            throw NewtonDivergence("newton: residual " + std::to_string(res.residual_inf) +
                                   " after " + std::to_string(res.iterations) + " iterations");
        ++res.iterations;

        std::vector<Eigen::Triplet<double>> trip;
        trip.reserve(static_cast<std::size_t>(n) * colours);
        for (int c = 0; c < colours; ++c) {
            std::vector<double> yp = res.y;
            std::vector<double> step(n, 0.0);
            for (int j = c; j < n; j += colours) {
                step[j] = cfg.jacobian_fd_step * (1.0 + std::abs(res.y[j]));
                yp[j] += step[j];
            }
            const std::vector<double> rp = F(yp);
            for (int j = c; j < n; j += colours) {
                for (int i = std::max(0, j - bandwidth); i <= std::min(n - 1, j + bandwidth); ++i) {
                    const double v = (rp[i] - r[i]) / step[j];
                    if (v != 0.0) trip.emplace_back(i, j, v);
                }
            }
        }
        Eigen::SparseMatrix<double> J(n, n);
        J.setFromTriplets(trip.begin(), trip.end());
        Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;
        lu.compute(J);
        if (lu.info() != Eigen::Success) throw SingularSystem("newton: singular Jacobian");
        Eigen::VectorXd rhs = Eigen::Map<Eigen::VectorXd>(r.data(), n);
        Eigen::VectorXd dy = lu.solve(-rhs);

        double lambda = 1.0;
        for (int tries = 0;; ++tries) {
            std::vector<double> yt = res.y;
            for (int j = 0; j < n; ++j) yt[j] += lambda * dy[j];
            std::vector<double> rt = F(yt);
            const double nt = inf_norm(rt);
            if ((std::isfinite(nt) && nt < res.residual_inf) || tries == 10) {
                if (!std::isfinite(nt)) throw NewtonDivergence("newton: non-finite residual");
                res.y = std::move(yt);
                r = std::move(rt);
                res.residual_inf = nt;
                break;
            }
            lambda /= 2;
        }
    }
    return res;
}

}  // namespace symdisc
