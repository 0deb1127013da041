#include <Eigen/Dense>
#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <random>

#include "hyplace/fem.hpp"

namespace hyplace::fem {

namespace {

using SpMat = Eigen::SparseMatrix<double>;
using Vec = Eigen::VectorXd;

// Shift-invert Lanczos for K u = lambda M u in the M-inner product, full
// reorthogonalization.  Returns the eigenvalues closest to the shift.
std::vector<double> lanczos_pass(const SpMat& K, const SpMat& M, int nev, double sigma, int ncv,
                                 double* max_residual) {
    const int n = static_cast<int>(K.rows());
    ncv = std::min(ncv, n);
    SpMat OP = K - sigma * M;
    Eigen::SimplicialLDLT<SpMat> solver(OP);
    if (solver.info() != Eigen::Success) throw mesh_error("solve_eigs: factorization failed");

    std::mt19937 rng(42);
    std::normal_distribution<double> dist;
    Vec v(n);
    for (int i = 0; i < n; ++i) v[i] = dist(rng);

    Eigen::MatrixXd Q(n, ncv);
    std::vector<double> alpha, beta;
    Vec Mv = M * v;
    double nrm = std::sqrt(v.dot(Mv));
    Q.col(0) = v / nrm;

    for (int j = 0; j < ncv; ++j) {
        Vec w = solver.solve(M * Q.col(j));
        const double a = w.dot(M * Q.col(j));
        alpha.push_back(a);
        w -= a * Q.col(j);
        if (j > 0) w -= beta[j - 1] * Q.col(j - 1);
        // full reorthogonalization (twice)
        for (int pass = 0; pass < 2; ++pass) {
            const Vec Mw = M * w;
            for (int i = 0; i <= j; ++i) w -= Q.col(i).dot(Mw) * Q.col(i);
        }
        const double b = std::sqrt(std::max(0.0, w.dot(M * w)));
        if (j + 1 < ncv) {
            if (b < 1e-13) {
                // invariant subspace hit; restart with a fresh direction
                for (int i = 0; i < n; ++i) w[i] = dist(rng);
                for (int pass = 0; pass < 2; ++pass)
                    for (int i = 0; i <= j; ++i) w -= Q.col(i).dot(M * w) * Q.col(i);
                const double b2 = std::sqrt(std::max(1e-300, w.dot(M * w)));
                Q.col(j + 1) = w / b2;
                beta.push_back(0.0);
            } else {
                Q.col(j + 1) = w / b;
                beta.push_back(b);
            }
        }
    }

    Eigen::MatrixXd T = Eigen::MatrixXd::Zero(ncv, ncv);
    for (int i = 0; i < ncv; ++i) {
        T(i, i) = alpha[i];
        if (i + 1 < ncv) T(i, i + 1) = T(i + 1, i) = beta[i];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(T);

    // theta -> lambda = sigma + 1/theta; keep physical lambdas and sort
    struct Pair {
        double lambda;
        int idx;
    };
    std::vector<Pair> cands;
    for (int i = 0; i < ncv; ++i) {
        const double theta = es.eigenvalues()[i];
        if (std::abs(theta) < 1e-14) continue;
        const double lambda = sigma + 1.0 / theta;
        if (lambda > -1e-6) cands.push_back({lambda, i});
    }
    std::sort(cands.begin(), cands.end(),
              [](const Pair& a, const Pair& b) { return a.lambda < b.lambda; });
    if (static_cast<int>(cands.size()) > nev) cands.resize(nev);

    double worst = 0;
    std::vector<double> out;
    for (const auto& c : cands) {
        const Vec y = Q * es.eigenvectors().col(c.idx);
        const Vec r = K * y - c.lambda * (M * y);
        const double denom = (M * y).norm();
        worst = std::max(worst, r.norm() / std::max(denom, 1e-300));
        out.push_back(c.lambda);
    }
    if (max_residual) *max_residual = worst;
    return out;
}

}  // namespace

std::vector<double> solve_eigs(const Eigen::SparseMatrix<double>& K,
                               const Eigen::SparseMatrix<double>& M, int nev, double shift,
                               double* max_residual) {
    if (nev <= 0) return {};
    int ncv = std::max(2 * nev + 48, 80);
    for (int attempt = 0; attempt < 3; ++attempt) {
        double worst = 0;
        auto eigs = lanczos_pass(K, M, nev, shift, ncv, &worst);
        if (max_residual) *max_residual = worst;
        if ((worst < 1e-8 && static_cast<int>(eigs.size()) >= std::min(nev, int(K.rows()))) ||
            ncv >= K.rows())
            return eigs;
        ncv = ncv * 3 / 2 + 32;
    }
    double worst = 0;
    auto eigs = lanczos_pass(K, M, nev, shift, std::min<int>(ncv, K.rows()), &worst);
    if (max_residual) *max_residual = worst;
    return eigs;
}

std::vector<EigenResult::Cluster> cluster(const std::vector<double>& eigs, double rel_tol) {
    std::vector<EigenResult::Cluster> out;
    double prev = 0;
    for (double v : eigs) {
        if (!out.empty() && v - prev <= rel_tol * std::max(std::abs(v), 1e-6)) {
            out.back().multiplicity++;  // representative stays the first member
        } else {
            out.push_back({v, 1});
        }
        prev = v;
    }
    return out;
}

}  // namespace hyplace::fem
