// Copyright 2026 The measchain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "measchain/discriminator.h"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

#include "measchain/errors.h"
#include "measchain/layout.h"

namespace measchain {

namespace {

constexpr double kGramNullTolerance = 1e-10;
constexpr double kConstraintRankTolerance = 1e-9;
constexpr double kForcedTolerance = 1e-8;
constexpr double kWitnessTolerance = 1e-9;

class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[std::max(a, b)] = std::min(a, b);
        }
    }

   private:
    std::vector<std::size_t> parent_;
};

// Orthonormal basis (columns) of the null space of a real matrix.
Eigen::MatrixXd real_null_space(const Eigen::MatrixXd &m, std::size_t cols) {
    if (m.rows() == 0) {
        return Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(cols), static_cast<Eigen::Index>(cols));
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
    const auto &sv = svd.singularValues();
    const double scale = sv.size() > 0 ? std::max(1.0, sv(0)) : 1.0;
    Eigen::Index rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i) {
        if (sv(i) > kConstraintRankTolerance * scale) {
            ++rank;
        }
    }
    const auto n = static_cast<Eigen::Index>(cols);
    return svd.matrixV().rightCols(n - rank);
}

// Dependence vectors c (sum_k c_k phi_k = 0), from the Gram matrix kernel.
std::vector<ComplexVector> dependencies_of(const std::vector<StateVector> &states) {
    const std::size_t n = states.size();
    ComplexMatrix gram(n, n);
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            gram(j, k) = states[j].inner(states[k]);
        }
    }
    const auto spec = eig_hermitian(gram);
    std::vector<ComplexVector> out;
    for (std::size_t i = 0; i < n; ++i) {
        if (std::abs(spec.eigenvalues[i]) < kGramNullTolerance) {
            const auto amps = spec.eigenvectors[i].amplitudes();
            out.emplace_back(amps.begin(), amps.end());
        }
    }
    return out;
}

ComplexVector combination(const std::vector<StateVector> &states, const ComplexVector &c,
                          const std::vector<double> *g = nullptr) {
    ComplexVector acc(states.front().dim());
    for (std::size_t k = 0; k < states.size(); ++k) {
        const Complex w = c[k] * (g ? (*g)[k] : 1.0);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            acc[i] += w * states[k][i];
        }
    }
    return acc;
}

// Real constraint matrix on g: for every dependence c, sum_k c_k g_k phi_k = 0.
Eigen::MatrixXd dependence_constraints(const std::vector<StateVector> &states,
                                       const std::vector<ComplexVector> &deps) {
    const std::size_t n = states.size();
    const std::size_t dim = states.front().dim();
    Eigen::MatrixXd m(static_cast<Eigen::Index>(2 * dim * deps.size()), static_cast<Eigen::Index>(n));
    for (std::size_t d = 0; d < deps.size(); ++d) {
        for (std::size_t i = 0; i < dim; ++i) {
            for (std::size_t k = 0; k < n; ++k) {
                const Complex v = deps[d][k] * states[k][i];
                m(static_cast<Eigen::Index>(2 * (d * dim + i)), static_cast<Eigen::Index>(k)) = v.real();
                m(static_cast<Eigen::Index>(2 * (d * dim + i) + 1), static_cast<Eigen::Index>(k)) = v.imag();
            }
        }
    }
    return m;
}

bool forced_equal(const Eigen::MatrixXd &null_basis, std::size_t a, std::size_t b) {
    if (null_basis.cols() == 0) {
        return true;
    }
    const auto diff = null_basis.row(static_cast<Eigen::Index>(a)) - null_basis.row(static_cast<Eigen::Index>(b));
    return diff.norm() < kForcedTolerance;
}

std::vector<std::size_t> group_of_states(const DiscriminationProblem &p) {
    std::vector<std::size_t> group(p.states.size(), std::numeric_limits<std::size_t>::max());
    for (std::size_t g = 0; g < p.distinct_groups.size(); ++g) {
        for (auto k : p.distinct_groups[g]) {
            group[k] = g;
        }
    }
    return group;
}

// Shortest chain of equalities from any member of `from` to any member of `to`.
std::vector<ForcedEquality> equality_chain(const std::vector<ForcedEquality> &edges, std::size_t n,
                                           const std::vector<std::size_t> &from, const std::vector<std::size_t> &to) {
    std::vector<std::vector<std::size_t>> adj(n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
        adj[edges[e].a].push_back(e);
        adj[edges[e].b].push_back(e);
    }
    constexpr auto none = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> via(n, none);
    std::vector<bool> seen(n, false);
    std::queue<std::size_t> q;
    for (auto s : from) {
        seen[s] = true;
        q.push(s);
    }
    std::set<std::size_t> targets(to.begin(), to.end());
    while (!q.empty()) {
        auto x = q.front();
        q.pop();
        if (targets.count(x)) {
            std::vector<ForcedEquality> chain;
            while (via[x] != none) {
                const auto &e = edges[via[x]];
                chain.push_back(e);
                x = e.a == x ? e.b : e.a;
            }
            std::reverse(chain.begin(), chain.end());
            return chain;
        }
        for (auto e : adj[x]) {
            auto y = edges[e].a == x ? edges[e].b : edges[e].a;
            if (!seen[y]) {
                seen[y] = true;
                via[y] = e;
                q.push(y);
            }
        }
    }
    return {};
}

ComplexMatrix span_projector(const std::vector<StateVector> &states, const std::vector<std::size_t> &members) {
    const std::size_t dim = states.front().dim();
    ComplexMatrix sum(dim, dim);
    for (auto k : members) {
        sum += states[k].projector();
    }
    const auto spec = eig_hermitian(sum);
    ComplexMatrix p(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        if (spec.eigenvalues[i] > kGramNullTolerance) {
            p += spec.eigenvectors[i].projector();
        }
    }
    return p;
}

ComplexMatrix pauli_half(int which) {
    switch (which) {
        case 0:
            return ComplexMatrix{{0.5, 0.0}, {0.0, -0.5}};
        case 1:
            return ComplexMatrix{{0.0, 0.5}, {0.5, 0.0}};
        default:
            return ComplexMatrix{{0.0, Complex(0, -0.5)}, {Complex(0, 0.5), 0.0}};
    }
}

}  // namespace

PointerAlgebra build_pointer_algebra(const std::string &scope, std::size_t dim) {
    if (dim != 2) {
        throw UsageError("pointer algebra needs a two-dimensional factor; '" + scope + "' has dimension " +
                         std::to_string(dim));
    }
    return PointerAlgebra{HermitianObservable(pauli_half(0), scope, "Q"),
                          HermitianObservable(pauli_half(1), scope, "Qx"),
                          HermitianObservable(pauli_half(2), scope, "Qy"), scope};
}

PointerAlgebra build_pointer_algebra(const TensorLayout &layout, const std::string &scope) {
    return build_pointer_algebra(scope, layout.dim_of(scope));
}

void ObservableSpec::validate() const {
    const double n2 = d0 * d0 + d1 * d1 + d2 * d2;
    if (!std::isfinite(n2) || std::abs(n2 - 1.0) > 1e-12) {
        std::ostringstream msg;
        msg << "observable coefficients must satisfy d0^2+d1^2+d2^2 = 1 (got " << n2 << ")";
        throw ValidationError(msg.str());
    }
}

HermitianObservable combine_observable(const PointerAlgebra &alg, const ObservableSpec &spec) {
    spec.validate();
    auto m = alg.q.matrix() * Complex(spec.d0) + alg.qx.matrix() * Complex(spec.d1) + alg.qy.matrix() * Complex(spec.d2);
    std::ostringstream name;
    name << "A(" << spec.d0 << "," << spec.d1 << "," << spec.d2 << ")";
    return HermitianObservable(std::move(m), alg.scope, name.str());
}

void DiscriminationProblem::validate() const {
    if (states.empty()) {
        throw ValidationError("discrimination problem has no states");
    }
    for (const auto &s : states) {
        if (s.dim() != space_dim) {
            throw ValidationError("state dimension does not match space_dim");
        }
    }
    std::set<std::size_t> used;
    for (const auto &g : distinct_groups) {
        if (g.empty()) {
            throw ValidationError("empty group in discrimination problem");
        }
        for (auto k : g) {
            if (k >= states.size()) {
                throw ValidationError("group refers to a missing state");
            }
            if (!used.insert(k).second) {
                throw ValidationError("state " + std::to_string(k) + " appears in two groups");
            }
        }
    }
}

std::string to_string(Verdict v) {
    return v == Verdict::feasible ? "FEASIBLE" : "INFEASIBLE";
}

std::string to_string(EqualityReason r) {
    switch (r) {
        case EqualityReason::non_orthogonal:
            return "non-orthogonal";
        case EqualityReason::linear_dependence:
            return "linear dependence";
        case EqualityReason::same_group:
            return "same group";
    }
    return "?";
}

std::string Certificate::text() const {
    std::ostringstream out;
    for (std::size_t c = 0; c < merged_classes.size(); ++c) {
        out << (c ? "; " : "");
        for (std::size_t i = 0; i < merged_classes[c].size(); ++i) {
            out << (i ? "=" : "") << "g" << merged_classes[c][i];
        }
        out << " forced";
    }
    for (const auto &conflict : conflicts) {
        out << "\ngroups " << conflict.group_a << " and " << conflict.group_b << " merged by:";
        for (const auto &e : conflict.chain) {
            out << " g" << e.a << "=g" << e.b << " (" << to_string(e.reason) << ", evidence " << e.evidence << ")";
        }
    }
    return out.str();
}

FeasibilityResult check_eigen_discrimination(const DiscriminationProblem &p) {
    p.validate();
    const std::size_t n = p.states.size();
    std::vector<ForcedEquality> edges;

    // (i) Eigenvectors of one Hermitian operator are orthogonal unless they share the eigenvalue.
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = j + 1; k < n; ++k) {
            const double ov = std::abs(p.states[j].inner(p.states[k]));
            if (ov > kOverlapThreshold) {
                edges.push_back({j, k, EqualityReason::non_orthogonal, ov});
            }
        }
    }

    // (ii) Linear dependencies among the states constrain the eigenvalues.
    const auto deps = dependencies_of(p.states);
    if (!deps.empty()) {
        double dep_residual = 0;
        for (const auto &c : deps) {
            dep_residual = std::max(dep_residual, norm(combination(p.states, c)));
        }
        const auto null_basis = real_null_space(dependence_constraints(p.states, deps), n);
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t k = j + 1; k < n; ++k) {
                if (forced_equal(null_basis, j, k)) {
                    edges.push_back({j, k, EqualityReason::linear_dependence, dep_residual});
                }
            }
        }
    }

    for (const auto &g : p.distinct_groups) {
        for (std::size_t i = 1; i < g.size(); ++i) {
            edges.push_back({g[0], g[i], EqualityReason::same_group, 0.0});
        }
    }

    // (iii) Propagate.
    UnionFind uf(n);
    for (const auto &e : edges) {
        uf.unite(e.a, e.b);
    }

    // (iv) Conflicts between groups required to differ.
    Certificate cert;
    cert.dependencies = deps;
    std::set<std::size_t> conflicting_roots;
    for (std::size_t ga = 0; ga < p.distinct_groups.size(); ++ga) {
        for (std::size_t gb = ga + 1; gb < p.distinct_groups.size(); ++gb) {
            if (uf.find(p.distinct_groups[ga][0]) == uf.find(p.distinct_groups[gb][0])) {
                cert.conflicts.push_back(
                    {ga, gb, equality_chain(edges, n, p.distinct_groups[ga], p.distinct_groups[gb])});
                conflicting_roots.insert(uf.find(p.distinct_groups[ga][0]));
            }
        }
    }
    if (!cert.conflicts.empty()) {
        for (auto root : conflicting_roots) {
            std::vector<std::size_t> members;
            for (std::size_t k = 0; k < n; ++k) {
                if (uf.find(k) == root) {
                    members.push_back(k);
                }
            }
            cert.merged_classes.push_back(std::move(members));
        }
        for (const auto &e : edges) {
            if (e.reason != EqualityReason::same_group) {
                cert.equalities.push_back(e);
            }
        }
        return FeasibilityResult{Verdict::infeasible, std::nullopt, std::move(cert)};
    }

    // Witness: consecutive eigenvalues centered on zero, one per class, 0 on the complement.
    std::vector<std::size_t> roots;
    for (std::size_t k = 0; k < n; ++k) {
        if (std::find(roots.begin(), roots.end(), uf.find(k)) == roots.end()) {
            roots.push_back(uf.find(k));
        }
    }
    const double m = static_cast<double>(roots.size());
    Witness w{ComplexMatrix(p.space_dim, p.space_dim), std::vector<double>(n)};
    for (std::size_t c = 0; c < roots.size(); ++c) {
        const double value = (m - 1) / 2 - static_cast<double>(c);
        std::vector<std::size_t> members;
        for (std::size_t k = 0; k < n; ++k) {
            if (uf.find(k) == roots[c]) {
                members.push_back(k);
                w.eigenvalues[k] = value;
            }
        }
        w.observable += span_projector(p.states, members) * Complex(value);
    }
    const double residual = witness_residual(p, w);
    if (residual > kWitnessTolerance) {
        std::ostringstream msg;
        msg << "constructed witness fails its eigen-relations (residual " << residual << ")";
        throw std::logic_error(msg.str());
    }
    return FeasibilityResult{Verdict::feasible, std::move(w), std::nullopt};
}

double witness_residual(const DiscriminationProblem &p, const Witness &w) {
    double worst = 0;
    for (std::size_t k = 0; k < p.states.size(); ++k) {
        auto applied = w.observable * p.states[k].amplitudes();
        for (std::size_t i = 0; i < applied.size(); ++i) {
            applied[i] -= w.eigenvalues[k] * p.states[k][i];
        }
        worst = std::max(worst, norm(applied));
    }
    return worst;
}

bool verify_certificate(const DiscriminationProblem &p, const Certificate &c) {
    const std::size_t n = p.states.size();
    for (const auto &dep : c.dependencies) {
        if (dep.size() != n || norm(dep) < 0.5 || norm(combination(p.states, dep)) > 1e-9) {
            return false;
        }
    }
    Eigen::MatrixXd null_basis;
    if (!c.dependencies.empty()) {
        null_basis = real_null_space(dependence_constraints(p.states, c.dependencies), n);
    }
    auto edge_ok = [&](const ForcedEquality &e) {
        if (e.a >= n || e.b >= n) {
            return false;
        }
        switch (e.reason) {
            case EqualityReason::non_orthogonal:
                return std::abs(p.states[e.a].inner(p.states[e.b])) > kOverlapThreshold;
            case EqualityReason::linear_dependence:
                return !c.dependencies.empty() && forced_equal(null_basis, e.a, e.b);
            case EqualityReason::same_group: {
                const auto group = group_of_states(p);
                return group[e.a] == group[e.b] && group[e.a] != std::numeric_limits<std::size_t>::max();
            }
        }
        return false;
    };
    if (c.conflicts.empty()) {
        return false;
    }
    for (const auto &conflict : c.conflicts) {
        if (conflict.group_a >= p.distinct_groups.size() || conflict.group_b >= p.distinct_groups.size() ||
            conflict.chain.empty()) {
            return false;
        }
        const auto &from = p.distinct_groups[conflict.group_a];
        const auto &to = p.distinct_groups[conflict.group_b];
        // Walk the chain: it must start in `from` and end in `to`.
        std::size_t start = conflict.chain.front().a;
        if (std::find(from.begin(), from.end(), start) == from.end()) {
            start = conflict.chain.front().b;
        }
        if (std::find(from.begin(), from.end(), start) == from.end()) {
            return false;
        }
        std::size_t at = start;
        for (const auto &e : conflict.chain) {
            if (!edge_ok(e) || (e.a != at && e.b != at)) {
                return false;
            }
            at = e.a == at ? e.b : e.a;
        }
        if (std::find(to.begin(), to.end(), at) == to.end()) {
            return false;
        }
    }
    return true;
}

OracleResult numeric_feasibility_oracle(const DiscriminationProblem &p, const std::vector<double> &grid, double tol) {
    p.validate();
    std::vector<double> values;
    for (double v : grid) {
        if (std::none_of(values.begin(), values.end(), [&](double u) { return std::abs(u - v) <= tol; })) {
            values.push_back(v);
        }
    }
    if (values.size() < 2) {
        throw UsageError("oracle grid needs at least two distinct values");
    }
    const std::size_t n = p.states.size();
    const std::size_t dim = p.space_dim;
    const auto rows = static_cast<Eigen::Index>(2 * dim * n);
    const auto params = static_cast<Eigen::Index>(dim * dim);

    // Hermitian G = sum_t x_t E_t with real x: diagonal units, then (E_ij + E_ji)
    // and i(E_ij - E_ji) for i < j. Column t of L stacks E_t phi_k over k.
    Eigen::MatrixXd lmat = Eigen::MatrixXd::Zero(rows, params);
    auto put = [&](Eigen::Index col, std::size_t k, std::size_t row_index, Complex v) {
        const auto r = static_cast<Eigen::Index>(2 * (k * dim + row_index));
        lmat(r, col) += v.real();
        lmat(r + 1, col) += v.imag();
    };
    Eigen::Index col = 0;
    for (std::size_t i = 0; i < dim; ++i, ++col) {
        for (std::size_t k = 0; k < n; ++k) {
            put(col, k, i, p.states[k][i]);
        }
    }
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = i + 1; j < dim; ++j) {
            for (std::size_t k = 0; k < n; ++k) {
                put(col, k, i, p.states[k][j]);
                put(col, k, j, p.states[k][i]);
                put(col + 1, k, i, Complex(0, 1) * p.states[k][j]);
                put(col + 1, k, j, Complex(0, -1) * p.states[k][i]);
            }
            col += 2;
        }
    }

    // b(g) = sum_k g_k b_k; the least-squares residual is |P_perp b(g)|^2 = g^T R g.
    Eigen::CompleteOrthogonalDecomposition<Eigen::MatrixXd> cod(lmat);
    Eigen::MatrixXd perp(rows, static_cast<Eigen::Index>(n));
    for (std::size_t k = 0; k < n; ++k) {
        Eigen::VectorXd b = Eigen::VectorXd::Zero(rows);
        for (std::size_t i = 0; i < dim; ++i) {
            const auto r = static_cast<Eigen::Index>(2 * (k * dim + i));
            b(r) = p.states[k][i].real();
            b(r + 1) = p.states[k][i].imag();
        }
        const Eigen::VectorXd x = cod.solve(b);
        perp.col(static_cast<Eigen::Index>(k)) = b - lmat * x;
    }
    const Eigen::MatrixXd gram = perp.transpose() * perp;

    const auto group = group_of_states(p);
    constexpr auto ungrouped = std::numeric_limits<std::size_t>::max();
    OracleResult best{std::numeric_limits<double>::infinity(), {}, 0};
    std::vector<std::size_t> digits(n, 0);
    Eigen::VectorXd g(static_cast<Eigen::Index>(n));
    while (true) {
        bool admissible = true;
        for (std::size_t a = 0; a < n && admissible; ++a) {
            for (std::size_t b = a + 1; b < n && admissible; ++b) {
                if (group[a] == ungrouped || group[b] == ungrouped) {
                    continue;
                }
                const bool equal = digits[a] == digits[b];
                admissible = (group[a] == group[b]) == equal;
            }
        }
        if (admissible) {
            ++best.assignments_tried;
            for (std::size_t k = 0; k < n; ++k) {
                g(static_cast<Eigen::Index>(k)) = values[digits[k]];
            }
            const double r = std::max(0.0, g.dot(gram * g));
            if (r < best.min_residual) {
                best.min_residual = r;
                best.assignment.assign(g.data(), g.data() + g.size());
            }
        }
        std::size_t pos = 0;
        while (pos < n && ++digits[pos] == values.size()) {
            digits[pos++] = 0;
        }
        if (pos == n) {
            break;
        }
    }
    return best;
}

DiscriminationProblem superposition_problem(Complex a1, Complex a2) {
    DiscriminationProblem p;
    p.space_dim = 8;
    p.states = {chain_pure(a1, a2).vector(), chain_pure(1.0, 0.0).vector(), chain_pure(0.0, 1.0).vector()};
    p.distinct_groups = {{0}, {1}, {2}};
    return p;
}

DiscriminationProblem observer_superposition_problem(Complex a1, Complex a2) {
    DiscriminationProblem p;
    p.space_dim = 2;
    p.states = {StateVector({a1, a2}), StateVector::basis(2, 0), StateVector::basis(2, 1)};
    p.distinct_groups = {{0}, {1}, {2}};
    return p;
}

DiscriminationProblem recognition_problem(bool observer_only) {
    DiscriminationProblem p;
    if (observer_only) {
        p.space_dim = 2;
        p.states = {StateVector::basis(2, 0), StateVector::basis(2, 1)};
    } else {
        p.space_dim = 8;
        p.states = {chain_pure(1.0, 0.0).vector(), chain_pure(0.0, 1.0).vector()};
    }
    p.distinct_groups = {{0}, {1}};
    return p;
}

ITObservable build_it_observable(ItKind kind) {
    const std::size_t dim = kind == ItKind::full ? 8 : 4;
    ComplexMatrix b(dim, dim);
    // |S1 D1 (O1)> is the first basis index, |S2 D2 (O2)> the last.
    b(0, dim - 1) = 1.0;
    b(dim - 1, 0) = 1.0;
    return ITObservable{HermitianObservable(std::move(b), kind == ItKind::full ? "SDO" : "SD",
                                            kind == ItKind::full ? "B" : "B_SD"),
                        kind};
}

LiftCheck restriction_eigenstate_lift_check(const MSState &full_state, const HermitianObservable &obs,
                                            const std::string &scope) {
    const auto &layout = full_state.layout();
    if (obs.dim() != layout.dim_of(scope)) {
        throw UsageError("observable dimension does not match factor '" + scope + "'");
    }
    LiftCheck out{false, false, true, 0.0};
    const std::vector<std::string> keep{scope};
    const auto rho = reduced_density(full_state.vector(), layout, keep);
    if (rho.purity() > 1 - 1e-9) {
        const auto local = eig_hermitian(rho.matrix()).eigenvectors.front();
        const double value = expectation(local, obs.matrix());
        auto applied = obs.matrix() * local.amplitudes();
        for (std::size_t i = 0; i < applied.size(); ++i) {
            applied[i] -= value * local[i];
        }
        if (norm(applied) < 1e-9) {
            out.restriction_is_eigenstate = true;
            out.restriction_eigenvalue = value;
        }
    }
    auto lifted = apply_on_factors(full_state.vector().amplitudes(), layout, keep, obs.matrix());
    const double value = inner(full_state.vector().amplitudes(), lifted).real();
    for (std::size_t i = 0; i < lifted.size(); ++i) {
        lifted[i] -= value * full_state.vector()[i];
    }
    out.full_is_eigenstate = norm(lifted) < 1e-9;
    out.holds = !out.restriction_is_eigenstate ||
                (out.full_is_eigenstate && std::abs(value - out.restriction_eigenvalue) < 1e-9);
    return out;
}

}  // namespace measchain
