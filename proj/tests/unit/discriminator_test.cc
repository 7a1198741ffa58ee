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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "measchain/errors.h"
#include "test_util.h"

using namespace measchain;

namespace {

const double kR = 1 / std::sqrt(2.0);
const std::vector<double> kWideGrid{-1.5, -1.0, -0.5, 0.0, 0.5, 1.0, 1.5};

// Reference least-squares residual min_G sum_k |G phi_k - g_k phi_k|^2 over
// Hermitian G, by modified Gram-Schmidt on the real-embedded columns.
double reference_residual(const DiscriminationProblem &p, const std::vector<double> &g) {
    const std::size_t n = p.states.size();
    const std::size_t d = p.space_dim;
    const std::size_t rows = 2 * d * n;
    std::vector<std::vector<double>> cols;
    auto column_for = [&](std::size_t i, std::size_t j, Complex w_ij, Complex w_ji) {
        std::vector<double> c(rows, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            auto add = [&](std::size_t row, Complex v) {
                c[2 * (k * d + row)] += v.real();
                c[2 * (k * d + row) + 1] += v.imag();
            };
            add(i, w_ij * p.states[k][j]);
            if (i != j) {
                add(j, w_ji * p.states[k][i]);
            }
        }
        return c;
    };
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = i; j < d; ++j) {
            cols.push_back(column_for(i, j, 1.0, 1.0));
            if (i != j) {
                cols.push_back(column_for(i, j, Complex(0, 1), Complex(0, -1)));
            }
        }
    }
    std::vector<std::vector<double>> basis;
    auto dot = [](const std::vector<double> &a, const std::vector<double> &b) {
        double s = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            s += a[i] * b[i];
        }
        return s;
    };
    for (auto c : cols) {
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto &q : basis) {
                const double t = dot(q, c);
                for (std::size_t i = 0; i < rows; ++i) {
                    c[i] -= t * q[i];
                }
            }
        }
        const double len = std::sqrt(dot(c, c));
        if (len > 1e-9) {
            for (auto &x : c) {
                x /= len;
            }
            basis.push_back(std::move(c));
        }
    }
    std::vector<double> b(rows, 0.0);
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < d; ++i) {
            b[2 * (k * d + i)] = g[k] * p.states[k][i].real();
            b[2 * (k * d + i) + 1] = g[k] * p.states[k][i].imag();
        }
    }
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto &q : basis) {
            const double t = dot(q, b);
            for (std::size_t i = 0; i < rows; ++i) {
                b[i] -= t * q[i];
            }
        }
    }
    return dot(b, b);
}

// Minimum of reference_residual over grid assignments respecting the groups.
double reference_min_residual(const DiscriminationProblem &p, const std::vector<double> &grid) {
    const std::size_t n = p.states.size();
    std::vector<int> group(n, -1);
    for (std::size_t gi = 0; gi < p.distinct_groups.size(); ++gi) {
        for (auto k : p.distinct_groups[gi]) {
            group[k] = static_cast<int>(gi);
        }
    }
    double best = std::numeric_limits<double>::infinity();
    std::vector<std::size_t> idx(n, 0);
    for (;;) {
        bool ok = true;
        for (std::size_t a = 0; a < n; ++a) {
            for (std::size_t b = a + 1; b < n; ++b) {
                if (group[a] >= 0 && group[b] >= 0 && (group[a] == group[b]) != (idx[a] == idx[b])) {
                    ok = false;
                }
            }
        }
        if (ok) {
            std::vector<double> g(n);
            for (std::size_t k = 0; k < n; ++k) {
                g[k] = grid[idx[k]];
            }
            best = std::min(best, reference_residual(p, g));
        }
        std::size_t pos = 0;
        while (pos < n && ++idx[pos] == grid.size()) {
            idx[pos++] = 0;
        }
        if (pos == n) {
            return best;
        }
    }
}

}  // namespace

TEST(pointer_algebra, commutation_relations) {
    for (const auto &scope : {kObject, kDetector, kObserver}) {
        auto alg = build_pointer_algebra(scope);
        EXPECT_EQ(alg.scope, scope);
        const auto i = Complex(0, 1);
        EXPECT_LT(max_abs_diff(commutator(alg.qx.matrix(), alg.qy.matrix()), i * alg.q.matrix()), 1e-15);
        EXPECT_LT(max_abs_diff(commutator(alg.qy.matrix(), alg.q.matrix()), i * alg.qx.matrix()), 1e-15);
        EXPECT_LT(max_abs_diff(commutator(alg.q.matrix(), alg.qx.matrix()), i * alg.qy.matrix()), 1e-15);
        EXPECT_DOUBLE_EQ(alg.q.spectrum().eigenvalues.front(), 0.5);
        EXPECT_DOUBLE_EQ(alg.q.spectrum().eigenvalues.back(), -0.5);
    }
}

TEST(pointer_algebra, errors) {
    EXPECT_THROW(build_pointer_algebra(kObserver, 3), UsageError);
    const TensorLayout l({{kObject, 2}, {kDetector, 3}});
    EXPECT_THROW(build_pointer_algebra(l, kDetector), UsageError);
    EXPECT_THROW(build_pointer_algebra(l, kObserver), UsageError);
    EXPECT_NO_THROW(build_pointer_algebra(l, kObject));
}

TEST(combine_observable, examples) {
    auto alg = build_pointer_algebra(kObserver);
    EXPECT_EQ(combine_observable(alg, {1, 0, 0}).matrix(), alg.q.matrix());
    EXPECT_LT(max_abs_diff(combine_observable(alg, {0, 1, 0}).matrix(), testutil::pauli_x() * Complex(0.5)), 1e-15);
    EXPECT_THROW(combine_observable(alg, {1, 1, 0}), ValidationError);
    for (int k = 0; k < 20; ++k) {
        const double t = 0.3 * k;
        auto s = combine_observable(alg, {std::cos(t), std::sin(t) * 0.6, std::sin(t) * 0.8});
        EXPECT_NEAR(s.spectrum().eigenvalues.front(), 0.5, 1e-12);
        EXPECT_NEAR(s.spectrum().eigenvalues.back(), -0.5, 1e-12);
    }
}

TEST(discrimination, recognition_is_feasible_with_pointer_witness) {
    auto r = check_eigen_discrimination(recognition_problem(true));
    ASSERT_EQ(r.verdict, Verdict::feasible);
    ASSERT_TRUE(r.witness);
    EXPECT_LT(max_abs_diff(r.witness->observable, build_pointer_algebra(kObserver).q.matrix()), 1e-12);

    auto full = check_eigen_discrimination(recognition_problem(false));
    ASSERT_EQ(full.verdict, Verdict::feasible);
    EXPECT_LT(witness_residual(recognition_problem(false), *full.witness), 1e-12);
    EXPECT_DOUBLE_EQ(full.witness->eigenvalues[0], 0.5);
    EXPECT_DOUBLE_EQ(full.witness->eigenvalues[1], -0.5);
}

TEST(discrimination, superposition_is_infeasible_with_certificate) {
    const auto p = superposition_problem(kR, kR);
    auto r = check_eigen_discrimination(p);
    ASSERT_EQ(r.verdict, Verdict::infeasible);
    ASSERT_TRUE(r.certificate);
    EXPECT_FALSE(r.witness);
    EXPECT_TRUE(verify_certificate(p, *r.certificate));
    ASSERT_EQ(r.certificate->merged_classes.size(), 1u);
    EXPECT_EQ(r.certificate->merged_classes[0], (std::vector<std::size_t>{0, 1, 2}));
    EXPECT_EQ(r.certificate->text().substr(0, 15), "g0=g1=g2 forced");
    EXPECT_EQ(r.certificate->dependencies.size(), 1u);
}

TEST(discrimination, observer_only_superposition_is_infeasible) {
    const auto p = observer_superposition_problem(0.6, Complex(0, 0.8));
    auto r = check_eigen_discrimination(p);
    ASSERT_EQ(r.verdict, Verdict::infeasible);
    EXPECT_TRUE(verify_certificate(p, *r.certificate));
}

TEST(discrimination, degenerate_amplitudes_are_infeasible) {
    const auto p = superposition_problem(1.0, 0.0);
    auto r = check_eigen_discrimination(p);
    ASSERT_EQ(r.verdict, Verdict::infeasible);
    EXPECT_TRUE(verify_certificate(p, *r.certificate));
}

TEST(discrimination, no_go_holds_across_amplitude_sweep) {
    for (int i = 1; i < 21; ++i) {
        for (int j = 0; j < 20; ++j) {
            const double theta = std::numbers::pi / 2 * i / 21.0;
            const double phi = 2 * std::numbers::pi * j / 20.0;
            const auto p = superposition_problem(std::cos(theta), std::polar(std::sin(theta), phi));
            auto r = check_eigen_discrimination(p);
            ASSERT_EQ(r.verdict, Verdict::infeasible) << theta << " " << phi;
            EXPECT_TRUE(verify_certificate(p, *r.certificate));
        }
    }
}

TEST(discrimination, tampered_certificates_are_rejected) {
    const auto p = superposition_problem(kR, kR);
    auto cert = *check_eigen_discrimination(p).certificate;
    EXPECT_TRUE(verify_certificate(p, cert));

    auto no_conflict = cert;
    no_conflict.conflicts.clear();
    EXPECT_FALSE(verify_certificate(p, no_conflict));

    auto bad_dep = cert;
    bad_dep.dependencies[0][0] += 0.5;
    EXPECT_FALSE(verify_certificate(p, bad_dep));

    // The same certificate does not transfer to a feasible problem.
    EXPECT_FALSE(verify_certificate(recognition_problem(false), cert));
}

TEST(discrimination, validation) {
    DiscriminationProblem p;
    EXPECT_THROW(check_eigen_discrimination(p), ValidationError);
    p = recognition_problem(true);
    p.distinct_groups = {{0}, {0, 1}};
    EXPECT_THROW(check_eigen_discrimination(p), ValidationError);
    p.distinct_groups = {{0}, {5}};
    EXPECT_THROW(check_eigen_discrimination(p), ValidationError);
    p.distinct_groups = {{0}, {1}};
    p.space_dim = 3;
    EXPECT_THROW(check_eigen_discrimination(p), ValidationError);
}

TEST(oracle, reference_frozen_values) {
    // Values obtained from an independent least-squares reduction by hand and
    // confirmed by the Gram-Schmidt reference above.
    EXPECT_NEAR(reference_min_residual(superposition_problem(kR, kR), {-1, 0, 1}), 2.0 / 3.0, 1e-12);
    EXPECT_NEAR(reference_min_residual(superposition_problem(1.0, 0.0), {-1, 0, 1}), 0.5, 1e-12);
    EXPECT_NEAR(reference_min_residual(recognition_problem(false), {-1, 0, 1}), 0.0, 1e-12);
}

TEST(oracle, matches_frozen_values) {
    auto sym = numeric_feasibility_oracle(superposition_problem(kR, kR), {-1, 0, 1});
    EXPECT_NEAR(sym.min_residual, 2.0 / 3.0, 1e-10);
    EXPECT_EQ(sym.assignments_tried, 6u);
    auto degenerate = numeric_feasibility_oracle(superposition_problem(1.0, 0.0), {-1, 0, 1});
    EXPECT_NEAR(degenerate.min_residual, 0.5, 1e-10);
    auto feasible = numeric_feasibility_oracle(recognition_problem(false), {-1, 0, 1});
    EXPECT_NEAR(feasible.min_residual, 0.0, 1e-12);
    ASSERT_EQ(feasible.assignment.size(), 2u);
    EXPECT_NE(feasible.assignment[0], feasible.assignment[1]);
}

TEST(oracle, errors) {
    EXPECT_THROW(numeric_feasibility_oracle(recognition_problem(true), {1.0}), UsageError);
    EXPECT_THROW(numeric_feasibility_oracle(recognition_problem(true), {1.0, 1.0}), UsageError);
}

TEST(oracle, agrees_with_reference_on_random_problems) {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        const auto p = testutil::random_problem(rng);
        const std::vector<double> grid{-1.0, 0.0, 1.0, 2.0};
        EXPECT_NEAR(numeric_feasibility_oracle(p, grid).min_residual, reference_min_residual(p, grid), 1e-9);
    }
}

TEST(discrimination, solver_agrees_with_oracle_on_random_problems) {
    std::mt19937_64 rng(99);
    int feasible = 0;
    int infeasible = 0;
    for (int trial = 0; trial < 200; ++trial) {
        const auto p = testutil::random_problem(rng);
        const auto r = check_eigen_discrimination(p);
        const auto o = numeric_feasibility_oracle(p, kWideGrid);
        if (r.verdict == Verdict::feasible) {
            ++feasible;
            EXPECT_LT(o.min_residual, 1e-6) << trial;
            EXPECT_LT(witness_residual(p, *r.witness), 1e-9);
            EXPECT_TRUE(is_hermitian(r.witness->observable, 1e-12));
        } else {
            ++infeasible;
            EXPECT_GE(o.min_residual, 1e-6) << trial;
            EXPECT_TRUE(verify_certificate(p, *r.certificate)) << trial;
        }
    }
    EXPECT_GT(feasible, 20);
    EXPECT_GT(infeasible, 20);
}

TEST(discrimination, witness_is_affine_invariant) {
    std::mt19937_64 rng(5);
    int checked = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = testutil::random_problem(rng);
        const auto r = check_eigen_discrimination(p);
        if (r.verdict != Verdict::feasible) {
            continue;
        }
        for (auto [alpha, beta] : {std::pair{2.0, 0.0}, std::pair{-0.5, 3.0}, std::pair{7.0, -1.0}}) {
            Witness w{r.witness->observable * Complex(alpha) + ComplexMatrix::identity(p.space_dim) * Complex(beta),
                      r.witness->eigenvalues};
            for (auto &g : w.eigenvalues) {
                g = alpha * g + beta;
            }
            EXPECT_LT(witness_residual(p, w), 1e-8);
        }
        ++checked;
    }
    EXPECT_GT(checked, 10);
}

TEST(discrimination, orthogonal_sets_are_always_feasible) {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t d = 2 + rng() % 5;
        const auto basis = testutil::random_orthonormal_basis(rng, d);
        DiscriminationProblem p;
        p.space_dim = d;
        p.states = basis;
        for (std::size_t k = 0; k < d; ++k) {
            p.distinct_groups.push_back({k});
        }
        const auto r = check_eigen_discrimination(p);
        ASSERT_EQ(r.verdict, Verdict::feasible);
        EXPECT_LT(witness_residual(p, *r.witness), 1e-9);
    }
}

TEST(it_observable, spectrum_and_action) {
    const auto b = build_it_observable(ItKind::full);
    EXPECT_EQ(b.observable.dim(), 8u);
    const auto &ev = b.observable.spectrum().eigenvalues;
    EXPECT_NEAR(ev.front(), 1.0, 1e-12);
    EXPECT_NEAR(ev.back(), -1.0, 1e-12);
    EXPECT_EQ(std::count_if(ev.begin(), ev.end(), [](double x) { return std::abs(x) < 1e-12; }), 6);

    const auto psi = chain_pure(kR, kR).vector();
    EXPECT_NEAR(expectation(psi, b.observable.matrix()), 1.0, 1e-12);
    const auto applied = b.observable.matrix() * psi.amplitudes();
    for (std::size_t i = 0; i < 8; ++i) {
        EXPECT_NEAR(std::abs(applied[i] - psi[i]), 0.0, 1e-12);
    }
    EXPECT_NEAR(expectation(chain_gemenge(kR, kR).density(), b.observable.matrix()), 0.0, 1e-12);

    const auto sd = build_it_observable(ItKind::sd_only);
    EXPECT_EQ(sd.observable.dim(), 4u);
    EXPECT_EQ(sd.observable.matrix()(0, 3), Complex(1.0));
    EXPECT_EQ(sd.observable.matrix()(3, 0), Complex(1.0));
}

TEST(lift_check, product_states_lift_and_entangled_are_vacuous) {
    const auto q = build_pointer_algebra(kObserver).q;
    auto product = restriction_eigenstate_lift_check(chain_pure(1.0, 0.0), q);
    EXPECT_TRUE(product.restriction_is_eigenstate);
    EXPECT_TRUE(product.full_is_eigenstate);
    EXPECT_TRUE(product.holds);
    EXPECT_NEAR(product.restriction_eigenvalue, 0.5, 1e-12);

    auto entangled = restriction_eigenstate_lift_check(chain_pure(kR, kR), q);
    EXPECT_FALSE(entangled.restriction_is_eigenstate);
    EXPECT_FALSE(entangled.full_is_eigenstate);
    EXPECT_TRUE(entangled.holds);

    const auto qx = build_pointer_algebra(kObserver).qx;
    auto not_eigen = restriction_eigenstate_lift_check(chain_pure(1.0, 0.0), qx);
    EXPECT_FALSE(not_eigen.restriction_is_eigenstate);
    EXPECT_TRUE(not_eigen.holds);

    EXPECT_THROW(restriction_eigenstate_lift_check(chain_pure(1.0, 0.0), build_it_observable(ItKind::full).observable),
                 UsageError);
}

TEST(lift_check, holds_on_random_product_states) {
    std::mt19937_64 rng(12);
    const TensorLayout l({{kObject, 2}, {kDetector, 2}, {kObserver, 2}});
    const auto alg = build_pointer_algebra(kObserver);
    for (int trial = 0; trial < 100; ++trial) {
        const auto o = trial % 2 ? StateVector::basis(2, trial % 4 / 2) : testutil::random_state(rng, 2);
        const auto state =
            tensor_product(tensor_product(testutil::random_state(rng, 2), testutil::random_state(rng, 2)), o);
        auto r = restriction_eigenstate_lift_check(MSState(state, l), alg.q);
        EXPECT_TRUE(r.holds);
        EXPECT_EQ(r.restriction_is_eigenstate, r.full_is_eigenstate);
    }
}
