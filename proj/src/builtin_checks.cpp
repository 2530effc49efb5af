#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "treegraph/builtins.hpp"
#include "treegraph/factorization.hpp"

namespace treegraph {

namespace {

long ipow(long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

void expect(NamedCheck& c, bool cond, const std::string& what) {
    if (!cond) {
        c.ok = false;
        c.detail += (c.detail.empty() ? "" : "; ") + what;
    }
}

Assignment unit_assignment(const DiGraph& g) {
    Assignment a;
    for (int e = 0; e < g.edge_count(); ++e) a[x_var(e)] = 1;
    return a;
}

// representative edge variable for "mutates axis i to bit j" in {0,1}^k
Var hypercube_mark(int k, int axis, int bit) {
    int source = bit == 1 ? 0 : (1 << axis);
    return x_var(hypercube_edge(k, source, axis));
}

// sum over trees of {0,1}^k rooted at `code`, each edge contributing the mark
// of its (axis, target-bit) class
MultiPoly hypercube_tree_polynomial(const DiGraph& cube, int k, int code) {
    MultiPoly acc;
    visit_forests(cube, {code}, [&](const std::vector<int>& out_edge) {
        Monomial m;
        for (int eid : out_edge) {
            if (eid < 0) continue;
            const Edge& e = cube.edge(eid);
            int axis = eid % k;
            int bit = (e.target >> axis) & 1;
            m = m * Monomial::var(hypercube_mark(k, axis, bit));
        }
        acc += MultiPoly::monomial(m, Rat(1));
    });
    return acc;
}

}  // namespace

NamedCheck check_cayley_counts(int max_n) {
    NamedCheck c{"cayley-counts", true, ""};
    for (int n = 2; n <= max_n; ++n) {
        long count = static_cast<long>(enumerate_spanning_trees(complete_graph(n)).size());
        expect(c, count == ipow(n, n - 1),
               "K_" + std::to_string(n) + " has " + std::to_string(count) + " trees");
    }
    return c;
}

NamedCheck check_stanley_hypercube() {
    NamedCheck c{"stanley-hypercube", true, ""};
    {
        DiGraph square = hypercube_graph(2);
        long by_enum = static_cast<long>(enumerate_spanning_trees(square).size());
        expect(c, by_enum == 16, "enumeration on {0,1}^2 gave " + std::to_string(by_enum));
    }
    for (int n = 2; n <= 3; ++n) {
        DiGraph cube = hypercube_graph(n);
        Assignment ones = unit_assignment(cube);
        Rat total(0);
        for (VertexId v = 0; v < cube.vertex_count(); ++v) total += matrix_tree_det(cube, {v}, ones);
        long expected = 1;
        long binom = 1;
        for (int i = 1; i <= n; ++i) {
            binom = binom * (n - i + 1) / i;
            expected *= ipow(2 * i, static_cast<int>(binom));
        }
        expect(c, total == expected,
               "{0,1}^" + std::to_string(n) + ": matrix-tree total " + total.get_str() + " != " +
                   std::to_string(expected));
    }
    return c;
}

NamedCheck check_cycle_family(int max_n) {
    NamedCheck c{"cycle-family", true, ""};
    for (int n = 3; n <= max_n; ++n) {
        DiGraph g = cycle_graph(n);
        MultiplicityTable table = multiplicity_table(g);
        expect(c, table.tree_count == static_cast<long>(n) * n,
               "cycle:" + std::to_string(n) + " tree count " + std::to_string(table.tree_count));
        for (const MultiplicityEntry& e : table.entries) {
            long want = 0;
            if (static_cast<int>(e.w.size()) == n || static_cast<int>(e.w.size()) == n - 1) want = 1;
            expect(c, e.m == want,
                   "cycle:" + std::to_string(n) + " m(W) = " + std::to_string(e.m) + " for |W|=" +
                       std::to_string(e.w.size()));
        }
    }
    return c;
}

NamedCheck check_complete_multiplicities(int max_n) {
    NamedCheck c{"complete-multiplicities", true, ""};
    for (int n = 3; n <= max_n; ++n) {
        MultiplicityTable table = multiplicity_table(complete_graph(n));
        for (const MultiplicityEntry& e : table.entries) {
            int k = static_cast<int>(e.w.size());
            long want = k == n ? 1 : (k - 1) * ipow(n - 1, n - k - 1);
            expect(c, e.m == want,
                   "K_" + std::to_string(n) + ", |W|=" + std::to_string(k) + ": m=" +
                       std::to_string(e.m) + " want " + std::to_string(want));
        }
    }
    return c;
}

NamedCheck check_tree_graph_of_k3() {
    NamedCheck c{"tree-graph-of-k3", true, ""};
    TreeGraph tg = TreeGraph::build(complete_graph(3));
    expect(c, tg.tree_count() == 9, "TK_3 has " + std::to_string(tg.tree_count()) + " vertices");
    long trees = static_cast<long>(enumerate_spanning_trees(tg.graph()).size());

    // closed form n^(n-1) * prod_k ((n-k) n^(k-1))^((k-1)(n-1)^(n-k-1) binom(n,k))
    // at n = 3: 9 * 27
    expect(c, trees == 243, "TK_3 has " + std::to_string(trees) + " spanning trees");

    // cross-route: the ratio theorem at unit weights
    MultiplicityTable table = multiplicity_table(tg.base(), tg.trees());
    Assignment ones = unit_assignment(tg.base());
    Rat phi = phi_value(tg.base(), table, ones);
    expect(c, Rat(trees) == phi * 9, "ratio theorem disagrees with enumeration on TK_3");
    return c;
}

NamedCheck check_bernardi_forest(int k) {
    NamedCheck c{"bernardi-forest-k" + std::to_string(k), true, ""};
    DiGraph cube = hypercube_graph(k);
    const int size = cube.vertex_count();

    MultiPoly lhs;
    for (std::uint32_t mask = 1; mask < (1u << size); ++mask) {
        VertexSet roots = mask_to_set(mask);
        visit_forests(cube, roots, [&](const std::vector<int>& out_edge) {
            Monomial m = Monomial::var(kZVar, static_cast<int>(roots.size()));
            for (int eid : out_edge) {
                if (eid < 0) continue;
                const Edge& e = cube.edge(eid);
                int axis = eid % k;
                int bit = (e.target >> axis) & 1;
                m = m * Monomial::var(hypercube_mark(k, axis, bit));
            }
            lhs += MultiPoly::monomial(m, Rat(1));
        });
    }

    MultiPoly rhs(Rat(1));
    for (std::uint32_t j_mask = 0; j_mask < (1u << k); ++j_mask) {
        MultiPoly factor = MultiPoly::var(kZVar);
        for (int i = 0; i < k; ++i)
            if (j_mask & (1u << i))
                factor += MultiPoly::var(hypercube_mark(k, i, 0)) +
                          MultiPoly::var(hypercube_mark(k, i, 1));
        rhs = rhs * factor;
    }
    expect(c, lhs == rhs, "forest generating polynomial mismatch");
    return c;
}

NamedCheck check_hypercube_tree_polynomial(int k) {
    NamedCheck c{"hypercube-tree-polynomial-k" + std::to_string(k), true, ""};
    DiGraph cube = hypercube_graph(k);
    for (int code = 0; code < cube.vertex_count(); ++code) {
        MultiPoly lhs = hypercube_tree_polynomial(cube, k, code);
        MultiPoly rhs(Rat(1));
        for (int i = 0; i < k; ++i)
            rhs = rhs * MultiPoly::var(hypercube_mark(k, i, (code >> i) & 1));
        for (std::uint32_t j_mask = 0; j_mask < (1u << k); ++j_mask) {
            if (__builtin_popcount(j_mask) < 2) continue;
            MultiPoly factor;
            for (int i = 0; i < k; ++i)
                if (j_mask & (1u << i))
                    factor += MultiPoly::var(hypercube_mark(k, i, 0)) +
                              MultiPoly::var(hypercube_mark(k, i, 1));
            rhs = rhs * factor;
        }
        expect(c, lhs == rhs, "rooted tree polynomial mismatch at corner " + std::to_string(code));
    }
    return c;
}

namespace {

// assignment with random hub/petal weights and unit return edges
Assignment bouquet_assignment(const BouquetGraph& b, std::uint64_t seed, std::uint64_t trial) {
    Assignment a = random_graph_assignment(b.graph, seed, trial, false);
    const int k = static_cast<int>(b.petal_sizes.size());
    for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= b.petal_sizes[static_cast<size_t>(i - 1)]; ++j)
            a[x_var(b.return_edge(i, j))] = 1;
    return a;
}

std::vector<std::vector<int>> proper_subsets(int k) {
    std::vector<std::vector<int>> subsets;
    for (std::uint32_t mask = 0; mask + 1 < (1u << k); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) s.push_back(i + 1);
        subsets.push_back(std::move(s));
    }
    return subsets;
}

}  // namespace

NamedCheck check_bouquet_family() {
    NamedCheck c{"bouquet-family", true, ""};
    const std::vector<std::vector<int>> families{{2}, {3}, {2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {2, 3, 3}};
    for (const auto& sizes : families) {
        BouquetGraph b = bouquet_graph(sizes);
        const DiGraph& g = b.graph;
        const int k = static_cast<int>(sizes.size());
        std::string tag = "bouquet(";
        for (size_t i = 0; i < sizes.size(); ++i) tag += (i ? "," : "") + std::to_string(sizes[i]);
        tag += ")";

        MultiplicityTable table = multiplicity_table(g);

        // m(W_I) = prod_{i not in I} (n_i - 1); every other subset has m = 0
        std::map<std::uint32_t, long> expected;
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
            std::vector<int> petals;
            long want = 1;
            for (int i = 0; i < k; ++i) {
                if (mask & (1u << i))
                    petals.push_back(i + 1);
                else
                    want *= sizes[static_cast<size_t>(i)] - 1;
            }
            expected[set_to_mask(b.petal_subset(petals))] = want;
        }
        for (const MultiplicityEntry& e : table.entries) {
            auto it = expected.find(set_to_mask(e.w));
            long want = it == expected.end() ? 0 : it->second;
            expect(c, e.m == want, tag + ": m mismatch on a subset of size " + std::to_string(e.w.size()));
        }

        // det Q_{W_I} against the forest product, at unit return weights
        for (const auto& petals : proper_subsets(k)) {
            for (std::uint64_t trial = 0; trial < 3; ++trial) {
                Assignment a = bouquet_assignment(b, 97, trial);
                VertexSet rooted_in = set_complement(g.vertex_count(), b.petal_subset(petals));
                Rat lhs = matrix_tree_det(g, rooted_in, a);
                Rat rhs(0);
                std::vector<char> in_i(static_cast<size_t>(k) + 1, 0);
                for (int i : petals) in_i[static_cast<size_t>(i)] = 1;
                for (int i = 1; i <= k; ++i)
                    if (!in_i[static_cast<size_t>(i)]) rhs += a.at(x_var(b.hub_edge(i)));
                for (int i : petals) {
                    Rat x_sum(0);
                    for (int j = 1; j <= sizes[static_cast<size_t>(i - 1)]; ++j)
                        x_sum += a.at(x_var(b.petal_edge(i, j)));
                    rhs *= x_sum;
                }
                expect(c, lhs == rhs, tag + ": det Q_{W_I} mismatch");
            }
        }

        // Phi_B closed form: symbolically for k <= 2, at assignments for k = 3
        if (k <= 2) {
            MultiPoly phi = phi_polynomial(g, table);
            for (int i = 1; i <= k; ++i)
                for (int j = 1; j <= sizes[static_cast<size_t>(i - 1)]; ++j)
                    phi = phi.substitute(x_var(b.return_edge(i, j)), MultiPoly(Rat(1)));
            MultiPoly closed(Rat(1));
            for (const auto& petals : proper_subsets(k)) {
                MultiPoly factor;
                std::vector<char> in_i(static_cast<size_t>(k) + 1, 0);
                for (int i : petals) in_i[static_cast<size_t>(i)] = 1;
                for (int i = 1; i <= k; ++i)
                    if (!in_i[static_cast<size_t>(i)]) factor += MultiPoly::var(x_var(b.hub_edge(i)));
                for (int i : petals) {
                    MultiPoly x_sum;
                    for (int j = 1; j <= sizes[static_cast<size_t>(i - 1)]; ++j)
                        x_sum += MultiPoly::var(x_var(b.petal_edge(i, j)));
                    factor = factor * x_sum;
                }
                long e = 1;
                for (int i = 1; i <= k; ++i)
                    if (!in_i[static_cast<size_t>(i)]) e *= sizes[static_cast<size_t>(i - 1)] - 1;
                closed = closed * factor.pow(static_cast<int>(e));
            }
            expect(c, phi == closed, tag + ": Phi_B closed form (symbolic) mismatch");
        } else {
            for (std::uint64_t trial = 0; trial < 3; ++trial) {
                Assignment a = bouquet_assignment(b, 131, trial);
                Rat phi = phi_value(g, table, a);
                Rat closed(1);
                for (const auto& petals : proper_subsets(k)) {
                    Rat factor(0);
                    std::vector<char> in_i(static_cast<size_t>(k) + 1, 0);
                    for (int i : petals) in_i[static_cast<size_t>(i)] = 1;
                    for (int i = 1; i <= k; ++i)
                        if (!in_i[static_cast<size_t>(i)]) factor += a.at(x_var(b.hub_edge(i)));
                    for (int i : petals) {
                        Rat x_sum(0);
                        for (int j = 1; j <= sizes[static_cast<size_t>(i - 1)]; ++j)
                            x_sum += a.at(x_var(b.petal_edge(i, j)));
                        factor *= x_sum;
                    }
                    long e = 1;
                    for (int i = 1; i <= k; ++i)
                        if (!in_i[static_cast<size_t>(i)]) e *= sizes[static_cast<size_t>(i - 1)] - 1;
                    for (long p = 0; p < e; ++p) closed *= factor;
                }
                expect(c, phi == closed, tag + ": Phi_B value mismatch");
            }
        }
    }
    return c;
}

NamedCheck check_bouquet_refined_determinant() {
    NamedCheck c{"bouquet-refined-determinant", true, ""};
    const std::vector<std::vector<int>> families{{2}, {3}, {2, 2}, {2, 3}, {3, 3}};
    for (const auto& sizes : families) {
        BouquetGraph b = bouquet_graph(sizes);
        const int k = static_cast<int>(sizes.size());
        for (std::uint64_t trial = 0; trial < 3; ++trial) {
            // random z, w, s_i, x_i^j
            Rat z = random_value(211, trial, 1000001);
            Rat w = random_value(211, trial, 1000002);
            std::vector<Rat> s(static_cast<size_t>(k) + 1);
            std::vector<std::vector<Rat>> x(static_cast<size_t>(k) + 1);
            Assignment a;
            for (int i = 1; i <= k; ++i) {
                s[static_cast<size_t>(i)] = random_value(211, trial, 2000 + i);
                a[x_var(b.hub_edge(i))] = s[static_cast<size_t>(i)];
                x[static_cast<size_t>(i)].resize(static_cast<size_t>(sizes[static_cast<size_t>(i - 1)]) + 1);
                for (int j = 1; j <= sizes[static_cast<size_t>(i - 1)]; ++j) {
                    x[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                        random_value(211, trial, 3000 + 10 * i + j);
                    a[x_var(b.petal_edge(i, j))] = w * x[static_cast<size_t>(i)][static_cast<size_t>(j)];
                    a[x_var(b.return_edge(i, j))] = w;
                }
            }

            LabeledMatrix<Rat> q = build_operator(b.graph, OperatorKind::laplacian, a);
            for (const auto& petals : proper_subsets(k)) {
                VertexSet w_set = b.petal_subset(petals);
                LabeledMatrix<Rat> qw = q.restricted(std::vector<int>(w_set.begin(), w_set.end()));
                Mat<Rat> zq(qw.dim());
                for (int r = 0; r < qw.dim(); ++r)
                    for (int s2 = 0; s2 < qw.dim(); ++s2) {
                        zq.at(r, s2) = -qw.mat.at(r, s2);
                        if (r == s2) zq.at(r, s2) += z;
                    }
                Rat lhs = det_exact(zq);

                std::vector<char> in_i(static_cast<size_t>(k) + 1, 0);
                for (int i : petals) in_i[static_cast<size_t>(i)] = 1;
                auto x_block = [&](int i) {
                    Rat xs(0);
                    for (int j = 1; j <= sizes[static_cast<size_t>(i - 1)]; ++j)
                        xs += w * x[static_cast<size_t>(i)][static_cast<size_t>(j)];
                    Rat blk = z + xs;
                    for (int j = 0; j < sizes[static_cast<size_t>(i - 1)]; ++j) blk *= (w + z);
                    return blk;
                };
                Rat rhs(0);
                {
                    Rat head(0);
                    for (int i = 1; i <= k; ++i)
                        if (!in_i[static_cast<size_t>(i)]) head += s[static_cast<size_t>(i)];
                    head += z;
                    for (int i : petals) head *= x_block(i);
                    rhs += head;
                }
                for (int i0 : petals) {
                    int n0 = sizes[static_cast<size_t>(i0 - 1)];
                    Rat xs(0);
                    for (int j = 1; j <= n0; ++j) xs += w * x[static_cast<size_t>(i0)][static_cast<size_t>(j)];
                    Rat pow_wz(1);
                    for (int j = 0; j < n0 - 1; ++j) pow_wz *= (w + z);
                    Rat inner = z * xs * pow_wz + z * pow_wz * (w + z);
                    Rat tail = s[static_cast<size_t>(i0)] * inner;
                    for (int i : petals)
                        if (i != i0) tail *= x_block(i);
                    rhs += tail;
                }
                expect(c, lhs == rhs, "refined determinant mismatch");
            }
        }
    }
    return c;
}

NamedCheck check_bouquet_hypercube_link() {
    NamedCheck c{"bouquet-hypercube-link", true, ""};
    BouquetGraph b = bouquet_graph({2, 2});
    const DiGraph& g = b.graph;
    TreeGraph tg = TreeGraph::build(g);
    expect(c, tg.tree_count() == 16, "TB(2,2) should have 16 trees");

    auto a_tree = [&](int m1, int m2) {
        SpanningTree t;
        t.root = 0;
        t.out_edge.assign(static_cast<size_t>(g.vertex_count()), -1);
        t.out_edge[static_cast<size_t>(b.anchor(1))] = b.petal_edge(1, m1);
        t.out_edge[static_cast<size_t>(b.anchor(2))] = b.petal_edge(2, m2);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j)
                t.out_edge[static_cast<size_t>(b.leaf(i, j))] = b.return_edge(i, j);
        return t;
    };
    auto b_tree = [&](int i, int other_m) {
        SpanningTree t;
        t.root = b.anchor(i);
        t.out_edge.assign(static_cast<size_t>(g.vertex_count()), -1);
        t.out_edge[0] = b.hub_edge(i);
        int l = 3 - i;
        t.out_edge[static_cast<size_t>(b.anchor(l))] = b.petal_edge(l, other_m);
        for (int p = 1; p <= 2; ++p)
            for (int j = 1; j <= 2; ++j)
                t.out_edge[static_cast<size_t>(b.leaf(p, j))] = b.return_edge(p, j);
        return t;
    };
    auto c_tree = [&](int i, int other_m, int j) {
        SpanningTree t = b_tree(i, other_m);
        t.root = b.leaf(i, j);
        t.out_edge[static_cast<size_t>(b.anchor(i))] = b.petal_edge(i, j);
        t.out_edge[static_cast<size_t>(b.leaf(i, j))] = -1;
        return t;
    };

    // Z = pi_{a_m} Phi_B matches the square's tree polynomial under the
    // change of variables (numeric check)
    DiGraph square = hypercube_graph(2);
    for (int m1 = 1; m1 <= 2; ++m1)
        for (int m2 = 1; m2 <= 2; ++m2) {
            for (std::uint64_t trial = 0; trial < 3; ++trial) {
                Assignment a = bouquet_assignment(b, 401, trial);
                CofactorVector cof = lifted_cofactors(tg, a);
                expect(c, !cof.degenerate, "degenerate cofactors on TB(2,2)");
                if (cof.degenerate) break;
                Rat z_val = cof.cof[static_cast<size_t>(tg.index_of(a_tree(m1, m2)))];

                // corner with coordinate i equal to m_i (bit = m_i - 1)
                int code = (m1 - 1) | ((m2 - 1) << 1);
                Rat rhs(0);
                visit_forests(square, {code}, [&](const std::vector<int>& out_edge) {
                    Rat term(1);
                    int axis_use[2] = {0, 0};
                    for (int eid : out_edge) {
                        if (eid < 0) continue;
                        const Edge& e = square.edge(eid);
                        int axis = eid % 2;
                        int bit = (e.target >> axis) & 1;
                        ++axis_use[axis];
                        term *= a.at(x_var(b.hub_edge(axis + 1))) *
                                a.at(x_var(b.petal_edge(axis + 1, bit + 1)));
                    }
                    for (int axis = 0; axis < 2; ++axis) {
                        Rat t_i = a.at(x_var(b.petal_edge(axis + 1, 1))) +
                                  a.at(x_var(b.petal_edge(axis + 1, 2)));
                        for (int u = 0; u < 2 - axis_use[axis]; ++u) term *= t_i;
                    }
                    rhs += term;
                });
                expect(c, z_val == rhs, "Z substitution mismatch at corner");
            }
        }

    // explicit isomorphism with the subdivided square
    std::set<std::tuple<int, int, int>> expected;
    for (int m1 = 1; m1 <= 2; ++m1)
        for (int m2 = 1; m2 <= 2; ++m2) {
            int a_idx = tg.index_of(a_tree(m1, m2));
            expected.emplace(a_idx, tg.index_of(b_tree(1, m2)), b.hub_edge(1));
            expected.emplace(a_idx, tg.index_of(b_tree(2, m1)), b.hub_edge(2));
        }
    for (int i = 1; i <= 2; ++i)
        for (int om = 1; om <= 2; ++om) {
            int b_idx = tg.index_of(b_tree(i, om));
            for (int j = 1; j <= 2; ++j)
                expected.emplace(b_idx, tg.index_of(c_tree(i, om, j)), b.petal_edge(i, j));
        }
    for (int i = 1; i <= 2; ++i)
        for (int om = 1; om <= 2; ++om)
            for (int j = 1; j <= 2; ++j) {
                int c_idx = tg.index_of(c_tree(i, om, j));
                int m1 = i == 1 ? j : om;
                int m2 = i == 2 ? j : om;
                expected.emplace(c_idx, tg.index_of(a_tree(m1, m2)), b.return_edge(i, j));
            }
    std::set<std::tuple<int, int, int>> actual;
    for (const TreeGraphEdge& e : tg.edges()) actual.emplace(e.src, e.dst, e.label);
    expect(c, expected == actual, "TB(2,2) is not the subdivided square");
    return c;
}

std::vector<NamedCheck> builtin_examples() {
    std::vector<NamedCheck> checks;
    checks.push_back(check_cayley_counts(5));
    checks.push_back(check_stanley_hypercube());
    checks.push_back(check_cycle_family(5));
    checks.push_back(check_complete_multiplicities(5));
    checks.push_back(check_tree_graph_of_k3());
    checks.push_back(check_bernardi_forest(2));
    checks.push_back(check_hypercube_tree_polynomial(2));
    checks.push_back(check_hypercube_tree_polynomial(3));
    checks.push_back(check_bouquet_family());
    checks.push_back(check_bouquet_refined_determinant());
    checks.push_back(check_bouquet_hypercube_link());
    return checks;
}

}  // namespace treegraph
