#pragma once

#include <string>
#include <vector>

#include "treegraph/exploration.hpp"
#include "treegraph/operators.hpp"
#include "treegraph/tree_graph.hpp"

namespace treegraph {

inline constexpr int kDefaultTrials = 3;
inline constexpr std::uint64_t kDefaultSeed = 1729;
// up to this many trees, minor identities are additionally checked one
// determinant at a time
inline constexpr int kDirectMinorGuard = 24;
// up to this many trees, identities are additionally verified symbolically
inline constexpr int kSymbolicTreeGuard = 10;

struct TrialCheck {
    std::uint64_t trial = 0;
    bool ok = true;
    std::string lhs;
    std::string rhs;
};

struct FactorEntry {
    VertexSet w;
    long m = 0;
    std::string det_value;  // at the first trial
};

struct FactorizationReport {
    std::string check;
    bool ok = true;
    std::uint64_t seed = 0;
    std::vector<std::string> notes;
    std::vector<FactorEntry> factors;
    std::vector<TrialCheck> trials;

    void note(std::string s) { notes.push_back(std::move(s)); }
    void record(TrialCheck t) {
        ok = ok && t.ok;
        trials.push_back(std::move(t));
    }
};

// det(lifted L) = prod over strongly connected W of det(L_W)^m(W), checked
// exactly at `trials` random assignments, and symbolically on small tree
// graphs.
FactorizationReport verify_main_theorem(const TreeGraph& tg, const MultiplicityTable& table,
                                        int trials, std::uint64_t seed);

// Phi_G = prod over proper strongly connected W of Psi_{V \ W}^m(W).
MultiPoly phi_polynomial(const DiGraph& g, const MultiplicityTable& table);
Rat phi_value(const DiGraph& g, const MultiplicityTable& table, const Assignment& a);

// All diagonal cofactors of -(lifted Laplacian) at an assignment: one exact
// elimination yields the left kernel vector and an anchoring minor, from
// which every cofactor follows (the adjugate of a rank n-1 matrix is a rank
// one product). cof[a] = det((-Q)^a).
struct CofactorVector {
    bool degenerate = false;
    std::vector<Rat> cof;
};
CofactorVector lifted_cofactors(const TreeGraph& tg, const Assignment& a);

// det((-Q)^a) = pi_a * Phi_G for every spanning tree a.
FactorizationReport verify_minor_identity(const TreeGraph& tg, const MultiplicityTable& table,
                                    int trials, std::uint64_t seed);

// F_TG = Phi_G * F_G.
FactorizationReport verify_spanning_ratio(const TreeGraph& tg, const MultiplicityTable& table,
                                          int trials, std::uint64_t seed);

// det(zI - lifted M) = prod over W of det(zI - M_W)^n(W), with the signed-sum
// multiplicities n(W), which must agree with the exploration table.
FactorizationReport verify_adjacency_factorization(const TreeGraph& tg,
                                                   const MultiplicityTable& table,
                                                   std::uint64_t seed);

struct NamedCheck {
    std::string name;
    bool ok = true;
    std::string detail;
};

NamedCheck check_cayley_counts(int max_n);            // |TK_n| = n^(n-1)
NamedCheck check_stanley_hypercube();                 // 16 and 3072 via matrix-tree
NamedCheck check_cycle_family(int max_n);             // n^2 trees, multiplicity pattern
NamedCheck check_complete_multiplicities(int max_n);  // (k-1)(n-1)^(n-k-1)
NamedCheck check_tree_graph_of_k3();                  // 81 spanning trees, brute force
NamedCheck check_bernardi_forest(int k);              // hypercube forest product
NamedCheck check_hypercube_tree_polynomial(int k);    // rooted tree generating polynomial
NamedCheck check_bouquet_family();                    // multiplicities, det Q_{W_I}, Phi_B
NamedCheck check_bouquet_refined_determinant();       // the (z, w)-weighted minors
NamedCheck check_bouquet_hypercube_link();            // Z substitution + subdivided-square iso

// The whole worked-example suite.
std::vector<NamedCheck> builtin_examples();

}  // namespace treegraph
