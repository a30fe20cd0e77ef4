#pragma once

// Iteration of Cox rings: derived-series iteration of the fundamental group,
// the abelianization tower of the boundary orbifold with its triple sequence,
// and the simply connected factorial canonical cover.

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "pdcox/abelian.hpp"
#include "pdcox/branch.hpp"
#include "pdcox/coxring.hpp"
#include "pdcox/errors.hpp"
#include "pdcox/fundgrp.hpp"
#include "pdcox/gradedring.hpp"
#include "pdcox/pdiv.hpp"
#include "pdcox/permgroup.hpp"
#include "pdcox/spherical.hpp"

namespace pdcox {

// Worst-case depth bound for the iteration of a group of order at most c:
// ceil(2 log2 c) + 3.
inline long iteration_bound(const Int& c) {
    if (c < 1) throw Error("iteration_bound needs a positive order");
    Int square = c * c;
    long k = 0;
    Int pow = 1;
    while (pow < square) {
        pow *= 2;
        ++k;
    }
    return k + 3;
}

struct IterationReport {
    long depth = 0;
    std::vector<FGAbelianGroup> torsion_chain;  // D_k / D_{k+1} for k < depth
    Int terminal_order = 1;
    bool terminal_trivial = true;
    std::vector<std::array<Int, 3>> triple_sequence;  // empty at group level
    std::optional<bool> sequence_valid;
};

// Derived-series iteration: depth is the first k with D_k = D_{k+1}, the
// chain lists the abelian quotients down to the perfect residue.
inline IterationReport group_iteration(const PermGroup& g, std::size_t max_elements = 200000) {
    std::vector<PermGroup> series = derived_series(g, max_elements);
    IterationReport out;
    out.depth = static_cast<long>(series.size()) - 1;
    for (std::size_t k = 0; k + 1 < series.size(); ++k)
        out.torsion_chain.push_back(quotient_invariants(series[k], series[k + 1]));
    out.terminal_order = series.back().order();
    out.terminal_trivial = series.back().trivial();
    return out;
}

// Same iteration from a regular permutation action, materializing only the
// derived subgroup (small for the groups at hand) and reading the top abelian
// quotient off a walk over its cosets.  Memory stays linear in the degree
// where the materialized route is quadratic, which matters for the regular
// representations coming out of coset enumeration.
inline IterationReport regular_group_iteration(std::size_t degree, const std::vector<Perm>& gens,
                                               std::size_t max_elements = 200000) {
    PermGroup n = derived_subgroup_of(degree, gens, max_elements);
    bool perfect = true;
    for (const auto& g : gens)
        if (!n.contains(g)) {
            perfect = false;
            break;
        }
    IterationReport out;
    if (perfect) {
        if (n.order() != Int(degree)) throw Error("iteration needs a regular action");
        out.depth = 0;
        out.terminal_order = Int(degree);
        out.terminal_trivial = degree == 1;
        return out;
    }
    FGAbelianGroup top = regular_quotient_abelianization(degree, gens, n);
    IterationReport sub = group_iteration(n, max_elements);
    out.depth = sub.depth + 1;
    out.torsion_chain.push_back(std::move(top));
    for (auto& q : sub.torsion_chain) out.torsion_chain.push_back(std::move(q));
    out.terminal_order = sub.terminal_order;
    out.terminal_trivial = sub.terminal_trivial;
    return out;
}

// --- triple sequences -------------------------------------------------------

inline std::array<Int, 3> sorted_triple(std::array<Int, 3> t) {
    std::sort(t.begin(), t.end(), std::greater<Int>());
    return t;
}

// Whether {a, b} is an adjacent pair of one of the four admissible chains:
//   (1,1,1)-(2,2,2)-(3,3,2)-(4,3,2)
//   (1,1,1)-(x,x,1)-(2x,2,2)
//   (1,1,1)-(x,x,1)-(x,2,2)
//   (l0/l, l1/l, 1)-(l0, l1, 1) with l = gcd(l0, l1) > 1
inline bool triple_pair_valid(std::array<Int, 3> a, std::array<Int, 3> b) {
    a = sorted_triple(a);
    b = sorted_triple(b);
    auto arrow = [](const std::array<Int, 3>& from, const std::array<Int, 3>& to) {
        auto is = [](const std::array<Int, 3>& t, long x, long y, long z) {
            return t[0] == x && t[1] == y && t[2] == z;
        };
        if (is(from, 1, 1, 1) && is(to, 2, 2, 2)) return true;
        if (is(from, 2, 2, 2) && is(to, 3, 3, 2)) return true;
        if (is(from, 3, 3, 2) && is(to, 4, 3, 2)) return true;
        if (is(from, 1, 1, 1) && to[0] == to[1] && to[2] == 1) return true;
        bool from_xx1 = from[0] == from[1] && from[2] == 1;
        if (from_xx1 && to[0] == 2 * from[0] && to[1] == 2 && to[2] == 2) return true;
        if (from_xx1 && to[0] == from[0] && to[1] == 2 && to[2] == 2) return true;
        if (from[2] == 1 && to[2] == 1) {
            Int l = gcd(to[0], to[1]);
            if (l > 1 && from[0] * l == to[0] && from[1] * l == to[1]) return true;
        }
        return false;
    };
    return arrow(a, b) || arrow(b, a);
}

// Validates every adjacent pair of the sequence.
inline bool triple_sequence_check(const std::vector<std::array<Int, 3>>& seq) {
    for (std::size_t i = 0; i + 1 < seq.size(); ++i)
        if (!triple_pair_valid(seq[i], seq[i + 1])) return false;
    return true;
}

// --- abelianization tower ---------------------------------------------------

struct TowerStep {
    std::array<Int, 3> signature;  // boundary triple before the step
    FGAbelianGroup step_group;     // abelianized orbifold group of that triple
    BranchData branch;             // branch data of the step cover
};

struct AbelianTower {
    std::vector<std::array<Int, 3>> sequence;
    std::vector<TowerStep> steps;
    bool reached_smooth = false;
    PolyhedralDivisor master;  // composed pullback along all steps
};

namespace iterdetail {

// Order of the element with the given degree vector in a finite group
// presented by invariant factors.
inline Int element_order(const FGAbelianGroup& g, const IntVec& degree) {
    std::size_t t = g.invariant_factors.size();
    for (std::size_t k = t; k < degree.size(); ++k)
        if (degree[k] != 0) throw Error("element of infinite order in finite quotient");
    Int order = 1;
    for (std::size_t k = 0; k < t; ++k) {
        const Int& d = g.invariant_factors[k];
        Int x = mod_reduce(degree[k], d);
        Int o = d / gcd(x, d);
        order = order / gcd(order, o) * o;
    }
    return order;
}

}  // namespace iterdetail

// Iterated abelian covers of the boundary orbifold, pulling the divisor back
// at each step, until the boundary is trivial or the orbifold group is
// perfect.  The recorded sequence of triples follows the admissible chains.
inline AbelianTower abelian_tower(const PolyhedralDivisor& d, std::size_t max_steps = 64) {
    d.require_proper();
    require_klt(d);

    PolyhedralDivisor current = d;
    AbelianTower out{{}, {}, false, d};
    for (std::size_t step = 0; step <= max_steps; ++step) {
        if (step == max_steps) throw Error("abelianization tower failed to terminate");
        KltCertificate cert = klt_certificate(current);
        if (!cert.is_klt)
            throw Error("pullback left the klt class; unsupported coefficient mix");
        std::array<Int, 3> triple{cert.triple[0], cert.triple[1], cert.triple[2]};
        out.sequence.push_back(triple);
        if (triple == std::array<Int, 3>{1, 1, 1}) {
            out.reached_smooth = true;
            break;
        }

        // Orbifold group of the current boundary: one generator per
        // nontrivial point, product relation plus torsion relations.
        std::vector<MuRecord> nt;
        for (const auto& rec : mu_data(current))
            if (rec.mu > 1) nt.push_back(rec);
        long k = static_cast<long>(nt.size());
        std::vector<IntVec> rel;
        rel.push_back(IntVec(static_cast<std::size_t>(k), Int(1)));
        for (long j = 0; j < k; ++j) {
            IntVec row(static_cast<std::size_t>(k), Int(0));
            row[static_cast<std::size_t>(j)] = nt[static_cast<std::size_t>(j)].mu;
            rel.push_back(row);
        }
        CokernelData ab = cokernel_data(static_cast<std::size_t>(k), rel);
        if (ab.group.free_rank != 0)
            throw Error("orbifold abelianization unexpectedly infinite");
        Int degree = ab.group.torsion_order();
        if (degree == 1) break;  // perfect residue

        BranchData branch;
        branch.degree = degree;
        for (long j = 0; j < k; ++j) {
            Int e = iterdetail::element_order(ab.group,
                                              ab.generator_degrees[static_cast<std::size_t>(j)]);
            if (e > 1)
                branch.entries.push_back(
                    BranchEntry{nt[static_cast<std::size_t>(j)].point, e, degree / e});
        }
        branch.validate();
        out.steps.push_back(TowerStep{triple, ab.group, branch});
        current = pullback(current, branch);
        out.master = current;
    }
    return out;
}

// Iteration report of a divisor: group-level iteration of its fundamental
// group combined with the boundary triple sequence.
inline IterationReport divisor_iteration(const PolyhedralDivisor& d, long max_cosets = 200000,
                                         std::size_t max_elements = 200000) {
    Pi1Report rep = pi1_report(d, max_cosets);
    if (!rep.order) throw NotKltError("fundamental group is infinite; iteration undefined");

    Presentation pres = rep.presentation;
    CosetTable table = todd_coxeter(pres, max_cosets);
    std::vector<Perm> gens;
    for (std::size_t g = 0; g < pres.generators.size(); ++g)
        gens.push_back(table.generator_permutation(g));

    IterationReport out = regular_group_iteration(table.table.size(), gens, max_elements);
    AbelianTower tower = abelian_tower(d);
    out.triple_sequence = tower.sequence;
    out.sequence_valid = triple_sequence_check(tower.sequence);
    return out;
}

// --- simply connected factorial canonical cover ------------------------------

struct ScfcReport {
    std::string cover_group_name;
    Int cover_degree;
    BranchData branch;
    PolyhedralDivisor pulled_back;
    GradedRingPresentation cover_cox;
    bool cover_pi1_abelian;
};

// Pullback along the universal cover of the boundary orbifold.  The resulting
// fundamental group must be abelian; this is verified by coset enumeration.
inline ScfcReport scfc(const PolyhedralDivisor& d, long max_cosets = 200000) {
    d.require_proper();
    require_klt(d);

    CoverDescription cover = orbifold_universal_cover(boundary_divisor(d));
    PolyhedralDivisor pulled = pullback(d, cover.branch);
    GradedRingPresentation cox = platonic_cox(pulled);

    Presentation pres = pi1_presentation(pulled);
    FGAbelianGroup ab = pres.abelianization();
    CosetTable table = todd_coxeter(pres, max_cosets);
    bool abelian = ab.free_rank == 0 && table.order() == ab.torsion_order();
    if (!abelian)
        throw CoverPi1NotAbelianError("universal-cover pullback has non-abelian pi1");

    return ScfcReport{cover.group_name, cover.degree,       cover.branch,
                      pulled,           std::move(cox),     true};
}

}  // namespace pdcox
