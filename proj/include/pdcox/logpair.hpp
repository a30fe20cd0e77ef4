#pragma once

// Log pairs on the projective line with standard boundary coefficients:
// class group and Cox ring of (P^1, sum (1 - 1/n_i) p_i).

#include <algorithm>
#include <utility>
#include <vector>

#include "pdcox/abelian.hpp"
#include "pdcox/errors.hpp"
#include "pdcox/gradedring.hpp"
#include "pdcox/p1point.hpp"
#include "pdcox/pdiv.hpp"
#include "pdcox/rational.hpp"

namespace pdcox {

struct P1LogPair {
    // (point, coefficient) with coefficients in [0,1); points pairwise distinct.
    std::vector<std::pair<P1Point, Rat>> points;

    void validate() const {
        for (const auto& [p, c] : points) {
            if (c < 0 || c >= 1)
                throw SchemaError("boundary coefficient " + pdcox::to_string(c) +
                                  " outside [0,1)");
        }
        for (std::size_t i = 0; i < points.size(); ++i)
            for (std::size_t j = i + 1; j < points.size(); ++j)
                if (points[i].first == points[j].first)
                    throw DuplicatePointError("repeated point " + points[i].first.to_string());
    }
};

// Largest standard coefficient 1 - 1/n below or equal to c: n = floor(1/(1-c)).
inline Rat standard_approximation(const Rat& c) {
    if (c < 0 || c >= 1) throw SchemaError("coefficient outside [0,1)");
    Rat inv = Rat(1) / (Rat(1) - c);
    Int n = numer(inv) / denom(inv);  // floor: inv > 0
    return Rat(1) - Rat(1) / Rat(n);
}

inline P1LogPair standard_approximation(const P1LogPair& pair) {
    P1LogPair out = pair;
    for (auto& [p, c] : out.points) c = standard_approximation(c);
    return out;
}

namespace lpdetail {

// Multiplicities n_i >= 2 of the standard model, points kept alongside.
inline std::vector<std::pair<P1Point, Int>> standard_multiplicities(const P1LogPair& pair) {
    pair.validate();
    std::vector<std::pair<P1Point, Int>> out;
    for (const auto& [p, c] : pair.points) {
        Rat sc = standard_approximation(c);
        if (sc == 0) continue;
        Int n = denom(Rat(1) - sc);  // sc = 1 - 1/n in lowest terms
        out.emplace_back(p, n);
    }
    return out;
}

// Relation matrix rows n_i x_i - n_{i+1} x_{i+1} for generators x_i = (1/n_i) p_i.
inline std::vector<IntVec> consecutive_relations(const std::vector<Int>& mult) {
    std::vector<IntVec> rel;
    for (std::size_t i = 0; i + 1 < mult.size(); ++i) {
        IntVec row(mult.size(), Int(0));
        row[i] = mult[i];
        row[i + 1] = -mult[i + 1];
        rel.push_back(row);
    }
    return rel;
}

// Multiplicity list padded with 1s so there are at least two entries, then
// checked against the log Fano condition.
inline std::vector<Int> fano_multiplicities(const P1LogPair& pair) {
    std::vector<Int> mult;
    for (const auto& [p, n] : standard_multiplicities(pair)) mult.push_back(n);
    while (mult.size() < 2) mult.push_back(1);
    if (mult.size() > 3)
        throw NotLogFanoError("more than three nontrivial boundary points");
    if (mult.size() == 3) {
        std::vector<Int> sorted = mult;
        std::sort(sorted.begin(), sorted.end(), std::greater<Int>());
        if (!is_platonic_triple(sorted[0], sorted[1], sorted[2]))
            throw NotLogFanoError("multiplicities (" + mult[0].get_str() + "," +
                                  mult[1].get_str() + "," + mult[2].get_str() +
                                  ") fail 1/a + 1/b + 1/c > 1");
    }
    return mult;
}

// Degrees normalized so every free coordinate is positive on its first
// nonzero variable degree (the grading is ample, so all signs agree).
inline void normalize_free_signs(const FGAbelianGroup& g, std::vector<IntVec>& degrees) {
    std::size_t t = g.invariant_factors.size();
    for (std::size_t k = t; k < t + static_cast<std::size_t>(g.free_rank); ++k) {
        int sign = 0;
        for (const auto& d : degrees) {
            if (d[k] != 0) {
                sign = d[k] > 0 ? 1 : -1;
                break;
            }
        }
        if (sign < 0)
            for (auto& d : degrees) d[k] = -d[k];
    }
}

}  // namespace lpdetail

struct P1ClassGroup {
    FGAbelianGroup group;
    std::vector<IntVec> generator_degrees;  // degree of x_i = (1/n_i) p_i
};

// Divisor class group of the standard model of the pair, presented by the
// fractional point generators with consecutive relations n_i x_i = n_{i+1} x_{i+1}.
inline P1ClassGroup p1_class_group(const P1LogPair& pair) {
    std::vector<Int> mult = lpdetail::fano_multiplicities(pair);
    CokernelData data =
        cokernel_data(mult.size(), lpdetail::consecutive_relations(mult));
    lpdetail::normalize_free_signs(data.group, data.generator_degrees);
    return P1ClassGroup{data.group, data.generator_degrees};
}

// Cox ring of the standard model: a polynomial ring on two variables for at
// most two nontrivial points, and a platonic trinomial ring for three.
inline GradedRingPresentation p1_cox(const P1LogPair& pair) {
    std::vector<Int> mult = lpdetail::fano_multiplicities(pair);
    P1ClassGroup cl = p1_class_group(pair);

    GradedRingPresentation out;
    out.grading_group = cl.group;
    const char* names2[] = {"x", "y"};
    const char* names3[] = {"x", "y", "z"};
    for (std::size_t i = 0; i < mult.size(); ++i) {
        CoxVariable v;
        v.name = mult.size() == 2 ? names2[i] : names3[i];
        v.exponent = mult[i];
        v.degree = cl.generator_degrees[i];
        out.variables.push_back(v);
    }
    if (mult.size() == 3) {
        Trinomial rel;
        rel.index = 0;
        rel.theta = CoxScalar(Rat(1));
        rel.block0 = MonomialBlock{{0}, {mult[0]}};
        rel.block1 = MonomialBlock{{1}, {mult[1]}};
        rel.block2 = MonomialBlock{{2}, {mult[2]}};
        out.relations.push_back(rel);
    }
    return out;
}

}  // namespace pdcox
