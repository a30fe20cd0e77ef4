#pragma once

// Universal covers of spherical orbifolds on the projective line: triangle
// group orders are obtained by coset enumeration (memoized), covers are
// described by their Galois group and branch data.

#include <array>
#include <map>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "pdcox/branch.hpp"
#include "pdcox/errors.hpp"
#include "pdcox/p1point.hpp"
#include "pdcox/pdiv.hpp"
#include "pdcox/presentation.hpp"
#include "pdcox/rational.hpp"
#include "pdcox/todd_coxeter.hpp"
#include "pdcox/words.hpp"

namespace pdcox {

// Order of the rotation triangle group <x, y | x^a, y^b, (xy)^c>, finite
// exactly for the platonic triples. Computed once per triple by coset
// enumeration and cached; safe to call concurrently.
inline Int von_dyck_order(const Int& a, const Int& b, const Int& c) {
    static std::mutex mu;
    static std::map<std::array<Int, 3>, Int> cache;
    std::array<Int, 3> key{a, b, c};
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    Presentation p;
    p.generators = {"x", "y"};
    p.relators.push_back(generator_power(0, a));
    p.relators.push_back(generator_power(1, b));
    p.relators.push_back(word_power(Word{1, 2}, c));
    CosetTable t = todd_coxeter(p, 200000);
    Int order = t.order();
    std::lock_guard<std::mutex> lock(mu);
    cache.emplace(key, order);
    return order;
}

struct CoverDescription {
    std::string group_name;  // trivial, cyclic(d), dihedral(d), tetrahedral, ...
    Int degree = 1;
    BranchData branch;
};

namespace sphdetail {

// Multiplicity of a standard coefficient 1 - 1/n, validating exactness.
inline Int standard_multiplicity(const Rat& c) {
    if (c < 0 || c >= 1) throw SchemaError("boundary coefficient outside [0,1)");
    Rat rest = Rat(1) - c;
    if (numer(rest) != 1)
        throw SchemaError("coefficient " + to_string(c) + " is not of the form 1 - 1/n");
    return denom(rest);
}

}  // namespace sphdetail

// Universal cover of the orbifold (P^1, sum (1 - 1/mu_p) p).  Spherical
// signatures only; anything hyperbolic or with four or more branch points is
// rejected.  Over each listed point the cover has degree/e preimages, each
// ramified to order e.
inline CoverDescription orbifold_universal_cover(
    const std::vector<std::pair<P1Point, Rat>>& boundary) {
    std::vector<std::pair<P1Point, Int>> marked;
    for (const auto& [p, c] : boundary) {
        Int n = sphdetail::standard_multiplicity(c);
        if (n > 1) marked.emplace_back(p, n);
    }
    std::sort(marked.begin(), marked.end(),
              [](const auto& x, const auto& y) { return x.second > y.second; });

    CoverDescription out;
    if (marked.size() > 3)
        throw NotLogFanoError("more than three orbifold points");

    if (marked.size() <= 1) {
        // Smooth sphere or teardrop: the orbifold is already simply connected.
        out.group_name = "trivial";
        out.degree = 1;
        out.branch.degree = 1;
        return out;
    }

    if (marked.size() == 2) {
        Int g = gcd(marked[0].second, marked[1].second);
        if (g == 1) {
            out.group_name = "trivial";
            out.degree = 1;
            out.branch.degree = 1;
            return out;
        }
        out.group_name = "cyclic(" + g.get_str() + ")";
        out.degree = g;
        out.branch.degree = g;
        for (const auto& [p, n] : marked)
            out.branch.entries.push_back(BranchEntry{p, g, Int(1)});
        out.branch.validate();
        return out;
    }

    const Int a = marked[0].second, b = marked[1].second, c = marked[2].second;
    auto family = classify_platonic(a, b, c);
    if (!family)
        throw NotLogFanoError("orbifold multiplicities (" + a.get_str() + "," + b.get_str() +
                              "," + c.get_str() + ") are hyperbolic or flat");
    Int d = von_dyck_order(a, b, c);
    switch (*family) {
        case TripleFamily::Cyclic:
            throw Error("triple with entry 1 cannot have three orbifold points");
        case TripleFamily::Dihedral:
            out.group_name = "dihedral(" + d.get_str() + ")";
            break;
        case TripleFamily::Tetrahedral:
            out.group_name = "tetrahedral";
            break;
        case TripleFamily::Octahedral:
            out.group_name = "octahedral";
            break;
        case TripleFamily::Icosahedral:
            out.group_name = "icosahedral";
            break;
    }
    out.degree = d;
    out.branch.degree = d;
    for (const auto& [p, n] : marked)
        out.branch.entries.push_back(BranchEntry{p, n, d / n});
    out.branch.validate();
    return out;
}

}  // namespace pdcox
