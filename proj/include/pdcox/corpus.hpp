#pragma once

// Built-in instance corpus: curated anchors spanning ranks one to three and
// all five multiplicity families, plus a deterministic seeded generator of
// random proper instances.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "pdcox/pdiv.hpp"
#include "pdcox/polyhedron.hpp"
#include "pdcox/rational.hpp"

namespace pdcox {

struct CorpusEntry {
    std::string name;
    PolyhedralDivisor divisor;
};

namespace corpusdetail {

inline RatVec rv(std::vector<Rat> xs) { return RatVec(xs.begin(), xs.end()); }

inline Mark sv_mark(const std::string& point, std::vector<Rat> vertex, const Cone& tail) {
    return Mark{P1Point::parse(point), SigmaPolyhedron({rv(std::move(vertex))}, tail)};
}

inline Mark mv_mark(const std::string& point, std::vector<std::vector<Rat>> vertices,
                    const Cone& tail) {
    std::vector<RatVec> vs;
    for (auto& v : vertices) vs.push_back(rv(std::move(v)));
    return Mark{P1Point::parse(point), SigmaPolyhedron(vs, tail)};
}

}  // namespace corpusdetail

// Hand-picked instances: names record the ambient rank and the multiplicity
// triple.  Every entry is proper and klt.
inline std::vector<CorpusEntry> curated_corpus() {
    using namespace corpusdetail;
    std::vector<CorpusEntry> out;

    Cone half = Cone::from_rays(1, {{Int(1)}});
    Cone quad = Cone::from_rays(2, {{Int(1), Int(0)}, {Int(0), Int(1)}});
    Cone skew = Cone::from_rays(2, {{Int(1), Int(0)}, {Int(1), Int(2)}});
    Cone oct = Cone::from_rays(3, {{Int(1), Int(0), Int(0)},
                                   {Int(0), Int(1), Int(0)},
                                   {Int(0), Int(0), Int(1)}});

    auto add = [&](const std::string& name, const Cone& tail, std::vector<Mark> marks) {
        out.push_back(CorpusEntry{name, PolyhedralDivisor(tail, std::move(marks))});
    };

    // rank 1
    add("r1_smooth_plane", half, {sv_mark("0", {Rat(1)}, half)});
    add("r1_cyclic_2_2", half, {sv_mark("0", {Rat(1, 2)}, half), sv_mark("1", {Rat(1, 2)}, half)});
    add("r1_cyclic_5_5", half, {sv_mark("0", {Rat(1, 5)}, half), sv_mark("1", {Rat(1, 5)}, half)});
    add("r1_cyclic_6_4", half, {sv_mark("0", {Rat(1, 6)}, half), sv_mark("1", {Rat(1, 4)}, half)});
    add("r1_cyclic_conv_2_2", half,
        {mv_mark("0", {{Rat(1, 2)}, {Rat(3, 2)}}, half), sv_mark("1", {Rat(1, 2)}, half)});
    add("r1_dihedral_2_2_2", half,
        {sv_mark("0", {Rat(1, 2)}, half), sv_mark("1", {Rat(1, 2)}, half),
         sv_mark("inf", {Rat(-1, 2)}, half)});
    add("r1_dihedral_3_2_2", half,
        {sv_mark("0", {Rat(1, 2)}, half), sv_mark("1", {Rat(1, 2)}, half),
         sv_mark("inf", {Rat(-2, 3)}, half)});
    add("r1_tetrahedral", half,
        {sv_mark("0", {Rat(1, 3)}, half), sv_mark("1", {Rat(1, 3)}, half),
         sv_mark("inf", {Rat(-1, 2)}, half)});
    add("r1_octahedral", half,
        {sv_mark("0", {Rat(1, 4)}, half), sv_mark("1", {Rat(1, 3)}, half),
         sv_mark("inf", {Rat(-1, 2)}, half)});
    add("r1_icosahedral", half,
        {sv_mark("0", {Rat(1, 5)}, half), sv_mark("1", {Rat(1, 3)}, half),
         sv_mark("inf", {Rat(-1, 2)}, half)});

    // rank 2
    add("r2_smooth_conv", quad, {mv_mark("0", {{Rat(1), Rat(0)}, {Rat(0), Rat(1)}}, quad)});
    add("r2_toric_quotient", skew, {sv_mark("0", {Rat(1), Rat(1)}, skew)});
    add("r2_cyclic_2_2", quad,
        {sv_mark("0", {Rat(1, 2), Rat(0)}, quad), sv_mark("1", {Rat(0), Rat(1, 2)}, quad)});
    add("r2_cyclic_conv_2_2", quad,
        {mv_mark("0", {{Rat(1, 2), Rat(0)}, {Rat(0), Rat(1, 2)}}, quad),
         sv_mark("1", {Rat(1, 2), Rat(1, 2)}, quad)});
    add("r2_dihedral_4_2_2", quad,
        {sv_mark("0", {Rat(1, 2), Rat(1, 2)}, quad), sv_mark("1", {Rat(1, 2), Rat(0)}, quad),
         sv_mark("inf", {Rat(1, 2), Rat(-1, 4)}, quad)});
    add("r2_tetrahedral", quad,
        {sv_mark("0", {Rat(1, 3), Rat(0)}, quad), sv_mark("1", {Rat(1, 3), Rat(1, 3)}, quad),
         sv_mark("inf", {Rat(-1, 2), Rat(1, 2)}, quad)});
    add("r2_octahedral", quad,
        {sv_mark("0", {Rat(1, 4), Rat(0)}, quad), sv_mark("1", {Rat(1, 3), Rat(1, 3)}, quad),
         sv_mark("inf", {Rat(-1, 2), Rat(1, 2)}, quad)});
    add("r2_icosahedral", quad,
        {sv_mark("0", {Rat(1, 5), Rat(0)}, quad), sv_mark("1", {Rat(1, 3), Rat(1, 3)}, quad),
         sv_mark("inf", {Rat(-1, 2), Rat(1, 2)}, quad)});

    // rank 3
    add("r3_smooth_point", oct, {sv_mark("0", {Rat(1), Rat(1), Rat(1)}, oct)});
    add("r3_cyclic_2_2", oct,
        {sv_mark("0", {Rat(1, 2), Rat(0), Rat(0)}, oct),
         sv_mark("1", {Rat(0), Rat(1, 2), Rat(0)}, oct)});
    add("r3_dihedral_2_2_2", oct,
        {sv_mark("0", {Rat(1, 2), Rat(0), Rat(0)}, oct),
         sv_mark("1", {Rat(0), Rat(1, 2), Rat(0)}, oct),
         sv_mark("inf", {Rat(0), Rat(0), Rat(1, 2)}, oct)});
    add("r3_tetrahedral", oct,
        {sv_mark("0", {Rat(1, 3), Rat(1, 3), Rat(0)}, oct),
         sv_mark("1", {Rat(0), Rat(0), Rat(1, 3)}, oct),
         sv_mark("inf", {Rat(1, 2), Rat(0), Rat(1, 2)}, oct)});
    add("r3_octahedral", oct,
        {sv_mark("0", {Rat(1, 4), Rat(0), Rat(0)}, oct),
         sv_mark("1", {Rat(0), Rat(1, 3), Rat(0)}, oct),
         sv_mark("inf", {Rat(0), Rat(0), Rat(1, 2)}, oct)});
    add("r3_icosahedral", oct,
        {sv_mark("0", {Rat(1, 5), Rat(0), Rat(0)}, oct),
         sv_mark("1", {Rat(0), Rat(1, 3), Rat(0)}, oct),
         sv_mark("inf", {Rat(0), Rat(0), Rat(1, 2)}, oct)});

    return out;
}

namespace corpusdetail {

// Vertex inside the cone with denominator exactly mu: a nonnegative integer
// combination of the rays divided by mu, with the numerator content coprime
// to mu.
inline RatVec cone_vertex(std::mt19937_64& rng, const Cone& tail, const Int& mu) {
    std::size_t r = tail.ambient_rank();
    for (;;) {
        IntVec w(r, Int(0));
        bool nonzero = false;
        for (const auto& ray : tail.rays()) {
            Int a = Int(static_cast<unsigned long>(rng() % 3));
            if (a != 0) nonzero = true;
            for (std::size_t k = 0; k < r; ++k) w[k] += a * ray[k];
        }
        if (!nonzero) continue;
        Int content = 0;
        for (const auto& x : w) content = gcd(content, x);
        if (gcd(content, mu) != 1) continue;
        RatVec v;
        for (const auto& x : w) v.push_back(Rat(x) / Rat(mu));
        return v;
    }
}

}  // namespace corpusdetail

// Deterministic stream of random proper klt instances: the multiplicity
// triple is drawn family-first, vertices are nonnegative ray combinations so
// properness holds by construction.
inline std::vector<CorpusEntry> random_corpus(std::uint64_t seed, std::size_t count) {
    using namespace corpusdetail;
    std::mt19937_64 rng(seed);

    std::vector<Cone> pool1{Cone::from_rays(1, {{Int(1)}})};
    std::vector<Cone> pool2{
        Cone::from_rays(2, {{Int(1), Int(0)}, {Int(0), Int(1)}}),
        Cone::from_rays(2, {{Int(1), Int(0)}, {Int(1), Int(2)}}),
        Cone::from_rays(2, {{Int(1), Int(0)}, {Int(1), Int(3)}}),
    };
    std::vector<Cone> pool3{
        Cone::from_rays(3,
                        {{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(0), Int(0), Int(1)}}),
        Cone::from_rays(3,
                        {{Int(1), Int(0), Int(0)}, {Int(0), Int(1), Int(0)}, {Int(1), Int(1), Int(2)}}),
    };
    const char* points[] = {"0", "1", "inf", "2", "-1"};

    std::vector<CorpusEntry> out;
    for (std::size_t i = 0; i < count; ++i) {
        unsigned rank = 1 + static_cast<unsigned>(rng() % 3);
        const std::vector<Cone>& pool = rank == 1 ? pool1 : rank == 2 ? pool2 : pool3;
        const Cone& tail = pool[rng() % pool.size()];

        std::vector<Int> mus;
        switch (rng() % 5) {
            case 0:
                mus = {Int(1 + static_cast<long>(rng() % 6)), Int(1 + static_cast<long>(rng() % 6))};
                break;
            case 1:
                mus = {Int(2 + static_cast<long>(rng() % 4)), Int(2), Int(2)};
                break;
            case 2: mus = {Int(3), Int(3), Int(2)}; break;
            case 3: mus = {Int(4), Int(3), Int(2)}; break;
            default: mus = {Int(5), Int(3), Int(2)}; break;
        }
        if (rng() % 3 == 0) mus.push_back(Int(1));  // extra trivial mark

        std::vector<Mark> marks;
        for (std::size_t j = 0; j < mus.size(); ++j) {
            RatVec v = cone_vertex(rng, tail, mus[j]);
            marks.push_back(Mark{P1Point::parse(points[j]), SigmaPolyhedron({v}, tail)});
        }
        PolyhedralDivisor d(tail, marks);
        out.push_back(CorpusEntry{"seed" + std::to_string(seed) + "_" + std::to_string(i), d});
    }
    return out;
}

}  // namespace pdcox
