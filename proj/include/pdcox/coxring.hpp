#pragma once

// Class group and Cox ring of the affine variety attached to a proper
// polyhedral divisor on the projective line.  The Cox ring is presented as a
// trinomial ring: one variable per vertex of each coefficient polyhedron plus
// one per non-contracted ray of the tail cone, with consecutive-block
// trinomial relations whose scalars come from the point configuration.

#include <algorithm>
#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdcox/abelian.hpp"
#include "pdcox/errors.hpp"
#include "pdcox/gradedring.hpp"
#include "pdcox/p1point.hpp"
#include "pdcox/pdiv.hpp"
#include "pdcox/polyhedron.hpp"
#include "pdcox/rational.hpp"

namespace pdcox {

namespace coxdetail {

// Vertices of one coefficient polyhedron, ordered by decreasing denominator
// (stable on the stored lexicographic order), with their exponents mu(v).
struct BlockLayout {
    P1Point point;
    std::vector<RatVec> vertices;
    std::vector<Int> exponents;
    Int max_exponent = 1;
};

inline BlockLayout block_layout(const Mark& m) {
    BlockLayout b;
    b.point = m.point;
    std::vector<std::size_t> idx(m.coefficient.vertices().size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
        return vertex_denominator(m.coefficient.vertices()[x]) >
               vertex_denominator(m.coefficient.vertices()[y]);
    });
    for (std::size_t k : idx) {
        const RatVec& v = m.coefficient.vertices()[k];
        b.vertices.push_back(v);
        b.exponents.push_back(vertex_denominator(v));
    }
    b.max_exponent = b.exponents.empty() ? Int(1) : b.exponents.front();
    return b;
}

// Degree matrix of the grading: one column per variable (vertex variables
// block by block, then ray variables), with lattice rows and consecutive
// fiber-degree rows.
inline std::vector<IntVec> grading_relations(long rank, const std::vector<BlockLayout>& blocks,
                                const std::vector<IntVec>& free_rays) {
    std::size_t cols = free_rays.size();
    for (const auto& b : blocks) cols += b.vertices.size();

    std::vector<IntVec> rows;
    for (long k = 0; k < rank; ++k) {
        IntVec row(cols, Int(0));
        std::size_t c = 0;
        for (const auto& b : blocks)
            for (std::size_t j = 0; j < b.vertices.size(); ++j, ++c) {
                Rat entry = Rat(b.exponents[j]) * b.vertices[j][static_cast<std::size_t>(k)];
                row[c] = numer(entry);  // mu(v) * v is integral
            }
        for (const auto& r : free_rays) row[c++] = r[static_cast<std::size_t>(k)];
        rows.push_back(row);
    }
    for (std::size_t i = 0; i + 1 < blocks.size(); ++i) {
        IntVec row(cols, Int(0));
        std::size_t c = 0;
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (std::size_t j = 0; j < blocks[b].vertices.size(); ++j, ++c) {
                if (b == i) row[c] = blocks[b].exponents[j];
                if (b == i + 1) row[c] = -blocks[b].exponents[j];
            }
        rows.push_back(row);
    }
    return rows;
}

inline std::vector<std::string> column_labels(const std::vector<BlockLayout>& blocks,
                                              std::size_t n_rays) {
    std::vector<std::string> names;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (std::size_t j = 0; j < blocks[b].vertices.size(); ++j)
            names.push_back("T" + std::to_string(b + 1) + "_" + std::to_string(j + 1));
    for (std::size_t k = 0; k < n_rays; ++k) names.push_back("S" + std::to_string(k + 1));
    return names;
}

// Fractional linear map sending three distinct points to 0, 1, infinity.
// When one of the three is symbolic the map itself is marked symbolic and
// every evaluation is symbolic.
struct Mobius {
    bool symbolic = false;
    Rat a, b, c, d;
};

inline Mobius mobius_to_standard(const P1Point& p0, const P1Point& p1, const P1Point& p2) {
    Mobius m;
    if (p0.is_symbolic() || p1.is_symbolic() || p2.is_symbolic()) {
        m.symbolic = true;
        return m;
    }
    if (p0.is_infinity()) {
        m.a = 0, m.b = p1.coordinate() - p2.coordinate(), m.c = 1, m.d = -p2.coordinate();
    } else if (p1.is_infinity()) {
        m.a = 1, m.b = -p0.coordinate(), m.c = 1, m.d = -p2.coordinate();
    } else if (p2.is_infinity()) {
        m.a = 1, m.b = -p0.coordinate(), m.c = 0, m.d = p1.coordinate() - p0.coordinate();
    } else {
        Rat q0 = p0.coordinate(), q1 = p1.coordinate(), q2 = p2.coordinate();
        m.a = q1 - q2, m.b = -q0 * (q1 - q2), m.c = q1 - q0, m.d = -q2 * (q1 - q0);
    }
    return m;
}

inline P1Point mobius_eval(const Mobius& m, const P1Point& z) {
    if (m.symbolic || z.is_symbolic())
        return P1Point::symbolic("image_of_" + z.to_string());
    if (z.is_infinity()) {
        if (m.c == 0) return P1Point::infinity();
        return P1Point::rational(m.a / m.c);
    }
    Rat den = m.c * z.coordinate() + m.d;
    if (den == 0) return P1Point::infinity();
    return P1Point::rational((m.a * z.coordinate() + m.b) / den);
}

// Coefficients (alpha, beta, gamma) of the linear relation between the three
// normalized sections attached to a window of three distinct points.
inline std::optional<std::array<Rat, 3>> window_coefficients(const P1Point& u, const P1Point& v,
                                                             const P1Point& w) {
    if (u.is_symbolic() || v.is_symbolic() || w.is_symbolic()) return std::nullopt;
    if (w.is_infinity())
        return std::array<Rat, 3>{Rat(1), Rat(-1), u.coordinate() - v.coordinate()};
    if (v.is_infinity())
        return std::array<Rat, 3>{Rat(1), u.coordinate() - w.coordinate(), Rat(-1)};
    if (u.is_infinity())
        return std::array<Rat, 3>{v.coordinate() - w.coordinate(), Rat(1), Rat(-1)};
    return std::array<Rat, 3>{w.coordinate() - v.coordinate(), u.coordinate() - w.coordinate(),
                              v.coordinate() - u.coordinate()};
}

// Fresh rational points 0, 1, 2, ... not already used by the divisor.
inline std::vector<P1Point> fresh_points(const PolyhedralDivisor& d, std::size_t count) {
    std::vector<P1Point> out;
    Int next = 0;
    while (out.size() < count) {
        P1Point cand = P1Point::rational(Rat(next));
        bool taken = false;
        for (const auto& m : d.marks())
            if (m.point == cand) taken = true;
        if (!taken) out.push_back(cand);
        next += 1;
    }
    return out;
}

}  // namespace coxdetail

struct ClassGroupData {
    FGAbelianGroup group;
    std::vector<std::string> labels;
    std::vector<IntVec> degrees;
};

// Divisor class group of X(D), presented by the vertex and free-ray variable
// classes with the lattice and fiber-degree relations.
inline ClassGroupData class_group_of(const PolyhedralDivisor& d) {
    d.require_proper();
    require_klt(d);

    std::vector<coxdetail::BlockLayout> blocks;
    for (const auto& m : d.marks()) blocks.push_back(coxdetail::block_layout(m));
    RaySplit rays = split_rays(d);

    std::vector<IntVec> rel = coxdetail::grading_relations(d.rank(), blocks, rays.free_rays);
    std::size_t cols = rel.empty() ? 0 : rel.front().size();
    CokernelData data = cokernel_data(cols, rel);

    ClassGroupData out;
    out.group = data.group;
    out.labels = coxdetail::column_labels(blocks, rays.free_rays.size());
    out.degrees = data.generator_degrees;
    return out;
}

// Cox ring of X(D) as a graded trinomial ring.  Divisors with fewer than
// three marks are first padded with trivial coefficients at fresh points;
// trailing linear blocks are then eliminated again, so the presentation is
// minimal whenever the relation scalars allow it.
inline GradedRingPresentation platonic_cox(const PolyhedralDivisor& d) {
    d.require_proper();
    require_klt(d);

    // Pad to at least three marks so the trinomial normal form applies.
    PolyhedralDivisor padded = d;
    bool did_pad = false;
    if (d.marks().size() < 3) {
        std::vector<Mark> marks = d.marks();
        RatVec origin(static_cast<std::size_t>(d.rank()), Rat(0));
        SigmaPolyhedron trivial({origin}, d.tail());
        for (const auto& p : coxdetail::fresh_points(d, 3 - d.marks().size()))
            marks.push_back(Mark{p, trivial});
        padded = PolyhedralDivisor(d.tail(), marks);
        did_pad = true;
    }

    // Blocks ordered by decreasing maximal exponent (stable over point order).
    std::vector<coxdetail::BlockLayout> blocks;
    for (const auto& m : padded.marks()) blocks.push_back(coxdetail::block_layout(m));
    std::stable_sort(blocks.begin(), blocks.end(),
                     [](const coxdetail::BlockLayout& x, const coxdetail::BlockLayout& y) {
                         return x.max_exponent > y.max_exponent;
                     });

    RaySplit rays = split_rays(padded);
    std::vector<IntVec> rel = coxdetail::grading_relations(padded.rank(), blocks, rays.free_rays);
    std::size_t cols = rel.empty() ? 0 : rel.front().size();
    CokernelData grading = cokernel_data(cols, rel);

    GradedRingPresentation out;
    out.grading_group = grading.group;
    if (did_pad)
        out.warnings.push_back("padded to three points with trivial coefficients");

    std::vector<std::string> labels = coxdetail::column_labels(blocks, rays.free_rays.size());
    std::vector<std::size_t> block_start;
    std::size_t c = 0;
    for (const auto& b : blocks) {
        block_start.push_back(c);
        for (std::size_t j = 0; j < b.vertices.size(); ++j, ++c) {
            CoxVariable v;
            v.name = labels[c];
            v.exponent = b.exponents[j];
            v.degree = grading.generator_degrees[c];
            out.variables.push_back(v);
        }
    }
    for (std::size_t k = 0; k < rays.free_rays.size(); ++k, ++c) {
        CoxVariable v;
        v.name = labels[c];
        v.exponent = 1;
        v.degree = grading.generator_degrees[c];
        out.variables.push_back(v);
    }

    // Relation scalars from the point configuration, after moving the first
    // three block points to 0, 1, infinity.
    std::size_t s = blocks.size();
    std::vector<P1Point> lambda(s);
    lambda[0] = P1Point::rational(Rat(0));
    lambda[1] = P1Point::rational(Rat(1));
    lambda[2] = P1Point::infinity();
    if (s > 3) {
        coxdetail::Mobius m =
            coxdetail::mobius_to_standard(blocks[0].point, blocks[1].point, blocks[2].point);
        for (std::size_t i = 3; i < s; ++i) lambda[i] = coxdetail::mobius_eval(m, blocks[i].point);
    }

    std::vector<std::optional<Rat>> scale(s);
    scale[0] = Rat(1);
    scale[1] = Rat(-1);
    for (std::size_t i = 0; i + 2 < s; ++i) {
        auto w = coxdetail::window_coefficients(lambda[i], lambda[i + 1], lambda[i + 2]);
        Trinomial t;
        t.index = i;
        if (w && scale[i] && scale[i + 1]) {
            const auto& [alpha, beta, gamma] = *w;
            scale[i + 2] = gamma * (*scale[i + 1]) / beta;
            t.theta = CoxScalar(alpha * (*scale[i + 1]) / (beta * (*scale[i])));
        } else {
            t.theta = CoxScalar("theta" + std::to_string(i));
        }
        auto block_of = [&](std::size_t b) {
            MonomialBlock mb;
            for (std::size_t j = 0; j < blocks[b].vertices.size(); ++j) {
                mb.vars.push_back(block_start[b] + j);
                mb.exps.push_back(blocks[b].exponents[j]);
            }
            return mb;
        };
        t.block0 = block_of(i);
        t.block1 = block_of(i + 1);
        t.block2 = block_of(i + 2);
        out.relations.push_back(t);
    }

    // A trailing block consisting of a single exponent-one variable is cut
    // out with the last relation; repeat while relations remain.
    std::size_t live_blocks = s;
    while (!out.relations.empty()) {
        const coxdetail::BlockLayout& last = blocks[live_blocks - 1];
        if (last.vertices.size() != 1 || last.exponents[0] != 1) break;
        std::size_t var_index = block_start[live_blocks - 1];
        out.warnings.push_back("eliminated linear variable " + out.variables[var_index].name +
                               " with relation g" + std::to_string(out.relations.back().index));
        out.relations.pop_back();
        out.variables.erase(out.variables.begin() +
                            static_cast<std::ptrdiff_t>(var_index));
        --live_blocks;
    }

    long expected = padded.rank() + 1 + out.grading_group.free_rank;
    long actual = static_cast<long>(out.variables.size()) -
                  static_cast<long>(out.relations.size());
    if (actual != expected)
        out.warnings.push_back("presentation has " + std::to_string(actual) +
                               " = variables - relations, expected " + std::to_string(expected));
    return out;
}

// Scalar-independent fingerprint of a presentation: grading group, relation
// count, and the multiset of block exponent vectors.
inline std::string cox_signature(const GradedRingPresentation& p) {
    std::vector<std::string> blocks;
    for (const auto& rel : p.relations) {
        for (const MonomialBlock* b : {&rel.block0, &rel.block1, &rel.block2}) {
            std::vector<Int> e = b->exps;
            std::sort(e.begin(), e.end());
            std::string s;
            for (const auto& x : e) s += x.get_str() + ",";
            blocks.push_back(s);
        }
    }
    std::sort(blocks.begin(), blocks.end());
    std::string out = p.grading_group.to_string() + " | vars=" +
                      std::to_string(p.variables.size()) + " rels=" +
                      std::to_string(p.relations.size()) + " |";
    for (const auto& b : blocks) out += " [" + b + "]";
    return out;
}

}  // namespace pdcox
