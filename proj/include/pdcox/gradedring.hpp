#pragma once

// Graded ring presentations: variables with degrees in a finitely generated
// abelian group, trinomial relations with scalar coefficients that are either
// exact rationals or symbolic parameters.

#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "pdcox/abelian.hpp"
#include "pdcox/errors.hpp"
#include "pdcox/rational.hpp"

namespace pdcox {

// Scalar coefficient of a trinomial: exact rational when the configuration of
// points is rational, otherwise a named symbolic parameter.
class CoxScalar {
public:
    CoxScalar() : value_(Rat(1)) {}
    explicit CoxScalar(Rat v) : value_(std::move(v)) {}
    explicit CoxScalar(std::string symbol) : value_(std::move(symbol)) {}

    bool is_rational() const { return std::holds_alternative<Rat>(value_); }
    bool is_symbolic() const { return !is_rational(); }

    const Rat& rational() const { return std::get<Rat>(value_); }
    const std::string& symbol() const { return std::get<std::string>(value_); }

    std::string to_string() const {
        if (is_rational()) return pdcox::to_string(rational());
        return symbol();
    }

    friend bool operator==(const CoxScalar& a, const CoxScalar& b) {
        return a.value_ == b.value_;
    }

private:
    std::variant<Rat, std::string> value_;
};

struct CoxVariable {
    std::string name;
    Int exponent = 1;       // exponent this variable carries in its block
    IntVec degree;          // degree in the grading group (torsion coords first)
};

// One monomial block T_{i,1}^{l_1} ... T_{i,k}^{l_k}: indices into the
// variable list plus the matching exponents.
struct MonomialBlock {
    std::vector<std::size_t> vars;
    std::vector<Int> exps;

    std::string to_string(const std::vector<CoxVariable>& variables) const {
        if (vars.empty()) return "1";
        std::ostringstream out;
        for (std::size_t k = 0; k < vars.size(); ++k) {
            if (k) out << "*";
            out << variables[vars[k]].name;
            if (exps[k] != 1) out << "^" << exps[k].get_str();
        }
        return out.str();
    }
};

// Relation g = theta * B0 + B1 + B2 between consecutive monomial blocks.
struct Trinomial {
    std::size_t index = 0;
    CoxScalar theta;
    MonomialBlock block0, block1, block2;

    std::string to_string(const std::vector<CoxVariable>& variables) const {
        std::ostringstream out;
        const std::string t = theta.to_string();
        if (t != "1") out << "(" << t << ")*";
        out << block0.to_string(variables) << " + " << block1.to_string(variables)
            << " + " << block2.to_string(variables);
        return out.str();
    }
};

struct GradedRingPresentation {
    FGAbelianGroup grading_group;
    std::vector<CoxVariable> variables;
    std::vector<Trinomial> relations;
    std::vector<std::string> warnings;

    std::size_t degree_length() const {
        return static_cast<std::size_t>(grading_group.invariant_factors.size()) +
               static_cast<std::size_t>(grading_group.free_rank);
    }
};

// A trinomial hypersurface (or intersection of them) is smooth at the origin
// of its ambient affine space iff every relation has a block consisting of a
// single variable with exponent one, and these linear variables can be chosen
// distinct across relations.  With no relations the ring is a polynomial ring.
inline bool smooth_at_origin(const GradedRingPresentation& p) {
    if (p.relations.empty()) return true;
    // Collect for each relation the set of candidate linear variables.
    std::vector<std::vector<std::size_t>> candidates;
    for (const auto& rel : p.relations) {
        std::vector<std::size_t> cand;
        for (const MonomialBlock* b : {&rel.block0, &rel.block1, &rel.block2}) {
            if (b->vars.size() == 1 && b->exps[0] == 1) cand.push_back(b->vars[0]);
        }
        if (cand.empty()) return false;
        candidates.push_back(cand);
    }
    // Greedy matching is enough at these sizes; fall back to backtracking.
    std::vector<std::size_t> chosen;
    std::vector<bool> used(p.variables.size(), false);
    auto match = [&](auto&& self, std::size_t i) -> bool {
        if (i == candidates.size()) return true;
        for (std::size_t v : candidates[i]) {
            if (used[v]) continue;
            used[v] = true;
            if (self(self, i + 1)) return true;
            used[v] = false;
        }
        return false;
    };
    return match(match, 0);
}

inline std::string degree_to_string(const GradedRingPresentation& p, const IntVec& deg) {
    std::ostringstream out;
    out << "(";
    for (std::size_t k = 0; k < deg.size(); ++k) {
        if (k) out << ", ";
        out << deg[k].get_str();
        if (k < p.grading_group.invariant_factors.size())
            out << " mod " << p.grading_group.invariant_factors[k].get_str();
    }
    out << ")";
    return out.str();
}

inline std::string to_string(const GradedRingPresentation& p) {
    std::ostringstream out;
    out << "grading group: " << p.grading_group.to_string() << "\n";
    out << "variables:\n";
    for (const auto& v : p.variables)
        out << "  " << v.name << "  deg " << degree_to_string(p, v.degree) << "\n";
    if (p.relations.empty()) {
        out << "relations: none (polynomial ring)\n";
    } else {
        out << "relations:\n";
        for (const auto& rel : p.relations)
            out << "  g" << rel.index << " = " << rel.to_string(p.variables) << "\n";
    }
    for (const auto& w : p.warnings) out << "note: " << w << "\n";
    return out.str();
}

}  // namespace pdcox
