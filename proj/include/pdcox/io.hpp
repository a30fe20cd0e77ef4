#pragma once

// Reading and writing the input documents (divisors, log pairs, group
// presentations) and the JSON reports.  The input format is a small
// TOML-style subset: [section] and [[list-section]] headers followed by
// key = value lines, with single-line arrays.

#include <cctype>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "pdcox/abelian.hpp"
#include "pdcox/branch.hpp"
#include "pdcox/coxring.hpp"
#include "pdcox/errors.hpp"
#include "pdcox/fundgrp.hpp"
#include "pdcox/gradedring.hpp"
#include "pdcox/iteration.hpp"
#include "pdcox/logpair.hpp"
#include "pdcox/pdiv.hpp"
#include "pdcox/presentation.hpp"
#include "pdcox/rational.hpp"

namespace pdcox {

using Json = nlohmann::ordered_json;

// --- document model ----------------------------------------------------------

struct DocValue {
    int line = 0;
    bool is_array = false;
    std::string scalar;            // leaf payload (quotes already stripped)
    std::vector<DocValue> array;   // array payload
};

struct DocSection {
    std::string name;
    bool is_list_item = false;
    int line = 0;
    std::vector<std::pair<std::string, DocValue>> entries;

    const DocValue* find(const std::string& key) const {
        for (const auto& [k, v] : entries)
            if (k == key) return &v;
        return nullptr;
    }
    const DocValue& get(const std::string& key) const {
        const DocValue* v = find(key);
        if (!v) throw SchemaError("section [" + name + "] is missing key '" + key + "'", line);
        return *v;
    }
};

namespace iodetail {

inline std::string strip_comment(const std::string& line) {
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (line[i] == '"') quoted = !quoted;
        if (line[i] == '#' && !quoted) return line.substr(0, i);
    }
    return line;
}

inline std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t\r\n");
    return s.substr(a, b - a + 1);
}

inline DocValue parse_value(const std::string& s, std::size_t& pos, int line) {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos >= s.size()) throw SchemaError("missing value", line);
    DocValue v;
    v.line = line;
    if (s[pos] == '[') {
        v.is_array = true;
        ++pos;
        for (;;) {
            while (pos < s.size() && (std::isspace(static_cast<unsigned char>(s[pos])) || s[pos] == ','))
                ++pos;
            if (pos >= s.size()) throw SchemaError("unterminated array", line);
            if (s[pos] == ']') {
                ++pos;
                return v;
            }
            v.array.push_back(parse_value(s, pos, line));
        }
    }
    if (s[pos] == '"') {
        std::size_t end = s.find('"', pos + 1);
        if (end == std::string::npos) throw SchemaError("unterminated string", line);
        v.scalar = s.substr(pos + 1, end - pos - 1);
        pos = end + 1;
        return v;
    }
    std::size_t start = pos;
    while (pos < s.size() && !std::isspace(static_cast<unsigned char>(s[pos])) && s[pos] != ',' &&
           s[pos] != ']')
        ++pos;
    v.scalar = s.substr(start, pos - start);
    if (v.scalar.empty()) throw SchemaError("empty value", line);
    return v;
}

}  // namespace iodetail

inline std::vector<DocSection> parse_document(const std::string& text) {
    std::vector<DocSection> sections;
    std::size_t pos = 0;
    int lineno = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string raw = text.substr(pos, nl == std::string::npos ? std::string::npos : nl - pos);
        pos = nl == std::string::npos ? text.size() + 1 : nl + 1;
        ++lineno;
        std::string line = iodetail::trim(iodetail::strip_comment(raw));
        if (line.empty()) continue;
        if (line.front() == '[') {
            bool list_item = line.size() > 1 && line[1] == '[';
            std::string close = list_item ? "]]" : "]";
            std::size_t end = line.find(close);
            if (end == std::string::npos || end + close.size() != line.size())
                throw SchemaError("malformed section header '" + line + "'", lineno);
            DocSection sec;
            sec.name = iodetail::trim(line.substr(list_item ? 2 : 1, end - (list_item ? 2 : 1)));
            sec.is_list_item = list_item;
            sec.line = lineno;
            if (sec.name.empty()) throw SchemaError("empty section name", lineno);
            sections.push_back(sec);
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw SchemaError("expected 'key = value', got '" + line + "'", lineno);
        if (sections.empty()) throw SchemaError("key outside of any section", lineno);
        std::string key = iodetail::trim(line.substr(0, eq));
        if (key.empty()) throw SchemaError("empty key", lineno);
        std::string rest = iodetail::trim(line.substr(eq + 1));
        std::size_t vpos = 0;
        DocValue val = iodetail::parse_value(rest, vpos, lineno);
        if (iodetail::trim(rest.substr(vpos)) != "")
            throw SchemaError("trailing characters after value", lineno);
        sections.back().entries.emplace_back(key, val);
    }
    return sections;
}

namespace iodetail {

inline Int as_int(const DocValue& v) {
    if (v.is_array) throw SchemaError("expected a number, found an array", v.line);
    Rat q = parse_rational(v.scalar, v.line);
    if (denom(q) != 1) throw SchemaError("expected an integer, found " + v.scalar, v.line);
    return numer(q);
}

inline Rat as_rat(const DocValue& v) {
    if (v.is_array) throw SchemaError("expected a number, found an array", v.line);
    return parse_rational(v.scalar, v.line);
}

inline IntVec as_int_vector(const DocValue& v, std::size_t len) {
    if (!v.is_array) throw SchemaError("expected a vector", v.line);
    if (v.array.size() != len)
        throw SchemaError("vector has " + std::to_string(v.array.size()) + " entries, expected " +
                              std::to_string(len),
                          v.line);
    IntVec out;
    for (const auto& e : v.array) out.push_back(as_int(e));
    return out;
}

inline RatVec as_rat_vector(const DocValue& v, std::size_t len) {
    if (!v.is_array) throw SchemaError("expected a vector", v.line);
    if (v.array.size() != len)
        throw SchemaError("vector has " + std::to_string(v.array.size()) + " entries, expected " +
                              std::to_string(len),
                          v.line);
    RatVec out;
    for (const auto& e : v.array) out.push_back(as_rat(e));
    return out;
}

}  // namespace iodetail

// --- divisor documents -------------------------------------------------------

inline PolyhedralDivisor parse_divisor(const std::string& text) {
    std::vector<DocSection> sections = parse_document(text);

    long rank = -1;
    std::vector<IntVec> tail_rays;
    bool saw_tail = false;
    struct RawMark {
        P1Point point;
        std::vector<RatVec> vertices;
        std::vector<IntVec> rays;
        bool has_rays = false;
    };
    std::vector<RawMark> raw_marks;

    for (const auto& sec : sections) {
        if (sec.name == "lattice" && !sec.is_list_item) {
            rank = static_cast<long>(iodetail::as_int(sec.get("rank")).get_si());
            if (rank < 1) throw SchemaError("rank must be at least 1", sec.line);
        } else if (sec.name == "tail_cone" && !sec.is_list_item) {
            if (rank < 0) throw SchemaError("[lattice] must come before [tail_cone]", sec.line);
            const DocValue& rays = sec.get("rays");
            if (!rays.is_array) throw SchemaError("rays must be an array", rays.line);
            for (const auto& r : rays.array)
                tail_rays.push_back(iodetail::as_int_vector(r, static_cast<std::size_t>(rank)));
            saw_tail = true;
        } else if (sec.name == "mark" && sec.is_list_item) {
            if (rank < 0) throw SchemaError("[lattice] must come before [[mark]]", sec.line);
            RawMark m;
            const DocValue& pt = sec.get("point");
            if (pt.is_array) throw SchemaError("point must be a scalar", pt.line);
            m.point = P1Point::parse(pt.scalar, pt.line);
            const DocValue& verts = sec.get("vertices");
            if (!verts.is_array) throw SchemaError("vertices must be an array", verts.line);
            for (const auto& v : verts.array)
                m.vertices.push_back(iodetail::as_rat_vector(v, static_cast<std::size_t>(rank)));
            if (m.vertices.empty())
                throw SchemaError("mark needs at least one vertex", sec.line);
            if (const DocValue* rays = sec.find("rays")) {
                if (!rays->is_array) throw SchemaError("rays must be an array", rays->line);
                m.has_rays = true;
                for (const auto& r : rays->array)
                    m.rays.push_back(iodetail::as_int_vector(r, static_cast<std::size_t>(rank)));
            }
            raw_marks.push_back(std::move(m));
        } else {
            throw SchemaError("unknown section [" + sec.name + "]", sec.line);
        }
    }

    if (rank < 0) throw SchemaError("missing [lattice] section");
    if (!saw_tail) throw SchemaError("missing [tail_cone] section");
    Cone tail = Cone::from_rays(static_cast<std::size_t>(rank), tail_rays);
    std::vector<Mark> marks;
    for (const auto& rm : raw_marks) {
        Cone rec = rm.has_rays ? Cone::from_rays(static_cast<std::size_t>(rank), rm.rays) : tail;
        marks.push_back(Mark{rm.point, SigmaPolyhedron(rm.vertices, rec)});
    }
    return PolyhedralDivisor(tail, marks);
}

inline std::string serialize_divisor(const PolyhedralDivisor& d) {
    std::string out;
    out += "[lattice]\nrank = " + std::to_string(d.rank()) + "\n\n[tail_cone]\nrays = [";
    const auto& rays = d.tail().rays();
    for (std::size_t i = 0; i < rays.size(); ++i) {
        out += i ? ", [" : "[";
        for (std::size_t k = 0; k < rays[i].size(); ++k)
            out += (k ? ", " : "") + rays[i][k].get_str();
        out += "]";
    }
    out += "]\n";
    for (const auto& m : d.marks()) {
        out += "\n[[mark]]\npoint = \"" + m.point.to_string() + "\"\nvertices = [";
        const auto& verts = m.coefficient.vertices();
        for (std::size_t i = 0; i < verts.size(); ++i) {
            out += i ? ", [" : "[";
            for (std::size_t k = 0; k < verts[i].size(); ++k)
                out += std::string(k ? ", " : "") + "\"" + to_string(verts[i][k]) + "\"";
            out += "]";
        }
        out += "]\n";
    }
    return out;
}

// --- log pair documents ------------------------------------------------------

inline P1LogPair parse_p1pair(const std::string& text) {
    std::vector<DocSection> sections = parse_document(text);
    P1LogPair pair;
    for (const auto& sec : sections) {
        if (sec.name != "point" || !sec.is_list_item)
            throw SchemaError("unknown section [" + sec.name + "]", sec.line);
        const DocValue& pos = sec.get("position");
        if (pos.is_array) throw SchemaError("position must be a scalar", pos.line);
        P1Point p = P1Point::parse(pos.scalar, pos.line);
        Rat c = iodetail::as_rat(sec.get("coefficient"));
        pair.points.emplace_back(p, c);
    }
    pair.validate();
    return pair;
}

inline std::string serialize_p1pair(const P1LogPair& pair) {
    std::string out;
    for (const auto& [p, c] : pair.points) {
        out += "[[point]]\nposition = \"" + p.to_string() + "\"\ncoefficient = \"" +
               to_string(c) + "\"\n\n";
    }
    if (!out.empty()) out.pop_back();
    return out;
}

// --- JSON reports ------------------------------------------------------------

inline Json to_json(const FGAbelianGroup& g) {
    Json j;
    j["free_rank"] = g.free_rank;
    Json factors = Json::array();
    for (const auto& d : g.invariant_factors) factors.push_back(d.get_str());
    j["invariant_factors"] = factors;
    j["name"] = g.to_string();
    return j;
}

inline Json to_json(const KltCertificate& cert) {
    Json j;
    j["klt"] = cert.is_klt;
    Json triple = Json::array();
    for (const auto& x : cert.triple) triple.push_back(x.get_str());
    j["triple"] = triple;
    switch (cert.reason) {
        case KltReason::AtMostTwoNontrivial: j["reason"] = "at most two nontrivial points"; break;
        case KltReason::PlatonicTriple: j["reason"] = "platonic triple"; break;
        case KltReason::NonPlatonicTriple: j["reason"] = "triple fails 1/a + 1/b + 1/c > 1"; break;
        case KltReason::TooManyNontrivialPoints: j["reason"] = "more than three nontrivial points"; break;
    }
    if (cert.family) j["family"] = family_name(*cert.family);
    else j["family"] = nullptr;
    Json pts = Json::array();
    for (const auto& rec : cert.nontrivial) {
        Json e;
        e["point"] = rec.point.to_string();
        e["mu"] = rec.mu.get_str();
        pts.push_back(e);
    }
    j["nontrivial_points"] = pts;
    return j;
}

inline Json to_json(const PolyhedralDivisor& d) {
    Json j;
    j["rank"] = d.rank();
    Json rays = Json::array();
    for (const auto& r : d.tail().rays()) {
        Json row = Json::array();
        for (const auto& x : r) row.push_back(x.get_str());
        rays.push_back(row);
    }
    j["tail_rays"] = rays;
    Json marks = Json::array();
    for (const auto& m : d.marks()) {
        Json e;
        e["point"] = m.point.to_string();
        Json verts = Json::array();
        for (const auto& v : m.coefficient.vertices()) {
            Json row = Json::array();
            for (const auto& x : v) row.push_back(to_string(x));
            verts.push_back(row);
        }
        e["vertices"] = verts;
        marks.push_back(e);
    }
    j["marks"] = marks;
    return j;
}

inline Json to_json(const ClassGroupData& cl) {
    Json j;
    j["group"] = to_json(cl.group);
    Json gens = Json::array();
    for (std::size_t i = 0; i < cl.labels.size(); ++i) {
        Json e;
        e["name"] = cl.labels[i];
        Json deg = Json::array();
        for (const auto& x : cl.degrees[i]) deg.push_back(x.get_str());
        e["degree"] = deg;
        gens.push_back(e);
    }
    j["generators"] = gens;
    return j;
}

inline Json to_json(const GradedRingPresentation& p) {
    Json j;
    j["grading_group"] = to_json(p.grading_group);
    Json vars = Json::array();
    for (const auto& v : p.variables) {
        Json e;
        e["name"] = v.name;
        e["exponent"] = v.exponent.get_str();
        Json deg = Json::array();
        for (const auto& x : v.degree) deg.push_back(x.get_str());
        e["degree"] = deg;
        vars.push_back(e);
    }
    j["variables"] = vars;
    Json rels = Json::array();
    for (const auto& rel : p.relations) {
        Json e;
        e["index"] = rel.index;
        e["theta"] = rel.theta.to_string();
        Json blocks = Json::array();
        for (const MonomialBlock* b : {&rel.block0, &rel.block1, &rel.block2}) {
            Json block = Json::array();
            for (std::size_t k = 0; k < b->vars.size(); ++k) {
                Json term = Json::array();
                term.push_back(p.variables[b->vars[k]].name);
                term.push_back(b->exps[k].get_str());
                block.push_back(term);
            }
            blocks.push_back(block);
        }
        e["blocks"] = blocks;
        e["text"] = rel.to_string(p.variables);
        rels.push_back(e);
    }
    j["relations"] = rels;
    j["warnings"] = p.warnings;
    return j;
}

inline Json to_json(const Presentation& p) {
    Json j;
    j["generators"] = p.generators;
    Json rels = Json::array();
    for (const auto& w : p.relators) rels.push_back(print_word(p, w));
    j["relators"] = rels;
    return j;
}

inline Json to_json(const Pi1Report& rep) {
    Json j;
    j["presentation"] = to_json(rep.presentation);
    j["abelianization"] = to_json(rep.abelianization);
    j["klt"] = rep.klt;
    j["order"] = rep.order ? Json(rep.order->get_str()) : Json(nullptr);
    j["solvable"] = rep.solvable ? Json(*rep.solvable) : Json(nullptr);
    if (rep.jordan) {
        Json e;
        e["normal_part"] = to_json(rep.jordan->normal_part);
        e["rank"] = rep.jordan->rank;
        e["index"] = rep.jordan->index.get_str();
        j["torus_image"] = e;
    } else {
        j["torus_image"] = nullptr;
    }
    return j;
}

inline Json to_json(const BranchData& b) {
    Json j;
    j["degree"] = b.degree.get_str();
    Json pts = Json::array();
    for (const auto& e : b.entries) {
        Json p;
        p["point"] = e.point.to_string();
        Json pre = Json::array();
        for (Int k = 1; k <= e.count; ++k) {
            Json q;
            q["label"] = e.point.to_string() + "_" + k.get_str();
            q["ramification"] = e.ram.get_str();
            pre.push_back(q);
        }
        p["preimages"] = pre;
        pts.push_back(p);
    }
    j["points"] = pts;
    return j;
}

inline Json to_json(const IterationReport& rep) {
    Json j;
    j["depth"] = rep.depth;
    Json chain = Json::array();
    for (const auto& g : rep.torsion_chain) chain.push_back(to_json(g));
    j["torsion_chain"] = chain;
    j["terminal_order"] = rep.terminal_order.get_str();
    j["terminal_trivial"] = rep.terminal_trivial;
    Json seq = Json::array();
    for (const auto& t : rep.triple_sequence) {
        Json row = Json::array();
        for (const auto& x : t) row.push_back(x.get_str());
        seq.push_back(row);
    }
    j["triple_sequence"] = seq;
    j["sequence_valid"] = rep.sequence_valid ? Json(*rep.sequence_valid) : Json(nullptr);
    return j;
}

inline Json to_json(const ScfcReport& rep) {
    Json j;
    j["cover_group"] = rep.cover_group_name;
    j["cover_degree"] = rep.cover_degree.get_str();
    j["branch"] = to_json(rep.branch);
    j["pulled_back_divisor"] = to_json(rep.pulled_back);
    j["cover_cox"] = to_json(rep.cover_cox);
    j["pi1_abelian"] = rep.cover_pi1_abelian;
    return j;
}

inline Json to_json(const P1ClassGroup& cl) {
    Json j;
    j["group"] = to_json(cl.group);
    Json gens = Json::array();
    for (const auto& d : cl.generator_degrees) {
        Json deg = Json::array();
        for (const auto& x : d) deg.push_back(x.get_str());
        gens.push_back(deg);
    }
    j["generator_degrees"] = gens;
    return j;
}

}  // namespace pdcox
