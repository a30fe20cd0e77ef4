// Command line front end: check / degree / cox / pi1 / iterate / scfc / all
// on polyhedral divisor files, p1 on log pair files, group on presentation
// files, gen to emit instance corpora.

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "pdcox/corpus.hpp"
#include "pdcox/io.hpp"
#include "pdcox/iteration.hpp"
#include "pdcox/pipeline.hpp"

namespace {

using pdcox::Json;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw pdcox::InputError("cannot open file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

int exit_class(const std::exception& e) {
    if (dynamic_cast<const pdcox::GuardError*>(&e)) return 3;
    if (dynamic_cast<const pdcox::InputError*>(&e)) return 2;
    if (dynamic_cast<const pdcox::MathError*>(&e)) return 1;
    if (dynamic_cast<const pdcox::Error*>(&e)) return 1;
    return 2;
}

struct Options {
    bool json = false;
    long max_cosets = 200000;
    std::string batch_dir;
};

std::string triple_text(const pdcox::KltCertificate& cert) {
    std::string s = "(";
    for (std::size_t i = 0; i < cert.triple.size(); ++i)
        s += (i ? ", " : "") + cert.triple[i].get_str();
    return s + ")";
}

// --- per-command result builders (JSON plus a human rendering) ---------------

Json run_check(const pdcox::PolyhedralDivisor& d, const Options&) {
    d.require_proper();
    pdcox::KltCertificate cert = pdcox::klt_certificate(d);
    Json j;
    j["proper"] = true;
    j["klt"] = cert.is_klt;
    Json triple = Json::array();
    for (const auto& x : cert.triple) triple.push_back(x.get_str());
    j["triple"] = triple;
    j["family"] = cert.family ? Json(pdcox::family_name(*cert.family)) : Json(nullptr);
    j["certificate"] = pdcox::to_json(cert);
    return j;
}

Json run_degree(const pdcox::PolyhedralDivisor& d, const Options&) {
    pdcox::SigmaPolyhedron deg = d.degree_polyhedron();
    Json j;
    Json verts = Json::array();
    for (const auto& v : deg.vertices()) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(pdcox::to_string(x));
        verts.push_back(row);
    }
    j["vertices"] = verts;
    Json rays = Json::array();
    for (const auto& r : deg.recession_cone().rays()) {
        Json row = Json::array();
        for (const auto& x : r) row.push_back(x.get_str());
        rays.push_back(row);
    }
    j["rays"] = rays;
    j["proper"] = d.is_proper();
    return j;
}

Json run_cox(const pdcox::PolyhedralDivisor& d, const Options&) {
    Json j;
    j["class_group"] = pdcox::to_json(pdcox::class_group_of(d));
    j["cox"] = pdcox::to_json(pdcox::platonic_cox(d));
    return j;
}

Json run_pi1(const pdcox::PolyhedralDivisor& d, const Options& opt) {
    return pdcox::to_json(pdcox::pi1_report(d, static_cast<std::size_t>(opt.max_cosets)));
}

Json run_iterate(const pdcox::PolyhedralDivisor& d, const Options& opt) {
    return pdcox::to_json(pdcox::divisor_iteration(d, opt.max_cosets));
}

Json run_scfc(const pdcox::PolyhedralDivisor& d, const Options& opt) {
    return pdcox::to_json(pdcox::scfc(d, opt.max_cosets));
}

Json run_all(const pdcox::PolyhedralDivisor& d, const Options& opt) {
    return pdcox::full_pipeline(d, opt.max_cosets);
}

void print_human(const std::string& command, const Json& j, std::ostream& out) {
    if (command == "check") {
        out << "proper: yes\n";
        out << "klt: " << (j["klt"].get<bool>() ? "yes" : "no") << " ("
            << j["certificate"]["reason"].get<std::string>() << ")\n";
        out << "triple: " << j["triple"].dump();
        if (!j["family"].is_null()) out << "  family: " << j["family"].get<std::string>();
        out << "\n";
        return;
    }
    // structured reports are easiest to read as indented JSON
    out << j.dump(2) << "\n";
}

using DivisorRunner = Json (*)(const pdcox::PolyhedralDivisor&, const Options&);

int run_divisor_command(const std::string& command, DivisorRunner runner,
                        const std::string& file, const Options& opt) {
    if (!opt.batch_dir.empty()) {
        namespace fs = std::filesystem;
        std::vector<std::string> files;
        for (const auto& entry : fs::directory_iterator(opt.batch_dir))
            if (entry.is_regular_file() && entry.path().extension() == ".pdd")
                files.push_back(entry.path().string());
        std::sort(files.begin(), files.end());

        auto run_one = [&](const std::string& f) {
            try {
                pdcox::PolyhedralDivisor d = pdcox::parse_divisor(read_input(f));
                return std::make_pair(true, runner(d, opt));
            } catch (const std::exception& e) {
                Json err;
                err["error"] = std::string(e.what());
                err["exit_class"] = exit_class(e);
                return std::make_pair(false, err);
            }
        };

        // bounded windows keep peak memory independent of the corpus size;
        // results are collected in file order either way
        std::size_t window = std::thread::hardware_concurrency();
        if (window == 0) window = 4;
        if (window > 8) window = 8;
        std::vector<std::pair<bool, Json>> results(files.size());
        for (std::size_t begin = 0; begin < files.size(); begin += window) {
            std::size_t end = std::min(begin + window, files.size());
            std::vector<std::future<std::pair<bool, Json>>> futures;
            for (std::size_t i = begin; i < end; ++i)
                futures.push_back(std::async(std::launch::async, run_one, files[i]));
            for (std::size_t i = begin; i < end; ++i) results[i] = futures[i - begin].get();
        }

        Json out;
        bool all_ok = true;
        for (std::size_t i = 0; i < files.size(); ++i) {
            out[std::filesystem::path(files[i]).filename().string()] = results[i].second;
            all_ok = all_ok && results[i].first;
        }
        std::cout << out.dump(2) << "\n";
        return all_ok ? 0 : 1;
    }

    pdcox::PolyhedralDivisor d = pdcox::parse_divisor(read_input(file));
    Json j = runner(d, opt);
    if (opt.json)
        std::cout << j.dump(2) << "\n";
    else
        print_human(command, j, std::cout);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of rational complexity-one torus singularities"};
    app.require_subcommand(1);

    Options opt;
    std::string file;

    struct Sub {
        const char* name;
        const char* help;
        DivisorRunner runner;
    };
    const std::vector<Sub> subs = {
        {"check", "properness and the klt certificate", run_check},
        {"degree", "degree polyhedron of the divisor", run_degree},
        {"cox", "class group and Cox ring presentation", run_cox},
        {"pi1", "fundamental group of the regular locus", run_pi1},
        {"iterate", "iteration of Cox rings", run_iterate},
        {"scfc", "simply connected factorial canonical cover", run_scfc},
        {"all", "full pipeline report", run_all},
    };
    std::vector<std::pair<CLI::App*, DivisorRunner>> divisor_cmds;
    for (const auto& s : subs) {
        CLI::App* c = app.add_subcommand(s.name, s.help);
        c->add_option("file", file, "divisor file (or - for stdin)");
        c->add_flag("--json", opt.json, "machine readable JSON output");
        c->add_option("--max-cosets", opt.max_cosets, "coset enumeration limit");
        c->add_option("--batch", opt.batch_dir, "process every .pdd file in a directory");
        divisor_cmds.emplace_back(c, s.runner);
    }

    CLI::App* p1 = app.add_subcommand("p1", "class group and Cox ring of a log pair on the line");
    p1->add_option("file", file, "log pair file (or - for stdin)");

    CLI::App* group = app.add_subcommand("group", "operations on a finite presentation");
    std::string action;
    group->add_option("action", action, "order | abelian | iterate")
        ->check(CLI::IsMember({"order", "abelian", "iterate"}));
    group->add_option("file", file, "presentation file (or - for stdin)");
    group->add_option("--max-cosets", opt.max_cosets, "coset enumeration limit");

    CLI::App* gen = app.add_subcommand("gen", "write corpus instance files");
    std::uint64_t seed = 1;
    std::size_t count = 0;
    std::string out_dir = ".";
    bool curated = false;
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--count", count, "number of random instances");
    gen->add_flag("--curated", curated, "also write the curated corpus");
    gen->add_option("--out", out_dir, "output directory");

    CLI11_PARSE(app, argc, argv);

    try {
        for (const auto& [cmd, runner] : divisor_cmds)
            if (cmd->parsed()) {
                if (file.empty() && opt.batch_dir.empty())
                    throw pdcox::InputError("no input file given");
                return run_divisor_command(cmd->get_name(), runner, file, opt);
            }

        if (p1->parsed()) {
            if (file.empty()) throw pdcox::InputError("no input file given");
            pdcox::P1LogPair pair = pdcox::parse_p1pair(read_input(file));
            pdcox::P1LogPair standard = pdcox::standard_approximation(pair);
            Json j;
            Json pts = Json::array();
            for (const auto& [p, c] : standard.points) {
                Json e;
                e["position"] = p.to_string();
                e["coefficient"] = pdcox::to_string(c);
                pts.push_back(e);
            }
            j["standard_model"] = pts;
            j["class_group"] = pdcox::to_json(pdcox::p1_class_group(pair));
            j["cox"] = pdcox::to_json(pdcox::p1_cox(pair));
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (group->parsed()) {
            if (file.empty()) throw pdcox::InputError("no input file given");
            pdcox::Presentation p = pdcox::parse_presentation(read_input(file));
            Json j;
            if (action == "abelian") {
                j["abelianization"] = pdcox::to_json(p.abelianization());
            } else {
                pdcox::CosetTable t =
                    pdcox::todd_coxeter(p, static_cast<std::size_t>(opt.max_cosets));
                j["order"] = pdcox::Int(t.order()).get_str();
                if (action == "iterate") {
                    std::vector<pdcox::Perm> gens;
                    for (std::size_t g = 0; g < p.generators.size(); ++g)
                        gens.push_back(t.generator_permutation(g));
                    j["iteration"] =
                        pdcox::to_json(pdcox::regular_group_iteration(t.table.size(), gens));
                }
            }
            std::cout << j.dump(2) << "\n";
            return 0;
        }

        if (gen->parsed()) {
            namespace fs = std::filesystem;
            fs::create_directories(out_dir);
            std::vector<pdcox::CorpusEntry> entries;
            if (curated)
                for (auto& e : pdcox::curated_corpus()) entries.push_back(std::move(e));
            if (count > 0)
                for (auto& e : pdcox::random_corpus(seed, count)) entries.push_back(std::move(e));
            for (const auto& e : entries) {
                std::ofstream out(fs::path(out_dir) / (e.name + ".pdd"));
                out << pdcox::serialize_divisor(e.divisor);
            }
            std::cout << "wrote " << entries.size() << " instance files to " << out_dir << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_class(e);
    }
    return 0;
}
