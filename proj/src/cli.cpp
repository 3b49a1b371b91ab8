#include "bfh/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "bfh/format.hpp"
#include "bfh/tempered.hpp"

namespace bfh::cli {

namespace {

std::string read_input(const std::string& path, std::istream& in) {
    if (path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        return buf.str();
    }
    std::ifstream file(path);
    if (!file) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return buf.str();
}

std::string format_level(const LevelPair& l) {
    return "(" + format_component(l.s) + "," + format_component(l.r) + ")";
}

std::string format_strength(const Strength& s) {
    return "(" + format_component(s.p) + "," + format_component(s.n) + ")";
}

void append_block(Report& report, const std::string& title, const std::string& block) {
    Report::Section section{title, {}};
    std::istringstream in(block);
    std::string line;
    while (std::getline(in, line)) section.lines.push_back(line);
    report.sections.push_back(std::move(section));
}

std::string join(const VertexSet& s) {
    std::string out;
    for (const auto& v : s) {
        if (!out.empty()) out += " ";
        out += v;
    }
    return out;
}

const char* kind_name(PartitionKind k) {
    switch (k) {
        case PartitionKind::partition: return "partition";
        case PartitionKind::covering: return "covering";
        default: return "invalid";
    }
}

/// DEV-1 fires when the first fundamental level differs from the height
/// pair: presentations of such structures sometimes print a height whose
/// negative component occurs nowhere in the matrix.
void note_height_deviation(Report& report, const BFHypergraph& h,
                           const FundamentalSequence& fs) {
    if (fs.levels.empty()) return;
    auto ht = h.height();
    if (fs.levels.front().s == ht.p && fs.levels.front().r == ht.n) return;
    report.add_deviation(
        "DEV-1", "height (" + format_component(ht.p) + "," + format_component(ht.n) +
                     ") differs from the first fundamental level " +
                     format_level(fs.levels.front()) +
                     "; the negative components of levels track the values admitted at "
                     "each level, not the global depth");
}

int cmd_info(const std::string& file, std::istream& in, std::ostream& out) {
    auto doc = parse_document(read_input(file, in));
    Report report;
    Report::Section s{"structure", {}};
    if (doc.kind == MatrixDocument::Kind::crisp) {
        auto h = doc.to_crisp();
        s.lines.push_back("kind: crisp");
        s.lines.push_back("vertices: " + std::to_string(h.vertex_count()));
        s.lines.push_back("edges: " + std::to_string(h.edge_count()));
        s.lines.push_back("rank: " + std::to_string(h.rank()));
        s.lines.push_back("anti-rank: " + std::to_string(h.anti_rank()));
        s.lines.push_back(std::string("uniform: ") + (h.is_uniform() ? "true" : "false"));
        s.lines.push_back(std::string("simple: ") + (h.is_simple() ? "true" : "false"));
        s.lines.push_back(std::string("covers: ") + (h.covers() ? "true" : "false"));
        report.sections.push_back(std::move(s));
        out << emit(report);
        return 0;
    }
    auto h = doc.to_hypergraph();
    auto sh = h.support_hypergraph();
    auto ht = h.height();
    s.lines.push_back("kind: bipolar");
    s.lines.push_back("vertices: " + std::to_string(h.vertex_count()));
    s.lines.push_back("edges: " + std::to_string(h.edge_count()));
    s.lines.push_back("height: (" + format_component(ht.p) + "," +
                      format_component(ht.n) + ")");
    s.lines.push_back("support rank: " + std::to_string(sh.rank()));
    s.lines.push_back("support anti-rank: " + std::to_string(sh.anti_rank()));
    auto flag = [&](const char* name, bool value) {
        s.lines.push_back(std::string(name) + ": " + (value ? "true" : "false"));
    };
    flag("elementary", h.is_elementary());
    flag("simple", h.is_simple());
    flag("support-simple", h.is_support_simple());
    flag("strongly-support-simple", h.is_strongly_support_simple());
    flag("sectionally-elementary", h.is_sectionally_elementary());
    flag("ordered", h.is_ordered());
    flag("simply-ordered", h.is_simply_ordered());
    flag("bipolar-fuzzy-graph", h.as_bipolar_fuzzy_graph());
    report.sections.push_back(std::move(s));
    out << emit(report);
    return 0;
}

int cmd_cut(const std::string& file, double alpha, double beta, std::string semantics,
            std::istream& in, std::ostream& out) {
    auto doc = parse_document(read_input(file, in));
    auto h = doc.to_hypergraph();
    if (semantics.empty()) semantics = doc.is_partition() ? "and" : "or";
    CrispHypergraph cut = (semantics == "and") ? h.partition_cut(alpha, beta)
                                               : h.level_hypergraph(alpha, beta);
    out << emit(cut);
    return 0;
}

int cmd_fseq(const std::string& file, std::istream& in, std::ostream& out) {
    auto doc = parse_document(read_input(file, in));
    auto h = doc.to_hypergraph();
    auto fs = h.fundamental_sequence();
    Report report;
    Report::Section s{"fundamental sequence", {}};
    std::string levels;
    for (const auto& l : fs.levels) {
        if (!levels.empty()) levels += " ";
        levels += format_level(l);
    }
    s.lines.push_back("levels: " + (levels.empty() ? "(none)" : levels));
    report.sections.push_back(std::move(s));
    for (std::size_t i = 0; i < fs.cores.size(); ++i)
        append_block(report, "core " + std::to_string(i + 1) + " at " +
                                 format_level(fs.levels[i]),
                     emit(fs.cores[i]));
    note_height_deviation(report, h, fs);
    out << emit(report);
    return 0;
}

int cmd_dual(const std::string& file, std::istream& in, std::ostream& out) {
    auto doc = parse_document(read_input(file, in));
    if (doc.kind == MatrixDocument::Kind::crisp)
        out << emit(doc.to_crisp().dual());
    else
        out << emit(doc.to_hypergraph().dual());
    return 0;
}

int cmd_strength(const std::string& file, std::istream& in, std::ostream& out) {
    auto doc = parse_document(read_input(file, in));
    auto h = doc.to_hypergraph();
    std::vector<std::size_t> order(h.edge_count());
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return strength_ranks_before(h.strength(a), h.edge(a).name, h.strength(b),
                                     h.edge(b).name);
    });
    Report report;
    Report::Section s{"edge strengths", {}};
    for (std::size_t k = 0; k < order.size(); ++k) {
        auto j = order[k];
        s.lines.push_back(std::to_string(k + 1) + "  " + h.edge(j).name + "  " +
                          format_strength(h.strength(j)));
    }
    report.sections.push_back(std::move(s));
    out << emit(report);
    return 0;
}

BipolarFuzzySet weights_from_document(const MatrixDocument& doc,
                                      const std::vector<VertexId>& universe) {
    if (doc.column_labels.size() != 1)
        throw std::invalid_argument("weights document must have exactly one column");
    std::vector<BipolarValue> values(universe.size());
    for (std::size_t i = 0; i < universe.size(); ++i) {
        auto it = std::find(doc.row_labels.begin(), doc.row_labels.end(), universe[i]);
        if (it == doc.row_labels.end())
            throw std::invalid_argument("weights document is missing vertex '" +
                                        universe[i] + "'");
        values[i] = doc.cells[static_cast<std::size_t>(it - doc.row_labels.begin())][0];
    }
    return BipolarFuzzySet(universe, values);
}

int cmd_temper(const std::string& weights_file, const std::string& base_file,
               std::istream& in, std::ostream& out) {
    auto base_doc = parse_document(read_input(base_file, in));
    auto base = base_doc.to_crisp();
    auto weights_doc = parse_document(read_input(weights_file, in));
    TemperingWitness w{base, weights_from_document(weights_doc, base.vertices())};
    out << emit(temper(w));
    return 0;
}

int cmd_is_tempered(const std::string& file, std::istream& in, std::ostream& out,
                    std::ostream& err) {
    auto doc = parse_document(read_input(file, in));
    auto h = doc.to_hypergraph();
    std::optional<TemperingWitness> w;
    try {
        w = is_tempered(h);
    } catch (const std::logic_error& e) {
        Report report;
        report.add_deviation("DEV-2",
                             "the membership values cannot be reproduced by any vertex "
                             "weighting of the support family; the printed matrix is "
                             "inconsistent with the tempering construction");
        out << "tempered: error\n" << emit(report);
        err << "error: " << e.what() << "\n";
        return 1;
    }
    if (!w) {
        out << "tempered: false\n";
        return 0;
    }
    out << "tempered: true\n";
    Report report;
    ClassMatrix weights;
    weights.vertices = w->weights.universe();
    std::vector<BipolarValue> column;
    for (std::size_t i = 0; i < weights.vertices.size(); ++i)
        column.push_back(w->weights.value_at(i));
    weights.classes.emplace_back("A", column);
    append_block(report, "weights", emit(weights));
    append_block(report, "base", emit(w->base));
    out << emit(report);
    return 0;
}

int cmd_gen(const std::string& family, std::size_t n, std::ostream& out) {
    BFHypergraph h =
        (family == "prop314") ? gen_unbounded_simple(n) : gen_elementary_simple_full(n);
    out << emit(h);
    return 0;
}

void append_classification(Report& report, const BipolarPartition& p) {
    Report::Section s{"partition check", {}};
    s.lines.push_back("classes: " + std::to_string(p.matrix.classes.size()));
    s.lines.push_back("vertices: " + std::to_string(p.matrix.vertices.size()));
    s.lines.push_back("tolerance: " + format_component(p.tolerance));
    s.lines.push_back(std::string("kind: ") + kind_name(p.kind));
    if (!p.uncovered.empty()) {
        std::string line = "uncovered:";
        for (const auto& v : p.uncovered) line += " " + v;
        s.lines.push_back(line);
    }
    for (const auto& r : p.residuals) {
        auto signed_str = [](double v) {
            return (v >= 0 ? "+" : "") + format_component(v);
        };
        s.lines.push_back("violation " + r.vertex + ": positive residual " +
                          signed_str(r.positive_residual) + ", negative residual " +
                          signed_str(r.negative_residual));
    }
    report.sections.push_back(std::move(s));
    if (!p.residuals.empty()) {
        std::string verts;
        for (const auto& r : p.residuals) {
            if (!verts.empty()) verts += " ";
            verts += r.vertex;
        }
        report.add_deviation("DEV-3", "membership sums violate the partition conditions "
                                      "at: " + verts);
    }
}

int cmd_partition(const std::string& file, double tolerance, std::istream& in,
                  std::ostream& out) {
    auto doc = parse_document(read_input(file, in));
    auto p = classify(doc.to_class_matrix(), tolerance);
    Report report;
    append_classification(report, p);
    out << emit(report);
    return 0;
}

int cmd_cluster(const std::string& file, double alpha, double beta, std::size_t rounds,
                double tolerance, std::istream& in, std::ostream& out) {
    auto doc = parse_document(read_input(file, in));
    auto p = classify(doc.to_class_matrix(), tolerance);
    Report report;

    auto append_ranking = [&](const BipolarPartition& part, const std::string& title) {
        auto ranking = class_strengths(part, alpha, beta);
        Report::Section s{title, {}};
        for (const auto& c : ranking.ranked)
            s.lines.push_back(std::to_string(c.rank) + "  " + c.class_name + "  " +
                              format_strength(c.strength) + "  members: " +
                              join(c.cut_members));
        for (const auto& name : ranking.empty_classes)
            s.lines.push_back("-  " + name + "  (empty cut, excluded)");
        report.sections.push_back(std::move(s));
        return ranking;
    };

    auto first = append_ranking(p, "ranking at (" + format_component(alpha) + "," +
                                       format_component(beta) + ")");
    if (first.ranked.size() >= 2)
        report.add_deviation("DEV-4",
                             "class strengths are the computed membership maxima over "
                             "the cut members; ranking follows the computed values");

    auto steps = decompose(p, alpha, beta, rounds);
    for (std::size_t k = 0; k < steps.size(); ++k) {
        Report::Section s{"round " + std::to_string(k + 1), {}};
        s.lines.push_back("removes: " + steps[k].removed.class_name + "  members: " +
                          join(steps[k].removed.cut_members));
        std::string remaining;
        for (const auto& v : steps[k].remaining.matrix.vertices) {
            if (!remaining.empty()) remaining += " ";
            remaining += v;
        }
        s.lines.push_back("remaining vertices: " + (remaining.empty() ? "(none)" : remaining));
        report.sections.push_back(std::move(s));
    }
    out << emit(report);
    return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
    CLI::App app{"bipolar fuzzy hypergraph toolkit"};
    app.require_subcommand(1);

    std::string file = "-";
    double alpha = 0.0, beta = 0.0, tolerance = 1e-9;
    std::string semantics;
    std::size_t rounds = 1, n = 1;
    std::string family;
    std::string weights_file, base_file;

    auto* info = app.add_subcommand("info", "structure summary and predicates");
    info->add_option("file", file)->required();

    auto* cut = app.add_subcommand("cut", "threshold cut to a crisp hypergraph");
    cut->add_option("--alpha", alpha)->required()->check(CLI::Range(0.0, 1.0));
    cut->add_option("--beta", beta)->required()->check(CLI::Range(-1.0, 0.0));
    cut->add_option("--semantics", semantics)->check(CLI::IsMember({"or", "and"}));
    cut->add_option("file", file)->required();

    auto* fseq = app.add_subcommand("fseq", "fundamental sequence and cores");
    fseq->add_option("file", file)->required();

    auto* dual = app.add_subcommand("dual", "transpose the incidence matrix");
    dual->add_option("file", file)->required();

    auto* strength = app.add_subcommand("strength", "edge strengths, ranked");
    strength->add_option("file", file)->required();

    auto* temper_cmd = app.add_subcommand("temper", "build a tempered hypergraph");
    temper_cmd->add_option("--weights", weights_file)->required();
    temper_cmd->add_option("--base", base_file)->required();

    auto* is_temp = app.add_subcommand("is-tempered", "find a tempering witness");
    is_temp->add_option("file", file)->required();

    auto* gen = app.add_subcommand("gen", "generator families");
    gen->add_option("--family", family)
        ->required()
        ->check(CLI::IsMember({"prop314", "full"}));
    gen->add_option("--n", n)->required()->check(CLI::PositiveNumber);

    auto* partition = app.add_subcommand("partition", "validate a bipolar fuzzy partition");
    partition->add_flag("--check", "run the partition validation");
    partition->add_option("--tolerance", tolerance)->check(CLI::NonNegativeNumber);
    partition->add_option("file", file)->required();

    auto* cluster = app.add_subcommand("cluster", "strength-based decomposition");
    cluster->add_option("--alpha", alpha)->required()->check(CLI::Range(0.0, 1.0));
    cluster->add_option("--beta", beta)->required()->check(CLI::Range(-1.0, 0.0));
    cluster->add_option("--rounds", rounds)->check(CLI::PositiveNumber);
    cluster->add_option("--tolerance", tolerance)->check(CLI::NonNegativeNumber);
    cluster->add_option("file", file)->required();

    std::vector<std::string> argv_storage;
    argv_storage.push_back("bfh");
    for (const auto& a : args) argv_storage.push_back(a);
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*info) return cmd_info(file, in, out);
        if (*cut) return cmd_cut(file, alpha, beta, semantics, in, out);
        if (*fseq) return cmd_fseq(file, in, out);
        if (*dual) return cmd_dual(file, in, out);
        if (*strength) return cmd_strength(file, in, out);
        if (*temper_cmd) return cmd_temper(weights_file, base_file, in, out);
        if (*is_temp) return cmd_is_tempered(file, in, out, err);
        if (*gen) return cmd_gen(family, n, out);
        if (*partition) return cmd_partition(file, tolerance, in, out);
        if (*cluster) return cmd_cluster(file, alpha, beta, rounds, tolerance, in, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << "usage error: no subcommand\n";
    return 2;
}

}  // namespace bfh::cli
