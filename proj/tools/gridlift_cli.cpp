#include "gridlift/corpus.hpp"
#include "gridlift/pipeline.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

using namespace gridlift;

namespace {

enum Exit { ok = 0, certificate_failed = 1, usage = 2, parse_failed = 3, invalid_input = 4 };

std::string read_input(const std::string& path)
{
    if (path.empty() || path == "-")
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path);
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text)
{
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << text;
}

int report_exit(const std::vector<Certificate>& report, bool print)
{
    if (print)
        std::cerr << write_report(report);
    if (!all_pass(report)) {
        if (!print)
            for (const auto& c : report)
                if (!c.pass)
                    std::cerr << c.line() << "\n";
        return certificate_failed;
    }
    return ok;
}

struct BenchRow {
    std::string name;
    std::size_t n = 0;
    std::size_t tau = 0;
    std::size_t width_bits = 0;
    std::size_t height_bits = 0;
    std::size_t max_h_bits = 0;
    std::size_t total_h_bits = 0;
    bool certified = false;
    double seconds = 0;
    std::string error;
};

BenchRow bench_one(const corpus::Instance& inst)
{
    BenchRow row;
    row.name = inst.name;
    row.n = inst.graph.n();
    auto start = std::chrono::steady_clock::now();
    try {
        TriangulationFile doc;
        doc.graph = inst.graph;
        if (inst.name.rfind("grid-", 0) == 0) {
            std::size_t p = 0, q = 0, l = 0;
            std::sscanf(inst.name.c_str(), "grid-%zux%zu-l%zu", &p, &q, &l);
            doc.grid = std::array<std::size_t, 3>{p, q, l};
        }
        auto lifted = lift_document(doc);
        const auto& g = lifted.doc.graph;
        auto seq = make_sequence(g, *lifted.doc.sequence);
        row.tau = tau_profile(g, seq).tau;
        ExactInt wmax = 0, hmax = 0;
        for (VertexId v : g.vertices()) {
            wmax = std::max(wmax, ExactInt(abs(g.coord(v).x)));
            hmax = std::max(hmax, g.coord(v).y);
        }
        row.width_bits = bit_length(wmax);
        row.height_bits = bit_length(hmax);
        row.max_h_bits = lifted.lift.max_height_bits;
        row.total_h_bits = lifted.lift.total_height_bits;
        row.certified = all_pass(lifted.report);
    } catch (const std::exception& e) {
        row.error = e.what();
    }
    row.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return row;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Integer convex realizations of plane triangulations"};
    app.require_subcommand(1);

    std::string input, output;
    bool audit = false;
    std::uint64_t seed = 1;

    auto* gen = app.add_subcommand("gen-grid", "Random triangulation of the p x q grid");
    std::size_t p = 0, q = 0, l = 0;
    gen->add_option("p", p)->required();
    gen->add_option("q", q)->required();
    gen->add_option("l", l, "edge locality bound")->required();
    gen->add_option("--seed", seed);
    gen->add_option("-o,--output", output);

    auto* shed = app.add_subcommand("shed", "Attach a shedding sequence");
    std::optional<VertexId> su, sv;
    bool shed_grid = false;
    shed->add_option("input", input);
    shed->add_option("--u", su, "a_1");
    shed->add_option("--v", sv, "a_2");
    shed->add_flag("--grid", shed_grid, "three-stage grid shedding (grid documents)");
    shed->add_option("-o,--output", output);

    auto* embed = app.add_subcommand("embed", "Integer sequentially convex drawing");
    embed->add_option("input", input);
    embed->add_option("-o,--output", output);
    embed->add_flag("--audit", audit, "certificate report on stderr");

    auto* lift = app.add_subcommand("lift", "Exact convex lift");
    std::string off_path, obj_path;
    lift->add_option("input", input);
    lift->add_option("-o,--output", output);
    lift->add_option("--off", off_path, "write the mesh as OFF");
    lift->add_option("--obj", obj_path, "write the mesh as OBJ");
    lift->add_flag("--audit", audit, "certificate report on stderr");

    auto* diam = app.add_subcommand("diameter", "Shedding diameter");
    bool exact = false, grid_mode = false;
    std::size_t max_n = 9;
    diam->add_option("input", input);
    auto* exact_flag = diam->add_flag("--exact", exact, "exhaustive minimum over all sequences");
    diam->add_flag("--grid", grid_mode, "three-stage grid shedding")->excludes(exact_flag);
    diam->add_option("--max-n", max_n, "size limit for --exact");

    auto* ver = app.add_subcommand("verify", "Check every certificate that applies");
    std::string original_path;
    ver->add_option("input", input);
    ver->add_option("--original", original_path, "input triangulation for the face-isomorphism check");

    auto* bench = app.add_subcommand("bench", "Bit sizes and tau over a generated corpus");
    std::vector<std::size_t> sizes{20, 50, 100, 200};
    std::size_t grids = 12, threads = 1;
    bool no_time = false;
    bench->add_option("--sizes", sizes, "stacked triangulation sizes");
    bench->add_option("--grids", grids, "largest grid side");
    bench->add_option("--seed", seed);
    bench->add_option("--threads", threads);
    bench->add_flag("--no-time", no_time, "omit the timing column");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try {
        if (*gen) {
            auto grid = gen_grid_triangulation(p, q, l, seed);
            TriangulationFile doc;
            doc.graph = grid.base;
            doc.grid = std::array<std::size_t, 3>{p, q, l};
            write_output(output, write_document(doc));
            return ok;
        }
        if (*bench) {
            std::vector<corpus::Instance> insts;
            for (std::size_t k = 0; k < sizes.size(); ++k)
                insts.push_back({"stacked-" + std::to_string(sizes[k]),
                                 corpus::random_stacked(sizes[k], seed + k)});
            for (std::size_t s = 4; s <= grids; s += 4)
                for (std::size_t ll : {2, 3})
                    insts.push_back({"grid-" + std::to_string(s) + "x" + std::to_string(s) + "-l" +
                                         std::to_string(ll),
                                     gen_grid_triangulation(s, s, ll, seed + s).base});
            std::vector<BenchRow> rows(insts.size());
            std::atomic<std::size_t> next{0};
            std::vector<std::thread> pool;
            for (std::size_t t = 0; t < std::max<std::size_t>(1, threads); ++t)
                pool.emplace_back([&] {
                    for (std::size_t k = next++; k < insts.size(); k = next++)
                        rows[k] = bench_one(insts[k]);
                });
            for (auto& th : pool)
                th.join();
            std::cout << "instance n tau x_bits y_bits max_h_bits total_h_bits certified"
                      << (no_time ? "" : " seconds") << "\n";
            bool all_ok = true;
            for (const auto& r : rows) {
                if (!r.error.empty()) {
                    std::cout << r.name << " " << r.n << " error: " << r.error << "\n";
                    all_ok = false;
                    continue;
                }
                all_ok = all_ok && r.certified;
                std::cout << r.name << " " << r.n << " " << r.tau << " " << r.width_bits << " "
                          << r.height_bits << " " << r.max_h_bits << " " << r.total_h_bits << " "
                          << (r.certified ? "yes" : "no");
                if (!no_time) {
                    std::ostringstream s;
                    s.precision(3);
                    s << std::fixed << r.seconds;
                    std::cout << " " << s.str();
                }
                std::cout << "\n";
            }
            return all_ok ? ok : certificate_failed;
        }

        TriangulationFile doc;
        try {
            doc = parse_document(read_input(input));
        } catch (const ParseError& e) {
            std::cerr << "parse error: " << e.what() << "\n";
            return parse_failed;
        }

        if (*shed) {
            write_output(output, write_document(shed_document(doc, su, sv, shed_grid)));
            return ok;
        }
        if (*embed) {
            auto res = embed_document(doc);
            write_output(output, write_document(res.doc));
            return report_exit(res.report, audit);
        }
        if (*lift) {
            auto res = lift_document(doc);
            write_output(output, write_document(res.doc));
            Mesh mesh = mesh_of(res.lift);
            if (!off_path.empty())
                write_output(off_path, export_off(mesh));
            if (!obj_path.empty())
                write_output(obj_path, export_obj(mesh));
            return report_exit(res.report, audit);
        }
        if (*diam) {
            require_valid(doc.graph);
            if (exact) {
                auto [tau, witness] = min_tau_exhaustive(doc.graph, max_n);
                std::cout << tau << "\nsequence";
                for (VertexId v : witness.order)
                    std::cout << " " << v;
                std::cout << "\n";
            } else if (grid_mode) {
                if (!doc.grid)
                    throw Error("--grid needs a 'grid' line");
                auto grid = make_grid_triangulation(doc.graph, (*doc.grid)[0], (*doc.grid)[1], (*doc.grid)[2]);
                auto plan = grid_shedding(grid);
                auto prof = tau_profile(grid.base, plan.sequence);
                std::cout << prof.tau << "\n";
                std::cout << "antichains " << plan.antichains.size() << "\n";
                std::cout << "tau_bound " << plan.tau_bound() << "\n";
                std::cout << "antichain_bound " << plan.antichain_bound() << "\n";
                std::cout << "stage_steps " << plan.stage_steps[0] << " " << plan.stage_steps[1]
                          << " " << plan.stage_steps[2] << "\n";
                std::cout << "stage_batches " << plan.stage_batches[0] << " " << plan.stage_batches[1]
                          << " " << plan.stage_batches[2] << "\n";
                if (prof.tau > plan.tau_bound() || plan.antichains.size() > plan.antichain_bound())
                    return certificate_failed;
            } else {
                auto seq = sequence_of(doc);
                std::cout << tau_profile(doc.graph, seq).tau << "\n";
            }
            return ok;
        }
        if (*ver) {
            std::optional<TriangulationFile> original;
            if (!original_path.empty()) {
                try {
                    original = parse_document(read_input(original_path));
                } catch (const ParseError& e) {
                    std::cerr << "parse error in original: " << e.what() << "\n";
                    return parse_failed;
                }
            }
            auto report = verify_document(doc, original);
            std::cout << write_report(report);
            return all_pass(report) ? ok : certificate_failed;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return invalid_input;
    }
    return usage;
}
