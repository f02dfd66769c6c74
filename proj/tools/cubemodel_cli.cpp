// Command-line interface: ball generation, symbolic distance and median
// queries, hyperplane listings, contact graph builds, disk-graph distances,
// geodesic rewriting, verification suites, and deterministic file exports.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error, 3 resource
// limit.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cubemodel/ball.hpp"
#include "cubemodel/contact_graph.hpp"
#include "cubemodel/core.hpp"
#include "cubemodel/disk_graph.hpp"
#include "cubemodel/factor_system.hpp"
#include "cubemodel/hyperplane.hpp"
#include "cubemodel/json_io.hpp"
#include "cubemodel/verify.hpp"

using namespace cubemodel;
using nlohmann::json;

namespace {

struct CommonOptions {
    int radius = 3;
    std::uint64_t seed = 0;
    std::size_t cap = 2'000'000;
    std::string format = "text";
    std::string out;
};

BallOptions ball_options(const CommonOptions& c) {
    BallOptions o;
    o.vertex_cap = c.cap;
    if (const char* env = std::getenv("CUBEMODEL_CAP")) o.vertex_cap = std::stoull(env);
    return o;
}

void add_common(CLI::App* cmd, CommonOptions& c, bool with_radius = true) {
    if (with_radius) cmd->add_option("--radius", c.radius, "ball radius")->check(CLI::Range(0, 6));
    cmd->add_option("--seed", c.seed, "sampling seed");
    cmd->add_option("--cap", c.cap, "vertex cap for ball materialization");
    cmd->add_option("--format", c.format, "output format: json, dot or text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    cmd->add_option("--out", c.out, "output file, - for stdout");
}

std::string json_dump(const json& j) { return j.dump(2) + "\n"; }

int run_ball(const CommonOptions& c, const std::string& center_lit) {
    Ball b = make_ball(parse_vertex(center_lit), c.radius, ball_options(c));
    if (c.format == "dot") {
        write_output(c.out, ball_to_dot(b));
    } else if (c.format == "json") {
        write_output(c.out, json_dump(ball_to_json(b)));
    } else {
        std::ostringstream os;
        os << "ball center=" << to_string(b.center) << " radius=" << b.radius << "\n"
           << "vertices " << b.vertices.size() << ", edges " << b.edges.size() << ", squares "
           << b.squares.size() << ", cubes " << b.cubes.size() << "\n";
        write_output(c.out, os.str());
    }
    return 0;
}

int run_dist(const CommonOptions& c, const std::string& from, const std::string& to) {
    VertexId u = parse_vertex(from), v = parse_vertex(to);
    std::size_t d = metric_distance(u, v);
    if (c.format == "json") {
        json j{{"value", d}, {"separating", json::array()}};
        for (const HyperplaneId& h : separating_set(u, v)) j["separating"].push_back(hyperplane_to_json(h));
        write_output(c.out, json_dump(j));
    } else {
        write_output(c.out, std::to_string(d) + "\n");
    }
    return 0;
}

int run_median(const CommonOptions& c, const std::string& a, const std::string& b, const std::string& d) {
    VertexId m = median(parse_vertex(a), parse_vertex(b), parse_vertex(d));
    if (c.format == "json")
        write_output(c.out, json_dump(vertex_to_json(m)));
    else
        write_output(c.out, to_string(m) + "\n");
    return 0;
}

int run_hyperplanes(const CommonOptions& c) {
    Ball b = make_ball(basepoint(), c.radius, ball_options(c));
    auto hs = hyperplanes_of_ball(b);
    if (c.format == "json") {
        json arr = json::array();
        for (const auto& h : hs) arr.push_back(hyperplane_to_json(h));
        write_output(c.out, json_dump(arr));
    } else {
        std::ostringstream os;
        for (const auto& h : hs) os << to_string(h) << "\n";
        write_output(c.out, os.str());
    }
    return 0;
}

int run_contact(const CommonOptions& c, bool factored, const std::string& from, const std::string& to,
                int search_radius, long long delta_samples) {
    if (!from.empty() || !to.empty()) {
        if (from.empty() || to.empty())
            throw std::invalid_argument("contact distance queries need both --from and --to");
        DistanceResult r = contact_distance(parse_hyperplane(from), parse_hyperplane(to), search_radius);
        if (c.format == "json")
            write_output(c.out, json_dump(distance_to_json(r)));
        else
            write_output(c.out, std::to_string(r.value) + (r.exact() ? " exact" : " upper_bound") + "\n");
        return 0;
    }
    Ball b = make_ball(basepoint(), c.radius, ball_options(c));
    auto hs = hyperplanes_of_ball(b);
    ContactGraph g;
    HyperclosureResult closure;
    if (factored) {
        closure = hyperclosure_ball(b);
        g = build_factored_contact_graph(hs, closure.members);
    } else {
        g = build_contact_graph(hs);
    }
    if (c.format == "dot") {
        write_output(c.out, contact_graph_to_dot(g));
    } else if (c.format == "json") {
        json j = contact_graph_to_json(g);
        if (factored) j["closure"] = closure_report_to_json(closure);
        if (delta_samples >= 0)
            j["fourPointDelta"] = four_point_delta(g, static_cast<std::size_t>(delta_samples), c.seed);
        write_output(c.out, json_dump(j));
    } else {
        std::ostringstream os;
        os << (factored ? "factored " : "") << "contact graph: " << g.hyperplanes.size() << " hyperplanes, "
           << g.cone_reps.size() << " cones, " << g.edges.size() << " edges\n";
        if (factored) os << "closure: " << closure.members.size() << " members, stable after "
                         << closure.rounds - 1 << " gate rounds\n";
        if (delta_samples >= 0)
            os << "four-point delta: "
               << four_point_delta(g, static_cast<std::size_t>(delta_samples), c.seed) << "\n";
        write_output(c.out, os.str());
    }
    return 0;
}

int run_disk_dist(const CommonOptions& c, const std::string& from, const std::string& to, int search_radius) {
    DistanceResult r = nd_distance(parse_meridian(from), parse_meridian(to), search_radius);
    if (c.format == "json")
        write_output(c.out, json_dump(distance_to_json(r)));
    else
        write_output(c.out, std::to_string(r.value) + (r.exact() ? " exact" : " upper_bound") + "\n");
    return 0;
}

int run_rewrite(const CommonOptions& c, const std::string& in_path) {
    json input;
    if (in_path.empty() || in_path == "-") {
        std::cin >> input;
    } else {
        std::ifstream f(in_path);
        if (!f) throw std::runtime_error("cannot open input file: " + in_path);
        f >> input;
    }
    std::vector<HyperplaneId> path;
    for (const auto& e : input) path.push_back(hyperplane_from_json(e));
    auto out = rewrite_geodesic(path);
    json arr = json::array();
    for (const auto& h : out) arr.push_back(hyperplane_to_json(h));
    write_output(c.out, json_dump(arr));
    return 0;
}

int run_verify(const CommonOptions& c, const std::string& suite) {
    std::vector<std::string> todo;
    if (suite == "all")
        todo = suite_names();
    else
        todo.push_back(suite);
    std::ostringstream os;
    bool ok = true;
    for (const std::string& name : todo) {
        VerificationReport rep = run_suite(name, c.radius, c.seed, ball_options(c));
        ok = ok && rep.all_pass();
        os << render_report(rep);
    }
    os << (ok ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
    write_output(c.out, os.str());
    return ok ? 0 : 1;
}

int run_export(const CommonOptions& c, const std::string& what) {
    if (what == "ball") return run_ball(c, "\xce\xb5;0,0,0");
    if (what == "contact") return run_contact(c, false, "", "", 2, -1);
    if (what == "fcontact") return run_contact(c, true, "", "", 2, -1);
    if (what == "meridians") {
        Ball b = make_ball(basepoint(), c.radius, ball_options(c));
        MeridianGraph g = build_meridian_graph(b);
        if (c.format == "dot")
            write_output(c.out, meridian_graph_to_dot(g));
        else
            write_output(c.out, json_dump(meridian_graph_to_json(g)));
        return 0;
    }
    throw std::invalid_argument("--what must be ball, contact, fcontact or meridians");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic cube-complex model of the genus-2 handlebody group"};
    app.require_subcommand(1);

    CommonOptions copt;
    std::string center = "\xce\xb5;0,0,0";
    std::string from, to, a_lit, b_lit, c_lit;
    std::string suite = "all";
    std::string in_path;
    std::string what = "ball";
    int search_radius = 2;
    long long delta_samples = -1;

    CLI::App* ball_cmd = app.add_subcommand("ball", "materialize a ball and export it");
    add_common(ball_cmd, copt);
    ball_cmd->add_option("--center", center, "center vertex literal");

    CLI::App* dist_cmd = app.add_subcommand("dist", "hyperplane-count distance between vertices");
    add_common(dist_cmd, copt, false);
    dist_cmd->add_option("--from", from, "vertex literal")->required();
    dist_cmd->add_option("--to", to, "vertex literal")->required();

    CLI::App* median_cmd = app.add_subcommand("median", "median vertex of a triple");
    add_common(median_cmd, copt, false);
    median_cmd->add_option("--a", a_lit, "vertex literal")->required();
    median_cmd->add_option("--b", b_lit, "vertex literal")->required();
    median_cmd->add_option("--c", c_lit, "vertex literal")->required();

    CLI::App* hyp_cmd = app.add_subcommand("hyperplanes", "hyperplanes meeting a ball");
    add_common(hyp_cmd, copt);

    CLI::App* contact_cmd = app.add_subcommand("contact", "contact graph of a ball's hyperplanes");
    add_common(contact_cmd, copt);
    contact_cmd->add_option("--from", from, "hyperplane literal for a distance query");
    contact_cmd->add_option("--to", to, "hyperplane literal for a distance query");
    contact_cmd->add_option("--search-radius", search_radius, "hull fattening bound");
    contact_cmd->add_option("--delta-samples", delta_samples, "four-point quadruple samples, 0 = exhaustive");

    CLI::App* fcontact_cmd = app.add_subcommand("fcontact", "factored contact graph of a ball");
    add_common(fcontact_cmd, copt);
    fcontact_cmd->add_option("--delta-samples", delta_samples, "four-point quadruple samples, 0 = exhaustive");

    CLI::App* disk_cmd = app.add_subcommand("disk-dist", "non-separating disk graph distance");
    add_common(disk_cmd, copt, false);
    disk_cmd->add_option("--from", from, "meridian literal word@slot")->required();
    disk_cmd->add_option("--to", to, "meridian literal word@slot")->required();
    disk_cmd->add_option("--search-radius", search_radius, "hull fattening bound");

    CLI::App* rewrite_cmd = app.add_subcommand("rewrite", "rewrite a contact path into the iota image");
    add_common(rewrite_cmd, copt, false);
    rewrite_cmd->add_option("--in", in_path, "JSON array of hyperplanes, - for stdin");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    add_common(verify_cmd, copt);
    verify_cmd->add_option("suite", suite, "suite name or all");

    CLI::App* export_cmd = app.add_subcommand("export", "deterministic artifact export");
    add_common(export_cmd, copt);
    export_cmd->add_option("--what", what, "ball, contact, fcontact or meridians");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(ball_cmd)) return run_ball(copt, center);
        if (app.got_subcommand(dist_cmd)) return run_dist(copt, from, to);
        if (app.got_subcommand(median_cmd)) return run_median(copt, a_lit, b_lit, c_lit);
        if (app.got_subcommand(hyp_cmd)) return run_hyperplanes(copt);
        if (app.got_subcommand(contact_cmd))
            return run_contact(copt, false, from, to, search_radius, delta_samples);
        if (app.got_subcommand(fcontact_cmd)) return run_contact(copt, true, "", "", 2, delta_samples);
        if (app.got_subcommand(disk_cmd)) return run_disk_dist(copt, from, to, search_radius);
        if (app.got_subcommand(rewrite_cmd)) return run_rewrite(copt, in_path);
        if (app.got_subcommand(verify_cmd)) return run_verify(copt, suite);
        if (app.got_subcommand(export_cmd)) return run_export(copt, what);
    } catch (const ResourceLimitError& e) {
        std::cerr << "resource limit: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
