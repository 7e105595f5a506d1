// Command-line front end: blocks, hyperplanes, a/A tables and the verification suites.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rouquier/errors.hpp"
#include "rouquier/report.hpp"
#include "rouquier/verify.hpp"

namespace {

using rouquier::ValidationError;
using rouquier::report::Job;
using rouquier::report::Json;

struct Raw {
    std::string family = "group";
    int de = 0, e = 0, d = 0, r = 0, p = 1;
    std::optional<int> n;
    std::string m, a, b, c;
    std::string format = "json";
    std::string out;
};

template <class T>
std::vector<T> parse_list(const std::string& text, const std::string& field) {
    std::vector<T> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(static_cast<T>(v));
        } catch (const std::exception&) {
            throw ValidationError("--" + field + ": '" + item + "' is not an integer");
        }
    }
    if (out.empty()) throw ValidationError("--" + field + ": expected a comma-separated list of integers");
    return out;
}

// Builds a job from the raw flags; `need_weights` false lets hyperplanes run
// without a specialization.
Job make_job(const Raw& raw, bool need_weights) {
    Job job;
    job.family = rouquier::report::parse_family(raw.family);
    job.de = raw.de;
    job.e = raw.e;
    job.d = raw.d;
    job.r = raw.r;
    job.p = raw.p;
    auto need = [](bool present, const char* field) {
        if (!present) throw ValidationError(std::string("--") + field + ": required for this family");
    };
    switch (job.family) {
        case rouquier::report::Family::Group:
            need(raw.de != 0, "de");
            need(raw.e != 0, "e");
            need(raw.r != 0, "r");
            break;
        case rouquier::report::Family::ArikiKoike:
            need(raw.d != 0, "d");
            need(raw.r != 0, "r");
            break;
        case rouquier::report::Family::Rank2:
            need(raw.d != 0, "d");
            break;
    }
    if (job.family == rouquier::report::Family::Rank2) {
        job.has_weights = !raw.a.empty() || !raw.b.empty() || !raw.c.empty();
        if (job.has_weights || need_weights) {
            need(!raw.a.empty(), "a");
            need(!raw.b.empty(), "b");
            need(!raw.c.empty(), "c");
            job.a = parse_list<std::int64_t>(raw.a, "a");
            job.b = parse_list<std::int64_t>(raw.b, "b");
            job.c = parse_list<std::int64_t>(raw.c, "c");
            job.has_weights = true;
        }
    } else {
        job.has_weights = !raw.m.empty() || raw.n.has_value();
        if (job.has_weights || need_weights) {
            need(!raw.m.empty(), "m");
            need(raw.n.has_value(), "n");
            job.m = parse_list<int>(raw.m, "m");
            job.n = *raw.n;
            job.has_weights = true;
        }
    }
    job.validate();
    return job;
}

void add_job_options(CLI::App* cmd, Raw& raw) {
    cmd->add_option("--family", raw.family, "group (G(de,e,r)), ak (G(d,1,r)) or rank2 (G(2pd,2p,2))")
        ->capture_default_str();
    cmd->add_option("--de", raw.de, "group family: de");
    cmd->add_option("--e", raw.e, "group family: e (divides de)");
    cmd->add_option("--r", raw.r, "rank");
    cmd->add_option("--d", raw.d, "ak/rank2 families: d");
    cmd->add_option("--p", raw.p, "rank2 family: p (1 gives G(2d,2,2))")->capture_default_str();
    cmd->add_option("--m", raw.m, "weights m_0,...,m_{d-1}");
    cmd->add_option("--n", raw.n, "weight n of the last generator");
    cmd->add_option("--a", raw.a, "rank2 weights a0,a1");
    cmd->add_option("--b", raw.b, "rank2 weights b0,b1");
    cmd->add_option("--c", raw.c, "rank2 weights c0,...,c_{d-1}");
}

void add_output_options(CLI::App* cmd, Raw& raw) {
    cmd->add_option("--format", raw.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    cmd->add_option("--out", raw.out, "write the report to PATH instead of stdout");
}

void emit(const Json& j, const Raw& raw) {
    const std::string body =
        raw.format == "text" ? rouquier::report::render_text(j) : rouquier::report::serialize(j);
    if (raw.out.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream f(raw.out, std::ios::binary);
    if (!f) throw ValidationError("--out: cannot open '" + raw.out + "' for writing");
    f << body;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Rouquier blocks of cyclotomic Hecke algebras of G(de,e,r)"};
    app.require_subcommand(1);
    Raw raw;

    auto* hyp = app.add_subcommand("hyperplanes", "essential hyperplanes, and those containing a specialization");
    auto* blk = app.add_subcommand("blocks", "Rouquier blocks of a specialization");
    auto* aa = app.add_subcommand("aa", "blocks with a, A and a+A per character (rank-two family)");
    for (auto* cmd : {hyp, blk, aa}) {
        add_job_options(cmd, raw);
        add_output_options(cmd, raw);
    }

    auto* ver = app.add_subcommand("verify", "run the property suites");
    std::string suite = "all";
    rouquier::verify::Bounds bounds;
    ver->add_option("--suite", suite, "all or one of: combinatorics, cyclotomic, schur, ariki_koike, rank2, descent")
        ->capture_default_str();
    ver->add_option("--max-d", bounds.max_d, "largest d")->capture_default_str();
    ver->add_option("--max-r", bounds.max_r, "largest rank")->capture_default_str();
    ver->add_option("--seed", bounds.seed, "random seed")->capture_default_str();
    add_output_options(ver, raw);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (ver->parsed()) {
            const auto results = rouquier::verify::run_suite(suite, bounds);
            const auto j = rouquier::verify::to_json(results, bounds, suite);
            emit(j, raw);
            std::cerr << j["passed"].get<std::int64_t>() << "/" << j["total"].get<std::int64_t>()
                      << " checks passed\n";
            return j["passed"] == j["total"] ? 0 : 1;
        }
        if (hyp->parsed()) emit(rouquier::report::hyperplanes(make_job(raw, false)), raw);
        if (blk->parsed()) emit(rouquier::report::blocks(make_job(raw, true)), raw);
        if (aa->parsed()) emit(rouquier::report::aa(make_job(raw, true)), raw);
        return 0;
    } catch (const ValidationError& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 1;
    }
}
