// Command line front end: expansion, specialization, enumeration and identity
// verification with machine-readable output.
//
//   superchar expand    --family so-even-fork --k 4 --r 2 --p 3 --format json
//   superchar tdim      --family so-odd --k 3 --p 2 --deg 6
//   superchar sdim      --family osp-even --m 3 --n 1 --p 1 --deg 6
//   superchar qdim      --n 3 --p 2
//   superchar enumerate --max-part 2 --max-length 3
//   superchar verify theorem1 --k 4 --p 3 --all-r
//
// Exit codes: 0 success / all checks pass, 1 failed verification, 2 usage error.

#include "superchar/char_series.hpp"
#include "superchar/json_io.hpp"
#include "superchar/oracle.hpp"
#include "superchar/specialize.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace superchar;

struct Options {
    std::string family;
    std::string identity;
    std::string series = "B";
    std::string klass = "all";
    std::string format = "text";
    int k = -1, m = -1, n = -1, r = -1, p = -1;
    std::optional<long> deg;
    std::optional<long> cutoff;
    bool all_r = false;
    std::optional<int> max_part, max_length, hook_m, hook_n;
    std::optional<long> max_weight, weight;
};

long env_weight_cap() {
    const char* raw = std::getenv("SUPERCHAR_MAX_WEIGHT");
    if (!raw) return -1;
    return std::strtol(raw, nullptr, 10);
}

long checked_cutoff(long value, const char* what) {
    long cap = env_weight_cap();
    if (cap >= 0 && value > cap)
        throw CLI::ValidationError(std::string(what) + " exceeds SUPERCHAR_MAX_WEIGHT=" +
                                   std::to_string(cap));
    return value;
}

int require(const Options& o, int Options::*field, const char* flag) {
    int v = o.*field;
    if (v < 0) throw CLI::ValidationError(std::string("missing required option ") + flag);
    return v;
}

long default_degree(int rank, int p) { return std::max<long>(12, static_cast<long>(rank) * p); }

// Family selector as spelled on the command line.
CharExpansion build_expansion(const Options& o, std::optional<long> degree_hint) {
    auto cut = [&](int rank, int p) {
        long w = o.cutoff ? *o.cutoff : degree_hint.value_or(default_degree(rank, p));
        return checked_cutoff(w, "cutoff");
    };
    if (o.family == "so-odd") return char_so_odd(require(o, &Options::k, "--k"), require(o, &Options::p, "--p"));
    if (o.family == "so-even-fork")
        return char_so_even_fork(require(o, &Options::k, "--k"), require(o, &Options::r, "--r"),
                                 require(o, &Options::p, "--p"));
    if (o.family == "osp1") {
        int n = require(o, &Options::n, "--n"), p = require(o, &Options::p, "--p");
        return char_osp1(n, p, cut(n, p));
    }
    if (o.family == "osp-odd") {
        int m = require(o, &Options::m, "--m"), n = require(o, &Options::n, "--n");
        int p = require(o, &Options::p, "--p");
        return char_osp_odd(m, n, p, cut(m + n, p));
    }
    if (o.family == "osp-even") {
        int m = require(o, &Options::m, "--m"), n = require(o, &Options::n, "--n");
        int p = require(o, &Options::p, "--p");
        return char_osp_even(m, n, p, cut(m + n, p));
    }
    if (o.family == "osp-even-fork-conj") {
        int m = require(o, &Options::m, "--m"), n = require(o, &Options::n, "--n");
        int r = require(o, &Options::r, "--r"), p = require(o, &Options::p, "--p");
        return char_osp_even_fork_conj(m, n, r, p, cut(m + n, p));
    }
    throw CLI::ValidationError("unknown family '" + o.family + "'");
}

void print_json(const nlohmann::json& j) { std::cout << j.dump() << "\n"; }

void print_expansion(const Options& o, const CharExpansion& e) {
    if (o.format == "json") {
        print_json(to_json(e));
        return;
    }
    std::cout << "family=" << family_name(e.family);
    switch (e.family) {
        case Family::SoOddRect:
        case Family::SoEvenFork: std::cout << " k=" << e.k; break;
        case Family::Osp1Rect: std::cout << " n=" << e.n; break;
        default: std::cout << " m=" << e.m << " n=" << e.n; break;
    }
    if (e.r >= 0) std::cout << " r=" << e.r;
    std::cout << " p=" << e.p << " x_exp=" << to_string(e.x_exp) << " y_exp=" << to_string(e.y_exp)
              << " cutoff=" << e.cutoff << " terms=" << e.terms.size();
    if (e.conjectural) std::cout << " conjectural";
    std::cout << "\n";
    for (const Term& t : e.terms) std::cout << t.partition.to_string() << " " << t.coeff << "\n";
}

void print_series(const Options& o, const TruncatedSeries& s) {
    if (o.format == "json") {
        print_json(to_json(s));
        return;
    }
    std::cout << "variable=" << s.variable() << " trunc=" << s.trunc() << "\n"
              << s.to_string() << "\n";
}

void print_report_text(const VerificationReport& r) {
    std::cout << (r.passed ? "PASS" : "FAIL") << " " << r.identity << " " << r.params;
    if (!r.passed) std::cout << " -- " << r.first_mismatch;
    if (!r.note.empty()) std::cout << " [" << r.note << "]";
    std::cout << "\n";
}

int run_expand(const Options& o) {
    print_expansion(o, build_expansion(o, std::nullopt));
    return 0;
}

int run_series(const Options& o, bool super) {
    CharExpansion e = build_expansion(o, o.deg);
    // complete families pad with zeros up to the default degree
    long degree = o.deg ? *o.deg : (e.complete ? std::max<long>(12, e.cutoff) : e.cutoff);
    degree = checked_cutoff(degree, "degree");
    print_series(o, super ? t_superdimension(e, degree) : t_dimension(e, degree));
    return 0;
}

int run_qdim(const Options& o) {
    int n = require(o, &Options::n, "--n"), p = require(o, &Options::p, "--p");
    long degree = o.deg ? checked_cutoff(*o.deg, "degree") : -1;
    print_series(o, qdim_so_odd(n, p, degree));
    return 0;
}

int run_enumerate(const Options& o) {
    EnumConstraints c;
    c.max_part = o.max_part;
    c.max_length = o.max_length;
    if (o.hook_m || o.hook_n) {
        if (!o.hook_m || !o.hook_n)
            throw CLI::ValidationError("--hook-m and --hook-n must be given together");
        c.hook = {*o.hook_m, *o.hook_n};
    }
    if (o.klass == "B")
        c.part_class = EnumConstraints::Class::B;
    else if (o.klass == "Br") {
        c.part_class = EnumConstraints::Class::Br;
        c.strip_length = require(o, &Options::r, "--r");
    } else if (o.klass != "all")
        throw CLI::ValidationError("--class must be one of all, B, Br");
    if (o.max_weight) c.max_weight = checked_cutoff(*o.max_weight, "max weight");
    if (o.weight) c.exact_weight = checked_cutoff(*o.weight, "weight");

    auto partitions = enumerate_all(c);
    if (o.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& lambda : partitions) j.push_back(to_json(lambda));
        print_json(nlohmann::json{{"count", partitions.size()}, {"partitions", j}});
    } else {
        for (const auto& lambda : partitions) std::cout << lambda.to_string() << "\n";
    }
    return 0;
}

int run_verify(const Options& o) {
    std::vector<VerificationReport> reports;
    const std::string& id = o.identity;
    auto fork_range = [&](int p) {
        std::vector<int> rs;
        if (o.all_r)
            for (int r = 0; r <= p; ++r) rs.push_back(r);
        else
            rs.push_back(require(o, &Options::r, "--r (or --all-r)"));
        return rs;
    };

    if (id == "e28") {
        int k = require(o, &Options::k, "--k"), p = require(o, &Options::p, "--p");
        reports.push_back(check_fork_sum_so(k, p, o.cutoff));
    } else if (id == "e28b") {
        int m = require(o, &Options::m, "--m"), n = require(o, &Options::n, "--n");
        int p = require(o, &Options::p, "--p");
        long w = checked_cutoff(o.cutoff.value_or(default_degree(m + n, p)), "cutoff");
        reports.push_back(check_fork_sum_osp(m, n, p, w));
    } else if (id == "theorem1") {
        int k = require(o, &Options::k, "--k"), p = require(o, &Options::p, "--p");
        for (int r : fork_range(p)) reports.push_back(verify_theorem1(k, r, p));
    } else if (id == "rectangle") {
        int k = require(o, &Options::k, "--k"), p = require(o, &Options::p, "--p");
        if (o.series != "B" && o.series != "D")
            throw CLI::ValidationError("--series must be B or D");
        reports.push_back(
            verify_rectangle_characters(o.series == "B" ? Series::B : Series::D, k, p));
    } else if (id == "qdim-so7") {
        IdentityParams P;
        P.p = require(o, &Options::p, "--p");
        reports.push_back(verify_superdim_identity(id, P, -1));
    } else if (id == "B-case1" || id == "B-case2" || id == "B-case3" || id == "D-even" ||
               id == "D-odd" || id == "D-fork-conj") {
        IdentityParams P;
        P.m = o.m;
        P.n = o.n;
        P.k = o.k;
        P.p = require(o, &Options::p, "--p");
        long degree = checked_cutoff(o.deg.value_or(default_degree(std::max(o.k, 1), P.p)),
                                     "degree");
        if (id == "D-fork-conj") {
            for (int r : fork_range(P.p)) {
                P.r = r;
                reports.push_back(verify_superdim_identity(id, P, degree));
            }
        } else {
            P.r = o.r;
            reports.push_back(verify_superdim_identity(id, P, degree));
        }
    } else {
        throw CLI::ValidationError("unknown identity '" + id +
                                   "'; expected one of e28, e28b, B-case1, B-case2, B-case3, "
                                   "D-even, D-odd, theorem1, rectangle, D-fork-conj, qdim-so7");
    }

    bool all_passed = true;
    for (const auto& r : reports) all_passed = all_passed && r.passed;
    if (o.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : reports) j.push_back(to_json(r));
        print_json(j);
    } else {
        for (const auto& r : reports) print_report_text(r);
    }
    return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact character expansions, specializations and verification oracles"};
    app.require_subcommand(1);

    Options o;
    auto add_common = [&](CLI::App* cmd, bool with_labels) {
        cmd->add_option("--format", o.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
        if (with_labels) {
            cmd->add_option("--k", o.k, "orthogonal rank");
            cmd->add_option("--m", o.m, "osp even rank");
            cmd->add_option("--n", o.n, "osp odd rank");
            cmd->add_option("--r", o.r, "fork label r");
            cmd->add_option("--p", o.p, "label p");
        }
    };

    auto* expand = app.add_subcommand("expand", "materialize a character expansion");
    add_common(expand, true);
    expand->add_option("--family", o.family, "so-odd, so-even-fork, osp1, osp-odd, osp-even, osp-even-fork-conj")
        ->required();
    expand->add_option("--cutoff", o.cutoff, "weight cutoff for infinite families");

    auto* tdim = app.add_subcommand("tdim", "t-dimension series of an expansion");
    add_common(tdim, true);
    tdim->add_option("--family", o.family)->required();
    tdim->add_option("--deg", o.deg, "series truncation degree");
    tdim->add_option("--cutoff", o.cutoff, "weight cutoff for infinite families");

    auto* sdim = app.add_subcommand("sdim", "t-superdimension series of an osp expansion");
    add_common(sdim, true);
    sdim->add_option("--family", o.family)->required();
    sdim->add_option("--deg", o.deg, "series truncation degree");
    sdim->add_option("--cutoff", o.cutoff, "weight cutoff for infinite families");

    auto* qdim = app.add_subcommand("qdim", "q-dimension of the so(2n+1) rectangle module");
    add_common(qdim, true);
    qdim->add_option("--deg", o.deg, "series truncation degree (default: full polynomial)");

    auto* enumerate = app.add_subcommand("enumerate", "stream partitions under constraints");
    add_common(enumerate, true);
    enumerate->add_option("--max-part", o.max_part, "largest allowed part");
    enumerate->add_option("--max-length", o.max_length, "largest allowed number of parts");
    enumerate->add_option("--hook-m", o.hook_m, "hook arm");
    enumerate->add_option("--hook-n", o.hook_n, "hook leg");
    enumerate->add_option("--class", o.klass, "all, B, or Br (Br needs --r)");
    enumerate->add_option("--max-weight", o.max_weight, "inclusive weight cutoff");
    enumerate->add_option("--weight", o.weight, "exact weight");

    auto* verify = app.add_subcommand("verify", "run a named identity check");
    add_common(verify, true);
    verify
        ->add_option("identity", o.identity,
                     "e28, e28b, B-case1, B-case2, B-case3, D-even, D-odd, theorem1, rectangle, "
                     "D-fork-conj, qdim-so7")
        ->required();
    verify->add_option("--deg", o.deg, "series truncation degree");
    verify->add_option("--cutoff", o.cutoff, "weight cutoff");
    verify->add_option("--series", o.series, "B or D (rectangle check)");
    verify->add_flag("--all-r", o.all_r, "run every fork label 0 <= r <= p");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(expand)) return run_expand(o);
        if (app.got_subcommand(tdim)) return run_series(o, false);
        if (app.got_subcommand(sdim)) return run_series(o, true);
        if (app.got_subcommand(qdim)) return run_qdim(o);
        if (app.got_subcommand(enumerate)) return run_enumerate(o);
        if (app.got_subcommand(verify)) return run_verify(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
