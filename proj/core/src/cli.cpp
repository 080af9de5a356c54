#include "richardson/cli.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <sstream>

#include "richardson/json_io.hpp"

namespace richardson {

namespace {

std::vector<int> parse_csv_ints(const std::string& s) {
    std::vector<int> out;
    if (s.empty()) return out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        try {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument(tok);
            out.push_back(v);
        } catch (const std::exception&) {
            throw contract_error("not an integer list: '" + s + "'");
        }
    }
    return out;
}

const char* yn(bool b) { return b ? "yes" : "no"; }

struct DimvecOptions {
    std::string kind_str;
    std::string dimvec_csv;
    std::string half_csv;
    int N = -1;
    bool no_normalize = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--kind", kind_str, "orth|symp")->required();
        cmd->add_option("--dimvec", dimvec_csv,
                        "full symmetric vector, e.g. 3,4,2,4,3");
        cmd->add_option("--half", half_csv,
                        "positive half d_1,...,d_s (with --N)");
        cmd->add_option("--N", N, "total dimension (with --half)");
        cmd->add_flag("--no-normalize", no_normalize,
                      "keep zero blocks instead of normalizing");
    }

    DimensionVector resolve() const {
        Kind kind = parse_kind(kind_str);
        DimensionVector d = [&] {
            if (!dimvec_csv.empty()) {
                if (!half_csv.empty() || N >= 0)
                    throw contract_error("--dimvec excludes --half/--N");
                return DimensionVector::from_entries(
                    kind, parse_csv_ints(dimvec_csv));
            }
            if (N < 0)
                throw contract_error("need --dimvec or --half with --N");
            return DimensionVector::from_half(kind, parse_csv_ints(half_csv),
                                              N);
        }();
        if (kind == Kind::orthogonal && d.total() < 3)
            throw contract_error("orthogonal groups need N >= 3");
        if (kind == Kind::symplectic && (d.total() < 2 || d.total() % 2))
            throw contract_error("symplectic groups need even N >= 2");
        return no_normalize ? d : normalize(d);
    }
};

void print_report_text(const RichardsonReport& r, std::ostream& out) {
    out << "kind: " << kind_name(r.d.kind()) << "\n";
    out << "dimvec: " << r.d.to_string() << "   N = " << r.d.total() << "\n";
    out << "decomposition:";
    for (const DimensionVector& p : r.pieces) out << " " << p.to_string();
    out << "\n";
    out << "x = " << r.x.to_string() << "\n";
    out << "jordan = " << r.jordan.to_string()
        << "   expected = " << r.expected.to_string()
        << "   match = " << yn(r.partition_match) << "\n";
    out << "in_g = " << yn(r.x_in_g) << "   in_u = " << yn(r.x_in_u)
        << "   nilpotent = " << yn(r.nilpotent) << "\n";
    out << "dense = " << yn(r.dense) << "   centralizer = " << r.centralizer
        << "   dim_levi = " << r.dim_levi << "   dim_u = " << r.dim_u << "\n";
    out << "|Gamma| = " << r.gamma_size << "   formula = " << r.gamma_formula
        << "   independent = " << yn(r.gamma_independent) << "\n";
    out << "type = " << r.type.to_string() << "   rank = " << r.type.rank()
        << "\n";
    out << "nice = " << yn(r.nice) << "\n";
    out << "ok = " << yn(r.ok()) << "\n";
}

int run_sweep(int max_n, std::ostream& out) {
    int total = 0;
    int failures = 0;
    auto run_kind = [&](Kind kind, int lo) {
        for (int n = lo; n <= max_n; n += kind == Kind::symplectic ? 2 : 1) {
            int count = 0;
            for (const DimensionVector& d : enumerate_proper_dimvecs(kind, n)) {
                RichardsonReport r = full_report(d);
                ++count;
                ++total;
                if (!r.ok()) {
                    ++failures;
                    out << "FAIL " << kind_name(kind) << " " << d.to_string()
                        << "\n";
                }
            }
            out << kind_name(kind) << " N=" << n << ": " << count
                << " parabolics verified\n";
        }
    };
    run_kind(Kind::orthogonal, 3);
    run_kind(Kind::symplectic, 2);
    out << (failures == 0 ? "all " : "FAILED: ") << total
        << " constructions checked, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Richardson elements of classical orthogonal and symplectic "
                 "groups via line diagrams, with exact verification"};
    app.require_subcommand(1);

    DimvecOptions construct_opts, verify_opts, render_opts;
    bool construct_json = false, verify_json = false;
    std::string construct_render;

    CLI::App* construct =
        app.add_subcommand("construct", "build x and print the full report");
    construct_opts.attach(construct);
    construct->add_flag("--json", construct_json, "machine-readable output");
    construct->add_option("--render", construct_render,
                          "also render the diagram (text|dot)");

    CLI::App* verify = app.add_subcommand(
        "verify", "construct and check every verification flag");
    verify_opts.attach(verify);
    verify->add_flag("--json", verify_json, "machine-readable output");

    CLI::App* render =
        app.add_subcommand("render", "print the line diagram only");
    render_opts.attach(render);
    std::string render_format = "text";
    render->add_option("--format", render_format, "text|dot|json");

    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "list Richardson partitions, or run the full sweep");
    std::string enum_kind, enum_check;
    int enum_n = -1, enum_max_n = 12;
    bool enum_json = false;
    enumerate->add_option("--kind", enum_kind, "orth|symp");
    enumerate->add_option("--N", enum_n, "total dimension");
    enumerate->add_option("--check", enum_check,
                          "'all': verify every parabolic up to --max-N");
    enumerate->add_option("--max-N", enum_max_n, "sweep bound (default 12)");
    enumerate->add_flag("--json", enum_json, "machine-readable output");

    CLI::App* classify =
        app.add_subcommand("classify", "polarizability of a nilpotent orbit");
    std::string classify_kind, classify_partition_csv;
    bool classify_json = false;
    classify->add_option("--kind", classify_kind, "orth|symp")->required();
    classify->add_option("--partition", classify_partition_csv,
                         "non-increasing parts, e.g. 5,5,3,3")
        ->required();
    classify->add_flag("--json", classify_json, "machine-readable output");

    CLI::App* crossvalidate = app.add_subcommand(
        "crossvalidate",
        "compare constructed partitions against the shape classifier");
    std::string cv_kind;
    int cv_n = -1;
    bool cv_json = false;
    crossvalidate->add_option("--kind", cv_kind, "orth|symp")->required();
    crossvalidate->add_option("--N", cv_n, "total dimension")->required();
    crossvalidate->add_flag("--json", cv_json, "machine-readable output");

    std::vector<const char*> argv;
    argv.push_back("richardson");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());

        if (app.got_subcommand(construct)) {
            if (!construct_render.empty() && construct_render != "text" &&
                construct_render != "dot")
                throw contract_error("--render expects text|dot");
            RichardsonReport r = full_report(construct_opts.resolve());
            if (construct_json)
                out << to_json(r).dump(2) << "\n";
            else
                print_report_text(r, out);
            if (construct_render == "text")
                out << render_text(r.diagram);
            else if (construct_render == "dot")
                out << render_dot(r.diagram);
            return r.ok() ? 0 : 1;
        }
        if (app.got_subcommand(verify)) {
            RichardsonReport r = full_report(verify_opts.resolve());
            if (verify_json)
                out << to_json(r).dump(2) << "\n";
            else
                print_report_text(r, out);
            return r.ok() ? 0 : 1;
        }
        if (app.got_subcommand(render)) {
            LineDiagram dg = assemble(render_opts.resolve());
            if (render_format == "text")
                out << render_text(dg);
            else if (render_format == "dot")
                out << render_dot(dg);
            else if (render_format == "json")
                out << to_json(dg).dump(2) << "\n";
            else
                throw contract_error("--format expects text|dot|json");
            return 0;
        }
        if (app.got_subcommand(enumerate)) {
            if (!enum_check.empty()) {
                if (enum_check != "all")
                    throw contract_error("--check expects 'all'");
                return run_sweep(enum_max_n, out);
            }
            if (enum_kind.empty() || enum_n < 0)
                throw contract_error("enumerate needs --kind and --N");
            Kind kind = parse_kind(enum_kind);
            auto parts = enumerate_richardson_partitions(kind, enum_n);
            if (enum_json) {
                json a = json::array();
                for (const Partition& p : parts) a.push_back(to_json(p));
                out << json{{"schema", 1},
                            {"kind", kind_name(kind)},
                            {"N", enum_n},
                            {"partitions", a}}
                           .dump(2)
                    << "\n";
            } else {
                for (const Partition& p : parts)
                    out << p.to_string() << "\n";
            }
            return 0;
        }
        if (app.got_subcommand(classify)) {
            Kind kind = parse_kind(classify_kind);
            Partition p(parse_csv_ints(classify_partition_csv));
            auto witness = classify_partition(p, kind);
            if (classify_json) {
                json j{{"schema", 1},
                       {"kind", kind_name(kind)},
                       {"partition", to_json(p)},
                       {"polarizable", witness.has_value()}};
                j["witness"] = witness ? to_json(*witness) : json();
                out << j.dump(2) << "\n";
            } else {
                out << "polarizable: " << (witness ? "true" : "false") << "\n";
                if (witness) {
                    out << "witness:";
                    for (const Segment& s : witness->segments) {
                        out << " " << s.tag << "[";
                        for (size_t i = 0; i < s.parts.size(); ++i)
                            out << (i ? "," : "") << s.parts[i];
                        out << "]";
                    }
                    out << "\n";
                }
            }
            return 0;
        }
        if (app.got_subcommand(crossvalidate)) {
            Kind kind = parse_kind(cv_kind);
            CrossValidateReport r = cross_validate(kind, cv_n);
            if (cv_json) {
                out << to_json(r).dump(2) << "\n";
            } else if (r.ok) {
                out << "OK: " << r.constructed.size()
                    << " partitions matched\n";
            } else {
                out << "MISMATCH\n";
                for (const Partition& p : r.constructed_only)
                    out << "constructed only: " << p.to_string() << "\n";
                for (const Partition& p : r.accepted_only)
                    out << "classifier only: " << p.to_string() << "\n";
            }
            return r.ok ? 0 : 1;
        }
        throw contract_error("no subcommand given");
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::CallForAllHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const contract_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const construction_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace richardson
