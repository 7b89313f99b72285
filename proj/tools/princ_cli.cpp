#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "princ/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitNotALattice = 3;
constexpr int kExitVerification = 4;

void print_congruence_line(const std::string& name, const princ::Congruence& c,
                           const princ::BoundedOrder& order) {
    std::printf("%-20s %s\n", name.c_str(), c.to_string(order).c_str());
}

int cmd_princ(const std::string& file) {
    princ::BoundedOrder order = princ::order_from_json(princ::json_from_file(file));
    princ::FiniteLattice l(order);
    princ::PrincOrder pr = princ_order(l);
    auto all = princ::all_congruences(l);
    std::printf("%d elements, %zu congruences, %d principal\n", l.size(), all.size(),
                pr.order.size());
    for (int i = 0; i < pr.order.size(); ++i)
        print_congruence_line(pr.order.name(i), pr.congruences[static_cast<size_t>(i)], order);
    return kExitOk;
}

int cmd_con(const std::string& file, const std::string& a, const std::string& b) {
    princ::BoundedOrder order = princ::order_from_json(princ::json_from_file(file));
    princ::FiniteLattice l(order);
    princ::Congruence c = princ::principal_congruence(l, l.index(a), l.index(b));
    print_congruence_line("con(" + a + "," + b + ")", c, order);
    return kExitOk;
}

int cmd_lat(const std::string& file, int extras, const std::string& kind,
            const std::string& dot_file) {
    princ::BoundedOrder p = princ::order_from_json(princ::json_from_file(file));
    std::vector<std::string> extra;
    for (int i = 0; i < extras; ++i) extra.push_back("x:" + std::to_string(i));
    princ::FiniteLattice l = princ::lat_of(p, extra, kind, princ::active_catalog());
    std::cout << princ::to_json(l.order()).dump(2) << "\n";
    if (!dot_file.empty()) princ::write_file(dot_file, princ::to_dot(l.order(), "lat"));
    return kExitOk;
}

int cmd_represent(const std::string& file, const std::string& variant_str,
                  const std::string& dot_dir, const std::string& report_file) {
    princ::OrderTriple t = princ::triple_from_json(princ::json_from_file(file));
    princ::Variant variant = princ::variant_of(variant_str);
    const princ::GadgetCatalog& catalog = princ::active_catalog();
    princ::RepresentationReport r = princ::verify_representation(t, variant, catalog);
    std::printf("variant %s: |K| = %d, |M| = %d, |L| = %d (catalog %s)\n", variant_str.c_str(),
                r.k_size, r.m_size, r.l_size, r.catalog_hash.c_str());
    for (const auto& c : r.clauses)
        std::printf("%s %-16s %s\n", c.pass ? "pass" : "FAIL", c.name.c_str(), c.detail.c_str());
    if (!dot_dir.empty()) {
        princ::RepresentResult full = princ::represent_full(t, variant, catalog);
        princ::write_file(dot_dir + "/k.dot", princ::to_dot(full.triple.k.order(), "K"));
        princ::write_file(dot_dir + "/m.dot", princ::to_dot(full.m.order(), "M"));
        princ::write_file(dot_dir + "/l.dot", princ::to_dot(full.triple.l.order(), "L"));
    }
    if (!report_file.empty()) {
        princ::Json j = princ::to_json(r);
        j["triple"] = princ::to_json(t);
        princ::write_file(report_file, j.dump(2) + "\n");
    }
    return r.all_pass() ? kExitOk : kExitVerification;
}

int cmd_verify_corpus(int max_size, uint64_t seed, const std::string& report_file) {
    const princ::GadgetCatalog& catalog = princ::active_catalog();
    princ::CorpusOptions opt;
    opt.triple_max_size = max_size;
    opt.seed = seed;
    auto suites = princ::run_all_suites(catalog, opt);
    bool ok = true;
    for (const auto& s : suites) {
        std::printf("%s %-24s %s [%ld cases, %.2fs]\n", s.pass ? "PASS" : "FAIL", s.name.c_str(),
                    s.detail.c_str(), s.cases, s.seconds);
        ok = ok && s.pass;
    }
    if (!report_file.empty())
        princ::write_file(report_file, princ::to_json(suites, catalog).dump(2) + "\n");
    return ok ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-lattice workbench: principal congruences, congruence lattices, and "
                 "lattice realizations of order triples"};
    app.require_subcommand(1);

    std::string princ_file;
    auto* sc_princ = app.add_subcommand("princ", "list the principal congruences of a lattice");
    sc_princ->add_option("file", princ_file, "poset document (JSON)")->required();

    std::string con_file, con_a, con_b;
    auto* sc_con = app.add_subcommand("con", "principal congruence generated by one pair");
    sc_con->add_option("file", con_file, "poset document (JSON)")->required();
    sc_con->add_option("a", con_a, "first element")->required();
    sc_con->add_option("b", con_b, "second element")->required();

    std::string lat_file, lat_kind = "G", lat_dot;
    int lat_extras = 0;
    auto* sc_lat = app.add_subcommand("lat", "one-sided construction over a bounded order");
    sc_lat->add_option("file", lat_file, "poset document (JSON)")->required();
    sc_lat->add_option("--x", lat_extras, "number of extra universal complements")
        ->check(CLI::Range(0, 16));
    sc_lat->add_option("--kind", lat_kind, "comparability cell kind")
        ->check(CLI::IsMember({"G", "GExt"}));
    sc_lat->add_option("--dot", lat_dot, "also write a DOT diagram here");

    std::string rep_file, rep_variant = "reduced", rep_dot, rep_report;
    auto* sc_rep = app.add_subcommand("represent", "realize an order triple and verify it");
    sc_rep->add_option("file", rep_file, "triple document (JSON)")->required();
    sc_rep->add_option("--variant", rep_variant, "construction variant")
        ->check(CLI::IsMember({"reduced", "original"}));
    sc_rep->add_option("--dot", rep_dot, "directory for k.dot / m.dot / l.dot");
    sc_rep->add_option("--report", rep_report, "write the JSON report here");

    int vc_max = 4;
    uint64_t vc_seed = 20260816ull;
    std::string vc_report;
    auto* sc_vc = app.add_subcommand("verify-corpus", "run every property suite on the corpus");
    sc_vc->add_option("--max-size", vc_max, "largest order size in the triple corpus")
        ->check(CLI::Range(2, 5));
    sc_vc->add_option("--seed", vc_seed, "seed for the randomized suites");
    sc_vc->add_option("--report", vc_report, "write the JSON report here");

    CLI11_PARSE(app, argc, argv);

    try {
        if (sc_princ->parsed()) return cmd_princ(princ_file);
        if (sc_con->parsed()) return cmd_con(con_file, con_a, con_b);
        if (sc_lat->parsed()) return cmd_lat(lat_file, lat_extras, lat_kind, lat_dot);
        if (sc_rep->parsed()) return cmd_represent(rep_file, rep_variant, rep_dot, rep_report);
        if (sc_vc->parsed()) return cmd_verify_corpus(vc_max, vc_seed, vc_report);
    } catch (const princ::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const princ::NotALattice& e) {
        std::cerr << "not a lattice: " << e.what() << "\n";
        return kExitNotALattice;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return kExitVerification;
    }
    return kExitOk;
}
