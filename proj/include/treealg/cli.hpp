#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "bseries.hpp"
#include "canonical.hpp"
#include "coefficient_map.hpp"
#include "convolution.hpp"
#include "increasing.hpp"
#include "json_io.hpp"
#include "prufer.hpp"
#include "rational.hpp"
#include "sampling.hpp"
#include "trees.hpp"

namespace treealg::cli {

namespace detail {

inline void check_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (fmt == a) return;
    fail("UsageError", "unsupported format '" + fmt + "'");
}

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail("UsageError", "cannot open '" + path + "'");
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) fail("SyntaxError", "invalid JSON in '" + path + "'");
    return j;
}

inline void emit_map(const coefficient_map& m, const std::string& out_path, std::ostream& out) {
    std::string text = coefficient_map_to_json(m).dump(2) + "\n";
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path);
        if (!f) fail("UsageError", "cannot write '" + out_path + "'");
        f << text;
    }
}

struct verify_options {
    unsigned seed = 0;
    int order = 6;
    int pairs = 0;
    std::vector<std::string> betas;
    std::vector<std::string> points;
};

template <typename MakeA, typename Verify>
int run_verify(const verify_options& opt, const char* name, MakeA&& make_a, Verify&& verify,
               const std::string& format, std::ostream& out) {
    std::vector<rational_poly> betas;
    for (const auto& b : opt.betas) betas.push_back(parse_poly(b));
    std::vector<rational> points;
    for (const auto& p : opt.points) points.push_back(parse_rational(p));

    std::mt19937 rng(opt.seed);
    bool all_pass = true;
    json cases = json::array();
    for (int p = 0; p < opt.pairs; ++p) {
        coefficient_map a = make_a(opt.order, rng);
        coefficient_map b = random_composition_map(opt.order, rng);
        for (std::size_t bi = 0; bi < betas.size(); ++bi)
            for (std::size_t gi = 0; gi < points.size(); ++gi) {
                verification_report rep = verify(a, b, betas[bi], points[gi]);
                all_pass = all_pass && rep.pass;
                cases.push_back(json{{"pair", p},
                                     {"beta", opt.betas[bi]},
                                     {"point", format_rational(points[gi])},
                                     {"lhs", series_to_json(rep.lhs)["coefficients"]},
                                     {"rhs", series_to_json(rep.rhs)["coefficients"]},
                                     {"pass", rep.pass}});
            }
    }
    json report{{"check", name},  {"seed", opt.seed},          {"order", opt.order},
                {"pairs", opt.pairs}, {"pass", all_pass},      {"cases", cases}};
    if (format == "json") {
        out << report.dump(2) << "\n";
    } else {
        out << name << ": " << opt.pairs << " pairs, " << betas.size() * points.size()
            << " settings each, order " << opt.order << ": " << (all_pass ? "PASS" : "FAIL") << "\n";
        if (!all_pass)
            for (const auto& c : cases)
                if (!c["pass"].get<bool>())
                    out << "  pair " << c["pair"] << ", beta " << c["beta"].get<std::string>() << ", point "
                        << c["point"].get<std::string>() << ": lhs " << c["lhs"].dump() << " rhs " << c["rhs"].dump()
                        << "\n";
    }
    return all_pass ? 0 : 1;
}

}  // namespace detail

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"rooted tree combinatorics and series composition"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format (text, json, csv where applicable)")->capture_default_str();

    // enumerate
    auto* enumerate_cmd = app.add_subcommand("enumerate", "list trees of a given size");
    enumerate_cmd->require_subcommand(1);
    int enum_n = 1;
    int enum_cap = default_enumeration_cap;
    auto* enum_labeled = enumerate_cmd->add_subcommand("labeled", "rooted trees on {0..n-1}");
    enum_labeled->add_option("n", enum_n, "vertex count")->required();
    enum_labeled->add_option("--cap", enum_cap, "enumeration size cap")->capture_default_str();
    auto* enum_unlabeled = enumerate_cmd->add_subcommand("unlabeled", "tree classes in canonical order");
    enum_unlabeled->add_option("n", enum_n, "vertex count")->required();
    auto* enum_increasing = enumerate_cmd->add_subcommand("increasing", "increasing trees on {0..n-1}");
    enum_increasing->add_option("n", enum_n, "vertex count")->required();
    enum_increasing->add_option("--cap", enum_cap, "enumeration size cap")->capture_default_str();

    // count
    auto* count_cmd = app.add_subcommand("count", "count trees of a given size");
    count_cmd->require_subcommand(1);
    int count_n = 1;
    auto* count_labeled = count_cmd->add_subcommand("labeled", "n^(n-1)");
    count_labeled->add_option("n", count_n, "vertex count")->required();
    auto* count_unlabeled_cmd = count_cmd->add_subcommand("unlabeled", "class count");
    count_unlabeled_cmd->add_option("n", count_n, "vertex count")->required();
    auto* count_increasing = count_cmd->add_subcommand("increasing", "(n-1)!");
    count_increasing->add_option("n", count_n, "vertex count")->required();

    // prufer
    auto* prufer_cmd = app.add_subcommand("prufer", "sequence coding of labeled trees");
    prufer_cmd->require_subcommand(1);
    std::string tree_text;
    std::string seq_text;
    int seq_n = 1;
    auto* prufer_encode_cmd = prufer_cmd->add_subcommand("encode", "tree to sequence");
    prufer_encode_cmd->add_option("tree", tree_text, "tree in bracket notation")->required();
    auto* prufer_decode_cmd = prufer_cmd->add_subcommand("decode", "sequence to tree");
    prufer_decode_cmd->add_option("n", seq_n, "vertex count")->required();
    prufer_decode_cmd->add_option("sequence", seq_text, "comma-separated labels (empty for n=1)");

    // increasing
    auto* increasing_cmd = app.add_subcommand("increasing", "increasing trees and their permutation codes");
    increasing_cmd->require_subcommand(1);
    auto* incr_enum = increasing_cmd->add_subcommand("enumerate", "all increasing trees");
    incr_enum->add_option("n", enum_n, "vertex count")->required();
    incr_enum->add_option("--cap", enum_cap, "enumeration size cap")->capture_default_str();
    auto* incr_encode = increasing_cmd->add_subcommand("encode", "tree to permutation");
    incr_encode->add_option("tree", tree_text, "increasing tree in bracket notation")->required();
    auto* incr_decode = increasing_cmd->add_subcommand("decode", "permutation to tree");
    incr_decode->add_option("n", seq_n, "vertex count")->required();
    incr_decode->add_option("permutation", seq_text, "comma-separated entries (empty for n=1)");

    // canon
    auto* canon_cmd = app.add_subcommand("canon", "class of a labeled tree");
    canon_cmd->add_option("tree", tree_text, "tree in bracket notation")->required();

    // table
    auto* table_cmd = app.add_subcommand("table", "per-class invariants at a given size");
    int table_n = 1;
    table_cmd->add_option("n", table_n, "vertex count")->required();

    // bgroup
    auto* bgroup_cmd = app.add_subcommand("bgroup", "operations on coefficient maps");
    bgroup_cmd->require_subcommand(1);
    std::string map_a_path, map_b_path, out_path;
    int group_order = 6;
    std::string law = "compose";
    auto* bg_compose = bgroup_cmd->add_subcommand("compose", "subtree product of two maps");
    bg_compose->add_option("a", map_a_path, "left map (JSON file)")->required();
    bg_compose->add_option("b", map_b_path, "right map (JSON file)")->required();
    bg_compose->add_option("-N,--order", group_order, "truncation order")->capture_default_str();
    bg_compose->add_option("-o,--output", out_path, "write result here instead of stdout");
    auto* bg_subst = bgroup_cmd->add_subcommand("substitute", "quotient product of two maps");
    bg_subst->add_option("a", map_a_path, "left map (JSON file)")->required();
    bg_subst->add_option("b", map_b_path, "right map (JSON file)")->required();
    bg_subst->add_option("-N,--order", group_order, "truncation order")->capture_default_str();
    bg_subst->add_option("-o,--output", out_path, "write result here instead of stdout");
    auto* bg_inverse = bgroup_cmd->add_subcommand("inverse", "inverse for either product");
    bg_inverse->add_option("a", map_a_path, "map to invert (JSON file)")->required();
    bg_inverse->add_option("--law", law, "compose or substitute")->capture_default_str();
    bg_inverse->add_option("-N,--order", group_order, "truncation order")->capture_default_str();
    bg_inverse->add_option("-o,--output", out_path, "write result here instead of stdout");
    auto* bg_solve = bgroup_cmd->add_subcommand("solve", "solve x substitute b = target");
    bg_solve->add_option("target", map_a_path, "target map (JSON file)")->required();
    bg_solve->add_option("b", map_b_path, "right map (JSON file)")->required();
    bg_solve->add_option("-N,--order", group_order, "truncation order")->capture_default_str();
    bg_solve->add_option("-o,--output", out_path, "write result here instead of stdout");
    auto* bg_exact = bgroup_cmd->add_subcommand("exact", "coefficients of the exact flow");
    bg_exact->add_option("-N,--order", group_order, "truncation order")->capture_default_str();
    bg_exact->add_option("-o,--output", out_path, "write result here instead of stdout");

    // bseries
    auto* bseries_cmd = app.add_subcommand("bseries", "evaluate a coefficient map as a series");
    bseries_cmd->require_subcommand(1);
    std::string beta_text = "1+x^2/2";
    std::string point_text = "0";
    auto* bs_eval = bseries_cmd->add_subcommand("eval", "series in t at a base point");
    bs_eval->add_option("coeffs", map_a_path, "coefficient map (JSON file)")->required();
    bs_eval->add_option("--beta", beta_text, "field polynomial in x")->capture_default_str();
    bs_eval->add_option("--g0", point_text, "base point")->capture_default_str();
    bs_eval->add_option("-N,--order", group_order, "truncation order")->capture_default_str();

    // verify
    auto* verify_cmd = app.add_subcommand("verify", "check the composition and substitution laws on random maps");
    verify_cmd->require_subcommand(1);
    detail::verify_options vopt;
    auto add_verify_sub = [&](const char* name, const char* help, int default_pairs, int default_order) {
        auto* sub = verify_cmd->add_subcommand(name, help);
        sub->add_option("--seed", vopt.seed, "random seed")->required();
        sub->add_option("-N,--order", vopt.order, "truncation order")->default_val(default_order);
        sub->add_option("--pairs", vopt.pairs, "number of random map pairs")->default_val(default_pairs);
        sub->add_option("--beta", vopt.betas, "field polynomial (repeatable)");
        sub->add_option("--g0", vopt.points, "base point (repeatable)");
        return sub;
    };
    auto* verify_comp = add_verify_sub("composition", "series of compose(a,b) against series-in-series", 20, 6);
    auto* verify_subst = add_verify_sub("substitution", "series of substitute(a,b) against the modified field", 10, 5);

    // top-level flags like --format may appear after the subcommand
    auto allow_parent_options = [](auto&& self, CLI::App* a) -> void {
        a->fallthrough();
        for (CLI::App* sub : a->get_subcommands({})) self(self, sub);
    };
    for (CLI::App* sub : app.get_subcommands({})) allow_parent_options(allow_parent_options, sub);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: UsageError: " << e.what() << "\n";
        return 2;
    }

    try {
        if (*enumerate_cmd || *incr_enum) {
            detail::check_format(format, {"text", "json"});
            json arr = json::array();
            if (*enum_unlabeled) {
                for (const auto& t : enumerate_unlabeled(enum_n)) {
                    if (format == "text")
                        out << print_unlabeled(t) << "\n";
                    else
                        arr.push_back(print_unlabeled(t));
                }
            } else {
                std::vector<labeled_tree> trees = (*enum_labeled) ? enumerate_labeled(enum_n, enum_cap)
                                                                  : enumerate_increasing(enum_n, enum_cap);
                for (const auto& t : trees) {
                    if (format == "text")
                        out << print_tree(t) << "\n";
                    else
                        arr.push_back(tree_to_json(t));
                }
            }
            if (format == "json") out << arr.dump(2) << "\n";
            return 0;
        }

        if (*count_cmd) {
            detail::check_format(format, {"text", "json", "csv"});
            if (count_n < 1) fail("DomainMismatch", "vertex count must be positive");
            std::string kind;
            integer value;
            if (*count_labeled) {
                kind = "labeled";
                value = int_pow(integer(count_n), count_n - 1);
            } else if (*count_unlabeled_cmd) {
                kind = "unlabeled";
                value = count_unlabeled(count_n);
            } else {
                kind = "increasing";
                value = factorial(count_n - 1);
            }
            if (format == "text")
                out << value.str() << "\n";
            else if (format == "json")
                out << json{{"kind", kind}, {"n", count_n}, {"count", value.str()}}.dump() << "\n";
            else
                out << "kind,n,count\n" << kind << "," << count_n << "," << value.str() << "\n";
            return 0;
        }

        if (*prufer_cmd) {
            detail::check_format(format, {"text", "json"});
            if (*prufer_encode_cmd) {
                prufer_sequence seq = prufer_encode(parse_tree(tree_text));
                if (format == "text")
                    out << format_sequence(seq) << "\n";
                else
                    out << json(seq).dump() << "\n";
            } else {
                labeled_tree t = prufer_decode(seq_n, parse_sequence(seq_text));
                if (format == "text")
                    out << print_tree(t) << "\n";
                else
                    out << tree_to_json(t).dump() << "\n";
            }
            return 0;
        }

        if (*increasing_cmd) {
            detail::check_format(format, {"text", "json"});
            if (*incr_encode) {
                perm_code code = perm_encode(parse_tree(tree_text));
                if (format == "text")
                    out << format_sequence(code) << "\n";
                else
                    out << json(code).dump() << "\n";
            } else {
                labeled_tree t = perm_decode(seq_n, parse_sequence(seq_text));
                if (format == "text")
                    out << print_tree(t) << "\n";
                else
                    out << tree_to_json(t).dump() << "\n";
            }
            return 0;
        }

        if (*canon_cmd) {
            detail::check_format(format, {"text", "json"});
            unlabeled_tree t = canonicalize(parse_tree(tree_text));
            if (format == "text")
                out << print_unlabeled(t) << "\n";
            else
                out << json{{"class", print_unlabeled(t)}}.dump() << "\n";
            return 0;
        }

        if (*table_cmd) {
            detail::check_format(format, {"text", "json", "csv"});
            if (format == "csv") out << "tau,sigma,r,factorial,i\n";
            json arr = json::array();
            for (const auto& t : enumerate_unlabeled(table_n)) {
                integer sigma = symmetry_factor(t);
                integer r = labeled_count(t);
                integer fact = tree_factorial(t);
                integer incr = increasing_count(t);
                if (format == "text")
                    out << print_unlabeled_compact(t) << " " << sigma.str() << " " << r.str() << " " << fact.str()
                        << " " << incr.str() << "\n";
                else if (format == "csv")
                    out << detail::csv_field(print_unlabeled(t)) << "," << sigma.str() << "," << r.str() << ","
                        << fact.str() << "," << incr.str() << "\n";
                else
                    arr.push_back(json{{"tau", print_unlabeled(t)},
                                       {"sigma", sigma.str()},
                                       {"r", r.str()},
                                       {"factorial", fact.str()},
                                       {"i", incr.str()}});
            }
            if (format == "json") out << arr.dump(2) << "\n";
            return 0;
        }

        if (*bgroup_cmd) {
            if (*bg_exact) {
                detail::emit_map(exact_coeffs(group_order), out_path, out);
                return 0;
            }
            coefficient_map a = coefficient_map_from_json(detail::load_json(map_a_path));
            if (*bg_inverse) {
                if (law == "compose")
                    detail::emit_map(compose_inverse(a, group_order), out_path, out);
                else if (law == "substitute")
                    detail::emit_map(substitute_inverse(a, group_order), out_path, out);
                else
                    fail("UsageError", "unknown law '" + law + "'");
                return 0;
            }
            coefficient_map b = coefficient_map_from_json(detail::load_json(map_b_path));
            if (*bg_compose)
                detail::emit_map(compose(a, b, group_order), out_path, out);
            else if (*bg_subst)
                detail::emit_map(substitute(a, b, group_order), out_path, out);
            else
                detail::emit_map(solve_substitution(a, b, group_order), out_path, out);
            return 0;
        }

        if (*bseries_cmd) {
            detail::check_format(format, {"text", "json"});
            coefficient_map c = coefficient_map_from_json(detail::load_json(map_a_path));
            truncated_series s =
                bseries_eval(c, parse_poly(beta_text), parse_rational(point_text), group_order);
            if (format == "text") {
                for (int k = 0; k <= s.order(); ++k) out << "t^" << k << ": " << format_rational(s.coeff(k)) << "\n";
            } else {
                out << series_to_json(s).dump() << "\n";
            }
            return 0;
        }

        if (*verify_cmd) {
            detail::check_format(format, {"text", "json"});
            if (vopt.betas.empty()) vopt.betas = {"1+x^2/2", "2-x+x^3/6"};
            if (vopt.points.empty()) vopt.points = {"0", "1/2"};
            if (*verify_comp)
                return detail::run_verify(
                    vopt, "composition",
                    [](int order, std::mt19937& rng) { return random_composition_map(order, rng); },
                    [&](const coefficient_map& a, const coefficient_map& b, const rational_poly& beta,
                        const rational& point) { return verify_composition(a, b, beta, point, vopt.order); },
                    format, out);
            if (*verify_subst)
                return detail::run_verify(
                    vopt, "substitution",
                    [](int order, std::mt19937& rng) { return random_substitution_map(order, rng); },
                    [&](const coefficient_map& a, const coefficient_map& b, const rational_poly& beta,
                        const rational& point) { return verify_substitution(a, b, beta, point, vopt.order); },
                    format, out);
        }

        fail("UsageError", "no subcommand selected");
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}

}  // namespace treealg::cli
