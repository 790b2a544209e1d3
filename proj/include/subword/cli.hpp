#pragma once

#include <chrono>
#include <exception>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "subword/contents.hpp"
#include "subword/groupoid.hpp"
#include "subword/json_io.hpp"
#include "subword/pairing.hpp"
#include "subword/parse.hpp"
#include "subword/total_content.hpp"
#include "subword/word.hpp"

namespace subword::cli {

// Exit codes are a scripting contract: 0 success, 1 verification failure,
// 2 usage or parse error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

struct RangeSpec {
    int lo = 3;
    int hi = 12;
};

inline RangeSpec parse_range(const std::string& text) {
    auto sep = text.find("..");
    if (sep == std::string::npos)
        throw parse_error("expected a range of the form A..B", 0);
    RangeSpec r;
    try {
        r.lo = std::stoi(text.substr(0, sep));
        r.hi = std::stoi(text.substr(sep + 2));
    } catch (const std::exception&) {
        throw parse_error("expected integers in the range A..B", 0);
    }
    return r;
}

inline std::string occurrence_string(const Occurrence& o) {
    std::string s = "(";
    for (std::size_t i = 0; i < o.indices.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(o.indices[i]);
    }
    s += ") ";
    s += o.sign > 0 ? "+1" : "-1";
    return s;
}

inline int run_content(const std::string& word_expr, const std::string& pattern_expr,
                       bool oracle, bool json, std::ostream& out) {
    Word w = parse_word(word_expr);
    Pattern pat = parse_pattern(pattern_expr);
    Int value = content(w, pat);

    nlohmann::json j{{"word", to_string(w)}, {"pattern", to_string(pat)},
                     {"content", value.get_str()}};
    bool oracle_ok = true;
    std::vector<Occurrence> occurrences;
    if (oracle) {
        occurrences = enumerate_occurrences(w, pat); // throws past the bounds
        Int sum = 0;
        for (const auto& o : occurrences) sum += o.sign;
        oracle_ok = sum == value;
        if (json) {
            auto arr = nlohmann::json::array();
            for (const auto& o : occurrences)
                arr.push_back({{"indices", o.indices}, {"sign", o.sign}});
            j["occurrences"] = std::move(arr);
            j["oracle_agrees"] = oracle_ok;
        }
    }
    if (json) {
        out << j.dump() << "\n";
    } else {
        out << "cont(" << to_string(pat) << ", " << to_string(w) << ") = "
            << value.get_str() << "\n";
        if (oracle) {
            for (const auto& o : occurrences) out << "  " << occurrence_string(o) << "\n";
            out << "oracle sum agrees: " << (oracle_ok ? "yes" : "NO") << "\n";
        }
    }
    return oracle_ok ? kExitOk : kExitVerifyFailed;
}

inline int run_total_content(const std::string& word_expr, int max_degree, bool json,
                             std::ostream& out) {
    Word w = parse_word(word_expr);
    RElement direct = total_content_direct(w, max_degree);
    RElement hom = total_content_hom(w, max_degree);
    bool agree = direct == hom;
    if (json) {
        nlohmann::json j{{"word", to_string(w)}, {"N", max_degree},
                         {"direct", direct}, {"hom", hom}, {"agree", agree}};
        out << j.dump() << "\n";
    } else {
        out << "direct: " << to_string(direct) << "\n";
        out << "hom:    " << to_string(hom) << "\n";
        out << "agree:  " << (agree ? "yes" : "NO") << "\n";
    }
    return agree ? kExitOk : kExitVerifyFailed;
}

inline int run_twist(const std::string& twist_expr, const std::string& morphism_expr,
                     bool json, std::ostream& out) {
    TwistWord tw = parse_twist_word(twist_expr);
    GroupoidMorphism m = parse_morphism(morphism_expr);
    GroupoidMorphism r = apply_twist_word(tw, std::move(m));
    r.w = reduce(r.w).word(); // normal form even when tw is empty
    if (json)
        out << nlohmann::json(r).dump() << "\n";
    else
        out << to_string(r) << "\n";
    return kExitOk;
}

inline int run_e_words(int n, bool json, std::ostream& out) {
    TwistWord tw = twist_iterated_commutator(n - 2);
    GroupoidMorphism ea = apply_twist_word(tw, {MorphKind::ToP1, {}});
    GroupoidMorphism eab = apply_twist_word(tw, {MorphKind::FromP2, {}});
    // Which of the commutator class and its inverse is "the" mapping class is
    // a sign convention; print both orientations rather than pick.
    TwistWord tw_inv = invert(tw);
    GroupoidMorphism ea_inv = apply_twist_word(tw_inv, {MorphKind::ToP1, {}});
    GroupoidMorphism eab_inv = apply_twist_word(tw_inv, {MorphKind::FromP2, {}});
    if (json) {
        nlohmann::json j{{"n", n},
                         {"e_alpha", ea},
                         {"e_alphabeta", eab},
                         {"inverse_class", {{"e_alpha", ea_inv}, {"e_alphabeta", eab_inv}}}};
        out << j.dump() << "\n";
    } else {
        out << "e_alpha      = " << to_string(ea) << "\n";
        out << "e_alphabeta  = " << to_string(eab) << "\n";
        out << "inverse orientation:\n";
        out << "e_alpha      = " << to_string(ea_inv) << "\n";
        out << "e_alphabeta  = " << to_string(eab_inv) << "\n";
    }
    return kExitOk;
}

inline int run_verify(RangeSpec range, bool oracle, bool json, std::ostream& out,
                      std::ostream& err) {
    if (range.lo < 3 || range.hi > 20 || range.lo > range.hi) {
        err << "error: verify range must lie within 3..20 and be nonempty\n";
        return kExitUsage;
    }
    bool all_ok = true;
    auto rows = nlohmann::json::array();
    if (!json) {
        out << std::setw(4) << "n" << std::setw(10) << "<t_n,r_n>" << std::setw(16)
            << "<t_n-1,r_n-1>" << std::setw(8) << "total" << std::setw(8) << "|w_f|"
            << std::setw(8) << "|w_g|" << "\n";
    }
    for (int n = range.lo; n <= range.hi; ++n) {
        PairingReport r = full_pairing(n);
        all_ok = all_ok && r.total == -1;
        if (oracle && r.f_word_length <= OracleBounds{}.max_length && n - 2 <= OracleBounds{}.max_k) {
            auto occurrences = enumerate_occurrences(iterated_commutator(n - 2), {n - 2, true});
            Int sum = 0;
            for (const auto& o : occurrences) sum += o.sign;
            if (Int(-sum) != Int(static_cast<long>(r.t_n_r_n))) {
                err << "error: oracle enumeration disagrees at n = " << n << "\n";
                all_ok = false;
            }
        }
        if (json) {
            rows.push_back(r);
        } else {
            out << std::setw(4) << r.n << std::setw(10) << r.t_n_r_n << std::setw(16)
                << r.t_nm1_r_nm1 << std::setw(8) << r.total << std::setw(8)
                << r.f_word_length << std::setw(8) << r.g_word_length << "\n";
        }
    }
    if (json)
        out << rows.dump() << "\n";
    else
        out << (all_ok ? "all totals equal -1" : "VERIFICATION FAILED") << "\n";
    return all_ok ? kExitOk : kExitVerifyFailed;
}

inline int run_pairing(int n, bool json, std::ostream& out) {
    PairingReport r = full_pairing(n);
    if (json) {
        out << nlohmann::json(r).dump() << "\n";
    } else {
        auto [content_factor, b_factor] = pairing_t_nm1_factors(n);
        out << "n = " << r.n << "\n";
        out << "<t'_n, r'_n>         = " << r.t_n_r_n << "\n";
        out << "<t'_n-1, r'_n-1>     = " << r.t_nm1_r_nm1 << "  (factors: cont = "
            << content_factor.get_str() << ", b-exponent = " << b_factor << ")\n";
        out << "total                = " << r.total << "\n";
        out << "closed-surface total = " << closed_surface_pairing(n).get_str() << "\n";
        out << "|w_f| = " << r.f_word_length << ", |w_g| = " << r.g_word_length << "\n";
    }
    return kExitOk;
}

} // namespace detail

/// Runs the command line given the argv tail (no program name).
/// All user-facing failures map onto the exit-code contract above.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"word-content calculus on the free group F<a,b>"};
    app.require_subcommand(1);

    std::string word_expr, pattern_expr, twist_expr, morphism_expr, range_text;
    int max_degree = 8;
    int n = 0;
    bool json = false, oracle = false;

    auto* content_cmd =
        app.add_subcommand("content", "signed a^k / a^k b subword content of a word");
    content_cmd->add_option("word", word_expr, "word expression, e.g. \"[a,b] a^-2\"")
        ->required();
    content_cmd->add_option("pattern", pattern_expr, "pattern, e.g. \"a^2 b\"")->required();
    content_cmd->add_flag("--oracle", oracle, "also enumerate occurrences exhaustively");
    content_cmd->add_flag("--json", json, "emit JSON");

    auto* total_cmd = app.add_subcommand("total-content",
                                         "total content in Z<x,y>/(yx, y^2), both routes");
    total_cmd->add_option("word", word_expr, "word expression")->required();
    total_cmd->add_option("--max-degree", max_degree, "truncation order N")
        ->check(CLI::PositiveNumber);
    total_cmd->add_flag("--json", json, "emit JSON");

    auto* twist_cmd = app.add_subcommand("twist", "apply a Dehn-twist word to a morphism");
    twist_cmd->add_option("twists", twist_expr, "twist expression, e.g. \"[Da,Db]\"")
        ->required();
    twist_cmd
        ->add_option("morphism", morphism_expr,
                     "\"loop:<word>\", \"d_alpha-target:<word>\" or "
                     "\"d_alphabeta-source:<word>\"")
        ->required();
    twist_cmd->add_flag("--json", json, "emit JSON");

    auto* ewords_cmd =
        app.add_subcommand("e-words", "the groupoid words e_alpha, e_alphabeta for n");
    ewords_cmd->add_option("--n", n, "number of points n (>= 2)")->required();
    ewords_cmd->add_flag("--json", json, "emit JSON");

    auto* verify_cmd =
        app.add_subcommand("verify", "pairing table over a range of n; fails unless all totals are -1");
    verify_cmd->add_option("--n-range", range_text, "range A..B within 3..20 (default 3..12)");
    verify_cmd->add_option("--n", n, "single n, shorthand for --n-range n..n");
    verify_cmd->add_flag("--oracle", oracle, "cross-check small n by exhaustive enumeration");
    verify_cmd->add_flag("--json", json, "emit JSON");

    auto* pairing_cmd = app.add_subcommand("pairing", "full pairing report for one n");
    pairing_cmd->add_option("--n", n, "number of points n (>= 3)")->required();
    pairing_cmd->add_flag("--json", json, "emit JSON");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("subword");
    for (const auto& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (content_cmd->parsed())
            return detail::run_content(word_expr, pattern_expr, oracle, json, out);
        if (total_cmd->parsed())
            return detail::run_total_content(word_expr, max_degree, json, out);
        if (twist_cmd->parsed()) return detail::run_twist(twist_expr, morphism_expr, json, out);
        if (ewords_cmd->parsed()) {
            if (n < 2) {
                err << "error: e-words requires n >= 2\n";
                return kExitUsage;
            }
            return detail::run_e_words(n, json, out);
        }
        if (verify_cmd->parsed()) {
            detail::RangeSpec range;
            if (!range_text.empty())
                range = detail::parse_range(range_text);
            else if (n != 0)
                range = {n, n};
            return detail::run_verify(range, oracle, json, out, err);
        }
        if (pairing_cmd->parsed()) return detail::run_pairing(n, json, out);
    } catch (const parse_error& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const oracle_bound_error& e) {
        err << "oracle bound exceeded: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::logic_error& e) {
        err << "internal verification failure: " << e.what() << "\n";
        return kExitVerifyFailed;
    }
    return kExitUsage;
}

} // namespace subword::cli
