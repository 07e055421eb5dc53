// Command-line front end.
//
// Subcommands: charts, verdict, surface, classify, quotient, quotient-blowup.
// Exit codes: 0 success; 1 --expect mismatch; 2 parse/validation errors;
// 3 unsupported-shape errors; 4 overflow, internal inconsistency, or any
// other failure.  Diagnostics go to stderr, reports to stdout.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "wbu/classify.hpp"
#include "wbu/errors.hpp"
#include "wbu/report_json.hpp"
#include "wbu/surface.hpp"
#include "wbu/terminality.hpp"

namespace {

using namespace wbu;

// Prints the report, then compares against the --expect fixture when given:
// parsed-JSON equality in json format (whitespace/ordering insensitive),
// byte equality in text format.
int emit(const std::string& produced, const std::string& expect_path, bool as_json) {
    std::cout << produced;
    if (expect_path.empty()) return 0;
    std::ifstream in(expect_path, std::ios::binary);
    if (!in) throw InvalidInputError("cannot read expected fixture: " + expect_path);
    std::ostringstream buf;
    buf << in.rdbuf();
    std::string expected = buf.str();
    bool match;
    if (as_json) {
        nlohmann::json lhs = nlohmann::json::parse(produced, nullptr, false);
        nlohmann::json rhs = nlohmann::json::parse(expected, nullptr, false);
        match = !lhs.is_discarded() && !rhs.is_discarded() && lhs == rhs;
    } else {
        match = produced == expected;
    }
    if (!match) {
        std::cerr << "output does not match expected fixture: " << expect_path << "\n";
        return 1;
    }
    return 0;
}

int run(int argc, char** argv) {
    CLI::App app{"weighted blow-up analyzer for cA hypersurface germs xy + f(z,u)"};
    app.require_subcommand(1);

    std::string germ_text;
    std::string weights_text;
    std::string format = "text";
    std::string expect_path;
    std::string explain_text;
    std::string quotient_literal;
    std::string test_kind = "auto";
    i64 bound = 30;
    i64 min_disc = 0;
    i64 max_disc = -1;

    auto add_common = [&](CLI::App* cmd, bool with_weights) {
        cmd->add_option("--germ", germ_text, "germ polynomial, e.g. \"xy + z^3 + u^4\"")
            ->required();
        if (with_weights)
            cmd->add_option("--weights", weights_text, "blow-up weights a,b,c,d")->required();
        cmd->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
        cmd->add_option("--expect", expect_path,
                        "compare the report against this fixture (exit 1 on mismatch)");
    };

    CLI::App* charts_cmd =
        app.add_subcommand("charts", "render the four affine charts of the weighted blow-up");
    add_common(charts_cmd, true);

    CLI::App* verdict_cmd = app.add_subcommand(
        "verdict", "accept/reject one weight vector as a terminal extraction");
    add_common(verdict_cmd, true);

    CLI::App* surface_cmd =
        app.add_subcommand("surface", "invariants of the exceptional surface E");
    add_common(surface_cmd, true);

    CLI::App* classify_cmd = app.add_subcommand(
        "classify", "sweep all weight vectors up to a bound and report the extractions");
    add_common(classify_cmd, false);
    classify_cmd->add_option("--bound", bound, "enumeration bound (default 30)")
        ->check(CLI::PositiveNumber);
    classify_cmd->add_option("--min-discrepancy", min_disc,
                             "only list accepted vectors with discrepancy >= this");
    classify_cmd->add_option("--max-discrepancy", max_disc,
                             "only list accepted vectors with discrepancy <= this");
    classify_cmd->add_option("--explain", explain_text,
                             "print the full verdict for one weight vector instead of sweeping");

    CLI::App* quotient_cmd = app.add_subcommand(
        "quotient", "analyze a cyclic quotient literal 1/r(w1,...) by arity");
    quotient_cmd->add_option("literal", quotient_literal, "e.g. \"1/3(1,1,1)\"")->required();
    quotient_cmd
        ->add_option("--test", test_kind,
                     "analysis to run: auto (by arity), duval, terminal, hyperquotient")
        ->check(CLI::IsMember({"auto", "duval", "terminal", "hyperquotient"}));

    CLI::App* qblow_cmd = app.add_subcommand(
        "quotient-blowup", "ambient charts of the weighted blow-up of C^n / Z_m(a1,...,an)");
    qblow_cmd->add_option("literal", quotient_literal, "e.g. \"1/2(1,1,1)\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        // CLI11 returns 0 for --help/--version; everything else is a usage error.
        return code == 0 ? 0 : 2;
    }

    bool as_json = format == "json";

    if (charts_cmd->parsed()) {
        GermModel g = parse_germ(germ_text);
        WeightVector w = parse_weights(weights_text);
        if (as_json) return emit(to_stable_string(charts_json(g, w)), expect_path, true);
        std::ostringstream out;
        out << "germ: " << render_germ(g) << '\n';
        out << "weights: " << render_weights(w) << '\n';
        out << "weighted multiplicity: " << weighted_mult(g, w) << '\n';
        out << "discrepancy: " << discrepancy(g, w) << '\n';
        for (const Chart& chart : make_charts(g, w)) out << render_chart(chart) << '\n';
        return emit(out.str(), expect_path, false);
    }

    if (verdict_cmd->parsed()) {
        GermModel g = parse_germ(germ_text);
        WeightVector w = parse_weights(weights_text);
        BlowupVerdict v = blowup_verdict(g, w);
        std::string text =
            as_json ? to_stable_string(verdict_json(v, g)) : render_verdict(v, g);
        return emit(text, expect_path, as_json);
    }

    if (surface_cmd->parsed()) {
        GermModel g = parse_germ(germ_text);
        WeightVector w = parse_weights(weights_text);
        SurfaceReport rep = surface_report(g, w);
        std::string text = as_json ? to_stable_string(surface_json(rep, g, w))
                                   : render_surface_report(rep, g, w);
        return emit(text, expect_path, as_json);
    }

    if (classify_cmd->parsed()) {
        GermModel g = parse_germ(germ_text);
        if (!explain_text.empty()) {
            BlowupVerdict v = blowup_verdict(g, parse_weights(explain_text));
            std::string text =
                as_json ? to_stable_string(verdict_json(v, g)) : render_verdict(v, g);
            return emit(text, expect_path, as_json);
        }
        ClassificationReport rep = classify_extractions(g, bound);
        std::string text = as_json
                               ? to_stable_string(classification_json(rep, min_disc, max_disc))
                               : render_classification(rep, min_disc, max_disc);
        return emit(text, expect_path, as_json);
    }

    if (quotient_cmd->parsed()) {
        CyclicQuotient q = parse_quotient(quotient_literal);
        std::string kind = test_kind;
        if (kind == "auto")
            kind = q.weights.size() == 2   ? "duval"
                   : q.weights.size() == 3 ? "terminal"
                                           : "hyperquotient";
        std::ostringstream out;
        out << "quotient: " << render_quotient(q) << '\n';
        if (kind == "duval") {
            DuvalResult d = duval_of_surface_quotient(q);
            out << "type: " << d.label << '\n';
            out << "chain: [";
            for (size_t i = 0; i < d.chain.size(); ++i) out << (i ? "," : "") << d.chain[i];
            out << "]\n";
            out << "discrepancies: [";
            for (size_t i = 0; i < d.discrepancies.size(); ++i)
                out << (i ? "," : "") << d.discrepancies[i].str();
            out << "]\n";
        } else if (kind == "terminal") {
            out << "isolated: " << (is_isolated_action(q) ? "true" : "false") << '\n';
            out << "terminal: " << (is_terminal_quotient(q) ? "true" : "false") << '\n';
        } else {
            // Bare literals carry no residual equation, so the equation weight
            // defaults to w1 + w2 and only the fractional screen applies.
            if (!q.equation_weight)
                q = make_quotient(q.order, q.weights, q.weights[0] + q.weights[1]);
            out << "equation weight: " << *q.equation_weight << '\n';
            out << "terminal (fractional screen): "
                << (is_terminal_hyperquotient(q) ? "true" : "false") << '\n';
        }
        std::cout << out.str();
        return 0;
    }

    if (qblow_cmd->parsed()) {
        CyclicQuotient q = parse_quotient(quotient_literal);
        std::ostringstream out;
        for (const AmbientChart& chart : quotient_blowup_charts(q.order, q.weights))
            out << render_ambient_chart(chart) << '\n';
        std::cout << out.str();
        return 0;
    }

    return 2;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const wbu::ParseError& e) {
        std::cerr << "parse error: " << e.what();
        if (e.position() >= 0) std::cerr << " (at position " << e.position() << ")";
        std::cerr << "\n";
        return 2;
    } catch (const wbu::InvalidInputError& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const wbu::UnsupportedShapeError& e) {
        std::cerr << "unsupported shape: " << e.what() << "\n";
        return 3;
    } catch (const wbu::OverflowError& e) {
        std::cerr << "overflow: " << e.what() << "\n";
        return 4;
    } catch (const wbu::InconsistencyError& e) {
        std::cerr << "internal inconsistency: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
}
