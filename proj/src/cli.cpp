#include "kslope/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "kslope/model_io.hpp"
#include "kslope/oracle.hpp"
#include "kslope/slope.hpp"
#include "kslope/toric.hpp"

namespace kslope::cli {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::string coeff_list(const UniPoly& p, int degree) {
    std::string s = "[";
    for (int k = 0; k <= degree; ++k) {
        if (k) s += ", ";
        s += p.coeff(k).to_string();
    }
    return s + "]";
}

std::string boundary_text(const Boundary& b) {
    if (b.exact()) return b.lo.to_string();
    return "root in [" + b.lo.to_string() + ", " + b.hi.to_string() + "]";
}

char sign_char(int s) { return s > 0 ? '+' : s < 0 ? '-' : '0'; }

void report_diagnostics(const Diagnostics& d, std::ostream& err) {
    if (!d.empty()) err << d.to_string();
    if (d.has_errors()) throw UsageError("model failed validation");
}

// The single-polarization table behind any model kind.
IntersectionTable table_of(const ModelDocument& doc, std::ostream& err) {
    if (const auto* t = std::get_if<IntersectionTable>(&doc)) {
        report_diagnostics(validate(*t), err);
        return *t;
    }
    if (const auto* m = std::get_if<MixedTable>(&doc)) {
        report_diagnostics(validate(*m), err);
        return m->base_table();
    }
    const auto& model = std::get<toric::ToricModel>(doc);
    report_diagnostics(toric::validate_model(model), err);
    return toric::export_table(model);
}

void check_c(const Rational& c, const Rational& eps) {
    if (c.sign() <= 0 || c > eps)
        throw UsageError("c = " + c.to_string() + " is outside (0, " + eps.to_string() + "]");
}

void analyze(const CommandRequest& req, const ModelDocument& doc, std::ostream& out, std::ostream& err) {
    const IntersectionTable table = table_of(doc, err);
    const AlphaPair alpha = alpha_polys(table);
    if (req.c) check_c(*req.c, alpha.epsilon);
    const SlopeReport rep = stability_scan(alpha, {}, req.width);

    out << "model: " << model_label(doc) << "\n";
    out << "n: " << alpha.n << "\n";
    out << "epsilon: " << alpha.epsilon << "\n";
    out << "alpha0: " << coeff_list(alpha.alpha0, alpha.n) << "\n";
    out << "alpha1: " << coeff_list(alpha.alpha1, alpha.n - 1) << "\n";
    out << "mu = " << rep.mu << "\n";
    out << "Q: " << coeff_list(rep.q, alpha.n + 1) << "\n";
    out << "DF_norm: " << coeff_list(rep.df_norm, alpha.n + 1) << "\n";
    if (rep.flat) {
        out << "Q is identically zero (flat)\n";
    } else {
        out << "roots of Q in (0, epsilon]:";
        if (rep.roots.empty()) out << " none";
        out << "\n";
        for (const auto& r : rep.roots) {
            if (r.exact())
                out << "  " << r.lo << "\n";
            else
                out << "  [" << r.lo << ", " << r.hi << "] ~ " << ((r.lo + r.hi) * Rational(1, 2)).to_decimal(8)
                    << "\n";
        }
        out << "destabilizing:";
        if (rep.destabilizing.empty()) out << " none";
        out << "\n";
        for (const auto& d : rep.destabilizing)
            out << "  (" << boundary_text(d.lower) << ", " << boundary_text(d.upper) << (d.upper_closed ? "]" : ")")
                << "\n";
    }
    if (req.c) {
        const Rational& c = *req.c;
        out << "c = " << c << "\n";
        out << "mu_c = " << mu_c(alpha, c) << "\n";
        out << "DF_norm(c) = " << rep.df_norm(c) << "\n";
        out << "verdict " << to_string(rep.verdict(c)) << "\n";
    }
}

void scan(const CommandRequest& req, const ModelDocument& doc, std::ostream& out, std::ostream& err) {
    const AlphaPair alpha = alpha_polys(table_of(doc, err));
    const Rational mu = slope_mu(alpha);
    const UniPoly q = df_numerator(alpha).q;
    out << "c,mu,mu_c,Q_sign\n";
    for (int i = 1; i <= req.steps; ++i) {
        const Rational c = alpha.epsilon * Rational(i, req.steps);
        out << c << "," << mu << "," << mu_c(alpha, c) << "," << sign_char(q(c).sign()) << "\n";
    }
}

int verify(const CommandRequest& req, const ModelDocument& doc, std::ostream& out, std::ostream& err) {
    const auto* model = std::get_if<toric::ToricModel>(&doc);
    if (!model) throw UsageError("oracle requires toric realization");
    const Rational eps = table_of(doc, err).epsilon;
    std::vector<Rational> cs;
    if (req.c) {
        check_c(*req.c, eps);
        cs.push_back(*req.c);
    } else {
        for (int i = 1; i <= 4; ++i) cs.push_back(eps * Rational(i, 4));
    }
    out << "model,c,df_oracle,df_predicted,sign_match,exact_match,m_max\n";
    bool all_signs = true;
    for (const auto& c : cs) {
        const VerificationRecord r = verify_df_formula(*model, c, req.max_m);
        all_signs = all_signs && r.sign_match;
        out << r.label << "," << r.c << "," << r.df_oracle << "," << r.df_predicted << ","
            << (r.sign_match ? "true" : "false") << "," << (r.exact_match ? "true" : "false") << ","
            << r.m_used.back() << "\n";
    }
    return all_signs ? ok : verification_failure;
}

void limit(const CommandRequest& req, const ModelDocument& doc, std::ostream& out, std::ostream& err) {
    MixedTable mixed;
    if (const auto* m = std::get_if<MixedTable>(&doc)) {
        report_diagnostics(validate(*m), err);
        mixed = *m;
    } else if (const auto* t = std::get_if<toric::ToricModel>(&doc)) {
        if (!t->H) throw UsageError("limit needs a toric model with an ample class H");
        report_diagnostics(toric::validate_model(*t), err);
        mixed = toric::export_mixed_table(*t);
    } else {
        throw UsageError("limit needs a mixed table or a toric model with H");
    }
    const Rational c = req.c ? *req.c : mixed.epsilon * Rational(1, 2);
    check_c(c, mixed.epsilon);
    const PerturbationResult res = perturbation_limit(mixed, c, req.eps);
    out << "# model " << mixed.label << ", c = " << c << "\n";
    out << "eps,mu_minus_mu_c\n";
    for (std::size_t i = 0; i < req.eps.size(); ++i) out << req.eps[i] << "," << res.values[i] << "\n";
    out << "0," << res.limit << "\n";
}

void export_table(const CommandRequest& req, const ModelDocument& doc, std::ostream& out, std::ostream& err) {
    const auto* model = std::get_if<toric::ToricModel>(&doc);
    if (!model) throw UsageError("export-table needs a toric model");
    report_diagnostics(toric::validate_model(*model), err);
    if (req.mixed) {
        if (!model->H) throw UsageError("--mixed needs a toric model with an ample class H");
        out << serialize_model(toric::export_mixed_table(*model));
    } else {
        out << serialize_model(toric::export_table(*model));
    }
}

void check_request(const CommandRequest& req) {
    if (req.steps < 1) throw UsageError("--steps must be at least 1");
    if (req.max_m < 1) throw UsageError("--max-m must be at least 1");
    if (req.width.sign() <= 0) throw UsageError("--width must be positive");
    if (req.c && req.c->sign() <= 0) throw UsageError("--c must be positive");
    for (const auto& e : req.eps)
        if (e.sign() <= 0) throw UsageError("--eps values must be positive");
    if (req.mixed && req.command != Command::export_table) throw UsageError("--mixed only applies to export-table");
}

} // namespace

std::optional<Command> parse_command(std::string_view name) {
    if (name == "analyze") return Command::analyze;
    if (name == "scan") return Command::scan;
    if (name == "verify") return Command::verify;
    if (name == "limit") return Command::limit;
    if (name == "export-table") return Command::export_table;
    return std::nullopt;
}

const char* command_name(Command c) {
    switch (c) {
    case Command::analyze: return "analyze";
    case Command::scan: return "scan";
    case Command::verify: return "verify";
    case Command::limit: return "limit";
    case Command::export_table: return "export-table";
    }
    return "?";
}

Rational parse_width(std::string_view text) {
    if (text.starts_with("2^-")) {
        const std::string digits(text.substr(3));
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos || digits.size() > 4)
            throw std::invalid_argument("malformed width '" + std::string(text) + "'");
        return pow2_neg(std::stoi(digits));
    }
    const Rational w = Rational::parse(text);
    if (w.sign() <= 0) throw std::invalid_argument("width must be positive");
    return w;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
    std::vector<Rational> out;
    if (text.empty()) return out;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        out.push_back(Rational::parse(text.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

int run(const CommandRequest& req, std::ostream& out, std::ostream& err) {
    try {
        check_request(req);
        const ModelDocument doc = load_model_file(req.model);
        std::ostringstream buffer;
        int code = ok;
        switch (req.command) {
        case Command::analyze: analyze(req, doc, buffer, err); break;
        case Command::scan: scan(req, doc, buffer, err); break;
        case Command::verify: code = verify(req, doc, buffer, err); break;
        case Command::limit: limit(req, doc, buffer, err); break;
        case Command::export_table: export_table(req, doc, buffer, err); break;
        }
        if (req.out) {
            std::ofstream file(*req.out, std::ios::binary);
            if (!file) throw UsageError("cannot write " + req.out->string());
            file << buffer.str();
        } else {
            out << buffer.str();
        }
        if (code == verification_failure) err << "error: sign mismatch between oracle and slope engine\n";
        return code;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return validation_error;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return validation_error;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return validation_error;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return validation_error;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return internal_error;
    }
}

} // namespace kslope::cli
