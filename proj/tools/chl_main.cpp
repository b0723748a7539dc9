// chl: evaluation and verification front end for the Legendre-family
// iterated-integral library. Subcommands: mzv, period, pair, verify.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "chenlegendre/barword.hpp"
#include "chenlegendre/config.hpp"
#include "chenlegendre/cycleword.hpp"
#include "chenlegendre/json_util.hpp"
#include "chenlegendre/mzv.hpp"
#include "chenlegendre/pairing.hpp"
#include "chenlegendre/path.hpp"
#include "chenlegendre/periods.hpp"
#include "chenlegendre/transport.hpp"
#include "chenlegendre/verify.hpp"

namespace {

using chl::Cplx;

constexpr int kExitPass = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

Cplx parse_complex_arg(const std::string& text) {
    auto comma = text.find(',');
    try {
        if (comma != std::string::npos)
            return {std::stod(text.substr(0, comma)), std::stod(text.substr(comma + 1))};
        if (!text.empty() && text.back() == 'i') {
            std::string body = text.substr(0, text.size() - 1);
            // Split at the last sign that is not an exponent sign.
            for (std::size_t k = body.size(); k-- > 1;) {
                if ((body[k] == '+' || body[k] == '-') &&
                    body[k - 1] != 'e' && body[k - 1] != 'E') {
                    double re = std::stod(body.substr(0, k));
                    std::string imtxt = body.substr(k);
                    double im = imtxt == "+" ? 1.0 : imtxt == "-" ? -1.0 : std::stod(imtxt);
                    return {re, im};
                }
            }
            return {0.0, body.empty() ? 1.0 : std::stod(body)};
        }
        std::size_t used = 0;
        double re = std::stod(text, &used);
        if (used != text.size()) throw chl::ParseError("trailing characters in '" + text + "'");
        return {re, 0.0};
    } catch (const std::invalid_argument&) {
        throw chl::ParseError("cannot parse complex number '" + text + "'");
    } catch (const std::out_of_range&) {
        throw chl::ParseError("number out of range in '" + text + "'");
    }
}

chl::MzvIndex parse_indices(const std::string& text) {
    chl::MzvIndex idx;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) throw chl::ParseError("empty entry in index list '" + text + "'");
        idx.k.push_back(std::stoi(part));
    }
    if (idx.k.empty()) throw chl::ParseError("empty index list");
    return idx;
}

nlohmann::ordered_json read_json_file(const std::string& name) {
    std::ifstream in(name);
    if (!in) throw chl::ParseError("cannot open '" + name + "'");
    try {
        nlohmann::ordered_json j;
        in >> j;
        return j;
    } catch (const nlohmann::json::parse_error& e) {
        throw chl::ParseError("JSON parse error in '" + name + "': " + e.what());
    }
}

chl::Path load_path(const std::string& spec) {
    if (spec == "dch" || spec == "loop0" || spec == "loop1") return chl::Path::named(spec);
    chl::Path p = chl::path_from_json(read_json_file(spec));
    return p;
}

void emit(const chl::ordered_json& record, const std::string& format) {
    if (format == "json") {
        std::cout << chl::dump_json_17(record) << "\n";
        return;
    }
    // Text mode: one "key = value" line per top-level field.
    for (auto it = record.begin(); it != record.end(); ++it) {
        if (it.value().is_string())
            std::cout << it.key() << " = " << it.value().get<std::string>() << "\n";
        else
            std::cout << it.key() << " = " << chl::dump_json_17(it.value(), -1) << "\n";
    }
}

chl::ordered_json complex_record(Cplx z) {
    chl::ordered_json j;
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

int cmd_mzv(const chl::Config& cfg, const std::string& indices, const std::string& method,
            const std::string& format) {
    chl::MzvIndex idx = parse_indices(indices);
    chl::ordered_json rec;
    rec["index"] = idx.k;
    rec["method"] = method;
    double series = 0.0, integral = 0.0;
    if (method == "series" || method == "both") {
        series = chl::mzv_series(idx, cfg.tol);
        rec["series"] = series;
    }
    if (method == "integral" || method == "both") {
        integral = chl::mzv_iterint(idx, cfg.tol, cfg.ode_tol, cfg.reglim_j0, cfg.reglim_j1);
        rec["integral"] = integral;
    }
    int code = kExitPass;
    if (method == "both") {
        double diff = std::abs(series - integral);
        rec["abs_diff"] = diff;
        rec["tol"] = cfg.tol;
        rec["pass"] = diff < cfg.tol;
        if (diff >= cfg.tol) code = kExitVerifyFail;
    }
    emit(rec, format);
    return code;
}

int cmd_period(const chl::Config& cfg, const std::string& lambda_text, const std::string& which,
               const std::string& via, const std::string& format) {
    Cplx lambda = parse_complex_arg(lambda_text);
    chl::ordered_json rec;
    rec["lambda"] = complex_record(lambda);
    rec["which"] = which;
    if (!via.empty()) {
        chl::Path path = load_path(via);
        if (std::abs(path.start() - Cplx(chl::kReferenceBasepoint)) > 1e-9)
            throw chl::DomainError("--via path must start at the reference basepoint 1/10");
        if (std::abs(path.end() - lambda) > 1e-9)
            throw chl::DomainError("--via path must end at the requested lambda");
        chl::PeriodFrame frame =
            chl::gm_transport(path, chl::reference_frame(cfg.ode_tol), cfg.ode_tol);
        rec["via"] = via;
        if (which == "frame") rec["frame"] = chl::frame_to_json(frame);
        if (which == "f0") rec["f0"] = complex_record(frame.m[0][0]);
        if (which == "f1") rec["f1"] = complex_record(frame.m[1][0]);
        if (which == "g0") rec["g0"] = complex_record(frame.m[0][1]);
        if (which == "g1") rec["g1"] = complex_record(frame.m[1][1]);
        emit(rec, format);
        return kExitPass;
    }
    if (which == "frame") {
        rec["frame"] = chl::frame_to_json(chl::period_values(lambda, cfg.tol));
    } else if (which == "f0") {
        rec["f0"] = complex_record(chl::period_f0(lambda, cfg.tol));
    } else if (which == "f1") {
        rec["f1"] = complex_record(chl::period_f1(lambda, cfg.tol));
    } else if (which == "g0") {
        rec["g0"] = complex_record(chl::period_g0(lambda, cfg.tol));
    } else if (which == "g1") {
        rec["g1"] = complex_record(chl::period_g1(lambda, cfg.tol));
    }
    emit(rec, format);
    return kExitPass;
}

int cmd_pair(const chl::Config& cfg, const std::string& word_file, const std::string& cycles_file,
             const std::string& path_spec, const std::string& format) {
    chl::BarAlgebra alg = cfg.algebra();
    chl::BarWord word = chl::barword_from_json(read_json_file(word_file), alg);
    chl::CycleWord cycles = chl::cycleword_from_json(read_json_file(cycles_file));
    chl::Path path = load_path(path_spec);
    Cplx value = chl::pair(word, cycles, path, cfg.pair_options(std::max(cfg.tol, 1e-9)));
    chl::ordered_json rec;
    rec["value"] = complex_record(value);
    emit(rec, format);
    return kExitPass;
}

int cmd_verify(const chl::Config& cfg, const std::string& suite, std::uint64_t seed,
               const std::string& format) {
    chl::SuiteResult result = chl::run_suite(suite, cfg, seed);
    if (format == "json") {
        std::cout << chl::dump_json_17(result.report) << "\n";
    } else {
        std::cout << result.name << ": " << (result.pass ? "PASS" : "FAIL") << "\n"
                  << chl::dump_json_17(result.report) << "\n";
    }
    return result.pass ? kExitPass : kExitVerifyFail;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Iterated integrals on the Legendre family of elliptic curves"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    chl::Config cfg; // defaults; CLI11 pulls CHL_* env values when flags absent
    std::string format = "text";
    app.add_option("--tol", cfg.tol, "comparison tolerance")->envname("CHL_TOL");
    app.add_option("--ode-tol", cfg.ode_tol, "transport/integration tolerance")
        ->envname("CHL_ODE_TOL");
    app.add_option("--reglim-j0", cfg.reglim_j0, "coarsest shrink sample 2^-j0")
        ->envname("CHL_REGLIM_J0");
    app.add_option("--reglim-j1", cfg.reglim_j1, "finest shrink sample 2^-j1")
        ->envname("CHL_REGLIM_J1");
    app.add_option("--sym-cutoff", cfg.sym_cutoff, "symmetric power cutoff M")
        ->envname("CHL_SYM_CUTOFF");
    app.add_option("--length-cutoff", cfg.length_cutoff, "word length cutoff N")
        ->envname("CHL_LENGTH_CUTOFF");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->envname("CHL_FORMAT");

    auto* mzv = app.add_subcommand("mzv", "multiple zeta values by series and/or integral");
    std::string indices, method = "both";
    mzv->add_option("--indices", indices, "index list k1,...,kd")->required();
    mzv->add_option("--method", method, "series | integral | both")
        ->check(CLI::IsMember({"series", "integral", "both"}));

    auto* period = app.add_subcommand("period", "Legendre period functions");
    std::string lambda_text, which = "frame", via;
    period->add_option("--lambda", lambda_text, "base point (re[,im] or a+bi)")->required();
    period->add_option("--which", which, "f0 | f1 | g0 | g1 | frame")
        ->check(CLI::IsMember({"f0", "f1", "g0", "g1", "frame"}));
    period->add_option("--via", via, "path JSON from the reference basepoint (for out-of-zone lambda)");

    auto* pairc = app.add_subcommand("pair", "evaluate <bar word, cycle word (x) path>");
    std::string word_file, cycles_file, path_spec = "dch";
    pairc->add_option("--word", word_file, "bar word JSON file")->required();
    pairc->add_option("--cycles", cycles_file, "cycle word JSON file")->required();
    pairc->add_option("--path", path_spec, "named path (dch) or path JSON file");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    std::uint64_t seed = 1;
    verify->add_option("suite", suite, "hopf | shuffle | dual | homotopy | augmentation | gm | monodromy")
        ->required()
        ->check(CLI::IsMember(chl::suite_names()));
    verify->add_option("--seed", seed, "seed for the randomized cases");

    try {
        app.parse(argc, argv);
        cfg.validate();
        if (mzv->parsed()) return cmd_mzv(cfg, indices, method, format);
        if (period->parsed()) return cmd_period(cfg, lambda_text, which, via, format);
        if (pairc->parsed()) return cmd_pair(cfg, word_file, cycles_file, path_spec, format);
        if (verify->parsed()) return cmd_verify(cfg, suite, seed, format);
        return kExitUsage;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitPass : kExitUsage;
    } catch (const chl::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << "\n";
        return kExitUsage;
    }
}
