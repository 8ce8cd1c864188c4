#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"

#include "aperylab/cache.hpp"
#include "aperylab/constants.hpp"
#include "aperylab/deresonate.hpp"
#include "aperylab/limits.hpp"
#include "aperylab/modular.hpp"
#include "aperylab/monodromy.hpp"
#include "aperylab/selftest.hpp"
#include "aperylab/sequences.hpp"
#include "aperylab/special.hpp"

namespace {

using namespace aperylab;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitInput = 2;
constexpr int kExitPrecision = 3;

nlohmann::json seqpair_to_json(const SeqPair& pair) {
    nlohmann::json a = nlohmann::json::array(), b = nlohmann::json::array();
    for (const Rat& x : pair.a) a.push_back(x.str());
    for (const Rat& x : pair.b) b.push_back(x.str());
    return {{"variety", pair.variety},
            {"a", a},
            {"b", b},
            {"normalization",
             {{"a0", pair.normalization.a0.str()},
              {"b_first_index", pair.normalization.b_first_index},
              {"b_first_value", pair.normalization.b_first_value.str()}}}};
}

SeqPair seqpair_from_json(const nlohmann::json& j) {
    SeqPair pair;
    pair.variety = j.at("variety").get<std::string>();
    for (const auto& x : j.at("a")) pair.a.emplace_back(x.get<std::string>());
    for (const auto& x : j.at("b")) pair.b.emplace_back(x.get<std::string>());
    pair.normalization.a0 = Rat(j.at("normalization").at("a0").get<std::string>());
    pair.normalization.b_first_index = j.at("normalization").at("b_first_index").get<long>();
    pair.normalization.b_first_value = Rat(j.at("normalization").at("b_first_value").get<std::string>());
    return pair;
}

SeqPair cached_apery_pair(const std::string& variety, long n_max, const Cache* cache) {
    if (cache) {
        CacheKey key{"seqpair", variety, n_max};
        if (auto payload = cache->load(key)) return seqpair_from_json(*payload);
        SeqPair pair = apery_pair(variety, n_max);
        cache->store(key, seqpair_to_json(pair));
        return pair;
    }
    return apery_pair(variety, n_max);
}

nlohmann::json limit_to_json(const ApproxLimit& lim) {
    return {{"value", lim.value.str()},
            {"prec", lim.value.digits()},
            {"error_estimate", lim.error_estimate.str(3)},
            {"n_used", lim.n_used},
            {"method", lim.method == LimitMethod::aitken ? "aitken" : "plain_ratio"}};
}

// Recurrence file: shifts + valid_from as in Recurrence JSON, plus a
// normalization block giving the initial values of both solutions.
nlohmann::json recurrence_file_for(const std::string& variety) {
    Recurrence rec = op_to_recurrence(mukai_operator(variety));
    nlohmann::json j = rec.to_json();
    j["normalization"] = {{"a_initial", {"1"}}, {"b_initial", {"0", "1"}}, {"b_valid_from", 2}};
    j["variety"] = variety;
    return j;
}

int cmd_constants(const std::string& variety, const RunConfig& cfg, const Cache* cache) {
    std::vector<std::string> vars;
    if (variety == "all") vars = mukai_varieties();
    else vars = {variety};
    nlohmann::json rows = nlohmann::json::array();
    bool all_ok = true;
    for (const std::string& v : vars) {
        SeqPair pair = cached_apery_pair(v, cfg.terms, cache);
        ApproxLimit lim = apery_limit(pair, cfg.digits);
        Real oracle = v == "V10"   ? zeta_int(2, cfg.digits) / 10
                      : v == "V12" ? zeta_int(3, cfg.digits) / 6
                      : v == "V14" ? zeta_int(2, cfg.digits) / 7
                      : v == "V16" ? zeta_int(3, cfg.digits) * 7 / 32
                                   : chi3_L(3, cfg.digits) / 3;
        long agree = agreed_digits(lim.value, oracle);
        bool ok = agree >= cfg.digits - 10;
        all_ok = all_ok && ok;
        rows.push_back({{"variety", v},
                        {"limit", limit_to_json(lim)},
                        {"oracle", oracle.str()},
                        {"agreed_digits", agree},
                        {"status", ok ? "ok" : "mismatch"}});
        if (!cfg.json_output)
            std::cout << v << ": " << lim.value.str(std::min(cfg.digits, 30L)) << "  vs oracle "
                      << oracle.str(std::min(cfg.digits, 30L)) << "  (" << agree << " digits, "
                      << (ok ? "ok" : "MISMATCH") << ")\n";
    }
    if (cfg.json_output) std::cout << rows.dump(1) << "\n";
    return all_ok ? kExitOk : kExitMismatch;
}

int cmd_limit(const std::string& file, const RunConfig& cfg) {
    std::ifstream in(file);
    if (!in) throw input_error("cannot open " + file);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& ex) {
        throw input_error(std::string("malformed recurrence file: ") + ex.what());
    }
    Recurrence rec = Recurrence::from_json(j);
    std::vector<Rat> a_init, b_init;
    long b_valid_from = rec.valid_from();
    if (j.contains("normalization")) {
        for (const auto& x : j["normalization"].value("a_initial", nlohmann::json::array()))
            a_init.emplace_back(x.get<std::string>());
        for (const auto& x : j["normalization"].value("b_initial", nlohmann::json::array()))
            b_init.emplace_back(x.get<std::string>());
        b_valid_from = j["normalization"].value("b_valid_from", b_valid_from);
    }
    if (a_init.empty()) a_init = {Rat(1)};
    if (b_init.empty()) b_init = {Rat(0), Rat(1)};

    SeqPair pair;
    pair.variety = j.value("variety", std::string("recurrence"));
    pair.a = solve(rec, a_init, cfg.terms);
    pair.b = solve(rec.with_valid_from(std::max(b_valid_from, rec.valid_from())), b_init, cfg.terms);
    long bfi = 0;
    for (size_t i = 0; i < pair.b.size(); ++i)
        if (!pair.b[i].is_zero()) {
            bfi = static_cast<long>(i);
            break;
        }
    pair.normalization = {pair.a.empty() ? Rat(1) : pair.a[0], bfi,
                          pair.b.empty() ? Rat(0) : pair.b[static_cast<size_t>(bfi)]};
    ApproxLimit lim = apery_limit(pair, cfg.digits);
    std::cout << limit_to_json(lim).dump(1) << "\n";
    return kExitOk;
}

int cmd_export(const std::string& variety, const std::string& out_path) {
    nlohmann::json j = recurrence_file_for(variety);
    if (out_path.empty()) {
        std::cout << j.dump(1) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw input_error("cannot write " + out_path);
        out << j.dump(1) << "\n";
    }
    return kExitOk;
}

int cmd_grassmann(long N, const RunConfig& cfg) {
    long P = std::max(12L, std::min(cfg.digits / 2, 25L));
    long n_max = std::max(20L, std::min(cfg.terms, 60L));
    ApproxLimit lim = grassmann_apery_limit(N, n_max, P);
    Real pi = pi_real(P + 10);
    Real target = pi * pi / (N * N * (N + 1));
    long agree = agreed_digits(lim.value.to_digits(P + 10), target);
    bool ok = agree >= P - 2;
    nlohmann::json j{{"N", N},
                     {"limit", limit_to_json(lim)},
                     {"target", target.str()},
                     {"agreed_digits", agree},
                     {"status", ok ? "ok" : "mismatch"}};
    if (cfg.json_output) std::cout << j.dump(1) << "\n";
    else
        std::cout << "G(2," << N << "): " << lim.value.str() << "  vs pi^2/(N^2(N+1)) = "
                  << target.str(P) << "  (" << agree << " digits, " << (ok ? "ok" : "MISMATCH")
                  << ")\n";
    return ok ? kExitOk : kExitMismatch;
}

int cmd_modular(const std::string& variety, long order, const RunConfig& cfg) {
    IdentityReport phi = verify_phi_identity(variety, order);
    IdentityReport ratio = verify_ratio_identity(variety, order);
    nlohmann::json j = nlohmann::json::array({phi.to_json(), ratio.to_json()});
    if (cfg.json_output) std::cout << j.dump(1) << "\n";
    else {
        std::cout << variety << " phi identity through q^" << order << ": "
                  << (phi.ok ? "ok" : "MISMATCH") << "\n";
        std::cout << variety << " ratio identity through q^" << order << ": "
                  << (ratio.ok ? "ok" : "MISMATCH") << "\n";
    }
    return phi.ok && ratio.ok ? kExitOk : kExitMismatch;
}

int cmd_monodromy(long N, const Rat& e, const Rat& u, const RunConfig& cfg) {
    Real er(e, cfg.digits + 25), ur(u, cfg.digits + 25);
    HypFrame frame = standard_frame(N, er, ur, cfg.digits);
    WedgeReport wedge = wedge_coefficient_identity(frame, er, ur, cfg.digits);
    EigenReport eig = infinity_monodromy_eigencheck(frame, cfg.digits);
    nlohmann::json j{{"wedge", wedge.to_json(er, ur)}, {"eigencheck", eig.to_json(er, ur)}};
    if (cfg.json_output) std::cout << j.dump(1) << "\n";
    else {
        std::cout << "wedge ratio " << wedge.kappa_ratio.str(20) << " vs " << wedge.target.str(20)
                  << " (" << (wedge.ok ? "ok" : "MISMATCH") << ")\n";
        std::cout << "eigencheck: " << (eig.ok ? "ordering found" : "NO ordering") << "\n";
    }
    return wedge.ok && eig.ok ? kExitOk : kExitMismatch;
}

int cmd_selftest(const RunConfig& cfg) {
    std::vector<CriterionResult> results = run_acceptance(cfg, &std::cout);
    bool all = true;
    for (const auto& r : results) all = all && r.pass;
    std::cout << (all ? "selftest: all criteria passed\n" : "selftest: FAILURES present\n");
    return all ? kExitOk : kExitMismatch;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Apery limits of quantum recurrences: computation and verification"};
    app.require_subcommand(1);

    RunConfig cfg;
    std::string cache_dir;
    app.add_option("--digits", cfg.digits, "working precision in decimal digits")
        ->check(CLI::Range(10L, 100000L));
    app.add_option("--terms", cfg.terms, "number of recurrence terms")
        ->check(CLI::Range(10L, 1000000L));
    app.add_option("--cache-dir", cache_dir, "sequence cache directory")
        ->envname("APERYLAB_CACHE_DIR");
    app.add_flag("--json", cfg.json_output, "JSON output");
    app.add_option("--seed", cfg.seed, "seed for randomized suites");

    std::string variety = "all";
    long N = 5;
    long order = 20;
    std::string rec_file, out_path;
    std::string e_str = "1/8", u_str = "1/12";

    CLI::App* constants = app.add_subcommand("constants", "Apery constants of the Mukai varieties");
    constants->add_option("--variety", variety, "V10..V18 or all");

    CLI::App* limit = app.add_subcommand("limit", "Apery limit of a recurrence file");
    limit->add_option("file", rec_file, "recurrence JSON")->required();

    CLI::App* grassmann = app.add_subcommand("grassmann", "G(2,N) Apery limit by deresonation");
    grassmann->add_option("--n", N, "N >= 5")->check(CLI::Range(5L, 12L));

    CLI::App* modular = app.add_subcommand("modular", "coefficientwise modular identities");
    modular->add_option("--variety", variety, "V12, V16 or V18");
    modular->add_option("--order", order, "q-power to check through");

    CLI::App* monodromy = app.add_subcommand("monodromy", "Gram/reflection/wedge layer");
    monodromy->add_option("--n", N, "N >= 5")->check(CLI::Range(5L, 12L));
    monodromy->add_option("--e", e_str, "rational perturbation e");
    monodromy->add_option("--u", u_str, "rational perturbation u");

    CLI::App* selftest = app.add_subcommand("selftest", "run the acceptance suite");
    CLI::App* exportc = app.add_subcommand("export", "write a variety's recurrence JSON");
    exportc->add_option("--variety", variety, "V10..V18");
    exportc->add_option("--out", out_path, "output file (stdout when omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        std::optional<Cache> cache;
        if (!cache_dir.empty()) cache.emplace(cache_dir);
        cfg.cache_dir = cache_dir;
        if (constants->parsed())
            return cmd_constants(variety, cfg, cache ? &*cache : nullptr);
        if (limit->parsed()) return cmd_limit(rec_file, cfg);
        if (grassmann->parsed()) return cmd_grassmann(N, cfg);
        if (modular->parsed()) {
            if (variety == "all") variety = "V12";
            return cmd_modular(variety, order, cfg);
        }
        if (monodromy->parsed()) return cmd_monodromy(N, Rat(e_str), Rat(u_str), cfg);
        if (selftest->parsed()) return cmd_selftest(cfg);
        if (exportc->parsed()) {
            if (variety == "all") variety = "V12";
            return cmd_export(variety, out_path);
        }
    } catch (const input_error& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return kExitInput;
    } catch (const precision_error& ex) {
        std::cerr << "precision error: " << ex.what() << "\n";
        return kExitPrecision;
    } catch (const nonconvergence_error& ex) {
        std::cerr << "nonconvergence: " << ex.what() << "\n";
        return kExitPrecision;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitInput;
    }
    return kExitInput;
}
