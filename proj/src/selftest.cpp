#include "aperylab/selftest.hpp"

#include <chrono>
#include <functional>
#include <ostream>
#include <random>
#include <sstream>

#include "aperylab/constants.hpp"
#include "aperylab/deresonate.hpp"
#include "aperylab/frobenius.hpp"
#include "aperylab/limits.hpp"
#include "aperylab/modular.hpp"
#include "aperylab/monodromy.hpp"
#include "aperylab/sequences.hpp"
#include "aperylab/special.hpp"

namespace aperylab {

namespace {

struct Harness {
    std::vector<CriterionResult> results;
    std::ostream* progress;

    void run(int id, const std::string& name, const std::function<std::string()>& body) {
        CriterionResult r;
        r.id = id;
        r.name = name;
        auto t0 = std::chrono::steady_clock::now();
        try {
            r.detail = body();
            r.pass = true;
        } catch (const std::exception& ex) {
            r.pass = false;
            r.detail = ex.what();
        }
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (progress) {
            std::ostringstream line;
            line << (r.pass ? "[PASS] " : "[FAIL] ") << "criterion " << r.id << ": " << r.name
                 << " (" << r.detail << ") [" << r.seconds << " s]";
            *progress << line.str() << std::endl;
        }
        results.push_back(std::move(r));
    }
};

struct Check {
    static void that(bool cond, const std::string& msg) {
        if (!cond) throw error(msg);
    }
};

Real mukai_constant_oracle(const std::string& v, long P) {
    if (v == "V10") return zeta_int(2, P) / 10;
    if (v == "V12") return zeta_int(3, P) / 6;
    if (v == "V14") return zeta_int(2, P) / 7;
    if (v == "V16") return zeta_int(3, P) * 7 / 32;
    if (v == "V18") return chi3_L(3, P) / 3;
    throw input_error("no Apery-constant oracle for " + v);
}

} // namespace

std::vector<CriterionResult> run_acceptance(const RunConfig& cfg, std::ostream* progress) {
    Harness h;
    h.progress = progress;
    const long D = cfg.digits;

    h.run(1, "zeta(3) recurrence equals binomial-sum oracle, n <= 50", [&] {
        SeqPair rec = apery_pair("V12", 50);
        SeqPair oracle = apery_binomial_oracle(50, InnerExponent::cubic);
        for (long n = 0; n <= 50; ++n) {
            Check::that(rec.a[static_cast<size_t>(n)] == oracle.a[static_cast<size_t>(n)],
                        "a mismatch at n=" + std::to_string(n));
            Check::that(rec.b[static_cast<size_t>(n)] == oracle.b[static_cast<size_t>(n)],
                        "b mismatch at n=" + std::to_string(n));
        }
        return "exact through n=50";
    });

    h.run(2, "five Apery constants at terms=400 to >= 40 digits", [&] {
        std::ostringstream detail;
        for (const std::string& v : mukai_varieties()) {
            SeqPair pair = apery_pair(v, cfg.terms);
            ApproxLimit lim = apery_limit(pair, D);
            Real oracle = mukai_constant_oracle(v, D);
            long agree = agreed_digits(lim.value, oracle);
            Check::that(agree >= 40, v + " agreement only " + std::to_string(agree) + " digits");
            detail << v << ":" << agree << "d ";
        }
        return detail.str();
    });

    h.run(3, "denominator of b_n divides 12 LCM(1..n)^3, V12, n <= 60", [&] {
        SeqPair pair = apery_pair("V12", 60);
        for (long n = 1; n <= 60; ++n)
            Check::that(denominator_bound_check(pair, n), "fails at n=" + std::to_string(n));
        return "exact through n=60";
    });

    h.run(4, "a_n^{1/n} within 1% of the larger root of x^2-34x+1 at n=500", [&] {
        SeqPair pair = apery_pair("V12", 500);
        Real an(pair.a[500], 40);
        Real root_n = an.root(500);
        Real alpha = Real(17L, 40) + Real(2L, 40).sqrt() * 12;   // 17 + 12 sqrt 2
        Real rel = ((root_n - alpha) / alpha).abs();
        Check::that(rel < Real(Rat(1, 100), 40), "relative deviation " + rel.str(3));
        return "relative deviation " + rel.str(3);
    });

    h.run(5, "Prop 3.3(i): A(t(q)) = Phi(q) exactly through q^20", [&] {
        for (const std::string& v : {"V12", "V16", "V18"}) {
            IdentityReport rep = verify_phi_identity(v, 20);
            Check::that(rep.ok, v + " mismatch at q^" +
                                    std::to_string(rep.first_mismatch ? rep.first_mismatch->power : -1));
        }
        return "V12 V16 V18 exact to q^20";
    });

    h.run(6, "Prop 3.3(ii): (B/A)(t(q)) = sum c_i q^i/i^3 through q^20", [&] {
        for (const std::string& v : {"V12", "V16", "V18"}) {
            IdentityReport rep = verify_ratio_identity(v, 20);
            Check::that(rep.ok, v + " mismatch at q^" +
                                    std::to_string(rep.first_mismatch ? rep.first_mismatch->power : -1));
        }
        return "V12 V16 V18 exact to q^20";
    });

    h.run(7, "closed-form L(F,3) equals the Apery constant to 40 digits", [&] {
        std::ostringstream detail;
        for (const std::string& v : {"V12", "V16", "V18"}) {
            Real lf = L_F_3(v, D);
            Real oracle = mukai_constant_oracle(v, D);
            long agree = agreed_digits(lf, oracle);
            Check::that(agree >= 40, v + " agreement only " + std::to_string(agree));
            detail << v << ":" << agree << "d ";
        }
        return detail.str();
    });

    std::vector<Real> grass_values;
    h.run(8, "Grassmannian Apery limit pi^2/(N^2(N+1)) to >= 20 digits, N=5,6,7", [&] {
        std::ostringstream detail;
        for (long N : {5L, 6L, 7L}) {
            ApproxLimit lim = grassmann_apery_limit(N, 34, 20);
            Real pi2 = pi_real(30);
            Real target = pi2 * pi2 / (N * N * (N + 1));
            long agree = agreed_digits(lim.value.to_digits(30), target);
            Check::that(agree >= 20,
                        "N=" + std::to_string(N) + " agreement only " + std::to_string(agree));
            grass_values.push_back(lim.value.to_digits(30));
            detail << "N" << N << ":" << agree << "d ";
        }
        return detail.str();
    });

    h.run(9, "resonance limit of the perturbed constant matches, N=5,6", [&] {
        std::ostringstream detail;
        for (size_t i = 0; i < 2; ++i) {
            long N = i == 0 ? 5 : 6;
            ApproxLimit pac = pac_limit(N, 22);
            Check::that(grass_values.size() > i, "criterion 8 did not produce values");
            long agree = agreed_digits(pac.value.to_digits(30), grass_values[i]);
            Check::that(agree >= 20,
                        "N=" + std::to_string(N) + " agreement only " + std::to_string(agree));
            detail << "N" << N << ":" << agree << "d ";
        }
        return detail.str();
    });

    h.run(10, "sine formula with reported bound <= 1e-15 by n=400", [&] {
        std::ostringstream detail;
        struct Case { long N; Rat e, u; };
        for (const Case& c : {Case{5, Rat(1, 8), Rat(1, 12)}, Case{6, Rat(1, 10), Rat(1, 14)}}) {
            ExponentSet exps = make_exponents(c.N, Real(c.e, 60), Real(c.u, 60));
            SineReport rep = sine_ratio_check(exps, 400, 16);
            Check::that(rep.ok, "N=" + std::to_string(c.N) + " outside reported error");
            Check::that(rep.limit.error_estimate <= Real(10L, 24).pow_si(-15),
                        "N=" + std::to_string(c.N) + " bound " + rep.limit.error_estimate.str(3));
            detail << "N" << c.N << ":err=" << rep.limit.error_estimate.str(2)
                   << "@n=" << rep.limit.n_used << " ";
        }
        return detail.str();
    });

    h.run(11, "integrality of a_{5n} under numerical l'Hopital, n <= 40", [&] {
        // grassmann_pair reruns the pipeline with the perturbation shrunk ten
        // orders and insists on identical integers
        SeqPair pair = grassmann_pair(5, 40, 20);
        for (long n = 0; n <= 40; ++n)
            Check::that(pair.a[static_cast<size_t>(n)].is_integer(), "non-integer a entry");
        Check::that(pair.b[0] == 0 && pair.b[1] == 1, "b normalization broken");
        return "a_{5n} integral and stable, n <= 40";
    });

    h.run(12, "monodromy layer: wedge identity and infinity eigencheck", [&] {
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<long> num(3, 40);
        long wedge_done = 0, eigen_done = 0;
        Real wedge_tol = Real(10L, 24).pow_si(-(D - 10));
        for (long N : {5L, 6L}) {
            for (int trial = 0; wedge_done < (N == 5 ? 5 : 10); ++trial) {
                Check::that(trial < 200, "could not sample admissible (e,u)");
                Rat e(num(rng), 200), u(num(rng), 200);
                if (e == u || e.is_zero() || u.is_zero()) continue;
                if ((e - u).abs() < Rat(1, 100)) continue;
                // keep N e, N u, and their sums/differences away from integers
                auto near_half_int = [&](const Rat& x) {
                    Rat t = Rat(N) * x * 2;  // resonance when this is near an integer
                    Rat fr = t - Rat(t.num().divexact(t.den()));
                    Rat d0 = fr.abs();
                    Rat d1 = (Rat(1) - fr).abs();
                    return d0 < Rat(1, 25) || d1 < Rat(1, 25);
                };
                if (near_half_int(e) || near_half_int(u) || near_half_int((e + u) / Rat(2)) ||
                    near_half_int((e - u) / Rat(2)))
                    continue;
                HypFrame frame = standard_frame(N, Real(e, D + 25), Real(u, D + 25), D);
                WedgeReport wr = wedge_coefficient_identity(frame, Real(e, D + 25), Real(u, D + 25), D);
                Check::that(wr.ok && wr.ratio_residual < wedge_tol && wr.vanish_residual < wedge_tol,
                            "wedge residual too large at N=" + std::to_string(N) + " e=" + e.str() +
                                " u=" + u.str());
                ++wedge_done;
                EigenReport er = infinity_monodromy_eigencheck(frame, D);
                Check::that(er.ok, "no ordering for N=" + std::to_string(N) + " e=" + e.str() +
                                       " u=" + u.str());
                ++eigen_done;
            }
        }
        return std::to_string(wedge_done) + " wedge + " + std::to_string(eigen_done) +
               " eigen checks passed";
    });

    h.run(13, "quantum Lefschetz: V10/G(2,5) and V14/G(2,6)", [&] {
        std::ostringstream detail;
        for (const std::string& v : {"V10", "V14"}) {
            LefschetzReport rep = lefschetz_crosscheck(v, 20, std::min(D, 50L));
            Check::that(rep.ok, v + ": kappa_a stable to n=" + std::to_string(rep.kappa_a_stable_n) +
                                    ", kappa_b digits=" + std::to_string(rep.kappa_b_agreed_digits) +
                                    ", ratio=" + rep.constant_ratio.str(25));
            detail << v << ":ratio=" << rep.constant_ratio.str(6) << " kappa_a=" << rep.kappa_a.str()
                   << " ";
        }
        return detail.str();
    });

    return h.results;
}

} // namespace aperylab
